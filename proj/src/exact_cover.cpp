#include "g24/exact_cover.hpp"

#include <algorithm>
#include <stdexcept>

namespace g24 {

ExactCover::ExactCover(int columns, const std::vector<std::vector<int>>& rows)
    : columns_(columns), size_(static_cast<std::size_t>(columns) + 1, 0), row_head_(rows.size(), -1) {
    if (columns < 0) throw std::invalid_argument("ExactCover: negative column count");
    // Node 0 is the root, nodes 1..columns are the column headers.
    nodes_.reserve(static_cast<std::size_t>(columns) + 1);
    for (int c = 0; c <= columns; ++c)
        nodes_.push_back({c == 0 ? columns : c - 1, c == columns ? 0 : c + 1, c, c, c, -1});

    for (std::size_t r = 0; r < rows.size(); ++r) {
        int first = -1;
        for (int col : rows[r]) {
            if (col < 0 || col >= columns) throw std::out_of_range("ExactCover: column index out of range");
            const int c = col + 1;
            const int id = static_cast<int>(nodes_.size());
            Node n{id, id, nodes_[static_cast<std::size_t>(c)].up, c, c, static_cast<int>(r)};
            if (first >= 0) {
                n.left = nodes_[static_cast<std::size_t>(first)].left;
                n.right = first;
            }
            nodes_.push_back(n);
            nodes_[static_cast<std::size_t>(n.up)].down = id;
            nodes_[static_cast<std::size_t>(c)].up = id;
            if (first >= 0) {
                nodes_[static_cast<std::size_t>(n.left)].right = id;
                nodes_[static_cast<std::size_t>(first)].left = id;
            } else {
                first = id;
            }
            ++size_[static_cast<std::size_t>(c)];
        }
        row_head_[r] = first;
    }
}

void ExactCover::cover(int c) {
    auto& nd = nodes_;
    nd[static_cast<std::size_t>(nd[static_cast<std::size_t>(c)].right)].left = nd[static_cast<std::size_t>(c)].left;
    nd[static_cast<std::size_t>(nd[static_cast<std::size_t>(c)].left)].right = nd[static_cast<std::size_t>(c)].right;
    for (int i = nd[static_cast<std::size_t>(c)].down; i != c; i = nd[static_cast<std::size_t>(i)].down)
        for (int j = nd[static_cast<std::size_t>(i)].right; j != i; j = nd[static_cast<std::size_t>(j)].right) {
            const Node& n = nd[static_cast<std::size_t>(j)];
            nd[static_cast<std::size_t>(n.down)].up = n.up;
            nd[static_cast<std::size_t>(n.up)].down = n.down;
            --size_[static_cast<std::size_t>(n.column)];
        }
}

void ExactCover::uncover(int c) {
    auto& nd = nodes_;
    for (int i = nd[static_cast<std::size_t>(c)].up; i != c; i = nd[static_cast<std::size_t>(i)].up)
        for (int j = nd[static_cast<std::size_t>(i)].left; j != i; j = nd[static_cast<std::size_t>(j)].left) {
            const Node& n = nd[static_cast<std::size_t>(j)];
            ++size_[static_cast<std::size_t>(n.column)];
            nd[static_cast<std::size_t>(n.down)].up = j;
            nd[static_cast<std::size_t>(n.up)].down = j;
        }
    nd[static_cast<std::size_t>(nd[static_cast<std::size_t>(c)].right)].left = c;
    nd[static_cast<std::size_t>(nd[static_cast<std::size_t>(c)].left)].right = c;
}

void ExactCover::remove_row(int row) {
    const int head = row_head_.at(static_cast<std::size_t>(row));
    if (head < 0) return;
    int j = head;
    do {
        const Node& n = nodes_[static_cast<std::size_t>(j)];
        nodes_[static_cast<std::size_t>(n.down)].up = n.up;
        nodes_[static_cast<std::size_t>(n.up)].down = n.down;
        --size_[static_cast<std::size_t>(n.column)];
        j = n.right;
    } while (j != head);
}

void ExactCover::restore_row(int row) {
    const int head = row_head_.at(static_cast<std::size_t>(row));
    if (head < 0) return;
    int j = nodes_[static_cast<std::size_t>(head)].left;
    while (true) {
        const Node& n = nodes_[static_cast<std::size_t>(j)];
        ++size_[static_cast<std::size_t>(n.column)];
        nodes_[static_cast<std::size_t>(n.down)].up = j;
        nodes_[static_cast<std::size_t>(n.up)].down = j;
        if (j == head) break;
        j = n.left;
    }
}

bool ExactCover::search(bool stop_at_first, long budget, Count& out, std::vector<int>& partial) {
    ++out.nodes;
    if (budget > 0 && out.nodes > budget) {
        out.complete = false;
        return true;
    }
    if (nodes_[0].right == 0) {
        ++out.solutions;
        if (out.first.empty()) {
            out.first = partial;
            std::sort(out.first.begin(), out.first.end());
        }
        return stop_at_first;
    }

    int best = -1;
    for (int c = nodes_[0].right; c != 0; c = nodes_[static_cast<std::size_t>(c)].right)
        if (best < 0 || size_[static_cast<std::size_t>(c)] < size_[static_cast<std::size_t>(best)]) best = c;
    if (size_[static_cast<std::size_t>(best)] == 0) return false;

    cover(best);
    for (int r = nodes_[static_cast<std::size_t>(best)].down; r != best; r = nodes_[static_cast<std::size_t>(r)].down) {
        partial.push_back(nodes_[static_cast<std::size_t>(r)].row);
        for (int j = nodes_[static_cast<std::size_t>(r)].right; j != r; j = nodes_[static_cast<std::size_t>(j)].right)
            cover(nodes_[static_cast<std::size_t>(j)].column);
        const bool stop = search(stop_at_first, budget, out, partial);
        for (int j = nodes_[static_cast<std::size_t>(r)].left; j != r; j = nodes_[static_cast<std::size_t>(j)].left)
            uncover(nodes_[static_cast<std::size_t>(j)].column);
        partial.pop_back();
        if (stop) {
            uncover(best);
            return true;
        }
    }
    uncover(best);
    return false;
}

std::optional<std::vector<int>> ExactCover::first_solution() {
    Count out;
    std::vector<int> partial;
    search(true, 0, out, partial);
    if (out.solutions == 0) return std::nullopt;
    return out.first;
}

ExactCover::Count ExactCover::count(long node_budget, std::span<const int> excluded) {
    std::vector<int> removed(excluded.begin(), excluded.end());
    std::sort(removed.begin(), removed.end());
    removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
    for (int r : removed) remove_row(r);

    Count out;
    std::vector<int> partial;
    search(false, node_budget, out, partial);

    for (auto it = removed.rbegin(); it != removed.rend(); ++it) restore_row(*it);
    return out;
}

}  // namespace g24
