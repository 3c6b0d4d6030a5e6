#pragma once

// Algorithm X over a dancing-links matrix. Branching always picks the column
// with the fewest live rows (ties: lowest column index) and tries rows in
// ascending row index, so the search order is fully determined by the input.

#include <optional>
#include <span>
#include <vector>

namespace g24 {

class ExactCover {
public:
    /// Each row lists the columns (0..columns-1) it covers.
    ExactCover(int columns, const std::vector<std::vector<int>>& rows);

    /// First solution in search order, as ascending row indices.
    std::optional<std::vector<int>> first_solution();

    struct Count {
        long solutions = 0;
        long nodes = 0;
        bool complete = true;          // false when the node budget ran out
        std::vector<int> first;        // first solution found, ascending
    };

    /// Enumerates every solution that avoids `excluded` rows, stopping after
    /// `node_budget` search nodes (<= 0 means unlimited).
    Count count(long node_budget = 0, std::span<const int> excluded = {});

private:
    struct Node {
        int left, right, up, down, column, row;
    };

    void cover(int c);
    void uncover(int c);
    bool search(bool stop_at_first, long budget, Count& out, std::vector<int>& partial);
    void remove_row(int row);
    void restore_row(int row);

    int columns_;
    std::vector<Node> nodes_;
    std::vector<int> size_;
    std::vector<int> row_head_;   // first node of each row, -1 for empty rows
};

}  // namespace g24
