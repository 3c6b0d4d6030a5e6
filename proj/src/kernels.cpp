#include "g24/kernels.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace g24::kernels {
namespace {

void record(PairHistogram& h, bool edge, long value, int i, int j) {
    Tally& t = (edge ? h.on_edges : h.on_nonedges)[value];
    if (t.count == 0) t.first = {i, j};
    ++t.count;
}

void merge_into(std::map<long, Tally>& dst, const std::map<long, Tally>& src) {
    for (const auto& [value, tally] : src) {
        Tally& t = dst[value];
        if (t.count == 0 || tally.first < t.first) t.first = tally.first;
        t.count += tally.count;
    }
}

template <class PairValue>
PairHistogram scan_pairs(const Graph& g, PairValue value, Exec exec) {
    const int n = g.size();
    PairHistogram result;
    if (exec == Exec::serial) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) record(result, g.adjacent(i, j), value(i, j), i, j);
        return result;
    }
#pragma omp parallel
    {
        PairHistogram local;
#pragma omp for schedule(dynamic, 8) nowait
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) record(local, g.adjacent(i, j), value(i, j), i, j);
#pragma omp critical(g24_pair_merge)
        {
            merge_into(result.on_edges, local.on_edges);
            merge_into(result.on_nonedges, local.on_nonedges);
        }
    }
    return result;
}

bool any(std::span<const Word> s) {
    return std::any_of(s.begin(), s.end(), [](Word w) { return w != 0; });
}

int lowest(std::span<const Word> s) {
    for (std::size_t w = 0; w < s.size(); ++w)
        if (s[w]) return static_cast<int>(w * 64) + std::countr_zero(s[w]);
    return -1;
}

void clear_bit(std::span<Word> s, int v) { s[static_cast<std::size_t>(v / 64)] &= ~(Word{1} << (v % 64)); }

class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g) : g_(g) {}

    std::vector<int> run(std::span<const Word> candidates) {
        current_.clear();
        best_.clear();
        if (any(candidates)) expand(std::vector<Word>(candidates.begin(), candidates.end()));
        std::sort(best_.begin(), best_.end());
        return best_;
    }
    long nodes() const { return nodes_; }

private:
    void expand(std::vector<Word> pool) {
        ++nodes_;
        // Greedy colouring in ascending vertex order: colour classes are
        // independent sets, so a vertex of colour c bounds the clique by c.
        std::vector<int> order;
        std::vector<int> colour;
        std::vector<Word> uncoloured = pool;
        std::vector<Word> cls(pool.size());
        int c = 0;
        while (any(uncoloured)) {
            ++c;
            cls = uncoloured;
            while (any(cls)) {
                const int v = lowest(cls);
                clear_bit(cls, v);
                clear_bit(uncoloured, v);
                const auto nb = g_.row(v);
                for (std::size_t w = 0; w < cls.size(); ++w) cls[w] &= ~nb[w];
                order.push_back(v);
                colour.push_back(c);
            }
        }

        std::vector<Word> next(pool.size());
        for (std::size_t idx = order.size(); idx-- > 0;) {
            if (current_.size() + static_cast<std::size_t>(colour[idx]) <= best_.size()) return;
            const int v = order[idx];
            current_.push_back(v);
            const auto nb = g_.row(v);
            for (std::size_t w = 0; w < pool.size(); ++w) next[w] = pool[w] & nb[w];
            if (any(next))
                expand(next);
            else if (current_.size() > best_.size())
                best_ = current_;
            current_.pop_back();
            clear_bit(pool, v);
        }
    }

    const Graph& g_;
    std::vector<int> current_;
    std::vector<int> best_;
    long nodes_ = 0;
};

}  // namespace

PairHistogram common_neighbor_histogram(const Graph& g, Exec exec) {
    return scan_pairs(g, [&](int i, int j) { return static_cast<long>(g.common_neighbors(i, j)); }, exec);
}

PairHistogram distance_histogram(const Graph& g, const ReprMatrix& y, Exec exec) {
    return scan_pairs(g, [&](int i, int j) { return pair_distance_sq(y, i, j); }, exec);
}

std::optional<Mismatch> first_identity_mismatch(const Graph& g, const SrgParams& p, Exec exec) {
    const int n = g.size();
    auto expected = [&](int i, int j) -> long {
        if (i == j) return p.k;
        return g.adjacent(i, j) ? p.lambda : p.mu;
    };
    // Row-major linear index of the first mismatch in row i, or "none".
    constexpr long kNone = std::numeric_limits<long>::max();
    auto first_in_row = [&](int i) -> long {
        for (int j = 0; j < n; ++j)
            if (g.common_neighbors(i, j) != expected(i, j)) return static_cast<long>(i) * n + j;
        return kNone;
    };

    long first = kNone;
    if (exec == Exec::serial) {
        for (int i = 0; i < n && first == kNone; ++i) first = first_in_row(i);
    } else {
#pragma omp parallel for schedule(static) reduction(min : first)
        for (int i = 0; i < n; ++i) first = std::min(first, first_in_row(i));
    }
    if (first == kNone) return std::nullopt;
    const int i = static_cast<int>(first / n);
    const int j = static_cast<int>(first % n);
    return Mismatch{i, j, expected(i, j), g.common_neighbors(i, j)};
}

std::vector<int> max_clique_within(const Graph& g, std::span<const Word> candidates, long* nodes) {
    CliqueSearch search(g);
    auto best = search.run(candidates);
    if (nodes) *nodes += search.nodes();
    return best;
}

EdgeCliqueScan per_edge_max_clique(const Graph& g, Exec exec) {
    const auto edges = g.edges();
    const auto m = static_cast<long>(edges.size());
    std::vector<std::vector<int>> inner(edges.size());
    std::vector<long> nodes(edges.size(), 0);

    auto solve = [&](long e) {
        const auto [u, v] = edges[static_cast<std::size_t>(e)];
        std::vector<Word> common(static_cast<std::size_t>(g.words()));
        const auto ru = g.row(u);
        const auto rv = g.row(v);
        for (std::size_t w = 0; w < common.size(); ++w) common[w] = ru[w] & rv[w];
        inner[static_cast<std::size_t>(e)] = max_clique_within(g, common, &nodes[static_cast<std::size_t>(e)]);
    };

    if (exec == Exec::serial) {
        for (long e = 0; e < m; ++e) solve(e);
    } else {
#pragma omp parallel for schedule(dynamic, 64)
        for (long e = 0; e < m; ++e) solve(e);
    }

    EdgeCliqueScan scan;
    scan.edges_searched = m;
    for (long e = 0; e < m; ++e) {
        const auto idx = static_cast<std::size_t>(e);
        const int size = 2 + static_cast<int>(inner[idx].size());
        scan.nodes += nodes[idx];
        ++scan.per_edge_size[size];
        if (size > scan.clique_number) {
            scan.clique_number = size;
            scan.witness_edge = edges[idx];
            scan.witness = inner[idx];
            scan.witness.push_back(edges[idx].first);
            scan.witness.push_back(edges[idx].second);
            std::sort(scan.witness.begin(), scan.witness.end());
        }
    }
    if (m == 0 && g.size() > 0) {
        scan.clique_number = 1;
        scan.witness = {0};
    }
    return scan;
}

}  // namespace g24::kernels
