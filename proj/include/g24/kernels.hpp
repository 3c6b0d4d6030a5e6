#pragma once

// Data-parallel scans over vertex pairs and edges. Every kernel has a serial
// reference path and an OpenMP path selected by Exec; results are merged
// deterministically so both paths return identical values for any thread count.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "g24/check.hpp"
#include "g24/euclid.hpp"
#include "g24/graph.hpp"

namespace g24::kernels {

struct Tally {
    long count = 0;
    std::pair<int, int> first{-1, -1};  // lexicographically smallest pair with this value
};

/// Values of some pair statistic over all i < j, split by adjacency.
struct PairHistogram {
    std::map<long, Tally> on_edges;
    std::map<long, Tally> on_nonedges;
};

/// |N(i) ∩ N(j)| for all pairs.
PairHistogram common_neighbor_histogram(const Graph& g, Exec exec);

/// ||y_i - y_j||^2 for all pairs, by integer summation over the columns of y.
PairHistogram distance_histogram(const Graph& g, const ReprMatrix& y, Exec exec);

struct Mismatch {
    int i = 0, j = 0;
    long expected = 0, actual = 0;
};

/// First (i,j) in row-major order where (A^2)_ij differs from
/// k, lambda or mu (diagonal, edge, non-edge).
std::optional<Mismatch> first_identity_mismatch(const Graph& g, const SrgParams& p, Exec exec);

struct EdgeCliqueScan {
    int clique_number = 0;
    std::vector<int> witness;          // ascending
    std::pair<int, int> witness_edge{-1, -1};
    long edges_searched = 0;
    long nodes = 0;                    // branch-and-bound calls summed over edges
    std::map<int, long> per_edge_size; // largest clique containing the edge -> edge count
};

/// For every edge {u,v}, the largest clique containing it, found by
/// branch and bound with greedy-colouring bounds inside N(u) ∩ N(v).
EdgeCliqueScan per_edge_max_clique(const Graph& g, Exec exec);

/// Largest clique inside `candidates` (bit-packed, width g.words()),
/// with deterministic branching. Adds visited nodes to *nodes.
std::vector<int> max_clique_within(const Graph& g, std::span<const Word> candidates, long* nodes);

}  // namespace g24::kernels
