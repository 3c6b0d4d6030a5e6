#pragma once

// The G2(4) graph on the 416 orthogonal bases, its strongly regular
// parameters and spectrum, and the B/C split around one isotropic point.

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "g24/check.hpp"
#include "g24/geometry.hpp"

namespace g24 {

using Word = std::uint64_t;

inline int popcount_and(std::span<const Word> a, std::span<const Word> b) {
    int c = 0;
    for (std::size_t w = 0; w < a.size(); ++w) c += std::popcount(a[w] & b[w]);
    return c;
}

/// Simple undirected graph with one bit-packed neighbour row per vertex.
class Graph {
public:
    explicit Graph(int n);

    int size() const { return n_; }
    int words() const { return words_; }
    std::span<const Word> row(int i) const {
        return {rows_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(words_),
                static_cast<std::size_t>(words_)};
    }

    bool adjacent(int i, int j) const {
        return (row(i)[static_cast<std::size_t>(j / 64)] >> (j % 64)) & 1u;
    }
    void add_edge(int i, int j);
    /// Toggles edge {i,j}; used for fault injection.
    void flip_edge(int i, int j);

    int degree(int i) const;
    long edge_count() const;
    int common_neighbors(int i, int j) const { return popcount_and(row(i), row(j)); }
    std::vector<int> neighbors(int i) const;
    /// (i,j) pairs with i < j, lexicographic.
    std::vector<std::pair<int, int>> edges() const;

    /// Induced subgraph; vertex t of the result is vertices[t].
    Graph induced(std::span<const int> vertices) const;

private:
    Word* mutable_row(int i) { return rows_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(words_); }
    void toggle_bit(int i, int j) { mutable_row(i)[j / 64] ^= Word{1} << (j % 64); }

    int n_ = 0;
    int words_ = 0;
    std::vector<Word> rows_;
};

inline constexpr int kVertexCount = 416;
inline constexpr int kIsoSetSize = 15;
inline constexpr int kAdjacentIntersection = 3;

/// Edge {i,j} iff the iso-sets share exactly three points.
/// Throws std::invalid_argument unless there are 416 iso-sets of size 15.
Graph build_graph(std::span<const IsoSet> isosets);

/// Histogram of |isoset_i ∩ isoset_j| over all unordered pairs, indexed by size.
std::vector<long> intersection_distribution(std::span<const IsoSet> isosets);

struct SrgParams {
    int v = 0, k = 0, lambda = 0, mu = 0;

    /// k(k - lambda - 1) = (v - k - 1) mu
    bool feasible() const { return k * (k - lambda - 1) == (v - k - 1) * mu; }
    friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

inline constexpr SrgParams kG24Params{416, 100, 36, 20};

/// Confirms constant degree, constant lambda over edges and constant mu over
/// non-edges. Throws VerificationFailure naming the first offending vertex or pair.
SrgParams verify_srg(const Graph& g, Exec exec = Exec::parallel);

/// Checks A^2 = kI + lambda A + mu (J - I - A) entry by entry in integers.
CheckResult verify_srg_identity(const Graph& g, const SrgParams& p, Exec exec = Exec::parallel);

/// Exact rational num/den with den > 0 and gcd 1.
struct Rational {
    long num = 0;
    long den = 1;
    friend bool operator==(const Rational&, const Rational&) = default;
};
std::string to_string(const Rational& r);

struct Spectrum {
    long degree = 0;       // eigenvalue k, multiplicity 1
    Rational r;            // positive eigenvalue
    long f = 0;            // multiplicity of r
    Rational s;            // negative eigenvalue
    long g_mult = 0;       // multiplicity of s
};

/// Evaluates the eigenvalue and multiplicity closed forms exactly.
/// Throws std::domain_error when the discriminant (lambda-mu)^2 + 4(k-mu)
/// is not a perfect square or the multiplicity is not integral.
Spectrum srg_spectrum(const SrgParams& p);

struct Partition {
    int anchor = 1;  // isotropic number defining B
    std::vector<int> b1, b2, b3, c;
    /// 0 for C, otherwise h in {1,2,3}.
    std::vector<int> label;

    std::vector<int> b_union() const;
    const std::vector<int>& component(int h) const;
};

/// Connected components of an induced subgraph, each ascending, ordered by
/// smallest member.
std::vector<std::vector<int>> components(const Graph& g, std::span<const int> vertices);

/// B = vertices whose iso-set contains `anchor`; B1, B2, B3 are the components
/// of B ordered by smallest member. Throws VerificationFailure unless there are
/// exactly three components of 32 vertices.
Partition split_b_c(const Graph& g, std::span<const IsoSet> isosets, int anchor = 1);

/// |N(i) ∩ B_h| = 20 if i ∈ B_h, 0 if i ∈ B \ B_h, 8 if i ∈ C, for every i and h.
CheckResult verify_claim1(const Graph& g, const Partition& part);

/// Counts |N(i) ∩ B_h| for h = 1, 2, 3.
std::array<int, 3> component_counts(const Graph& g, const Partition& part, int i);

struct StructureReport {
    CheckResult regularity;
    bool isomorphism_checked = false;
    std::array<bool, 3> isomorphic{};
    std::array<long, 3> search_nodes{};
};

/// Each B_h must be 20-regular on 32 vertices with no edges between components.
/// With `with_isomorphism`, also matches each B_h against the 2-coclique
/// extension of the halved 5-cube.
StructureReport check_component_structure(const Graph& g, const Partition& part, bool with_isomorphism);

/// The halved 5-cube: even-weight words of length 5, adjacent at Hamming distance 2.
Graph halved_five_cube();

/// Each vertex v becomes 2v and 2v+1, a non-adjacent pair; copies of adjacent
/// vertices are adjacent.
Graph coclique_extension(const Graph& g);

/// Backtracking isomorphism test. Returns the mapping a -> b when found.
/// `nodes` receives the number of search nodes visited.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b, long* nodes = nullptr);

}  // namespace g24
