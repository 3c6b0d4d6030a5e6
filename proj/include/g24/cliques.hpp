#pragma once

// Clique number, the special 5-cliques of C (five iso-sets sharing a common
// 3-point core), the exact cover of C by them, and the Borsuk part counts.

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "g24/check.hpp"
#include "g24/euclid.hpp"
#include "g24/graph.hpp"

namespace g24 {

struct CliqueWitness {
    std::vector<int> vertices;  // ascending
    bool verified = false;      // every pair re-tested against the adjacency rows
};

bool is_clique(const Graph& g, std::span<const int> vertices);

struct MaxCliqueResult {
    int size = 0;
    CliqueWitness witness;
    long edges_searched = 0;
    long nodes = 0;
    bool complete = false;                // every edge's neighbourhood search finished
    std::map<int, long> per_edge_size;    // largest clique through an edge -> number of edges
};

/// Exact clique number: for each edge, branch and bound inside the common
/// neighbourhood of its endpoints.
MaxCliqueResult max_clique(const Graph& g, Exec exec = Exec::parallel);

struct SpecialClique {
    std::array<int, 5> vertices{};  // ascending, all in C
    std::array<int, 3> core{};      // ascending isotropic numbers

    friend bool operator==(const SpecialClique&, const SpecialClique&) = default;
    friend auto operator<=>(const SpecialClique& a, const SpecialClique& b) {
        if (auto c = a.core <=> b.core; c != 0) return c;
        return a.vertices <=> b.vertices;
    }
};

/// All 5-cliques inside C whose iso-sets have a common 3-element intersection,
/// ordered by core then vertices.
std::vector<SpecialClique> enumerate_special_cliques(const Graph& g, std::span<const IsoSet> isosets,
                                                     const Partition& part);

struct CoverResult {
    std::vector<SpecialClique> cliques;
    std::vector<int> rows;      // indices into the candidate list, ascending
    std::vector<int> covered;   // ascending
};

/// First exact cover of `universe` by candidates in deterministic search order.
/// Throws VerificationFailure when none exists.
CoverResult exact_cover_partition(std::span<const SpecialClique> candidates, std::span<const int> universe);

struct CoverCount {
    long count = 0;
    long nodes = 0;
    bool complete = true;
    std::vector<int> first_rows;
};

/// Counts every exact cover of `universe` by candidates, skipping the
/// `excluded` candidate rows. A budget <= 0 is unlimited.
CoverCount verify_cover_unique(std::span<const SpecialClique> candidates, std::span<const int> universe,
                               long node_budget = 0, std::span<const int> excluded = {});

/// ceil(n_points / max_part_size); throws std::domain_error for max_part_size < 1.
long borsuk_lower_bound(long n_points, long max_part_size);

struct Verdict {
    bool issued = false;
    int dimension = 0;
    long points = 0;
    long required_parts = 0;
    std::string statement;
    std::vector<std::string> notes;
    std::string withheld_reason;
};

struct VerdictInputs {
    const std::vector<DimensionCertificate>* dimensions = nullptr;
    const MaxCliqueResult* clique = nullptr;
    long c_points = 0;
    long b1_points = 0;
    const CoverResult* cover = nullptr;  // optional near-miss evidence
};

Verdict final_verdict(const VerdictInputs& in);

}  // namespace g24
