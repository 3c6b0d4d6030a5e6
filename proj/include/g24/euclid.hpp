#pragma once

// Euclidean representation y = A - sI of the graph (s = -4, so y = A + 4I),
// the contrast vectors p and q, and the certified affine dimensions of
// {y_i : i in V}, {y_i : i in C ∪ B1} and {y_i : i in C}.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "g24/check.hpp"
#include "g24/graph.hpp"
#include "g24/modrank.hpp"

namespace g24 {

/// Symmetric integer matrix y with y_ii = shift and y_ij = 1 on edges.
/// Column i is the point vector y_i.
class ReprMatrix {
public:
    ReprMatrix(const Graph& g, int diagonal);

    int size() const { return n_; }
    int diagonal() const { return diagonal_; }
    int operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)]; }
    /// Column i; equal to row i by symmetry.
    std::span<const std::int32_t> column(int i) const {
        return {entries_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(n_), static_cast<std::size_t>(n_)};
    }

private:
    int n_ = 0;
    int diagonal_ = 0;
    std::vector<std::int32_t> entries_;
};

/// y = A + 4I.
ReprMatrix build_representation(const Graph& g);

/// ||y_i - y_j||^2 by exact summation. Throws std::domain_error when i == j.
long pair_distance_sq(const ReprMatrix& y, int i, int j);

struct ContrastVector {
    enum class Role { p, q };
    Role role = Role::p;
    std::vector<std::int64_t> entries;
};

long dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b);
long dot(std::span<const std::int64_t> a, std::span<const std::int32_t> b);

/// p: +1 on B2, -1 on B3. q: +2 on B1, -1 on B2 ∪ B3. Zero elsewhere.
std::pair<ContrastVector, ContrastVector> build_contrasts(const Partition& part);

/// Expected <p, y_i> and <q, y_i> for i in B1, B2, B3, C.
inline constexpr std::array<long, 4> kExpectedP{0, 24, -24, 0};
inline constexpr std::array<long, 4> kExpectedQ{48, -24, -24, 0};

CheckResult verify_inner_products(const ReprMatrix& y, const ContrastVector& p, const ContrastVector& q,
                                  const Partition& part);

/// Rows are y_i - y_base for i in `set` \ {base}.
IntMatrix difference_matrix(const ReprMatrix& y, std::span<const int> set, int base);
/// Rows are y_i for i in `set`.
IntMatrix column_matrix(const ReprMatrix& y, std::span<const int> set);

struct PrimeRank {
    std::uint64_t prime = 0;
    int difference_rank = 0;
    int column_rank = 0;
};

struct DimensionCertificate {
    std::string set;          // "V", "C∪B1" or "C"
    int points = 0;
    int expected_dim = 0;
    int lower_bound = 0;      // max difference rank over primes
    int upper_bound = 0;      // affine bound from spectrum and orthogonal witnesses
    int linear_rank = 0;      // max column rank over primes
    std::vector<PrimeRank> ranks;
    bool base_point_checked = false;
    std::vector<std::string> upper_bound_argument;

    enum class Status { certified, inconclusive, failed };
    Status status = Status::failed;
    std::string detail;
};

std::string to_string(DimensionCertificate::Status s);

/// Certifies affine dimensions 65, 64, 63 for V, C ∪ B1, C.
/// Preconditions: the SRG identity and the inner-product pattern are verified.
std::vector<DimensionCertificate> certified_dimension_chain(const ReprMatrix& y, const ContrastVector& p,
                                                           const ContrastVector& q, const Partition& part,
                                                           const Spectrum& spectrum,
                                                           std::span<const std::uint64_t> primes,
                                                           Exec exec = Exec::parallel);

}  // namespace g24
