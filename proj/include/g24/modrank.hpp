#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "g24/check.hpp"

namespace g24 {

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::int64_t& operator()(int r, int c) { return data_[index(r, c)]; }
    std::int64_t operator()(int r, int c) const { return data_[index(r, c)]; }
    std::span<const std::int64_t> row(int r) const { return {data_.data() + index(r, 0), static_cast<std::size_t>(cols_)}; }

    static IntMatrix identity(int n);

private:
    std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c); }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::int64_t> data_;
};

inline constexpr std::uint64_t kDefaultPrimeA = 2147483647;  // 2^31 - 1
inline constexpr std::uint64_t kDefaultPrimeB = 2147483629;  // 2^31 - 19

/// Trial division; adequate for the word-size moduli used here.
bool is_prime(std::uint64_t n);

/// Rank over GF(prime) by Gaussian elimination, pivoting on the first nonzero
/// entry in column order. Requires 2 < prime < 2^32 (throws std::domain_error).
int rank_mod_prime(const IntMatrix& m, std::uint64_t prime, Exec exec = Exec::parallel);

}  // namespace g24
