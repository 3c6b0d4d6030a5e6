#include "g24/modrank.hpp"

#include <stdexcept>
#include <utility>

namespace g24 {
namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    base %= p;
    while (e) {
        if (e & 1u) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t reduce(std::int64_t x, std::uint64_t p) {
    const auto sp = static_cast<std::int64_t>(p);
    std::int64_t r = x % sp;
    return static_cast<std::uint64_t>(r < 0 ? r + sp : r);
}

// row[c..] -= factor * pivot[c..]  (mod p)
void eliminate(std::uint64_t* row, const std::uint64_t* pivot, std::uint64_t factor, int from, int cols,
               std::uint64_t p) {
    const std::uint64_t neg = (p - factor) % p;
    for (int c = from; c < cols; ++c) row[c] = (row[c] + neg * pivot[c]) % p;
}

}  // namespace

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

int rank_mod_prime(const IntMatrix& m, std::uint64_t prime, Exec exec) {
    if (prime <= 2 || prime >= (std::uint64_t{1} << 32) || !is_prime(prime))
        throw std::domain_error("rank_mod_prime: modulus must be an odd prime below 2^32");

    const int rows = m.rows();
    const int cols = m.cols();
    std::vector<std::uint64_t> a(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)] = reduce(m(r, c), prime);
    auto row_ptr = [&](int r) { return a.data() + static_cast<std::size_t>(r) * static_cast<std::size_t>(cols); };

    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (row_ptr(r)[col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = col; c < cols; ++c) std::swap(row_ptr(pivot)[c], row_ptr(rank)[c]);

        std::uint64_t* prow = row_ptr(rank);
        const std::uint64_t scale = pow_mod(prow[col], prime - 2, prime);
        for (int c = col; c < cols; ++c) prow[c] = prow[c] * scale % prime;

        if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
            for (int r = rank + 1; r < rows; ++r) {
                std::uint64_t* target = row_ptr(r);
                if (target[col] != 0) eliminate(target, prow, target[col], col, cols, prime);
            }
        } else {
            for (int r = rank + 1; r < rows; ++r) {
                std::uint64_t* target = row_ptr(r);
                if (target[col] != 0) eliminate(target, prow, target[col], col, cols, prime);
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace g24
