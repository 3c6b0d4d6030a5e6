#include "doctest.h"

#include <random>

#include "g24/exact_cover.hpp"

using namespace g24;

namespace {

using Rows = std::vector<std::vector<int>>;

// Number of exact covers by enumerating every subset of rows.
long brute_count(int columns, const Rows& rows) {
    long count = 0;
    const unsigned n = static_cast<unsigned>(rows.size());
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> hits(static_cast<std::size_t>(columns), 0);
        for (unsigned r = 0; r < n; ++r)
            if (mask >> r & 1)
                for (int c : rows[r]) ++hits[static_cast<std::size_t>(c)];
        count += std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
    }
    return count;
}

}  // namespace

TEST_CASE("Knuth's example has the single solution {0, 3, 4}") {
    // Columns a..g = 0..6.
    const Rows rows{{2, 4, 5}, {0, 3, 6}, {1, 2, 5}, {0, 3}, {1, 6}, {3, 4, 6}};
    ExactCover dlx(7, rows);
    const auto first = dlx.first_solution();
    REQUIRE(first.has_value());
    CHECK(*first == std::vector<int>{0, 3, 4});
    const auto c = dlx.count();
    CHECK(c.solutions == 1);
    CHECK(c.complete);
    CHECK(c.first == std::vector<int>{0, 3, 4});

    const std::vector<int> excluded{3};
    CHECK(dlx.count(0, excluded).solutions == 0);
    // The matrix is restored after an excluded run.
    CHECK(dlx.count().solutions == 1);
}

TEST_CASE("trivial and infeasible instances") {
    ExactCover none(3, Rows{{0, 1}, {1, 2}});
    CHECK_FALSE(none.first_solution().has_value());
    CHECK(none.count().solutions == 0);

    ExactCover two(2, Rows{{0}, {1}, {0, 1}});
    CHECK(two.count().solutions == 2);
}

TEST_CASE("node budget stops the count") {
    Rows rows;
    for (int c = 0; c < 12; ++c) rows.push_back({c});
    for (int c = 0; c + 1 < 12; c += 2) rows.push_back({c, c + 1});
    ExactCover dlx(12, rows);
    const auto full = dlx.count();
    CHECK(full.solutions == 64);
    const auto cut = dlx.count(5);
    CHECK_FALSE(cut.complete);
    CHECK(cut.solutions < full.solutions);
}

TEST_CASE("solution counts agree with subset enumeration") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const int columns = 3 + trial % 6;
        const int nrows = 4 + trial % 9;
        std::bernoulli_distribution take(0.35);
        Rows rows;
        for (int r = 0; r < nrows; ++r) {
            std::vector<int> row;
            for (int c = 0; c < columns; ++c)
                if (take(rng)) row.push_back(c);
            if (row.empty()) row.push_back(static_cast<int>(rng() % static_cast<unsigned>(columns)));
            rows.push_back(row);
        }
        ExactCover dlx(columns, rows);
        const auto c = dlx.count();
        CAPTURE(trial);
        CHECK(c.solutions == brute_count(columns, rows));
        CHECK(dlx.first_solution().has_value() == (c.solutions > 0));
    }
}
