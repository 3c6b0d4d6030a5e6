#include "doctest.h"

#include <bit>
#include <random>

#include "g24/euclid.hpp"
#include "g24/kernels.hpp"
#include "world.hpp"

using namespace g24;
using g24::testing::world;

namespace {

Graph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution edge(p);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (edge(rng)) g.add_edge(i, j);
    return g;
}

bool same(const std::map<long, kernels::Tally>& a, const std::map<long, kernels::Tally>& b) {
    if (a.size() != b.size()) return false;
    for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib)
        if (ia->first != ib->first || ia->second.count != ib->second.count || ia->second.first != ib->second.first)
            return false;
    return true;
}

int brute_clique_number(const Graph& g) {
    const int n = g.size();
    int best = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        const int size = std::popcount(mask);
        if (size <= best) continue;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                if ((mask >> i & 1) && (mask >> j & 1) && !g.adjacent(i, j)) ok = false;
        if (ok) best = size;
    }
    return best;
}

}  // namespace

TEST_CASE("common-neighbour histogram: serial and parallel agree") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const Graph g = random_graph(90 + static_cast<int>(seed) * 7, 0.3, seed);
        const auto s = kernels::common_neighbor_histogram(g, Exec::serial);
        const auto p = kernels::common_neighbor_histogram(g, Exec::parallel);
        CHECK(same(s.on_edges, p.on_edges));
        CHECK(same(s.on_nonedges, p.on_nonedges));

        // Oracle tally.
        long pairs = 0;
        for (int i = 0; i < g.size(); ++i)
            for (int j = i + 1; j < g.size(); ++j) ++pairs;
        long counted = 0;
        for (const auto& [v, t] : s.on_edges) counted += t.count;
        for (const auto& [v, t] : s.on_nonedges) counted += t.count;
        CHECK(counted == pairs);
    }
    const auto& g = world().graph;
    const auto s = kernels::common_neighbor_histogram(g, Exec::serial);
    const auto p = kernels::common_neighbor_histogram(g, Exec::parallel);
    CHECK(same(s.on_edges, p.on_edges));
    CHECK(same(s.on_nonedges, p.on_nonedges));
    REQUIRE(s.on_edges.size() == 1);
    CHECK(s.on_edges.begin()->first == 36);
    CHECK(s.on_edges.begin()->second.count == 20800);
}

TEST_CASE("identity mismatch: serial and parallel agree") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const Graph g = random_graph(100, 0.2, seed);
        const SrgParams guess{100, g.degree(0), 3, 4};
        const auto s = kernels::first_identity_mismatch(g, guess, Exec::serial);
        const auto p = kernels::first_identity_mismatch(g, guess, Exec::parallel);
        REQUIRE(s.has_value());
        REQUIRE(p.has_value());
        CHECK(s->i == p->i);
        CHECK(s->j == p->j);
        CHECK(s->actual == p->actual);
    }
    Graph g = world().graph;
    CHECK_FALSE(kernels::first_identity_mismatch(g, kG24Params, Exec::serial).has_value());
    g.flip_edge(10, 300);
    const auto s = kernels::first_identity_mismatch(g, kG24Params, Exec::serial);
    const auto p = kernels::first_identity_mismatch(g, kG24Params, Exec::parallel);
    REQUIRE(s.has_value());
    REQUIRE(p.has_value());
    CHECK(std::pair{s->i, s->j} == std::pair{p->i, p->j});
}

TEST_CASE("distance histogram: serial and parallel agree") {
    const auto& w = world();
    const auto s = kernels::distance_histogram(w.graph, *w.y, Exec::serial);
    const auto p = kernels::distance_histogram(w.graph, *w.y, Exec::parallel);
    CHECK(same(s.on_edges, p.on_edges));
    CHECK(same(s.on_nonedges, p.on_nonedges));

    const Graph g = random_graph(60, 0.4, 3);
    const ReprMatrix y(g, 2);
    const auto rs = kernels::distance_histogram(g, y, Exec::serial);
    const auto rp = kernels::distance_histogram(g, y, Exec::parallel);
    CHECK(same(rs.on_edges, rp.on_edges));
    CHECK(same(rs.on_nonedges, rp.on_nonedges));
}

TEST_CASE("per-edge clique scan: serial and parallel agree, brute-force oracle on small graphs") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Graph g = random_graph(14, 0.55, seed);
        const auto s = kernels::per_edge_max_clique(g, Exec::serial);
        const auto p = kernels::per_edge_max_clique(g, Exec::parallel);
        CHECK(s.clique_number == p.clique_number);
        CHECK(s.witness == p.witness);
        CHECK(s.per_edge_size == p.per_edge_size);
        CHECK(s.nodes == p.nodes);
        CHECK(s.edges_searched == g.edge_count());
        const int brute = brute_clique_number(g);
        if (g.edge_count() > 0) CHECK(s.clique_number == brute);
    }
}

TEST_CASE("max_clique_within restricts to the candidate set") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Graph g = random_graph(16, 0.6, seed + 100);
        std::vector<Word> cand(static_cast<std::size_t>(g.words()), 0);
        std::vector<int> kept;
        for (int v = 0; v < 16; v += 2) {
            cand[0] |= Word{1} << v;
            kept.push_back(v);
        }
        long nodes = 0;
        const auto c = kernels::max_clique_within(g, cand, &nodes);
        CHECK(nodes > 0);
        for (int v : c) CHECK(v % 2 == 0);
        CHECK(static_cast<int>(c.size()) == brute_clique_number(g.induced(kept)));
    }
}
