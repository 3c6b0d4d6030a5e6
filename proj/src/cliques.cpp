#include "g24/cliques.hpp"

#include <algorithm>
#include <sstream>

#include "g24/exact_cover.hpp"
#include "g24/kernels.hpp"

namespace g24 {

bool is_clique(const Graph& g, std::span<const int> vertices) {
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (vertices[a] == vertices[b] || !g.adjacent(vertices[a], vertices[b])) return false;
    return true;
}

MaxCliqueResult max_clique(const Graph& g, Exec exec) {
    const auto scan = kernels::per_edge_max_clique(g, exec);
    MaxCliqueResult r;
    r.size = scan.clique_number;
    r.witness.vertices = scan.witness;
    r.witness.verified = static_cast<int>(scan.witness.size()) == r.size && is_clique(g, scan.witness);
    r.edges_searched = scan.edges_searched;
    r.nodes = scan.nodes;
    r.per_edge_size = scan.per_edge_size;
    r.complete = scan.edges_searched == g.edge_count();
    return r;
}

std::vector<SpecialClique> enumerate_special_cliques(const Graph& g, std::span<const IsoSet> isosets,
                                                     const Partition& part) {
    const std::vector<int>& c = part.c;
    auto iso = [&](int v) -> const IsoSet& { return isosets[static_cast<std::size_t>(v)]; };

    std::vector<SpecialClique> out;
    std::vector<int> chosen;
    // Extend `chosen` by members of `pool` (ascending, all adjacent to chosen
    // and containing the core) until five vertices are picked.
    auto extend = [&](auto&& self, const std::vector<int>& pool, const IsoSet& core) -> void {
        if (chosen.size() == 5) {
            SpecialClique sc;
            std::copy(chosen.begin(), chosen.end(), sc.vertices.begin());
            const auto members = core.members();
            std::copy(members.begin(), members.end(), sc.core.begin());
            out.push_back(sc);
            return;
        }
        for (std::size_t t = 0; t < pool.size(); ++t) {
            const int v = pool[t];
            std::vector<int> next;
            for (std::size_t u = t + 1; u < pool.size(); ++u)
                if (g.adjacent(v, pool[u])) next.push_back(pool[u]);
            if (next.size() + chosen.size() + 1 < 5) continue;
            chosen.push_back(v);
            self(self, next, core);
            chosen.pop_back();
        }
    };

    for (std::size_t ia = 0; ia < c.size(); ++ia) {
        const int a = c[ia];
        for (std::size_t ib = ia + 1; ib < c.size(); ++ib) {
            const int b = c[ib];
            if (!g.adjacent(a, b)) continue;
            const IsoSet core = iso(a).intersect(iso(b));
            if (core.size() != 3) continue;
            std::vector<int> pool;
            for (std::size_t ic = ib + 1; ic < c.size(); ++ic) {
                const int v = c[ic];
                if (g.adjacent(a, v) && g.adjacent(b, v) && iso(v).intersection_size(core) == 3) pool.push_back(v);
            }
            chosen = {a, b};
            extend(extend, pool, core);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

ExactCover make_problem(std::span<const SpecialClique> candidates, std::span<const int> universe,
                        std::vector<int>& column_of) {
    int max_v = 0;
    for (int v : universe) max_v = std::max(max_v, v);
    for (const auto& sc : candidates)
        for (int v : sc.vertices) max_v = std::max(max_v, v);
    column_of.assign(static_cast<std::size_t>(max_v) + 1, -1);
    int col = 0;
    for (int v : universe) column_of[static_cast<std::size_t>(v)] = col++;

    std::vector<std::vector<int>> rows;
    rows.reserve(candidates.size());
    for (const auto& sc : candidates) {
        std::vector<int> r;
        for (int v : sc.vertices) {
            const int cidx = column_of[static_cast<std::size_t>(v)];
            if (cidx < 0) throw std::invalid_argument("candidate clique leaves the universe");
            r.push_back(cidx);
        }
        rows.push_back(std::move(r));
    }
    return ExactCover(static_cast<int>(universe.size()), rows);
}

}  // namespace

CoverResult exact_cover_partition(std::span<const SpecialClique> candidates, std::span<const int> universe) {
    std::vector<int> column_of;
    ExactCover problem = make_problem(candidates, universe, column_of);
    const auto rows = problem.first_solution();
    if (!rows) throw VerificationFailure("exact_cover_partition: no exact cover of C by special cliques");
    CoverResult result;
    result.rows = *rows;
    for (int r : result.rows) {
        const auto& sc = candidates[static_cast<std::size_t>(r)];
        result.cliques.push_back(sc);
        result.covered.insert(result.covered.end(), sc.vertices.begin(), sc.vertices.end());
    }
    std::sort(result.covered.begin(), result.covered.end());
    return result;
}

CoverCount verify_cover_unique(std::span<const SpecialClique> candidates, std::span<const int> universe,
                               long node_budget, std::span<const int> excluded) {
    std::vector<int> column_of;
    ExactCover problem = make_problem(candidates, universe, column_of);
    const auto c = problem.count(node_budget, excluded);
    return {c.solutions, c.nodes, c.complete, c.first};
}

long borsuk_lower_bound(long n_points, long max_part_size) {
    if (max_part_size < 1) throw std::domain_error("borsuk_lower_bound: part size must be positive");
    return (n_points + max_part_size - 1) / max_part_size;
}

Verdict final_verdict(const VerdictInputs& in) {
    Verdict v;
    auto withhold = [&](std::string why) {
        v.issued = false;
        v.withheld_reason = std::move(why);
        return v;
    };
    if (!in.dimensions || in.dimensions->size() != 3) return withhold("dimension certificates missing");
    if (!in.clique) return withhold("clique number missing");
    const auto& cb1 = (*in.dimensions)[1];
    if (cb1.status != DimensionCertificate::Status::certified)
        return withhold("dimension of C∪B1 not certified: " + cb1.detail);
    if (!in.clique->complete || !in.clique->witness.verified)
        return withhold("clique search incomplete or witness unverified");
    if (in.clique->size < 2) return withhold("graph has no edges");

    const long points = in.c_points + in.b1_points;
    if (points != cb1.points) return withhold("point count of C∪B1 disagrees with the certificate");
    v.points = points;
    v.dimension = cb1.lower_bound;
    v.required_parts = borsuk_lower_bound(points, in.clique->size);
    if (v.required_parts <= v.dimension + 1) {
        std::ostringstream msg;
        msg << "bound " << v.required_parts << " does not exceed dimension + 1 = " << v.dimension + 1;
        return withhold(msg.str());
    }
    v.issued = true;
    std::ostringstream st;
    st << "dimension " << v.dimension << " counterexample: the " << points
       << " points of C∪B1 need at least " << v.required_parts << " parts of smaller diameter, more than "
       << v.dimension + 1;
    v.statement = st.str();

    const auto& c = (*in.dimensions)[2];
    std::ostringstream near;
    near << "C: " << in.c_points << " points";
    if (c.status == DimensionCertificate::Status::certified) near << " in dimension " << c.lower_bound;
    near << " need at least " << borsuk_lower_bound(in.c_points, in.clique->size) << " parts";
    if (in.cover) near << "; a cover by " << in.cover->cliques.size() << " special 5-cliques attains this, so C alone is not a counterexample";
    v.notes.push_back(near.str());
    v.notes.push_back("a lower bound of 72 parts for C∪B1 is reported in the literature; not verified here");
    return v;
}

}  // namespace g24
