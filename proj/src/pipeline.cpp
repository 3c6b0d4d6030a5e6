#include "g24/pipeline.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "g24/kernels.hpp"

namespace g24 {

using nlohmann::json;

const char* stage_name(Stage s) {
    switch (s) {
        case Stage::field: return "field";
        case Stage::geometry: return "geometry";
        case Stage::bases: return "bases";
        case Stage::graph: return "graph";
        case Stage::srg: return "srg";
        case Stage::partition: return "partition";
        case Stage::claim1: return "claim1";
        case Stage::structure: return "structure";
        case Stage::representation: return "representation";
        case Stage::inner_products: return "inner_products";
        case Stage::dimensions: return "dimensions";
        case Stage::max_clique: return "max_clique";
        case Stage::cover: return "cover";
        case Stage::uniqueness: return "uniqueness";
        case Stage::verdict: return "verdict";
    }
    return "?";
}

const char* to_string(StageStatus s) {
    switch (s) {
        case StageStatus::ok: return "ok";
        case StageStatus::failed: return "failed";
        case StageStatus::inconclusive: return "inconclusive";
        case StageStatus::skipped: return "skipped";
    }
    return "?";
}

const StageRecord* RunResult::stage(Stage s) const {
    for (const auto& rec : stages)
        if (rec.stage == s) return &rec;
    return nullptr;
}

namespace {

json histogram_json(const std::map<long, kernels::Tally>& m) {
    json j = json::object();
    for (const auto& [value, tally] : m) j[std::to_string(value)] = tally.count;
    return j;
}

json certificate_json(const DimensionCertificate& c) {
    json ranks = json::array();
    json primes = json::array();
    for (const auto& pr : c.ranks) {
        primes.push_back(pr.prime);
        ranks.push_back({{"prime", pr.prime}, {"difference_rank", pr.difference_rank}, {"column_rank", pr.column_rank}});
    }
    return {{"set", c.set},
            {"points", c.points},
            {"affine_dim", c.lower_bound},
            {"linear_rank", c.linear_rank},
            {"upper_bound", c.upper_bound},
            {"primes", primes},
            {"ranks", ranks},
            {"base_point_checked", c.base_point_checked},
            {"upper_bound_argument", c.upper_bound_argument},
            {"status", to_string(c.status)},
            {"detail", c.detail}};
}

json clique_json(const SpecialClique& sc) {
    return {{"vertices", std::vector<int>(sc.vertices.begin(), sc.vertices.end())},
            {"core", std::vector<int>(sc.core.begin(), sc.core.end())}};
}

class Runner {
public:
    explicit Runner(const RunConfig& cfg) : cfg_(cfg) {}

    RunResult run() {
        if (cfg_.threads > 0) omp_set_num_threads(cfg_.threads);
        auto& rep = r_.report;
        rep["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
        rep["config"] = {{"primes", cfg_.primes},
                         {"with_clebsch_check", cfg_.with_clebsch_check},
                         {"with_uniqueness", cfg_.with_uniqueness},
                         {"uniqueness_budget", cfg_.uniqueness_budget},
                         {"seed", cfg_.seed}};
        if (cfg_.inject_flip) rep["config"]["inject_flip"] = {cfg_.inject_flip->first, cfg_.inject_flip->second};

        stage(Stage::field, "Building GF(16) tables", true, [&](std::string& w) { return field(w); });
        stage(Stage::geometry, "Enumerating points and lines of PG(2,16)", true, [&](std::string& w) { return geometry(w); });
        stage(Stage::bases, "Search for orthogonal bases and filling iso-sets", true, [&](std::string& w) { return bases(w); });
        stage(Stage::graph, "Filling the adjacency matrix", true, [&](std::string& w) { return graph(w); });
        stage(Stage::srg, "Checking srg(416,100,36,20) and its spectrum", true, [&](std::string& w) { return srg(w); });
        stage(Stage::partition, "Separating subsets B_1, B_2, B_3, C", true, [&](std::string& w) { return partition(w); });
        stage(Stage::claim1, "Checking the counts of adjacencies in B_1, B_2, B_3", true, [&](std::string& w) { return claim1(w); });
        stage(Stage::structure, "Checking the structure of B_1, B_2, B_3", false, [&](std::string& w) { return structure(w); });
        stage(Stage::representation, "Building the representation y = A + 4I", true, [&](std::string& w) { return representation(w); });
        stage(Stage::inner_products, "Checking inner products with p and q", true, [&](std::string& w) { return inner_products(w); });
        stage(Stage::dimensions, "Certifying affine dimensions 65, 64, 63", true, [&](std::string& w) { return dimensions(w); });
        stage(Stage::max_clique, "Computing the clique number", true, [&](std::string& w) { return max_clique_stage(w); });
        stage(Stage::cover, "Covering C by special 5-cliques", true, [&](std::string& w) { return cover(w); });
        stage(Stage::uniqueness, "Counting covers of C by special 5-cliques", false, [&](std::string& w) { return uniqueness(w); });
        stage(Stage::verdict, "Issuing the verdict", true, [&](std::string& w) { return verdict(w); });

        bool failed = false;
        bool inconclusive = false;
        for (const auto& rec : r_.stages) {
            failed |= rec.status == StageStatus::failed;
            inconclusive |= rec.status == StageStatus::inconclusive;
        }
        r_.exit_code = failed ? ExitCode::failure : inconclusive ? ExitCode::inconclusive : ExitCode::pass;

        json stages = json::array();
        for (const auto& rec : r_.stages) {
            json s = {{"name", stage_name(rec.stage)}, {"label", rec.label}, {"status", to_string(rec.status)}};
            if (!rec.witness.empty()) s["witness"] = rec.witness;
            if (cfg_.timings) s["elapsed_us"] = rec.elapsed_us;
            stages.push_back(std::move(s));
        }
        rep["stages"] = std::move(stages);
        rep["overall"] = failed ? "fail" : inconclusive ? "inconclusive" : "pass";
        return std::move(r_);
    }

private:
    template <class Body>
    void stage(Stage s, const char* label, bool mandatory, Body body) {
        StageRecord rec{s, label, StageStatus::skipped, {}, 0};
        const bool enabled = mandatory || (s == Stage::structure ? cfg_.with_clebsch_check : cfg_.with_uniqueness);
        if (halted_ || !enabled || s > cfg_.last_stage) {
            r_.stages.push_back(std::move(rec));
            return;
        }
        const auto t0 = std::chrono::steady_clock::now();
        try {
            rec.status = body(rec.witness);
        } catch (const std::exception& e) {
            rec.status = StageStatus::failed;
            rec.witness = e.what();
        }
        rec.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0).count();
        if (mandatory && rec.status != StageStatus::ok) halted_ = true;
        r_.stages.push_back(std::move(rec));
    }

    static StageStatus fail(std::string& w, std::string why) {
        w = std::move(why);
        return StageStatus::failed;
    }

    StageStatus field(std::string& w) {
        const auto& t = gf16::tables();
        int fixed = 0;
        for (unsigned a = 0; a < gf16::kOrder; ++a) fixed += gf16::conj(FieldElement{a}) == FieldElement{a};
        r_.report["field"] = {{"modulus", "x^4 + x + 1"},
                              {"modulus_encoding", kGf16Modulus},
                              {"generator", t.generator},
                              {"conjugation", "a -> a^4"},
                              {"fixed_field_size", fixed}};
        const auto axioms = gf16::verify_field_axioms();
        if (!axioms) return fail(w, axioms.witness);
        if (fixed != 4) return fail(w, "conjugation fixes " + std::to_string(fixed) + " elements");
        return StageStatus::ok;
    }

    StageStatus geometry(std::string& w) {
        auto& a = r_.artifacts;
        a.plane.emplace();
        const auto& pl = *a.plane;
        const auto lines = pl.enumerate_lines();
        std::map<int, int> meets;
        for (const auto& line : lines) {
            int iso = 0;
            for (int idx : line) iso += pl.isotropic_number(idx) != 0;
            ++meets[iso];
        }
        json meet_json = json::object();
        for (auto [k, v] : meets) meet_json[std::to_string(k)] = v;
        r_.report["geometry"] = {{"points", pl.points().size()},
                                 {"isotropic", pl.isotropic().size()},
                                 {"nonisotropic", pl.nonisotropic().size()},
                                 {"lines", lines.size()},
                                 {"isotropic_points_per_line", meet_json}};
        if (pl.points().size() != 273 || pl.isotropic().size() != 65 || pl.nonisotropic().size() != 208)
            return fail(w, "point census differs from 273 / 65 / 208");
        if (lines.size() != 273) return fail(w, "line count " + std::to_string(lines.size()));
        for (auto [k, v] : meets)
            if (k != 1 && k != 5) return fail(w, "a line meets the isotropic set in " + std::to_string(k) + " points");
        return StageStatus::ok;
    }

    StageStatus bases(std::string& w) {
        auto& a = r_.artifacts;
        a.bases = a.plane->enumerate_bases();
        a.isosets.clear();
        std::vector<int> per_point(a.plane->nonisotropic().size(), 0);
        for (const auto& b : a.bases) {
            a.isosets.push_back(b.isoset);
            for (int idx : b.points) ++per_point[static_cast<std::size_t>(idx)];
        }
        const std::set<IsoSet> distinct(a.isosets.begin(), a.isosets.end());
        const auto [lo, hi] = std::minmax_element(per_point.begin(), per_point.end());
        bool sizes_ok = true;
        for (const auto& s : a.isosets) sizes_ok &= s.size() == kIsoSetSize;
        r_.report["bases"] = {{"count", a.bases.size()},
                              {"bases_per_point_min", *lo},
                              {"bases_per_point_max", *hi},
                              {"isoset_size", kIsoSetSize},
                              {"distinct_isosets", distinct.size()}};
        if (a.bases.size() != static_cast<std::size_t>(kVertexCount))
            return fail(w, "found " + std::to_string(a.bases.size()) + " orthogonal bases");
        if (!sizes_ok) return fail(w, "an iso-set does not have 15 members");
        if (distinct.size() != a.isosets.size()) return fail(w, "iso-sets are not pairwise distinct");
        if (*lo != 6 || *hi != 6) return fail(w, "a nonisotropic point is not in exactly 6 bases");
        return StageStatus::ok;
    }

    StageStatus graph(std::string&) {
        auto& a = r_.artifacts;
        a.graph.emplace(build_graph(a.isosets));
        if (cfg_.inject_flip) a.graph->flip_edge(cfg_.inject_flip->first, cfg_.inject_flip->second);
        const auto dist = intersection_distribution(a.isosets);
        json dj = json::object();
        for (std::size_t i = 0; i < dist.size(); ++i)
            if (dist[i]) dj[std::to_string(i)] = dist[i];
        r_.report["graph"] = {{"vertices", a.graph->size()},
                              {"edges", a.graph->edge_count()},
                              {"intersection_distribution", dj}};
        return StageStatus::ok;
    }

    StageStatus srg(std::string& w) {
        auto& a = r_.artifacts;
        const SrgParams p = verify_srg(*a.graph, cfg_.exec);
        a.params = p;
        r_.report["srg"] = {{"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}, {"feasible", p.feasible()}};
        if (p != kG24Params) {
            std::ostringstream m;
            m << "parameters (" << p.v << "," << p.k << "," << p.lambda << "," << p.mu << ")";
            return fail(w, m.str());
        }
        const auto identity = verify_srg_identity(*a.graph, p, cfg_.exec);
        r_.report["srg"]["identity"] = identity.ok;
        if (!identity) return fail(w, identity.witness);
        const Spectrum s = srg_spectrum(p);
        a.spectrum = s;
        r_.report["spectrum"] = {{"k", s.degree},
                                 {"r", to_string(s.r)},
                                 {"f", s.f},
                                 {"s", to_string(s.s)},
                                 {"g", s.g_mult}};
        if (s.s != Rational{-4, 1} || s.f != 65) return fail(w, "spectrum differs from s = -4, f = 65");
        return StageStatus::ok;
    }

    StageStatus partition(std::string&) {
        auto& a = r_.artifacts;
        a.partition = split_b_c(*a.graph, a.isosets, 1);
        const auto& p = *a.partition;
        r_.report["partition"] = {{"anchor", p.anchor},
                                  {"B", p.b1.size() + p.b2.size() + p.b3.size()},
                                  {"C", p.c.size()},
                                  {"components", {p.b1.size(), p.b2.size(), p.b3.size()}},
                                  {"B1", p.b1},
                                  {"B2", p.b2},
                                  {"B3", p.b3}};
        return StageStatus::ok;
    }

    StageStatus claim1(std::string& w) {
        const auto res = verify_claim1(*r_.artifacts.graph, *r_.artifacts.partition);
        r_.report["claim1"] = {{"own_component", 20}, {"other_component", 0}, {"from_C", 8}, {"holds", res.ok}};
        if (!res) return fail(w, res.witness);

        // The split must look the same from other anchors; three seeded spot checks.
        std::mt19937_64 rng(cfg_.seed);
        std::uniform_int_distribution<int> pick(1, IsoSet::kMaxIndex);
        std::set<int> anchors;
        while (anchors.size() < 3) {
            const int a = pick(rng);
            if (a != r_.artifacts.partition->anchor) anchors.insert(a);
        }
        json checks = json::array();
        for (int anchor : anchors) {
            const auto part = split_b_c(*r_.artifacts.graph, r_.artifacts.isosets, anchor);
            const auto other = verify_claim1(*r_.artifacts.graph, part);
            checks.push_back({{"anchor", anchor}, {"holds", other.ok}});
            if (!other) return fail(w, "anchor " + std::to_string(anchor) + ": " + other.witness);
        }
        r_.report["claim1"]["anchor_spot_checks"] = checks;
        return StageStatus::ok;
    }

    StageStatus structure(std::string& w) {
        const auto rep = check_component_structure(*r_.artifacts.graph, *r_.artifacts.partition, true);
        r_.report["structure"] = {{"regular", rep.regularity.ok},
                                  {"isomorphic_to_coclique_extension", rep.isomorphic},
                                  {"search_nodes", rep.search_nodes}};
        if (!rep.regularity) return fail(w, rep.regularity.witness);
        for (int h = 0; h < 3; ++h)
            if (!rep.isomorphic[static_cast<std::size_t>(h)])
                return fail(w, "B_" + std::to_string(h + 1) + " is not isomorphic to the 2-coclique extension of the halved 5-cube");
        return StageStatus::ok;
    }

    StageStatus representation(std::string& w) {
        auto& a = r_.artifacts;
        a.y.emplace(build_representation(*a.graph));
        const auto& y = *a.y;
        for (int i = 0; i < y.size(); ++i) {
            long sum = 0;
            for (int j = 0; j < y.size(); ++j) {
                if (y(i, j) != y(j, i)) return fail(w, "y is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
                sum += y(j, i);
            }
            if (y(i, i) != 4 || sum != 104) return fail(w, "column " + std::to_string(i) + " does not have diagonal 4 and sum 104");
        }
        const auto hist = kernels::distance_histogram(*a.graph, y, cfg_.exec);
        r_.report["representation"] = {{"diagonal", y.diagonal()},
                                       {"column_sum", 104},
                                       {"distance_sq_on_edges", histogram_json(hist.on_edges)},
                                       {"distance_sq_on_nonedges", histogram_json(hist.on_nonedges)}};
        auto single = [&](const std::map<long, kernels::Tally>& m, long want) -> std::optional<std::string> {
            for (const auto& [value, tally] : m)
                if (value != want) {
                    std::ostringstream msg;
                    msg << "pair (" << tally.first.first << "," << tally.first.second << ") at squared distance "
                        << value << ", expected " << want;
                    return msg.str();
                }
            return std::nullopt;
        };
        if (auto bad = single(hist.on_edges, 144)) return fail(w, *bad);
        if (auto bad = single(hist.on_nonedges, 192)) return fail(w, *bad);
        return StageStatus::ok;
    }

    StageStatus inner_products(std::string& w) {
        auto& a = r_.artifacts;
        auto [p, q] = build_contrasts(*a.partition);
        const auto res = verify_inner_products(*a.y, p, q, *a.partition);
        r_.report["contrasts"] = {{"p_pattern", kExpectedP},
                                  {"q_pattern", kExpectedQ},
                                  {"p_dot_q", dot(p.entries, q.entries)},
                                  {"p_norm_sq", dot(p.entries, p.entries)},
                                  {"q_norm_sq", dot(q.entries, q.entries)},
                                  {"holds", res.ok}};
        a.p = std::move(p);
        a.q = std::move(q);
        if (!res) return fail(w, res.witness);
        return StageStatus::ok;
    }

    StageStatus dimensions(std::string& w) {
        if (cfg_.primes.size() < 2) return fail(w, "at least two primes are required");
        auto& a = r_.artifacts;
        a.dimensions = certified_dimension_chain(*a.y, *a.p, *a.q, *a.partition, *a.spectrum, cfg_.primes, cfg_.exec);
        json certs = json::array();
        StageStatus status = StageStatus::ok;
        for (const auto& c : a.dimensions) {
            certs.push_back(certificate_json(c));
            if (c.status == DimensionCertificate::Status::failed) {
                status = StageStatus::failed;
                if (w.empty()) w = c.set + ": " + c.detail;
            } else if (c.status == DimensionCertificate::Status::inconclusive && status == StageStatus::ok) {
                status = StageStatus::inconclusive;
                w = c.set + ": " + c.detail;
            }
        }
        r_.report["dimensions"] = std::move(certs);
        return status;
    }

    StageStatus max_clique_stage(std::string& w) {
        auto& a = r_.artifacts;
        a.clique = max_clique(*a.graph, cfg_.exec);
        const auto& mc = *a.clique;
        json per_edge = json::object();
        for (auto [size, count] : mc.per_edge_size) per_edge[std::to_string(size)] = count;
        r_.report["max_clique"] = {{"size", mc.size},
                                   {"witness", mc.witness.vertices},
                                   {"witness_verified", mc.witness.verified},
                                   {"edges_searched", mc.edges_searched},
                                   {"search_nodes", mc.nodes},
                                   {"complete", mc.complete},
                                   {"largest_clique_per_edge", per_edge}};
        if (!mc.complete) return fail(w, "clique search did not cover every edge");
        if (!mc.witness.verified) return fail(w, "clique witness failed the pairwise adjacency re-check");
        if (mc.size != 5) return fail(w, "clique number is " + std::to_string(mc.size));
        return StageStatus::ok;
    }

    StageStatus cover(std::string& w) {
        auto& a = r_.artifacts;
        a.special = enumerate_special_cliques(*a.graph, a.isosets, *a.partition);
        std::map<std::array<int, 3>, int> cores;
        for (const auto& sc : a.special) ++cores[sc.core];
        r_.report["special_cliques"] = {{"count", a.special.size()}, {"distinct_cores", cores.size()}};
        if (a.special.size() < 64) return fail(w, "only " + std::to_string(a.special.size()) + " special 5-cliques");

        a.cover = exact_cover_partition(a.special, a.partition->c);
        const auto& cov = *a.cover;
        json cl = json::array();
        std::set<std::array<int, 3>> cover_cores;
        for (const auto& sc : cov.cliques) {
            cl.push_back(clique_json(sc));
            cover_cores.insert(sc.core);
        }
        r_.report["cover"] = {{"size", cov.cliques.size()}, {"covered", cov.covered.size()}, {"cliques", cl}};
        if (cov.cliques.size() != 64) return fail(w, "cover uses " + std::to_string(cov.cliques.size()) + " cliques");
        if (cov.covered != a.partition->c) return fail(w, "cover is not an exact cover of C");
        for (const auto& sc : cov.cliques)
            if (!is_clique(*a.graph, sc.vertices)) return fail(w, "a cover member is not a clique");
        if (cover_cores.size() != cov.cliques.size()) return fail(w, "cover cliques do not have distinct cores");
        return StageStatus::ok;
    }

    StageStatus uniqueness(std::string& w) {
        auto& a = r_.artifacts;
        const auto count = verify_cover_unique(a.special, a.partition->c, cfg_.uniqueness_budget);
        a.cover_count = count;
        json j = {{"count", count.count}, {"search_nodes", count.nodes}, {"complete", count.complete},
                  {"budget", cfg_.uniqueness_budget}};
        if (!count.complete) {
            r_.report["uniqueness"] = j;
            w = "node budget of " + std::to_string(cfg_.uniqueness_budget) + " exhausted after " +
                std::to_string(count.count) + " covers";
            return StageStatus::inconclusive;
        }
        if (count.count != 1) {
            r_.report["uniqueness"] = j;
            return fail(w, std::to_string(count.count) + " exact covers by special cliques, expected 1");
        }
        const int dropped = a.cover->rows.front();
        const auto without = verify_cover_unique(a.special, a.partition->c, cfg_.uniqueness_budget, std::span(&dropped, 1));
        j["without_first_cover_clique"] = {{"count", without.count}, {"complete", without.complete}};
        r_.report["uniqueness"] = j;
        if (!without.complete) {
            w = "node budget exhausted in the removal test";
            return StageStatus::inconclusive;
        }
        if (without.count != 0) return fail(w, "a cover exists without the first clique of the unique cover");
        return StageStatus::ok;
    }

    StageStatus verdict(std::string& w) {
        auto& a = r_.artifacts;
        const auto& part = *a.partition;
        VerdictInputs in{&a.dimensions, &*a.clique, static_cast<long>(part.c.size()), static_cast<long>(part.b1.size()),
                         a.cover ? &*a.cover : nullptr};
        a.verdict = final_verdict(in);
        const auto& v = *a.verdict;
        const long max_part = a.clique->size;
        r_.report["borsuk"] = {{"max_part_size", max_part},
                               {"V", {{"points", kVertexCount}, {"required_parts", borsuk_lower_bound(kVertexCount, max_part)}}},
                               {"C∪B1", {{"points", v.points}, {"required_parts", borsuk_lower_bound(v.points, max_part)}}},
                               {"C", {{"points", part.c.size()}, {"required_parts", borsuk_lower_bound(static_cast<long>(part.c.size()), max_part)}}}};
        r_.report["verdict"] = {{"issued", v.issued},
                                {"dimension", v.dimension},
                                {"required_parts", v.required_parts},
                                {"statement", v.statement},
                                {"notes", v.notes}};
        if (!v.issued) {
            r_.report["verdict"]["withheld_reason"] = v.withheld_reason;
            return fail(w, v.withheld_reason);
        }
        return StageStatus::ok;
    }

    const RunConfig& cfg_;
    RunResult r_;
    bool halted_ = false;
};

}  // namespace

RunResult run_check(const RunConfig& cfg) { return Runner(cfg).run(); }

std::string text_summary(const RunResult& r, bool with_timings) {
    std::ostringstream os;
    os << "=== Constructing and checking a G2(4) graph representation ===\n";
    for (const auto& rec : r.stages) {
        if (rec.status == StageStatus::skipped) continue;
        os << rec.label << " ... ";
        switch (rec.status) {
            case StageStatus::ok: os << "OK"; break;
            case StageStatus::failed: os << "FAILED: " << rec.witness; break;
            case StageStatus::inconclusive: os << "INCONCLUSIVE: " << rec.witness; break;
            case StageStatus::skipped: break;
        }
        if (with_timings) os << " (" << rec.elapsed_us / 1000 << " ms)";
        os << '\n';
    }
    switch (r.exit_code) {
        case ExitCode::pass: os << "OK\n"; break;
        case ExitCode::inconclusive: os << "INCONCLUSIVE\n"; break;
        default: os << "FAILED\n"; break;
    }
    if (r.artifacts.verdict && r.artifacts.verdict->issued) {
        os << "Verdict: " << r.artifacts.verdict->statement << '\n';
        for (const auto& n : r.artifacts.verdict->notes) os << "Note: " << n << '\n';
    }
    return os.str();
}

void write_dimacs(std::ostream& os, const Graph& g) {
    const auto edges = g.edges();
    os << "p edge " << g.size() << ' ' << edges.size() << '\n';
    for (auto [i, j] : edges) os << "e " << i + 1 << ' ' << j + 1 << '\n';
}

void write_graph_json(std::ostream& os, const Graph& g) {
    json edges = json::array();
    for (auto [i, j] : g.edges()) edges.push_back({i, j});
    json j = {{"vertices", g.size()}, {"index_base", 0}, {"edges", edges}};
    os << j.dump() << '\n';
}

void write_isosets_csv(std::ostream& os, const std::vector<IsoSet>& isosets) {
    for (std::size_t v = 0; v < isosets.size(); ++v) {
        os << v;
        for (int m : isosets[v].members()) os << ',' << m;
        os << '\n';
    }
}

void write_vectors_csv(std::ostream& os, const ReprMatrix& y) {
    for (int i = 0; i < y.size(); ++i) {
        os << i;
        for (auto e : y.column(i)) os << ',' << e;
        os << '\n';
    }
}

void write_cover_csv(std::ostream& os, const CoverResult& cover) {
    for (std::size_t t = 0; t < cover.cliques.size(); ++t) {
        const auto& sc = cover.cliques[t];
        os << t;
        for (int v : sc.vertices) os << ',' << v;
        for (int c : sc.core) os << ',' << c;
        os << '\n';
    }
}

void write_report(std::ostream& os, const json& report) { os << report.dump(2) << '\n'; }

ExitCode run_command(const RunConfig& base, std::ostream& fallback, std::ostream& log) {
    RunConfig cfg = base;
    const std::string& cmd = cfg.command;
    if (cmd == "export-graph") {
        cfg.last_stage = Stage::srg;
    } else if (cmd == "export-isosets") {
        cfg.last_stage = Stage::bases;
    } else if (cmd == "export-vectors") {
        cfg.last_stage = Stage::representation;
    } else if (cmd == "export-cover") {
        cfg.last_stage = Stage::cover;
    } else if (cmd != "check" && cmd != "report") {
        log << "unknown command: " << cmd << '\n';
        return ExitCode::usage;
    }

    const RunResult r = run_check(cfg);
    if (cmd == "check") fallback << text_summary(r, cfg.timings);
    if (r.exit_code == ExitCode::failure && cmd != "check") log << text_summary(r, cfg.timings);
    if (r.exit_code != ExitCode::pass && cmd != "check" && cmd != "report") return r.exit_code;

    std::ofstream file;
    if (cfg.out) {
        file.open(*cfg.out, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open output file: " + *cfg.out);
    }
    if (cmd == "check" && !cfg.out) return r.exit_code;
    std::ostream& os = cfg.out ? static_cast<std::ostream&>(file) : fallback;

    const Artifacts& a = r.artifacts;
    if (cmd == "check" || cmd == "report") {
        write_report(os, r.report);
    } else if (cmd == "export-graph") {
        if (cfg.format == "json")
            write_graph_json(os, *a.graph);
        else
            write_dimacs(os, *a.graph);
    } else if (cmd == "export-isosets") {
        write_isosets_csv(os, a.isosets);
    } else if (cmd == "export-vectors") {
        write_vectors_csv(os, *a.y);
    } else if (cmd == "export-cover") {
        write_cover_csv(os, *a.cover);
    }
    os.flush();
    if (!os) throw std::runtime_error("write failed" + (cfg.out ? ": " + *cfg.out : std::string{}));
    return r.exit_code;
}

}  // namespace g24
