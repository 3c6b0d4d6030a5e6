#include <algorithm>
#include <bit>
#include <sstream>

#include "g24/graph.hpp"

namespace g24 {

Graph halved_five_cube() {
    std::vector<unsigned> words;
    for (unsigned w = 0; w < 32; ++w)
        if (std::popcount(w) % 2 == 0) words.push_back(w);
    const int n = static_cast<int>(words.size());
    Graph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (std::popcount(words[static_cast<std::size_t>(a)] ^ words[static_cast<std::size_t>(b)]) == 2) g.add_edge(a, b);
    return g;
}

Graph coclique_extension(const Graph& g) {
    Graph ext(2 * g.size());
    for (auto [u, v] : g.edges())
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) ext.add_edge(2 * u + a, 2 * v + b);
    return ext;
}

namespace {

class IsoSearch {
public:
    IsoSearch(const Graph& a, const Graph& b) : a_(a), b_(b), map_(static_cast<std::size_t>(a.size()), -1),
                                               used_(static_cast<std::size_t>(b.size()), 0) {
        // Map vertices in BFS order so each new vertex has mapped neighbours.
        std::vector<char> seen(static_cast<std::size_t>(a.size()), 0);
        for (int s = 0; s < a.size(); ++s) {
            if (seen[static_cast<std::size_t>(s)]) continue;
            seen[static_cast<std::size_t>(s)] = 1;
            const std::size_t start = order_.size();
            order_.push_back(s);
            for (std::size_t h = start; h < order_.size(); ++h)
                for (int w : a.neighbors(order_[h]))
                    if (!seen[static_cast<std::size_t>(w)]) {
                        seen[static_cast<std::size_t>(w)] = 1;
                        order_.push_back(w);
                    }
        }
    }

    bool run() { return extend(0); }
    const std::vector<int>& mapping() const { return map_; }
    long nodes() const { return nodes_; }

private:
    bool extend(std::size_t depth) {
        ++nodes_;
        if (depth == order_.size()) return true;
        const int v = order_[depth];
        for (int cand = 0; cand < b_.size(); ++cand) {
            if (used_[static_cast<std::size_t>(cand)] || b_.degree(cand) != a_.degree(v)) continue;
            bool consistent = true;
            for (std::size_t d = 0; d < depth && consistent; ++d) {
                const int u = order_[d];
                consistent = a_.adjacent(u, v) == b_.adjacent(map_[static_cast<std::size_t>(u)], cand);
            }
            if (!consistent) continue;
            map_[static_cast<std::size_t>(v)] = cand;
            used_[static_cast<std::size_t>(cand)] = 1;
            if (extend(depth + 1)) return true;
            used_[static_cast<std::size_t>(cand)] = 0;
            map_[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }

    const Graph& a_;
    const Graph& b_;
    std::vector<int> order_;
    std::vector<int> map_;
    std::vector<char> used_;
    long nodes_ = 0;
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b, long* nodes) {
    if (nodes) *nodes = 0;
    if (a.size() != b.size() || a.edge_count() != b.edge_count()) return std::nullopt;
    IsoSearch search(a, b);
    const bool found = search.run();
    if (nodes) *nodes = search.nodes();
    if (!found) return std::nullopt;
    return search.mapping();
}

StructureReport check_component_structure(const Graph& g, const Partition& part, bool with_isomorphism) {
    StructureReport report;
    for (int h = 1; h <= 3 && report.regularity.ok; ++h) {
        const auto& comp = part.component(h);
        if (comp.size() != 32) {
            report.regularity = CheckResult::fail("B_" + std::to_string(h) + " does not have 32 vertices");
            break;
        }
        const Graph sub = g.induced(comp);
        for (int t = 0; t < sub.size(); ++t)
            if (sub.degree(t) != 20) {
                std::ostringstream msg;
                msg << "vertex " << comp[static_cast<std::size_t>(t)] << " has degree " << sub.degree(t)
                    << " inside B_" << h << ", expected 20";
                report.regularity = CheckResult::fail(msg.str());
                break;
            }
        for (int other = h + 1; other <= 3 && report.regularity.ok; ++other)
            for (int u : comp)
                for (int v : part.component(other))
                    if (g.adjacent(u, v) && report.regularity.ok) {
                        std::ostringstream msg;
                        msg << "edge (" << u << "," << v << ") joins B_" << h << " and B_" << other;
                        report.regularity = CheckResult::fail(msg.str());
                    }
    }
    if (!with_isomorphism || !report.regularity.ok) return report;

    report.isomorphism_checked = true;
    const Graph target = coclique_extension(halved_five_cube());
    for (int h = 1; h <= 3; ++h) {
        const Graph sub = g.induced(part.component(h));
        long nodes = 0;
        report.isomorphic[static_cast<std::size_t>(h - 1)] = find_isomorphism(sub, target, &nodes).has_value();
        report.search_nodes[static_cast<std::size_t>(h - 1)] = nodes;
    }
    return report;
}

}  // namespace g24
