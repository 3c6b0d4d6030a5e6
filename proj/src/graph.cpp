#include "g24/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "g24/kernels.hpp"

namespace g24 {

Graph::Graph(int n)
    : n_(n), words_((n + 63) / 64), rows_(static_cast<std::size_t>(n) * static_cast<std::size_t>((n + 63) / 64)) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
}

void Graph::add_edge(int i, int j) {
    if (i == j) throw std::invalid_argument("Graph::add_edge: loops are not allowed");
    if (adjacent(i, j)) return;
    toggle_bit(i, j);
    toggle_bit(j, i);
}

void Graph::flip_edge(int i, int j) {
    if (i == j) throw std::invalid_argument("Graph::flip_edge: loops are not allowed");
    toggle_bit(i, j);
    toggle_bit(j, i);
}

int Graph::degree(int i) const {
    int d = 0;
    for (Word w : row(i)) d += std::popcount(w);
    return d;
}

long Graph::edge_count() const {
    long twice = 0;
    for (int i = 0; i < n_; ++i) twice += degree(i);
    return twice / 2;
}

std::vector<int> Graph::neighbors(int i) const {
    std::vector<int> out;
    for (int j = 0; j < n_; ++j)
        if (adjacent(i, j)) out.push_back(j);
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (adjacent(i, j)) out.emplace_back(i, j);
    return out;
}

Graph Graph::induced(std::span<const int> vertices) const {
    const int m = static_cast<int>(vertices.size());
    Graph sub(m);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (adjacent(vertices[static_cast<std::size_t>(a)], vertices[static_cast<std::size_t>(b)])) sub.add_edge(a, b);
    return sub;
}

Graph build_graph(std::span<const IsoSet> isosets) {
    if (static_cast<int>(isosets.size()) != kVertexCount)
        throw std::invalid_argument("build_graph: expected 416 iso-sets, got " + std::to_string(isosets.size()));
    for (std::size_t i = 0; i < isosets.size(); ++i)
        if (isosets[i].size() != kIsoSetSize)
            throw std::invalid_argument("build_graph: iso-set " + std::to_string(i) + " has " +
                                        std::to_string(isosets[i].size()) + " members");
    const int n = kVertexCount;
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (isosets[static_cast<std::size_t>(i)].intersection_size(isosets[static_cast<std::size_t>(j)]) ==
                kAdjacentIntersection)
                g.add_edge(i, j);
    return g;
}

std::vector<long> intersection_distribution(std::span<const IsoSet> isosets) {
    std::vector<long> hist(IsoSet::kMaxIndex + 1, 0);
    for (std::size_t i = 0; i < isosets.size(); ++i)
        for (std::size_t j = i + 1; j < isosets.size(); ++j) ++hist[static_cast<std::size_t>(isosets[i].intersection_size(isosets[j]))];
    while (hist.size() > 1 && hist.back() == 0) hist.pop_back();
    return hist;
}

SrgParams verify_srg(const Graph& g, Exec exec) {
    const int n = g.size();
    if (n < 2) throw VerificationFailure("verify_srg: graph too small");
    // Pair counts first so that a single corrupted edge is reported as a pair.
    const auto hist = kernels::common_neighbor_histogram(g, exec);
    auto constant = [](const std::map<long, kernels::Tally>& m, const char* what) -> int {
        if (m.empty()) return 0;
        if (m.size() == 1) return static_cast<int>(m.begin()->first);
        // The most frequent value is the reference; the witness is the first
        // pair carrying any other value.
        auto by_first_pair = [](const auto& a, const auto& b) { return a.second.first < b.second.first; };
        auto ref = std::max_element(m.begin(), m.end(),
                                    [](const auto& a, const auto& b) { return a.second.count < b.second.count; });
        auto off = m.end();
        for (auto it = m.begin(); it != m.end(); ++it)
            if (it != ref && (off == m.end() || by_first_pair(*it, *off))) off = it;
        std::ostringstream msg;
        msg << what << " not constant: pair (" << off->second.first.first << "," << off->second.first.second
            << ") has " << off->first << " common neighbours, " << ref->second.count << " pairs have "
            << ref->first;
        throw VerificationFailure(msg.str());
    };
    SrgParams p;
    p.lambda = constant(hist.on_edges, "lambda");
    p.mu = constant(hist.on_nonedges, "mu");

    const int k = g.degree(0);
    for (int i = 1; i < n; ++i)
        if (g.degree(i) != k) {
            std::ostringstream msg;
            msg << "degree of vertex " << i << " is " << g.degree(i) << ", vertex 0 has " << k;
            throw VerificationFailure(msg.str());
        }
    p.v = n;
    p.k = k;
    return p;
}

CheckResult verify_srg_identity(const Graph& g, const SrgParams& p, Exec exec) {
    if (g.size() != p.v) return CheckResult::fail("vertex count differs from v");
    if (auto bad = kernels::first_identity_mismatch(g, p, exec)) {
        std::ostringstream msg;
        msg << "(A^2)[" << bad->i << "][" << bad->j << "] = " << bad->actual << ", expected " << bad->expected;
        return CheckResult::fail(msg.str());
    }
    return CheckResult::pass();
}

std::string to_string(const Rational& r) {
    return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

namespace {

Rational make_rational(long num, long den) {
    if (den < 0) num = -num, den = -den;
    const long d = std::gcd(num, den);
    return {num / d, den / d};
}

long exact_isqrt(long x) {
    if (x < 0) return -1;
    long r = 0;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r * r == x ? r : -1;
}

}  // namespace

Spectrum srg_spectrum(const SrgParams& p) {
    if (!p.feasible()) throw std::domain_error("srg_spectrum: parameters violate k(k-lambda-1) = (v-k-1)mu");
    const long diff = p.lambda - p.mu;
    const long disc = diff * diff + 4L * (p.k - p.mu);
    const long root = exact_isqrt(disc);
    if (root <= 0) throw std::domain_error("srg_spectrum: discriminant is not a positive perfect square");

    const long num = (p.v - 1L) * root - (2L * p.k + (p.v - 1L) * diff);
    const long den = 2 * root;
    if (num % den != 0) throw std::domain_error("srg_spectrum: multiplicity f is not integral");

    Spectrum s;
    s.degree = p.k;
    s.r = make_rational(diff + root, 2);
    s.s = make_rational(diff - root, 2);
    s.f = num / den;
    s.g_mult = p.v - 1L - s.f;
    if (s.f < 0 || s.g_mult < 0) throw std::domain_error("srg_spectrum: negative multiplicity");
    return s;
}

std::vector<int> Partition::b_union() const {
    std::vector<int> out;
    out.insert(out.end(), b1.begin(), b1.end());
    out.insert(out.end(), b2.begin(), b2.end());
    out.insert(out.end(), b3.begin(), b3.end());
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<int>& Partition::component(int h) const {
    switch (h) {
        case 1: return b1;
        case 2: return b2;
        case 3: return b3;
        default: throw std::out_of_range("Partition::component: h must be 1, 2 or 3");
    }
}

std::vector<std::vector<int>> components(const Graph& g, std::span<const int> vertices) {
    std::vector<char> inside(static_cast<std::size_t>(g.size()), 0);
    for (int v : vertices) inside[static_cast<std::size_t>(v)] = 1;
    std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
    std::vector<int> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());

    std::vector<std::vector<int>> out;
    for (int start : sorted) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> comp{start};
        seen[static_cast<std::size_t>(start)] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (int w : g.neighbors(comp[head]))
                if (inside[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

Partition split_b_c(const Graph& g, std::span<const IsoSet> isosets, int anchor) {
    if (static_cast<int>(isosets.size()) != g.size())
        throw std::invalid_argument("split_b_c: iso-set count differs from vertex count");
    Partition part;
    part.anchor = anchor;
    part.label.assign(static_cast<std::size_t>(g.size()), 0);
    std::vector<int> b;
    for (int i = 0; i < g.size(); ++i)
        (isosets[static_cast<std::size_t>(i)].contains(anchor) ? b : part.c).push_back(i);

    auto comps = components(g, b);
    if (comps.size() != 3) {
        throw VerificationFailure("split_b_c: B has " + std::to_string(comps.size()) + " components, expected 3");
    }
    for (std::size_t h = 0; h < 3; ++h)
        if (comps[h].size() != 32)
            throw VerificationFailure("split_b_c: component B_" + std::to_string(h + 1) + " has " +
                                      std::to_string(comps[h].size()) + " vertices, expected 32");
    part.b1 = std::move(comps[0]);
    part.b2 = std::move(comps[1]);
    part.b3 = std::move(comps[2]);
    for (int h = 1; h <= 3; ++h)
        for (int v : part.component(h)) part.label[static_cast<std::size_t>(v)] = h;
    return part;
}

std::array<int, 3> component_counts(const Graph& g, const Partition& part, int i) {
    std::array<int, 3> counts{};
    for (int h = 1; h <= 3; ++h)
        for (int v : part.component(h))
            if (g.adjacent(i, v)) ++counts[static_cast<std::size_t>(h - 1)];
    return counts;
}

CheckResult verify_claim1(const Graph& g, const Partition& part) {
    for (int i = 0; i < g.size(); ++i) {
        const auto counts = component_counts(g, part, i);
        const int own = part.label[static_cast<std::size_t>(i)];
        for (int h = 1; h <= 3; ++h) {
            const int expected = own == 0 ? 8 : (own == h ? 20 : 0);
            const int actual = counts[static_cast<std::size_t>(h - 1)];
            if (actual != expected) {
                std::ostringstream msg;
                msg << "vertex " << i << " has " << actual << " neighbours in B_" << h << ", expected " << expected;
                return CheckResult::fail(msg.str());
            }
        }
    }
    return CheckResult::pass();
}

}  // namespace g24
