#include "g24/euclid.hpp"

#include <algorithm>
#include <sstream>

namespace g24 {

ReprMatrix::ReprMatrix(const Graph& g, int diagonal)
    : n_(g.size()), diagonal_(diagonal), entries_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0) {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)] =
                i == j ? diagonal : (g.adjacent(i, j) ? 1 : 0);
}

ReprMatrix build_representation(const Graph& g) { return ReprMatrix(g, 4); }

long pair_distance_sq(const ReprMatrix& y, int i, int j) {
    if (i == j) throw std::domain_error("pair_distance_sq: i and j must differ");
    const auto a = y.column(i);
    const auto b = y.column(j);
    long sum = 0;
    for (std::size_t t = 0; t < a.size(); ++t) {
        const long d = a[t] - b[t];
        sum += d * d;
    }
    return sum;
}

long dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    long s = 0;
    for (std::size_t t = 0; t < a.size(); ++t) s += a[t] * b[t];
    return s;
}

long dot(std::span<const std::int64_t> a, std::span<const std::int32_t> b) {
    long s = 0;
    for (std::size_t t = 0; t < a.size(); ++t) s += a[t] * b[t];
    return s;
}

std::pair<ContrastVector, ContrastVector> build_contrasts(const Partition& part) {
    const std::size_t n = part.label.size();
    ContrastVector p{ContrastVector::Role::p, std::vector<std::int64_t>(n, 0)};
    ContrastVector q{ContrastVector::Role::q, std::vector<std::int64_t>(n, 0)};
    for (int v : part.b1) q.entries[static_cast<std::size_t>(v)] = 2;
    for (int v : part.b2) {
        p.entries[static_cast<std::size_t>(v)] = 1;
        q.entries[static_cast<std::size_t>(v)] = -1;
    }
    for (int v : part.b3) {
        p.entries[static_cast<std::size_t>(v)] = -1;
        q.entries[static_cast<std::size_t>(v)] = -1;
    }
    return {std::move(p), std::move(q)};
}

CheckResult verify_inner_products(const ReprMatrix& y, const ContrastVector& p, const ContrastVector& q,
                                  const Partition& part) {
    static constexpr const char* kNames[] = {"C", "B_1", "B_2", "B_3"};
    for (int i = 0; i < y.size(); ++i) {
        const int label = part.label[static_cast<std::size_t>(i)];
        // kExpected* are ordered B1, B2, B3, C.
        const std::size_t slot = label == 0 ? 3 : static_cast<std::size_t>(label - 1);
        const long pv = dot(p.entries, y.column(i));
        const long qv = dot(q.entries, y.column(i));
        if (pv != kExpectedP[slot] || qv != kExpectedQ[slot]) {
            std::ostringstream msg;
            msg << "vertex " << i << " in " << kNames[label] << ": <p,y> = " << pv << " (expected "
                << kExpectedP[slot] << "), <q,y> = " << qv << " (expected " << kExpectedQ[slot] << ")";
            return CheckResult::fail(msg.str());
        }
    }
    if (dot(p.entries, q.entries) != 0) return CheckResult::fail("<p,q> != 0");
    return CheckResult::pass();
}

IntMatrix difference_matrix(const ReprMatrix& y, std::span<const int> set, int base) {
    IntMatrix m(static_cast<int>(set.size()) - 1, y.size());
    const auto b = y.column(base);
    int r = 0;
    for (int i : set) {
        if (i == base) continue;
        const auto col = y.column(i);
        for (int t = 0; t < y.size(); ++t) m(r, t) = col[static_cast<std::size_t>(t)] - b[static_cast<std::size_t>(t)];
        ++r;
    }
    return m;
}

IntMatrix column_matrix(const ReprMatrix& y, std::span<const int> set) {
    IntMatrix m(static_cast<int>(set.size()), y.size());
    int r = 0;
    for (int i : set) {
        const auto col = y.column(i);
        for (int t = 0; t < y.size(); ++t) m(r, t) = col[static_cast<std::size_t>(t)];
        ++r;
    }
    return m;
}

std::string to_string(DimensionCertificate::Status s) {
    switch (s) {
        case DimensionCertificate::Status::certified: return "certified";
        case DimensionCertificate::Status::inconclusive: return "inconclusive";
        case DimensionCertificate::Status::failed: return "failed";
    }
    return "failed";
}

namespace {

// Index of the first member of `set` whose inner product with v is nonzero, or -1.
int first_non_orthogonal(const ReprMatrix& y, const ContrastVector& v, std::span<const int> set) {
    for (int i : set)
        if (dot(v.entries, y.column(i)) != 0) return i;
    return -1;
}

long entry_sum(const ContrastVector& v) {
    long s = 0;
    for (auto e : v.entries) s += e;
    return s;
}

void finish(DimensionCertificate& cert) {
    using Status = DimensionCertificate::Status;
    std::ostringstream msg;
    if (cert.upper_bound < 0) {
        cert.status = Status::failed;
        msg << "upper-bound argument did not verify";
    } else if (cert.lower_bound > cert.upper_bound) {
        cert.status = Status::failed;
        msg << "modular rank " << cert.lower_bound << " exceeds upper bound " << cert.upper_bound;
    } else if (cert.lower_bound < cert.upper_bound) {
        cert.status = Status::inconclusive;
        msg << "modular rank " << cert.lower_bound << " below upper bound " << cert.upper_bound << " for primes";
        for (const auto& pr : cert.ranks) msg << ' ' << pr.prime;
    } else if (cert.lower_bound != cert.expected_dim) {
        cert.status = Status::failed;
        msg << "dimension " << cert.lower_bound << " differs from expected " << cert.expected_dim;
    } else {
        cert.status = Status::certified;
        msg << "affine dimension " << cert.lower_bound;
    }
    if (cert.status == Status::certified) {
        for (const auto& pr : cert.ranks)
            if (pr.column_rank != pr.difference_rank + 1) {
                cert.status = Status::failed;
                msg.str("");
                msg << "column rank " << pr.column_rank << " != difference rank " << pr.difference_rank
                    << " + 1 modulo " << pr.prime;
            }
        if (!cert.base_point_checked) {
            cert.status = Status::failed;
            msg.str("");
            msg << "difference rank depends on the base point";
        }
    }
    cert.detail = msg.str();
}

}  // namespace

std::vector<DimensionCertificate> certified_dimension_chain(const ReprMatrix& y, const ContrastVector& p,
                                                           const ContrastVector& q, const Partition& part,
                                                           const Spectrum& spectrum,
                                                           std::span<const std::uint64_t> primes, Exec exec) {
    std::vector<int> all(static_cast<std::size_t>(y.size()));
    for (int i = 0; i < y.size(); ++i) all[static_cast<std::size_t>(i)] = i;
    std::vector<int> cb1 = part.c;
    cb1.insert(cb1.end(), part.b1.begin(), part.b1.end());
    std::sort(cb1.begin(), cb1.end());
    const std::vector<int>& c = part.c;

    struct Level {
        const char* name;
        const std::vector<int>* set;
        int expected;
    };
    const Level levels[] = {{"V", &all, 65}, {"C∪B1", &cb1, 64}, {"C", &c, 63}};

    // Upper bounds on the linear rank, chained level by level; -1 marks a
    // broken argument.
    std::vector<std::vector<std::string>> arguments(3);
    std::array<int, 3> linear_upper{-1, -1, -1};

    // All columns lie on <u, x> = k + diagonal with u the all-ones vector.
    const long column_sum = spectrum.degree + y.diagonal();
    bool on_hyperplane = column_sum != 0;
    for (int i = 0; i < y.size() && on_hyperplane; ++i) {
        long s = 0;
        for (auto e : y.column(i)) s += e;
        on_hyperplane = s == column_sum;
    }
    const bool s_matches = spectrum.s == Rational{-y.diagonal(), 1};
    const bool r_distinct = spectrum.r != spectrum.s && spectrum.degree * spectrum.s.den != spectrum.s.num;
    if (on_hyperplane && s_matches && r_distinct) {
        linear_upper[0] = static_cast<int>(1 + spectrum.f);
        std::ostringstream a;
        a << "verified SRG identity gives eigenvalues k (x1), r = " << to_string(spectrum.r) << " (x" << spectrum.f
          << "), s = " << to_string(spectrum.s) << " (x" << spectrum.g_mult << "); y = A - sI has rank 1 + f = "
          << 1 + spectrum.f;
        arguments[0].push_back(a.str());
        std::ostringstream h;
        h << "every y_i satisfies <u, y_i> = " << column_sum << " != 0, so affine dimension = linear rank - 1";
        arguments[0].push_back(h.str());
    } else {
        arguments[0].push_back("spectral bound unavailable: y is not A - sI on a hyperplane avoiding the origin");
    }

    const bool p_ok = first_non_orthogonal(y, p, cb1) < 0 && entry_sum(p) == 0;
    const int p_witness = first_non_orthogonal(y, p, all);
    if (linear_upper[0] >= 0 && p_ok && p_witness >= 0) {
        linear_upper[1] = linear_upper[0] - 1;
        std::ostringstream a;
        a << "p is orthogonal to every y_i in C∪B1 and to u, but <p, y_" << p_witness
          << "> = " << dot(p.entries, y.column(p_witness)) << " != 0: rank drops by 1";
        arguments[1].push_back(a.str());
    } else {
        arguments[1].push_back("orthogonal witness p did not verify");
    }

    const bool q_ok = first_non_orthogonal(y, q, c) < 0 && entry_sum(q) == 0 && dot(p.entries, q.entries) == 0;
    const int q_witness = first_non_orthogonal(y, q, cb1);
    if (linear_upper[1] >= 0 && q_ok && q_witness >= 0) {
        linear_upper[2] = linear_upper[1] - 1;
        std::ostringstream a;
        a << "q is orthogonal to every y_i in C, to u and to p, but <q, y_" << q_witness
          << "> = " << dot(q.entries, y.column(q_witness)) << " != 0: rank drops by 1";
        arguments[2].push_back(a.str());
    } else {
        arguments[2].push_back("orthogonal witness q did not verify");
    }

    std::vector<DimensionCertificate> certs;
    for (std::size_t lv = 0; lv < 3; ++lv) {
        const Level& level = levels[lv];
        const auto& set = *level.set;
        DimensionCertificate cert;
        cert.set = level.name;
        cert.points = static_cast<int>(set.size());
        cert.expected_dim = level.expected;
        cert.upper_bound = linear_upper[lv] < 0 ? -1 : linear_upper[lv] - 1;
        for (std::size_t up = 0; up <= lv; ++up)
            cert.upper_bound_argument.insert(cert.upper_bound_argument.end(), arguments[up].begin(), arguments[up].end());

        const IntMatrix diffs = difference_matrix(y, set, set.front());
        const IntMatrix cols = column_matrix(y, set);
        for (std::uint64_t prime : primes) {
            PrimeRank pr{prime, rank_mod_prime(diffs, prime, exec), rank_mod_prime(cols, prime, exec)};
            cert.lower_bound = std::max(cert.lower_bound, pr.difference_rank);
            cert.linear_rank = std::max(cert.linear_rank, pr.column_rank);
            cert.ranks.push_back(pr);
        }
        if (!primes.empty() && set.size() > 1) {
            const int alt = rank_mod_prime(difference_matrix(y, set, set[1]), primes.front(), exec);
            cert.base_point_checked = alt == cert.ranks.front().difference_rank;
        }
        finish(cert);
        certs.push_back(std::move(cert));
    }
    return certs;
}

}  // namespace g24
