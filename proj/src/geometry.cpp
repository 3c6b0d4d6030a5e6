#include "g24/geometry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace g24 {

ProjectivePoint ProjectivePoint::from_encoding(unsigned enc) {
    return ProjectivePoint{{FieldElement{enc >> 8}, FieldElement{enc >> 4}, FieldElement{enc}}};
}

std::optional<ProjectivePoint> normalize(const Triple& t) {
    for (const FieldElement& c : t) {
        if (c.is_zero()) continue;
        const FieldElement scale = gf16::inv(c);
        return ProjectivePoint{{t[0] * scale, t[1] * scale, t[2] * scale}};
    }
    return std::nullopt;
}

bool is_normalized(const Triple& t) {
    for (const FieldElement& c : t)
        if (!c.is_zero()) return c == gf16::one();
    return false;
}

FieldElement hermitian_form(const Triple& a, const Triple& b) {
    return a[0] * gf16::conj(b[2]) + a[1] * gf16::conj(b[1]) + a[2] * gf16::conj(b[0]);
}

void IsoSet::insert(int index) {
    if (index < 1 || index > kMaxIndex) throw std::out_of_range("IsoSet::insert: index outside 1..65");
    const int bit = index - 1;
    words_[static_cast<std::size_t>(bit / 64)] |= std::uint64_t{1} << (bit % 64);
}

bool IsoSet::contains(int index) const {
    if (index < 1 || index > kMaxIndex) return false;
    const int bit = index - 1;
    return (words_[static_cast<std::size_t>(bit / 64)] >> (bit % 64)) & 1u;
}

std::vector<int> IsoSet::members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int idx = 1; idx <= kMaxIndex; ++idx)
        if (contains(idx)) out.push_back(idx);
    return out;
}

HermitianPlane::HermitianPlane() : index_by_encoding_(1u << 12, -1) {
    for (unsigned enc = 1; enc < (1u << 12); ++enc) {
        const ProjectivePoint p = ProjectivePoint::from_encoding(enc);
        if (!is_normalized(p.coords)) continue;
        index_by_encoding_[enc] = static_cast<int>(points_.size());
        points_.push_back(p);
    }
    iso_number_.assign(points_.size(), 0);
    for (int i = 0; i < static_cast<int>(points_.size()); ++i) {
        if (is_isotropic(points_[static_cast<std::size_t>(i)])) {
            isotropic_.push_back(i);
            iso_number_[static_cast<std::size_t>(i)] = static_cast<int>(isotropic_.size());
        } else {
            nonisotropic_.push_back(i);
        }
    }
}

std::vector<int> HermitianPlane::line_points(int a, int b) const {
    if (a == b) throw std::domain_error("line_points: points must be distinct");
    const Triple& pa = point(a).coords;
    const Triple& pb = point(b).coords;
    std::vector<int> out{a};
    for (unsigned l = 0; l < gf16::kOrder; ++l) {
        const FieldElement lambda{l};
        const Triple t{lambda * pa[0] + pb[0], lambda * pa[1] + pb[1], lambda * pa[2] + pb[2]};
        out.push_back(index_of(*normalize(t)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> HermitianPlane::isotropic_on_line(int a, int b) const {
    const ProjectivePoint& pa = point(a);
    const ProjectivePoint& pb = point(b);
    if (is_isotropic(pa) || is_isotropic(pb))
        throw std::domain_error("isotropic_on_line: endpoints must be nonisotropic");
    if (!hermitian_form(pa, pb).is_zero())
        throw std::domain_error("isotropic_on_line: endpoints must be orthogonal");
    std::vector<int> out;
    for (int idx : line_points(a, b))
        if (int num = isotropic_number(idx); num != 0) out.push_back(num);
    return out;
}

std::vector<std::vector<int>> HermitianPlane::enumerate_lines() const {
    std::set<std::vector<int>> lines;
    const int n = static_cast<int>(points_.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) lines.insert(line_points(a, b));
    return {lines.begin(), lines.end()};
}

std::vector<Basis> HermitianPlane::enumerate_bases() const {
    const auto& nis = nonisotropic_;
    const int m = static_cast<int>(nis.size());
    auto orth = [&](int i, int j) {
        return hermitian_form(point(nis[static_cast<std::size_t>(i)]), point(nis[static_cast<std::size_t>(j)])).is_zero();
    };
    std::vector<Basis> bases;
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            if (!orth(a, b)) continue;
            for (int c = b + 1; c < m; ++c) {
                if (!orth(a, c) || !orth(b, c)) continue;
                Basis basis{{a, b, c}, {}};
                const int pa = nis[static_cast<std::size_t>(a)];
                const int pb = nis[static_cast<std::size_t>(b)];
                const int pc = nis[static_cast<std::size_t>(c)];
                for (auto [u, v] : {std::pair{pa, pb}, std::pair{pa, pc}, std::pair{pb, pc}})
                    for (int num : isotropic_on_line(u, v)) basis.isoset.insert(num);
                bases.push_back(basis);
            }
        }
    }
    return bases;
}

}  // namespace g24
