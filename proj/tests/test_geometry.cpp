#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "g24/geometry.hpp"

using namespace g24;

namespace {

Triple triple(unsigned a, unsigned b, unsigned c) { return {FieldElement{a}, FieldElement{b}, FieldElement{c}}; }

Triple scaled(const Triple& t, FieldElement s) { return {s * t[0], s * t[1], s * t[2]}; }

const HermitianPlane& plane() {
    static const HermitianPlane p;
    return p;
}

}  // namespace

TEST_CASE("hermitian form examples") {
    CHECK(hermitian_form(triple(1, 0, 0), triple(1, 0, 0)) == gf16::zero());
    CHECK(hermitian_form(triple(0, 1, 0), triple(0, 1, 0)) == gf16::one());
    CHECK(hermitian_form(triple(1, 0, 0), triple(0, 0, 1)) == gf16::one());
    CHECK(hermitian_form(triple(0, 0, 1), triple(1, 0, 0)) == gf16::one());
}

TEST_CASE("hermitian symmetry over all pairs of triples") {
    long violations = 0;
    long orthogonality_asymmetric = 0;
    for (unsigned a = 0; a < 4096; ++a) {
        const Triple x = triple(a >> 8, a >> 4, a);
        for (unsigned b = 0; b < 4096; ++b) {
            const Triple y = triple(b >> 8, b >> 4, b);
            const FieldElement xy = hermitian_form(x, y);
            const FieldElement yx = hermitian_form(y, x);
            violations += xy != gf16::conj(yx);
            orthogonality_asymmetric += xy.is_zero() != yx.is_zero();
        }
    }
    CHECK(violations == 0);
    CHECK(orthogonality_asymmetric == 0);
}

TEST_CASE("normalization") {
    CHECK_FALSE(normalize(triple(0, 0, 0)).has_value());
    CHECK(normalize(triple(2, 0, 0))->coords == triple(1, 0, 0));
    CHECK(is_normalized(triple(1, 7, 3)));
    CHECK_FALSE(is_normalized(triple(2, 0, 0)));
    CHECK_FALSE(is_normalized(triple(0, 0, 0)));
    for (const auto& p : plane().points())
        for (unsigned s = 1; s < 16; ++s) CHECK(normalize(scaled(p.coords, FieldElement{s}))->coords == p.coords);
}

TEST_CASE("point census") {
    const auto& pl = plane();
    REQUIRE(pl.points().size() == 273);
    CHECK(pl.isotropic().size() == 65);
    CHECK(pl.nonisotropic().size() == 208);
    CHECK(pl.isotropic().size() + pl.nonisotropic().size() == pl.points().size());

    // Oracle: count normalized nonzero triples directly.
    int normalized = 0, isotropic = 0;
    for (unsigned e = 1; e < 4096; ++e) {
        const Triple t = triple(e >> 8, e >> 4, e);
        if (!is_normalized(t)) continue;
        ++normalized;
        isotropic += hermitian_form(t, t).is_zero();
        CHECK(pl.index_of(ProjectivePoint{t}) >= 0);
    }
    CHECK(normalized == 273);
    CHECK(isotropic == 65);

    for (std::size_t i = 1; i < pl.points().size(); ++i)
        CHECK(pl.points()[i - 1].encoding() < pl.points()[i].encoding());
    for (int k = 1; k <= 65; ++k) CHECK(pl.isotropic_number(pl.isotropic()[static_cast<std::size_t>(k - 1)]) == k);
    for (int idx : pl.nonisotropic()) CHECK(pl.isotropic_number(idx) == 0);
    CHECK(pl.index_of(ProjectivePoint{triple(2, 0, 0)}) == -1);
    CHECK(pl.point(pl.isotropic()[0]).coords == triple(0, 0, 1));
}

TEST_CASE("isotropy does not depend on the representative") {
    for (const auto& p : plane().points()) {
        const bool iso = is_isotropic(p);
        for (unsigned s = 1; s < 16; ++s) {
            const Triple t = scaled(p.coords, FieldElement{s});
            CHECK(hermitian_form(t, t).is_zero() == iso);
            CHECK(hermitian_form(t, t) == gf16::norm(FieldElement{s}) * hermitian_form(p, p));
        }
    }
}

TEST_CASE("lines") {
    const auto& pl = plane();
    CHECK_THROWS_AS(pl.line_points(0, 0), std::domain_error);

    const auto line = pl.line_points(0, 1);
    CHECK(line.size() == 17);
    CHECK(std::is_sorted(line.begin(), line.end()));
    CHECK(std::binary_search(line.begin(), line.end(), 0));
    CHECK(std::binary_search(line.begin(), line.end(), 1));

    std::set<std::vector<int>> through_pairs;
    for (int a = 0; a < 273; ++a)
        for (int b = a + 1; b < 273; ++b) through_pairs.insert(pl.line_points(a, b));
    CHECK(through_pairs.size() == 273);

    // Oracle: lines as kernels of the 273 dual vectors under the bilinear dot product.
    std::set<std::vector<int>> dual;
    for (const auto& l : pl.points()) {
        std::vector<int> pts;
        for (int i = 0; i < 273; ++i) {
            const auto& c = pl.point(i).coords;
            if ((l.coords[0] * c[0] + l.coords[1] * c[1] + l.coords[2] * c[2]).is_zero()) pts.push_back(i);
        }
        CHECK(pts.size() == 17);
        dual.insert(pts);
    }
    const auto lines = pl.enumerate_lines();
    CHECK(std::set<std::vector<int>>(lines.begin(), lines.end()) == dual);
    CHECK(through_pairs == dual);
    CHECK(std::is_sorted(lines.begin(), lines.end()));
}

TEST_CASE("every line is tangent or secant to the unital") {
    const auto& pl = plane();
    std::map<int, int> by_meet;
    for (const auto& line : pl.enumerate_lines()) {
        int meet = 0;
        for (int i : line) meet += pl.isotropic_number(i) != 0;
        ++by_meet[meet];
    }
    CHECK(by_meet == std::map<int, int>{{1, 65}, {5, 208}});
}

TEST_CASE("isotropic points on the line through an orthogonal nonisotropic pair") {
    const auto& pl = plane();
    const auto non = pl.nonisotropic();
    long pairs = 0;
    for (std::size_t x = 0; x < non.size(); ++x)
        for (std::size_t y = x + 1; y < non.size(); ++y) {
            if (!hermitian_form(pl.point(non[x]), pl.point(non[y])).is_zero()) continue;
            ++pairs;
            const auto iso = pl.isotropic_on_line(non[x], non[y]);
            CHECK(iso.size() == 5);
            CHECK(std::is_sorted(iso.begin(), iso.end()));
        }
    CHECK(pairs == 208 * 12 / 2);

    CHECK_THROWS_AS(pl.isotropic_on_line(pl.isotropic()[0], non[0]), std::domain_error);
    int a = non[0], b = -1;
    for (int c : non)
        if (c != a && !hermitian_form(pl.point(a), pl.point(c)).is_zero()) {
            b = c;
            break;
        }
    REQUIRE(b >= 0);
    CHECK_THROWS_AS(pl.isotropic_on_line(a, b), std::domain_error);
}

TEST_CASE("orthogonal bases and their iso-sets") {
    const auto& pl = plane();
    const auto bases = pl.enumerate_bases();
    REQUIRE(bases.size() == 416);

    std::vector<int> per_point(208, 0);
    std::set<IsoSet> distinct;
    for (const auto& b : bases) {
        CHECK(std::is_sorted(b.points.begin(), b.points.end()));
        std::vector<int> idx;
        for (int k : b.points) {
            ++per_point[static_cast<std::size_t>(k)];
            idx.push_back(pl.nonisotropic()[static_cast<std::size_t>(k)]);
        }
        for (int u = 0; u < 3; ++u)
            for (int v = u + 1; v < 3; ++v)
                CHECK(hermitian_form(pl.point(idx[static_cast<std::size_t>(u)]),
                                     pl.point(idx[static_cast<std::size_t>(v)]))
                          .is_zero());

        const auto s01 = pl.isotropic_on_line(idx[0], idx[1]);
        const auto s02 = pl.isotropic_on_line(idx[0], idx[2]);
        const auto s12 = pl.isotropic_on_line(idx[1], idx[2]);
        std::set<int> sides(s01.begin(), s01.end());
        sides.insert(s02.begin(), s02.end());
        sides.insert(s12.begin(), s12.end());
        CHECK(sides.size() == 15);  // the three fragments are disjoint
        CHECK(b.isoset.size() == 15);
        CHECK(b.isoset.members() == std::vector<int>(sides.begin(), sides.end()));
        distinct.insert(b.isoset);
    }
    CHECK(std::all_of(per_point.begin(), per_point.end(), [](int n) { return n == 6; }));
    CHECK(distinct.size() == 416);
}

TEST_CASE("IsoSet") {
    IsoSet s;
    s.insert(1);
    s.insert(64);
    s.insert(65);
    CHECK(s.size() == 3);
    CHECK(s.contains(64));
    CHECK_FALSE(s.contains(2));
    CHECK(s.members() == std::vector<int>{1, 64, 65});
    CHECK_THROWS_AS(s.insert(0), std::out_of_range);
    CHECK_THROWS_AS(s.insert(66), std::out_of_range);
    IsoSet t;
    t.insert(64);
    t.insert(2);
    CHECK(s.intersection_size(t) == 1);
    CHECK(s.intersect(t).members() == std::vector<int>{64});
}
