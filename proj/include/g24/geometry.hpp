#pragma once

// PG(2,16) with the Hermitian form H(a,b) = a1*conj(b3) + a2*conj(b2) + a3*conj(b1).
//
// Points are normalized homogeneous triples (first nonzero coordinate 1) and
// are kept in ascending order of their 12-bit encoding a1<<8 | a2<<4 | a3.
// Isotropic points are numbered 1..65 in that same order.

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "g24/gf16.hpp"

namespace g24 {

using Triple = std::array<FieldElement, 3>;

struct ProjectivePoint {
    Triple coords{};

    /// a1<<8 | a2<<4 | a3.
    unsigned encoding() const {
        return coords[0].value() << 8 | coords[1].value() << 4 | coords[2].value();
    }
    static ProjectivePoint from_encoding(unsigned enc);

    friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

/// Scales so the first nonzero coordinate is 1; nullopt for the zero triple.
std::optional<ProjectivePoint> normalize(const Triple& t);

bool is_normalized(const Triple& t);

FieldElement hermitian_form(const Triple& a, const Triple& b);
inline FieldElement hermitian_form(const ProjectivePoint& a, const ProjectivePoint& b) {
    return hermitian_form(a.coords, b.coords);
}
inline bool is_isotropic(const ProjectivePoint& p) { return hermitian_form(p, p).is_zero(); }

/// Bit-packed subset of the isotropic indices {1..65}.
class IsoSet {
public:
    static constexpr int kMaxIndex = 65;

    void insert(int index);
    bool contains(int index) const;
    int size() const { return std::popcount(words_[0]) + std::popcount(words_[1]); }
    int intersection_size(const IsoSet& other) const {
        return std::popcount(words_[0] & other.words_[0]) + std::popcount(words_[1] & other.words_[1]);
    }
    IsoSet intersect(const IsoSet& other) const {
        IsoSet r;
        r.words_ = {words_[0] & other.words_[0], words_[1] & other.words_[1]};
        return r;
    }
    /// Ascending.
    std::vector<int> members() const;

    friend bool operator==(const IsoSet&, const IsoSet&) = default;
    friend auto operator<=>(const IsoSet&, const IsoSet&) = default;

private:
    std::array<std::uint64_t, 2> words_{};
};

/// Unordered orthogonal triple stored as ascending indices into the
/// nonisotropic point list.
struct Basis {
    std::array<int, 3> points{};
    IsoSet isoset;
};

class HermitianPlane {
public:
    static constexpr int kPointCount = 273;
    static constexpr int kIsotropicCount = 65;
    static constexpr int kNonisotropicCount = 208;
    static constexpr int kLineSize = 17;

    HermitianPlane();

    std::span<const ProjectivePoint> points() const { return points_; }
    const ProjectivePoint& point(int index) const { return points_.at(static_cast<std::size_t>(index)); }
    /// Position of a normalized point in points(); -1 if not normalized.
    int index_of(const ProjectivePoint& p) const { return index_by_encoding_[p.encoding()]; }

    /// Point indices of the isotropic points; entry k-1 has canonical number k.
    std::span<const int> isotropic() const { return isotropic_; }
    std::span<const int> nonisotropic() const { return nonisotropic_; }

    /// Canonical number 1..65 of an isotropic point index, 0 for nonisotropic.
    int isotropic_number(int point_index) const { return iso_number_.at(static_cast<std::size_t>(point_index)); }

    /// The 17 point indices of the line through two distinct points, ascending.
    /// Throws std::domain_error when a == b.
    std::vector<int> line_points(int a, int b) const;

    /// Canonical numbers of the isotropic points on line ab, ascending.
    /// Requires a, b nonisotropic and orthogonal; throws std::domain_error otherwise.
    std::vector<int> isotropic_on_line(int a, int b) const;

    /// All 273 lines, each as its ascending point-index list, in lexicographic order.
    std::vector<std::vector<int>> enumerate_lines() const;

    /// All orthogonal bases in lexicographic order of their index triples.
    std::vector<Basis> enumerate_bases() const;

private:
    std::vector<ProjectivePoint> points_;
    std::vector<int> index_by_encoding_;
    std::vector<int> isotropic_;
    std::vector<int> nonisotropic_;
    std::vector<int> iso_number_;
};

}  // namespace g24
