#pragma once

// Arithmetic in GF(16) = GF(2)[x] / (x^4 + x + 1).
//
// Elements are 4-bit coefficient vectors: bit i holds the coefficient of x^i.
// Multiplication goes through a 16x16 table that is built once from schoolbook
// carry-less multiplication and reduction; nothing is hand-entered.

#include <array>
#include <cstdint>
#include <ostream>

#include "g24/check.hpp"

namespace g24 {

/// Reduction polynomial x^4 + x + 1, encoded with bit i = coefficient of x^i.
inline constexpr unsigned kGf16Modulus = 0x13;

class FieldElement {
public:
    constexpr FieldElement() = default;
    /// Takes the low four bits of `v`.
    constexpr explicit FieldElement(unsigned v) : value_(static_cast<std::uint8_t>(v & 0xFu)) {}

    constexpr unsigned value() const { return value_; }
    constexpr bool is_zero() const { return value_ == 0; }

    friend constexpr bool operator==(FieldElement, FieldElement) = default;
    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

private:
    std::uint8_t value_ = 0;
};

std::ostream& operator<<(std::ostream& os, FieldElement a);

namespace gf16 {

inline constexpr unsigned kOrder = 16;

/// Polynomial product of two 4-bit encodings reduced modulo x^4 + x + 1,
/// computed bit by bit. Reference path; `mul` uses the cached table.
constexpr unsigned schoolbook_mul(unsigned a, unsigned b) {
    unsigned product = 0;
    for (unsigned bit = 0; bit < 4; ++bit)
        if (b & (1u << bit)) product ^= a << bit;
    for (int deg = 6; deg >= 4; --deg)
        if (product & (1u << deg)) product ^= kGf16Modulus << (deg - 4);
    return product & 0xFu;
}

struct Tables {
    std::array<std::array<std::uint8_t, 16>, 16> mul{};
    std::array<std::uint8_t, 16> inv{};
    std::array<std::uint8_t, 16> conj{};
    /// exp[i] = g^i for i in 0..14; log[a] undefined for a = 0.
    std::array<std::uint8_t, 15> exp{};
    std::array<std::uint8_t, 16> log{};
    unsigned generator = 0;
};

/// Lazily built, immutable afterwards.
const Tables& tables();

constexpr FieldElement zero() { return FieldElement{0}; }
constexpr FieldElement one() { return FieldElement{1}; }

constexpr FieldElement add(FieldElement a, FieldElement b) { return FieldElement{a.value() ^ b.value()}; }

inline FieldElement mul(FieldElement a, FieldElement b) { return FieldElement{tables().mul[a.value()][b.value()]}; }

/// Throws std::domain_error for a = 0.
FieldElement inv(FieldElement a);

/// The order-2 automorphism a -> a^4, fixing the subfield GF(4).
inline FieldElement conj(FieldElement a) { return FieldElement{tables().conj[a.value()]}; }

FieldElement pow(FieldElement a, unsigned e);

/// Smallest encoding whose powers exhaust the 15 nonzero elements.
inline FieldElement generator() { return FieldElement{tables().generator}; }

/// a * conj(a) = a^5, which always lies in GF(4).
inline FieldElement norm(FieldElement a) { return mul(a, conj(a)); }

/// Exhaustive check of the field axioms, the conjugation automorphism and
/// the cached tables against schoolbook multiplication.
CheckResult verify_field_axioms();

}  // namespace gf16

inline FieldElement operator+(FieldElement a, FieldElement b) { return gf16::add(a, b); }
inline FieldElement operator*(FieldElement a, FieldElement b) { return gf16::mul(a, b); }

}  // namespace g24
