#include "doctest.h"

#include <array>
#include <set>
#include <stdexcept>

#include "g24/gf16.hpp"

using namespace g24;

namespace {

// Independent product: coefficient lists over GF(2), reduced with x^4 = x + 1.
unsigned oracle_mul(unsigned a, unsigned b) {
    std::array<int, 7> c{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) c[static_cast<std::size_t>(i + j)] ^= ((a >> i) & 1) & ((b >> j) & 1);
    for (int d = 6; d >= 4; --d) {
        if (!c[static_cast<std::size_t>(d)]) continue;
        c[static_cast<std::size_t>(d)] = 0;
        c[static_cast<std::size_t>(d - 3)] ^= 1;  // x^d = x^(d-4) * (x + 1)
        c[static_cast<std::size_t>(d - 4)] ^= 1;
    }
    unsigned out = 0;
    for (int i = 0; i < 4; ++i) out |= static_cast<unsigned>(c[static_cast<std::size_t>(i)]) << i;
    return out;
}

// g^0..g^14 by repeated oracle multiplication.
std::array<unsigned, 15> oracle_powers(unsigned g) {
    std::array<unsigned, 15> p{};
    unsigned x = 1;
    for (auto& e : p) {
        e = x;
        x = oracle_mul(x, g);
    }
    return p;
}

}  // namespace

TEST_CASE("addition is xor of coefficient vectors") {
    CHECK(gf16::add(FieldElement{0b0011}, FieldElement{0b0101}) == FieldElement{0b0110});
    for (unsigned a = 0; a < 16; ++a) {
        CHECK(gf16::add(FieldElement{a}, FieldElement{a}) == gf16::zero());
        CHECK(gf16::add(FieldElement{a}, gf16::zero()) == FieldElement{a});
    }
}

TEST_CASE("multiplication table agrees with an independent polynomial product") {
    for (unsigned a = 0; a < 16; ++a)
        for (unsigned b = 0; b < 16; ++b) {
            INFO("a=" << a << " b=" << b);
            CHECK(gf16::mul(FieldElement{a}, FieldElement{b}).value() == oracle_mul(a, b));
        }
    for (unsigned a = 0; a < 16; ++a) {
        CHECK(gf16::mul(FieldElement{a}, gf16::zero()) == gf16::zero());
        CHECK(gf16::mul(gf16::one(), FieldElement{a}) == FieldElement{a});
    }
}

TEST_CASE("generator has order 15 and its powers match the oracle power table") {
    const FieldElement g = gf16::generator();
    const auto powers = oracle_powers(g.value());
    std::set<unsigned> seen(powers.begin(), powers.end());
    CHECK(seen.size() == 15);
    CHECK_FALSE(seen.contains(0));
    for (unsigned i = 0; i < 15; ++i) {
        CHECK(gf16::pow(g, i).value() == powers[i]);
        CHECK(gf16::tables().exp[i] == powers[i]);
        CHECK(gf16::tables().log[powers[i]] == i);
    }
    CHECK(gf16::mul(g, FieldElement{powers[14]}) == gf16::one());
}

TEST_CASE("inverse") {
    CHECK(gf16::inv(gf16::one()) == gf16::one());
    for (unsigned a = 1; a < 16; ++a) CHECK(gf16::mul(FieldElement{a}, gf16::inv(FieldElement{a})) == gf16::one());
    const FieldElement g = gf16::generator();
    CHECK(gf16::inv(g).value() == oracle_powers(g.value())[14]);
    CHECK_THROWS_AS(gf16::inv(gf16::zero()), std::domain_error);
}

TEST_CASE("conjugation is the Frobenius square a -> a^4") {
    CHECK(gf16::conj(gf16::zero()) == gf16::zero());
    CHECK(gf16::conj(gf16::one()) == gf16::one());
    int fixed = 0;
    for (unsigned a = 0; a < 16; ++a) {
        const unsigned sq = oracle_mul(a, a);
        CHECK(gf16::conj(FieldElement{a}).value() == oracle_mul(sq, sq));
        CHECK(gf16::conj(gf16::conj(FieldElement{a})) == FieldElement{a});
        if (gf16::conj(FieldElement{a}) == FieldElement{a}) ++fixed;
    }
    CHECK(fixed == 4);
}

TEST_CASE("field axioms, exhaustively") {
    const auto r = gf16::verify_field_axioms();
    CHECK_MESSAGE(r.ok, r.witness);

    // Same laws, checked here against the oracle product rather than the tables.
    for (unsigned a = 0; a < 16; ++a) {
        if (a != 0) {
            unsigned x = 1;
            for (int i = 0; i < 15; ++i) x = oracle_mul(x, a);
            CHECK(x == 1);
            int inverses = 0;
            for (unsigned b = 1; b < 16; ++b) inverses += oracle_mul(a, b) == 1;
            CHECK(inverses == 1);
        }
        const FieldElement n = gf16::norm(FieldElement{a});
        CHECK(gf16::conj(n) == n);
        for (unsigned b = 0; b < 16; ++b) {
            const FieldElement x{a}, y{b};
            CHECK(gf16::conj(x + y) == gf16::conj(x) + gf16::conj(y));
            CHECK(gf16::conj(x * y) == gf16::conj(x) * gf16::conj(y));
            for (unsigned c = 0; c < 16; ++c) {
                const FieldElement z{c};
                CHECK((x * y) * z == x * (y * z));
                CHECK(x * (y + z) == x * y + x * z);
            }
        }
    }
}
