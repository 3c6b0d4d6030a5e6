#include "g24/gf16.hpp"

#include <stdexcept>
#include <string>

namespace g24 {

std::ostream& operator<<(std::ostream& os, FieldElement a) { return os << a.value(); }

namespace gf16 {
namespace {

Tables build_tables() {
    Tables t;
    for (unsigned a = 0; a < kOrder; ++a)
        for (unsigned b = 0; b < kOrder; ++b)
            t.mul[a][b] = static_cast<std::uint8_t>(schoolbook_mul(a, b));

    for (unsigned a = 1; a < kOrder; ++a)
        for (unsigned b = 1; b < kOrder; ++b)
            if (t.mul[a][b] == 1) t.inv[a] = static_cast<std::uint8_t>(b);

    for (unsigned a = 0; a < kOrder; ++a) {
        unsigned sq = t.mul[a][a];
        t.conj[a] = t.mul[sq][sq];
    }

    for (unsigned cand = 2; cand < kOrder; ++cand) {
        unsigned x = 1;
        unsigned period = 0;
        do {
            x = t.mul[x][cand];
            ++period;
        } while (x != 1);
        if (period == kOrder - 1) {
            t.generator = cand;
            break;
        }
    }
    if (t.generator == 0) throw std::logic_error("gf16: no generator; modulus is not primitive");

    unsigned x = 1;
    for (unsigned i = 0; i < kOrder - 1; ++i) {
        t.exp[i] = static_cast<std::uint8_t>(x);
        t.log[x] = static_cast<std::uint8_t>(i);
        x = t.mul[x][t.generator];
    }
    return t;
}

}  // namespace

const Tables& tables() {
    static const Tables t = build_tables();
    return t;
}

FieldElement inv(FieldElement a) {
    if (a.is_zero()) throw std::domain_error("gf16::inv: zero has no inverse");
    return FieldElement{tables().inv[a.value()]};
}

FieldElement pow(FieldElement a, unsigned e) {
    FieldElement result = one();
    FieldElement base = a;
    while (e) {
        if (e & 1u) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}


CheckResult verify_field_axioms() {
    auto fail = [](const char* what, unsigned a, unsigned b = 0, unsigned c = 0) {
        return CheckResult::fail(std::string(what) + " fails at (" + std::to_string(a) + "," + std::to_string(b) +
                                 "," + std::to_string(c) + ")");
    };
    for (unsigned a = 0; a < kOrder; ++a) {
        const FieldElement x{a};
        if (add(x, x) != zero()) return fail("characteristic 2", a);
        if (mul(x, one()) != x || mul(x, zero()) != zero()) return fail("identities", a);
        if (conj(conj(x)) != x) return fail("conjugation is an involution", a);
        if (!x.is_zero()) {
            if (mul(x, inv(x)) != one()) return fail("inverse", a);
            if (pow(x, 15) != one()) return fail("x^15 = 1", a);
        }
        const FieldElement nx = norm(x);
        if (conj(nx) != nx) return fail("norm lies in GF(4)", a);
        for (unsigned b = 0; b < kOrder; ++b) {
            const FieldElement y{b};
            if (mul(x, y).value() != schoolbook_mul(a, b)) return fail("table matches schoolbook product", a, b);
            if (mul(x, y) != mul(y, x)) return fail("commutativity", a, b);
            if (conj(add(x, y)) != add(conj(x), conj(y))) return fail("conj additive", a, b);
            if (conj(mul(x, y)) != mul(conj(x), conj(y))) return fail("conj multiplicative", a, b);
            for (unsigned c = 0; c < kOrder; ++c) {
                const FieldElement z{c};
                if (mul(mul(x, y), z) != mul(x, mul(y, z))) return fail("associativity", a, b, c);
                if (add(add(x, y), z) != add(x, add(y, z))) return fail("additive associativity", a, b, c);
                if (mul(x, add(y, z)) != add(mul(x, y), mul(x, z))) return fail("distributivity", a, b, c);
            }
        }
    }
    for (unsigned a = 1; a < kOrder; ++a) {
        unsigned inverses = 0;
        for (unsigned b = 1; b < kOrder; ++b)
            if (mul(FieldElement{a}, FieldElement{b}) == one()) ++inverses;
        if (inverses != 1) return fail("unique inverse", a);
    }
    return CheckResult::pass();
}

}  // namespace gf16
}  // namespace g24
