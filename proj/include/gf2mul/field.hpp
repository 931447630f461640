// Field parameter registry and the scalar field operations that only need
// the reference arithmetic. The registry carries the four NIST B-field
// moduli plus the small auxiliary degrees used by the recursive estimates,
// all of them irreducible tri- or pentanomials.

#pragma once

#include <array>
#include <string>
#include <string_view>

#include "gf2mul/bitpoly.hpp"
#include "gf2mul/errors.hpp"
#include "gf2mul/naive.hpp"

namespace gf2mul {

struct FieldParams {
    std::string name;  // "B-163" for the NIST curves, decimal degree otherwise
    std::size_t m = 0; // extension degree, deg(p) == m
    BitPoly p;         // irreducible modulus

    // Reduction polynomial r(x) = p(x) + x^m, the low terms of the modulus.
    BitPoly r() const { return p ^ BitPoly::monomial(m); }
};

// All registered fields, smallest degree first.
inline const std::array<FieldParams, 9>& field_registry() {
    static const std::array<FieldParams, 9> table = {{
        {"6", 6, BitPoly::from_terms({6, 1, 0})},
        {"11", 11, BitPoly::from_terms({11, 2, 0})},
        {"21", 21, BitPoly::from_terms({21, 2, 0})},
        {"41", 41, BitPoly::from_terms({41, 3, 0})},
        {"82", 82, BitPoly::from_terms({82, 8, 3, 1, 0})},
        {"B-163", 163, BitPoly::from_terms({163, 7, 6, 3, 0})},
        // Caution: x^233 + x^70 + 1 is reducible (irreducible factors of
        // degree 2, 6, 7, 59, 159). Multiplication and reduction stay
        // well-defined over the quotient ring, but identities that need an
        // irreducible modulus (Fermat, inverses) do not hold for this entry.
        {"B-233", 233, BitPoly::from_terms({233, 70, 0})},
        {"B-283", 283, BitPoly::from_terms({283, 12, 7, 5, 0})},
        {"B-571", 571, BitPoly::from_terms({571, 10, 5, 2, 0})},
    }};
    return table;
}

inline const FieldParams& nist_field(std::string_view name) {
    for (const auto& f : field_registry())
        if (f.name == name) return f;
    throw unknown_curve(std::string(name));
}

// a^2 mod p. Squaring over GF(2) is linear (cross terms cancel), but this
// routine does not exploit that; it goes through the reference multiply.
inline BitPoly field_square(const BitPoly& a, const FieldParams& fp) {
    if (!a.is_zero() && *a.degree() >= fp.m)
        throw operand_too_large("field_square: operand degree " +
                                std::to_string(*a.degree()) + " >= m = " +
                                std::to_string(fp.m));
    return naive_mod(naive_clmul(a, a), fp.p);
}

// a^e mod p by square-and-multiply, scanning the exponent bits from the top.
// The exponent is passed as a bit string (an arbitrary-precision unsigned
// integer), so exponents like 2^571 are expressible; a^0 = 1 by convention.
inline BitPoly field_pow(const BitPoly& a, const BitPoly& e, const FieldParams& fp) {
    if (!a.is_zero() && *a.degree() >= fp.m)
        throw operand_too_large("field_pow: operand degree " +
                                std::to_string(*a.degree()) + " >= m = " +
                                std::to_string(fp.m));
    BitPoly acc = BitPoly::one();
    if (e.is_zero()) return acc;
    for (std::size_t i = *e.degree() + 1; i-- > 0;) {
        acc = naive_mod(naive_clmul(acc, acc), fp.p);
        if (e.bit(i)) acc = naive_mod(naive_clmul(acc, a), fp.p);
    }
    return acc;
}

inline BitPoly field_pow(const BitPoly& a, std::uint64_t e, const FieldParams& fp) {
    return field_pow(a, BitPoly::from_word(e), fp);
}

}  // namespace gf2mul
