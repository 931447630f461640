// Reference implementations used as ground truth by the tests and the verify
// command: carry-less multiplication as the literal double loop over
// coefficient pairs, and modular reduction as schoolbook long division.
// Deliberately free of algorithmic shortcuts; every faster path in the
// library is checked against these.

#pragma once

#include "gf2mul/bitpoly.hpp"
#include "gf2mul/errors.hpp"

namespace gf2mul {

// c_k = XOR over all i + j = k of a_i * b_j.
inline BitPoly naive_clmul(const BitPoly& a, const BitPoly& b) {
    BitPoly c;
    if (a.is_zero() || b.is_zero()) return c;
    std::size_t da = *a.degree(), db = *b.degree();
    for (std::size_t i = 0; i <= da; ++i) {
        if (!a.bit(i)) continue;
        for (std::size_t j = 0; j <= db; ++j)
            if (b.bit(j)) c.flip_bit(i + j);
    }
    return c;
}

// Long division remainder: repeatedly cancel the leading term of c with the
// aligned modulus until the degree drops below deg(p).
inline BitPoly naive_mod(BitPoly c, const BitPoly& p) {
    if (p.is_zero()) throw zero_modulus{};
    std::size_t dp = *p.degree();
    while (!c.is_zero() && *c.degree() >= dp)
        c.xor_shifted(p, *c.degree() - dp);
    return c;
}

}  // namespace gf2mul
