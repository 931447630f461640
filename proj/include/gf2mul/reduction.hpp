// Reduction of double-length products modulo the field polynomial, three
// ways: a generic fold that works for any modulus, a closed four-term form
// for trinomials whose middle exponent sits below m/2, and a word-at-a-time
// variant driven by a small precomputed shift table. All three agree with
// long division bit for bit; modmul glues a multiplier strategy to a
// reduction path.

#pragma once

#include <vector>

#include "gf2mul/bitpoly.hpp"
#include "gf2mul/errors.hpp"
#include "gf2mul/field.hpp"
#include "gf2mul/multipliers.hpp"

namespace gf2mul {

namespace detail {

inline void check_reducible(const BitPoly& c, const FieldParams& fp, const char* who) {
    auto d = c.degree();
    if (d && *d > 2 * fp.m - 2)
        throw input_too_wide(std::string(who) + ": input degree " +
                             std::to_string(*d) + " > 2m-2 = " +
                             std::to_string(2 * fp.m - 2));
}

}  // namespace detail

// Fold the bits at positions >= m down with x^m == r(x), term by term of r,
// repeating until the degree drops below m. Works for any modulus shape.
inline BitPoly reduce_generic(const BitPoly& c, const FieldParams& fp) {
    detail::check_reducible(c, fp, "reduce_generic");
    std::vector<std::size_t> terms;
    BitPoly r = fp.r();
    for (std::size_t i = 0; i <= (r.is_zero() ? 0 : *r.degree()); ++i)
        if (r.bit(i)) terms.push_back(i);

    BitPoly acc = c;
    while (!acc.is_zero() && *acc.degree() >= fp.m) {
        BitPoly high = acc.shifted_right(fp.m);
        acc = acc.low_bits(fp.m);
        for (std::size_t t : terms) acc.xor_shifted(high, t);
    }
    return acc;
}

// True when the closed four-term reduction below applies: p = x^m + x^n + 1
// with n < m/2, so two folds always suffice.
inline bool unified_applicable(const FieldParams& fp) {
    if (fp.p.term_count() != 3 || !fp.p.bit(0)) return false;
    BitPoly r = fp.r();
    return !r.is_zero() && 2 * *r.degree() < fp.m;
}

// Closed-form trinomial reduction. With c = W + x^m*H and x^m == x^n + 1:
//   W  low m bits of c
//   X  H folded to offset 0
//   Y  in-range part of H shifted up by n
//   Z  second fold of the bits of H<<n that spilled past position m-1,
//      contributing at offsets 0 and n
// n < m/2 guarantees Z itself stays in range, so W^X^Y^Z is fully reduced.
inline BitPoly reduce_unified(const BitPoly& c, const FieldParams& fp) {
    if (!unified_applicable(fp))
        throw unsupported_polynomial(
            "unsupported polynomial for unified reduction: field " + fp.name +
            " is not a trinomial x^m + x^n + 1 with n < m/2");
    detail::check_reducible(c, fp, "reduce_unified");

    std::size_t m = fp.m;
    std::size_t n = *fp.r().degree();

    BitPoly w = c.low_bits(m);
    BitPoly x = c.shifted_right(m);
    BitPoly shifted = x.shifted_left(n);
    BitPoly y = shifted.low_bits(m);
    BitPoly spill = shifted.shifted_right(m);
    BitPoly z = spill ^ spill.shifted_left(n);
    return w ^ x ^ y ^ z;
}

// Precomputed rows r(x) << k for k in [0, word_width), so a fold of any bit
// inside a word chunk is a table row XORed in at a whole-word offset.
struct ReductionTable {
    std::size_t m = 0;
    std::size_t word_width = 0;
    std::vector<BitPoly> rows;
};

inline ReductionTable build_table(const FieldParams& fp, std::size_t word_width = 64) {
    if (word_width != 8 && word_width != 16 && word_width != 32 && word_width != 64)
        throw unsupported_word_width("table word width must be 8, 16, 32 or 64, got " +
                                     std::to_string(word_width));
    ReductionTable t;
    t.m = fp.m;
    t.word_width = word_width;
    t.rows.reserve(word_width);
    BitPoly r = fp.r();
    for (std::size_t k = 0; k < word_width; ++k) t.rows.push_back(r.shifted_left(k));
    return t;
}

inline BitPoly reduce_tabled(const BitPoly& c, const FieldParams& fp,
                             const ReductionTable& table) {
    detail::check_reducible(c, fp, "reduce_tabled");
    std::size_t m = fp.m, w = table.word_width;

    BitPoly acc = c;
    while (!acc.is_zero() && *acc.degree() >= m) {
        std::size_t d = *acc.degree();
        std::size_t lo = d - m >= w - 1 ? d - (w - 1) : m;
        // One chunk of at most w bits, highest first. Folding a bit only
        // touches positions strictly below it, so a downward scan never
        // misses bits the fold itself introduced into the chunk.
        for (std::size_t pos = d + 1; pos-- > lo;) {
            if (!acc.bit(pos)) continue;
            std::size_t s = pos - m;
            acc.clear_bit(pos);
            acc.xor_shifted(table.rows[s % w], s - s % w);
        }
    }
    return acc;
}

enum class ReductionKind { Auto, Generic, Unified, Tabled };

inline BitPoly reduce(const BitPoly& c, const FieldParams& fp,
                      ReductionKind kind = ReductionKind::Auto) {
    switch (kind) {
        case ReductionKind::Auto:
            return unified_applicable(fp) ? reduce_unified(c, fp)
                                          : reduce_generic(c, fp);
        case ReductionKind::Generic: return reduce_generic(c, fp);
        case ReductionKind::Unified: return reduce_unified(c, fp);
        case ReductionKind::Tabled: return reduce_tabled(c, fp, build_table(fp));
    }
    throw error("unreachable reduction kind");
}

// Field multiplication: strategy-selected carry-less product, then reduction.
inline BitPoly modmul(const BitPoly& a, const BitPoly& b, const FieldParams& fp,
                      const MulStrategy& s, ReductionKind kind = ReductionKind::Auto) {
    auto da = a.degree(), db = b.degree();
    if ((da && *da >= fp.m) || (db && *db >= fp.m))
        throw operand_too_large("modmul: operands must have degree < m = " +
                                std::to_string(fp.m));
    return reduce(mul(a, b, fp.m, s), fp, kind);
}

// As modmul, but with a caller-built table for the reduction step.
inline BitPoly modmul(const BitPoly& a, const BitPoly& b, const FieldParams& fp,
                      const MulStrategy& s, const ReductionTable& table) {
    auto da = a.degree(), db = b.degree();
    if ((da && *da >= fp.m) || (db && *db >= fp.m))
        throw operand_too_large("modmul: operands must have degree < m = " +
                                std::to_string(fp.m));
    return reduce_tabled(mul(a, b, fp.m, s), fp, table);
}

// Square-and-multiply routed through modmul, so the chosen multiplier covers
// the whole exponentiation. Exponent semantics match field_pow.
inline BitPoly field_pow(const BitPoly& a, const BitPoly& e, const FieldParams& fp,
                         const MulStrategy& s, ReductionKind kind = ReductionKind::Auto) {
    if (!a.is_zero() && *a.degree() >= fp.m)
        throw operand_too_large("field_pow: operand degree >= m = " +
                                std::to_string(fp.m));
    BitPoly acc = BitPoly::one();
    if (e.is_zero()) return acc;
    for (std::size_t i = *e.degree() + 1; i-- > 0;) {
        acc = modmul(acc, acc, fp, s, kind);
        if (e.bit(i)) acc = modmul(acc, a, fp, s, kind);
    }
    return acc;
}

}  // namespace gf2mul
