// Carry-less multiplier strategies over bit polynomials:
//
//   cm      conventional schoolbook, shift-and-XOR over n partial products
//   km      Karatsuba: split at h = ceil(n/2), three half-width products
//           M0 = A_lo*B_lo, M1 = A_hi*B_hi, M2' = (A_lo^A_hi)(B_lo^B_hi),
//           combined as M1*x^(2h) ^ (M2'^M0^M1)*x^h ^ M0
//   oka     Karatsuba on the even/odd coefficient split; operands are padded
//           to the next power of two and the product of the decimated halves
//           is re-interleaved, which keeps the three partial products from
//           overlapping in the odd output columns
//   hybrid  km recursion that stops early and hands sub-products at or below
//           a leaf-width threshold to cm
//
// Widths at or below 32 bits run on plain machine words; the recursion shape
// and the instrumentation counters are identical on both carriers.

#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "gf2mul/bitpoly.hpp"
#include "gf2mul/errors.hpp"

namespace gf2mul {

enum class MulKind { Cm, Km, Oka, Hybrid };

// Recursion instrumentation, filled in when a stats pointer is passed.
struct MulStats {
    std::size_t leaf_calls = 0;      // base-case multiplications performed
    std::size_t km_levels = 0;       // deepest split count above any leaf
    std::size_t max_leaf_width = 0;  // widest base-case operand seen
};

struct MulStrategy {
    MulKind kind = MulKind::Cm;
    std::size_t threshold = 0;  // hybrid leaf width; 0 = pick the width's default

    static MulStrategy cm() { return {MulKind::Cm, 0}; }
    static MulStrategy km() { return {MulKind::Km, 0}; }
    static MulStrategy oka() { return {MulKind::Oka, 0}; }

    static MulStrategy hybrid(std::size_t t) {
        if (t < 2)
            throw invalid_threshold("hybrid threshold must be >= 2, got " +
                                    std::to_string(t));
        return {MulKind::Hybrid, t};
    }

    // "cm" | "km" | "oka" | "hybrid" | "hybrid:<threshold>"
    static MulStrategy parse(std::string_view s) {
        if (s == "cm") return cm();
        if (s == "km") return km();
        if (s == "oka") return oka();
        if (s == "hybrid") return {MulKind::Hybrid, 0};
        if (s.starts_with("hybrid:")) {
            auto t = s.substr(7);
            std::size_t v = 0;
            if (t.empty()) throw error("empty hybrid threshold");
            for (char c : t) {
                if (c < '0' || c > '9')
                    throw error("bad hybrid threshold: " + std::string(t));
                v = v * 10 + static_cast<std::size_t>(c - '0');
            }
            return hybrid(v);
        }
        throw error("unknown strategy: " + std::string(s));
    }

    std::string name() const {
        switch (kind) {
            case MulKind::Cm: return "cm";
            case MulKind::Km: return "km";
            case MulKind::Oka: return "oka";
            case MulKind::Hybrid:
                return threshold ? "hybrid:" + std::to_string(threshold) : "hybrid";
        }
        return "?";
    }
};

// Leaf widths tuned per supported extension degree; the four entries are the
// largest widths the recursive estimate keeps on the schoolbook path.
inline std::optional<std::size_t> default_hybrid_threshold(std::size_t m) {
    switch (m) {
        case 163: return 41;
        case 233: return 59;
        case 283: return 71;
        case 571: return 71;
        default: return std::nullopt;
    }
}

namespace detail {

inline void check_operands(const BitPoly& a, const BitPoly& b, std::size_t n,
                           const char* who) {
    if (n == 0) throw operand_too_large(std::string(who) + ": width must be >= 1");
    auto da = a.degree(), db = b.degree();
    if ((da && *da >= n) || (db && *db >= n))
        throw operand_too_large(std::string(who) + ": operand degree >= width " +
                                std::to_string(n));
}

inline void note_leaf(MulStats* st, std::size_t width, std::size_t depth) {
    if (!st) return;
    ++st->leaf_calls;
    if (depth > st->km_levels) st->km_levels = depth;
    if (width > st->max_leaf_width) st->max_leaf_width = width;
}

// Schoolbook product of single-word operands (combined width <= 63 bits).
inline std::uint64_t clmul_word(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    while (a) {
        unsigned i = static_cast<unsigned>(std::countr_zero(a));
        r ^= b << i;
        a &= a - 1;
    }
    return r;
}

inline std::uint64_t km_word(std::uint64_t a, std::uint64_t b, std::size_t n,
                             std::size_t threshold, MulStats* st, std::size_t depth) {
    if (n <= threshold || n <= 2) {
        note_leaf(st, n, depth);
        return clmul_word(a, b);
    }
    std::size_t h = (n + 1) / 2;
    std::uint64_t mask = (std::uint64_t{1} << h) - 1;
    std::uint64_t alo = a & mask, ahi = a >> h;
    std::uint64_t blo = b & mask, bhi = b >> h;
    std::uint64_t m0 = km_word(alo, blo, h, threshold, st, depth + 1);
    std::uint64_t m1 = km_word(ahi, bhi, n - h, threshold, st, depth + 1);
    std::uint64_t m2 = km_word(alo ^ ahi, blo ^ bhi, h, threshold, st, depth + 1);
    std::uint64_t mid = m2 ^ m0 ^ m1;
    return m0 ^ (mid << h) ^ (m1 << (2 * h));
}

inline BitPoly km_rec(const BitPoly& a, const BitPoly& b, std::size_t n,
                      std::size_t threshold, MulStats* st, std::size_t depth) {
    if (n <= threshold || n <= 2) {
        note_leaf(st, n, depth);
        BitPoly acc;
        for (std::size_t i = 0; i < n; ++i)
            if (a.bit(i)) acc.xor_shifted(b, i);
        return acc;
    }
    if (n <= 32)
        return BitPoly::from_word(
            km_word(a.low_word(), b.low_word(), n, threshold, st, depth));
    std::size_t h = (n + 1) / 2;
    BitPoly alo = a.low_bits(h), ahi = a.slice(h, n);
    BitPoly blo = b.low_bits(h), bhi = b.slice(h, n);
    BitPoly m0 = km_rec(alo, blo, h, threshold, st, depth + 1);
    BitPoly m1 = km_rec(ahi, bhi, n - h, threshold, st, depth + 1);
    BitPoly m2 = km_rec(alo ^ ahi, blo ^ bhi, h, threshold, st, depth + 1);
    m2 ^= m0;
    m2 ^= m1;
    m0.xor_shifted(m2, h);
    m0.xor_shifted(m1, 2 * h);
    return m0;
}

// Even-position bits of a word, packed into the low half.
inline std::uint64_t squash_even(std::uint64_t x) {
    x &= 0x5555555555555555ull;
    x = (x | (x >> 1)) & 0x3333333333333333ull;
    x = (x | (x >> 2)) & 0x0f0f0f0f0f0f0f0full;
    x = (x | (x >> 4)) & 0x00ff00ff00ff00ffull;
    x = (x | (x >> 8)) & 0x0000ffff0000ffffull;
    x = (x | (x >> 16)) & 0x00000000ffffffffull;
    return x;
}

// Inverse of squash_even: bit t moves to bit 2t.
inline std::uint64_t spread_even(std::uint64_t x) {
    x &= 0x00000000ffffffffull;
    x = (x | (x << 16)) & 0x0000ffff0000ffffull;
    x = (x | (x << 8)) & 0x00ff00ff00ff00ffull;
    x = (x | (x << 4)) & 0x0f0f0f0f0f0f0f0full;
    x = (x | (x << 2)) & 0x3333333333333333ull;
    x = (x | (x << 1)) & 0x5555555555555555ull;
    return x;
}

// p(x) -> polynomial whose coefficient t is p's coefficient 2t (+offset 0/1).
inline BitPoly decimate(const BitPoly& p, bool odd) {
    auto ws = p.words();
    std::vector<std::uint64_t> out((ws.size() + 1) / 2, 0);
    for (std::size_t i = 0; i < ws.size(); ++i) {
        std::uint64_t half = squash_even(odd ? ws[i] >> 1 : ws[i]);
        out[i / 2] |= half << (32 * (i % 2));
    }
    return BitPoly::from_words(std::move(out));
}

// p(x) -> p(x^2): coefficient t moves to position 2t.
inline BitPoly interleave(const BitPoly& p) {
    auto ws = p.words();
    std::vector<std::uint64_t> out(ws.size() * 2, 0);
    for (std::size_t i = 0; i < ws.size(); ++i) {
        out[2 * i] = spread_even(ws[i]);
        out[2 * i + 1] = spread_even(ws[i] >> 32);
    }
    return BitPoly::from_words(std::move(out));
}

inline std::uint64_t oka_word(std::uint64_t a, std::uint64_t b, std::size_t n,
                              MulStats* st, std::size_t depth) {
    if (n <= 2) {
        note_leaf(st, n, depth);
        return clmul_word(a, b);
    }
    std::size_t h = n / 2;
    std::uint64_t ae = squash_even(a), ao = squash_even(a >> 1);
    std::uint64_t be = squash_even(b), bo = squash_even(b >> 1);
    std::uint64_t e = oka_word(ae, be, h, st, depth + 1);
    std::uint64_t o = oka_word(ao, bo, h, st, depth + 1);
    std::uint64_t m = oka_word(ae ^ ao, be ^ bo, h, st, depth + 1) ^ e ^ o;
    return spread_even(e) ^ (spread_even(o) << 2) ^ (spread_even(m) << 1);
}

// n is a power of two here; the public entry pads and delegates.
inline BitPoly oka_rec(const BitPoly& a, const BitPoly& b, std::size_t n,
                       MulStats* st, std::size_t depth) {
    if (n <= 2) {
        note_leaf(st, n, depth);
        BitPoly acc;
        for (std::size_t i = 0; i < n; ++i)
            if (a.bit(i)) acc.xor_shifted(b, i);
        return acc;
    }
    if (n <= 32)
        return BitPoly::from_word(
            oka_word(a.low_word(), b.low_word(), n, st, depth));
    BitPoly ae = decimate(a, false), ao = decimate(a, true);
    BitPoly be = decimate(b, false), bo = decimate(b, true);
    BitPoly e = oka_rec(ae, be, n / 2, st, depth + 1);
    BitPoly o = oka_rec(ao, bo, n / 2, st, depth + 1);
    BitPoly m = oka_rec(ae ^ ao, be ^ bo, n / 2, st, depth + 1);
    m ^= e;
    m ^= o;
    BitPoly out = interleave(e);
    out.xor_shifted(interleave(o), 2);
    out.xor_shifted(interleave(m), 1);
    return out;
}

}  // namespace detail

// Schoolbook multiplication at width n.
inline BitPoly mul_cm(const BitPoly& a, const BitPoly& b, std::size_t n,
                      MulStats* st = nullptr) {
    detail::check_operands(a, b, n, "mul_cm");
    detail::note_leaf(st, n, 0);
    BitPoly acc;
    for (std::size_t i = 0; i < n; ++i)
        if (a.bit(i)) acc.xor_shifted(b, i);
    return acc;
}

// Karatsuba recursion all the way down to two-bit operands.
inline BitPoly mul_km(const BitPoly& a, const BitPoly& b, std::size_t n,
                      MulStats* st = nullptr) {
    detail::check_operands(a, b, n, "mul_km");
    return detail::km_rec(a, b, n, 2, st, 0);
}

// Karatsuba with schoolbook leaves at or below the threshold width.
inline BitPoly mul_hybrid(const BitPoly& a, const BitPoly& b, std::size_t n,
                          std::size_t threshold, MulStats* st = nullptr) {
    if (threshold < 2)
        throw invalid_threshold("hybrid threshold must be >= 2, got " +
                                std::to_string(threshold));
    detail::check_operands(a, b, n, "mul_hybrid");
    return detail::km_rec(a, b, n, threshold, st, 0);
}

// Even/odd-split Karatsuba. Operands are zero-padded to the next power of
// two; padding cannot change the product, so no trim step is needed.
inline BitPoly mul_oka(const BitPoly& a, const BitPoly& b, std::size_t n,
                       MulStats* st = nullptr) {
    detail::check_operands(a, b, n, "mul_oka");
    return detail::oka_rec(a, b, std::bit_ceil(n), st, 0);
}

// Strategy dispatch. A hybrid strategy without an explicit threshold uses
// the width's default and is rejected for widths that do not have one.
inline BitPoly mul(const BitPoly& a, const BitPoly& b, std::size_t n,
                   const MulStrategy& s, MulStats* st = nullptr) {
    switch (s.kind) {
        case MulKind::Cm: return mul_cm(a, b, n, st);
        case MulKind::Km: return mul_km(a, b, n, st);
        case MulKind::Oka: return mul_oka(a, b, n, st);
        case MulKind::Hybrid: {
            std::size_t t = s.threshold;
            if (t == 0) {
                auto d = default_hybrid_threshold(n);
                if (!d)
                    throw invalid_threshold(
                        "no default hybrid threshold for width " +
                        std::to_string(n) + "; use hybrid:<threshold>");
                t = *d;
            }
            return mul_hybrid(a, b, n, t, st);
        }
    }
    throw error("unreachable strategy kind");
}

}  // namespace gf2mul
