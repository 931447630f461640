// Dense polynomials over GF(2), stored little-endian: bit i of the word array
// is the coefficient of x^i. The word vector is kept canonical (no trailing
// zero words), so equality is plain vector comparison and the zero polynomial
// is the empty vector. The zero polynomial has no degree; degree() returns an
// empty optional rather than a -1 style sentinel.

#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gf2mul/errors.hpp"

namespace gf2mul {

class BitPoly {
public:
    BitPoly() = default;

    static BitPoly zero() { return BitPoly{}; }

    static BitPoly one() { return monomial(0); }

    // x^k
    static BitPoly monomial(std::size_t k) {
        BitPoly p;
        p.words_.resize(k / 64 + 1, 0);
        p.words_[k / 64] = std::uint64_t{1} << (k % 64);
        return p;
    }

    // Sum of x^t over the given exponents, e.g. {163, 7, 6, 3, 0}.
    static BitPoly from_terms(std::initializer_list<std::size_t> terms) {
        BitPoly p;
        for (std::size_t t : terms) p.flip_bit(t);
        return p;
    }

    static BitPoly from_word(std::uint64_t w) {
        BitPoly p;
        if (w != 0) p.words_.push_back(w);
        return p;
    }

    static BitPoly from_words(std::vector<std::uint64_t> ws) {
        BitPoly p;
        p.words_ = std::move(ws);
        p.normalize();
        return p;
    }

    // Big-endian hex, most significant nibble first. Accepts an optional
    // 0x/0X prefix and upper-case digits; "0" parses to the zero polynomial.
    static BitPoly from_hex(std::string_view s) {
        if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X'))
            s.remove_prefix(2);
        if (s.empty()) throw error("empty hex string");
        BitPoly p;
        p.words_.resize(s.size() / 16 + 1, 0);
        for (std::size_t i = 0; i < s.size(); ++i) {
            char c = s[s.size() - 1 - i];
            std::uint64_t nib;
            if (c >= '0' && c <= '9') nib = static_cast<std::uint64_t>(c - '0');
            else if (c >= 'a' && c <= 'f') nib = static_cast<std::uint64_t>(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F') nib = static_cast<std::uint64_t>(c - 'A' + 10);
            else throw error(std::string("invalid hex digit '") + c + "'");
            p.words_[i / 16] |= nib << (4 * (i % 16));
        }
        p.normalize();
        return p;
    }

    // Lower-case hex without prefix or leading zeros; zero formats as "0".
    std::string to_hex() const {
        if (is_zero()) return "0";
        std::size_t nibbles = *degree() / 4 + 1;
        std::string out;
        out.reserve(nibbles);
        for (std::size_t i = nibbles; i-- > 0;) {
            auto nib = (words_[i / 16] >> (4 * (i % 16))) & 0xf;
            out.push_back("0123456789abcdef"[nib]);
        }
        return out;
    }

    bool is_zero() const { return words_.empty(); }

    std::optional<std::size_t> degree() const {
        if (words_.empty()) return std::nullopt;
        return 64 * (words_.size() - 1) + (63 - std::countl_zero(words_.back()));
    }

    // Number of coefficient positions, i.e. degree + 1 (0 for the zero poly).
    std::size_t width() const {
        auto d = degree();
        return d ? *d + 1 : 0;
    }

    bool bit(std::size_t i) const {
        std::size_t w = i / 64;
        if (w >= words_.size()) return false;
        return (words_[w] >> (i % 64)) & 1;
    }

    void set_bit(std::size_t i) {
        std::size_t w = i / 64;
        if (w >= words_.size()) words_.resize(w + 1, 0);
        words_[w] |= std::uint64_t{1} << (i % 64);
    }

    void clear_bit(std::size_t i) {
        std::size_t w = i / 64;
        if (w >= words_.size()) return;
        words_[w] &= ~(std::uint64_t{1} << (i % 64));
        normalize();
    }

    void flip_bit(std::size_t i) {
        std::size_t w = i / 64;
        if (w >= words_.size()) words_.resize(w + 1, 0);
        words_[w] ^= std::uint64_t{1} << (i % 64);
        normalize();
    }

    std::size_t term_count() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    BitPoly& operator^=(const BitPoly& o) {
        if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
        for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] ^= o.words_[i];
        normalize();
        return *this;
    }

    friend BitPoly operator^(BitPoly a, const BitPoly& b) {
        a ^= b;
        return a;
    }

    // *this ^= other << k, without materialising the shifted temporary.
    BitPoly& xor_shifted(const BitPoly& other, std::size_t k) {
        if (other.is_zero()) return *this;
        std::size_t off = k / 64, sh = k % 64;
        std::size_t need = other.words_.size() + off + (sh ? 1 : 0);
        if (words_.size() < need) words_.resize(need, 0);
        if (sh == 0) {
            for (std::size_t i = 0; i < other.words_.size(); ++i)
                words_[i + off] ^= other.words_[i];
        } else {
            std::uint64_t carry = 0;
            for (std::size_t i = 0; i < other.words_.size(); ++i) {
                std::uint64_t w = other.words_[i];
                words_[i + off] ^= (w << sh) | carry;
                carry = w >> (64 - sh);
            }
            words_[other.words_.size() + off] ^= carry;
        }
        normalize();
        return *this;
    }

    BitPoly shifted_left(std::size_t k) const {
        BitPoly r;
        r.xor_shifted(*this, k);
        return r;
    }

    BitPoly shifted_right(std::size_t k) const {
        if (is_zero()) return {};
        std::size_t off = k / 64, sh = k % 64;
        if (off >= words_.size()) return {};
        BitPoly r;
        r.words_.resize(words_.size() - off, 0);
        if (sh == 0) {
            for (std::size_t i = 0; i < r.words_.size(); ++i)
                r.words_[i] = words_[i + off];
        } else {
            for (std::size_t i = 0; i < r.words_.size(); ++i) {
                std::uint64_t w = words_[i + off] >> sh;
                if (i + off + 1 < words_.size())
                    w |= words_[i + off + 1] << (64 - sh);
                r.words_[i] = w;
            }
        }
        r.normalize();
        return r;
    }

    // Coefficients [0, n) only.
    BitPoly low_bits(std::size_t n) const {
        BitPoly r;
        std::size_t full = n / 64, rem = n % 64;
        std::size_t take = std::min(words_.size(), full + (rem ? 1 : 0));
        r.words_.assign(words_.begin(), words_.begin() + static_cast<std::ptrdiff_t>(take));
        if (rem && full < r.words_.size())
            r.words_[full] &= (std::uint64_t{1} << rem) - 1;
        r.normalize();
        return r;
    }

    // Coefficients [lo, hi) shifted down to position 0.
    BitPoly slice(std::size_t lo, std::size_t hi) const {
        return shifted_right(lo).low_bits(hi > lo ? hi - lo : 0);
    }

    // Value of the low 64 coefficients as a machine word.
    std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

    std::span<const std::uint64_t> words() const { return words_; }

    // Uniform over all polynomials of degree < width.
    static BitPoly random(std::size_t width, std::mt19937_64& rng) {
        BitPoly p;
        if (width == 0) return p;
        p.words_.resize((width + 63) / 64, 0);
        for (auto& w : p.words_) w = rng();
        if (width % 64) p.words_.back() &= (std::uint64_t{1} << (width % 64)) - 1;
        p.normalize();
        return p;
    }

    bool operator==(const BitPoly&) const = default;

private:
    void normalize() {
        while (!words_.empty() && words_.back() == 0) words_.pop_back();
    }

    std::vector<std::uint64_t> words_;
};

// Addition over GF(2) is coefficient-wise XOR; subtraction is the same map.
inline BitPoly poly_add(const BitPoly& a, const BitPoly& b) { return a ^ b; }

}  // namespace gf2mul
