// Explicit gate-level circuits for the multiplier schemes: levelized DAGs of
// two-input AND/XOR gates over input pins a[i], b[i] and an optional
// constant-zero pin. Builders mirror the software recursions gate for gate,
// XOR fan-ins are balanced into trees so depth stays logarithmic, and a
// topological audit plus a bit-exact simulator keep the structures honest.
//
// Text form, one gate per line in topological order:
//
//   width a 163
//   width b 163
//   width c 325
//   g0 = AND a0 b0
//   g1 = XOR g0 a1
//   ...
//   c0 = g0
//
// Operand refs are a<i>, b<i>, g<id> or zero.

#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gf2mul/bitpoly.hpp"
#include "gf2mul/errors.hpp"
#include "gf2mul/field.hpp"
#include "gf2mul/multipliers.hpp"
#include "gf2mul/naive.hpp"

namespace gf2mul {

enum class GateOp : std::uint8_t { And, Xor };

struct Ref {
    enum class Kind : std::uint8_t { A, B, Gate, Zero };
    Kind kind = Kind::Zero;
    std::uint32_t index = 0;

    static Ref a(std::uint32_t i) { return {Kind::A, i}; }
    static Ref b(std::uint32_t i) { return {Kind::B, i}; }
    static Ref gate(std::uint32_t i) { return {Kind::Gate, i}; }
    static Ref zero() { return {Kind::Zero, 0}; }

    bool operator==(const Ref&) const = default;
};

struct Gate {
    GateOp op = GateOp::And;
    Ref x, y;
};

struct Netlist {
    std::uint32_t width_a = 0;
    std::uint32_t width_b = 0;
    std::uint32_t width_out = 0;
    std::vector<Gate> gates;
    std::vector<Ref> outputs;
};

struct NetlistStats {
    long long and_count = 0;
    long long xor_count = 0;
    int depth_and = 0;
    int depth_xor = 0;
};

namespace detail {

inline void check_ref(const Netlist& nl, const Ref& r, std::size_t gate_limit,
                      const char* where) {
    switch (r.kind) {
        case Ref::Kind::A:
            if (r.index >= nl.width_a) throw error(std::string(where) + ": a-pin out of range");
            return;
        case Ref::Kind::B:
            if (r.index >= nl.width_b) throw error(std::string(where) + ": b-pin out of range");
            return;
        case Ref::Kind::Gate:
            if (r.index >= gate_limit)
                throw error(std::string(where) + ": forward or dangling gate ref");
            return;
        case Ref::Kind::Zero: return;
    }
}

// Incremental builder. Gates are appended strictly after their operands,
// which makes the gate array a topological order by construction.
class NetBuilder {
public:
    explicit NetBuilder(std::uint32_t wa, std::uint32_t wb, std::uint32_t wout) {
        nl_.width_a = wa;
        nl_.width_b = wb;
        nl_.width_out = wout;
    }

    Ref gate(GateOp op, Ref x, Ref y) {
        check_ref(nl_, x, nl_.gates.size(), "build");
        check_ref(nl_, y, nl_.gates.size(), "build");
        nl_.gates.push_back({op, x, y});
        return Ref::gate(static_cast<std::uint32_t>(nl_.gates.size() - 1));
    }

    Ref and_gate(Ref x, Ref y) { return gate(GateOp::And, x, y); }
    Ref xor_gate(Ref x, Ref y) { return gate(GateOp::Xor, x, y); }

    // Pairwise-halving XOR reduction: t leaves cost t-1 gates at depth
    // ceil(log2 t).
    Ref xor_tree(std::vector<Ref> terms) {
        if (terms.empty()) return Ref::zero();
        while (terms.size() > 1) {
            std::vector<Ref> next;
            next.reserve(terms.size() / 2 + 1);
            for (std::size_t i = 0; i + 1 < terms.size(); i += 2)
                next.push_back(xor_gate(terms[i], terms[i + 1]));
            if (terms.size() % 2) next.push_back(terms.back());
            terms = std::move(next);
        }
        return terms[0];
    }

    std::size_t gate_count() const { return nl_.gates.size(); }

    Netlist finish(std::vector<Ref> outputs) {
        for (const auto& r : outputs) check_ref(nl_, r, nl_.gates.size(), "outputs");
        nl_.outputs = std::move(outputs);
        return std::move(nl_);
    }

private:
    Netlist nl_;
};

// Schoolbook block: one AND per coefficient pair, one balanced XOR tree per
// output column. Works for any same-width ref spans, zero pads included.
inline std::vector<Ref> cm_block(NetBuilder& nb, std::span<const Ref> a,
                                 std::span<const Ref> b) {
    std::size_t n = a.size();
    std::vector<Ref> out(2 * n - 1);
    for (std::size_t k = 0; k < 2 * n - 1; ++k) {
        std::vector<Ref> col;
        std::size_t i_lo = k >= n - 1 ? k - (n - 1) : 0;
        std::size_t i_hi = std::min(k, n - 1);
        col.reserve(i_hi - i_lo + 1);
        for (std::size_t i = i_lo; i <= i_hi; ++i)
            col.push_back(nb.and_gate(a[i], b[k - i]));
        out[k] = nb.xor_tree(std::move(col));
    }
    return out;
}

// Karatsuba tree over refs. cm_leaves selects the hybrid flavour: hand
// operands at or below the threshold to a schoolbook block instead of
// recursing to single-bit products. Odd widths pad the high half with the
// zero pin so all three sub-blocks stay uniform at the ceil width.
inline std::vector<Ref> km_tree(NetBuilder& nb, std::span<const Ref> a,
                                std::span<const Ref> b, std::size_t threshold,
                                bool cm_leaves) {
    std::size_t w = a.size();
    if (cm_leaves ? w <= threshold : w <= 1) {
        if (!cm_leaves) return {nb.and_gate(a[0], b[0])};
        return cm_block(nb, a, b);
    }
    std::size_t h = (w + 1) / 2;

    std::vector<Ref> alo(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(h));
    std::vector<Ref> ahi(a.begin() + static_cast<std::ptrdiff_t>(h), a.end());
    std::vector<Ref> blo(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(h));
    std::vector<Ref> bhi(b.begin() + static_cast<std::ptrdiff_t>(h), b.end());
    ahi.resize(h, Ref::zero());
    bhi.resize(h, Ref::zero());

    std::vector<Ref> asum(h), bsum(h);
    for (std::size_t i = 0; i < h; ++i) {
        asum[i] = nb.xor_gate(alo[i], ahi[i]);
        bsum[i] = nb.xor_gate(blo[i], bhi[i]);
    }

    auto m0 = km_tree(nb, alo, blo, threshold, cm_leaves);
    auto m1 = km_tree(nb, ahi, bhi, threshold, cm_leaves);
    auto m2 = km_tree(nb, asum, bsum, threshold, cm_leaves);

    // mid = m2 ^ m0 ^ m1. The 2-bit cell associates as m2 ^ (m0 ^ m1) and
    // closes at two XOR levels; wider combines associate as (m2 ^ m0) ^ m1,
    // carrying the pre-added branch through both combining levels.
    std::size_t sub = 2 * h - 1;
    std::vector<Ref> mid(sub);
    for (std::size_t i = 0; i < sub; ++i)
        mid[i] = w == 2 ? nb.xor_gate(m2[i], nb.xor_gate(m0[i], m1[i]))
                        : nb.xor_gate(nb.xor_gate(m2[i], m0[i]), m1[i]);

    // m0 at offset 0, mid at h, m1 at 2h; XOR gates only where spans overlap.
    std::vector<Ref> out(4 * h - 1);
    for (std::size_t i = 0; i < h; ++i) out[i] = m0[i];
    for (std::size_t i = h; i < 2 * h - 1; ++i)
        out[i] = nb.xor_gate(m0[i], mid[i - h]);
    out[2 * h - 1] = mid[h - 1];
    for (std::size_t i = 2 * h; i < 3 * h - 1; ++i)
        out[i] = nb.xor_gate(mid[i - h], m1[i - 2 * h]);
    for (std::size_t i = 3 * h - 1; i < 4 * h - 1; ++i) out[i] = m1[i - 2 * h];

    out.resize(2 * w - 1);
    return out;
}

// Even/odd-split Karatsuba tree; width must be a power of two. Even output
// columns come straight from the even/odd sub-products, odd columns are the
// middle term verbatim, so only the even columns pay a combining XOR.
inline std::vector<Ref> oka_tree(NetBuilder& nb, std::span<const Ref> a,
                                 std::span<const Ref> b) {
    std::size_t w = a.size();
    if (w <= 1) return {nb.and_gate(a[0], b[0])};
    std::size_t h = w / 2;

    std::vector<Ref> ae(h), ao(h), be(h), bo(h);
    for (std::size_t i = 0; i < h; ++i) {
        ae[i] = a[2 * i];
        ao[i] = a[2 * i + 1];
        be[i] = b[2 * i];
        bo[i] = b[2 * i + 1];
    }
    std::vector<Ref> asum(h), bsum(h);
    for (std::size_t i = 0; i < h; ++i) {
        asum[i] = nb.xor_gate(ae[i], ao[i]);
        bsum[i] = nb.xor_gate(be[i], bo[i]);
    }

    auto e = oka_tree(nb, ae, be);
    auto o = oka_tree(nb, ao, bo);
    auto mp = oka_tree(nb, asum, bsum);

    std::size_t sub = 2 * h - 1;
    std::vector<Ref> mid(sub);
    for (std::size_t i = 0; i < sub; ++i)
        mid[i] = nb.xor_gate(mp[i], nb.xor_gate(e[i], o[i]));

    std::vector<Ref> out(2 * w - 1);
    out[0] = e[0];
    for (std::size_t t = 1; t < sub; ++t)
        out[2 * t] = nb.xor_gate(e[t], o[t - 1]);
    out[2 * sub] = o[sub - 1];
    for (std::size_t t = 0; t < sub; ++t) out[2 * t + 1] = mid[t];
    return out;
}

inline std::vector<Ref> input_pins(std::uint32_t n, bool side_a) {
    std::vector<Ref> v(n);
    for (std::uint32_t i = 0; i < n; ++i) v[i] = side_a ? Ref::a(i) : Ref::b(i);
    return v;
}

}  // namespace detail

inline Netlist build_cm(std::size_t n) {
    if (n == 0) throw operand_too_large("build_cm: width must be >= 1");
    detail::NetBuilder nb(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(n),
                          static_cast<std::uint32_t>(2 * n - 1));
    auto out = detail::cm_block(nb, detail::input_pins(static_cast<std::uint32_t>(n), true),
                                detail::input_pins(static_cast<std::uint32_t>(n), false));
    return nb.finish(std::move(out));
}

inline Netlist build_km(std::size_t n) {
    if (!std::has_single_bit(n) || n < 2)
        throw not_power_of_two("build_km: width must be a power of two >= 2, got " +
                               std::to_string(n));
    detail::NetBuilder nb(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(n),
                          static_cast<std::uint32_t>(2 * n - 1));
    auto out = detail::km_tree(nb, detail::input_pins(static_cast<std::uint32_t>(n), true),
                               detail::input_pins(static_cast<std::uint32_t>(n), false),
                               0, false);
    return nb.finish(std::move(out));
}

inline Netlist build_oka(std::size_t n) {
    if (!std::has_single_bit(n) || n < 2)
        throw not_power_of_two("build_oka: width must be a power of two >= 2, got " +
                               std::to_string(n));
    detail::NetBuilder nb(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(n),
                          static_cast<std::uint32_t>(2 * n - 1));
    auto out = detail::oka_tree(nb, detail::input_pins(static_cast<std::uint32_t>(n), true),
                                detail::input_pins(static_cast<std::uint32_t>(n), false));
    return nb.finish(std::move(out));
}

inline Netlist build_hybrid(std::size_t m, std::size_t threshold) {
    if (m < 2) throw operand_too_large("build_hybrid: width must be >= 2");
    if (threshold < 2)
        throw invalid_threshold("build_hybrid: threshold must be >= 2, got " +
                                std::to_string(threshold));
    detail::NetBuilder nb(static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(m),
                          static_cast<std::uint32_t>(2 * m - 1));
    auto out = detail::km_tree(nb, detail::input_pins(static_cast<std::uint32_t>(m), true),
                               detail::input_pins(static_cast<std::uint32_t>(m), false),
                               threshold, true);
    return nb.finish(std::move(out));
}

// A multiplier netlist with the modular reduction appended as a pure XOR
// network. mul_gates marks where the product ends and the reduction begins.
struct ModmulNetlist {
    Netlist net;
    std::size_t mul_gates = 0;
};

inline ModmulNetlist build_modmul(const FieldParams& fp, const MulStrategy& s) {
    std::size_t m = fp.m;
    detail::NetBuilder nb(static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(m),
                          static_cast<std::uint32_t>(m));
    auto pins_a = detail::input_pins(static_cast<std::uint32_t>(m), true);
    auto pins_b = detail::input_pins(static_cast<std::uint32_t>(m), false);

    std::vector<Ref> prod;
    switch (s.kind) {
        case MulKind::Cm:
            prod = detail::cm_block(nb, pins_a, pins_b);
            break;
        case MulKind::Km:
            if (!std::has_single_bit(m))
                throw not_power_of_two("build_modmul: km needs a power-of-two width");
            prod = detail::km_tree(nb, pins_a, pins_b, 0, false);
            break;
        case MulKind::Oka:
            if (!std::has_single_bit(m))
                throw not_power_of_two("build_modmul: oka needs a power-of-two width");
            prod = detail::oka_tree(nb, pins_a, pins_b);
            break;
        case MulKind::Hybrid: {
            std::size_t t = s.threshold;
            if (t == 0) {
                auto d = default_hybrid_threshold(m);
                if (!d)
                    throw invalid_threshold(
                        "build_modmul: no default hybrid threshold for width " +
                        std::to_string(m));
                t = *d;
            }
            if (t < 2)
                throw invalid_threshold("build_modmul: threshold must be >= 2");
            prod = detail::km_tree(nb, pins_a, pins_b, t, true);
            break;
        }
    }

    ModmulNetlist result;
    result.mul_gates = nb.gate_count();

    // Each product bit at position k >= m folds to the pattern x^k mod p;
    // walk the patterns incrementally and gather contributors per output bit.
    std::vector<std::vector<Ref>> contrib(m);
    for (std::size_t j = 0; j < m; ++j) contrib[j].push_back(prod[j]);
    BitPoly pattern = naive_mod(BitPoly::monomial(m), fp.p);
    BitPoly r = fp.r();
    for (std::size_t k = m; k <= 2 * m - 2; ++k) {
        for (std::size_t j = 0; j < m; ++j)
            if (pattern.bit(j)) contrib[j].push_back(prod[k]);
        pattern = pattern.shifted_left(1);
        if (pattern.bit(m)) {
            pattern.clear_bit(m);
            pattern ^= r;
        }
    }

    std::vector<Ref> outs(m);
    for (std::size_t j = 0; j < m; ++j) outs[j] = nb.xor_tree(std::move(contrib[j]));
    result.net = nb.finish(std::move(outs));
    return result;
}

inline void validate(const Netlist& nl) {
    for (std::size_t i = 0; i < nl.gates.size(); ++i) {
        detail::check_ref(nl, nl.gates[i].x, i, "validate");
        detail::check_ref(nl, nl.gates[i].y, i, "validate");
    }
    if (nl.outputs.size() != nl.width_out)
        throw error("validate: output count does not match declared width");
    for (const auto& r : nl.outputs)
        detail::check_ref(nl, r, nl.gates.size(), "validate");
}

inline BitPoly simulate(const Netlist& nl, const BitPoly& a, const BitPoly& b) {
    auto da = a.degree(), db = b.degree();
    if (da && *da >= nl.width_a)
        throw width_mismatch("simulate: operand a wider than declared pins");
    if (db && *db >= nl.width_b)
        throw width_mismatch("simulate: operand b wider than declared pins");

    std::vector<std::uint8_t> val(nl.gates.size());
    auto eval = [&](const Ref& r) -> std::uint8_t {
        switch (r.kind) {
            case Ref::Kind::A: return a.bit(r.index);
            case Ref::Kind::B: return b.bit(r.index);
            case Ref::Kind::Gate: return val[r.index];
            case Ref::Kind::Zero: return 0;
        }
        return 0;
    };
    for (std::size_t i = 0; i < nl.gates.size(); ++i) {
        const Gate& g = nl.gates[i];
        std::uint8_t x = eval(g.x), y = eval(g.y);
        val[i] = g.op == GateOp::And ? static_cast<std::uint8_t>(x & y)
                                     : static_cast<std::uint8_t>(x ^ y);
    }

    BitPoly out;
    for (std::size_t j = 0; j < nl.outputs.size(); ++j)
        if (eval(nl.outputs[j])) out.set_bit(j);
    return out;
}

inline NetlistStats stats(const Netlist& nl) {
    NetlistStats st;
    std::vector<std::pair<int, int>> depth(nl.gates.size());  // (and, xor)
    auto of = [&](const Ref& r) -> std::pair<int, int> {
        return r.kind == Ref::Kind::Gate ? depth[r.index] : std::pair<int, int>{0, 0};
    };
    for (std::size_t i = 0; i < nl.gates.size(); ++i) {
        const Gate& g = nl.gates[i];
        auto [xa, xx] = of(g.x);
        auto [ya, yx] = of(g.y);
        int da = std::max(xa, ya), dx = std::max(xx, yx);
        if (g.op == GateOp::And) {
            ++st.and_count;
            ++da;
        } else {
            ++st.xor_count;
            ++dx;
        }
        depth[i] = {da, dx};
    }
    for (const auto& r : nl.outputs) {
        auto [da, dx] = of(r);
        st.depth_and = std::max(st.depth_and, da);
        st.depth_xor = std::max(st.depth_xor, dx);
    }
    return st;
}

inline std::string ref_name(const Ref& r) {
    switch (r.kind) {
        case Ref::Kind::A: return "a" + std::to_string(r.index);
        case Ref::Kind::B: return "b" + std::to_string(r.index);
        case Ref::Kind::Gate: return "g" + std::to_string(r.index);
        case Ref::Kind::Zero: return "zero";
    }
    return "?";
}

inline std::string emit_text(const Netlist& nl) {
    std::string out;
    out.reserve(nl.gates.size() * 24 + nl.outputs.size() * 12 + 64);
    out += "width a " + std::to_string(nl.width_a) + "\n";
    out += "width b " + std::to_string(nl.width_b) + "\n";
    out += "width c " + std::to_string(nl.width_out) + "\n";
    for (std::size_t i = 0; i < nl.gates.size(); ++i) {
        const Gate& g = nl.gates[i];
        out += "g" + std::to_string(i) + " = " +
               (g.op == GateOp::And ? "AND " : "XOR ") + ref_name(g.x) + " " +
               ref_name(g.y) + "\n";
    }
    for (std::size_t j = 0; j < nl.outputs.size(); ++j)
        out += "c" + std::to_string(j) + " = " + ref_name(nl.outputs[j]) + "\n";
    return out;
}

namespace detail {

inline Ref parse_ref(std::string_view tok) {
    if (tok == "zero") return Ref::zero();
    if (tok.size() < 2) throw error("netlist parse: bad ref '" + std::string(tok) + "'");
    char kind = tok[0];
    std::uint32_t idx = 0;
    for (char c : tok.substr(1)) {
        if (c < '0' || c > '9')
            throw error("netlist parse: bad ref '" + std::string(tok) + "'");
        idx = idx * 10 + static_cast<std::uint32_t>(c - '0');
    }
    switch (kind) {
        case 'a': return Ref::a(idx);
        case 'b': return Ref::b(idx);
        case 'g': return Ref::gate(idx);
        default: throw error("netlist parse: bad ref '" + std::string(tok) + "'");
    }
}

}  // namespace detail

inline Netlist parse_text(std::string_view text) {
    Netlist nl;
    std::size_t next_gate = 0;
    std::vector<Ref> outputs;
    std::size_t pos = 0;
    auto next_token = [](std::string_view& line) -> std::string_view {
        std::size_t b = line.find_first_not_of(' ');
        if (b == std::string_view::npos) return {};
        std::size_t e = line.find(' ', b);
        auto tok = line.substr(b, e == std::string_view::npos ? e : e - b);
        line.remove_prefix(e == std::string_view::npos ? line.size() : e);
        return tok;
    };
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        if (line.empty() || line[0] == '#') continue;

        if (line.starts_with("width ")) {
            std::string_view rest = line.substr(6);
            auto which = next_token(rest);
            auto num = next_token(rest);
            std::uint32_t v = 0;
            for (char c : num) {
                if (c < '0' || c > '9') throw error("netlist parse: bad width line");
                v = v * 10 + static_cast<std::uint32_t>(c - '0');
            }
            if (which == "a") nl.width_a = v;
            else if (which == "b") nl.width_b = v;
            else if (which == "c") nl.width_out = v;
            else throw error("netlist parse: unknown width pin");
            continue;
        }

        std::string_view rest = line;
        auto lhs = next_token(rest);
        auto eq = next_token(rest);
        if (eq != "=") throw error("netlist parse: expected '=' in line");
        if (lhs.size() >= 2 && lhs[0] == 'g') {
            auto op = next_token(rest);
            auto x = next_token(rest);
            auto y = next_token(rest);
            Ref lref = detail::parse_ref(lhs);
            if (lref.kind != Ref::Kind::Gate || lref.index != next_gate)
                throw error("netlist parse: gate ids must be dense and ordered");
            GateOp o;
            if (op == "AND") o = GateOp::And;
            else if (op == "XOR") o = GateOp::Xor;
            else throw error("netlist parse: unknown op '" + std::string(op) + "'");
            nl.gates.push_back({o, detail::parse_ref(x), detail::parse_ref(y)});
            ++next_gate;
        } else if (lhs.size() >= 2 && lhs[0] == 'c') {
            std::uint32_t idx = 0;
            for (char c : lhs.substr(1)) {
                if (c < '0' || c > '9') throw error("netlist parse: bad output id");
                idx = idx * 10 + static_cast<std::uint32_t>(c - '0');
            }
            if (idx != outputs.size())
                throw error("netlist parse: output ids must be dense and ordered");
            outputs.push_back(detail::parse_ref(next_token(rest)));
        } else {
            throw error("netlist parse: unrecognised line '" + std::string(line) + "'");
        }
    }
    nl.outputs = std::move(outputs);
    validate(nl);
    return nl;
}

}  // namespace gf2mul
