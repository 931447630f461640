// Gate-level complexity model for the multiplier schemes: closed-form AND and
// XOR counts plus critical-path depth in units of one AND delay (T_a) and one
// XOR delay (T_x). The area-delay product collapses a cost record to a scalar
// under caller-supplied weights, and the threshold scan evaluates the hybrid
// trade-off at every feasible recursion depth for a width.
//
// Count conventions, pinned by the tests:
//   cm       m^2 AND, (m-1)^2 XOR, T_a + ceil(log2 m) T_x
//   km/oka   3^(log2 m) AND, 6*3^(log2 m) - 8m + 2 XOR (powers of two only);
//            km delay 3*ceil(log2(m-1)) T_x except m = 2, which is pinned to
//            2 T_x from the generated circuit (the formula degenerates to 0
//            there); oka delay 2*ceil(log2(m-1)) T_x with the alternate
//            closed form 2*log2(m) - 1 reported alongside
//   hybrid   k split levels over ceil-width leaves w = ceil(m/2^k):
//            3^k * w^2 AND, 3^k * (w-1)^2 + 8m((3/2)^k - 1) - 2(3^k - 1) XOR
//            (rounded to nearest when 2^k does not divide 8m), delay
//            T_a + (3k + ceil(log2 w)) T_x. k = 0 reduces to the cm row.

#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gf2mul/errors.hpp"

namespace gf2mul {

struct GateCost {
    std::string scheme;
    std::size_t m = 0;
    std::size_t k = 0;  // split levels (hybrid); lg(m)-1 for km/oka; 0 for cm
    long long and_count = 0;
    long long xor_count = 0;
    int delay_ta = 0;  // AND gates on the critical path, 0 or 1
    int delay_tx = 0;  // XOR gates on the critical path
    std::optional<int> delay_tx_alt;  // alternate closed form, oka only
};

namespace detail {

inline int ceil_log2(std::size_t x) {
    return x <= 1 ? 0 : static_cast<int>(std::bit_width(x - 1));
}

inline long long pow3(std::size_t k) {
    long long r = 1;
    while (k--) r *= 3;
    return r;
}

}  // namespace detail

inline GateCost cost_cm(std::size_t m) {
    if (m == 0) throw operand_too_large("cost_cm: width must be >= 1");
    auto mm = static_cast<long long>(m);
    return {"cm", m, 0, mm * mm, (mm - 1) * (mm - 1), 1, detail::ceil_log2(m), {}};
}

// Model delay of the full Karatsuba recursion; defined for any m >= 2 so the
// padded-width comparison in the threshold scan can quote it directly.
inline int km_model_delay_tx(std::size_t m) {
    return m == 2 ? 2 : 3 * detail::ceil_log2(m - 1);
}

inline GateCost cost_km(std::size_t m) {
    if (!std::has_single_bit(m) || m < 2)
        throw not_power_of_two("cost_km: width must be a power of two >= 2, got " +
                               std::to_string(m));
    std::size_t lg = static_cast<std::size_t>(std::countr_zero(m));
    long long a = detail::pow3(lg);
    return {"km", m, lg ? lg - 1 : 0, a, 6 * a - 8 * static_cast<long long>(m) + 2,
            1, km_model_delay_tx(m), {}};
}

inline GateCost cost_oka(std::size_t m) {
    if (!std::has_single_bit(m) || m < 2)
        throw not_power_of_two("cost_oka: width must be a power of two >= 2, got " +
                               std::to_string(m));
    std::size_t lg = static_cast<std::size_t>(std::countr_zero(m));
    long long a = detail::pow3(lg);
    GateCost c{"oka", m, lg ? lg - 1 : 0, a, 6 * a - 8 * static_cast<long long>(m) + 2,
               1, 2 * detail::ceil_log2(m - 1), {}};
    c.delay_tx_alt = 2 * static_cast<int>(lg) - 1;
    return c;
}

inline GateCost cost_hybrid(std::size_t m, std::size_t k) {
    if (m == 0) throw operand_too_large("cost_hybrid: width must be >= 1");
    std::size_t kmax = std::bit_width(m) - 1;  // floor(log2 m)
    kmax = kmax > 0 ? kmax - 1 : 0;
    if (k > kmax)
        throw invalid_level_count("cost_hybrid: k = " + std::to_string(k) +
                                  " exceeds max " + std::to_string(kmax) +
                                  " for m = " + std::to_string(m));
    long long p3 = detail::pow3(k);
    long long p2 = 1LL << k;
    long long leaf = static_cast<long long>((m + (std::size_t{1} << k) - 1) >> k);
    long long mm = static_cast<long long>(m);
    // 8m((3/2)^k - 1) as a rounded rational: 8m(3^k - 2^k) / 2^k.
    long long num = 8 * mm * (p3 - p2);
    long long mid = (2 * num + p2) / (2 * p2);
    GateCost c{"hybrid", m, k, p3 * leaf * leaf,
               p3 * (leaf - 1) * (leaf - 1) + mid - 2 * (p3 - 1), 1,
               3 * static_cast<int>(k) + detail::ceil_log2(static_cast<std::size_t>(leaf)),
               {}};
    return c;
}

struct CostWeights {
    double area_and = 1.0;
    double area_xor = 1.0;
    double delay_and = 1.0;
    double delay_xor = 1.0;
};

// Area-delay product: (weighted gate count) * (weighted path depth).
inline double adp(const GateCost& c, const CostWeights& w = {}) {
    if (w.area_and <= 0 || w.area_xor <= 0 || w.delay_and <= 0 || w.delay_xor <= 0)
        throw non_positive_weight{};
    double area = static_cast<double>(c.and_count) * w.area_and +
                  static_cast<double>(c.xor_count) * w.area_xor;
    double delay = c.delay_ta * w.delay_and + c.delay_tx * w.delay_xor;
    return area * delay;
}

struct ThresholdScanRow {
    std::size_t k = 0;
    std::size_t leaf = 0;
    GateCost cost;
    double adp = 0.0;
};

struct ThresholdScan {
    std::size_t m = 0;
    CostWeights weights;
    std::vector<ThresholdScanRow> rows;
    std::size_t best_k = 0;
    std::size_t best_leaf = 0;
};

// Evaluate the hybrid cost at every feasible split depth and pick the
// weighted-ADP minimum (ties go to fewer levels). The whole table is part of
// the result so a caller can second-guess the pick.
inline ThresholdScan optimal_threshold(std::size_t m, const CostWeights& w = {}) {
    if (m == 0) throw operand_too_large("optimal_threshold: width must be >= 1");
    ThresholdScan scan;
    scan.m = m;
    scan.weights = w;
    std::size_t kmax = std::bit_width(m) - 1;
    kmax = kmax > 0 ? kmax - 1 : 0;
    for (std::size_t k = 0; k <= kmax; ++k) {
        ThresholdScanRow row;
        row.k = k;
        row.cost = cost_hybrid(m, k);
        row.leaf = (m + (std::size_t{1} << k) - 1) >> k;
        row.adp = adp(row.cost, w);
        scan.rows.push_back(row);
    }
    const auto* best = &scan.rows.front();
    for (const auto& r : scan.rows)
        if (r.adp < best->adp) best = &r;
    scan.best_k = best->k;
    scan.best_leaf = best->leaf;
    return scan;
}

// Flat serializers with a fixed column set shared by every cost row:
// scheme, m, k, leaf, and_count, xor_count, delay_ta, delay_tx,
// delay_tx_alt (empty unless the scheme reports one), adp.

inline std::string cost_csv_header() {
    return "scheme,m,k,leaf,and_count,xor_count,delay_ta,delay_tx,delay_tx_alt,adp";
}

namespace detail {

inline std::string fmt_adp(double v) {
    std::ostringstream os;
    os.precision(15);
    os << v;
    return os.str();
}

}  // namespace detail

inline std::string cost_csv_row(const GateCost& c, std::size_t leaf, double adp_value) {
    std::ostringstream os;
    os << c.scheme << ',' << c.m << ',' << c.k << ',' << leaf << ',' << c.and_count
       << ',' << c.xor_count << ',' << c.delay_ta << ',' << c.delay_tx << ',';
    if (c.delay_tx_alt) os << *c.delay_tx_alt;
    os << ',' << detail::fmt_adp(adp_value);
    return os.str();
}

inline std::string cost_json_row(const GateCost& c, std::size_t leaf, double adp_value) {
    std::ostringstream os;
    os << "{\"scheme\":\"" << c.scheme << "\",\"m\":" << c.m << ",\"k\":" << c.k
       << ",\"leaf\":" << leaf << ",\"and_count\":" << c.and_count
       << ",\"xor_count\":" << c.xor_count << ",\"delay_ta\":" << c.delay_ta
       << ",\"delay_tx\":" << c.delay_tx << ",\"delay_tx_alt\":";
    if (c.delay_tx_alt) os << *c.delay_tx_alt;
    else os << "null";
    os << ",\"adp\":" << detail::fmt_adp(adp_value) << "}";
    return os.str();
}

inline std::string scan_to_csv(const ThresholdScan& s) {
    std::string out = cost_csv_header();
    out.push_back('\n');
    for (const auto& r : s.rows) {
        out += cost_csv_row(r.cost, r.leaf, r.adp);
        out.push_back('\n');
    }
    return out;
}

inline std::string scan_to_json(const ThresholdScan& s) {
    std::string out = "{\"m\":" + std::to_string(s.m) + ",\"best_k\":" +
                      std::to_string(s.best_k) + ",\"best_leaf\":" +
                      std::to_string(s.best_leaf) + ",\"rows\":[";
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
        if (i) out.push_back(',');
        out += cost_json_row(s.rows[i].cost, s.rows[i].leaf, s.rows[i].adp);
    }
    out += "]}";
    return out;
}

}  // namespace gf2mul
