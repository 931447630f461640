// Command-line front end: carry-less and field multiplication, gate-cost
// estimates and threshold scans, netlist generation/verification, a seeded
// benchmark, and batch self-verification sweeps.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.
// GF2MUL_FORMAT (table|csv|json) supplies the default for --format flags.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gf2mul/gf2mul.hpp"

namespace {

using gf2mul::BitPoly;
using gf2mul::FieldParams;
using gf2mul::MulStrategy;
using gf2mul::Netlist;
using gf2mul::ReductionKind;

std::string default_format(const char* fallback) {
    const char* env = std::getenv("GF2MUL_FORMAT");
    if (!env) return fallback;
    std::string v = env;
    return v == "table" || v == "csv" || v == "json" ? v : fallback;
}

ReductionKind parse_reduction(const std::string& s) {
    if (s == "auto") return ReductionKind::Auto;
    if (s == "generic") return ReductionKind::Generic;
    if (s == "unified") return ReductionKind::Unified;
    if (s == "tabled") return ReductionKind::Tabled;
    throw gf2mul::error("unknown reduction kind: " + s);
}

// ---------------------------------------------------------------- mul

int run_mul(std::size_t n, const std::string& strat, const std::string& a_hex,
            const std::string& b_hex) {
    MulStrategy s = MulStrategy::parse(strat);
    BitPoly a = BitPoly::from_hex(a_hex), b = BitPoly::from_hex(b_hex);
    std::cout << gf2mul::mul(a, b, n, s).to_hex() << "\n";
    return 0;
}

// ---------------------------------------------------------------- modmul

int run_modmul(const std::string& field, const std::string& strat,
               const std::string& reduction, const std::string& a_hex,
               const std::string& b_hex) {
    FieldParams fp = gf2mul::nist_field(field);
    MulStrategy s = MulStrategy::parse(strat);
    BitPoly a = BitPoly::from_hex(a_hex), b = BitPoly::from_hex(b_hex);
    std::cout << gf2mul::modmul(a, b, fp, s, parse_reduction(reduction)).to_hex()
              << "\n";
    return 0;
}

// ---------------------------------------------------------------- estimate

void print_cost_table_header() {
    std::cout << std::left << std::setw(8) << "scheme" << std::right
              << std::setw(6) << "m" << std::setw(4) << "k" << std::setw(6)
              << "leaf" << std::setw(11) << "and_count" << std::setw(11)
              << "xor_count" << std::setw(9) << "delay_ta" << std::setw(9)
              << "delay_tx" << std::setw(13) << "delay_tx_alt" << std::setw(14)
              << "adp" << "\n";
}

void print_cost_table_row(const gf2mul::GateCost& c, std::size_t leaf, double adp) {
    std::cout << std::left << std::setw(8) << c.scheme << std::right
              << std::setw(6) << c.m << std::setw(4) << c.k << std::setw(6)
              << leaf << std::setw(11) << c.and_count << std::setw(11)
              << c.xor_count << std::setw(9) << c.delay_ta << std::setw(9)
              << c.delay_tx << std::setw(13)
              << (c.delay_tx_alt ? std::to_string(*c.delay_tx_alt) : "-")
              << std::setw(14) << adp << "\n";
}

int run_estimate(std::size_t m, const std::string& scheme, std::size_t levels,
                 bool scan, const std::string& format) {
    if (scan) {
        auto s = gf2mul::optimal_threshold(m);
        if (format == "csv") {
            std::cout << gf2mul::scan_to_csv(s);
        } else if (format == "json") {
            std::cout << gf2mul::scan_to_json(s) << "\n";
        } else {
            print_cost_table_header();
            for (const auto& r : s.rows) print_cost_table_row(r.cost, r.leaf, r.adp);
            std::cout << "best: k=" << s.best_k << " leaf=" << s.best_leaf << "\n";
        }
        return 0;
    }

    // One row per requested scheme; with no --scheme, every scheme that is
    // well defined at this width.
    std::vector<std::pair<gf2mul::GateCost, std::size_t>> rows;
    auto add = [&](const std::string& which) {
        if (which == "cm") {
            rows.emplace_back(gf2mul::cost_cm(m), m);
        } else if (which == "km") {
            rows.emplace_back(gf2mul::cost_km(m), 2);
        } else if (which == "oka") {
            rows.emplace_back(gf2mul::cost_oka(m), 2);
        } else {
            auto c = gf2mul::cost_hybrid(m, levels);
            rows.emplace_back(c, (m + (std::size_t{1} << levels) - 1) >> levels);
        }
    };
    if (!scheme.empty()) {
        add(scheme);
    } else {
        for (const char* which : {"cm", "km", "oka", "hybrid"}) {
            try {
                add(which);
            } catch (const gf2mul::error&) {
                // width not admissible for this scheme; skip the row
            }
        }
    }

    if (format == "csv") {
        std::cout << gf2mul::cost_csv_header() << "\n";
        for (const auto& [c, leaf] : rows)
            std::cout << gf2mul::cost_csv_row(c, leaf, gf2mul::adp(c)) << "\n";
    } else if (format == "json") {
        std::cout << "[";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << gf2mul::cost_json_row(rows[i].first, rows[i].second,
                                               gf2mul::adp(rows[i].first));
        }
        std::cout << "]\n";
    } else {
        print_cost_table_header();
        for (const auto& [c, leaf] : rows)
            print_cost_table_row(c, leaf, gf2mul::adp(c));
    }
    return 0;
}

// ---------------------------------------------------------------- netlist

struct BuiltNet {
    Netlist net;
    std::size_t mul_gates = 0;  // boundary of the reduction part, modmul only
    bool is_modmul = false;
    std::optional<FieldParams> fp;
    MulStrategy strategy;          // modmul only
    std::optional<gf2mul::GateCost> model;
};

BuiltNet build_for_cli(const std::string& build, std::size_t n, std::size_t threshold,
                       const std::string& field, const std::string& strat) {
    BuiltNet out;
    if (build == "modmul") {
        if (field.empty())
            throw gf2mul::error("netlist --build modmul requires --field");
        out.fp = gf2mul::nist_field(field);
        out.strategy = MulStrategy::parse(strat);
        auto mm = gf2mul::build_modmul(*out.fp, out.strategy);
        out.net = std::move(mm.net);
        out.mul_gates = mm.mul_gates;
        out.is_modmul = true;
        return out;
    }
    if (n == 0) throw gf2mul::error("netlist --build " + build + " requires --n");
    if (build == "cm") {
        out.net = gf2mul::build_cm(n);
        out.model = gf2mul::cost_cm(n);
    } else if (build == "km") {
        out.net = gf2mul::build_km(n);
        out.model = gf2mul::cost_km(n);
    } else if (build == "oka") {
        out.net = gf2mul::build_oka(n);
        out.model = gf2mul::cost_oka(n);
    } else {
        std::size_t t = threshold;
        if (t == 0) {
            auto d = gf2mul::default_hybrid_threshold(n);
            if (!d)
                throw gf2mul::invalid_threshold(
                    "no default hybrid threshold for width " + std::to_string(n) +
                    "; pass --threshold");
            t = *d;
        }
        out.net = gf2mul::build_hybrid(n, t);
        try {
            auto plan = gf2mul::split_sequence(n, t);
            out.model = gf2mul::cost_hybrid(n, plan.levels.size());
        } catch (const gf2mul::error&) {
            // no closed form at this depth; stats are printed without a model
        }
    }
    return out;
}

int run_netlist(const std::string& build, std::size_t n, std::size_t threshold,
                const std::string& field, const std::string& strat,
                const std::string& emit, std::size_t verify_trials, bool show_stats,
                std::uint64_t seed, const std::string& format) {
    BuiltNet b = build_for_cli(build, n, threshold, field, strat);
    gf2mul::validate(b.net);

    bool did_something = false;
    if (!emit.empty()) {
        std::string text = gf2mul::emit_text(b.net);
        if (emit == "-") {
            std::cout << text;
        } else {
            std::ofstream f(emit);
            if (!f) throw gf2mul::error("cannot open " + emit + " for writing");
            f << text;
        }
        did_something = true;
    }

    if (verify_trials > 0) {
        std::mt19937_64 rng(seed);
        for (std::size_t i = 0; i < verify_trials; ++i) {
            BitPoly a = BitPoly::random(b.net.width_a, rng);
            BitPoly bb = BitPoly::random(b.net.width_b, rng);
            BitPoly got = gf2mul::simulate(b.net, a, bb);
            BitPoly want = b.is_modmul
                               ? gf2mul::modmul(a, bb, *b.fp, b.strategy)
                               : gf2mul::naive_clmul(a, bb);
            if (got != want) {
                std::cout << "mismatch at trial " << i << ": a=" << a.to_hex()
                          << " b=" << bb.to_hex() << " got=" << got.to_hex()
                          << " want=" << want.to_hex() << "\n";
                return 1;
            }
        }
        std::cout << "verify: " << verify_trials << " trials ok\n";
        did_something = true;
    }

    if (show_stats) {
        auto st = gf2mul::stats(b.net);
        long long red_and = 0, red_xor = 0, mul_and = 0, mul_xor = 0;
        if (b.is_modmul) {
            for (std::size_t i = 0; i < b.net.gates.size(); ++i) {
                bool is_and = b.net.gates[i].op == gf2mul::GateOp::And;
                if (i < b.mul_gates) (is_and ? mul_and : mul_xor)++;
                else (is_and ? red_and : red_xor)++;
            }
        }
        if (format == "csv") {
            std::cout << "and_count,xor_count,depth_and,depth_xor\n"
                      << st.and_count << ',' << st.xor_count << ','
                      << st.depth_and << ',' << st.depth_xor << "\n";
        } else if (format == "json") {
            nlohmann::json j;
            j["netlist"] = {{"and_count", st.and_count},
                            {"xor_count", st.xor_count},
                            {"depth_and", st.depth_and},
                            {"depth_xor", st.depth_xor}};
            if (b.model) {
                j["model"] = {{"scheme", b.model->scheme},
                              {"and_count", b.model->and_count},
                              {"xor_count", b.model->xor_count},
                              {"delay_ta", b.model->delay_ta},
                              {"delay_tx", b.model->delay_tx}};
            } else {
                j["model"] = nullptr;
            }
            if (b.is_modmul) {
                j["multiplier"] = {{"and_count", mul_and}, {"xor_count", mul_xor}};
                j["reduction"] = {{"and_count", red_and}, {"xor_count", red_xor}};
            }
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "netlist: and_count=" << st.and_count
                      << " xor_count=" << st.xor_count
                      << " depth_and=" << st.depth_and
                      << " depth_xor=" << st.depth_xor << "\n";
            if (b.model) {
                std::cout << "model:   and_count=" << b.model->and_count
                          << " xor_count=" << b.model->xor_count
                          << " delay_ta=" << b.model->delay_ta
                          << " delay_tx=" << b.model->delay_tx << "\n";
                std::cout << "diff:    and_count="
                          << st.and_count - b.model->and_count
                          << " xor_count=" << st.xor_count - b.model->xor_count
                          << "\n";
            }
            if (b.is_modmul) {
                std::cout << "multiplier portion: and_count=" << mul_and
                          << " xor_count=" << mul_xor << "\n";
                std::cout << "reduction portion:  and_count=" << red_and
                          << " xor_count=" << red_xor << "\n";
            }
        }
        did_something = true;
    }

    if (!did_something) std::cout << gf2mul::emit_text(b.net);
    return 0;
}

// ---------------------------------------------------------------- bench

int run_bench(const std::string& field, const std::string& strat, std::size_t trials,
              std::uint64_t seed, const std::string& format) {
    FieldParams fp = gf2mul::nist_field(field);
    MulStrategy s = MulStrategy::parse(strat);

    std::mt19937_64 rng(seed);
    std::vector<std::pair<BitPoly, BitPoly>> ops;
    ops.reserve(trials);
    for (std::size_t i = 0; i < trials; ++i)
        ops.emplace_back(BitPoly::random(fp.m, rng), BitPoly::random(fp.m, rng));

    std::vector<std::uint64_t> ns(trials);
    std::uint64_t checksum = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        BitPoly r = gf2mul::modmul(ops[i].first, ops[i].second, fp, s);
        auto t1 = std::chrono::steady_clock::now();
        auto d = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
        ns[i] = d > 0 ? static_cast<std::uint64_t>(d) : 1;
        for (std::uint64_t w : r.words()) checksum ^= w;
    }

    std::uint64_t total = 0;
    for (auto v : ns) total += v;
    std::vector<std::uint64_t> sorted = ns;
    std::sort(sorted.begin(), sorted.end());
    std::uint64_t median = sorted[trials / 2];
    std::uint64_t mean = total / trials;

    std::ostringstream ck;
    ck << std::hex << std::setfill('0') << std::setw(16) << checksum;

    if (format == "csv") {
        std::cout << "scheme,field,m,trials,seed,total_ns,median_ns,mean_ns,checksum\n"
                  << s.name() << ',' << fp.name << ',' << fp.m << ',' << trials
                  << ',' << seed << ',' << total << ',' << median << ',' << mean
                  << ',' << ck.str() << "\n";
    } else if (format == "json") {
        nlohmann::json j{{"scheme", s.name()},     {"field", fp.name},
                         {"m", fp.m},              {"trials", trials},
                         {"seed", seed},           {"total_ns", total},
                         {"median_ns", median},    {"mean_ns", mean},
                         {"checksum", ck.str()}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "scheme=" << s.name() << " field=" << fp.name << " m=" << fp.m
                  << " trials=" << trials << " seed=" << seed << "\n"
                  << "total_ns=" << total << " median_ns=" << median
                  << " mean_ns=" << mean << "\n"
                  << "checksum=" << ck.str() << "\n"
                  << "note: software timings on this host; not comparable to "
                     "hardware gate delays\n";
    }
    return 0;
}

// ---------------------------------------------------------------- verify

struct Verifier {
    int failures = 0;

    void report(const std::string& name, bool ok, const std::string& detail) {
        if (ok) {
            std::cout << "[ ok ] " << name << "\n";
        } else {
            std::cout << "[FAIL] " << name << ": " << detail << "\n";
            ++failures;
        }
    }
};

std::string pair_detail(std::size_t n, const BitPoly& a, const BitPoly& b,
                        const std::string& what) {
    return "n=" + std::to_string(n) + " a=" + a.to_hex() + " b=" + b.to_hex() +
           " (" + what + ")";
}

bool check_strategies(std::size_t n, const BitPoly& a, const BitPoly& b,
                      std::string& detail) {
    BitPoly want = gf2mul::naive_clmul(a, b);
    for (const char* strat : {"cm", "km", "oka", "hybrid:2"}) {
        if (gf2mul::mul(a, b, n, MulStrategy::parse(strat)) != want) {
            detail = pair_detail(n, a, b, strat);
            return false;
        }
    }
    return true;
}

void verify_registry(Verifier& v, const std::vector<FieldParams>& fields) {
    std::string detail;
    bool ok = true;
    for (const auto& fp : fields) {
        auto d = fp.p.degree();
        if (!d || *d != fp.m) {
            ok = false;
            detail = fp.name + ": degree(p) != m";
            break;
        }
        if (!fp.p.bit(0)) {
            ok = false;
            detail = fp.name + ": constant term missing";
            break;
        }
        std::size_t terms = fp.p.term_count();
        if (terms != 3 && terms != 5) {
            ok = false;
            detail = fp.name + ": " + std::to_string(terms) +
                     " terms, expected a trinomial or pentanomial";
            break;
        }
        if (gf2mul::naive_mod(BitPoly::monomial(fp.m), fp.p) != fp.r()) {
            ok = false;
            detail = fp.name + ": x^m mod p != r";
            break;
        }
    }
    v.report("registry invariants", ok, detail);
}

void verify_strategy_equivalence(Verifier& v, bool full) {
    std::string detail;
    bool ok = true;
    std::size_t nmax = full ? 8 : 6;
    for (std::size_t n = 1; ok && n <= nmax; ++n)
        for (std::uint64_t av = 0; ok && av < (std::uint64_t{1} << n); ++av)
            for (std::uint64_t bv = 0; ok && bv < (std::uint64_t{1} << n); ++bv)
                ok = check_strategies(n, BitPoly::from_word(av),
                                      BitPoly::from_word(bv), detail);
    v.report("strategy equivalence, exhaustive n<=" + std::to_string(nmax), ok,
             detail);

    std::mt19937_64 rng(12345);
    std::vector<std::size_t> widths{41, 64, 163};
    if (full) widths.insert(widths.end(), {233, 283, 571});
    std::size_t trials = full ? 200 : 50;
    ok = true;
    for (std::size_t n : widths)
        for (std::size_t i = 0; ok && i < trials; ++i)
            ok = check_strategies(n, BitPoly::random(n, rng),
                                  BitPoly::random(n, rng), detail);
    v.report("strategy equivalence, random widths", ok, detail);
}

void verify_reduction(Verifier& v, const std::vector<FieldParams>& fields, bool full) {
    std::string detail;
    bool ok = true;
    std::mt19937_64 rng(23456);
    std::size_t trials = full ? 2000 : 200;
    for (const auto& fp : fields) {
        bool unified = gf2mul::unified_applicable(fp);
        auto table = gf2mul::build_table(fp);
        for (std::size_t i = 0; ok && i < trials; ++i) {
            BitPoly c = BitPoly::random(2 * fp.m - 1, rng);
            BitPoly want = gf2mul::naive_mod(c, fp.p);
            if (gf2mul::reduce_generic(c, fp) != want ||
                gf2mul::reduce_tabled(c, fp, table) != want ||
                (unified && gf2mul::reduce_unified(c, fp) != want)) {
                ok = false;
                detail = fp.name + ": c=" + c.to_hex();
            }
        }
        if (!ok) break;
    }
    v.report("reduction path agreement", ok, detail);
}

MulStrategy axiom_strategy(const FieldParams& fp) {
    return gf2mul::default_hybrid_threshold(fp.m) ? MulStrategy::parse("hybrid")
                                                  : MulStrategy::cm();
}

void verify_axioms(Verifier& v, const std::vector<FieldParams>& fields, bool full) {
    std::string detail;
    bool ok = true;
    std::mt19937_64 rng(34567);
    std::size_t trials = full ? 200 : 25;
    for (const auto& fp : fields) {
        MulStrategy s = axiom_strategy(fp);
        for (std::size_t i = 0; ok && i < trials; ++i) {
            BitPoly a = BitPoly::random(fp.m, rng);
            BitPoly b = BitPoly::random(fp.m, rng);
            BitPoly c = BitPoly::random(fp.m, rng);
            BitPoly ab = gf2mul::modmul(a, b, fp, s);
            BitPoly ba = gf2mul::modmul(b, a, fp, s);
            BitPoly abc1 = gf2mul::modmul(ab, c, fp, s);
            BitPoly abc2 = gf2mul::modmul(a, gf2mul::modmul(b, c, fp, s), fp, s);
            BitPoly dist1 = gf2mul::modmul(a, b ^ c, fp, s);
            BitPoly dist2 = gf2mul::modmul(a, b, fp, s) ^ gf2mul::modmul(a, c, fp, s);
            BitPoly ident = gf2mul::modmul(a, BitPoly::one(), fp, s);
            if (ab != ba || abc1 != abc2 || dist1 != dist2 || ident != a) {
                ok = false;
                detail = fp.name + ": a=" + a.to_hex() + " b=" + b.to_hex() +
                         " c=" + c.to_hex();
            }
        }
        if (!ok) break;
    }
    v.report("field axioms", ok, detail);
}

void verify_fermat(Verifier& v, const std::vector<FieldParams>& fields, bool full) {
    std::string detail;
    bool ok = true;
    std::mt19937_64 rng(45678);
    for (const auto& fp : fields) {
        bool big = fp.name.starts_with("B-");
        if (big && !full) continue;
        MulStrategy s = axiom_strategy(fp);
        std::size_t elems = big ? 10 : 5;
        for (std::size_t i = 0; ok && i < elems; ++i) {
            BitPoly a = BitPoly::random(fp.m, rng);
            if (a.is_zero()) a = BitPoly::one();
            if (gf2mul::field_pow(a, BitPoly::monomial(fp.m), fp, s) != a) {
                ok = false;
                detail = fp.name + ": a=" + a.to_hex();
                if (fp.name == "B-233")
                    detail += " (x^233 + x^70 + 1 is reducible; the identity"
                              " holds only over an irreducible modulus)";
            }
        }
        if (!ok) break;
    }
    v.report("fermat identity", ok, detail);
}

void verify_netlists(Verifier& v, const std::vector<FieldParams>& fields, bool full) {
    std::string detail;
    bool ok = true;

    for (std::size_t n = 1; ok && n <= (full ? 32u : 16u); ++n) {
        auto st = gf2mul::stats(gf2mul::build_cm(n));
        auto model = gf2mul::cost_cm(n);
        if (st.and_count != model.and_count || st.xor_count != model.xor_count ||
            st.depth_and != model.delay_ta || st.depth_xor != model.delay_tx) {
            ok = false;
            detail = "cm n=" + std::to_string(n);
        }
    }

    std::vector<std::size_t> pows{2, 4, 8, 16};
    if (full) pows.insert(pows.end(), {32, 64});
    for (std::size_t n : pows) {
        if (!ok) break;
        auto km = gf2mul::stats(gf2mul::build_km(n));
        auto oka = gf2mul::stats(gf2mul::build_oka(n));
        auto model = gf2mul::cost_km(n);
        if (km.and_count != model.and_count || km.xor_count != model.xor_count ||
            oka.and_count != model.and_count || oka.xor_count != model.xor_count) {
            ok = false;
            detail = "km/oka counts n=" + std::to_string(n);
        } else if (n >= 8 && oka.depth_xor >= km.depth_xor) {
            ok = false;
            detail = "oka depth not below km at n=" + std::to_string(n);
        }
    }
    v.report("netlist formula conformance", ok, detail);

    ok = true;
    std::mt19937_64 rng(56789);
    Netlist nets[] = {gf2mul::build_cm(16), gf2mul::build_km(16),
                      gf2mul::build_oka(16), gf2mul::build_hybrid(16, 4)};
    for (int i = 0; ok && i < 50; ++i) {
        BitPoly a = BitPoly::random(16, rng), b = BitPoly::random(16, rng);
        BitPoly want = gf2mul::naive_clmul(a, b);
        for (const auto& nl : nets)
            if (gf2mul::simulate(nl, a, b) != want) {
                ok = false;
                detail = pair_detail(16, a, b, "simulation");
            }
    }

    const FieldParams* b163 = nullptr;
    for (const auto& fp : fields)
        if (fp.name == "B-163") b163 = &fp;
    if (ok && b163) {
        MulStrategy s = MulStrategy::parse("hybrid:41");
        auto mm = gf2mul::build_modmul(*b163, s);
        std::size_t trials = full ? 100 : 20;
        for (std::size_t i = 0; ok && i < trials; ++i) {
            BitPoly a = BitPoly::random(163, rng), b = BitPoly::random(163, rng);
            if (gf2mul::simulate(mm.net, a, b) != gf2mul::modmul(a, b, *b163, s)) {
                ok = false;
                detail = pair_detail(163, a, b, "modmul netlist");
            }
        }
    }
    v.report("netlist simulation fidelity", ok, detail);
}

int run_verify(const std::string& level, bool corrupt) {
    bool full = level == "full";
    std::vector<FieldParams> fields(gf2mul::field_registry().begin(),
                                    gf2mul::field_registry().end());
    if (corrupt) {
        for (auto& fp : fields)
            if (fp.name == "B-163") fp.p.flip_bit(1);
    }

    Verifier v;
    verify_registry(v, fields);
    verify_strategy_equivalence(v, full);
    verify_reduction(v, fields, full);
    verify_axioms(v, fields, full);
    verify_fermat(v, fields, full);
    verify_netlists(v, fields, full);

    if (v.failures) {
        std::cout << v.failures << " suite(s) failed\n";
        return 1;
    }
    std::cout << "all suites passed\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GF(2^m) carry-less multiplication toolkit"};
    app.require_subcommand(1);

    // mul
    std::size_t mul_n = 0;
    std::string mul_strategy = "cm", mul_a, mul_b;
    auto* mul = app.add_subcommand("mul", "Carry-less product of two polynomials");
    mul->add_option("--n", mul_n, "operand width in bits")->required();
    mul->add_option("--strategy", mul_strategy, "cm|km|oka|hybrid[:threshold]");
    mul->add_option("--a", mul_a, "first operand, big-endian hex")->required();
    mul->add_option("--b", mul_b, "second operand, big-endian hex")->required();

    // modmul
    std::string mm_field, mm_strategy = "hybrid", mm_reduction = "auto", mm_a, mm_b;
    auto* modmul = app.add_subcommand("modmul", "Field product modulo a registry polynomial");
    modmul->add_option("--field", mm_field, "registry name, e.g. B-163")->required();
    modmul->add_option("--strategy", mm_strategy, "cm|km|oka|hybrid[:threshold]");
    modmul->add_option("--reduction", mm_reduction, "auto|generic|unified|tabled")
        ->check(CLI::IsMember({"auto", "generic", "unified", "tabled"}));
    modmul->add_option("--a", mm_a, "first operand, big-endian hex")->required();
    modmul->add_option("--b", mm_b, "second operand, big-endian hex")->required();

    // estimate
    std::size_t est_m = 0, est_levels = 1;
    std::string est_scheme, est_format = default_format("table");
    bool est_scan = false;
    auto* estimate = app.add_subcommand("estimate", "Closed-form gate cost model");
    estimate->add_option("--m", est_m, "operand width in bits")->required();
    estimate->add_option("--scheme", est_scheme, "cm|km|oka|hybrid")
        ->check(CLI::IsMember({"cm", "km", "oka", "hybrid"}));
    estimate->add_option("--levels", est_levels, "hybrid split levels k (default 1)");
    estimate->add_flag("--scan-thresholds", est_scan,
                       "evaluate the hybrid trade-off at every feasible k");
    estimate->add_option("--format", est_format, "table|csv|json")
        ->check(CLI::IsMember({"table", "csv", "json"}));

    // netlist
    std::size_t nl_n = 0, nl_threshold = 0, nl_verify = 0;
    std::uint64_t nl_seed = 42;
    std::string nl_build, nl_field, nl_strategy = "hybrid", nl_emit;
    std::string nl_format = default_format("table");
    bool nl_stats = false;
    auto* netlist = app.add_subcommand("netlist", "Build, emit, verify or summarize a gate-level circuit");
    netlist->add_option("--build", nl_build, "cm|km|oka|hybrid|modmul")
        ->required()
        ->check(CLI::IsMember({"cm", "km", "oka", "hybrid", "modmul"}));
    netlist->add_option("--n", nl_n, "operand width (cm/km/oka/hybrid)");
    netlist->add_option("--threshold", nl_threshold,
                        "hybrid leaf width (default: the width's preset)");
    netlist->add_option("--field", nl_field, "registry name (modmul)");
    netlist->add_option("--strategy", nl_strategy, "multiplier for modmul");
    netlist->add_option("--emit", nl_emit, "write netlist text to a file ('-' = stdout)");
    netlist->add_option("--verify", nl_verify, "simulate N random vectors against the oracle");
    netlist->add_flag("--stats", nl_stats, "print gate counts and depths, with model diff");
    netlist->add_option("--seed", nl_seed, "rng seed for --verify");
    netlist->add_option("--format", nl_format, "table|csv|json for --stats")
        ->check(CLI::IsMember({"table", "csv", "json"}));

    // bench
    std::size_t bench_trials = 100;
    std::uint64_t bench_seed = 42;
    std::string bench_field, bench_strategy = "hybrid";
    std::string bench_format = default_format("table");
    auto* bench = app.add_subcommand("bench", "Seeded software timing of modmul");
    bench->add_option("--field", bench_field, "registry name, e.g. B-163")->required();
    bench->add_option("--strategy", bench_strategy, "cm|km|oka|hybrid[:threshold]");
    bench->add_option("--trials", bench_trials, "number of multiplications")
        ->check(CLI::PositiveNumber);
    bench->add_option("--seed", bench_seed, "rng seed for operand generation");
    bench->add_option("--format", bench_format, "table|csv|json")
        ->check(CLI::IsMember({"table", "csv", "json"}));

    // verify
    std::string verify_level = "quick";
    bool verify_corrupt = false;
    auto* verify = app.add_subcommand("verify", "Batch self-checks against the reference oracles");
    verify->add_option("--level", verify_level, "quick|full")
        ->check(CLI::IsMember({"quick", "full"}));
    verify->add_flag("--corrupt-registry-bit", verify_corrupt)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*mul) return run_mul(mul_n, mul_strategy, mul_a, mul_b);
        if (*modmul) return run_modmul(mm_field, mm_strategy, mm_reduction, mm_a, mm_b);
        if (*estimate)
            return run_estimate(est_m, est_scheme, est_levels, est_scan, est_format);
        if (*netlist)
            return run_netlist(nl_build, nl_n, nl_threshold, nl_field, nl_strategy,
                               nl_emit, nl_verify, nl_stats, nl_seed, nl_format);
        if (*bench)
            return run_bench(bench_field, bench_strategy, bench_trials, bench_seed,
                             bench_format);
        if (*verify) return run_verify(verify_level, verify_corrupt);
    } catch (const gf2mul::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
