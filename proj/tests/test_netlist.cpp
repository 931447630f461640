#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gf2mul/cost.hpp"
#include "gf2mul/naive.hpp"
#include "gf2mul/netlist.hpp"
#include "gf2mul/reduction.hpp"

using gf2mul::BitPoly;
using gf2mul::Netlist;
using gf2mul::NetlistStats;

namespace {

int lg(std::size_t n) { return static_cast<int>(std::countr_zero(n)); }

}  // namespace

TEST_CASE("schoolbook circuits realize the closed-form counts", "[netlist]") {
    Netlist two = gf2mul::build_cm(2);
    NetlistStats st = gf2mul::stats(two);
    CHECK(st.and_count == 4);
    CHECK(st.xor_count == 1);
    CHECK(st.depth_and == 1);
    CHECK(st.depth_xor == 1);
    CHECK(two.width_out == 3);
    CHECK(two.outputs.size() == 3);

    for (std::size_t n = 1; n <= 24; ++n) {
        Netlist nl = gf2mul::build_cm(n);
        gf2mul::validate(nl);
        NetlistStats s = gf2mul::stats(nl);
        auto model = gf2mul::cost_cm(n);
        CAPTURE(n);
        CHECK(s.and_count == model.and_count);
        CHECK(s.xor_count == model.xor_count);
        CHECK(s.depth_and == model.delay_ta);
        CHECK(s.depth_xor == model.delay_tx);
    }
}

TEST_CASE("karatsuba circuits realize the closed-form counts", "[netlist]") {
    Netlist two = gf2mul::build_km(2);
    NetlistStats st = gf2mul::stats(two);
    CHECK(st.and_count == 3);
    CHECK(st.xor_count == 4);
    CHECK(st.depth_xor == 2);

    Netlist sixteen = gf2mul::build_km(16);
    NetlistStats s16 = gf2mul::stats(sixteen);
    CHECK(s16.and_count == 81);
    CHECK(s16.xor_count == 360);

    // Realized depth crosses the uniform 3*lg(n)-1 estimate at n=16: the
    // columns flanking the centre tie its depth, and the overlap XOR adds a
    // fourth level per stage from there on.
    std::size_t want_depth[7] = {0, 2, 5, 8, 12, 16, 20};
    for (std::size_t n : {2, 4, 8, 16, 32, 64}) {
        Netlist nl = gf2mul::build_km(n);
        gf2mul::validate(nl);
        NetlistStats s = gf2mul::stats(nl);
        auto model = gf2mul::cost_km(n);
        CAPTURE(n);
        CHECK(s.and_count == model.and_count);
        CHECK(s.xor_count == model.xor_count);
        CHECK(s.depth_and == 1);
        CHECK(s.depth_xor == want_depth[lg(n)]);
    }
}

TEST_CASE("even/odd-split circuits match karatsuba counts at lower depth", "[netlist]") {
    for (std::size_t n : {2, 4, 8, 16, 32, 64}) {
        Netlist oka = gf2mul::build_oka(n);
        gf2mul::validate(oka);
        NetlistStats so = gf2mul::stats(oka);
        auto model = gf2mul::cost_oka(n);
        CAPTURE(n);
        CHECK(so.and_count == model.and_count);
        CHECK(so.xor_count == model.xor_count);
        CHECK(so.depth_and == 1);
        CHECK(so.depth_xor == 2 * lg(n));

        NetlistStats sk = gf2mul::stats(gf2mul::build_km(n));
        CHECK(so.and_count == sk.and_count);
        CHECK(so.xor_count == sk.xor_count);
        if (n >= 4) CHECK(so.depth_xor < sk.depth_xor);
    }
}

TEST_CASE("hybrid circuits", "[netlist]") {
    // Threshold at or above the width degenerates to plain schoolbook.
    NetlistStats deg = gf2mul::stats(gf2mul::build_hybrid(4, 4));
    NetlistStats cm4 = gf2mul::stats(gf2mul::build_cm(4));
    CHECK(deg.and_count == cm4.and_count);
    CHECK(deg.xor_count == cm4.xor_count);
    CHECK(deg.depth_xor == cm4.depth_xor);

    // Widths where every split lands on an even operand realize the model
    // exactly: two levels over 8 bits, four levels over 64.
    NetlistStats h8 = gf2mul::stats(gf2mul::build_hybrid(8, 2));
    auto m8 = gf2mul::cost_hybrid(8, 2);
    CHECK(h8.and_count == m8.and_count);
    CHECK(h8.xor_count == m8.xor_count);

    NetlistStats h64 = gf2mul::stats(gf2mul::build_hybrid(64, 4));
    auto m64 = gf2mul::cost_hybrid(64, 4);
    CHECK(h64.and_count == m64.and_count);
    CHECK(h64.xor_count == m64.xor_count);

    // Odd widths pad the high halves with the zero pin up to the uniform
    // ceil width, so the AND count is the model's 3^k * ceil(m/2^k)^2 on the
    // nose while the XOR count comes out as if the width were already the
    // padded 2^k * ceil(m/2^k): 16024 here against the unpadded 16014.
    Netlist h163 = gf2mul::build_hybrid(163, 41);
    gf2mul::validate(h163);
    NetlistStats s163 = gf2mul::stats(h163);
    auto model = gf2mul::cost_hybrid(163, 2);
    CHECK(s163.and_count == model.and_count);
    CHECK(s163.and_count == 15129);
    CHECK(s163.xor_count == 16024);
    CHECK(s163.depth_and == 1);
}

TEST_CASE("simulation agrees with the reference product, exhaustive", "[netlist]") {
    for (std::size_t n = 1; n <= 5; ++n) {
        Netlist cm = gf2mul::build_cm(n);
        for (std::uint64_t av = 0; av < (std::uint64_t{1} << n); ++av)
            for (std::uint64_t bv = 0; bv < (std::uint64_t{1} << n); ++bv) {
                BitPoly a = BitPoly::from_word(av), b = BitPoly::from_word(bv);
                CAPTURE(n, av, bv);
                REQUIRE(gf2mul::simulate(cm, a, b) == gf2mul::naive_clmul(a, b));
            }
    }
    for (std::size_t n : {2, 4}) {
        Netlist km = gf2mul::build_km(n);
        Netlist oka = gf2mul::build_oka(n);
        Netlist hy = gf2mul::build_hybrid(n, 2);
        for (std::uint64_t av = 0; av < (std::uint64_t{1} << n); ++av)
            for (std::uint64_t bv = 0; bv < (std::uint64_t{1} << n); ++bv) {
                BitPoly a = BitPoly::from_word(av), b = BitPoly::from_word(bv);
                BitPoly want = gf2mul::naive_clmul(a, b);
                CAPTURE(n, av, bv);
                REQUIRE(gf2mul::simulate(km, a, b) == want);
                REQUIRE(gf2mul::simulate(oka, a, b) == want);
                REQUIRE(gf2mul::simulate(hy, a, b) == want);
            }
    }
}

TEST_CASE("simulation agrees with the reference product, random", "[netlist]") {
    std::mt19937_64 rng(89);
    for (std::size_t n : {8, 13, 16, 29, 32}) {
        Netlist cm = gf2mul::build_cm(n);
        Netlist hy = gf2mul::build_hybrid(n, 4);
        bool pow2 = std::has_single_bit(n);
        Netlist km = pow2 ? gf2mul::build_km(n) : Netlist{};
        Netlist oka = pow2 ? gf2mul::build_oka(n) : Netlist{};
        for (int i = 0; i < 100; ++i) {
            BitPoly a = BitPoly::random(n, rng), b = BitPoly::random(n, rng);
            BitPoly want = gf2mul::naive_clmul(a, b);
            CAPTURE(n, i);
            REQUIRE(gf2mul::simulate(cm, a, b) == want);
            REQUIRE(gf2mul::simulate(hy, a, b) == want);
            if (pow2) {
                REQUIRE(gf2mul::simulate(km, a, b) == want);
                REQUIRE(gf2mul::simulate(oka, a, b) == want);
            }
        }
    }
}

TEST_CASE("field-multiply circuits append an XOR-only reduction", "[netlist]") {
    auto fp = gf2mul::nist_field("B-163");
    auto mm = gf2mul::build_modmul(fp, gf2mul::MulStrategy::parse("hybrid:41"));
    gf2mul::validate(mm.net);
    CHECK(mm.net.width_out == 163);
    CHECK(mm.net.outputs.size() == 163);
    CHECK(mm.mul_gates > 0);
    REQUIRE(mm.mul_gates <= mm.net.gates.size());
    for (std::size_t i = mm.mul_gates; i < mm.net.gates.size(); ++i)
        REQUIRE(mm.net.gates[i].op == gf2mul::GateOp::Xor);

    std::mt19937_64 rng(97);
    gf2mul::MulStrategy s = gf2mul::MulStrategy::parse("hybrid:41");
    for (int i = 0; i < 40; ++i) {
        BitPoly a = BitPoly::random(163, rng), b = BitPoly::random(163, rng);
        CAPTURE(i);
        REQUIRE(gf2mul::simulate(mm.net, a, b) == gf2mul::modmul(a, b, fp, s));
    }
}

TEST_CASE("field-multiply circuits, exhaustive on the degree-6 field", "[netlist]") {
    auto fp = gf2mul::nist_field("6");
    auto mm = gf2mul::build_modmul(fp, gf2mul::MulStrategy::cm());
    gf2mul::MulStrategy cm = gf2mul::MulStrategy::cm();
    for (std::uint64_t av = 0; av < 64; ++av)
        for (std::uint64_t bv = 0; bv < 64; ++bv) {
            BitPoly a = BitPoly::from_word(av), b = BitPoly::from_word(bv);
            CAPTURE(av, bv);
            REQUIRE(gf2mul::simulate(mm.net, a, b) == gf2mul::modmul(a, b, fp, cm));
        }
}

TEST_CASE("text emission round-trips", "[netlist]") {
    std::mt19937_64 rng(101);
    // An odd-width hybrid exercises the zero pin in the text form.
    for (auto make : {+[] { return gf2mul::build_km(8); },
                      +[] { return gf2mul::build_oka(4); },
                      +[] { return gf2mul::build_hybrid(5, 2); },
                      +[] { return gf2mul::build_cm(7); }}) {
        Netlist nl = make();
        std::string text = gf2mul::emit_text(nl);
        Netlist back = gf2mul::parse_text(text);
        CHECK(gf2mul::emit_text(back) == text);

        NetlistStats a = gf2mul::stats(nl), b = gf2mul::stats(back);
        CHECK(a.and_count == b.and_count);
        CHECK(a.xor_count == b.xor_count);
        CHECK(a.depth_xor == b.depth_xor);

        for (int i = 0; i < 20; ++i) {
            BitPoly x = BitPoly::random(nl.width_a, rng);
            BitPoly y = BitPoly::random(nl.width_b, rng);
            REQUIRE(gf2mul::simulate(back, x, y) == gf2mul::simulate(nl, x, y));
        }
    }

    std::string text = gf2mul::emit_text(gf2mul::build_hybrid(5, 2));
    CHECK(text.find("width a 5\n") == 0);
    CHECK(text.find("zero") != std::string::npos);
    CHECK(text.find("g0 = ") != std::string::npos);
    CHECK(text.find("c8 = ") != std::string::npos);

    // Comments and blank lines are tolerated on input.
    Netlist tiny = gf2mul::parse_text(
        "# product of two single-bit values\n"
        "width a 1\nwidth b 1\nwidth c 1\n\ng0 = AND a0 b0\nc0 = g0\n");
    CHECK(gf2mul::simulate(tiny, BitPoly::one(), BitPoly::one()) == BitPoly::one());
}

TEST_CASE("malformed circuits are rejected", "[netlist]") {
    CHECK_THROWS_AS(gf2mul::build_km(6), gf2mul::not_power_of_two);
    CHECK_THROWS_AS(gf2mul::build_km(1), gf2mul::not_power_of_two);
    CHECK_THROWS_AS(gf2mul::build_oka(10), gf2mul::not_power_of_two);
    CHECK_THROWS_AS(gf2mul::build_hybrid(1, 2), gf2mul::operand_too_large);
    CHECK_THROWS_AS(gf2mul::build_hybrid(8, 1), gf2mul::invalid_threshold);
    CHECK_THROWS_AS(gf2mul::build_modmul(gf2mul::nist_field("B-163"),
                                         gf2mul::MulStrategy::km()),
                    gf2mul::not_power_of_two);
    CHECK_THROWS_AS(gf2mul::build_modmul(gf2mul::nist_field("41"),
                                         gf2mul::MulStrategy::parse("hybrid")),
                    gf2mul::invalid_threshold);

    Netlist nl = gf2mul::build_cm(2);
    CHECK_THROWS_AS(gf2mul::simulate(nl, BitPoly::monomial(2), BitPoly::one()),
                    gf2mul::width_mismatch);
    CHECK_THROWS_AS(gf2mul::simulate(nl, BitPoly::one(), BitPoly::monomial(5)),
                    gf2mul::width_mismatch);

    // Forward references, sparse gate ids and unknown ops all fail to parse.
    const char* head = "width a 1\nwidth b 1\nwidth c 1\n";
    CHECK_THROWS_AS(
        gf2mul::parse_text(std::string(head) + "g0 = XOR g1 g1\nc0 = g0\n"),
        gf2mul::error);
    CHECK_THROWS_AS(
        gf2mul::parse_text(std::string(head) + "g1 = AND a0 b0\nc0 = g1\n"),
        gf2mul::error);
    CHECK_THROWS_AS(
        gf2mul::parse_text(std::string(head) + "g0 = NAND a0 b0\nc0 = g0\n"),
        gf2mul::error);
    CHECK_THROWS_AS(
        gf2mul::parse_text(std::string(head) + "g0 = AND a0 b9\nc0 = g0\n"),
        gf2mul::error);
    CHECK_THROWS_AS(gf2mul::parse_text("bogus line\n"), gf2mul::error);
}
