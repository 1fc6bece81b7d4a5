#include <doctest.h>

#include "ctc/designs.hpp"
#include "ctc/hamming.hpp"
#include "ctc/zoo.hpp"

using namespace ctc;

TEST_SUITE("regularity_designs") {

TEST_CASE("design check examples") {
    auto g = design_check(golay_family().G24, 8, 5);
    CHECK(g.is_design);
    CHECK(g.lambda == 1);
    CHECK(g.block_count == 759);
    CHECK(g.integrality_ok);
    auto ph = design_check(named_code("PH").code, 6, 2);
    CHECK(ph.is_design);
    CHECK(ph.lambda == 3);
    auto one = design_check_blocks(5, {Word::all_ones(5)}, 5, 1);
    CHECK(one.is_design);
    CHECK(one.lambda == 1);
}

TEST_CASE("design check reports an uneven subset") {
    auto r = design_check_blocks(6, {Word::from_string("111000"), Word::from_string("000111")}, 3, 2);
    CHECK_FALSE(r.is_design);
    REQUIRE(r.uneven_subset.size() == 2);
    // {0,1} is covered once, the first uneven pair in colex order is {0,3}
    CHECK(r.first_count == 1);
    CHECK(r.uneven_subset == std::vector<int>{0, 3});
    CHECK(r.uneven_count == 0);
    CHECK_THROWS_AS(design_check_blocks(6, {}, 3, 4), Error);
}

TEST_CASE("design count agrees with the block count formula") {
    for (const char* n : {"G24", "G23", "G22", "Pperp", "PH", "NR15"}) {
        const auto& c = named_code(n).code;
        int d = min_distance(c);
        for (int t = 1; t <= 5; ++t) {
            auto r = design_check(c, d, t);
            if (!r.is_design) break;
            auto b = block_count(c.length(), d, t);
            CHECK(r.lambda * b.numerator == r.block_count * b.denominator);
        }
    }
}

TEST_CASE("block count screen") {
    auto b = block_count(28, 5, 2);
    CHECK(b.lambda_divisor == 5);
    CHECK(b.min_blocks == 189);
    auto c = block_count(15, 6, 3);
    CHECK(c.lambda_divisor == 4);
    CHECK(c.min_blocks == 91);
    CHECK(block_count_screen(24, 8, 5, 1).pass);
    CHECK(block_count_screen(24, 8, 5, 1).trace[1] == "b = 759");
    CHECK_FALSE(block_count_screen(28, 5, 2, 1).pass);
}

TEST_CASE("lambda bound") {
    auto g22 = lambda_bound_check(golay_family().G22);
    CHECK(g22.pass);
    auto pp = lambda_bound_check(named_code("Pperp").code);
    CHECK(pp.pass);
    CHECK_THROWS_AS(lambda_bound_check(golay_family().G24), Error);
    // synthetic: two blocks through {0,1} that meet again
    std::vector<Word> bad = {Word::from_string("1111100000"), Word::from_string("1100111000")};
    CHECK_FALSE(lambda_bound_check_blocks(10, bad, 5).pass);
}

TEST_CASE("lambda bound holds for the CT codes with delta 5 or 6") {
    for (const auto& n : table2_names()) {
        const auto& c = named_code(n).code;
        int d = min_distance(c);
        if (d == 5 || d == 6) CHECK_MESSAGE(lambda_bound_check(c).pass, n);
    }
}

TEST_CASE("inequality screens") {
    CHECK(screen_morbitsbound(10, 2, pow2(10)).pass);
    CHECK_FALSE(screen_morbitsbound(48, 2, pow2(24) * 47 * 48 * 46).pass);
    CHECK(screen_upboundmindist(2, 6).pass);
    CHECK_FALSE(screen_upboundmindist(2, 7).pass);
    CHECK(screen_upboundmindist(3, 8).pass);
    CHECK(screen_largedeltamax(1, 1, 10, 3).pass);
    CHECK_FALSE(screen_largedeltamax(100, 1, 10, 3).pass);
}

TEST_CASE("screens are pure") {
    auto a = screen_morbitsbound(24, 2, BigInt(244823040));
    auto b = screen_morbitsbound(24, 2, BigInt(244823040));
    CHECK(a.trace == b.trace);
    CHECK(a.pass == b.pass);
}

TEST_CASE("non-existence suite") {
    auto suite = nonexistence_suite();
    for (const auto& v : suite) CHECK_MESSAGE(v.pass, v.id);
    auto find = [&](const std::string& id) -> const ScreenVerdict& {
        for (const auto& v : suite)
            if (v.id == id) return v;
        FAIL("missing " << id);
        return suite.front();
    };
    auto has = [](const ScreenVerdict& v, const std::string& s) {
        for (const auto& t : v.trace)
            if (t.find(s) != std::string::npos) return true;
        return false;
    };
    CHECK(has(find("hs"), "= 44660"));
    CHECK(has(find("co3"), "= 173305"));
    CHECK(has(find("psl2-25"), "s = 9, rho = 5"));
    CHECK(has(find("psl2-31"), "A8 = 620"));
    CHECK(has(find("psl2-31"), "3596"));
    CHECK(has(find("psl2-41"), "delta = 10"));
    CHECK(has(find("psu3-5"), "A6(U) = 21525"));
    CHECK(has(find("psu3-3"), "smallest orbit on 5-sets: 1512"));
    CHECK(has(find("ree-3"), "smallest orbit on 5-sets: 756"));
    CHECK(has(find("ree-3"), "all 6-set orbits even: yes"));
    CHECK(has(find("a7-fifteen"), "91 + 65 = 156 > 128"));
}

}  // TEST_SUITE
