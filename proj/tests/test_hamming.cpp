#include <doctest.h>

#include <random>

#include "ctc/code_io.hpp"
#include "ctc/hamming.hpp"
#include "ctc/zoo.hpp"

using namespace ctc;

namespace {

Code hamming74() {
    return Code::linear(7, {Word::from_string("1101000"), Word::from_string("0110100"), Word::from_string("0011010"),
                            Word::from_string("0001101")});
}

std::vector<BigInt> direct_weights(const Code& c) {
    std::vector<BigInt> a(c.length() + 1, 0);
    c.for_each([&](const Word& w) { a[w.weight()] += 1; });
    return a;
}

std::vector<BigInt> ints(std::initializer_list<long long> v) {
    std::vector<BigInt> r;
    for (auto x : v) r.push_back(x);
    return r;
}

}  // namespace

TEST_SUITE("hamming_core") {

TEST_CASE("distance basics") {
    Word a = Word::from_string("10110"), b = Word::from_string("00111");
    CHECK(distance(a, b) == 2);
    CHECK(distance(a, a) == 0);
    CHECK(Word::from_string("1000000000000000000000000000000000000000000000000000000000000000001").weight() == 2);
    CHECK_THROWS_AS(distance(Word(3), Word(4)), Error);
}

TEST_CASE("word order is integer order") {
    Word a = Word::from_string("100"), b = Word::from_string("010");
    CHECK(a.to_u64() == 1);
    CHECK(b.to_u64() == 2);
    CHECK(a < b);
}

TEST_CASE("repetition and hamming codes") {
    Code rep = Code::linear(3, {Word::all_ones(3)});
    CHECK(min_distance(rep) == 3);
    auto dp = distance_partition(rep);
    CHECK(dp.rho == 1);
    CHECK(is_completely_regular(rep, dp));

    Code h = hamming74();
    CHECK(h.dimension() == 4);
    CHECK(min_distance(h) == 3);
    auto dh = distance_partition(h);
    CHECK(dh.rho == 1);
    CHECK(dh.cell_sizes == std::vector<uint64_t>{16, 112});
    CHECK(is_completely_regular(h, dh));
    CHECK(external_distance(h) == 1);
    CHECK(weight_distribution(h) == ints({1, 0, 0, 7, 7, 0, 0, 1}));
    CHECK(weight_distribution(dual(h)) == ints({1, 0, 0, 0, 7, 0, 0, 0}));
}

TEST_CASE("transforms") {
    Code h = hamming74();
    Code e = extend_parity(h);
    CHECK(e.length() == 8);
    CHECK(min_distance(e) == 4);
    CHECK(dual(e).same_words(e));
    CHECK(puncture(e, 7).same_words(h));
    CHECK(even_subcode(h).dimension() == 3);
    CHECK(shorten(e, 7).dimension() == 3);
    // span of an explicit code
    Code x = Code::from_words(4, {Word::from_string("1100"), Word::from_string("0011"), Word(4)});
    CHECK(span(x).dimension() == 2);
}

TEST_CASE("singleton bound") {
    CHECK(singleton_check(7, 3, 16));
    CHECK(!singleton_check(7, 3, 64));
    CHECK(singleton_check(3, 3, 2));
}

TEST_CASE("krawtchouk and macwilliams") {
    // K_1(x) = m - 2x
    for (int x = 0; x <= 10; ++x) CHECK(krawtchouk(10, 1, x) == 10 - 2 * x);
    CHECK(krawtchouk(4, 2, 1) == 0);
    Code h = hamming74();
    CHECK(macwilliams(7, direct_weights(h)) == direct_weights(dual(h)));
    CHECK(macwilliams(7, macwilliams(7, direct_weights(h))) == direct_weights(h));
}

TEST_CASE("frozen weight distributions") {
    // independent oracle: the classical enumerators
    const auto& g = golay_family();
    auto w24 = ints({1, 0, 0, 0, 0, 0, 0, 0, 759, 0, 0, 0, 2576, 0, 0, 0, 759, 0, 0, 0, 0, 0, 0, 0, 1});
    CHECK(weight_distribution(g.G24) == w24);
    auto w23 = ints({1, 0, 0, 0, 0, 0, 0, 253, 506, 0, 0, 1288, 1288, 0, 0, 506, 253, 0, 0, 0, 0, 0, 0, 1});
    CHECK(weight_distribution(g.G23) == w23);
    const auto& nr = nordstrom_robinson();
    auto inner = inner_distribution(nr.nr16);
    std::vector<Rational> want(17, 0);
    want[0] = 1, want[6] = 112, want[8] = 30, want[10] = 112, want[16] = 1;
    CHECK(inner.A == want);
}

TEST_CASE("inner and dual distributions of a non-linear code") {
    const auto& nr = nordstrom_robinson();
    auto a = inner_distribution(nr.nr16);
    auto b = dual_distribution(a);
    // NR is distance invariant and formally self-dual
    for (int i = 0; i <= 16; ++i) CHECK(b.B[i] == a.A[i]);
    CHECK(b.s == 4);
    CHECK(external_distance(nr.nr15) == 3);
}

TEST_CASE("maximal linear subcode") {
    const auto& nr = nordstrom_robinson();
    auto k = maximal_linear_subcode(nr.nr15);
    CHECK(k.kernel.dimension() == 5);
    CHECK(k.coset_reps.size() == 8);
    // idempotent, cosets partition
    auto k2 = maximal_linear_subcode(k.kernel);
    CHECK(k2.kernel.same_words(k.kernel));
    std::vector<Word> all;
    for (const auto& r : k.coset_reps) k.kernel.for_each([&](const Word& w) { all.push_back(w ^ r); });
    CHECK(Code::from_words(15, all).same_words(nr.nr15));
    CHECK(all.size() == 256);
}

TEST_CASE("s-regularity and witnesses") {
    const auto& e = named_code("E").code;
    auto dp = distance_partition(e);
    auto rep = regularity_report(e, dp.rho, dp);
    CHECK(!rep.regular);
    CHECK(rep.failing_cell >= 0);
    CHECK(dp.dist[rep.witness_a] == rep.failing_cell);
    CHECK(dp.dist[rep.witness_b] == rep.failing_cell);
    CHECK(!is_completely_regular(e, dp));
    CHECK(is_s_regular(e, 0, dp));
}

TEST_CASE("distance partition guards") {
    auto big = named_code("GQR41").code;
    CHECK_THROWS_AS(distance_partition(big), Error);
}

TEST_CASE("code file round trip") {
    for (const char* n : {"G22", "NR15", "PD2uPD3"}) {
        const Code& c = named_code(n).code;
        Code back = parse_code(format_code(c), n);
        CHECK(back.same_words(c));
        CHECK(back.is_linear() == c.is_linear());
    }
    CHECK_THROWS_WITH_AS(parse_code("m=3 kind=linear\n10x\n", "t"), doctest::Contains("t:2"), Error);
    CHECK_THROWS_AS(parse_code("m=3 kind=weird\n", "t"), Error);
    CHECK_THROWS_AS(parse_code("m=3 kind=linear\n1010\n", "t"), Error);
}

TEST_CASE("random linear codes: macwilliams both ways") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        int m = 6 + trial % 9;
        std::vector<Word> g;
        for (int i = 0; i < 1 + trial % 5; ++i) g.push_back(Word::from_u64(m, rng() & ((uint64_t{1} << m) - 1)));
        Code c = Code::linear(m, g);
        CHECK(macwilliams(m, direct_weights(c)) == direct_weights(dual(c)));
        CHECK(dual(dual(c)).same_words(c));
        auto dp = distance_partition(c);
        // external distance bounds covering radius
        CHECK(dp.rho <= external_distance(c));
    }
}

}  // TEST_SUITE
