#include <doctest.h>

#include "ctc/groups.hpp"
#include "ctc/hamming.hpp"
#include "ctc/orbits.hpp"
#include "ctc/zoo.hpp"

using namespace ctc;

TEST_SUITE("code_zoo") {

TEST_CASE("Hadamard family") {
    Code h = hadamard12();
    CHECK(h.size() == 24);
    CHECK(min_distance(h) == 6);
    // every word has even weight, so no even vector is within 2 of... see the covering radius
    h.for_each([](const Word& w) { CHECK(w.weight() % 2 == 0); });
    CHECK(distance_partition(h).rho == 4);
    Code ph = punctured_hadamard();
    CHECK(ph.size() == 24);
    CHECK(min_distance(ph) == 5);
    CHECK(distance_partition(ph).rho == 3);
    Code e = hadamard_even();
    CHECK(e.size() == 12);
    CHECK(min_distance(e) == 6);
}

TEST_CASE("covering radius of H by counting") {
    // all words even: an even vector within 3 of H is within 2, and 24 * (1 + 66) < 2^11
    CHECK(24 * (1 + 66) < 2048);
}

TEST_CASE("2-(11,6,3) design in PH") {
    Code ph = punctured_hadamard();
    std::vector<Word> six;
    ph.for_each([&](const Word& w) {
        if (w.weight() == 6) six.push_back(w);
    });
    CHECK(six.size() == 11);
}

TEST_CASE("Witt design") {
    const auto& w = witt_w24();
    CHECK(w.blocks.size() == 759);
    CHECK_NOTHROW(verify_steiner(w.blocks, 24, 8, 5));
    auto broken = w.blocks;
    broken.pop_back();
    CHECK_THROWS_AS(verify_steiner(broken, 24, 8, 5), Error);
    std::vector<int> per_type(9, 0);
    for (int t : w.type) ++per_type[t];
    int total = 0;
    for (int i = 1; i <= 8; ++i) total += per_type[i];
    CHECK(total == 759);
}

TEST_CASE("Golay family: two routes agree") {
    const auto& g = golay_family();
    CHECK(dual(g.G24).same_words(g.G24));
    CHECK(dual(g.G23).same_words(g.G23perp));
    CHECK(shorten(g.G24, kPointC).same_words(g.G23perp));
    CHECK(even_subcode(g.G22).same_words(g.E22));
    std::vector<Word> gens = g.G22perp.basis();
    gens.push_back(Word::all_ones(22));
    CHECK(Code::linear(22, gens).same_words(g.E22));
    CHECK(!g.S22.same_words(g.S22b));
    CHECK(g.S22.dimension() == 11);
    CHECK(min_distance(g.S22) == 7);
}

TEST_CASE("G22 enumerator and the external distance of its dual") {
    // classical [22,12,6] enumerator
    std::vector<BigInt> w(23, 0);
    for (auto [k, n] : std::vector<std::pair<int, int>>{
             {0, 1}, {6, 77}, {7, 352}, {8, 330}, {10, 616}, {11, 1344}, {12, 616}, {14, 330}, {15, 352}, {16, 77}, {22, 1}})
        w[k] = n;
    CHECK(weight_distribution(golay_family().G22) == w);
    // ten nonzero weights; eleven nonzero terms counting B_0
    CHECK(external_distance(golay_family().G22perp) == 10);
    CHECK(distance_partition(golay_family().G22perp).rho == 7);
}

TEST_CASE("S22 and S22b are equivalent under M22:2, not under M22") {
    const auto& g = golay_family();
    GroupGens m22 = mathieu_m22();
    GroupGens m22_2 = mathieu_m22_2();
    CHECK(preserves_code(m22, g.S22));
    CHECK(preserves_code(m22, g.S22b));
    bool swaps = false;
    for (const auto& x : m22_2.gens) {
        Code im = image(x, g.S22);
        if (im.same_words(g.S22b)) swaps = true;
        CHECK((im.same_words(g.S22) || im.same_words(g.S22b)));
    }
    CHECK(swaps);
}

TEST_CASE("Nordstrom-Robinson") {
    const auto& nr = nordstrom_robinson();
    CHECK(nr.nr16.size() == 256);
    CHECK(min_distance(nr.nr16) == 6);
    CHECK(nr.nr15.size() == 256);
    CHECK(min_distance(nr.nr15) == 5);
    CHECK(distance_partition(nr.nr15).rho == 3);
    CHECK(nr.kernel.dimension() == 5);
    CHECK(nr.kernel_cosets == 8);
    // kernel is the punctured first-order Reed-Muller code, <span^perp, 1>
    auto gens = dual(nr.span).basis();
    gens.push_back(Word::all_ones(15));
    CHECK(Code::linear(15, gens).same_words(nr.kernel));
    CHECK(nr.span.dimension() == 11);
}

TEST_CASE("generalized quadratic residue codes") {
    auto g23 = gqr_code(23);
    CHECK(g23.U1.dimension() == 12);
    CHECK(g23.self_dual);
    CHECK(min_distance(g23.U1) == 8);
    auto g25 = gqr_code(25);
    CHECK(g25.U1.dimension() == 13);
    CHECK(g25.dual_is_other);
    CHECK(min_distance(g25.U1) == 6);
    CHECK(external_distance(g25.U1) == 9);
    auto g31 = gqr_code(31);
    CHECK(g31.self_dual);
    CHECK(weight_distribution(g31.U1)[8] == 620);
    CHECK(min_distance(gqr_code(41).U1) == 10);
    for (int r : {23, 25, 31, 41}) CHECK(preserves_code(psl2_group(r), gqr_code(r).U1));
}

TEST_CASE("Hermitian unitals") {
    auto u3 = hermitian_unital(3);
    CHECK(u3.points.size() == 28);
    CHECK(u3.blocks.size() == 63);
    CHECK_NOTHROW(verify_steiner(u3.blocks, 28, 4, 2));
    const auto& u = hermitian_unital_code();
    CHECK(u.unital.points.size() == 126);
    CHECK(u.unital.blocks.size() == 525);
    CHECK(u.U.dimension() == 105);
    CHECK(u.Uperp.dimension() == 21);
    CHECK(u.weights_U[6] == 21525);
    for (int w = 1; w < 6; ++w) CHECK(u.weights_U[w] == 0);
}

TEST_CASE("PSL3(4) menu") {
    struct Row {
        const char* name;
        int dim, delta, rho;
    };
    for (auto r : {Row{"Pperp", 12, 5, 3}, Row{"LD1", 11, 5, 6}, Row{"L", 10, 5, 6}, Row{"PF1perp", 11, 6, 5},
                   Row{"Lperp", 11, 6, 5}, Row{"PD1", 10, 6, 7}, Row{"PF1", 10, 7, 6}, Row{"P", 9, 8, 7}}) {
        const auto& c = named_code(r.name).code;
        CHECK(c.dimension() == r.dim);
        CHECK(min_distance(c) == r.delta);
        CHECK(distance_partition(c).rho == r.rho);
    }
    const auto& u = named_code("LD1uLD2").code;
    CHECK(u.size() == 3072);
    const auto& pd = named_code("PD2uPD3").code;
    CHECK(pd.size() == 1536);
    CHECK(min_distance(pd) == 6);
    CHECK(distance_partition(pd).rho == 7);
}

TEST_CASE("claimed parameters of the thirteen") {
    auto names = table2_names();
    CHECK(names.size() == 13);
    for (size_t i = 0; i < names.size(); ++i) {
        const auto& nc = named_code(names[i]);
        CHECK(nc.table2_line == static_cast<int>(i) + 1);
        REQUIRE(nc.claimed);
    }
    CHECK_THROWS_AS(named_code("no-such-code"), Error);
}

TEST_CASE("kernel cosets partition constructed codes") {
    for (const auto& n : code_names()) {
        const auto& c = named_code(n).code;
        if (c.is_linear() || !c.contains(Word(c.length()))) continue;
        auto k = maximal_linear_subcode(c);
        CHECK(BigInt(k.coset_reps.size()) * k.kernel.size() == c.size());
        CHECK(maximal_linear_subcode(k.kernel).kernel.same_words(k.kernel));
    }
}

}  // TEST_SUITE
