#include <doctest.h>

#include <algorithm>

#include "ctc/cosets.hpp"
#include "ctc/hamming.hpp"
#include "ctc/zoo.hpp"

using namespace ctc;

TEST_SUITE("coset_graphs") {

TEST_CASE("repetition code gives K2") {
    Code rep = Code::linear(2, {Word::all_ones(2)});
    auto g = coset_graph(rep);
    CHECK(g.vertices == 2);
    CHECK(g.degree() == 1);
    auto a = is_distance_regular(g);
    CHECK(a.distance_regular);
    CHECK(a.text() == "{1;1}");
}

TEST_CASE("graph sizes") {
    auto g = coset_graph(golay_family().G23);
    CHECK(g.vertices == 2048);
    CHECK(g.degree() == 23);
    auto p = coset_graph(named_code("Pperp").code);
    CHECK(p.vertices == 512);
    CHECK(p.degree() == 21);
    CHECK_THROWS_AS(coset_graph(named_code("H").code), Error);
    CHECK_THROWS_AS(coset_graph(named_code("GQR41").code), Error);  // codimension 21
}

TEST_CASE("leaders are minimum weight and lexicographically least") {
    Code h = Code::linear(7, {Word::from_string("1101000"), Word::from_string("0110100"),
                              Word::from_string("0011010"), Word::from_string("0001101")});
    auto g = coset_graph(h);
    CHECK(g.vertices == 8);
    for (uint32_t s = 1; s < 8; ++s) {
        CHECK(g.leaders[s].weight() == 1);
        CHECK(syndrome(g, h, g.leaders[s]) == s);
    }
    Code e = extend_parity(h);
    auto ge = coset_graph(e);
    for (uint32_t s = 0; s < ge.vertices; ++s) {
        const Word& l = ge.leaders[s];
        CHECK(syndrome(ge, e, l) == s);
        // brute force over all words
        Word best;
        int bw = 99;
        for (uint64_t v = 0; v < 256; ++v) {
            Word w = Word::from_u64(8, v);
            if (syndrome(ge, e, w) != s) continue;
            auto a = w.support(), b = best.support();
            if (w.weight() < bw || (w.weight() == bw && std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end())))
                best = w, bw = w.weight();
        }
        CHECK(l == best);
    }
}

TEST_CASE("distance-regular with diameter rho") {
    for (const char* n : {"G23", "Pperp", "G24", "G22", "S22", "E22", "G23perp", "LD1", "L"}) {
        const auto& c = named_code(n).code;
        auto g = coset_graph(c);
        auto a = is_distance_regular(g);
        CHECK_MESSAGE(a.distance_regular, n);
        CHECK(a.diameter == distance_partition(c).rho);
        CHECK(a.b[0] == static_cast<uint64_t>(g.degree()));
        CHECK(a.c[0] == 1);
        auto f = array_feasibility(a, g.vertices);
        CHECK(f.ok);
    }
    auto a = is_distance_regular(coset_graph(golay_family().G23));
    CHECK(a.text() == "{23,22,21;1,2,3}");
}

TEST_CASE("not completely regular gives a non distance-regular graph") {
    const auto& c = named_code("G22perp").code;
    auto a = is_distance_regular(coset_graph(c));
    CHECK_FALSE(a.distance_regular);
    CHECK(a.witness_level >= 0);
}

TEST_CASE("covering radius via syndromes") {
    for (const char* n : {"G23", "Pperp", "G24", "P", "PD1", "L"})
        CHECK(covering_radius_linear(named_code(n).code) == distance_partition(named_code(n).code).rho);
    CHECK(covering_radius_linear(gqr_code(25).U1) == 5);
}

TEST_CASE("bipartite doubles") {
    const auto& g = golay_family();
    CHECK(bipartite_double_check(g.G23, g.G23perp).ok);
    CHECK(bipartite_double_check(g.G22, g.E22).ok);
    CHECK_FALSE(bipartite_double_check(g.G22, g.G22perp).ok);
    CHECK_FALSE(bipartite_double_check(g.G24, g.G23perp).ok);
}

TEST_CASE("size obstruction") {
    CHECK(size_obstruction(named_code("H").code).verdict == "no");
    CHECK(size_obstruction(named_code("PH").code).verdict == "no");
    CHECK(size_obstruction(named_code("LD1uLD2").code).verdict == "no");
    CHECK(size_obstruction(named_code("NR15").code).divides);
    CHECK(size_obstruction(named_code("G24").code).divides);
}

}  // TEST_SUITE
