#include <doctest.h>

#include <algorithm>
#include <set>

#include "ctc/hamming.hpp"
#include "ctc/pg24.hpp"
#include "ctc/zoo.hpp"

using namespace ctc;
using namespace ctc::pg24;

TEST_SUITE("geometry_pg24") {

TEST_CASE("incidence axioms") {
    const auto& p = geometry().plane;
    CHECK(p.points.size() == 21);
    CHECK(p.lines.size() == 21);
    for (const auto& l : p.lines) CHECK(l.weight() == 5);
    for (size_t a = 0; a < p.lines.size(); ++a)
        for (size_t b = a + 1; b < p.lines.size(); ++b) CHECK((p.lines[a] & p.lines[b]).weight() == 1);
    for (int a = 0; a < 21; ++a)
        for (int b = a + 1; b < 21; ++b) {
            int n = 0;
            for (const auto& l : p.lines) n += l.test(a) && l.test(b);
            CHECK(n == 1);
        }
}

TEST_CASE("GF(4) tables") {
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            CHECK(kMul[a][b] == kMul[b][a]);
            for (int c = 0; c < 4; ++c) CHECK(kMul[a][kAdd[b][c]] == kAdd[kMul[a][b]][kMul[a][c]]);
        }
    for (int a = 1; a < 4; ++a) CHECK(kMul[a][kInv[a]] == 1);
    CHECK(kMul[W][W] == W2);
}

TEST_CASE("hyperovals and Fano subplanes") {
    const auto& g = geometry();
    CHECK(g.orbits.hyperovals.size() == 168);
    CHECK(g.orbits.fanos.size() == 360);
    for (int i = 0; i < 3; ++i) {
        CHECK(g.orbits.H[i].size() == 56);
        CHECK(g.orbits.F[i].size() == 120);
    }
    // 21 lines + 168 + 360 + 210 line pairs = 759
    CHECK(21 + 168 + 360 + 210 == static_cast<int>(witt_w24().blocks.size()));
    for (const auto& f : g.orbits.fanos) CHECK(is_fano(g.plane, f));
    CHECK_FALSE(is_hyperoval(g.plane, g.plane.lines[0]));
}

TEST_CASE("literal orbit rule is false, parity rule used") {
    const auto& o = geometry().orbits;
    CHECK_FALSE(o.literal_rule_holds);
    CHECK(is_hyperoval(geometry().plane, o.literal_counter_hyperoval));
    CHECK(is_fano(geometry().plane, o.literal_counter_fano));
    CHECK(!o.rule.empty());
}

TEST_CASE("generators preserve lines, hyperovals, Fanos") {
    const auto& g = geometry();
    for (const GroupGens* gg : {&g.psl, &g.pgammal})
        for (const auto& x : gg->gens) {
            CHECK(g.plane.preserves_lines(x.p));
            for (const auto& h : g.orbits.hyperovals) CHECK(is_hyperoval(g.plane, x.p.apply(h)));
            for (const auto& f : g.orbits.fanos) CHECK(is_fano(g.plane, x.p.apply(f)));
        }
}

TEST_CASE("symmetric difference law, exhaustive") {
    const auto& g = geometry();
    int pairs = 0;
    const auto& h = g.orbits.hyperovals;
    for (size_t a = 0; a < h.size(); ++a)
        for (size_t b = a + 1; b < h.size(); ++b)
            if ((h[a] & h[b]).weight() == 3) {
                ++pairs;
                auto v = symdiff_hyperoval_check(g.plane, g.orbits, h[a], h[b]);
                CHECK(v.holds);
            }
    CHECK(pairs > 0);
    CHECK_THROWS_AS(symdiff_hyperoval_check(g.plane, g.orbits, h[0], h[0]), Error);
    CHECK_THROWS_AS(symdiff_hyperoval_check(g.plane, g.orbits, g.plane.lines[0], h[0]), Error);
}

TEST_CASE("line plus Fano construction") {
    const auto& g = geometry();
    const auto& r = g.reps;
    auto lf = line_plus_fano_check(g.plane, g.orbits, r.ell, r.Phi[0]);
    CHECK(lf.holds);
    CHECK(lf.tau_fixes_line);
    for (int i = 0; i < 3; ++i) {
        CHECK(lf.delta[i].weight() == 6);
        CHECK(g.orbits.hyperoval_orbit(lf.delta[i]) == i);
        CHECK(g.orbits.fano_orbit(lf.phi[i]) == i);
    }
    // tau permutes the three hyperoval orbits cyclically
    auto ind = induced_on_orbits(g.orbits, tau(g.plane));
    CHECK(ind[0] != 0);
    CHECK(ind[ind[ind[0]]] == 0);
}

TEST_CASE("P and L") {
    const auto& g = geometry();
    CHECK(g.P.dimension() == 9);
    CHECK(min_distance(g.P) == 8);
    CHECK(g.L.dimension() == 10);
    CHECK(g.L.contains(Word::all_ones(21)));
    CHECK_FALSE(g.P.contains(Word::all_ones(21)));
    CHECK(g.Pperp.dimension() == 12);
}

TEST_CASE("coset configuration") {
    const auto& g = geometry();
    auto cc = coset_configuration(g.plane, g.reps);
    CHECK(cc.codim == 3);
    CHECK(cc.names.size() == 7);
    std::vector<uint32_t> ids = cc.coset_id;
    std::sort(ids.begin(), ids.end());
    CHECK(ids == std::vector<uint32_t>{1, 2, 3, 4, 5, 6, 7});
    CHECK(cc.lines.size() == 7);
    for (const auto& l : cc.lines) CHECK(g.P.contains(cc.reps[l[0]] ^ cc.reps[l[1]] ^ cc.reps[l[2]]));

    // relabel by tau and re-verify
    Perm t = tau(g.plane);
    Representatives r2 = g.reps;
    r2.ell = t.apply(r2.ell);
    for (int i = 0; i < 3; ++i) r2.Delta[i] = t.apply(g.reps.Delta[(i + 2) % 3]), r2.Phi[i] = t.apply(g.reps.Phi[(i + 2) % 3]);
    auto cc2 = coset_configuration(g.plane, r2);
    CHECK(cc2.lines.size() == 7);
}

TEST_CASE("submodule lattice") {
    const auto& g = geometry();
    auto lat = submodule_lattice(g.plane, g.reps);
    CHECK(lat.nodes.size() == 20);
    int interval = 0;
    const Code& P = lat.nodes[lat.find("P")].code;
    const Code& Pp = lat.nodes[lat.find("P^perp")].code;
    std::multiset<int> dims;
    for (const auto& n : lat.nodes) {
        if (is_subcode(P, n.code) && is_subcode(n.code, Pp)) ++interval;
        dims.insert(n.dim());
    }
    CHECK(interval == 16);
    CHECK(dims == std::multiset<int>{0, 1, 9, 10, 10, 10, 10, 10, 10, 10, 11, 11, 11, 11, 11, 11, 11, 12, 20, 21});
    // L-perp = <P,D1,D2,D3>
    CHECK(dual(lat.nodes[lat.find("L")].code).same_words(lat.nodes[lat.find("<P,D1,D2,D3>")].code));
    for (const auto& e : lat.edges)
        CHECK(lat.nodes[e.upper].dim() - lat.nodes[e.lower].dim() == e.codim);
}

}  // TEST_SUITE
