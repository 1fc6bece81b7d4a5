#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ctc/groups.hpp"
#include "ctc/hamming.hpp"
#include "ctc/orbits.hpp"
#include "ctc/permgroup.hpp"
#include "ctc/pg24.hpp"
#include "ctc/search.hpp"
#include "ctc/transitivity.hpp"
#include "ctc/witness.hpp"
#include "ctc/zoo.hpp"

using namespace ctc;

namespace {

HAut random_haut(std::mt19937_64& rng, int m) {
    std::vector<int> img(m);
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    return {Word::from_u64(m, rng() & ((uint64_t{1} << m) - 1)), Perm(img)};
}

}  // namespace

TEST_SUITE("group_actions") {

TEST_CASE("action convention on 10^4 random samples") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 10000; ++i) {
        int m = 3 + i % 20;
        HAut x = random_haut(rng, m), y = random_haut(rng, m);
        Word w = Word::from_u64(m, rng() & ((uint64_t{1} << m) - 1));
        REQUIRE(apply(compose(x, y), w) == apply(y, apply(x, w)));
        REQUIRE(apply(inverse(x), apply(x, w)) == w);
        REQUIRE(apply(x, w) == x.p.apply(w ^ x.t));
        if (i % 100 == 0) {
            HAut z = random_haut(rng, m);
            CHECK(compose(compose(x, y), z) == compose(x, compose(y, z)));
        }
    }
}

TEST_CASE("fast action agrees") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        int m = 5 + i % 40;
        if (m > 63) continue;
        HAut x = random_haut(rng, m);
        FastAction f(x);
        uint64_t v = rng() & ((uint64_t{1} << m) - 1);
        CHECK(f(v) == apply(x, Word::from_u64(m, v)).to_u64());
    }
}

TEST_CASE("orbit partition laws") {
    GroupGens g = mathieu_m22();
    g = with_translations(g, golay_family().S22);
    auto o = full_space_orbits(g);
    uint64_t total = 0;
    for (auto s : o.orbit_sizes) total += s;
    CHECK(total == (uint64_t{1} << 22));
    std::vector<FastAction> acts;
    for (const auto& x : g.gens) acts.emplace_back(x);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20000; ++i) {
        uint64_t v = rng() & ((uint64_t{1} << 22) - 1);
        for (const auto& a : acts) REQUIRE(o.label[a(v)] == o.label[v]);
    }
    // orbit ids follow least members
    for (uint32_t i = 1; i < o.orbit_count; ++i) CHECK(o.representatives[i - 1] < o.representatives[i]);
    // Lagrange
    BigInt order = 0;
    {
        std::vector<Perm> d;
        for (const auto& x : g.gens) d.push_back(doubled(x));
        order = PermGroup(44, d).order();
    }
    for (auto s : o.orbit_sizes) CHECK(order % s == 0);
}

TEST_CASE("orbit of zero under T_C and P0 is C") {
    const auto& c = named_code("Pperp").code;
    GroupGens g = with_translations(builtin_group("PGammaL3(4)"), c);
    auto o = full_space_orbits(g);
    CHECK(o.orbit_sizes[o.label[0]] == c.size_u64());
}

TEST_CASE("subset orbits and homogeneity") {
    GroupGens m23 = mathieu_m23();
    CHECK(is_t_transitive(m23, 4));
    CHECK(tuple_orbit_size(m23, {0, 1, 2, 3}) == 23ull * 22 * 21 * 20);
    auto o = orbits_on_k_subsets(m23, 4);
    CHECK(o.sizes.size() == 1);
    GroupGens psl = builtin_group("PSL3(4)");
    CHECK(is_t_transitive(psl, 2));
    CHECK_FALSE(is_t_homogeneous(psl, 3));
    auto o3 = orbits_on_k_subsets(psl, 3);
    CHECK(o3.sorted_sizes() == std::vector<uint64_t>{210, 1120});
}

TEST_CASE("find tuple mapping") {
    GroupGens m24 = mathieu_m24();
    auto p = find_tuple_mapping(m24, {0, 1, 2, 3, 4}, {4, 3, 2, 1, 0});
    REQUIRE(p);
    CHECK((*p)[0] == 4);
    CHECK((*p)[4] == 0);
    CHECK(preserves_code(GroupGens{24, {pure(*p)}, "x", ""}, golay_family().G24));
}

TEST_CASE("bundled groups load and preserve their codes") {
    for (const auto& s : group_specs()) {
        GroupGens g = load_group(s.name);
        CHECK(g.m == s.degree);
        GroupGens b = builtin_group(s.name);
        CHECK(g.gens == b.gens);
    }
    CHECK_THROWS_AS(load_group("no-such-group"), Error);
}

TEST_CASE("group file parsing") {
    auto f = parse_group("#! name=t degree=3 preserves=\n1 2 0\n0 1 2 t=110\n", "x");
    CHECK(f.gens.m == 3);
    CHECK(f.gens.gens.size() == 2);
    CHECK(f.gens.gens[1].t == Word::from_string("110"));
    CHECK_THROWS_WITH_AS(parse_group("#! degree=3\n0 0 1\n", "x"), doctest::Contains("x:2"), Error);
    CHECK_THROWS_AS(parse_group("#! degree=3\n0 1\n", "x"), Error);
    // identity-only file preserves everything
    auto id = parse_group("#! degree=12\n0 1 2 3 4 5 6 7 8 9 10 11\n", "x");
    CHECK(preserves_code(id.gens, named_code("H").code));
    auto back = parse_group(format_group(builtin_group("M22"), {"S22"}, "c"), "y");
    CHECK(back.gens.gens == builtin_group("M22").gens);
    CHECK(back.preserves == std::vector<std::string>{"S22"});
}

TEST_CASE("preservation failure names the generator") {
    GroupGens g = builtin_group("M22");
    g.gens.push_back(pure(Perm(std::vector<int>{1, 0, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21})));
    auto r = check_preserves(g, golay_family().S22);
    CHECK_FALSE(r.ok);
    CHECK(r.generator == static_cast<int>(g.gens.size()) - 1);
    CHECK_THROWS_WITH_AS(check_preserves_set(g, {"S22"}), doctest::Contains("generator"), Error);
}

TEST_CASE("automorphism search goldens") {
    auto h = automorphism_search(named_code("H").code);
    CHECK(h.order == 190080);
    auto ph = automorphism_search(named_code("PH").code);
    CHECK(ph.order == 15840);
    std::vector<Word> all;
    for (int v = 0; v < 4; ++v) all.push_back(Word::from_u64(2, v));
    CHECK(automorphism_search(Code::from_words(2, all)).order == 8);
    CHECK_THROWS_AS(automorphism_search(named_code("NR15").code), Error);
    // x = order of the zero stabilizer times the zero orbit
    CHECK(h.order == h.zero_stabilizer_order * h.zero_orbit);
}

TEST_CASE("CT implies CR on the thirteen") {
    for (const auto& n : table2_names()) {
        const auto& nc = named_code(n);
        if (nc.code.length() > 21) continue;  // the long ones run in the acceptance suite
        auto dp = distance_partition(nc.code);
        auto g = with_kernel_translations(load_group(nc.group), nc.code);
        auto v = verify_complete_transitivity(nc.code, g, dp);
        CHECK(v.verified);
        if (v.verified) CHECK(is_completely_regular(nc.code, dp));
    }
}

TEST_CASE("E is not completely transitive, and a split is witnessed") {
    const auto& e = named_code("E").code;
    auto dp = distance_partition(e);
    GroupGens g;
    g.m = 11;
    auto aut = automorphism_search(e);
    auto v = verify_complete_transitivity(e, aut.gens, dp);
    CHECK_FALSE(v.verified);
    CHECK(v.split_cell >= 0);
    CHECK(dp.dist[v.witness_a] == v.split_cell);
    CHECK(dp.dist[v.witness_b] == v.split_cell);
}

TEST_CASE("PD2uPD3 witnesses") {
    const auto& c = named_code("PD2uPD3").code;
    auto w = non_3nt_witness_psl34(c);
    CHECK(w.triangles_in_c3);
    CHECK(w.collinear_in_c3);
    CHECK(w.no_mixed_word);
    CHECK(w.all_hyperovals);
    CHECK(w.holds());
    auto g = with_kernel_translations(load_group("PSigmaL3(4)+xDelta"), c);
    auto dp = distance_partition(c);
    CHECK(verify_neighbour_transitivity(c, g, 2, dp).verified);
    auto v3 = verify_neighbour_transitivity(c, g, 3, dp);
    CHECK_FALSE(v3.verified);
    CHECK(v3.split_cell == 3);
}

TEST_CASE("witness negative control") {
    const auto& p = pg24::geometry().plane;
    // triangle 0,1,x plus a disjoint collinear triple
    std::vector<int> tri;
    for (int x = 0; x < 21 && tri.size() < 3; ++x)
        if (tri.size() < 2 || !p.collinear(tri[0], tri[1], x)) tri.push_back(x);
    Word w = Word::from_support(21, tri);
    const Word* line = nullptr;
    for (const auto& l : p.lines)
        if ((l & w).is_zero()) {
            line = &l;
            break;
        }
    REQUIRE(line);
    auto pts = line->support();
    for (int i = 0; i < 3; ++i) w.set(pts[i]);
    CHECK(is_triangle_plus_collinear(w));
    Code fake = Code::from_words(21, {Word(21), w});
    auto r = non_3nt_witness_psl34(fake);
    CHECK_FALSE(r.no_mixed_word);
    CHECK_FALSE(r.holds());
}

}  // TEST_SUITE
