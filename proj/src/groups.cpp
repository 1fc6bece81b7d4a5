#include "ctc/groups.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <numeric>
#include <mutex>
#include <set>
#include <sstream>

#include "ctc/code_io.hpp"
#include "ctc/field.hpp"
#include "ctc/orbits.hpp"
#include "ctc/permgroup.hpp"
#include "ctc/pg24.hpp"
#include "ctc/search.hpp"
#include "ctc/zoo.hpp"

#ifndef CTC_DATA_DIR
#define CTC_DATA_DIR "data"
#endif

namespace ctc {

namespace {

GroupGens from_perms(int m, const std::vector<Perm>& ps, std::string label) {
    GroupGens g;
    g.m = m;
    g.label = std::move(label);
    for (const auto& p : ps) g.gens.push_back(pure(p));
    return g;
}

void expect_order(const GroupGens& g, const BigInt& want) {
    BigInt got = PermGroup(g.m, g.perms()).order();
    if (got != want)
        throw Error("group " + g.label + " has order " + to_decimal(got) + ", expected " + to_decimal(want));
}

Perm restrict_perm(const Perm& p, int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) {
        img[i] = p[i];
        if (img[i] >= n) throw Error("restriction does not fix the removed points");
    }
    return Perm(img);
}

SteinerSystem w24_system() {
    SteinerSystem s;
    s.v = 24;
    s.t = 5;
    for (const auto& b : witt_w24().blocks) s.blocks.push_back(b.to_u64());
    return s;
}

const GroupGens& m24_cached() {
    static const GroupGens g = [] {
        const auto S = w24_system();
        const auto& pg = pg24::geometry();
        std::vector<Perm> gens;
        for (const auto& p : pg.pgammal.perms()) {
            std::vector<std::pair<int, int>> forced;
            for (int i = 0; i < 21; ++i) forced.emplace_back(i, p[i]);
            auto lift = design_isomorphisms(S, S, forced, 1);
            if (lift.empty()) throw Error("PGammaL3(4) generator does not lift to Aut(W24)");
            gens.push_back(lift[0]);
        }
        auto mover = design_isomorphisms(S, S, {{kPointA, 0}}, 1);
        if (mover.empty()) throw Error("no automorphism of W24 moves a");
        gens.push_back(mover[0]);
        GroupGens out = from_perms(24, reduce_generators(24, gens), "M24");
        expect_order(out, BigInt(244823040));
        return out;
    }();
    return g;
}

std::vector<Perm> short_subgroup(int n, const std::vector<Perm>& gens, const std::vector<int>& fixed, int keep) {
    PermGroup G(n, gens, fixed);
    auto s = G.stabilizer_generators(static_cast<int>(fixed.size()));
    std::vector<Perm> r;
    for (const auto& p : s) r.push_back(restrict_perm(p, keep));
    return reduce_generators(keep, r);
}

}  // namespace

GroupGens mathieu_m24() { return m24_cached(); }

GroupGens mathieu_m23() {
    auto g = from_perms(23, short_subgroup(24, m24_cached().perms(), {kPointC}, 23), "M23");
    expect_order(g, BigInt(10200960));
    return g;
}

GroupGens mathieu_m22() {
    auto g = from_perms(22, short_subgroup(24, m24_cached().perms(), {kPointC, kPointB}, 22), "M22");
    expect_order(g, BigInt(443520));
    return g;
}

GroupGens mathieu_m22_2() {
    auto ps = mathieu_m22().perms();
    auto swap = find_tuple_mapping(m24_cached(), {kPointB, kPointC}, {kPointC, kPointB});
    if (!swap) throw Error("M24 has no element swapping b and c");
    ps.push_back(restrict_perm(*swap, 22));
    auto g = from_perms(22, ps, "M22:2");
    expect_order(g, BigInt(887040));
    return g;
}

// ---------------------------------------------------------------- PSL2 / PGL2

namespace {

std::vector<Perm> projective_line_gens(int r, bool with_outer) {
    FiniteField F(r);
    const int inf = r;
    auto mob = [&](auto f) {
        std::vector<int> img(r + 1);
        for (int x = 0; x <= r; ++x) img[x] = f(x);
        return Perm(img);
    };
    int g = F.primitive();
    int g2 = F.mul(g, g);
    std::vector<Perm> v = {
        mob([&](int x) { return x == inf ? inf : F.add(x, 1); }),
        mob([&](int x) { return x == inf ? inf : F.mul(g2, x); }),
        mob([&](int x) { return x == inf ? 0 : (x == 0 ? inf : F.neg(F.inv(x))); }),
    };
    if (with_outer) v.push_back(mob([&](int x) { return x == inf ? inf : F.mul(g, x); }));
    return v;
}

}  // namespace

GroupGens psl2_group(int r) {
    auto g = from_perms(r + 1, projective_line_gens(r, false), "PSL2(" + std::to_string(r) + ")");
    expect_order(g, BigInt(r) * BigInt(r * r - 1) / 2);
    return g;
}

GroupGens pgl2_group(int r) {
    auto g = from_perms(r + 1, projective_line_gens(r, true), "PGL2(" + std::to_string(r) + ")");
    expect_order(g, BigInt(r) * BigInt(r * r - 1));
    return g;
}

// ---------------------------------------------------------------- PSU3

GroupGens psu3_group(int q) {
    if (q != 3 && q != 5) throw Error("psu3_group: q must be 3 or 5");
    const int Q = q * q;
    FiniteField F(Q);
    const Unital u = hermitian_unital(q);
    const int n = static_cast<int>(u.points.size());
    std::map<std::array<int, 3>, int> index;
    for (int i = 0; i < n; ++i) index[u.points[i]] = i;
    auto bar = [&](int x) { return F.pow(x, q); };
    auto norm = [&](int x) { return F.pow(x, q + 1); };
    using M3 = std::array<std::array<int, 3>, 3>;
    auto act = [&](const M3& M) {
        std::vector<int> img(n);
        for (int i = 0; i < n; ++i) {
            std::array<int, 3> v{};
            for (int r = 0; r < 3; ++r) {
                int s = 0;
                for (int c = 0; c < 3; ++c) s = F.add(s, F.mul(M[r][c], u.points[i][c]));
                v[r] = s;
            }
            int k = 0;
            while (v[k] == 0) ++k;
            int t = F.inv(v[k]);
            for (auto& x : v) x = F.mul(t, x);
            auto it = index.find(v);
            if (it == index.end()) throw Error("psu3_group: matrix does not preserve the unital");
            img[i] = it->second;
        }
        return Perm(img);
    };
    const int one = 1, m1 = F.neg(1);
    std::vector<M3> mats;
    mats.push_back(M3{{{0, 0, one}, {one, 0, 0}, {0, one, 0}}});
    mats.push_back(M3{{{0, one, 0}, {one, 0, 0}, {0, 0, m1}}});
    for (int a = 1; a < Q; ++a)
        if (norm(a) == 1) mats.push_back(M3{{{a, 0, 0}, {0, F.inv(a), 0}, {0, 0, one}}});
    for (int a = 0; a < Q; ++a)
        for (int b = 1; b < Q; ++b)
            if (F.add(norm(a), norm(b)) == 1)
                mats.push_back(M3{{{a, b, 0}, {F.neg(bar(b)), bar(a), 0}, {0, 0, one}}});
    const BigInt want = BigInt(q * q * q) * BigInt(q * q * q + 1) * BigInt(q * q - 1) / BigInt(std::gcd(3, q + 1));
    std::vector<Perm> gens;
    for (const auto& M : mats) {
        Perm p = act(M);
        if (p.is_identity()) continue;
        gens.push_back(p);
        if (gens.size() >= 2 && PermGroup(n, gens).order() == want) break;
    }
    auto g = from_perms(n, reduce_generators(n, gens), "PSU3(" + std::to_string(q) + ")");
    expect_order(g, want);
    return g;
}

// ---------------------------------------------------------------- Ree(3) = PGammaL2(8)

GroupGens ree3_group() {
    FiniteField F(64);
    // points: pairs {z, z^8} with z outside the subfield of order 8
    std::vector<int> rep(64, -1);
    std::vector<std::array<int, 2>> pts;
    for (int z = 0; z < 64; ++z) {
        if (F.pow(z, 8) == z || rep[z] >= 0) continue;
        int w = F.pow(z, 8);
        rep[z] = rep[w] = static_cast<int>(pts.size());
        pts.push_back({std::min(z, w), std::max(z, w)});
    }
    if (pts.size() != 28) throw Error("ree3_group: expected 28 points");
    int g8 = F.pow(F.primitive(), 9);
    auto act = [&](auto f) {
        std::vector<int> img(28);
        for (int i = 0; i < 28; ++i) img[i] = rep[f(pts[i][0])];
        return Perm(img);
    };
    std::vector<Perm> gens = {
        act([&](int z) { return F.add(z, 1); }),
        act([&](int z) { return F.mul(g8, z); }),
        act([&](int z) { return F.inv(z); }),
        act([&](int z) { return F.mul(z, z); }),
    };
    auto g = from_perms(28, gens, "Ree3");
    expect_order(g, BigInt(1512));
    return g;
}

// ---------------------------------------------------------------- code automorphisms

GroupGens aut_h() {
    auto a = automorphism_search(named_code("H").code);
    a.gens.label = "AutH";
    return a.gens;
}

GroupGens aut_ph() {
    auto a = automorphism_search(named_code("PH").code);
    a.gens.label = "AutPH";
    return a.gens;
}

GroupGens aut_nr() {
    // Inside M24: fix the octad O setwise and its first point; the 15
    // coordinates of NR are the rest of the 24 minus the punctured one.
    const auto& nr = nordstrom_robinson();
    const auto S = w24_system();
    const auto& O = nr.octad;
    std::vector<int> rest;
    for (int i = 0; i < 24; ++i)
        if (std::find(O.begin(), O.end(), i) == O.end()) rest.push_back(i);
    const int last = rest[15];
    auto lift = [&](std::vector<std::pair<int, int>> forced, size_t limit) {
        forced.emplace_back(last, last);
        auto v = design_isomorphisms(S, S, forced, limit);
        if (v.empty()) throw Error("aut_nr: no M24 element with the required images");
        return v;
    };
    // A7 on O1..O7 via (1 2 3 4 5 6 7) and (1 2 3), read off on O0..O4
    const std::vector<std::vector<int>> sigmas = {{0, 2, 3, 4, 5, 6, 7, 1}, {0, 2, 3, 1, 4, 5, 6, 7}};
    std::vector<Perm> big;
    for (const auto& s : sigmas) {
        std::vector<std::pair<int, int>> f;
        for (int i = 0; i < 5; ++i) f.emplace_back(O[i], O[s[i]]);
        big.push_back(lift(f, 1)[0]);
    }
    {
        std::vector<std::pair<int, int>> f;
        for (int i = 0; i < 5; ++i) f.emplace_back(O[i], O[i]);
        for (const auto& p : lift(f, 64)) big.push_back(p);
    }
    auto restrict15 = [&](const Perm& p) {
        std::vector<int> img(15);
        for (int i = 0; i < 15; ++i) {
            int j = std::find(rest.begin(), rest.end(), p[rest[i]]) - rest.begin();
            if (j >= 15) throw Error("aut_nr: element leaves the NR coordinates");
            img[i] = j;
        }
        return Perm(img);
    };
    std::vector<Perm> pure15;
    for (const auto& p : big) pure15.push_back(restrict15(p));
    pure15 = reduce_generators(15, pure15);
    GroupGens g = from_perms(15, pure15, "AutNR");
    expect_order(g, BigInt(2520));
    // translate by a Golay word meeting O in {O0,O1}, then swap O0 and O1
    Word x;
    bool found = false;
    golay_family().G24.for_each([&](const Word& w) {
        if (found) return;
        Word o = w.restricted(O);
        if (o.weight() == 2 && o.test(0) && o.test(1)) {
            x = w;
            found = true;
        }
    });
    if (!found) throw Error("aut_nr: no Golay word meets the octad in {O0,O1}");
    std::vector<std::pair<int, int>> f = {{O[0], O[1]}, {O[1], O[0]}, {O[2], O[2]}, {O[3], O[3]}, {O[4], O[4]}};
    Perm pi = lift(f, 1)[0];
    std::vector<int> first15(rest.begin(), rest.begin() + 15);
    g.gens.push_back(HAut{x.restricted(first15), restrict15(pi)});
    return g;
}

GroupGens psl34_xdelta() {
    const auto& g = pg24::geometry();
    GroupGens out = g.psigmal;
    out.label = "PSigmaL3(4)+xDelta";
    out.gens.push_back(HAut{g.reps.Delta[1], pg24::tau(g.plane)});
    return out;
}

GroupGens aut_ld1uld2() {
    const auto& g = pg24::geometry();
    Perm t = pg24::tau(g.plane);
    HAut y = pure(t.then(t));
    GroupGens base = psl34_xdelta();
    GroupGens out;
    out.m = 21;
    out.label = "AutLD1uLD2";
    for (const auto& x : base.gens) out.gens.push_back(conjugate(x, y));
    return out;
}

// ---------------------------------------------------------------- registry

const std::vector<GroupSpec>& group_specs() {
    static const std::vector<GroupSpec> specs = [] {
        std::vector<GroupSpec> v = {
            {"M24", 24, "244823040", {"G24"}},
            {"M23", 23, "10200960", {"G23"}},
            {"M22", 22, "443520", {"S22"}},
            {"M22:2", 22, "887040", {"G22"}},
            {"PSL3(4)", 21, "20160", {"P"}},
            {"PSigmaL3(4)", 21, "40320", {"LD1"}},
            {"PGammaL3(4)", 21, "120960", {"L"}},
            {"PSigmaL3(4)+xDelta", 21, "", {"PD2uPD3"}},
            {"AutLD1uLD2@21", 21, "", {"LD1uLD2"}},
            {"PSU3(3)@28", 28, "6048", {"Unital28"}},
            {"Ree3@28", 28, "1512", {"Ree28"}},
            {"PSU3(5)@126", 126, "126000", {"U126"}},
            {"AutH@12", 12, "190080", {"H"}},
            {"AutPH@11", 11, "15840", {"PH"}},
            {"AutNR@15", 15, "", {"NR15"}},
        };
        for (int r : {23, 25, 31, 41}) {
            std::string s = std::to_string(r);
            v.push_back({"PSL2(" + s + ")", r + 1, to_decimal(BigInt(r) * BigInt(r * r - 1) / 2), {"GQR" + s}});
            v.push_back({"PGL2(" + s + ")", r + 1, to_decimal(BigInt(r) * BigInt(r * r - 1)),
                         {"GQR" + s, "GQR" + s + "b"}});
        }
        return v;
    }();
    return specs;
}

const GroupSpec& group_spec(const std::string& name) {
    for (const auto& s : group_specs())
        if (s.name == name) return s;
    throw Error("unknown group name: " + name);
}

GroupGens builtin_group(const std::string& name) {
    const auto& pg = pg24::geometry();
    GroupGens g;
    if (name == "M24") g = mathieu_m24();
    else if (name == "M23") g = mathieu_m23();
    else if (name == "M22") g = mathieu_m22();
    else if (name == "M22:2") g = mathieu_m22_2();
    else if (name == "PSL3(4)") g = pg.psl;
    else if (name == "PSigmaL3(4)") g = pg.psigmal;
    else if (name == "PGammaL3(4)") g = pg.pgammal;
    else if (name == "PSigmaL3(4)+xDelta") g = psl34_xdelta();
    else if (name == "AutLD1uLD2@21") g = aut_ld1uld2();
    else if (name == "PSU3(3)@28") g = psu3_group(3);
    else if (name == "PSU3(5)@126") g = psu3_group(5);
    else if (name == "Ree3@28") g = ree3_group();
    else if (name == "AutH@12") g = aut_h();
    else if (name == "AutPH@11") g = aut_ph();
    else if (name == "AutNR@15") g = aut_nr();
    else if (name.rfind("PSL2(", 0) == 0) g = psl2_group(std::stoi(name.substr(5)));
    else if (name.rfind("PGL2(", 0) == 0) g = pgl2_group(std::stoi(name.substr(5)));
    else throw Error("unknown group name: " + name);
    g.label = name;
    check_preserves_set(g, group_spec(name).preserves);
    return g;
}

// ---------------------------------------------------------------- file format

GroupFile parse_group(const std::string& text, const std::string& source) {
    GroupFile f;
    std::istringstream in(text);
    std::string line;
    int lineno = 0, degree = -1;
    auto fail = [&](const std::string& msg) { throw Error(source + ":" + std::to_string(lineno) + ": " + msg); };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind("#!", 0) == 0) {
            std::istringstream kv(line.substr(2));
            std::string tok;
            while (kv >> tok) {
                auto eq = tok.find('=');
                if (eq == std::string::npos) fail("metadata token without '=': " + tok);
                std::string k = tok.substr(0, eq), v = tok.substr(eq + 1);
                if (k == "name") f.gens.label = v;
                else if (k == "degree") degree = std::stoi(v);
                else if (k == "order") f.gens.claimed_order = v;
                else if (k == "preserves") {
                    std::string item;
                    std::istringstream ls(v);
                    while (std::getline(ls, item, ','))
                        if (!item.empty()) f.preserves.push_back(item);
                }
            }
            continue;
        }
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        std::vector<int> img;
        std::string tbits;
        while (ls >> tok) {
            if (tok.rfind("t=", 0) == 0) {
                tbits = tok.substr(2);
                continue;
            }
            try {
                size_t used = 0;
                int v = std::stoi(tok, &used);
                if (used != tok.size()) fail("bad image '" + tok + "'");
                img.push_back(v);
            } catch (const std::logic_error&) {
                fail("bad image '" + tok + "'");
            }
        }
        if (img.empty()) {
            if (tbits.empty()) continue;
            if (degree < 0) degree = static_cast<int>(tbits.size());
            for (int i = 0; i < degree; ++i) img.push_back(i);
        }
        if (degree < 0) degree = static_cast<int>(img.size());
        if (static_cast<int>(img.size()) != degree) fail("generator has wrong degree");
        std::vector<char> seen(degree, 0);
        for (int v : img) {
            if (v < 0 || v >= degree || seen[v]) fail("images do not form a permutation");
            seen[v] = 1;
        }
        HAut x{Word(degree), Perm(img)};
        if (!tbits.empty()) {
            if (static_cast<int>(tbits.size()) != degree) fail("translation has wrong length");
            try {
                x.t = Word::from_string(tbits);
            } catch (const Error& e) {
                fail(e.what());
            }
        }
        f.gens.gens.push_back(x);
    }
    if (degree < 0) fail("no degree given and no generators");
    f.gens.m = degree;
    return f;
}

std::string format_group(const GroupGens& g, const std::vector<std::string>& preserves, const std::string& comment) {
    std::ostringstream out;
    if (!comment.empty()) {
        std::istringstream cs(comment);
        std::string l;
        while (std::getline(cs, l)) out << "# " << l << "\n";
    }
    out << "#! name=" << g.label << " degree=" << g.m;
    if (!g.claimed_order.empty()) out << " order=" << g.claimed_order;
    if (!preserves.empty()) {
        out << " preserves=";
        for (size_t i = 0; i < preserves.size(); ++i) out << (i ? "," : "") << preserves[i];
    }
    out << "\n";
    for (const auto& x : g.gens) {
        for (int i = 0; i < g.m; ++i) out << (i ? " " : "") << x.p[i];
        if (!x.t.is_zero()) out << " t=" << x.t.to_string();
        out << "\n";
    }
    return out.str();
}

GroupFile read_group_file(const std::string& path) { return parse_group(read_text_file(path), path); }

std::string default_data_dir() {
    if (const char* e = std::getenv("CTC_DATA_DIR"); e && *e) return e;
    return CTC_DATA_DIR;
}

void check_preserves_set(const GroupGens& g, const std::vector<std::string>& code_names) {
    std::vector<const Code*> codes;
    for (const auto& n : code_names) {
        codes.push_back(&named_code(n).code);
        if (codes.back()->length() != g.m) throw Error("group " + g.label + " has degree " + std::to_string(g.m) +
                                                       " but " + n + " has length " +
                                                       std::to_string(codes.back()->length()));
    }
    for (size_t gi = 0; gi < g.gens.size(); ++gi)
        for (size_t ci = 0; ci < codes.size(); ++ci) {
            GroupGens one{g.m, {g.gens[gi]}, g.label, {}};
            bool ok = false;
            PreserveReport first;
            for (size_t cj = 0; cj < codes.size() && !ok; ++cj) {
                Code img = image(g.gens[gi], *codes[ci]);
                if (img.same_words(*codes[cj])) ok = true;
            }
            if (!ok) {
                first = check_preserves(one, *codes[ci]);
                std::string w = first.ok ? std::string("?") : first.word.to_string();
                throw Error("generator " + std::to_string(gi) + " of " + g.label + " does not preserve " +
                            code_names[ci] + " (image word " + w + ")");
            }
        }
}

GroupGens load_group(const std::string& name, const std::string& data_dir) {
    std::string dir = data_dir.empty() ? default_data_dir() : data_dir;
    namespace fs = std::filesystem;
    fs::path p = fs::path(dir) / "groups" / (name + ".perms");
    if (!fs::exists(p)) throw Error("no bundled group file " + p.string());
    GroupFile f = read_group_file(p.string());
    if (f.gens.label.empty()) f.gens.label = name;
    check_preserves_set(f.gens, f.preserves);
    return f.gens;
}

}  // namespace ctc
