#include "ctc/zoo.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>

#include "ctc/field.hpp"
#include "ctc/groups.hpp"
#include "ctc/orbits.hpp"
#include "ctc/hamming.hpp"
#include "ctc/perm.hpp"
#include "ctc/pg24.hpp"

namespace ctc {

std::string Claimed::text() const {
    std::string s = dim >= 0 ? "[" : "(";
    s += std::to_string(m) + ",";
    s += dim >= 0 ? std::to_string(dim) : to_decimal(size);
    s += "," + std::to_string(delta) + ";" + (rho >= 0 ? std::to_string(rho) : std::string("?"));
    s += dim >= 0 ? "]" : ")";
    return s;
}

namespace {

void expect(bool ok, const std::string& what) {
    if (!ok) throw Error("construction check failed: " + what);
}

Code span_words(int m, const std::vector<Word>& w, std::string name = {}) { return Code::linear(m, w, std::move(name)); }

}  // namespace

// ---------------------------------------------------------------- Hadamard

Code hadamard12() {
    const int p = 11;
    std::vector<bool> square(p, false);
    for (int x = 0; x < p; ++x) square[x * x % p] = true;  // 0 counts as a square
    // rows as 0/1 words: bit set where the Hadamard entry is -1
    std::vector<Word> rows;
    for (int k = 0; k < p; ++k) {
        Word w(12);
        for (int a = 0; a < p; ++a)
            if (square[((a - k) % p + p) % p]) w.set(a);
        rows.push_back(w);
    }
    rows.push_back(Word::all_ones(12));
    std::vector<Word> words;
    for (const auto& r : rows) {
        words.push_back(r);
        words.push_back(~r);
    }
    Code h = Code::from_words(12, words, "H");
    expect(h.size() == 24, "H has 24 words");
    expect(min_distance(h) == 6, "H has minimum distance 6");
    return h;
}

Code punctured_hadamard() {
    Code c = puncture(hadamard12(), 11).set_name("PH");
    expect(c.size() == 24 && min_distance(c) == 5, "PH is (11,24,5)");
    return c;
}

Code hadamard_even() {
    Code c = even_subcode(punctured_hadamard()).set_name("E");
    expect(c.size() == 12 && min_distance(c) == 6, "E has 12 words and minimum distance 6");
    return c;
}

// ---------------------------------------------------------------- W24 and Golay

void verify_steiner(const std::vector<Word>& blocks, int v, int k, int t) {
    // colex rank of t-subsets
    std::vector<std::vector<uint64_t>> C(v + 1, std::vector<uint64_t>(t + 1, 0));
    for (int n = 0; n <= v; ++n) {
        C[n][0] = 1;
        for (int j = 1; j <= std::min(n, t); ++j) C[n][j] = C[n - 1][j - 1] + (j <= n - 1 ? C[n - 1][j] : 0);
    }
    std::vector<uint8_t> hit(C[v][t], 0);
    std::vector<int> pick(t);
    for (const auto& b : blocks) {
        if (b.length() != v || b.weight() != k) throw Error("block of wrong size: " + b.to_string());
        auto s = b.support();
        std::function<void(int, int)> rec = [&](int start, int depth) {
            if (depth == t) {
                uint64_t r = 0;
                for (int j = 0; j < t; ++j) r += C[pick[j]][j + 1];
                if (hit[r] < 255) ++hit[r];
                return;
            }
            for (int i = start; i < k; ++i) {
                pick[depth] = s[i];
                rec(i + 1, depth + 1);
            }
        };
        rec(0, 0);
    }
    for (uint64_t r = 0; r < hit.size(); ++r)
        if (hit[r] != 1) {
            // unrank for the message
            std::vector<int> sub(t);
            uint64_t x = r;
            int n = v;
            for (int j = t; j >= 1; --j) {
                while (C[n][j] > x) --n;
                sub[j - 1] = n;
                x -= C[n][j];
            }
            std::string msg;
            for (int e : sub) msg += (msg.empty() ? "" : ",") + std::to_string(e);
            throw Error("Steiner check: " + std::to_string(t) + "-subset {" + msg + "} lies in " +
                        std::to_string(hit[r]) + " blocks");
        }
}

const WittDesign& witt_w24() {
    static const WittDesign w = [] {
        const auto& g = pg24::geometry();
        WittDesign d;
        auto lift = [](const Word& x, std::vector<int> extra) {
            Word out(24);
            for (int i : x.support()) out.set(i);
            for (int e : extra) out.set(e);
            return out;
        };
        const int a = kPointA, b = kPointB, c = kPointC;
        for (const auto& l : g.plane.lines) {
            d.blocks.push_back(lift(l, {a, b, c}));
            d.type.push_back(1);
        }
        const std::vector<int> hx[3] = {{a, b}, {b, c}, {c, a}};
        for (int i = 0; i < 3; ++i)
            for (const auto& h : g.orbits.H[i]) {
                d.blocks.push_back(lift(h, hx[i]));
                d.type.push_back(2 + i);
            }
        const int fx[3] = {c, a, b};
        for (int i = 0; i < 3; ++i)
            for (const auto& f : g.orbits.F[i]) {
                d.blocks.push_back(lift(f, {fx[i]}));
                d.type.push_back(5 + i);
            }
        for (size_t i = 0; i < g.plane.lines.size(); ++i)
            for (size_t j = i + 1; j < g.plane.lines.size(); ++j) {
                d.blocks.push_back(lift(g.plane.lines[i] ^ g.plane.lines[j], {}));
                d.type.push_back(8);
            }
        expect(d.blocks.size() == 759, "W24 has 759 blocks");
        verify_steiner(d.blocks, 24, 8, 5);
        return d;
    }();
    return w;
}

const GolayFamily& golay_family() {
    static const GolayFamily f = [] {
        const auto& w = witt_w24();
        GolayFamily g;
        g.G24 = span_words(24, w.blocks, "G24");
        expect(g.G24.dimension() == 12, "G24 has dimension 12");
        expect(dual(g.G24).same_words(g.G24), "G24 is self-dual");
        expect(min_distance(g.G24) == 8, "G24 has minimum distance 8");
        {
            std::vector<Word> eight;
            g.G24.for_each([&](const Word& x) {
                if (x.weight() == 8) eight.push_back(x);
            });
            std::sort(eight.begin(), eight.end());
            auto blocks = w.blocks;
            std::sort(blocks.begin(), blocks.end());
            expect(eight == blocks, "weight-8 words of G24 are the W24 blocks");
        }
        std::vector<int> first23(23), first22(22);
        for (int i = 0; i < 23; ++i) first23[i] = i;
        for (int i = 0; i < 22; ++i) first22[i] = i;
        auto blocks_where = [&](auto pred, const std::vector<int>& keep) {
            std::vector<Word> out;
            for (const auto& b : w.blocks)
                if (pred(b)) out.push_back(b.restricted(keep));
            return out;
        };
        const int B = kPointB, Cc = kPointC;
        g.G23 = puncture(g.G24, Cc).set_name("G23");
        g.G23perp = shorten(g.G24, Cc).set_name("G23perp");
        expect(g.G23perp.same_words(dual(g.G23)), "shorten(G24) equals dual(G23)");
        expect(g.G23.same_words(span_words(23, blocks_where([&](const Word& b) { return b.test(Cc); }, first23))),
               "G23 is the span of blocks through c");
        expect(g.G23perp.same_words(
                   span_words(23, blocks_where([&](const Word& b) { return !b.test(Cc); }, first23))),
               "G23perp is the span of blocks missing c");
        g.G22 = puncture(g.G23, B).set_name("G22");
        expect(g.G22.same_words(span_words(22, blocks_where([](const Word&) { return true; }, first22))),
               "G22 is the span of all blocks restricted to 22 points");
        g.G22perp = dual(g.G22).set_name("G22perp");
        expect(g.G22perp.same_words(span_words(
                   22, blocks_where([&](const Word& b) { return !b.test(B) && !b.test(Cc); }, first22))),
               "G22perp is the span of blocks missing b and c");
        g.E22 = even_subcode(g.G22).set_name("E22");
        {
            auto rows = g.G22perp.basis();
            rows.push_back(Word::all_ones(22));
            expect(g.E22.same_words(Code::linear(22, rows)), "E22 = <G22perp, 1>");
        }
        g.S22 = shorten(g.G23, B).set_name("S22");
        expect(g.S22.same_words(span_words(
                   22, blocks_where([&](const Word& b) { return b.test(Cc) && !b.test(B); }, first22))),
               "S22 is the span of blocks through c missing b");
        g.S22b = span_words(22, blocks_where([&](const Word& b) { return b.test(B) && !b.test(Cc); }, first22),
                            "S22b");
        expect(!g.S22b.same_words(g.S22), "the two shortened codes differ");
        struct Row {
            const Code* c;
            int dim, delta;
        };
        for (auto [c, dim, delta] : std::vector<Row>{{&g.G23, 12, 7},
                                                     {&g.G23perp, 11, 8},
                                                     {&g.G22, 12, 6},
                                                     {&g.G22perp, 10, 8},
                                                     {&g.E22, 11, 6},
                                                     {&g.S22, 11, 7},
                                                     {&g.S22b, 11, 7}})
            expect(c->dimension() == dim && min_distance(*c) == delta,
                   c->name() + " has dimension " + std::to_string(dim) + " and distance " + std::to_string(delta));
        return g;
    }();
    return f;
}

// ---------------------------------------------------------------- Nordstrom-Robinson

const NordstromRobinson& nordstrom_robinson() {
    static const NordstromRobinson nr = [] {
        const auto& w = witt_w24();
        const auto& g = golay_family();
        NordstromRobinson r;
        // octad: the first block, in sorted order
        auto blocks = w.blocks;
        std::sort(blocks.begin(), blocks.end());
        r.octad = blocks.front().support();
        std::vector<int> rest;
        for (int i = 0; i < 24; ++i)
            if (!blocks.front().test(i)) rest.push_back(i);
        std::vector<Word> words;
        g.G24.for_each([&](const Word& x) {
            Word o = x.restricted(r.octad);
            int k = o.weight();
            if (k == 0 || (k == 2 && o.test(0))) words.push_back(x.restricted(rest));
        });
        r.nr16 = Code::from_words(16, words, "NR16");
        expect(r.nr16.size() == 256 && min_distance(r.nr16) == 6, "extended NR is (16,256,6)");
        r.nr15 = puncture(r.nr16, 15).set_name("NR15");
        expect(r.nr15.size() == 256 && min_distance(r.nr15) == 5, "NR is (15,256,5)");
        r.span = span(r.nr15);
        // the span is a perfect [15,11,3] code, i.e. RM(2,4)*
        expect(r.span.dimension() == 11 && min_distance(r.span) == 3, "span of NR is [15,11,3]");
        auto kd = maximal_linear_subcode(r.nr15);
        r.kernel = kd.kernel;
        r.kernel_cosets = static_cast<int>(kd.coset_reps.size());
        // RM(1,4)* inside RM(2,4)*: dual of the span plus the all-one word
        auto rm1 = dual(r.span).basis();
        rm1.push_back(Word::all_ones(15));
        expect(r.kernel.same_words(Code::linear(15, rm1)), "kernel of NR is RM(1,4)*");
        expect(r.kernel.dimension() == 5 && r.kernel_cosets == 8, "NR is 8 cosets of RM(1,4)*");
        return r;
    }();
    return nr;
}

// ---------------------------------------------------------------- GQR

GqrPair gqr_code(int r) {
    if (r != 23 && r != 25 && r != 31 && r != 41) throw Error("gqr_code: r must be 23, 25, 31 or 41");
    FiniteField F(r);
    const int m = r + 1, inf = r;
    std::vector<Perm> gens = psl2_group(r).perms();
    Perm outer = pgl2_group(r).perms().back();
    auto spin = [&](const Word& seed) {
        Gf2Basis b(m);
        std::vector<Word> q{seed};
        b.insert(seed);
        for (size_t i = 0; i < q.size(); ++i)
            for (const auto& p : gens) {
                Word im = p.apply(q[i]);
                if (b.insert(im)) q.push_back(im);
            }
        return Code::linear(m, b.rows());
    };
    GqrPair out;
    out.r = r;
    bool found = false;
    for (int bit = 0; bit < 2 && !found; ++bit) {
        Word seed(m);
        for (int x = 1; x < r; ++x)
            if (F.is_square(x)) seed.set(x);
        if (bit) seed.set(inf);
        Code u = spin(seed);
        if (u.dimension() == m / 2) {
            out.U1 = u;
            out.infinity_bit = bit;
            found = true;
        }
    }
    if (!found) throw Error("gqr_code: no seed spins to dimension (r+1)/2");
    out.U1.set_name("GQR" + std::to_string(r));
    out.U2 = image(pure(outer), out.U1).set_name("GQR" + std::to_string(r) + "b");
    Code d = dual(out.U1);
    out.self_dual = d.same_words(out.U1);
    out.dual_is_other = d.same_words(out.U2);
    if (r % 4 == 3) expect(out.self_dual, "GQR code is self-dual for r = 3 mod 4");
    if (r % 4 == 1) expect(out.dual_is_other, "dual of U1 is U2 for r = 1 mod 4");
    return out;
}

// ---------------------------------------------------------------- Hermitian unital

Unital hermitian_unital(int q) {
    const int Q = q * q;
    FiniteField F(Q);
    auto norm = [&](int x) { return F.pow(x, q + 1); };
    auto normalize = [&](std::array<int, 3> t) {
        int k = 0;
        while (t[k] == 0) ++k;
        int s = F.inv(t[k]);
        for (auto& x : t) x = F.mul(s, x);
        return t;
    };
    std::vector<std::array<int, 3>> pts;
    for (int x = 0; x < Q; ++x)
        for (int y = 0; y < Q; ++y)
            for (int z = 0; z < Q; ++z) {
                if (!x && !y && !z) continue;
                std::array<int, 3> t{x, y, z};
                if (normalize(t) != t) continue;
                if (F.add(F.add(norm(x), norm(y)), norm(z)) == 0) pts.push_back(t);
            }
    std::sort(pts.begin(), pts.end());
    Unital u;
    u.q = q;
    u.points = pts;
    const int n = static_cast<int>(pts.size());
    expect(n == q * q * q + 1, "unital has q^3+1 points");
    // lines of PG(2,Q) are normalized dual triples
    for (int a = 0; a < Q; ++a)
        for (int b = 0; b < Q; ++b)
            for (int c = 0; c < Q; ++c) {
                if (!a && !b && !c) continue;
                std::array<int, 3> l{a, b, c};
                if (normalize(l) != l) continue;
                Word w(n);
                for (int i = 0; i < n; ++i) {
                    int s = F.add(F.add(F.mul(a, pts[i][0]), F.mul(b, pts[i][1])), F.mul(c, pts[i][2]));
                    if (s == 0) w.set(i);
                }
                int k = w.weight();
                expect(k == 1 || k == q + 1, "every line meets the unital in 1 or q+1 points");
                if (k == q + 1) u.blocks.push_back(w);
            }
    std::sort(u.blocks.begin(), u.blocks.end());
    expect(static_cast<int>(u.blocks.size()) == q * q * (q * q - q + 1), "unital block count");
    verify_steiner(u.blocks, n, q + 1, 2);
    return u;
}

const UnitalCodes& hermitian_unital_code() {
    static const UnitalCodes uc = [] {
        UnitalCodes r;
        r.unital = hermitian_unital(5);
        r.U = Code::linear(126, r.unital.blocks, "U126");
        expect(r.U.dimension() == 105, "span of the unital blocks has dimension 105");
        r.Uperp = dual(r.U).set_name("U126perp");
        expect(r.Uperp.dimension() == 21, "U^perp has dimension 21");
        r.weights_U = weight_distribution(r.U);
        return r;
    }();
    return uc;
}

// ---------------------------------------------------------------- PSL3(4) codes

const std::map<std::string, NamedCode>& psl34_code_menu() {
    static const std::map<std::string, NamedCode> menu = [] {
        const auto& g = pg24::geometry();
        const auto& R = g.reps;
        const Code& P = g.P;
        auto ext = [&](std::vector<Word> extra, const std::string& name) {
            auto rows = P.basis();
            rows.insert(rows.end(), extra.begin(), extra.end());
            return Code::linear(21, rows, name);
        };
        const auto& D = R.Delta;
        const auto& F = R.Phi;
        std::map<std::string, NamedCode> m;
        auto lin = [&](const std::string& name, const std::string& label, Code c, int dim, int delta, int rho,
                       int line = 0, const std::string& grp = {}) {
            c.set_name(name);
            expect(c.dimension() == dim, name + " has dimension " + std::to_string(dim));
            expect(min_distance(c) == delta, name + " has minimum distance " + std::to_string(delta));
            Claimed cl{21, pow2(dim), dim, delta, rho};
            m[name] = NamedCode{name, label, c, cl, line, grp};
        };
        lin("Pperp", "P^perp", dual(P), 12, 5, 3, 4, "PGammaL3(4)");
        lin("LD1", "<L,D1>", ext({R.ell, D[0]}, "LD1"), 11, 5, 6, 5, "PSigmaL3(4)");
        lin("PF1perp", "<P,F1>^perp", ext({D[0], F[1], F[2]}, "PF1perp"), 11, 6, 5);
        lin("Lperp", "L^perp", ext({D[0], D[1], D[2]}, "Lperp"), 11, 6, 5);
        lin("L", "L", g.L, 10, 5, 6, 7, "PGammaL3(4)");
        lin("PD1", "<P,D1>", ext({D[0]}, "PD1"), 10, 6, 7);
        lin("PF1", "<P,F1>", ext({F[0]}, "PF1"), 10, 7, 6);
        lin("P", "P", P, 9, 8, 7);
        expect(m["LD1"].code.same_words(ext({R.ell, D[0], F[0]}, "")), "<L,D1> = <P,l,D1,F1>");
        expect(dual(g.L).same_words(m["Lperp"].code), "L^perp = <P,D1,D2,D3>");
        expect(dual(m["PF1"].code).same_words(m["PF1perp"].code), "<P,F1>^perp = <P,D1,F2,F3>");
        expect(dual(m["PD1"].code).same_words(m["LD1"].code), "<P,D1>^perp = <L,D1>");
        auto nonlin = [&](const std::string& name, const std::string& label, Code c, const BigInt& size, int delta,
                          int rho, int line = 0, const std::string& grp = {}) {
            c.set_name(name);
            expect(c.size() == size, name + " has " + to_decimal(size) + " words");
            expect(min_distance(c) == delta, name + " has minimum distance " + std::to_string(delta));
            m[name] = NamedCode{name, label, c, Claimed{21, size, -1, delta, rho}, line, grp};
        };
        const Code& L = g.L;
        nonlin("PD2uPD3", "<P,D2> u <P,D3>", union_of_cosets(P, {Word(21), D[1], D[2]}), BigInt(3) * pow2(9), 6, 7,
               0, "PSigmaL3(4)+xDelta");
        nonlin("LD2uLD3", "<L,D2> u <L,D3>", union_of_cosets(L, {Word(21), D[1], D[2]}), BigInt(3) * pow2(10), 5,
               6);
        nonlin("LD1uLD2", "<L,D1> u <L,D2>", union_of_cosets(L, {Word(21), D[0], D[1]}), BigInt(3) * pow2(10), 5,
               6, 6, "AutLD1uLD2@21");
        // the table-row code is the tau^2 image of <L,D2> u <L,D3>
        Perm t = pg24::tau(g.plane);
        Perm t2 = t.then(t);
        expect(image(pure(t2), m["LD2uLD3"].code).same_words(m["LD1uLD2"].code),
               "tau^2 maps <L,D2> u <L,D3> onto <L,D1> u <L,D2>");
        return m;
    }();
    return menu;
}

// ---------------------------------------------------------------- registry

namespace {

NamedCode make_named(const std::string& name, const std::string& label, Code c, std::optional<Claimed> cl,
                     int line, const std::string& grp) {
    c.set_name(name);
    return NamedCode{name, label, std::move(c), std::move(cl), line, grp};
}

Claimed lin_claim(int m, int dim, int delta, int rho) { return Claimed{m, pow2(dim), dim, delta, rho}; }

using Builder = std::function<NamedCode()>;

const std::vector<std::pair<std::string, Builder>>& builders() {
    static const std::vector<std::pair<std::string, Builder>> b = [] {
        std::vector<std::pair<std::string, Builder>> v;
        v.emplace_back("H", [] { return make_named("H", "H", hadamard12(), Claimed{12, 24, -1, 6, 3}, 1, "AutH@12"); });
        v.emplace_back("PH", [] {
            return make_named("PH", "PH", punctured_hadamard(), Claimed{11, 24, -1, 5, 3}, 2, "AutPH@11");
        });
        v.emplace_back("E", [] { return make_named("E", "E", hadamard_even(), Claimed{11, 12, -1, 6, -1}, 0, ""); });
        v.emplace_back("NR15", [] {
            return make_named("NR15", "NR", nordstrom_robinson().nr15, Claimed{15, 256, -1, 5, 3}, 3, "AutNR@15");
        });
        v.emplace_back("NR16", [] {
            return make_named("NR16", "NR16", nordstrom_robinson().nr16, std::nullopt, 0, "");
        });
        for (const char* n : {"Pperp", "LD1", "LD1uLD2", "L", "PF1perp", "Lperp", "PD1", "PF1", "P", "PD2uPD3",
                              "LD2uLD3"}) {
            std::string s = n;
            v.emplace_back(s, [s] { return psl34_code_menu().at(s); });
        }
        v.emplace_back("G24", [] {
            return make_named("G24", "G24", golay_family().G24, lin_claim(24, 12, 8, 4), 8, "M24");
        });
        v.emplace_back("G23", [] {
            return make_named("G23", "G23", golay_family().G23, lin_claim(23, 12, 7, 3), 9, "M23");
        });
        v.emplace_back("G23perp", [] {
            return make_named("G23perp", "G23^perp", golay_family().G23perp, lin_claim(23, 11, 8, 7), 10, "M23");
        });
        v.emplace_back("G22", [] {
            return make_named("G22", "G22", golay_family().G22, lin_claim(22, 12, 6, 3), 11, "M22:2");
        });
        v.emplace_back("E22", [] {
            return make_named("E22", "E22", golay_family().E22, lin_claim(22, 11, 6, 7), 12, "M22:2");
        });
        v.emplace_back("S22", [] {
            return make_named("S22", "S22", golay_family().S22, lin_claim(22, 11, 7, 6), 13, "M22");
        });
        v.emplace_back("S22b", [] {
            return make_named("S22b", "S22 (b not c)", golay_family().S22b, lin_claim(22, 11, 7, 6), 0, "");
        });
        v.emplace_back("G22perp", [] {
            return make_named("G22perp", "G22^perp", golay_family().G22perp, lin_claim(22, 10, 8, 7), 0, "");
        });
        for (int r : {23, 25, 31, 41}) {
            v.emplace_back("GQR" + std::to_string(r), [r] {
                auto p = gqr_code(r);
                std::optional<Claimed> cl;
                if (r == 25) cl = lin_claim(26, 13, min_distance(p.U1), 5);
                if (r == 41) cl = lin_claim(42, 21, 10, -1);
                return make_named(p.U1.name(), p.U1.name(), p.U1, cl, 0, "PSL2(" + std::to_string(r) + ")");
            });
            v.emplace_back("GQR" + std::to_string(r) + "b", [r] {
                auto p = gqr_code(r);
                return make_named(p.U2.name(), p.U2.name(), p.U2, std::nullopt, 0, "");
            });
        }
        v.emplace_back("U126", [] {
            return make_named("U126", "U", hermitian_unital_code().U, lin_claim(126, 105, 6, -1), 0, "PSU3(5)@126");
        });
        v.emplace_back("U126perp", [] {
            auto& u = hermitian_unital_code();
            return make_named("U126perp", "U^perp", u.Uperp, lin_claim(126, 21, min_distance(u.Uperp), -1), 0,
                              "PSU3(5)@126");
        });
        v.emplace_back("Unital28", [] {
            auto u = hermitian_unital(3);
            Code c = Code::linear(28, u.blocks);
            return make_named("Unital28", "span of the 2-(28,4,1) unital", c, std::nullopt, 0, "PSU3(3)@28");
        });
        v.emplace_back("Ree28", [] {
            // the 63-block orbit on 4-sets is the Ree unital 2-(28,4,1)
            GroupGens g = ree3_group();
            auto orb = orbits_on_k_subsets(g, 4);
            size_t at = std::find(orb.sizes.begin(), orb.sizes.end(), uint64_t{63}) - orb.sizes.begin();
            expect(at < orb.sizes.size(), "Ree(3) has an orbit of 63 four-sets");
            std::vector<Word> blocks{Word::from_u64(28, orb.representatives[at])};
            std::set<Word> seen(blocks.begin(), blocks.end());
            for (size_t i = 0; i < blocks.size(); ++i)
                for (const auto& p : g.perms()) {
                    Word w = p.apply(blocks[i]);
                    if (seen.insert(w).second) blocks.push_back(w);
                }
            verify_steiner(blocks, 28, 4, 2);
            return make_named("Ree28", "span of the Ree unital 2-(28,4,1)", Code::linear(28, blocks), std::nullopt, 0,
                              "Ree3@28");
        });
        return v;
    }();
    return b;
}

}  // namespace

const NamedCode& named_code(const std::string& name) {
    static std::map<std::string, NamedCode> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    for (const auto& [n, b] : builders())
        if (n == name) return cache.emplace(name, b()).first->second;
    throw Error("unknown code name: " + name);
}

std::vector<std::string> code_names() {
    std::vector<std::string> out;
    for (const auto& [n, b] : builders()) out.push_back(n);
    return out;
}

std::vector<std::string> table2_names() {
    return {"H", "PH", "NR15", "Pperp", "LD1", "LD1uLD2", "L", "G24", "G23", "G23perp", "G22", "E22", "S22"};
}

}  // namespace ctc
