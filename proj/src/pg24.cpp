#include "ctc/pg24.hpp"

#include <algorithm>
#include <map>

#include "ctc/hamming.hpp"

namespace ctc::pg24 {

Triple normalize(Triple t) {
    int k = 0;
    while (k < 3 && t[k] == 0) ++k;
    if (k == 3) throw Error("zero vector is not a projective point");
    uint8_t s = kInv[t[k]];
    for (auto& x : t) x = kMul[s][x];
    return t;
}

int ProjPlane4::index(Triple t) const {
    t = normalize(t);
    auto it = std::lower_bound(points.begin(), points.end(), t);
    return static_cast<int>(it - points.begin());
}

Word ProjPlane4::set(const std::vector<Triple>& pts) const {
    Word w(kPoints);
    for (const auto& t : pts) w.set(index(t));
    return w;
}

bool ProjPlane4::collinear(int a, int b, int c) const {
    if (a == b || b == c || a == c) return true;
    return lines[line_of[a][b]].test(c);
}

Perm ProjPlane4::induced(const Matrix& M, bool frob) const {
    std::vector<int> img(kPoints);
    for (int i = 0; i < kPoints; ++i) {
        Triple v{};
        for (int r = 0; r < 3; ++r) {
            uint8_t s = 0;
            for (int c = 0; c < 3; ++c) s = kAdd[s][kMul[M[r][c]][points[i][c]]];
            v[r] = frob ? kFrob[s] : s;
        }
        img[i] = index(v);
    }
    return Perm(img);
}

bool ProjPlane4::preserves_lines(const Perm& p) const {
    for (const auto& l : lines)
        if (!std::binary_search(lines.begin(), lines.end(), p.apply(l))) return false;
    return true;
}

ProjPlane4 build_pg24() {
    ProjPlane4 p;
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            for (int z = 0; z < 4; ++z) {
                if (!x && !y && !z) continue;
                p.points.push_back(normalize({uint8_t(x), uint8_t(y), uint8_t(z)}));
            }
    std::sort(p.points.begin(), p.points.end());
    p.points.erase(std::unique(p.points.begin(), p.points.end()), p.points.end());
    if (p.points.size() != kPoints) throw Error("PG(2,4) point count wrong");
    // lines are the normalized dual vectors
    for (const auto& a : p.points) {
        Word l(kPoints);
        for (int i = 0; i < kPoints; ++i) {
            uint8_t s = 0;
            for (int c = 0; c < 3; ++c) s = kAdd[s][kMul[a[c]][p.points[i][c]]];
            if (s == 0) l.set(i);
        }
        p.lines.push_back(l);
    }
    std::sort(p.lines.begin(), p.lines.end());
    p.line_of.assign(kPoints, std::vector<int>(kPoints, -1));
    p.incidence.assign(kPoints, std::vector<char>(kPoints, 0));
    for (int li = 0; li < kPoints; ++li) {
        const auto& l = p.lines[li];
        if (l.weight() != 5) throw Error("PG(2,4) line without 5 points");
        auto s = l.support();
        for (int a : s) {
            p.incidence[a][li] = 1;
            for (int b : s)
                if (a != b) {
                    if (p.line_of[a][b] >= 0) throw Error("two points on two lines");
                    p.line_of[a][b] = li;
                }
        }
    }
    for (int a = 0; a < kPoints; ++a) {
        int deg = 0;
        for (int li = 0; li < kPoints; ++li) deg += p.incidence[a][li];
        if (deg != 5) throw Error("PG(2,4) point not on 5 lines");
        for (int b = 0; b < kPoints; ++b)
            if (a != b && p.line_of[a][b] < 0) throw Error("two points on no common line");
    }
    for (int i = 0; i < kPoints; ++i)
        for (int j = i + 1; j < kPoints; ++j)
            if ((p.lines[i] & p.lines[j]).weight() != 1) throw Error("two lines not meeting once");
    return p;
}

bool is_hyperoval(const ProjPlane4& p, const Word& w) {
    if (w.length() != kPoints || w.weight() != 6) return false;
    for (const auto& l : p.lines) {
        int k = (l & w).weight();
        if (k != 0 && k != 2) return false;
    }
    return true;
}

bool is_fano(const ProjPlane4& p, const Word& w) {
    if (w.length() != kPoints || w.weight() != 7) return false;
    int three = 0;
    for (const auto& l : p.lines) {
        int k = (l & w).weight();
        if (k == 3)
            ++three;
        else if (k != 1)
            return false;
    }
    // 7 three-point lines with every pair on one line: a 2-(7,3,1) design
    return three == 7;
}

std::vector<Word> enumerate_hyperovals(const ProjPlane4& p) {
    std::vector<Word> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (cur.size() == 6) {
            Word w = Word::from_support(kPoints, cur);
            if (!is_hyperoval(p, w)) throw Error("hyperoval search produced a bad set");
            out.push_back(w);
            return;
        }
        for (int x = start; x < kPoints; ++x) {
            bool ok = true;
            for (size_t i = 0; i < cur.size() && ok; ++i)
                for (size_t j = i + 1; j < cur.size() && ok; ++j)
                    if (p.collinear(cur[i], cur[j], x)) ok = false;
            if (!ok) continue;
            cur.push_back(x);
            self(self, x + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> enumerate_fanos(const ProjPlane4& p) {
    std::vector<Word> out;
    auto meet = [&](int a, int b, int c, int d) {
        auto s = (p.lines[p.line_of[a][b]] & p.lines[p.line_of[c][d]]).support();
        return s.front();
    };
    for (int a = 0; a < kPoints; ++a)
        for (int b = a + 1; b < kPoints; ++b)
            for (int c = b + 1; c < kPoints; ++c) {
                if (p.collinear(a, b, c)) continue;
                for (int d = c + 1; d < kPoints; ++d) {
                    if (p.collinear(a, b, d) || p.collinear(a, c, d) || p.collinear(b, c, d)) continue;
                    // quadrangle plus its diagonal points
                    Word w = Word::from_support(kPoints, {a, b, c, d});
                    w.set(meet(a, b, c, d));
                    w.set(meet(a, c, b, d));
                    w.set(meet(a, d, b, c));
                    out.push_back(w);
                }
            }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (const auto& w : out)
        if (!is_fano(p, w)) throw Error("quadrangle closure is not a Fano subplane: " + w.to_string());
    return out;
}

Matrix diag(uint8_t a, uint8_t b, uint8_t c) { return {{{a, 0, 0}, {0, b, 0}, {0, 0, c}}}; }

namespace {

Matrix identity() { return diag(1, 1, 1); }

Matrix elementary(int r, int c, uint8_t lambda) {
    Matrix m = identity();
    m[r][c] = lambda;
    return m;
}

GroupGens make(const ProjPlane4& p, const std::vector<Perm>& perms, const std::string& label) {
    GroupGens g;
    g.m = kPoints;
    g.label = label;
    for (const auto& q : perms) {
        if (!p.preserves_lines(q)) throw Error("generator of " + label + " does not preserve lines");
        g.gens.push_back(pure(q));
    }
    return g;
}

std::vector<Perm> psl_perms(const ProjPlane4& p) {
    Matrix cyc = {{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}};
    return {p.induced(cyc), p.induced(elementary(0, 1, 1)), p.induced(elementary(0, 1, W))};
}

}  // namespace

Perm tau(const ProjPlane4& p) { return p.induced(diag(1, 1, W)); }
Perm frobenius(const ProjPlane4& p) { return p.induced(identity(), true); }

GroupGens psl34_generators(const ProjPlane4& p) { return make(p, psl_perms(p), "PSL3(4)"); }

GroupGens psigmal34_generators(const ProjPlane4& p) {
    auto v = psl_perms(p);
    v.push_back(frobenius(p));
    return make(p, v, "PSigmaL3(4)");
}

GroupGens pgl34_generators(const ProjPlane4& p) {
    auto v = psl_perms(p);
    v.push_back(tau(p));
    return make(p, v, "PGL3(4)");
}

GroupGens pgammal34_generators(const ProjPlane4& p) {
    auto v = psl_perms(p);
    v.push_back(tau(p));
    v.push_back(frobenius(p));
    return make(p, v, "PGammaL3(4)");
}

namespace {

// orbit ids of a sorted list of sets under pure generators
std::vector<int> set_orbits(const std::vector<Word>& sets, const GroupGens& g, int& count) {
    std::vector<int> id(sets.size(), -1);
    count = 0;
    for (size_t s = 0; s < sets.size(); ++s) {
        if (id[s] >= 0) continue;
        std::vector<size_t> q{s};
        id[s] = count;
        for (size_t i = 0; i < q.size(); ++i)
            for (const auto& x : g.gens) {
                Word im = x.p.apply(sets[q[i]]);
                auto it = std::lower_bound(sets.begin(), sets.end(), im);
                if (it == sets.end() || *it != im) throw Error("set family not closed under the group");
                size_t j = it - sets.begin();
                if (id[j] < 0) {
                    id[j] = count;
                    q.push_back(j);
                }
            }
        ++count;
    }
    return id;
}

int lookup(const std::vector<Word>& sets, const std::vector<int>& lab, const Word& w) {
    auto it = std::lower_bound(sets.begin(), sets.end(), w);
    if (it == sets.end() || *it != w) return -1;
    return lab[it - sets.begin()];
}

}  // namespace

int OvalOrbits::hyperoval_orbit(const Word& w) const { return lookup(hyperovals, hyperoval_label, w); }
int OvalOrbits::fano_orbit(const Word& w) const { return lookup(fanos, fano_label, w); }

Word conic_nucleus(const ProjPlane4& p) {
    std::vector<Triple> pts{{0, 1, 0}, {0, 0, 1}};
    for (uint8_t t = 0; t < 4; ++t) pts.push_back({1, t, kMul[t][t]});
    return p.set(pts);
}

OvalOrbits classify_oval_orbits(const ProjPlane4& p, const GroupGens& psl) {
    OvalOrbits o;
    o.hyperovals = enumerate_hyperovals(p);
    o.fanos = enumerate_fanos(p);
    int hc = 0, fc = 0;
    auto hid = set_orbits(o.hyperovals, psl, hc);
    auto fid = set_orbits(o.fanos, psl, fc);
    if (hc != 3 || fc != 3) throw Error("expected three orbits on hyperovals and on Fano subplanes");
    // H1 holds the conic plus nucleus, H2 its image under tau, H3 under tau^2
    Perm t = tau(p);
    Word c = conic_nucleus(p);
    std::array<int, 3> raw{lookup(o.hyperovals, hid, c), lookup(o.hyperovals, hid, t.apply(c)),
                           lookup(o.hyperovals, hid, t.apply(t.apply(c)))};
    if (raw[0] == raw[1] || raw[1] == raw[2] || raw[0] == raw[2])
        throw Error("tau does not permute the hyperoval orbits cyclically");
    std::array<int, 3> hlab{};
    for (int i = 0; i < 3; ++i) hlab[raw[i]] = i;
    o.hyperoval_label.resize(o.hyperovals.size());
    for (size_t i = 0; i < o.hyperovals.size(); ++i) o.hyperoval_label[i] = hlab[hid[i]];
    // Fano orbit j gets the hyperoval label it meets in >= 4 points
    std::array<int, 3> flab{-1, -1, -1};
    for (size_t f = 0; f < o.fanos.size(); ++f) {
        if (flab[fid[f]] >= 0) continue;
        for (size_t h = 0; h < o.hyperovals.size(); ++h)
            if ((o.hyperovals[h] & o.fanos[f]).weight() >= 4) {
                flab[fid[f]] = o.hyperoval_label[h];
                break;
            }
    }
    if (flab[0] < 0 || flab[1] < 0 || flab[2] < 0 || flab[0] == flab[1] || flab[1] == flab[2] ||
        flab[0] == flab[2])
        throw Error("no labeling of Fano orbits satisfies the intersection rule");
    o.fano_label.resize(o.fanos.size());
    for (size_t i = 0; i < o.fanos.size(); ++i) o.fano_label[i] = flab[fid[i]];
    // the rule that holds: labels agree iff the intersection is even
    o.literal_rule_holds = true;
    for (size_t h = 0; h < o.hyperovals.size(); ++h)
        for (size_t f = 0; f < o.fanos.size(); ++f) {
            int k = (o.hyperovals[h] & o.fanos[f]).weight();
            bool same = o.hyperoval_label[h] == o.fano_label[f];
            if (same != (k % 2 == 0) || (k == 4 && !same))
                throw Error("parity rule fails for hyperoval " + o.hyperovals[h].to_string() + " and Fano " +
                            o.fanos[f].to_string());
            if (o.literal_rule_holds && (k <= 3) == same) {
                o.literal_rule_holds = false;
                o.literal_counter_hyperoval = o.hyperovals[h];
                o.literal_counter_fano = o.fanos[f];
            }
        }
    for (size_t i = 0; i < o.hyperovals.size(); ++i) o.H[o.hyperoval_label[i]].push_back(o.hyperovals[i]);
    for (size_t i = 0; i < o.fanos.size(); ++i) o.F[o.fano_label[i]].push_back(o.fanos[i]);
    o.rule = "labels agree iff |D n F| is even (|D n F| = 4 only for equal labels); conic+nucleus in H1, tau images in H2, H3";
    return o;
}

std::array<int, 3> induced_on_orbits(const OvalOrbits& o, const Perm& g) {
    std::array<int, 3> out{};
    for (int i = 0; i < 3; ++i) {
        int j = o.hyperoval_orbit(g.apply(o.H[i].front()));
        if (j < 0) throw Error("permutation does not preserve hyperovals");
        // the whole orbit must follow
        for (const auto& d : o.H[i])
            if (o.hyperoval_orbit(g.apply(d)) != j) throw Error("permutation splits a hyperoval orbit");
        out[i] = j;
    }
    return out;
}

SymdiffVerdict symdiff_hyperoval_check(const ProjPlane4& p, const OvalOrbits& o, const Word& d1,
                                       const Word& d2) {
    if (!is_hyperoval(p, d1) || !is_hyperoval(p, d2)) throw Error("symdiff check: input is not a hyperoval");
    if ((d1 & d2).weight() != 3) throw Error("symdiff check: hyperovals must meet in exactly 3 points");
    SymdiffVerdict v;
    v.sum = d1 ^ d2;
    v.orbits = {o.hyperoval_orbit(d1), o.hyperoval_orbit(d2), o.hyperoval_orbit(v.sum)};
    v.holds = is_hyperoval(p, v.sum) && v.orbits[0] != v.orbits[1] && v.orbits[1] != v.orbits[2] &&
              v.orbits[0] != v.orbits[2];
    return v;
}

LinePlusFano line_plus_fano_check(const ProjPlane4& p, const OvalOrbits& o, const Word& l,
                                  const Word& phi1) {
    if (!std::binary_search(p.lines.begin(), p.lines.end(), l)) throw Error("line_plus_fano: not a line");
    LinePlusFano r;
    Perm t = tau(p);
    r.line = l;
    r.tau_fixes_line = t.apply(l) == l;
    r.phi[0] = phi1;
    r.phi[1] = t.apply(phi1);
    r.phi[2] = t.apply(r.phi[1]);
    r.holds = r.tau_fixes_line;
    for (int i = 0; i < 3; ++i) {
        r.delta[i] = l ^ r.phi[i];
        r.holds = r.holds && o.fano_orbit(r.phi[i]) == i && o.hyperoval_orbit(r.delta[i]) == i &&
                  (l & r.phi[i]).weight() == 3;
    }
    return r;
}

Representatives standard_representatives(const ProjPlane4& p, const OvalOrbits& o) {
    std::vector<Triple> ell, phi;
    for (const auto& t : p.points) {
        if (t[2] == 0) ell.push_back(t);
        if (t[0] <= 1 && t[1] <= 1 && t[2] <= 1) phi.push_back(t);
    }
    auto lf = line_plus_fano_check(p, o, p.set(ell), p.set(phi));
    if (!lf.holds) throw Error("standard line/Fano choice fails the construction");
    return {lf.line, lf.delta, lf.phi};
}

Code code_P(const ProjPlane4& p) {
    std::vector<Word> rows;
    for (const auto& l : p.lines) rows.push_back(~l);
    return Code::linear(kPoints, rows, "P");
}

Code code_L(const ProjPlane4& p) { return Code::linear(kPoints, p.lines, "L"); }

CosetConfiguration coset_configuration(const ProjPlane4& p, const Representatives& r) {
    Code P = code_P(p);
    Code Pp = dual(P);
    CosetConfiguration cc;
    cc.codim = Pp.dimension() - P.dimension();
    if (cc.codim != 3) throw Error("P is not of codimension 3 in its dual");
    if (!is_subcode(P, Pp)) throw Error("P is not self-orthogonal");
    // quotient basis: rows of P-perp independent modulo P
    Gf2Basis b(kPoints);
    for (const auto& w : P.basis()) b.insert(w);
    std::vector<Word> q;
    for (const auto& w : Pp.basis())
        if (b.insert(w)) q.push_back(w);
    auto cls = [&](const Word& v) -> uint32_t {
        if (!Pp.contains(v)) throw Error("representative outside P-perp: " + v.to_string());
        for (uint32_t c = 0; c < 8; ++c) {
            Word s = v;
            for (int j = 0; j < 3; ++j)
                if ((c >> j) & 1) s ^= q[j];
            if (P.contains(s)) return c;
        }
        throw Error("coset class not found");
    };
    cc.names = {"l", "D1", "D2", "D3", "F1", "F2", "F3"};
    cc.reps = {r.ell, r.Delta[0], r.Delta[1], r.Delta[2], r.Phi[0], r.Phi[1], r.Phi[2]};
    for (size_t i = 0; i < cc.reps.size(); ++i) {
        uint32_t c = cls(cc.reps[i]);
        if (c == 0) throw Error("representative " + cc.names[i] + " lies in P");
        for (size_t j = 0; j < i; ++j)
            if (cc.coset_id[j] == c)
                throw Error("representatives " + cc.names[j] + " and " + cc.names[i] + " share a coset");
        cc.coset_id.push_back(c);
    }
    for (int a = 0; a < 7; ++a)
        for (int b2 = a + 1; b2 < 7; ++b2)
            for (int c = b2 + 1; c < 7; ++c)
                if ((cc.coset_id[a] ^ cc.coset_id[b2] ^ cc.coset_id[c]) == 0) cc.lines.push_back({a, b2, c});
    auto has = [&](int a, int b2, int c) {
        std::array<int, 3> t{a, b2, c};
        std::sort(t.begin(), t.end());
        return std::find(cc.lines.begin(), cc.lines.end(), t) != cc.lines.end();
    };
    if (cc.lines.size() != 7) throw Error("coset configuration is not a Fano plane");
    // l, Di, Fi and D1, D2, D3 and Di, F(i+1), F(i+2)
    for (int i = 0; i < 3; ++i) {
        if (!has(0, 1 + i, 4 + i)) throw Error("missing coset line l, D" + std::to_string(i + 1) + ", F" + std::to_string(i + 1));
        if (!has(1 + i, 4 + (i + 1) % 3, 4 + (i + 2) % 3))
            throw Error("missing coset line through D" + std::to_string(i + 1) + " and the other Fano cosets");
    }
    if (!has(1, 2, 3)) throw Error("missing coset line D1, D2, D3");
    return cc;
}

int SubmoduleLattice::find(const std::string& name) const {
    for (size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].name == name) return static_cast<int>(i);
    return -1;
}

SubmoduleLattice submodule_lattice(const ProjPlane4& p, const Representatives& r) {
    const int m = kPoints;
    Code P = code_P(p);
    auto ext = [&](std::vector<Word> extra) {
        auto rows = P.basis();
        rows.insert(rows.end(), extra.begin(), extra.end());
        return Code::linear(m, rows);
    };
    const auto& D = r.Delta;
    const auto& F = r.Phi;
    SubmoduleLattice lat;
    auto add = [&](const std::string& n, Code c) { lat.nodes.push_back({n, c.set_name(n)}); };
    add("0", Code::linear(m, {}));
    add("<1>", Code::linear(m, {Word::all_ones(m)}));
    add("P", P);
    add("L", ext({r.ell}));
    for (int i = 0; i < 3; ++i) add("<P,D" + std::to_string(i + 1) + ">", ext({D[i]}));
    for (int i = 0; i < 3; ++i) add("<P,F" + std::to_string(i + 1) + ">", ext({F[i]}));
    add("<P,D1,D2,D3>", ext({D[0], D[1], D[2]}));
    for (int i = 0; i < 3; ++i) add("<L,D" + std::to_string(i + 1) + ">", ext({r.ell, D[i], F[i]}));
    for (int i = 0; i < 3; ++i)
        add("<P,D" + std::to_string(i + 1) + ",F" + std::to_string((i + 1) % 3 + 1) + ",F" +
                std::to_string((i + 2) % 3 + 1) + ">",
            ext({D[i], F[(i + 1) % 3], F[(i + 2) % 3]}));
    add("P^perp", dual(P));
    add("<1>^perp", dual(Code::linear(m, {Word::all_ones(m)})));
    add("V", Code::linear(m, [&] {
            std::vector<Word> e;
            for (int i = 0; i < m; ++i) e.push_back(Word::from_support(m, {i}));
            return e;
        }()));

    if (!ext({r.ell}).same_words(code_L(p))) throw Error("L differs from <P, l>");
    auto psl = psl34_generators(p);
    for (const auto& n : lat.nodes)
        if (!preserves_code(psl, n.code)) throw Error("lattice node " + n.name + " is not PSL3(4)-invariant");
    size_t N = lat.nodes.size();
    for (size_t i = 0; i < N; ++i)
        for (size_t j = i + 1; j < N; ++j)
            if (lat.nodes[i].code.same_words(lat.nodes[j].code))
                throw Error("lattice nodes " + lat.nodes[i].name + " and " + lat.nodes[j].name + " coincide");
    auto index_of = [&](const Code& c) -> int {
        for (size_t i = 0; i < N; ++i)
            if (lat.nodes[i].code.same_words(c)) return static_cast<int>(i);
        return -1;
    };
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) {
            const auto& a = lat.nodes[i].code;
            const auto& b = lat.nodes[j].code;
            if (index_of(code_sum(a, b)) < 0)
                throw Error("sum of " + lat.nodes[i].name + " and " + lat.nodes[j].name + " not in the lattice");
            if (index_of(code_intersection(a, b)) < 0)
                throw Error("intersection of " + lat.nodes[i].name + " and " + lat.nodes[j].name +
                            " not in the lattice");
        }
    // duals map the lattice to itself
    for (size_t i = 0; i < N; ++i)
        if (index_of(dual(lat.nodes[i].code)) < 0) throw Error("dual of " + lat.nodes[i].name + " not in the lattice");
    auto dual_is = [&](const std::string& a, const std::string& b) {
        if (!dual(lat.nodes[lat.find(a)].code).same_words(lat.nodes[lat.find(b)].code))
            throw Error("dual of " + a + " is not " + b);
    };
    dual_is("L", "<P,D1,D2,D3>");
    for (int i = 0; i < 3; ++i) {
        std::string k = std::to_string(i + 1);
        dual_is("<P,F" + k + ">", "<P,D" + k + ",F" + std::to_string((i + 1) % 3 + 1) + ",F" +
                                     std::to_string((i + 2) % 3 + 1) + ">");
        dual_is("<P,D" + k + ">", "<L,D" + k + ">");
    }
    dual_is("P", "P^perp");
    dual_is("<1>", "<1>^perp");
    dual_is("0", "V");
    std::vector<std::vector<char>> below(N, std::vector<char>(N, 0));
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j)
            below[i][j] = i != j && is_subcode(lat.nodes[i].code, lat.nodes[j].code);
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) {
            if (!below[i][j]) continue;
            bool cover = true;
            for (size_t k = 0; k < N && cover; ++k)
                if (below[i][k] && below[k][j]) cover = false;
            if (cover)
                lat.edges.push_back({static_cast<int>(i), static_cast<int>(j),
                                     lat.nodes[j].dim() - lat.nodes[i].dim()});
        }
    return lat;
}

const Geometry& geometry() {
    static const Geometry g = [] {
        Geometry r;
        r.plane = build_pg24();
        r.psl = psl34_generators(r.plane);
        r.psigmal = psigmal34_generators(r.plane);
        r.pgammal = pgammal34_generators(r.plane);
        r.orbits = classify_oval_orbits(r.plane, r.psl);
        r.reps = standard_representatives(r.plane, r.orbits);
        r.P = code_P(r.plane);
        r.L = code_L(r.plane);
        r.Pperp = dual(r.P).set_name("P^perp");
        return r;
    }();
    return g;
}

}  // namespace ctc::pg24
