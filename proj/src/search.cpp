#include "ctc/search.hpp"

#include <algorithm>
#include <bit>

#include "ctc/permgroup.hpp"

namespace ctc {

namespace {

struct SetMapSearch {
    int m;
    const std::vector<uint64_t>& D;
    const std::vector<uint64_t>& E;
    const std::function<bool(const Perm&)>& visit;
    std::vector<int> colD, colE;
    std::vector<int> img;
    std::vector<char> used;
    bool stopped = false;

    bool consistent(const std::vector<uint64_t>& partial, uint64_t T) const {
        std::vector<uint64_t> a = partial, b(E.size());
        for (size_t i = 0; i < E.size(); ++i) b[i] = E[i] & T;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
    }

    void run(int depth, const std::vector<uint64_t>& partial, uint64_t T) {
        if (stopped) return;
        if (depth == m) {
            if (!visit(Perm(img))) stopped = true;
            return;
        }
        for (int j = 0; j < m && !stopped; ++j) {
            if (used[j] || colD[depth] != colE[j]) continue;
            std::vector<uint64_t> next(partial);
            for (size_t i = 0; i < D.size(); ++i)
                if ((D[i] >> depth) & 1) next[i] |= uint64_t{1} << j;
            uint64_t T2 = T | (uint64_t{1} << j);
            if (!consistent(next, T2)) continue;
            used[j] = 1;
            img[depth] = j;
            run(depth + 1, next, T2);
            used[j] = 0;
        }
    }
};

}  // namespace

void search_set_maps(int m, const std::vector<uint64_t>& D, const std::vector<uint64_t>& E,
                     const std::function<bool(const Perm&)>& visit) {
    if (m > 64) throw Error("set-map search needs m <= 64");
    if (D.size() != E.size()) return;
    SetMapSearch s{m, D, E, visit, std::vector<int>(m, 0), std::vector<int>(m, 0),
                   std::vector<int>(m, 0), std::vector<char>(m, 0)};
    for (int i = 0; i < m; ++i) {
        for (auto d : D) s.colD[i] += (d >> i) & 1;
        for (auto e : E) s.colE[i] += (e >> i) & 1;
    }
    s.run(0, std::vector<uint64_t>(D.size(), 0), 0);
}

AutomorphismGroup automorphism_group(const Code& c) {
    int m = c.length();
    if (m > 64) throw Error("automorphism search needs m <= 64");
    auto C = codeword_values(c);
    // pure part: all p with p(C) = C, keeping a generating subset
    std::vector<Perm> pure_gens;
    PermGroup generated(m, {});
    BigInt count = 0;
    search_set_maps(m, C, C, [&](const Perm& p) {
        ++count;
        if (!generated.contains(p)) {
            pure_gens.push_back(p);
            generated = PermGroup(m, pure_gens);
        }
        return true;
    });
    AutomorphismGroup out;
    out.zero_stabilizer_order = count;
    out.gens.m = m;
    for (const auto& p : pure_gens) out.gens.gens.push_back(pure(p));

    // orbit of 0: beta is reached iff some p has p(C) = C + beta
    auto orbit_from_zero = [&](std::vector<char>& mark) {
        std::fill(mark.begin(), mark.end(), 0);
        std::vector<uint64_t> q{0};
        mark[0] = 1;
        std::vector<FastAction> acts;
        for (const auto& x : out.gens.gens) acts.emplace_back(x);
        for (size_t i = 0; i < q.size(); ++i)
            for (const auto& f : acts) {
                uint64_t y = f(q[i]);
                size_t idx = std::lower_bound(C.begin(), C.end(), y) - C.begin();
                if (idx < C.size() && C[idx] == y && !mark[idx]) {
                    mark[idx] = 1;
                    q.push_back(y);
                }
            }
        return q.size();
    };
    std::vector<char> reached(C.size(), 0), excluded(C.size(), 0);
    if (C.empty() || C[0] != 0) {
        // no zero word: report the translation-free part only
        out.zero_orbit = 0;
        out.order = count;
        return out;
    }
    uint64_t orbit = orbit_from_zero(reached);
    for (size_t bi = 1; bi < C.size(); ++bi) {
        if (reached[bi] || excluded[bi]) continue;
        uint64_t beta = C[bi];
        std::vector<uint64_t> E;
        for (auto w : C) E.push_back(w ^ beta);
        std::sort(E.begin(), E.end());
        bool found = false;
        search_set_maps(m, C, E, [&](const Perm& p) {
            // x = (t, p) with p(t) = beta
            Word t = p.inverse().apply(Word::from_u64(m, beta));
            out.gens.gens.push_back({t, p});
            found = true;
            return false;
        });
        if (found) {
            orbit = orbit_from_zero(reached);
        } else {
            excluded[bi] = 1;
        }
    }
    out.zero_orbit = orbit;
    out.order = count * orbit;
    return out;
}

AutomorphismGroup automorphism_search(const Code& c) {
    if (c.length() > 12 || c.size() > 64) throw Error("automorphism search limited to m <= 12 and |C| <= 64");
    return automorphism_group(c);
}

namespace {

struct DesignSearch {
    const SteinerSystem& A;
    const SteinerSystem& B;
    size_t limit;
    std::vector<Perm> found;
    std::vector<uint64_t> sortedB;
    std::vector<std::vector<int>> blocksB_at;  // blocks of B through each point
    uint64_t full;

    int find_block(uint64_t pts) const {
        int y = std::countr_zero(pts);
        for (int bi : blocksB_at[y])
            if ((B.blocks[bi] & pts) == pts) return bi;
        return -1;
    }

    bool propagate(std::vector<uint64_t>& dom) const {
        int v = A.v;
        bool changed = true;
        while (changed) {
            changed = false;
            uint64_t taken = 0;
            for (int x = 0; x < v; ++x) {
                if (dom[x] == 0) return false;
                if (std::popcount(dom[x]) == 1) {
                    if (taken & dom[x]) return false;
                    taken |= dom[x];
                }
            }
            for (int x = 0; x < v; ++x)
                if (std::popcount(dom[x]) > 1 && (dom[x] & taken)) {
                    dom[x] &= ~taken;
                    if (!dom[x]) return false;
                    changed = true;
                }
            for (uint64_t blk : A.blocks) {
                uint64_t img = 0;
                int cnt = 0;
                uint64_t s = blk;
                while (s && cnt < A.t) {
                    int x = std::countr_zero(s);
                    s &= s - 1;
                    if (std::popcount(dom[x]) == 1) {
                        img |= dom[x];
                        ++cnt;
                    }
                }
                if (cnt < A.t) continue;
                int bi = find_block(img);
                if (bi < 0) return false;
                uint64_t tb = B.blocks[bi];
                for (int x = 0; x < v; ++x) {
                    uint64_t nd = ((blk >> x) & 1) ? (dom[x] & tb) : (dom[x] & ~tb);
                    if (nd != dom[x]) {
                        if (!nd) return false;
                        dom[x] = nd;
                        changed = true;
                    }
                }
            }
        }
        return true;
    }

    void run(std::vector<uint64_t> dom) {
        if (found.size() >= limit) return;
        if (!propagate(dom)) return;
        int v = A.v;
        int pick = -1;
        int best = 65;
        for (int x = 0; x < v; ++x) {
            int c = std::popcount(dom[x]);
            if (c > 1 && c < best) {
                best = c;
                pick = x;
            }
        }
        if (pick < 0) {
            std::vector<int> img(v);
            for (int x = 0; x < v; ++x) img[x] = std::countr_zero(dom[x]);
            Perm p(img);
            for (uint64_t blk : A.blocks) {
                uint64_t im = 0;
                for (uint64_t s = blk; s; s &= s - 1) im |= uint64_t{1} << p[std::countr_zero(s)];
                if (!std::binary_search(sortedB.begin(), sortedB.end(), im)) return;
            }
            found.push_back(p);
            return;
        }
        uint64_t choices = dom[pick];
        while (choices && found.size() < limit) {
            int y = std::countr_zero(choices);
            choices &= choices - 1;
            auto d2 = dom;
            d2[pick] = uint64_t{1} << y;
            run(std::move(d2));
        }
    }
};

}  // namespace

std::vector<Perm> design_isomorphisms(const SteinerSystem& A, const SteinerSystem& B,
                                      const std::vector<std::pair<int, int>>& forced, size_t limit) {
    if (A.v != B.v || A.t != B.t || A.blocks.size() != B.blocks.size()) return {};
    if (A.v > 64) throw Error("design search needs v <= 64");
    DesignSearch s{A, B, limit, {}, B.blocks, std::vector<std::vector<int>>(B.v), 0};
    std::sort(s.sortedB.begin(), s.sortedB.end());
    for (size_t bi = 0; bi < B.blocks.size(); ++bi)
        for (uint64_t x = B.blocks[bi]; x; x &= x - 1) s.blocksB_at[std::countr_zero(x)].push_back(static_cast<int>(bi));
    s.full = A.v == 64 ? ~uint64_t{0} : (uint64_t{1} << A.v) - 1;
    std::vector<uint64_t> dom(A.v, s.full);
    for (auto [x, y] : forced) dom.at(x) &= uint64_t{1} << y;
    s.run(dom);
    return s.found;
}

}  // namespace ctc
