#include "ctc/orbits.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

namespace ctc {

namespace {

struct UnionFind {
    std::vector<uint32_t> parent;
    std::vector<uint32_t> size;
    explicit UnionFind(uint64_t n) : parent(n), size(n, 1) {
        for (uint64_t i = 0; i < n; ++i) parent[i] = static_cast<uint32_t>(i);
    }
    uint32_t find(uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(uint32_t a, uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
    }
};

}  // namespace

OrbitLabeling full_space_orbits(const GroupGens& g) {
    int m = g.m;
    if (m > 26) throw Error("full-space orbit computation out of range (m > 26)");
    uint64_t N = uint64_t{1} << m;
    UnionFind uf(N);
    for (const auto& x : g.gens) {
        if (x.length() != m) throw Error("generator length mismatch");
        if (x.p.is_identity()) {
            uint32_t t = static_cast<uint32_t>(x.t.limb(0));
            if (t == 0) continue;
            for (uint64_t v = 0; v < N; ++v)
                if (v < (v ^ t)) uf.unite(static_cast<uint32_t>(v), static_cast<uint32_t>(v ^ t));
            continue;
        }
        FastAction f(x);
        for (uint64_t v = 0; v < N; ++v) uf.unite(static_cast<uint32_t>(v), static_cast<uint32_t>(f(v)));
    }
    OrbitLabeling out;
    out.m = m;
    out.label.assign(N, 0);
    std::vector<uint32_t> id_of_root(N, UINT32_MAX);
    for (uint64_t v = 0; v < N; ++v) {
        uint32_t r = uf.find(static_cast<uint32_t>(v));
        if (id_of_root[r] == UINT32_MAX) {
            id_of_root[r] = out.orbit_count++;
            out.orbit_sizes.push_back(0);
            out.representatives.push_back(v);
        }
        uint32_t id = id_of_root[r];
        out.label[v] = id;
        ++out.orbit_sizes[id];
    }
    return out;
}

uint64_t SubsetOrbits::min_size() const {
    return sizes.empty() ? 0 : *std::min_element(sizes.begin(), sizes.end());
}

std::vector<uint64_t> SubsetOrbits::sorted_sizes() const {
    auto s = sizes;
    std::sort(s.begin(), s.end());
    return s;
}

SubsetOrbits orbits_on_k_subsets(const GroupGens& g, int k) {
    int m = g.m;
    if (!g.pure()) throw Error("subset orbits need pure permutations");
    if (m > 64) throw Error("subset orbits need m <= 64");
    if (k < 0 || k > m) throw Error("subset size out of range");
    std::vector<std::vector<uint64_t>> C(m + 1, std::vector<uint64_t>(k + 2, 0));
    for (int n = 0; n <= m; ++n) {
        C[n][0] = 1;
        for (int j = 1; j <= std::min(n, k + 1); ++j) C[n][j] = C[n - 1][j - 1] + (j <= n - 1 ? C[n - 1][j] : 0);
    }
    uint64_t total = C[m][k];
    if (total > 10'000'000) throw Error("combinatorial range exceeded: choose(m,k) > 10^7");
    auto rank = [&](uint64_t mask) {
        uint64_t r = 0;
        int j = 1;
        while (mask) {
            int p = std::countr_zero(mask);
            r += C[p][j++];
            mask &= mask - 1;
        }
        return r;
    };
    std::vector<FastAction> acts;
    for (const auto& x : g.gens) acts.emplace_back(x);
    std::vector<char> seen(total, 0);
    SubsetOrbits out;
    out.m = m;
    out.k = k;
    std::vector<uint64_t> stack;
    uint64_t mask = k == 0 ? 0 : (k == 64 ? ~uint64_t{0} : (uint64_t{1} << k) - 1);
    for (uint64_t idx = 0; idx < total; ++idx) {
        if (!seen[idx]) {
            seen[idx] = 1;
            uint64_t size = 1;
            stack.assign(1, mask);
            while (!stack.empty()) {
                uint64_t s = stack.back();
                stack.pop_back();
                for (const auto& f : acts) {
                    uint64_t t = f(s);
                    uint64_t rt = rank(t);
                    if (!seen[rt]) {
                        seen[rt] = 1;
                        ++size;
                        stack.push_back(t);
                    }
                }
            }
            out.sizes.push_back(size);
            out.representatives.push_back(mask);
        }
        if (idx + 1 < total) {
            // next k-subset in colex order (Gosper)
            uint64_t c = mask & (~mask + 1);
            uint64_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    return out;
}

bool is_t_homogeneous(const GroupGens& g, int t) { return orbits_on_k_subsets(g, t).sizes.size() == 1; }

uint64_t tuple_orbit_size(const GroupGens& g, const std::vector<int>& tuple) {
    if (!g.pure()) throw Error("tuple orbits need pure permutations");
    int m = g.m;
    int t = static_cast<int>(tuple.size());
    uint64_t states = 1;
    for (int i = 0; i < t; ++i) {
        states *= m;
        if (states > 200'000'000) throw Error("tuple space too large");
    }
    auto enc = [&](const std::vector<int>& v) {
        uint64_t e = 0;
        for (int x : v) e = e * m + x;
        return e;
    };
    std::vector<char> seen(states, 0);
    std::vector<std::vector<int>> stack{tuple};
    seen[enc(tuple)] = 1;
    uint64_t size = 1;
    std::vector<int> img(t);
    while (!stack.empty()) {
        auto cur = std::move(stack.back());
        stack.pop_back();
        for (const auto& x : g.gens) {
            for (int i = 0; i < t; ++i) img[i] = x.p[cur[i]];
            uint64_t e = enc(img);
            if (!seen[e]) {
                seen[e] = 1;
                ++size;
                stack.push_back(img);
            }
        }
    }
    return size;
}

bool is_t_transitive(const GroupGens& g, int t) {
    if (t > g.m) return false;
    std::vector<int> tuple(t);
    uint64_t expect = 1;
    for (int i = 0; i < t; ++i) {
        tuple[i] = i;
        expect *= g.m - i;
    }
    return tuple_orbit_size(g, tuple) == expect;
}

std::optional<Perm> find_tuple_mapping(const GroupGens& g, const std::vector<int>& src,
                                       const std::vector<int>& dst) {
    if (!g.pure()) throw Error("tuple mapping needs pure permutations");
    if (src.size() != dst.size()) throw Error("tuple length mismatch");
    std::map<std::vector<int>, Perm> seen;
    std::vector<std::vector<int>> queue{src};
    seen.emplace(src, Perm(g.m));
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        auto cur = queue[qi];
        Perm via = seen.at(cur);
        if (cur == dst) return via;
        for (const auto& x : g.gens) {
            std::vector<int> img(cur.size());
            for (size_t i = 0; i < cur.size(); ++i) img[i] = x.p[cur[i]];
            if (seen.count(img)) continue;
            seen.emplace(img, via.then(x.p));
            queue.push_back(img);
        }
    }
    return std::nullopt;
}

std::vector<int> point_orbit(const GroupGens& g, int point) {
    std::vector<char> seen(g.m, 0);
    std::vector<int> orb{point};
    seen[point] = 1;
    for (size_t i = 0; i < orb.size(); ++i)
        for (const auto& x : g.gens) {
            int q = x.p[orb[i]];
            if (!seen[q]) {
                seen[q] = 1;
                orb.push_back(q);
            }
        }
    std::sort(orb.begin(), orb.end());
    return orb;
}

}  // namespace ctc
