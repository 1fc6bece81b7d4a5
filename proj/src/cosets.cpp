#include "ctc/cosets.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "ctc/hamming.hpp"

namespace ctc {

namespace {

std::vector<uint32_t> column_syndromes(const Code& c, int limit) {
    if (!c.is_linear()) throw Error("coset graph of a non-linear code");
    int r = c.length() - c.dimension();
    if (r > limit) throw Error("codimension " + std::to_string(r) + " exceeds " + std::to_string(limit));
    Code h = dual(c);
    std::vector<uint32_t> col(c.length(), 0);
    const auto& rows = h.basis();
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
        for (int j : rows[i].support()) col[j] |= uint32_t{1} << i;
    return col;
}

bool support_less(const Word& a, const Word& b) {
    auto x = a.support(), y = b.support();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

}  // namespace

QuotientGraph coset_graph(const Code& c) {
    auto col = column_syndromes(c, 16);
    QuotientGraph g;
    g.source = c.name();
    g.m = c.length();
    g.codim = c.length() - c.dimension();
    g.vertices = uint32_t{1} << g.codim;
    for (auto s : col)
        if (s && std::find(g.connection.begin(), g.connection.end(), s) == g.connection.end())
            g.connection.push_back(s);
    std::sort(g.connection.begin(), g.connection.end());

    // layer by layer; the least leader of s extends the least leader of s ^ col[j]
    std::vector<int> wt(g.vertices, -1);
    g.leaders.assign(g.vertices, Word(g.m));
    wt[0] = 0;
    std::vector<uint32_t> layer{0};
    for (int w = 1; !layer.empty(); ++w) {
        std::vector<uint32_t> next;
        for (auto u : layer)
            for (int j = 0; j < g.m; ++j) {
                uint32_t s = u ^ col[j];
                if (g.leaders[u].test(j)) continue;
                if (wt[s] != -1 && wt[s] < w) continue;
                Word cand = g.leaders[u];
                cand.set(j);
                if (wt[s] == -1) {
                    wt[s] = w;
                    g.leaders[s] = cand;
                    next.push_back(s);
                } else if (support_less(cand, g.leaders[s])) {
                    g.leaders[s] = cand;
                }
            }
        layer = std::move(next);
    }
    for (uint32_t s = 0; s < g.vertices; ++s)
        if (wt[s] < 0) throw Error("coset graph is disconnected");
    return g;
}

uint32_t syndrome(const QuotientGraph& g, const Code& c, const Word& w) {
    if (w.length() != g.m) throw Error("syndrome: word length differs from code length");
    auto col = column_syndromes(c, 32);
    uint32_t s = 0;
    for (int j : w.support()) s ^= col[j];
    return s;
}

std::string IntersectionArray::text() const {
    std::ostringstream o;
    o << "{";
    for (size_t i = 0; i < b.size(); ++i) o << (i ? "," : "") << b[i];
    o << ";";
    for (size_t i = 0; i < c.size(); ++i) o << (i ? "," : "") << c[i];
    o << "}";
    return o.str();
}

IntersectionArray is_distance_regular(const QuotientGraph& g) {
    IntersectionArray a;
    const uint32_t n = g.vertices;
    std::vector<int> dist(n);
    std::vector<uint32_t> queue(n);
    bool first = true;
    for (uint32_t src = 0; src < n; ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[src] = 0;
        size_t head = 0, tail = 0;
        queue[tail++] = src;
        while (head < tail) {
            uint32_t u = queue[head++];
            for (auto x : g.connection) {
                uint32_t v = u ^ x;
                if (dist[v] < 0) dist[v] = dist[u] + 1, queue[tail++] = v;
            }
        }
        if (tail != n) {
            a.distance_regular = false;
            a.witness_source = src;
            return a;
        }
        int diam = dist[queue[n - 1]];
        if (first) {
            a.diameter = diam;
            a.b.assign(diam, 0);
            a.c.assign(diam, 0);
        } else if (diam != a.diameter) {
            a.distance_regular = false;
            a.witness_source = src;
            a.witness_vertex = queue[n - 1];
            a.witness_level = diam;
            return a;
        }
        std::vector<char> seen(diam + 1, first ? 0 : 1);
        for (uint32_t v = 0; v < n; ++v) {
            int i = dist[v];
            uint64_t up = 0, down = 0;
            for (auto x : g.connection) {
                int d = dist[v ^ x];
                if (d == i + 1) ++up;
                else if (d == i - 1) ++down;
            }
            bool ok = true;
            if (!seen[i]) {
                if (i < diam) a.b[i] = up;
                if (i > 0) a.c[i - 1] = down;
                seen[i] = 1;
            } else {
                if (i < diam && a.b[i] != up) ok = false;
                if (i > 0 && a.c[i - 1] != down) ok = false;
            }
            if (!ok) {
                a.distance_regular = false;
                a.witness_source = src;
                a.witness_vertex = v;
                a.witness_level = i;
                return a;
            }
        }
        first = false;
    }
    a.distance_regular = true;
    return a;
}

Feasibility array_feasibility(const IntersectionArray& a, uint64_t n) {
    Feasibility f;
    f.k.push_back(1);
    f.total = 1;
    f.ok = a.b.size() == a.c.size();
    for (size_t i = 0; f.ok && i < a.c.size(); ++i) {
        BigInt num = f.k.back() * a.b[i];
        if (a.c[i] == 0 || num % a.c[i] != 0) {
            f.ok = false;
            break;
        }
        f.k.push_back(num / a.c[i]);
        if (f.k.back() <= 0) f.ok = false;
        f.total += f.k.back();
    }
    f.ok = f.ok && f.total == n;
    return f;
}

int covering_radius_linear(const Code& c) {
    auto col = column_syndromes(c, 28);
    int r = c.length() - c.dimension();
    std::vector<uint8_t> dist(size_t{1} << r, 0xFF);
    std::vector<uint32_t> layer{0};
    dist[0] = 0;
    int rho = 0;
    while (!layer.empty()) {
        std::vector<uint32_t> next;
        for (auto u : layer)
            for (auto x : col) {
                uint32_t v = u ^ x;
                if (dist[v] == 0xFF) dist[v] = static_cast<uint8_t>(dist[u] + 1), next.push_back(v);
            }
        if (!next.empty()) ++rho;
        layer = std::move(next);
    }
    if (std::count(dist.begin(), dist.end(), 0xFF)) throw Error("covering radius: columns do not span");
    return rho;
}

DoubleCheck bipartite_double_check(const Code& odd, const Code& even) {
    DoubleCheck r;
    if (!odd.is_linear() || !even.is_linear() || odd.length() != even.length()) {
        r.reason = "both codes must be linear of the same length";
        return r;
    }
    if (!is_subcode(even, odd) || even.dimension() + 1 != odd.dimension()) {
        r.reason = "even is not an index-2 subcode of odd";
        return r;
    }
    bool has_odd = false;
    for (const auto& w : odd.basis())
        if (w.weight() % 2) has_odd = true;
    for (const auto& w : even.basis())
        if (w.weight() % 2) {
            r.reason = "even contains an odd-weight word";
            return r;
        }
    if (!has_odd) {
        r.reason = "odd has no odd-weight word";
        return r;
    }
    auto ge = coset_graph(even), go = coset_graph(odd);
    if (ge.vertices != 2 * go.vertices) {
        r.reason = "vertex count is not doubled";
        return r;
    }
    // the map coset -> (parent coset, parity) through leaders
    std::vector<uint32_t> image(ge.vertices);
    std::vector<char> hit(ge.vertices, 0);
    for (uint32_t s = 0; s < ge.vertices; ++s) {
        const Word& w = ge.leaders[s];
        uint32_t p = syndrome(go, odd, w);
        image[s] = 2 * p + (w.weight() & 1);
        if (hit[image[s]]) {
            r.reason = "two cosets of even map to the same vertex of the double";
            return r;
        }
        hit[image[s]] = 1;
    }
    std::vector<char> padj(go.vertices, 0);
    for (auto x : go.connection) padj[x] = 1;
    for (uint32_t s = 0; s < ge.vertices; ++s)
        for (auto x : ge.connection) {
            uint32_t a = image[s], b = image[s ^ x];
            if ((a & 1) == (b & 1) || !padj[(a >> 1) ^ (b >> 1)]) {
                r.reason = "edge not mapped to an edge of the double";
                return r;
            }
        }
    if (ge.connection.size() != go.connection.size()) {
        r.reason = "degrees differ";
        return r;
    }
    r.ok = true;
    r.reason = "bijection onto the bipartite double, edges preserved, equal degree";
    return r;
}

SizeObstruction size_obstruction(const Code& c) {
    SizeObstruction s;
    s.size = c.size();
    BigInt x = s.size;
    while (x > 1 && x % 2 == 0) x /= 2;
    s.divides = x == 1 && s.size <= pow2(c.length());
    s.verdict = s.divides ? "quotient possible" : "no";
    return s;
}

}  // namespace ctc
