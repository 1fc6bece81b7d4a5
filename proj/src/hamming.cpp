#include "ctc/hamming.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <unordered_set>

namespace ctc {

namespace {

void check_coord(const Code& c, int i) {
    if (i < 0 || i >= c.length())
        throw Error("coordinate " + std::to_string(i) + " invalid for length " +
                    std::to_string(c.length()));
}

using Limbs = std::array<uint64_t, Word::kLimbs>;

// Gray-code sweep over span(rows); f receives (limbs, weight).
template <class F>
void gray_sweep(const std::vector<Word>& rows, F&& f) {
    int k = static_cast<int>(rows.size());
    if (k > 40) throw Error("enumeration of 2^" + std::to_string(k) + " words refused");
    std::vector<Limbs> b;
    for (const auto& r : rows) b.push_back(r.limbs());
    Limbs cur{};
    f(cur);
    uint64_t n = uint64_t{1} << k;
    for (uint64_t i = 1; i < n; ++i) {
        const Limbs& d = b[std::countr_zero(i)];
        cur[0] ^= d[0];
        cur[1] ^= d[1];
        cur[2] ^= d[2];
        cur[3] ^= d[3];
        f(cur);
    }
}

std::vector<BigInt> enumerate_weights(int m, const std::vector<Word>& rows) {
    std::vector<uint64_t> cnt(m + 1, 0);
    if (m <= 64) {
        std::vector<uint64_t> b;
        for (const auto& r : rows) b.push_back(r.limb(0));
        uint64_t cur = 0;
        cnt[0] = 1;
        uint64_t n = uint64_t{1} << b.size();
        for (uint64_t i = 1; i < n; ++i) {
            cur ^= b[std::countr_zero(i)];
            ++cnt[std::popcount(cur)];
        }
    } else {
        gray_sweep(rows, [&](const Limbs& l) {
            ++cnt[std::popcount(l[0]) + std::popcount(l[1]) + std::popcount(l[2]) +
                  std::popcount(l[3])];
        });
    }
    std::vector<BigInt> out(cnt.begin(), cnt.end());
    return out;
}

std::vector<std::vector<BigInt>> krawtchouk_table(int m) {
    std::vector<std::vector<BigInt>> bin(m + 1, std::vector<BigInt>(m + 1, 0));
    for (int n = 0; n <= m; ++n) {
        bin[n][0] = 1;
        for (int k = 1; k <= n; ++k) bin[n][k] = bin[n - 1][k - 1] + (k <= n - 1 ? bin[n - 1][k] : 0);
    }
    std::vector<std::vector<BigInt>> K(m + 1, std::vector<BigInt>(m + 1, 0));
    for (int k = 0; k <= m; ++k)
        for (int x = 0; x <= m; ++x) {
            BigInt s = 0;
            for (int j = 0; j <= std::min(k, x); ++j) {
                if (k - j > m - x) continue;
                BigInt t = bin[x][j] * bin[m - x][k - j];
                if (j & 1)
                    s -= t;
                else
                    s += t;
            }
            K[k][x] = s;
        }
    return K;
}

}  // namespace

Code dual(const Code& c) {
    if (!c.is_linear()) throw Error("dual of a non-linear code");
    return Code::linear(c.length(), orthogonal_complement(c.length(), c.basis()));
}

Code span(const Code& c) {
    if (c.is_linear()) return c;
    return Code::linear(c.length(), c.explicit_words());
}

Code puncture(const Code& c, int i) {
    check_coord(c, i);
    if (c.length() < 2) throw Error("cannot puncture a length-1 code");
    std::vector<Word> out;
    if (c.is_linear()) {
        for (const auto& b : c.basis()) out.push_back(b.erased(i));
        return Code::linear(c.length() - 1, out);
    }
    for (const auto& w : c.explicit_words()) out.push_back(w.erased(i));
    return Code::from_words(c.length() - 1, std::move(out));
}

Code shorten(const Code& c, int i) {
    check_coord(c, i);
    if (c.length() < 2) throw Error("cannot shorten a length-1 code");
    std::vector<Word> out;
    if (c.is_linear()) {
        std::vector<Word> rows = c.basis();
        auto it = std::find_if(rows.begin(), rows.end(), [&](const Word& w) { return w.test(i); });
        if (it != rows.end()) {
            Word p = *it;
            rows.erase(it);
            for (auto& r : rows)
                if (r.test(i)) r ^= p;
        }
        for (const auto& r : rows) out.push_back(r.erased(i));
        return Code::linear(c.length() - 1, out);
    }
    for (const auto& w : c.explicit_words())
        if (!w.test(i)) out.push_back(w.erased(i));
    if (out.empty()) throw Error("shorten: no codeword has coordinate " + std::to_string(i) + " clear");
    return Code::from_words(c.length() - 1, std::move(out));
}

Code extend_parity(const Code& c) {
    std::vector<Word> out;
    if (c.is_linear()) {
        for (const auto& b : c.basis()) out.push_back(b.appended(b.weight() & 1));
        return Code::linear(c.length() + 1, out);
    }
    for (const auto& w : c.explicit_words()) out.push_back(w.appended(w.weight() & 1));
    return Code::from_words(c.length() + 1, std::move(out));
}

Code even_subcode(const Code& c) {
    std::vector<Word> out;
    if (c.is_linear()) {
        const Word* odd = nullptr;
        for (const auto& b : c.basis()) {
            if (!(b.weight() & 1)) {
                out.push_back(b);
            } else if (!odd) {
                odd = &b;
            } else {
                out.push_back(b ^ *odd);
            }
        }
        return Code::linear(c.length(), out);
    }
    for (const auto& w : c.explicit_words())
        if (!(w.weight() & 1)) out.push_back(w);
    return Code::from_words(c.length(), std::move(out));
}

Code union_of(const std::vector<Code>& parts, std::string name) {
    if (parts.empty()) throw Error("union of no codes");
    int m = parts.front().length();
    std::vector<Word> all;
    for (const auto& p : parts) {
        if (p.length() != m) throw Error("union: length mismatch");
        auto w = p.words();
        all.insert(all.end(), w.begin(), w.end());
    }
    return Code::from_words(m, std::move(all), std::move(name));
}

Code union_of_cosets(const Code& base, const std::vector<Word>& reps, std::string name) {
    auto w = base.words();
    std::vector<Word> all;
    all.reserve(w.size() * reps.size());
    for (const auto& r : reps)
        for (const auto& x : w) all.push_back(x ^ r);
    return Code::from_words(base.length(), std::move(all), std::move(name));
}

std::vector<BigInt> weight_distribution(const Code& c) {
    int m = c.length();
    if (!c.is_linear()) {
        std::vector<BigInt> out(m + 1, 0);
        for (const auto& w : c.explicit_words()) out[w.weight()] += 1;
        return out;
    }
    int k = c.dimension();
    int r = m - k;
    if (k <= r || r > 32) {
        if (k > 36) throw Error("weight distribution out of range (dim and codim both large)");
        return enumerate_weights(m, c.basis());
    }
    return macwilliams(m, enumerate_weights(m, orthogonal_complement(m, c.basis())));
}

BigInt krawtchouk(int m, int k, int x) {
    BigInt s = 0;
    for (int j = 0; j <= std::min(k, x); ++j) {
        if (k - j > m - x) continue;
        BigInt t = binomial(x, j) * binomial(m - x, k - j);
        if (j & 1)
            s -= t;
        else
            s += t;
    }
    return s;
}

std::vector<BigInt> macwilliams(int m, const std::vector<BigInt>& weights) {
    if (static_cast<int>(weights.size()) != m + 1) throw Error("macwilliams: bad weight vector");
    BigInt size = 0;
    for (const auto& w : weights) size += w;
    auto K = krawtchouk_table(m);
    std::vector<BigInt> out(m + 1);
    for (int k = 0; k <= m; ++k) {
        BigInt s = 0;
        for (int x = 0; x <= m; ++x)
            if (weights[x] != 0) s += weights[x] * K[k][x];
        if (s % size != 0) throw Error("macwilliams: non-integral dual weight count");
        out[k] = s / size;
    }
    return out;
}

int min_distance(const Code& c) {
    if (c.size() < 2) throw Error("minimum distance undefined for fewer than 2 codewords");
    if (c.is_linear()) {
        auto wd = weight_distribution(c);
        for (int k = 1; k <= c.length(); ++k)
            if (wd[k] != 0) return k;
        throw Error("min_distance: no nonzero word");
    }
    const auto& w = c.explicit_words();
    int best = c.length() + 1;
    if (c.length() <= 64) {
        std::vector<uint64_t> v;
        for (const auto& x : w) v.push_back(x.limb(0));
        for (size_t i = 0; i < v.size(); ++i)
            for (size_t j = i + 1; j < v.size(); ++j) best = std::min(best, std::popcount(v[i] ^ v[j]));
    } else {
        for (size_t i = 0; i < w.size(); ++i)
            for (size_t j = i + 1; j < w.size(); ++j) best = std::min(best, distance(w[i], w[j]));
    }
    return best;
}

InnerDistribution inner_distribution(const Code& c) {
    InnerDistribution out;
    out.m = c.length();
    out.code_size = c.size();
    if (c.size() == 0) throw Error("inner distribution of the empty code");
    if (c.is_linear()) {
        for (const auto& w : weight_distribution(c)) out.A.emplace_back(w);
        return out;
    }
    const auto& w = c.explicit_words();
    if (w.size() > (size_t{1} << 16)) throw Error("pair scan refused above 2^16 words");
    std::vector<uint64_t> cnt(c.length() + 1, 0);
    cnt[0] = w.size();
    if (c.length() <= 64) {
        std::vector<uint64_t> v;
        for (const auto& x : w) v.push_back(x.limb(0));
        for (size_t i = 0; i < v.size(); ++i)
            for (size_t j = i + 1; j < v.size(); ++j) cnt[std::popcount(v[i] ^ v[j])] += 2;
    } else {
        for (size_t i = 0; i < w.size(); ++i)
            for (size_t j = i + 1; j < w.size(); ++j) cnt[distance(w[i], w[j])] += 2;
    }
    for (auto n : cnt) out.A.emplace_back(BigInt(n), BigInt(w.size()));
    return out;
}

DualDistribution dual_distribution(const InnerDistribution& a, const BigInt& code_size) {
    if (code_size <= 0) throw Error("dual distribution needs a positive code size");
    DualDistribution out;
    out.m = a.m;
    auto K = krawtchouk_table(a.m);
    for (int k = 0; k <= a.m; ++k) {
        Rational s = 0;
        for (int x = 0; x <= a.m; ++x)
            if (a.A[x] != 0) s += a.A[x] * Rational(K[k][x]);
        s /= Rational(code_size);
        if (s < 0) throw Error("not a valid distance distribution (B_" + std::to_string(k) + " < 0)");
        out.B.push_back(s);
        if (k >= 1 && s != 0) ++out.s;
    }
    return out;
}

int external_distance(const Code& c) { return dual_distribution(inner_distribution(c)).s; }

KernelDecomposition maximal_linear_subcode(const Code& c) {
    if (!c.contains(Word(c.length()))) throw Error("maximal linear subcode needs the zero word in C");
    if (c.is_linear()) return {c, {Word(c.length())}};
    const auto& w = c.explicit_words();
    Gf2Basis kb(c.length());
    for (const auto& t : w) {
        if (t.is_zero() || kb.contains(t)) continue;
        bool ok = true;
        for (const auto& x : w)
            if (!std::binary_search(w.begin(), w.end(), x ^ t)) {
                ok = false;
                break;
            }
        if (ok) kb.insert(t);
    }
    KernelDecomposition out{Code::linear(c.length(), kb.rows()), {}};
    for (const auto& x : w) out.coset_reps.push_back(kb.reduce(x));
    std::sort(out.coset_reps.begin(), out.coset_reps.end());
    out.coset_reps.erase(std::unique(out.coset_reps.begin(), out.coset_reps.end()), out.coset_reps.end());
    return out;
}

namespace {

constexpr std::array<uint64_t, 6> kSwapMask = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
    0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull};

// new |= (frontier xor-shifted by e_i), for every i < m
void expand(int m, const std::vector<uint64_t>& f, std::vector<uint64_t>& out) {
    size_t n = f.size();
    for (int i = 0; i < m; ++i) {
        if (i < 6) {
            int s = 1 << i;
            uint64_t M = kSwapMask[i];
            for (size_t j = 0; j < n; ++j) {
                uint64_t x = f[j];
                out[j] |= ((x & M) << s) | ((x >> s) & M);
            }
        } else {
            size_t d = size_t{1} << (i - 6);
            for (size_t j = 0; j < n; ++j) out[j] |= f[j ^ d];
        }
    }
}

}  // namespace

DistancePartition distance_partition(const Code& c) {
    int m = c.length();
    if (m > kFullSpaceLimit) throw Error("full-space enumeration out of range (m > 26)");
    uint64_t N = uint64_t{1} << m;
    size_t limbs = std::max<uint64_t>(1, N / 64);
    DistancePartition dp;
    dp.m = m;
    dp.dist.assign(N, 0xFF);
    std::vector<uint64_t> visited(limbs, 0), frontier(limbs, 0), next(limbs, 0);
    uint64_t c0 = 0;
    auto set_word = [&](uint64_t v) {
        if (dp.dist[v] != 0) {
            dp.dist[v] = 0;
            visited[v >> 6] |= uint64_t{1} << (v & 63);
            ++c0;
        }
    };
    if (c.is_linear()) {
        std::vector<uint64_t> b;
        for (const auto& w : c.basis()) b.push_back(w.limb(0));
        uint64_t cur = 0;
        set_word(0);
        for (uint64_t i = 1; i < (uint64_t{1} << b.size()); ++i) {
            cur ^= b[std::countr_zero(i)];
            set_word(cur);
        }
    } else {
        for (const auto& w : c.explicit_words()) set_word(w.limb(0));
    }
    if (c0 == 0) throw Error("distance partition of the empty code");
    dp.cell_sizes.push_back(c0);
    frontier = visited;
    for (int d = 1;; ++d) {
        std::fill(next.begin(), next.end(), 0);
        expand(m, frontier, next);
        uint64_t cnt = 0;
        uint64_t tail = N < 64 ? (uint64_t{1} << N) - 1 : ~uint64_t{0};
        for (size_t j = 0; j < limbs; ++j) {
            next[j] &= ~visited[j] & tail;
            uint64_t x = next[j];
            if (!x) continue;
            visited[j] |= x;
            cnt += std::popcount(x);
            while (x) {
                dp.dist[j * 64 + std::countr_zero(x)] = static_cast<uint8_t>(d);
                x &= x - 1;
            }
        }
        if (cnt == 0) break;
        dp.cell_sizes.push_back(cnt);
        frontier.swap(next);
    }
    dp.rho = static_cast<int>(dp.cell_sizes.size()) - 1;
    return dp;
}

namespace {

void walsh_hadamard(std::vector<int64_t>& a) {
    size_t n = a.size();
    for (size_t h = 1; h < n; h <<= 1)
        for (size_t i = 0; i < n; i += h << 1)
            for (size_t j = i; j < i + h; ++j) {
                int64_t x = a[j], y = a[j + h];
                a[j] = x + y;
                a[j + h] = x - y;
            }
}

RegularityReport regularity_linear(const Code& c, int s, const DistancePartition& dp) {
    int m = c.length();
    auto h = orthogonal_complement(m, c.basis());
    int r = static_cast<int>(h.size());
    std::vector<uint32_t> col(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < r; ++j)
            if (h[j].test(i)) col[i] |= uint32_t{1} << j;
    size_t cosets = size_t{1} << r;
    std::vector<uint32_t> cnt(cosets * (m + 1), 0);
    std::vector<uint64_t> first(cosets, UINT64_MAX);
    uint64_t N = uint64_t{1} << m;
    uint32_t syn = 0;
    int wt = 0;
    uint64_t v = 0;
    ++cnt[0];
    first[0] = 0;
    for (uint64_t n = 1; n < N; ++n) {
        int i = std::countr_zero(n);
        v ^= uint64_t{1} << i;
        syn ^= col[i];
        wt += ((v >> i) & 1) ? 1 : -1;
        ++cnt[size_t(syn) * (m + 1) + wt];
        if (v < first[syn]) first[syn] = v;
    }
    RegularityReport rep;
    rep.s = s;
    rep.profiles.assign(s + 1, {});
    std::vector<uint64_t> ref_vertex(s + 1, UINT64_MAX);
    // visit cosets in order of their least member for deterministic witnesses
    std::vector<size_t> order(cosets);
    for (size_t i = 0; i < cosets; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return first[a] < first[b]; });
    for (size_t sy : order) {
        uint64_t u = first[sy];
        int cell = dp.dist[u];
        if (cell > s) continue;
        // the coset weight distribution is the profile of every vertex in it
        std::vector<uint64_t> prof(m + 1);
        for (int k = 0; k <= m; ++k) prof[k] = cnt[sy * (m + 1) + k];
        if (ref_vertex[cell] == UINT64_MAX) {
            ref_vertex[cell] = u;
            rep.profiles[cell] = prof;
        } else if (prof != rep.profiles[cell] && rep.regular) {
            rep.regular = false;
            rep.failing_cell = cell;
            rep.witness_a = ref_vertex[cell];
            rep.witness_b = u;
        }
    }
    return rep;
}

RegularityReport regularity_wht(const Code& c, int s, const DistancePartition& dp) {
    int m = c.length();
    if (m > 22) throw Error("regularity check for non-linear codes limited to m <= 22");
    uint64_t N = uint64_t{1} << m;
    std::vector<int64_t> F(N, 0);
    for (const auto& w : c.explicit_words()) F[w.limb(0)] = 1;
    walsh_hadamard(F);
    std::vector<int64_t> kraw(m + 1);
    RegularityReport rep;
    rep.s = s;
    rep.profiles.assign(s + 1, std::vector<uint64_t>(m + 1, 0));
    std::vector<uint64_t> ref(s + 1, UINT64_MAX);
    for (uint64_t v = 0; v < N; ++v) {
        int d = dp.dist[v];
        if (d <= s && ref[d] == UINT64_MAX) ref[d] = v;
    }
    uint64_t worst = UINT64_MAX;
    int worst_cell = -1;
    std::vector<int64_t> G(N);
    for (int k = 0; k <= m; ++k) {
        for (int x = 0; x <= m; ++x) kraw[x] = static_cast<int64_t>(krawtchouk(m, k, x));
        for (uint64_t u = 0; u < N; ++u) G[u] = F[u] * kraw[std::popcount(u)];
        walsh_hadamard(G);
        for (int i = 0; i <= s; ++i)
            if (ref[i] != UINT64_MAX) rep.profiles[i][k] = static_cast<uint64_t>(G[ref[i]] >> m);
        for (uint64_t v = 0; v < N && v < worst; ++v) {
            int d = dp.dist[v];
            if (d > s) continue;
            if (G[v] != G[ref[d]]) {
                worst = v;
                worst_cell = d;
                break;
            }
        }
    }
    if (worst != UINT64_MAX) {
        rep.regular = false;
        rep.failing_cell = worst_cell;
        rep.witness_a = ref[worst_cell];
        rep.witness_b = worst;
    }
    return rep;
}

}  // namespace

RegularityReport regularity_report(const Code& c, int s, const DistancePartition& dp) {
    if (dp.m != c.length()) throw Error("distance partition does not match the code");
    if (s < 0) throw Error("negative regularity index");
    s = std::min(s, dp.rho);
    if (c.is_linear() && c.length() - c.dimension() <= 20) return regularity_linear(c, s, dp);
    if (c.is_linear()) return regularity_wht(Code::from_words(c.length(), c.words()), s, dp);
    return regularity_wht(c, s, dp);
}

bool is_s_regular(const Code& c, int s, const DistancePartition& dp) {
    return regularity_report(c, s, dp).regular;
}

bool is_completely_regular(const Code& c, const DistancePartition& dp) {
    return is_s_regular(c, dp.rho, dp);
}

bool singleton_check(int m, int delta, const BigInt& size) {
    if (delta < 1 || delta > m + 1) return false;
    return size <= pow2(m - delta + 1);
}

}  // namespace ctc

namespace ctc {

Code code_sum(const Code& a, const Code& b) {
    if (!a.is_linear() || !b.is_linear()) throw Error("subspace sum needs linear codes");
    auto rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return Code::linear(a.length(), rows);
}

Code code_intersection(const Code& a, const Code& b) { return dual(code_sum(dual(a), dual(b))); }

bool is_subcode(const Code& a, const Code& b) {
    if (a.length() != b.length()) return false;
    bool ok = true;
    if (a.is_linear() && b.is_linear()) {
        for (const auto& w : a.basis()) ok = ok && b.contains(w);
        return ok;
    }
    a.for_each([&](const Word& w) { ok = ok && b.contains(w); });
    return ok;
}

}  // namespace ctc
