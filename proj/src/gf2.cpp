#include "ctc/gf2.hpp"

#include <algorithm>
#include <numeric>

#include "ctc/bigint.hpp"

namespace ctc {

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt pow2(int e) {
    BigInt r = 1;
    r <<= e;
    return r;
}

bool Gf2Basis::insert(const Word& w) {
    if (w.length() != m_) throw Error("basis insert: length mismatch");
    Word r = reduce(w);
    if (r.is_zero()) return false;
    int p = r.support().front();
    for (auto& row : rows_)
        if (row.test(p)) row ^= r;
    rows_.push_back(r);
    pivot_.push_back(p);
    return true;
}

Word Gf2Basis::reduce(Word w) const {
    for (size_t i = 0; i < rows_.size(); ++i)
        if (w.test(pivot_[i])) w ^= rows_[i];
    return w;
}

std::vector<Word> Gf2Basis::rows() const {
    std::vector<size_t> idx(rows_.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return pivot_[a] < pivot_[b]; });
    std::vector<Word> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(rows_[i]);
    return out;
}

std::vector<int> Gf2Basis::pivots() const {
    auto p = pivot_;
    std::sort(p.begin(), p.end());
    return p;
}

std::vector<Word> orthogonal_complement(int m, const std::vector<Word>& rows) {
    Gf2Basis b(m);
    for (const auto& r : rows) b.insert(r);
    auto rr = b.rows();
    auto piv = b.pivots();
    std::vector<char> is_pivot(m, 0);
    for (int p : piv) is_pivot[p] = 1;
    // For each free coordinate f: e_f + sum of e_{pivot(r)} over rows r with bit f.
    std::vector<Word> out;
    for (int f = 0; f < m; ++f) {
        if (is_pivot[f]) continue;
        Word v(m);
        v.set(f);
        for (size_t i = 0; i < rr.size(); ++i)
            if (rr[i].test(f)) v.set(piv[i]);
        out.push_back(v);
    }
    return out;
}

}  // namespace ctc
