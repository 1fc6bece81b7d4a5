#include "ctc/witness.hpp"

#include "ctc/hamming.hpp"
#include "ctc/pg24.hpp"

namespace ctc {

bool is_triangle_plus_collinear(const Word& w) {
    const auto& p = pg24::geometry().plane;
    if (w.length() != pg24::kPoints || w.weight() != 6) return false;
    auto s = w.support();
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int c = b + 1; c < 6; ++c) {
                if (!p.collinear(s[a], s[b], s[c])) continue;
                std::vector<int> r;
                for (int i = 0; i < 6; ++i)
                    if (i != a && i != b && i != c) r.push_back(s[i]);
                if (!p.collinear(r[0], r[1], r[2])) return true;
            }
    return false;
}

Non3NtWitness non_3nt_witness_psl34(const Code& c) {
    if (c.length() != pg24::kPoints) throw Error("non_3nt_witness: code must have length 21");
    const auto& p = pg24::geometry().plane;
    Non3NtWitness w;
    auto dp = distance_partition(c);
    w.triangles_in_c3 = w.collinear_in_c3 = true;
    for (int a = 0; a < 21; ++a)
        for (int b = a + 1; b < 21; ++b)
            for (int d = b + 1; d < 21; ++d) {
                uint64_t v = (uint64_t{1} << a) | (uint64_t{1} << b) | (uint64_t{1} << d);
                if (dp.dist[v] == 3) continue;
                bool col = p.collinear(a, b, d);
                bool& flag = col ? w.collinear_in_c3 : w.triangles_in_c3;
                if (flag && w.failed.empty()) {
                    w.counterexample = Word::from_u64(21, v);
                    w.failed = col ? "collinear triple not in C3" : "triangle not in C3";
                }
                flag = false;
            }
    w.no_mixed_word = w.all_hyperovals = true;
    c.for_each([&](const Word& x) {
        if (x.weight() != 6) return;
        ++w.weight6;
        bool mixed = is_triangle_plus_collinear(x), oval = pg24::is_hyperoval(p, x);
        if ((mixed || !oval) && w.failed.empty()) {
            w.counterexample = x;
            w.failed = mixed ? "weight-6 word is a triangle plus a collinear triple" : "weight-6 word is not a hyperoval";
        }
        if (mixed) w.no_mixed_word = false;
        if (!oval) w.all_hyperovals = false;
    });
    return w;
}

}  // namespace ctc
