#include "ctc/permgroup.hpp"

#include <algorithm>

namespace ctc {

namespace {

bool fixes_prefix(const Perm& g, const std::vector<int>& base, int level) {
    for (int j = 0; j < level; ++j)
        if (g[base[j]] != base[j]) return false;
    return true;
}

int first_moved(const Perm& g) {
    for (int i = 0; i < g.size(); ++i)
        if (g[i] != i) return i;
    return -1;
}

}  // namespace

PermGroup::PermGroup(int n, const std::vector<Perm>& gens, const std::vector<int>& base_prefix)
    : n_(n) {
    for (int b : base_prefix) {
        if (b < 0 || b >= n) throw Error("base point out of range");
        if (std::find(base_.begin(), base_.end(), b) == base_.end()) base_.push_back(b);
    }
    for (const auto& g : gens) {
        if (g.size() != n) throw Error("generator degree mismatch");
        if (g.is_identity()) continue;
        strong_.push_back(g);
        if (fixes_prefix(g, base_, static_cast<int>(base_.size()))) base_.push_back(first_moved(g));
    }
    levels_.resize(base_.size());
    for (size_t i = 0; i < base_.size(); ++i) rebuild_level(static_cast<int>(i));

    int i = static_cast<int>(base_.size()) - 1;
    while (i >= 0) {
        bool added = false;
        Level& L = levels_[i];
        for (size_t oi = 0; !added && oi < L.orbit.size(); ++oi) {
            int p = L.orbit[oi];
            const Perm& up = L.reps[L.rep[p]];
            for (size_t gi = 0; !added && gi < L.gens.size(); ++gi) {
                const Perm& s = strong_[L.gens[gi]];
                int q = s[p];
                Perm h = up.then(s).then(L.reps[L.rep[q]].inverse());
                if (h.is_identity()) continue;
                auto [r, j] = sift(h, i + 1);
                if (r.is_identity()) continue;
                strong_.push_back(r);
                if (j == static_cast<int>(base_.size())) {
                    base_.push_back(first_moved(r));
                    levels_.emplace_back();
                }
                for (int l = i + 1; l <= j; ++l) rebuild_level(l);
                i = j;
                added = true;
            }
        }
        if (!added) --i;
    }
}

void PermGroup::rebuild_level(int i) {
    Level& L = levels_[i];
    L.gens.clear();
    for (size_t k = 0; k < strong_.size(); ++k)
        if (fixes_prefix(strong_[k], base_, i)) L.gens.push_back(static_cast<int>(k));
    L.orbit.assign(1, base_[i]);
    L.rep.assign(n_, -1);
    L.reps.assign(1, Perm(n_));
    L.rep[base_[i]] = 0;
    for (size_t oi = 0; oi < L.orbit.size(); ++oi) {
        int p = L.orbit[oi];
        for (int gk : L.gens) {
            const Perm& s = strong_[gk];
            int q = s[p];
            if (L.rep[q] >= 0) continue;
            L.rep[q] = static_cast<int>(L.reps.size());
            L.reps.push_back(L.reps[L.rep[p]].then(s));
            L.orbit.push_back(q);
        }
    }
}

std::pair<Perm, int> PermGroup::sift(Perm h, int from) const {
    for (int l = from; l < static_cast<int>(base_.size()); ++l) {
        int b = h[base_[l]];
        int r = levels_[l].rep[b];
        if (r < 0) return {h, l};
        h = h.then(levels_[l].reps[r].inverse());
    }
    return {h, static_cast<int>(base_.size())};
}

BigInt PermGroup::order() const {
    BigInt o = 1;
    for (const auto& L : levels_) o *= L.orbit.size();
    return o;
}

bool PermGroup::contains(const Perm& g) const {
    if (g.size() != n_) return false;
    return sift(g, 0).first.is_identity();
}

std::vector<Perm> PermGroup::stabilizer_generators(int level) const {
    std::vector<Perm> out;
    for (const auto& s : strong_)
        if (fixes_prefix(s, base_, level)) out.push_back(s);
    return out;
}

std::vector<int> PermGroup::basic_orbit(int level) const { return levels_.at(level).orbit; }

Perm PermGroup::transversal(int level, int point) const {
    const auto& L = levels_.at(level);
    if (L.rep[point] < 0) throw Error("point not in the basic orbit");
    return L.reps[L.rep[point]];
}

std::vector<Perm> reduce_generators(int n, const std::vector<Perm>& gens) {
    BigInt target = PermGroup(n, gens).order();
    std::vector<Perm> out;
    BigInt cur = 1;
    for (const auto& g : gens) {
        if (cur == target) break;
        if (g.is_identity()) continue;
        if (!out.empty() && PermGroup(n, out).contains(g)) continue;
        out.push_back(g);
        cur = PermGroup(n, out).order();
    }
    return out;
}

}  // namespace ctc
