#include "ctc/perm.hpp"

#include <algorithm>

namespace ctc {

Perm::Perm(int n) : img_(n) {
    for (int i = 0; i < n; ++i) img_[i] = i;
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    int n = size();
    std::vector<char> seen(n, 0);
    for (int x : img_) {
        if (x < 0 || x >= n || seen[x]) throw Error("image list is not a permutation");
        seen[x] = 1;
    }
}

Perm Perm::then(const Perm& q) const {
    if (q.size() != size()) throw Error("composing permutations of different degree");
    Perm r;
    r.img_.resize(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) r.img_[i] = q.img_[img_[i]];
    return r;
}

Perm Perm::inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<int>(i);
    return r;
}

bool Perm::is_identity() const {
    for (size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != static_cast<int>(i)) return false;
    return true;
}

Word Perm::apply(const Word& w) const {
    if (w.length() != size()) throw Error("permutation degree differs from word length");
    Word r(w.length());
    for (int i : w.support()) r.set(img_[i]);
    return r;
}

HAut identity_haut(int m) { return {Word(m), Perm(m)}; }
HAut translation(const Word& t) { return {t, Perm(t.length())}; }
HAut pure(const Perm& p) { return {Word(p.size()), p}; }

Word apply(const HAut& x, const Word& w) {
    if (w.length() != x.length()) throw Error("automorphism length differs from word length");
    return x.p.apply(w ^ x.t);
}

HAut compose(const HAut& x, const HAut& y) {
    if (x.length() != y.length()) throw Error("composing automorphisms of different length");
    // p_y(p_x(w + t_x) + t_y) = (p_x p_y)(w + t_x + p_x^-1(t_y))
    return {x.t ^ x.p.inverse().apply(y.t), x.p.then(y.p)};
}

HAut inverse(const HAut& x) { return {x.p.apply(x.t), x.p.inverse()}; }

HAut conjugate(const HAut& x, const HAut& y) { return compose(inverse(y), compose(x, y)); }

bool GroupGens::pure() const {
    return std::all_of(gens.begin(), gens.end(), [](const HAut& x) { return x.is_pure(); });
}

std::vector<Perm> GroupGens::perms() const {
    if (!pure()) throw Error("group '" + label + "' has translation parts");
    std::vector<Perm> out;
    for (const auto& x : gens) out.push_back(x.p);
    return out;
}

FastAction::FastAction(const HAut& x) {
    int m = x.length();
    if (m > 64) throw Error("fast action needs m <= 64");
    t_ = x.t.limb(0);
    nbytes_ = (m + 7) / 8;
    tab_.assign(nbytes_, {});
    for (int b = 0; b < nbytes_; ++b)
        for (int v = 0; v < 256; ++v) {
            uint64_t r = 0;
            for (int j = 0; j < 8; ++j) {
                int i = 8 * b + j;
                if (i < m && ((v >> j) & 1)) r |= uint64_t{1} << x.p[i];
            }
            tab_[b][v] = r;
        }
}

FastAction::FastAction(const Perm& p) : FastAction(pure(p)) {}

Code image(const HAut& x, const Code& c) {
    if (x.length() != c.length()) throw Error("automorphism length differs from code length");
    if (c.is_linear() && c.contains(x.t)) {
        std::vector<Word> rows;
        for (const auto& b : c.basis()) rows.push_back(x.p.apply(b));
        return Code::linear(c.length(), rows, c.name());
    }
    std::vector<Word> out;
    c.for_each([&](const Word& w) { out.push_back(apply(x, w)); });
    return Code::from_words(c.length(), std::move(out), c.name());
}

PreserveReport check_preserves(const GroupGens& g, const Code& c) {
    if (g.m != c.length()) throw Error("group degree differs from code length");
    PreserveReport rep;
    std::vector<uint64_t> vals;
    if (!c.is_linear() && c.length() <= 64) vals = codeword_values(c);
    for (size_t gi = 0; gi < g.gens.size(); ++gi) {
        const auto& x = g.gens[gi];
        if (c.is_linear()) {
            if (!c.contains(x.t)) {
                rep = {false, static_cast<int>(gi), Word(c.length())};
                return rep;
            }
            for (const auto& b : c.basis())
                if (!c.contains(x.p.apply(b))) {
                    rep = {false, static_cast<int>(gi), b};
                    return rep;
                }
            continue;
        }
        if (c.length() <= 64) {
            FastAction f(x);
            for (auto v : vals)
                if (!std::binary_search(vals.begin(), vals.end(), f(v))) {
                    rep = {false, static_cast<int>(gi), Word::from_u64(c.length(), v)};
                    return rep;
                }
            continue;
        }
        for (const auto& w : c.explicit_words())
            if (!c.contains(apply(x, w))) {
                rep = {false, static_cast<int>(gi), w};
                return rep;
            }
    }
    return rep;
}

GroupGens with_translations(const GroupGens& g, const Code& linear) {
    if (!linear.is_linear()) throw Error("translations need a linear code");
    GroupGens out = g;
    out.m = linear.length();
    for (const auto& b : linear.basis()) out.gens.push_back(translation(b));
    return out;
}

Perm doubled(const HAut& x) {
    int m = x.length();
    std::vector<int> img(2 * m);
    for (int i = 0; i < m; ++i)
        for (int b = 0; b < 2; ++b) img[2 * i + b] = 2 * x.p[i] + (b ^ (x.t.test(i) ? 1 : 0));
    return Perm(std::move(img));
}

}  // namespace ctc
