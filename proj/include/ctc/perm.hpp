#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ctc/code.hpp"
#include "ctc/word.hpp"

namespace ctc {

/// Permutation of {0..n-1}; images[i] is the image of i.
class Perm {
public:
    Perm() = default;
    explicit Perm(int n);
    explicit Perm(std::vector<int> images);
    static Perm identity(int n) { return Perm(n); }

    int size() const { return static_cast<int>(img_.size()); }
    int operator[](int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    /// This first, then q.
    Perm then(const Perm& q) const;
    Perm inverse() const;
    bool is_identity() const;

    /// Moves bit i to position images[i].
    Word apply(const Word& w) const;

    bool operator==(const Perm& o) const = default;
    auto operator<=>(const Perm& o) const = default;

private:
    std::vector<int> img_;
};

/// Hamming-graph automorphism: translate by t, then permute coordinates by p.
struct HAut {
    Word t;
    Perm p;

    int length() const { return p.size(); }
    bool is_pure() const { return t.is_zero(); }
    bool operator==(const HAut& o) const = default;
};

HAut identity_haut(int m);
HAut translation(const Word& t);
HAut pure(const Perm& p);
Word apply(const HAut& x, const Word& w);
/// x first, then y.
HAut compose(const HAut& x, const HAut& y);
HAut inverse(const HAut& x);
/// y^-1 x y: conjugate moving the action through y.
HAut conjugate(const HAut& x, const HAut& y);

struct GroupGens {
    int m = 0;
    std::vector<HAut> gens;
    std::string label;
    /// Bundled-file metadata, never trusted by proofs.
    std::string claimed_order;

    bool pure() const;
    std::vector<Perm> perms() const;
};

/// Precomputed byte tables applying an HAut to words of length <= 64
/// stored as integers.
class FastAction {
public:
    explicit FastAction(const HAut& x);
    explicit FastAction(const Perm& p);
    uint64_t operator()(uint64_t v) const {
        v ^= t_;
        uint64_t r = 0;
        for (int b = 0; b < nbytes_; ++b) r |= tab_[b][(v >> (8 * b)) & 0xFF];
        return r;
    }

private:
    uint64_t t_ = 0;
    int nbytes_ = 0;
    std::vector<std::array<uint64_t, 256>> tab_;
};

/// Image of a code under x; linear codes stay linear when t lies in the code.
Code image(const HAut& x, const Code& c);

struct PreserveReport {
    bool ok = true;
    int generator = -1;
    Word word;
};

PreserveReport check_preserves(const GroupGens& g, const Code& c);
inline bool preserves_code(const GroupGens& g, const Code& c) { return check_preserves(g, c).ok; }

/// Adds translations by a basis of the given linear code.
GroupGens with_translations(const GroupGens& g, const Code& linear);

/// Embedding into Sym(2m): point 2i+b is "coordinate i holds b".
Perm doubled(const HAut& x);

}  // namespace ctc
