#pragma once

#include <vector>

#include "ctc/bigint.hpp"
#include "ctc/perm.hpp"

namespace ctc {

/// Base and strong generating set built by the deterministic Schreier-Sims
/// algorithm. Used for exact group orders and point stabilizers.
class PermGroup {
public:
    PermGroup(int n, const std::vector<Perm>& gens, const std::vector<int>& base_prefix = {});

    int degree() const { return n_; }
    BigInt order() const;
    bool contains(const Perm& g) const;
    const std::vector<int>& base() const { return base_; }
    /// Strong generators fixing base[0..level-1] pointwise; these generate
    /// that stabilizer.
    std::vector<Perm> stabilizer_generators(int level) const;
    /// Basic orbit at a level.
    std::vector<int> basic_orbit(int level) const;
    /// Element mapping base[level] to point (which must be in the basic orbit).
    Perm transversal(int level, int point) const;
    const std::vector<Perm>& strong_generators() const { return strong_; }

private:
    struct Level {
        std::vector<int> gens;           // indices into strong_
        std::vector<int> orbit;
        std::vector<int> rep;            // rep[p] index into reps, or -1
        std::vector<Perm> reps;
    };
    void rebuild_level(int i);
    std::pair<Perm, int> sift(Perm h, int from) const;

    int n_;
    std::vector<int> base_;
    std::vector<Perm> strong_;
    std::vector<Level> levels_;
};

/// Greedy subset of gens generating the same group, in input order.
std::vector<Perm> reduce_generators(int n, const std::vector<Perm>& gens);

}  // namespace ctc
