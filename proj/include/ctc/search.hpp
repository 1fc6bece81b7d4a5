#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "ctc/bigint.hpp"
#include "ctc/code.hpp"
#include "ctc/perm.hpp"

namespace ctc {

/// Visits every coordinate permutation p with p(D) = E (word sets given
/// as integers, m <= 64). The visitor returns false to stop early.
void search_set_maps(int m, const std::vector<uint64_t>& D, const std::vector<uint64_t>& E,
                     const std::function<bool(const Perm&)>& visit);

struct AutomorphismGroup {
    GroupGens gens;
    BigInt order;
    /// |Aut(C)_0|, the pure coordinate permutations preserving C.
    BigInt zero_stabilizer_order;
    /// |orbit of the zero word|.
    uint64_t zero_orbit = 0;
};

/// Full Aut(C) inside translations x coordinate permutations.
/// Guarded to m <= 12 and |C| <= 64.
AutomorphismGroup automorphism_search(const Code& c);
/// Same search without the size guard (m <= 64, 0 in C not required).
AutomorphismGroup automorphism_group(const Code& c);

/// Steiner system t-(v,k,1) given by block masks, v <= 64.
struct SteinerSystem {
    int v = 0;
    int t = 0;
    std::vector<uint64_t> blocks;
};

/// Point bijections mapping blocks of A onto blocks of B, honouring the
/// forced pairs; stops after limit solutions.
std::vector<Perm> design_isomorphisms(const SteinerSystem& A, const SteinerSystem& B,
                                      const std::vector<std::pair<int, int>>& forced, size_t limit);

}  // namespace ctc
