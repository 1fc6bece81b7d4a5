#pragma once

#include <cstdint>
#include <vector>

#include "ctc/hamming.hpp"
#include "ctc/orbits.hpp"
#include "ctc/perm.hpp"

namespace ctc {

struct TransitivityVerdict {
    bool verified = false;
    int s = 0;
    int rho = 0;
    int split_cell = -1;
    uint64_t witness_a = 0;
    uint64_t witness_b = 0;
    /// Number of group orbits inside each distance cell, cells 0..rho.
    std::vector<uint64_t> orbits_per_cell;
};

/// Adds translations by a basis of the maximal linear subcode of c; these
/// are automorphisms of c for any code containing 0.
GroupGens with_kernel_translations(const GroupGens& g, const Code& c);

TransitivityVerdict verify_neighbour_transitivity(const Code& c, const GroupGens& g, int s,
                                                  const DistancePartition& dp);
/// Same, reusing a labeling already computed for g.
TransitivityVerdict verify_neighbour_transitivity(const Code& c, const GroupGens& g, int s,
                                                  const DistancePartition& dp,
                                                  const OrbitLabeling& orbits);
TransitivityVerdict verify_complete_transitivity(const Code& c, const GroupGens& g,
                                                 const DistancePartition& dp);

}  // namespace ctc
