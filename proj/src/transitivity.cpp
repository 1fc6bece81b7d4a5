#include "ctc/transitivity.hpp"

#include <algorithm>

namespace ctc {

GroupGens with_kernel_translations(const GroupGens& g, const Code& c) {
    if (!c.contains(Word(c.length()))) return g;
    return with_translations(g, maximal_linear_subcode(c).kernel);
}

TransitivityVerdict verify_neighbour_transitivity(const Code& c, const GroupGens& g, int s,
                                                  const DistancePartition& dp,
                                                  const OrbitLabeling& orbits) {
    if (dp.m != c.length() || orbits.m != c.length()) throw Error("partition or labeling does not match the code");
    if (s < 0 || s > dp.rho) throw Error("s must lie in [0, rho]");
    auto pr = check_preserves(g, c);
    if (!pr.ok)
        throw Error("group does not preserve the code: generator " + std::to_string(pr.generator) +
                    " moves " + pr.word.to_string() + " outside");
    TransitivityVerdict v;
    v.s = s;
    v.rho = dp.rho;
    v.orbits_per_cell.assign(dp.rho + 1, 0);
    std::vector<uint64_t> first(dp.rho + 1, UINT64_MAX);
    uint64_t N = dp.dist.size();
    for (uint32_t id = 0; id < orbits.orbit_count; ++id) ++v.orbits_per_cell[dp.dist[orbits.representatives[id]]];
    for (uint64_t x = 0; x < N; ++x) {
        int d = dp.dist[x];
        if (d > s) continue;
        if (first[d] == UINT64_MAX) {
            first[d] = x;
        } else if (orbits.label[x] != orbits.label[first[d]] && v.split_cell < 0) {
            v.split_cell = d;
            v.witness_a = first[d];
            v.witness_b = x;
        }
    }
    // an orbit lies inside one cell since the group preserves c
    for (int d = 0; d <= s && v.split_cell < 0; ++d)
        if (v.orbits_per_cell[d] != 1) v.split_cell = d;
    v.verified = v.split_cell < 0;
    return v;
}

TransitivityVerdict verify_neighbour_transitivity(const Code& c, const GroupGens& g, int s,
                                                  const DistancePartition& dp) {
    auto pr = check_preserves(g, c);
    if (!pr.ok)
        throw Error("group does not preserve the code: generator " + std::to_string(pr.generator) +
                    " moves " + pr.word.to_string() + " outside");
    return verify_neighbour_transitivity(c, g, s, dp, full_space_orbits(g));
}

TransitivityVerdict verify_complete_transitivity(const Code& c, const GroupGens& g,
                                                 const DistancePartition& dp) {
    return verify_neighbour_transitivity(c, g, dp.rho, dp);
}

}  // namespace ctc
