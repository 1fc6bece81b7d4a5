#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ctc/perm.hpp"

namespace ctc {

struct OrbitLabeling {
    int m = 0;
    /// Orbit ids are numbered in increasing order of least member.
    std::vector<uint32_t> label;
    uint32_t orbit_count = 0;
    std::vector<uint64_t> orbit_sizes;
    std::vector<uint64_t> representatives;
};

OrbitLabeling full_space_orbits(const GroupGens& g);

struct SubsetOrbits {
    int m = 0;
    int k = 0;
    /// Sizes in increasing order of least member (colex rank).
    std::vector<uint64_t> sizes;
    std::vector<uint64_t> representatives;

    uint64_t min_size() const;
    std::vector<uint64_t> sorted_sizes() const;
};

SubsetOrbits orbits_on_k_subsets(const GroupGens& g, int k);
bool is_t_homogeneous(const GroupGens& g, int t);
bool is_t_transitive(const GroupGens& g, int t);
/// Orbit of one ordered tuple of distinct points.
uint64_t tuple_orbit_size(const GroupGens& g, const std::vector<int>& tuple);
/// Group element (as a word of generators multiplied out) mapping src to dst
/// pointwise, found by breadth-first search on the tuple orbit.
std::optional<Perm> find_tuple_mapping(const GroupGens& g, const std::vector<int>& src,
                                       const std::vector<int>& dst);
/// Orbit of a point of {0..m-1}.
std::vector<int> point_orbit(const GroupGens& g, int point);

}  // namespace ctc
