#pragma once

#include <string>
#include <vector>

#include "ctc/perm.hpp"

namespace ctc {

/// M24 on the W24 points, lifted from PGammaL3(4) plus one element moving a.
GroupGens mathieu_m24();
/// Point stabilizers of M24 restricted to the remaining points.
GroupGens mathieu_m23();
GroupGens mathieu_m22();
/// M22 together with an element of M24 swapping b and c.
GroupGens mathieu_m22_2();

/// Moebius generators on F_r u {inf}, inf = coordinate r.
GroupGens psl2_group(int r);
/// psl2_group(r) plus x -> g x, g primitive (last generator).
GroupGens pgl2_group(int r);

/// PSU3(q) on the points of the Hermitian unital in PG(2,q^2), q in {3,5}.
GroupGens psu3_group(int q);
/// PGammaL2(8) on 28 points.
GroupGens ree3_group();

GroupGens aut_h();
GroupGens aut_ph();
GroupGens aut_nr();
/// PSigmaL3(4) with x_Delta = (translate by Delta2, then tau).
GroupGens psl34_xdelta();
/// Conjugate of psl34_xdelta by tau^2; preserves <L,D1> u <L,D2>.
GroupGens aut_ld1uld2();

struct GroupSpec {
    std::string name;
    int degree = 0;
    std::string order;               // expected order, decimal
    std::vector<std::string> preserves;  // the set of these codes is mapped to itself
};
const std::vector<GroupSpec>& group_specs();
const GroupSpec& group_spec(const std::string& name);
/// Builds a bundled group from scratch.
GroupGens builtin_group(const std::string& name);

/// Text format: '#' comments, '#! key=value ...' metadata, then one
/// generator per line as space-separated images with optional t=<bits>.
struct GroupFile {
    GroupGens gens;
    std::vector<std::string> preserves;
};
GroupFile parse_group(const std::string& text, const std::string& source = "<string>");
std::string format_group(const GroupGens& g, const std::vector<std::string>& preserves,
                         const std::string& comment = {});
GroupFile read_group_file(const std::string& path);

/// Bundled data directory (compiled in; CTC_DATA_DIR env overrides).
std::string default_data_dir();
/// Reads data_dir/groups/<name>.perms and checks every generator against
/// the codes listed in its metadata.
GroupGens load_group(const std::string& name, const std::string& data_dir = {});
/// Every generator maps the set of named codes onto itself; throws naming
/// the generator and a violating word otherwise.
void check_preserves_set(const GroupGens& g, const std::vector<std::string>& code_names);

}  // namespace ctc
