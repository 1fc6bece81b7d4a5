#pragma once

#include <string>
#include <vector>

#include "ctc/code.hpp"
#include "ctc/perm.hpp"

namespace ctc {

/// Combinatorial obstruction to 3-neighbour-transitivity for a code of
/// length 21 on the points of PG(2,4).
struct Non3NtWitness {
    bool triangles_in_c3 = false;   // every non-collinear triple is at distance 3
    bool collinear_in_c3 = false;   // every collinear triple is at distance 3
    bool no_mixed_word = false;     // no weight-6 word is triangle + disjoint collinear triple
    bool all_hyperovals = false;    // every weight-6 word is a hyperoval
    uint64_t weight6 = 0;
    Word counterexample;            // first offending word, when any
    std::string failed;             // name of the first failing item
    bool holds() const { return triangles_in_c3 && collinear_in_c3 && no_mixed_word && all_hyperovals; }
};
Non3NtWitness non_3nt_witness_psl34(const Code& c);

/// Triangle plus collinear triple containment, used as a negative control.
bool is_triangle_plus_collinear(const Word& w);

}  // namespace ctc
