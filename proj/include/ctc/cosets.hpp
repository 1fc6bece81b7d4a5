#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ctc/bigint.hpp"
#include "ctc/code.hpp"

namespace ctc {

/// Cosets of a linear code as syndromes; u ~ v when u ^ v is the syndrome
/// of a weight-one word. Loops (zero columns) are dropped and parallel
/// columns give one edge.
struct QuotientGraph {
    std::string source;
    int m = 0;
    int codim = 0;
    uint32_t vertices = 0;
    /// Distinct nonzero column syndromes: the connection set.
    std::vector<uint32_t> connection;
    /// Lexicographically least minimum-weight leader per syndrome.
    std::vector<Word> leaders;
    int degree() const { return static_cast<int>(connection.size()); }
};

/// Needs m - dim <= 16.
QuotientGraph coset_graph(const Code& c);
uint32_t syndrome(const QuotientGraph& g, const Code& c, const Word& w);

struct IntersectionArray {
    bool distance_regular = false;
    int diameter = 0;
    std::vector<uint64_t> b, c;
    /// On failure: a source vertex, a vertex at distance witness_level and
    /// which count disagreed.
    uint32_t witness_source = 0, witness_vertex = 0;
    int witness_level = -1;
    std::string text() const;
};

/// Checks the intersection numbers from every source vertex.
IntersectionArray is_distance_regular(const QuotientGraph& g);

struct Feasibility {
    bool ok = false;
    std::vector<BigInt> k;  // k_i, vertices at distance i
    BigInt total = 0;
};
/// k_0 = 1, k_i = k_{i-1} b_{i-1} / c_i, all integral and summing to n.
Feasibility array_feasibility(const IntersectionArray& a, uint64_t n);

/// Covering radius of a linear code via syndrome breadth-first search.
int covering_radius_linear(const Code& c);

struct DoubleCheck {
    bool ok = false;
    std::string reason;
};
/// even is the even-weight subcode of odd (index 2, odd contains an odd
/// word): coset_graph(even) is the bipartite double of coset_graph(odd).
DoubleCheck bipartite_double_check(const Code& odd, const Code& even);

struct SizeObstruction {
    BigInt size;
    bool divides = false;
    std::string verdict;  // "quotient possible" or "no"
};
SizeObstruction size_obstruction(const Code& c);

}  // namespace ctc
