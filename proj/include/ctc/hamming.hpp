#pragma once

#include <cstdint>
#include <vector>

#include "ctc/bigint.hpp"
#include "ctc/code.hpp"

namespace ctc {

// code transforms
Code dual(const Code& c);
Code span(const Code& c);
Code puncture(const Code& c, int i);
Code shorten(const Code& c, int i);
Code extend_parity(const Code& c);
Code even_subcode(const Code& c);
/// Explicit union of word sets (all of length m).
Code union_of(const std::vector<Code>& parts, std::string name = {});
/// Explicit union of the cosets base + r.
Code union_of_cosets(const Code& base, const std::vector<Word>& reps, std::string name = {});

int min_distance(const Code& c);
/// Number of codewords of each weight 0..m.
std::vector<BigInt> weight_distribution(const Code& c);
BigInt krawtchouk(int m, int k, int x);
/// Weight distribution of the dual of a linear code from its own.
std::vector<BigInt> macwilliams(int m, const std::vector<BigInt>& weights);

struct InnerDistribution {
    int m = 0;
    BigInt code_size;
    std::vector<Rational> A;
};

struct DualDistribution {
    int m = 0;
    std::vector<Rational> B;
    int s = 0;
};

InnerDistribution inner_distribution(const Code& c);
DualDistribution dual_distribution(const InnerDistribution& a, const BigInt& code_size);
inline DualDistribution dual_distribution(const InnerDistribution& a) {
    return dual_distribution(a, a.code_size);
}
int external_distance(const Code& c);

struct KernelDecomposition {
    Code kernel;
    /// One reduced representative per coset, sorted.
    std::vector<Word> coset_reps;
};

KernelDecomposition maximal_linear_subcode(const Code& c);

struct DistancePartition {
    int m = 0;
    std::vector<uint8_t> dist;
    int rho = 0;
    std::vector<uint64_t> cell_sizes;
};

constexpr int kFullSpaceLimit = 26;

DistancePartition distance_partition(const Code& c);

struct RegularityReport {
    bool regular = true;
    int s = 0;
    int failing_cell = -1;
    uint64_t witness_a = 0;
    uint64_t witness_b = 0;
    /// profiles[i][k] = |Gamma_k(v) ∩ C| for a reference vertex v of cell i.
    std::vector<std::vector<uint64_t>> profiles;
};

RegularityReport regularity_report(const Code& c, int s, const DistancePartition& dp);
bool is_s_regular(const Code& c, int s, const DistancePartition& dp);
bool is_completely_regular(const Code& c, const DistancePartition& dp);

bool singleton_check(int m, int delta, const BigInt& size);

}  // namespace ctc

namespace ctc {

// subspace operations on linear codes
Code code_sum(const Code& a, const Code& b);
Code code_intersection(const Code& a, const Code& b);
bool is_subcode(const Code& a, const Code& b);

}  // namespace ctc
