#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ctc/code.hpp"
#include "ctc/perm.hpp"

namespace ctc {

/// (m, |C| or dim, delta; rho) as printed in the tables; dim < 0 for non-linear codes.
struct Claimed {
    int m = 0;
    BigInt size;
    int dim = -1;
    int delta = 0;
    int rho = -1;  // -1: no value to compare
    std::string text() const;
};

struct NamedCode {
    std::string name;
    std::string label;  // display form, e.g. "<L,D1>"
    Code code;
    std::optional<Claimed> claimed;
    int table2_line = 0;  // 0: not a table row
    std::string group;    // bundled generator file used for transitivity
};

// Hadamard family on F11 u {*}; * is coordinate 11.
Code hadamard12();
Code punctured_hadamard();
Code hadamard_even();

/// Witt design on PG(2,4) points 0..20 plus a=21, b=22, c=23.
struct WittDesign {
    std::vector<Word> blocks;
    std::vector<int> type;  // construction case 1..8
};
constexpr int kPointA = 21, kPointB = 22, kPointC = 23;
const WittDesign& witt_w24();
/// Throws naming the first t-subset not covered exactly once.
void verify_steiner(const std::vector<Word>& blocks, int v, int k, int t);

struct GolayFamily {
    Code G24, G23, G23perp, G22, G22perp, E22, S22, S22b;
};
/// G23 deletes c, G22 deletes b and c. S22 comes from blocks with c and not b,
/// S22b from blocks with b and not c.
const GolayFamily& golay_family();

struct NordstromRobinson {
    Code nr16, nr15;
    std::vector<int> octad;  // W24 coordinates of the fixed block
    Code kernel;             // translation kernel of nr15
    Code span;               // span of nr15
    int kernel_cosets = 0;
};
const NordstromRobinson& nordstrom_robinson();

struct GqrPair {
    int r = 0;
    Code U1, U2;
    int infinity_bit = 0;  // value of the seed at infinity that gave dimension (r+1)/2
    bool self_dual = false;
    bool dual_is_other = false;
};
/// Coordinates 0..r-1 are field elements, r is infinity.
GqrPair gqr_code(int r);

struct Unital {
    int q = 0;  // plane PG(2, q^2)
    std::vector<std::array<int, 3>> points;
    std::vector<Word> blocks;
};
Unital hermitian_unital(int q);

struct UnitalCodes {
    Unital unital;
    Code Uperp, U;
    std::vector<BigInt> weights_U;
};
const UnitalCodes& hermitian_unital_code();

/// The PSL3(4) codes by name.
const std::map<std::string, NamedCode>& psl34_code_menu();

/// Every named code. Throws for unknown names.
const NamedCode& named_code(const std::string& name);
std::vector<std::string> code_names();
/// Table rows 1..13 in order.
std::vector<std::string> table2_names();

}  // namespace ctc
