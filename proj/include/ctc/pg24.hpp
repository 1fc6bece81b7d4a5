#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ctc/code.hpp"
#include "ctc/perm.hpp"

namespace ctc::pg24 {

/// GF(4) as 0, 1, w=2, w^2=3; addition is xor of the two-bit encodings.
constexpr uint8_t kAdd[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
constexpr uint8_t kMul[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
constexpr uint8_t kInv[4] = {0, 1, 3, 2};
constexpr uint8_t kFrob[4] = {0, 1, 3, 2};
constexpr uint8_t W = 2, W2 = 3;

using Triple = std::array<uint8_t, 3>;
using Matrix = std::array<std::array<uint8_t, 3>, 3>;

constexpr int kPoints = 21;

struct ProjPlane4 {
    std::vector<Triple> points;  // normalized, sorted lexicographically
    std::vector<Word> lines;     // sorted
    std::vector<std::vector<int>> line_of;  // line index through two distinct points
    std::vector<std::vector<char>> incidence;  // point x line

    int index(Triple t) const;  // normalizes first
    Word set(const std::vector<Triple>& pts) const;
    bool collinear(int a, int b, int c) const;
    /// Permutation of points induced by v -> M v (optionally Frobenius after).
    Perm induced(const Matrix& M, bool frobenius = false) const;
    bool preserves_lines(const Perm& p) const;
};

ProjPlane4 build_pg24();
Triple normalize(Triple t);

std::vector<Word> enumerate_hyperovals(const ProjPlane4& p);
std::vector<Word> enumerate_fanos(const ProjPlane4& p);
bool is_hyperoval(const ProjPlane4& p, const Word& w);
bool is_fano(const ProjPlane4& p, const Word& w);

Matrix diag(uint8_t a, uint8_t b, uint8_t c);
GroupGens psl34_generators(const ProjPlane4& p);
GroupGens psigmal34_generators(const ProjPlane4& p);
GroupGens pgl34_generators(const ProjPlane4& p);
GroupGens pgammal34_generators(const ProjPlane4& p);
Perm tau(const ProjPlane4& p);
Perm frobenius(const ProjPlane4& p);

struct OvalOrbits {
    std::vector<Word> hyperovals;  // sorted
    std::vector<Word> fanos;       // sorted
    std::vector<int> hyperoval_label;  // 0,1,2 for H1,H2,H3
    std::vector<int> fano_label;       // 0,1,2 for F1,F2,F3
    std::array<std::vector<Word>, 3> H;
    std::array<std::vector<Word>, 3> F;
    std::string rule;
    /// "|D n F| <= 3 iff labels differ" taken literally; false in PG(2,4).
    bool literal_rule_holds = false;
    Word literal_counter_hyperoval, literal_counter_fano;

    int hyperoval_orbit(const Word& w) const;  // -1 if not a hyperoval
    int fano_orbit(const Word& w) const;
};

OvalOrbits classify_oval_orbits(const ProjPlane4& p, const GroupGens& psl);

/// Induced action of a permutation on {H1,H2,H3} as image indices.
std::array<int, 3> induced_on_orbits(const OvalOrbits& o, const Perm& g);

struct SymdiffVerdict {
    bool holds = false;
    Word sum;
    std::array<int, 3> orbits{-1, -1, -1};
};

SymdiffVerdict symdiff_hyperoval_check(const ProjPlane4& p, const OvalOrbits& o, const Word& d1,
                                       const Word& d2);

struct LinePlusFano {
    bool holds = false;
    bool tau_fixes_line = false;
    Word line;
    std::array<Word, 3> phi;
    std::array<Word, 3> delta;
};

LinePlusFano line_plus_fano_check(const ProjPlane4& p, const OvalOrbits& o, const Word& l,
                                  const Word& phi1);

/// Named sets of the standard choice: the line z = 0, the GF(2)-subplane,
/// their images under tau.
struct Representatives {
    Word ell;
    std::array<Word, 3> Delta;
    std::array<Word, 3> Phi;
};

Representatives standard_representatives(const ProjPlane4& p, const OvalOrbits& o);

Code code_P(const ProjPlane4& p);
Code code_L(const ProjPlane4& p);

struct CosetConfiguration {
    std::vector<std::string> names;  // l, D1, D2, D3, F1, F2, F3
    std::vector<Word> reps;
    std::vector<uint32_t> coset_id;  // nonzero 3-bit class of each rep in P-perp / P
    std::vector<std::array<int, 3>> lines;  // triples of rep indices summing into P
    int codim = 0;
};

CosetConfiguration coset_configuration(const ProjPlane4& p, const Representatives& r);

struct LatticeNode {
    std::string name;
    Code code;
    int dim() const { return code.dimension(); }
};

struct LatticeEdge {
    int lower = 0;
    int upper = 0;
    int codim = 0;
};

struct SubmoduleLattice {
    std::vector<LatticeNode> nodes;
    std::vector<LatticeEdge> edges;  // covering relations
    int find(const std::string& name) const;
};

SubmoduleLattice submodule_lattice(const ProjPlane4& p, const Representatives& r);

/// Everything above built once.
struct Geometry {
    ProjPlane4 plane;
    GroupGens psl, psigmal, pgammal;
    OvalOrbits orbits;
    Representatives reps;
    Code P, L, Pperp;
};

const Geometry& geometry();

}  // namespace ctc::pg24
