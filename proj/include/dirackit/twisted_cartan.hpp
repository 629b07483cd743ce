#pragma once

#include <utility>
#include <vector>

#include "dirackit/lattice.hpp"
#include "dirackit/realform.hpp"

namespace dirackit {

// Conjugacy class of involutions in a finite Weyl group, identity included.
// Members are sorted by (length, matrix lex); the representative is the
// first member, so it has minimal length with lexicographic tie-break.
struct InvolutionClass {
    WeylElement representative;
    std::vector<WeylElement> members;

    int size() const { return static_cast<int>(members.size()); }
};

// Exhaustive partition of {w in W : w^2 = e} under conjugation by all of W.
std::vector<InvolutionClass> involution_classes(const RootDatum& datum);

// Dimension of the +1 eigenspace of theta o (w,w) on the ambient 2n
// coordinates of a complex pair. Defined for involutions w of W(k).
int twisted_signature_plus(const PairDatum& pair, const WeylElement& w);

// One twisted Cartan subgroup class of a complex group, labelled by an
// involution class of W and the eigenspace signature of theta o (w,w).
struct ComplexTwistedCartan {
    WeylElement w_rep;
    int class_size = 0;
    int h_plus_dim = 0;
    int h_minus_dim = 0;
};

std::vector<ComplexTwistedCartan> twisted_cartan_classes_complex(const PairDatum& pair);

// One twisted Cartan class of GL(m,R): stratum with `untransformed_pairs`
// outer coordinate pairs, plus an involution class of the symmetric group
// permuting those pairs. (t_dim, a_dim) is the compact/split signature of
// the real points of the small torus (dimension floor(m/2)).
struct GlTwistedClass {
    int untransformed_pairs = 0;
    WeylElement involution;
    int class_size = 0;
    int t_dim = 0;
    int a_dim = 0;
};

std::vector<GlTwistedClass> twisted_cartan_classes_gl(int m);

// Brute-force check of the GL classification, straight from the coordinate
// model: a conjugate w.t of the small torus is a coordinate pairing, sigma
// acts per stratum by reversing the outer coordinates and fixing the middle
// ones, and classes are orbits of the sigma-stable pairings under the real
// Weyl group of the stratum. Blocks are 0-based coordinate index pairs.
struct OracleClass {
    std::vector<std::pair<int, int>> blocks;
    int singleton = -1;  // unmatched coordinate when m is odd
    int orbit_size = 0;
    int t_dim = 0;
    int a_dim = 0;
};

struct OracleStratum {
    int untransformed_pairs = 0;
    std::vector<OracleClass> classes;
    // True when some sigma-stable pairing moves the middle coordinates away
    // from the nested standard one; such pairings exist but land in the same
    // orbits, and the class counts record that empirically.
    bool middle_rearranged = false;
};

struct OracleReport {
    int m = 0;
    std::vector<OracleStratum> strata;
    int total_classes = 0;
};

OracleReport sigma_stable_oracle(int m);

}  // namespace dirackit
