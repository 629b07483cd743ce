#pragma once

#include <Eigen/Dense>

#include <initializer_list>
#include <string>
#include <vector>

#include "dirackit/errors.hpp"
#include "dirackit/rational.hpp"

namespace dirackit {

using Int = long long;
using IVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

// Weight in epsilon-coordinates. Coordinates are stored doubled: c2[i] is
// twice the epsilon_i coefficient, so half-integer weights (rho-shifts, spin
// weights) stay in exact integer arithmetic.
struct Weight {
    IVec c2;

    Weight() : c2() {}
    explicit Weight(IVec v) : c2(std::move(v)) {}

    int rank() const { return static_cast<int>(c2.size()); }
    bool is_zero() const { return c2.size() == 0 || c2.isZero(); }

    bool operator==(const Weight& o) const {
        return c2.size() == o.c2.size() && c2 == o.c2;
    }
    bool operator!=(const Weight& o) const { return !(*this == o); }

    // Total order: rank first, then lexicographic on doubled coordinates.
    // Used as the canonical key order everywhere a deterministic listing is
    // needed.
    bool operator<(const Weight& o) const {
        if (c2.size() != o.c2.size()) return c2.size() < o.c2.size();
        for (int i = 0; i < c2.size(); ++i) {
            if (c2[i] != o.c2[i]) return c2[i] < o.c2[i];
        }
        return false;
    }
};

Weight zero_weight(int rank);
// Build from doubled coordinates (exact representation).
Weight weight_from_doubled(const std::vector<Int>& doubled);
Weight weight_from_doubled(std::initializer_list<Int> doubled);
// Build from integer epsilon-coordinates (doubles them internally).
Weight weight_from_ints(const std::vector<Int>& coords);
Weight weight_from_ints(std::initializer_list<Int> coords);

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator-(const Weight& a);
Weight operator*(Int c, const Weight& a);

// Standard Euclidean pairing in epsilon-coordinates, exact.
Rational inner(const Weight& a, const Weight& b);
Rational norm2(const Weight& a);
// 2<mu,alpha>/<alpha,alpha>, exact.
Rational coroot_pairing(const Weight& mu, const Weight& alpha);

// Orthogonal integer matrix acting on doubled coordinates, with its Coxeter
// length (number of positive roots mapped to negative ones) cached.
struct WeylElement {
    IMat mat;
    int length = 0;

    int rank() const { return static_cast<int>(mat.rows()); }
    bool is_identity() const { return mat.isIdentity(); }
    bool is_involution() const { return (mat * mat).isIdentity(); }
};

WeylElement identity_weyl(int rank);
Weight apply(const IMat& m, const Weight& w);
Weight apply(const WeylElement& w, const Weight& mu);
Int matrix_det(const IMat& m);

// Classical root system realized in epsilon-coordinates. Family 'A' with
// rank n is the A_{n-1} system inside n coordinates (GL(n) flavored);
// family 'S' marks a subsystem derived from an explicit positive set.
struct RootDatum {
    char family = 'S';
    int ambient_rank = 0;
    std::vector<Weight> positive_roots;
    std::vector<Weight> simple_roots;
    Weight rho;

    int semisimple_rank() const {
        return static_cast<int>(simple_roots.size());
    }
    bool is_positive_root(const Weight& w) const;
    // True for w or -w a positive root.
    bool is_root(const Weight& w) const;
};

// family in {A,B,C,D}; rank >= 1 (>= 2 for D), capped by rank_cap().
RootDatum build_root_datum(char family, int rank);

// Derive a root datum from an explicit positive set in a larger coordinate
// space: simple roots are the positives that are not sums of two positives,
// and the set must be stable under the derived simple reflections. An empty
// set is allowed (abelian case).
RootDatum make_subsystem(std::vector<Weight> positive_roots, int ambient_rank);

// Reflection in alpha as an integer matrix on doubled coordinates;
// configuration error when the matrix is not integral.
IMat reflection_matrix(const Weight& alpha, int ambient_rank);

// |W| for the named families, 0 when unknown (subsystems).
long long theoretical_weyl_order(char family, int rank);

// Complete enumeration by closure under simple reflections. Identity first,
// then sorted by (length, matrix). Resource error past the enumeration cap.
std::vector<WeylElement> enumerate_weyl(const RootDatum& datum);

// Hard cap on |W| for full enumeration.
inline constexpr long long kWeylEnumerationCap = 1'000'000;

// Rank cap for datum construction; DIRACKIT_RANK_CAP overrides the default 8.
int rank_cap();

struct DominantRep {
    WeylElement w;     // minimal-length element with w(mu) dominant
    Weight dominant;   // w(mu)
    bool singular = false;  // some simple pairing vanishes at the target
};

// Greedy reflection toward the dominant chamber of the datum. The returned
// element has minimal length among all elements moving mu to the dominant
// chamber; for regular mu it is the unique one.
DominantRep dominant_rep(const Weight& mu, const RootDatum& datum);

bool is_dominant(const Weight& mu, const RootDatum& datum);

// Number of datum positives mapped to negatives by m.
int inversion_count(const IMat& m, const RootDatum& datum);

// Validate that m lies in the Weyl group of the datum (not merely in the
// automorphism group of the root set) and attach its honest length.
WeylElement weyl_from_matrix(const IMat& m, const RootDatum& datum);

WeylElement longest_element(const RootDatum& datum);

// One-line signed-permutation notation: entry i is +-k meaning
// w(eps_i) = +-eps_k. Identity may be written "e".
std::string signed_perm_string(const IMat& m);
IMat parse_signed_perm(const std::string& text, int rank);

// Human-readable epsilon-coordinates, e.g. "(3/2,-1/2)".
std::string weight_string(const Weight& w);

}  // namespace dirackit
