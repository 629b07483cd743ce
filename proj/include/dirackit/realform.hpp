#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dirackit/lattice.hpp"

namespace dirackit {

// The three supported (g,K) families:
//  - complex_pair: a complex group viewed as a real group; ambient lattice is
//    the left|right pair of weight coordinates, K is the compact form.
//  - equal_rank: a classical equal-rank real form given by its compact
//    positive roots inside the full system.
//  - gl_real: GL(m,R) in the coordinates where the Cartan involution acts on
//    the fundamental Cartan by negate-and-reverse.
enum class FamilyTag { complex_pair, equal_rank, gl_real };

std::string family_tag_name(FamilyTag tag);

struct PairCaches;

struct PairDatum {
    FamilyTag tag = FamilyTag::equal_rank;
    char root_family = 0;  // descriptor family; 'A' for gl_real
    int rank = 0;          // descriptor rank: n for complex/equal_rank, m for gl_real
    int gl_m = 0;          // m for gl_real, 0 otherwise

    RootDatum g;  // ambient datum: 2n coords (complex), n (equal_rank), m (gl_real)
    RootDatum k;  // compact subsystem in t-coordinates
    int t_rank = 0;  // dimension of the t-coordinate space

    IMat theta;  // Cartan involution on ambient coordinates
    std::vector<std::pair<Weight, Int>> s_weights;  // t-weights of s, with multiplicity
    std::vector<Weight> compact_positive;           // equal_rank only

    int fundamental_t_dim = 0;
    int fundamental_a_dim = 0;

    std::shared_ptr<PairCaches> cache;

    int ambient_rank() const { return g.ambient_rank; }
    Int dim_s() const;
    Int zero_s_multiplicity() const;
};

PairDatum build_complex_pair(char family, int rank);
PairDatum build_equal_rank_pair(char family, int rank,
                                std::vector<Weight> compact_positive);
PairDatum build_gl_real_pair(int m);

// Theta-stable Cartan subalgebra h = t + a, labeled by the number of Cayley
// transforms from the fundamental one.
struct CartanClass {
    int index_k = 0;  // Cayley transforms applied; 0 is fundamental
    int t_dim = 0;
    int a_dim = 0;
    std::vector<Weight> cayley_roots;  // ambient roots the transforms use
    IMat theta_h;                      // involution of h in ambient coordinates
    std::string t_embedding;           // description of t inside h
};

// complex: one class; gl_real: one class per Cayley count 0..floor(m/2);
// equal_rank: strongly orthogonal sets of noncompact positive roots up to the
// compact Weyl group acting on root lines.
std::vector<CartanClass> cartan_classes(const PairDatum& pair);

// theta(mu) or (theta o w)(mu) on ambient coordinates.
Weight theta_action_on_weight(const PairDatum& pair,
                              const std::optional<WeylElement>& w,
                              const Weight& mu);

// Restriction of an ambient functional to t, in t-coordinates.
Weight restrict_to_t(const PairDatum& pair, const Weight& ambient);

// Zero-extension of a t-functional over a, scaled by 4 so the result is an
// exact integer vector in ambient coordinates (4x the real coefficients).
IVec embed4_t(const PairDatum& pair, const Weight& t_weight);

// The matching 4x integer form of an ambient functional.
IVec ambient4(const PairDatum& pair, const Weight& ambient);

// Equal-rank only: positive roots of g that are not compact.
std::vector<Weight> noncompact_positive(const PairDatum& pair);

bool is_compact_root(const PairDatum& pair, const Weight& root);

// Cached enumerations, filled lazily and shared by copies of the pair.
const std::vector<WeylElement>& weyl_k(const PairDatum& pair);
const std::vector<WeylElement>& weyl_g(const PairDatum& pair);
const WeylElement& longest_k(const PairDatum& pair);
// Equal-rank: minimal-length coset representatives, i.e. the sigma in W_g
// with sigma(rho_g) dominant for the compact positive system.
const std::vector<WeylElement>& w1_coset_reps(const PairDatum& pair);

struct PairCaches {
    std::once_flag weyl_k_once;
    std::once_flag weyl_g_once;
    std::once_flag w0_k_once;
    std::once_flag w1_once;
    std::vector<WeylElement> weyl_k;
    std::vector<WeylElement> weyl_g;
    WeylElement w0_k;
    std::vector<WeylElement> w1;
};

}  // namespace dirackit
