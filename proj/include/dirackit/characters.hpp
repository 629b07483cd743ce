#pragma once

#include <map>
#include <utility>

#include "dirackit/lattice.hpp"
#include "dirackit/realform.hpp"

namespace dirackit {

// Hard cap on the support of a character polynomial; products that would
// exceed it raise a resource error instead of thrashing.
inline constexpr long long kCharacterTermCap = 1LL << 22;

// Finite integer combination of formal exponentials e^mu on a torus.
struct CharacterPoly {
    std::map<Weight, Int> terms;

    void add(const Weight& w, Int m);
    Int coeff(const Weight& w) const;
    bool is_zero() const { return terms.empty(); }
    Int dimension() const;  // sum of multiplicities
};

CharacterPoly exp_weight(const Weight& mu);
CharacterPoly operator+(const CharacterPoly& a, const CharacterPoly& b);
CharacterPoly operator-(const CharacterPoly& a, const CharacterPoly& b);
CharacterPoly operator*(Int c, const CharacterPoly& a);
CharacterPoly operator*(const CharacterPoly& a, const CharacterPoly& b);
bool operator==(const CharacterPoly& a, const CharacterPoly& b);

// Integer combination of irreducible K-types E_tau, keyed by dominant
// highest weight.
struct VirtualKModule {
    std::map<Weight, Int> terms;

    void add(const Weight& tau, Int m);
    Int coeff(const Weight& tau) const;
    bool is_zero() const { return terms.empty(); }
};

VirtualKModule operator+(const VirtualKModule& a, const VirtualKModule& b);
VirtualKModule operator-(const VirtualKModule& a, const VirtualKModule& b);
VirtualKModule operator*(Int c, const VirtualKModule& a);
bool operator==(const VirtualKModule& a, const VirtualKModule& b);

// Character of one spin module of s: 2^floor(z/2) times the product of
// (e^{mu/2} + e^{-mu/2}) over a positive half of the nonzero s-weights,
// z the zero-weight multiplicity.
CharacterPoly spin_character(const PairDatum& pair);

// Equal-rank split S = S+ ⊕ S-. The difference character is the noncompact
// Weyl-denominator product, oriented so the top term e^{rho(s)} has
// coefficient +1.
std::pair<CharacterPoly, CharacterPoly> spin_plus_minus(const PairDatum& pair);

// Inverse of the Weyl character formula by rho_k-shifted symmetrization:
// each e^mu contributes sign(w) E_{w(mu+rho_k)-rho_k}, singular shifts drop.
VirtualKModule decompose_into_ktypes(const CharacterPoly& chi, const PairDatum& pair);

// Full torus character of E_tau via the Weyl character formula, computed by
// exact division of the numerator by the denominator.
CharacterPoly k_character(const Weight& tau, const PairDatum& pair);

CharacterPoly character_of(const VirtualKModule& v, const PairDatum& pair);

// Multiplicity of E_{rho_k} in the spin module of a complex pair.
Int spin_rho_multiplicity(const PairDatum& pair);

// Dominant representative of mu + w0(nu): the minimal-norm constituent of
// the tensor product E_mu ⊗ E_nu.
Weight prv_component(const Weight& mu, const Weight& nu, const PairDatum& pair);

// Tensor product decomposition by the Klimyk rule.
VirtualKModule tensor_decompose(const Weight& mu, const Weight& nu, const PairDatum& pair);

// Weyl dimension of E_tau, as a cross-check oracle for k_character.
Rational weyl_dimension(const Weight& tau, const RootDatum& datum);

}  // namespace dirackit
