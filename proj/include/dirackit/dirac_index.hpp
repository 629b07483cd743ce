#pragma once

#include <complex>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dirackit/characters.hpp"
#include "dirackit/lattice.hpp"
#include "dirackit/realform.hpp"

namespace dirackit {

// Standard module of a complex group with parameter (lambda, w lambda),
// lambda in t-coordinates, dominant with 2*lambda regular.
struct StandardParamComplex {
    Weight lambda;
    WeylElement w;
    int epsilon = 1;
};

enum class CaseTag { case1, case2, case3 };

std::string case_tag_name(CaseTag tag);

// Standard module A_b(lambda) of a real group: a theta-stable Cartan class,
// a positive system b = h + u given by w_b (Delta(u) = w_b applied to the
// standard positives), and the exact part of lambda in ambient coordinates.
// The case tag is the caller's declaration for the twisted trichotomy; it is
// validated against the computable necessary conditions.
struct StandardParamReal {
    CartanClass cartan;
    WeylElement positive_system;
    Weight lambda;
    int epsilon = 1;
    CaseTag case_tag = CaseTag::case1;
};

using AnyStandardParam = std::variant<StandardParamComplex, StandardParamReal>;

enum class IndexMode { ordinary, twisted };

// Delta(u) for the positive system w_b.
std::vector<Weight> positive_system_roots(const PairDatum& pair, const WeylElement& w_b);

// Half sum of Delta(u), in ambient coordinates.
Weight rho_u(const PairDatum& pair, const WeylElement& w_b);

// Whether theta_h maps Delta(u) onto itself.
bool positive_system_theta_stable(const PairDatum& pair, const CartanClass& cartan,
                                  const WeylElement& w_b);

// Half sum of the t-weights of u cap s, for a theta_h-stable b: each
// theta-orbit pair of roots contributes its restriction once, and each
// theta-fixed root contributes when its root space lies in s.
Weight rho_u_cap_s_t(const PairDatum& pair, const CartanClass& cartan,
                     const WeylElement& w_b);

Int dim_u_cap_s(const PairDatum& pair, const CartanClass& cartan, const WeylElement& w_b);

// Validates Weyl membership of the positive system, the weakly-good range
// inequality for lambda, and consistency of the declared case tag.
void validate_real_param(const PairDatum& pair, const StandardParamReal& p);

// Dominant ambient representative of the parameter's infinitesimal character.
Weight infinitesimal_char(const PairDatum& pair, const AnyStandardParam& param);

// Index formulas for standard modules.
VirtualKModule index_standard_complex(const PairDatum& pair, const StandardParamComplex& p);
VirtualKModule index_standard_real(const PairDatum& pair, const StandardParamReal& p);
VirtualKModule twisted_index_standard_real(const PairDatum& pair, const StandardParamReal& p);

// Mode dispatch for one parameter; ordinary mode needs an equal-rank pair.
VirtualKModule index_param(const PairDatum& pair, const AnyStandardParam& param,
                           IndexMode mode);

// Integer-linear extension over a combination with one shared infinitesimal
// character.
VirtualKModule index_virtual(const PairDatum& pair,
                             const std::vector<std::pair<Int, AnyStandardParam>>& combination,
                             IndexMode mode);

struct VoganReport {
    bool ok = true;
    std::vector<Weight> violations;  // constituents tau with tau+rho_k outside W.Lambda
};

// Checks that every constituent tau of v satisfies tau + rho_k in W_g.Lambda,
// after zero-extension of t-functionals over a.
VoganReport vogan_check(const VirtualKModule& v, const Weight& chi_ambient,
                        const PairDatum& pair);

// |tau + rho_k|^2 - |Lambda|^2, the Parthasarathy eigenvalue on the E_tau
// isotypic component.
Rational d2_eigenvalue(const Weight& tau, const Weight& chi_ambient, const PairDatum& pair);

// Counts solutions (w1, sigma, mu_minus) of w1 tau = sigma rho - rho_k +
// mu_minus over sigma in W^1 and mu_minus in the given multiplicity-free
// spectrum, split by det(sigma). Zero when the tau eigenvalue is nonzero.
std::pair<Int, Int> hd_multiplicity(const Weight& tau,
                                    const std::vector<std::pair<Weight, Int>>& k_spectrum,
                                    const Weight& chi_ambient, const PairDatum& pair);

struct EllipticCharacter {
    CharacterPoly numerator;
    CharacterPoly denominator;
};

// Character of v on the regular elliptic set: numerator over the noncompact
// Weyl denominator (ordinary) or over ch(S) (twisted).
EllipticCharacter elliptic_character(const VirtualKModule& v, const PairDatum& pair,
                                     IndexMode mode);

// Value of a character polynomial at the torus point with the given angles,
// one angle per t-coordinate: e^mu evaluates to exp(i sum mu_j angle_j).
std::complex<double> evaluate_character(const CharacterPoly& p,
                                        const std::vector<double>& angles);

// Numerator value over denominator value; near-zero denominators raise a
// singular-point error.
std::complex<double> elliptic_value(const VirtualKModule& v, const PairDatum& pair,
                                    IndexMode mode, const std::vector<double>& angles);

}  // namespace dirackit
