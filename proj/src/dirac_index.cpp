#include "dirackit/dirac_index.hpp"

#include <algorithm>
#include <cmath>

namespace dirackit {

std::string case_tag_name(CaseTag tag) {
    switch (tag) {
        case CaseTag::case1: return "case1";
        case CaseTag::case2: return "case2";
        case CaseTag::case3: return "case3";
    }
    throw UsageError("unknown case tag");
}

std::vector<Weight> positive_system_roots(const PairDatum& pair, const WeylElement& w_b) {
    std::vector<Weight> out;
    out.reserve(pair.g.positive_roots.size());
    for (const Weight& beta : pair.g.positive_roots) {
        out.push_back(apply(w_b, beta));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Weight rho_u(const PairDatum& pair, const WeylElement& w_b) {
    return apply(w_b, pair.g.rho);
}

bool positive_system_theta_stable(const PairDatum& pair, const CartanClass& cartan,
                                  const WeylElement& w_b) {
    // theta_h(w_b R+) = w_b R+ iff w_b^{-1} theta_h w_b maps R+ to R+.
    IMat conj = w_b.mat.transpose() * cartan.theta_h * w_b.mat;
    for (const Weight& beta : pair.g.positive_roots) {
        if (!pair.g.is_positive_root(apply(conj, beta))) return false;
    }
    return true;
}

namespace {

// Shared walk over the theta-orbits of Delta(u). Calls back once per orbit
// pair and once per fixed root whose root space lies in s.
template <typename PairFn, typename FixedFn>
void scan_u_orbits(const PairDatum& pair, const CartanClass& cartan,
                   const WeylElement& w_b, PairFn on_pair, FixedFn on_fixed_s) {
    std::vector<Weight> delta_u = positive_system_roots(pair, w_b);
    auto in_u = [&](const Weight& w) {
        return std::binary_search(delta_u.begin(), delta_u.end(), w);
    };
    for (const Weight& beta : delta_u) {
        Weight image = apply(cartan.theta_h, beta);
        if (image == beta) {
            bool in_s = false;
            switch (pair.tag) {
                case FamilyTag::equal_rank:
                    in_s = !is_compact_root(pair, beta);
                    break;
                case FamilyTag::gl_real:
                    // theta sends the root vector of a theta-fixed root
                    // e_i - e_{m+1-i} to its negative, so the space is in s.
                    in_s = true;
                    break;
                case FamilyTag::complex_pair:
                    throw ConfigError("the factor swap cannot fix a root");
            }
            if (in_s) on_fixed_s(beta);
        } else {
            if (!in_u(image)) {
                throw ConfigError("theta does not stabilize the positive system");
            }
            if (beta < image) on_pair(beta);
        }
    }
}

}  // namespace

Weight rho_u_cap_s_t(const PairDatum& pair, const CartanClass& cartan,
                     const WeylElement& w_b) {
    IVec sum = IVec::Zero(pair.t_rank);
    auto accumulate = [&](const Weight& beta) { sum += restrict_to_t(pair, beta).c2; };
    scan_u_orbits(pair, cartan, w_b, accumulate, accumulate);
    for (int i = 0; i < pair.t_rank; ++i) {
        if (sum[i] % 2 != 0) {
            throw ConfigError("the weights of u cap s do not sum to a lattice element");
        }
        sum[i] /= 2;
    }
    return Weight(std::move(sum));
}

Int dim_u_cap_s(const PairDatum& pair, const CartanClass& cartan, const WeylElement& w_b) {
    Int dim = 0;
    scan_u_orbits(
        pair, cartan, w_b, [&](const Weight&) { ++dim; }, [&](const Weight&) { ++dim; });
    return dim;
}

void validate_real_param(const PairDatum& pair, const StandardParamReal& p) {
    if (p.lambda.rank() != pair.ambient_rank()) {
        throw ShapeError("lambda is not in ambient coordinates");
    }
    if (p.cartan.theta_h.rows() != pair.ambient_rank()) {
        throw ShapeError("Cartan class does not act on the ambient space");
    }
    if (p.epsilon != 1 && p.epsilon != -1) throw UsageError("epsilon must be +-1");
    weyl_from_matrix(p.positive_system.mat, pair.g);

    Weight shift = p.lambda + rho_u(pair, p.positive_system);
    for (const Weight& beta : pair.g.positive_roots) {
        Weight alpha = apply(p.positive_system, beta);
        if (inner(shift, alpha).sign() < 0) {
            throw UsageError("lambda lies outside the weakly good range for b");
        }
    }

    bool stable = positive_system_theta_stable(pair, p.cartan, p.positive_system);
    bool fixed = apply(p.cartan.theta_h, p.lambda) == p.lambda;
    switch (p.case_tag) {
        case CaseTag::case1:
            if (!stable || !fixed) {
                throw UsageError("case1 declared, but b or lambda is not theta-fixed");
            }
            break;
        case CaseTag::case2:
            if (stable && fixed) {
                throw UsageError("case2 declared for a parameter that satisfies case1");
            }
            break;
        case CaseTag::case3:
            if (fixed) {
                throw UsageError("case3 declared, but theta fixes lambda");
            }
            break;
    }
}

Weight infinitesimal_char(const PairDatum& pair, const AnyStandardParam& param) {
    if (const auto* c = std::get_if<StandardParamComplex>(&param)) {
        if (pair.tag != FamilyTag::complex_pair) {
            throw UsageError("complex parameters need a complex pair");
        }
        if (c->lambda.rank() != pair.rank) {
            throw ShapeError("lambda is not in t-coordinates");
        }
        Weight left = dominant_rep(c->lambda, pair.k).dominant;
        Weight right = dominant_rep(apply(c->w, c->lambda), pair.k).dominant;
        IVec v(2 * pair.rank);
        v.head(pair.rank) = left.c2;
        v.tail(pair.rank) = right.c2;
        return Weight(std::move(v));
    }
    const auto& r = std::get<StandardParamReal>(param);
    validate_real_param(pair, r);
    return dominant_rep(r.lambda + rho_u(pair, r.positive_system), pair.g).dominant;
}

VirtualKModule index_standard_complex(const PairDatum& pair, const StandardParamComplex& p) {
    if (pair.tag != FamilyTag::complex_pair) {
        throw UsageError("this index formula is for complex pairs");
    }
    if (p.lambda.rank() != pair.rank) throw ShapeError("lambda is not in t-coordinates");
    if (p.epsilon != 1 && p.epsilon != -1) throw UsageError("epsilon must be +-1");
    WeylElement w = weyl_from_matrix(p.w.mat, pair.k);
    if (!w.is_involution()) throw UsageError("the parameter twist w must be an involution");

    Weight two_lambda = 2 * p.lambda;
    DominantRep dom = dominant_rep(two_lambda, pair.k);
    if (dom.singular) {
        throw UsageError("2 lambda is singular; translate the parameter first");
    }
    if (!dom.w.is_identity()) {
        throw UsageError("normalize lambda so that 2 lambda is dominant");
    }

    VirtualKModule out;
    if (!w.is_identity()) return out;
    Int r = spin_rho_multiplicity(pair);
    out.add(two_lambda - pair.k.rho, p.epsilon * r);
    return out;
}

namespace {

Weight lowest_ktype(const PairDatum& pair, const StandardParamReal& p) {
    Weight tau = restrict_to_t(pair, p.lambda) + rho_u_cap_s_t(pair, p.cartan, p.positive_system);
    if (!is_dominant(tau, pair.k)) {
        throw ConfigError("lowest K-type " + weight_string(tau) + " is not dominant");
    }
    return tau;
}

}  // namespace

VirtualKModule index_standard_real(const PairDatum& pair, const StandardParamReal& p) {
    if (pair.tag != FamilyTag::equal_rank) {
        throw UsageError("the ordinary index needs an equal-rank pair");
    }
    validate_real_param(pair, p);
    VirtualKModule out;
    if (!positive_system_theta_stable(pair, p.cartan, p.positive_system)) return out;
    out.add(lowest_ktype(pair, p), 1);
    return out;
}

VirtualKModule twisted_index_standard_real(const PairDatum& pair, const StandardParamReal& p) {
    validate_real_param(pair, p);
    VirtualKModule out;
    if (p.case_tag != CaseTag::case1) return out;
    Int factor = 1;
    for (int i = 0; i < p.cartan.a_dim / 2; ++i) factor *= 2;
    out.add(lowest_ktype(pair, p), p.epsilon * factor);
    return out;
}

VirtualKModule index_param(const PairDatum& pair, const AnyStandardParam& param,
                           IndexMode mode) {
    if (mode == IndexMode::ordinary) {
        const auto* r = std::get_if<StandardParamReal>(&param);
        if (r == nullptr || pair.tag != FamilyTag::equal_rank) {
            throw UsageError(
                "the ordinary index is trivial off equal-rank pairs; use twisted mode");
        }
        return index_standard_real(pair, *r);
    }
    if (const auto* c = std::get_if<StandardParamComplex>(&param)) {
        return index_standard_complex(pair, *c);
    }
    return twisted_index_standard_real(pair, std::get<StandardParamReal>(param));
}

VirtualKModule index_virtual(const PairDatum& pair,
                             const std::vector<std::pair<Int, AnyStandardParam>>& combination,
                             IndexMode mode) {
    VirtualKModule out;
    bool have_chi = false;
    Weight chi;
    for (const auto& [coeff, param] : combination) {
        Weight this_chi = infinitesimal_char(pair, param);
        if (!have_chi) {
            chi = this_chi;
            have_chi = true;
        } else if (!(chi == this_chi)) {
            throw UsageError("the combination mixes infinitesimal characters " +
                             weight_string(chi) + " and " + weight_string(this_chi));
        }
        out = out + coeff * index_param(pair, param, mode);
    }
    return out;
}

VoganReport vogan_check(const VirtualKModule& v, const Weight& chi_ambient,
                        const PairDatum& pair) {
    Weight target = dominant_rep(Weight(ambient4(pair, chi_ambient)), pair.g).dominant;
    VoganReport report;
    for (const auto& [tau, m] : v.terms) {
        Weight lifted(embed4_t(pair, tau + pair.k.rho));
        if (!(dominant_rep(lifted, pair.g).dominant == target)) {
            report.ok = false;
            report.violations.push_back(tau);
        }
    }
    return report;
}

Rational d2_eigenvalue(const Weight& tau, const Weight& chi_ambient, const PairDatum& pair) {
    if (!is_dominant(tau, pair.k)) throw UsageError("tau must be dominant");
    IVec lifted = embed4_t(pair, tau + pair.k.rho);
    IVec chi = ambient4(pair, chi_ambient);
    // Both vectors carry 4x the real coefficients, so norms pick up 16.
    return Rational(lifted.dot(lifted) - chi.dot(chi), 16);
}

std::pair<Int, Int> hd_multiplicity(const Weight& tau,
                                    const std::vector<std::pair<Weight, Int>>& k_spectrum,
                                    const Weight& chi_ambient, const PairDatum& pair) {
    if (pair.tag != FamilyTag::equal_rank) {
        throw UsageError("the solution-count rule applies to equal-rank pairs");
    }
    if (!is_dominant(tau, pair.k)) throw UsageError("tau must be dominant");
    for (const auto& [mu, m] : k_spectrum) {
        if (m != 1) throw UsageError("the spectrum must be multiplicity-free");
    }
    if (!d2_eigenvalue(tau, chi_ambient, pair).is_zero()) return {0, 0};

    Int plus = 0;
    Int minus = 0;
    for (const WeylElement& sigma : w1_coset_reps(pair)) {
        Weight base = apply(sigma, pair.g.rho) - pair.k.rho;
        for (const auto& [mu, m] : k_spectrum) {
            if (dominant_rep(base + mu, pair.k).dominant == tau) {
                if (sigma.length % 2 == 0) {
                    ++plus;
                } else {
                    ++minus;
                }
            }
        }
    }
    return {plus, minus};
}

EllipticCharacter elliptic_character(const VirtualKModule& v, const PairDatum& pair,
                                     IndexMode mode) {
    EllipticCharacter out;
    out.numerator = character_of(v, pair);
    if (mode == IndexMode::ordinary) {
        auto [plus, minus] = spin_plus_minus(pair);  // equal-rank gate lives here
        out.denominator = plus - minus;
    } else {
        out.denominator = spin_character(pair);
    }
    return out;
}

std::complex<double> evaluate_character(const CharacterPoly& p,
                                        const std::vector<double>& angles) {
    std::complex<double> total = 0.0;
    for (const auto& [w, m] : p.terms) {
        if (w.rank() != static_cast<int>(angles.size())) {
            throw ShapeError("need one angle per t-coordinate");
        }
        double phase = 0.0;
        for (int i = 0; i < w.rank(); ++i) {
            phase += 0.5 * static_cast<double>(w.c2[i]) * angles[i];
        }
        total += static_cast<double>(m) * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return total;
}

std::complex<double> elliptic_value(const VirtualKModule& v, const PairDatum& pair,
                                    IndexMode mode, const std::vector<double>& angles) {
    if (static_cast<int>(angles.size()) != pair.t_rank) {
        throw ShapeError("need one angle per t-coordinate");
    }
    EllipticCharacter ch = elliptic_character(v, pair, mode);
    std::complex<double> den = evaluate_character(ch.denominator, angles);
    if (std::abs(den) < 1e-9) {
        throw SingularPointError("the chosen torus point is not regular");
    }
    return evaluate_character(ch.numerator, angles) / den;
}

}  // namespace dirackit
