#include "dirackit/characters.hpp"

#include <algorithm>

namespace dirackit {

void CharacterPoly::add(const Weight& w, Int m) {
    if (m == 0) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, m);
    } else {
        it->second += m;
        if (it->second == 0) terms.erase(it);
    }
}

Int CharacterPoly::coeff(const Weight& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? 0 : it->second;
}

Int CharacterPoly::dimension() const {
    Int total = 0;
    for (const auto& [w, m] : terms) total += m;
    return total;
}

CharacterPoly exp_weight(const Weight& mu) {
    CharacterPoly p;
    p.add(mu, 1);
    return p;
}

CharacterPoly operator+(const CharacterPoly& a, const CharacterPoly& b) {
    CharacterPoly out = a;
    for (const auto& [w, m] : b.terms) out.add(w, m);
    return out;
}

CharacterPoly operator-(const CharacterPoly& a, const CharacterPoly& b) {
    CharacterPoly out = a;
    for (const auto& [w, m] : b.terms) out.add(w, -m);
    return out;
}

CharacterPoly operator*(Int c, const CharacterPoly& a) {
    CharacterPoly out;
    if (c == 0) return out;
    for (const auto& [w, m] : a.terms) out.add(w, c * m);
    return out;
}

CharacterPoly operator*(const CharacterPoly& a, const CharacterPoly& b) {
    CharacterPoly out;
    for (const auto& [wa, ma] : a.terms) {
        for (const auto& [wb, mb] : b.terms) {
            out.add(wa + wb, ma * mb);
            if (static_cast<long long>(out.terms.size()) > kCharacterTermCap) {
                throw ResourceError("character product support exceeds the term cap");
            }
        }
    }
    return out;
}

bool operator==(const CharacterPoly& a, const CharacterPoly& b) {
    return a.terms == b.terms;
}

void VirtualKModule::add(const Weight& tau, Int m) {
    if (m == 0) return;
    auto it = terms.find(tau);
    if (it == terms.end()) {
        terms.emplace(tau, m);
    } else {
        it->second += m;
        if (it->second == 0) terms.erase(it);
    }
}

Int VirtualKModule::coeff(const Weight& tau) const {
    auto it = terms.find(tau);
    return it == terms.end() ? 0 : it->second;
}

VirtualKModule operator+(const VirtualKModule& a, const VirtualKModule& b) {
    VirtualKModule out = a;
    for (const auto& [w, m] : b.terms) out.add(w, m);
    return out;
}

VirtualKModule operator-(const VirtualKModule& a, const VirtualKModule& b) {
    VirtualKModule out = a;
    for (const auto& [w, m] : b.terms) out.add(w, -m);
    return out;
}

VirtualKModule operator*(Int c, const VirtualKModule& a) {
    VirtualKModule out;
    if (c == 0) return out;
    for (const auto& [w, m] : a.terms) out.add(w, c * m);
    return out;
}

bool operator==(const VirtualKModule& a, const VirtualKModule& b) {
    return a.terms == b.terms;
}

namespace {

bool lex_positive(const Weight& w) {
    for (int i = 0; i < w.rank(); ++i) {
        if (w.c2[i] != 0) return w.c2[i] > 0;
    }
    return false;
}

Weight half(const Weight& w) {
    IVec v = w.c2;
    for (int i = 0; i < v.size(); ++i) {
        if (v[i] % 2 != 0) {
            throw ConfigError("weight " + weight_string(w) +
                              " cannot be halved on this lattice");
        }
        v[i] /= 2;
    }
    return Weight(std::move(v));
}

CharacterPoly halve_coefficients(const CharacterPoly& p) {
    CharacterPoly out;
    for (const auto& [w, m] : p.terms) {
        if (m % 2 != 0) throw ConfigError("character is not divisible by two");
        out.add(w, m / 2);
    }
    return out;
}

}  // namespace

CharacterPoly spin_character(const PairDatum& pair) {
    CharacterPoly result = exp_weight(zero_weight(pair.t_rank));
    Int zeros = 0;
    for (const auto& [mu, mult] : pair.s_weights) {
        if (mu.is_zero()) {
            zeros += mult;
            continue;
        }
        if (!lex_positive(mu)) continue;
        bool partnered = false;
        for (const auto& [nu, mult2] : pair.s_weights) {
            if (nu == -mu) {
                if (mult2 != mult) {
                    throw ConfigError("s-weights are not symmetric under negation");
                }
                partnered = true;
                break;
            }
        }
        if (!partnered) throw ConfigError("s-weight lacks its negative");
        Weight h = half(mu);
        CharacterPoly factor = exp_weight(h) + exp_weight(-h);
        for (Int i = 0; i < mult; ++i) result = result * factor;
    }
    Int scale = 1;
    for (Int i = 0; i < zeros / 2; ++i) scale *= 2;
    return scale * result;
}

std::pair<CharacterPoly, CharacterPoly> spin_plus_minus(const PairDatum& pair) {
    if (pair.tag != FamilyTag::equal_rank) {
        throw UsageError("the even/odd spin split needs an equal-rank pair");
    }
    CharacterPoly diff = exp_weight(zero_weight(pair.t_rank));
    for (const Weight& beta : noncompact_positive(pair)) {
        Weight h = half(beta);
        diff = diff * (exp_weight(h) - exp_weight(-h));
    }
    CharacterPoly sum = spin_character(pair);
    CharacterPoly plus = halve_coefficients(sum + diff);
    CharacterPoly minus = halve_coefficients(sum - diff);
    return {std::move(plus), std::move(minus)};
}

VirtualKModule decompose_into_ktypes(const CharacterPoly& chi, const PairDatum& pair) {
    VirtualKModule out;
    const Weight& rho_k = pair.k.rho;
    for (const auto& [mu, m] : chi.terms) {
        DominantRep d = dominant_rep(mu + rho_k, pair.k);
        if (d.singular) continue;
        Int sign = (d.w.length % 2 == 0) ? 1 : -1;
        out.add(d.dominant - rho_k, sign * m);
    }
    return out;
}

namespace {

// Exact division in the Laurent ring, leading terms taken in lex order.
// Terminates in |support(quotient)| steps when the division is exact; a
// step cap guards against non-character input.
CharacterPoly divide_exact(CharacterPoly numerator, const CharacterPoly& denominator) {
    if (denominator.is_zero()) throw UsageError("division by the zero character");
    const auto lead = [](const CharacterPoly& p) { return std::prev(p.terms.end()); };
    auto dlead = lead(denominator);
    CharacterPoly quotient;
    long long steps = 0;
    while (!numerator.is_zero()) {
        if (++steps > kCharacterTermCap) {
            throw ConfigError("character division does not terminate");
        }
        auto nlead = lead(numerator);
        if (nlead->second % dlead->second != 0) {
            throw ConfigError("character division is not exact");
        }
        Weight shift = nlead->first - dlead->first;
        Int c = nlead->second / dlead->second;
        quotient.add(shift, c);
        for (const auto& [w, m] : denominator.terms) {
            numerator.add(w + shift, -c * m);
        }
    }
    return quotient;
}

}  // namespace

CharacterPoly k_character(const Weight& tau, const PairDatum& pair) {
    if (tau.rank() != pair.t_rank) throw ShapeError("highest weight is not in t-coordinates");
    if (!is_dominant(tau, pair.k)) {
        throw UsageError("highest weight " + weight_string(tau) + " is not dominant");
    }
    const Weight& rho_k = pair.k.rho;
    CharacterPoly numerator;
    CharacterPoly denominator;
    for (const WeylElement& w : weyl_k(pair)) {
        Int sign = (w.length % 2 == 0) ? 1 : -1;
        numerator.add(apply(w, tau + rho_k), sign);
        denominator.add(apply(w, rho_k), sign);
    }
    return divide_exact(std::move(numerator), denominator);
}

CharacterPoly character_of(const VirtualKModule& v, const PairDatum& pair) {
    CharacterPoly out;
    for (const auto& [tau, m] : v.terms) {
        out = out + m * k_character(tau, pair);
    }
    return out;
}

Int spin_rho_multiplicity(const PairDatum& pair) {
    if (pair.tag != FamilyTag::complex_pair) {
        throw UsageError("the rho-multiplicity of the spin module needs a complex pair");
    }
    VirtualKModule spin = decompose_into_ktypes(spin_character(pair), pair);
    return spin.coeff(pair.k.rho);
}

Weight prv_component(const Weight& mu, const Weight& nu, const PairDatum& pair) {
    if (!is_dominant(mu, pair.k) || !is_dominant(nu, pair.k)) {
        throw UsageError("PRV components are defined for dominant weights");
    }
    return dominant_rep(mu + apply(longest_k(pair), nu), pair.k).dominant;
}

VirtualKModule tensor_decompose(const Weight& mu, const Weight& nu, const PairDatum& pair) {
    if (!is_dominant(mu, pair.k) || !is_dominant(nu, pair.k)) {
        throw UsageError("tensor decomposition is defined for dominant weights");
    }
    return decompose_into_ktypes(exp_weight(mu) * k_character(nu, pair), pair);
}

Rational weyl_dimension(const Weight& tau, const RootDatum& datum) {
    Rational dim(1);
    for (const Weight& alpha : datum.positive_roots) {
        dim = dim * (inner(tau + datum.rho, alpha) / inner(datum.rho, alpha));
    }
    return dim;
}

}  // namespace dirackit
