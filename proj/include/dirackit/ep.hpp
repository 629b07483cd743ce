#pragma once

#include <utility>
#include <vector>

#include "dirackit/characters.hpp"
#include "dirackit/dirac_index.hpp"
#include "dirackit/lattice.hpp"
#include "dirackit/realform.hpp"

namespace dirackit {

// Bilinear Hom pairing on virtual modules: sum over shared weights of the
// product of multiplicities. Can be negative.
Int hom_dim(const VirtualKModule& v, const VirtualKModule& w);

// Pairing value plus the batch-mode diagnostic: a mismatch of infinitesimal
// characters yields value 0 with the flag set instead of an error, so EP
// tables over mixed parameter lists stay total.
struct EpResult {
    Int value = 0;
    bool infinitesimal_mismatch = false;
};

// 1 when dim s is even, 2 when dim s is odd.
Int twisted_ep_constant(const PairDatum& pair);

// Euler-Poincare pairing of two integer combinations of standard parameters,
// computed as hom_dim of their indices. Ordinary mode requires an equal-rank
// pair; twisted mode additionally multiplies by twisted_ep_constant. Every
// parameter across both combinations must carry one shared infinitesimal
// character, else the result is the mismatch diagnostic.
EpResult ep_virtual(const PairDatum& pair,
                    const std::vector<std::pair<Int, AnyStandardParam>>& x,
                    const std::vector<std::pair<Int, AnyStandardParam>>& y,
                    IndexMode mode);

// Single-parameter conveniences.
EpResult ep_pair(const PairDatum& pair, const AnyStandardParam& x,
                 const AnyStandardParam& y);
EpResult ep_twisted(const PairDatum& pair, const AnyStandardParam& x,
                    const AnyStandardParam& y);

// Euler characteristic of Hom over the exterior algebra of a split factor of
// dimension a_dim: the alternating sum of binomial coefficients times the
// torus Hom pairing. Identically zero once a_dim > 0.
Int ht_ep_vanishing(int a_dim, const VirtualKModule& v, const VirtualKModule& w);

struct ExtEntry {
    int degree = 0;
    Int dimension = 0;
};

// Per-degree Ext dimensions between the standard module of p (theta-stable b
// on the compact Cartan of an equal-rank pair) and the finite-dimensional
// module of highest weight y, via nilradical cohomology: the shifted
// parameter -(lambda + rho(u)) is matched against the dot orbit of y, and a
// hit in W_g.(y + rho_g) lands in degree #{alpha in Delta(u): <xi,alpha> < 0}
// minus #(compact roots of Delta(u)). Degrees run over [0, dim(u cap s)].
std::vector<ExtEntry> ext_std_vs_findim(const PairDatum& pair, const StandardParamReal& p,
                                        const Weight& y);

// Alternating sum of an Ext table.
Int ext_alternating_sum(const std::vector<ExtEntry>& table);

}  // namespace dirackit
