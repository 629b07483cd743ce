#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <utility>

#include "dirackit/characters.hpp"

using namespace dirackit;

namespace {

PairDatum su2_pair() { return build_complex_pair('C', 1); }

PairDatum sp4_pair() {
    return build_equal_rank_pair('C', 2, {weight_from_ints({1, -1})});
}

VirtualKModule ktype(const Weight& tau) {
    VirtualKModule v;
    v.add(tau, 1);
    return v;
}

}  // namespace

TEST_CASE("character polynomials are exact multiset arithmetic") {
    Weight a = weight_from_ints({1, 0});
    Weight b = weight_from_ints({0, 1});
    CharacterPoly p = exp_weight(a) + exp_weight(b);
    CHECK(p.dimension() == 2);
    CHECK(p.coeff(a) == 1);
    CHECK(p.coeff(weight_from_ints({1, 1})) == 0);

    // Cancelling terms erase their keys outright.
    CharacterPoly q = p - exp_weight(a);
    CHECK(q.terms.size() == 1);
    CHECK((q - exp_weight(b)).is_zero());

    CHECK((2 * p).dimension() == 4);
    CHECK((0 * p).is_zero());

    // (e^a + e^b)^2 = e^2a + 2 e^{a+b} + e^2b.
    CharacterPoly sq = p * p;
    CHECK(sq.terms.size() == 3);
    CHECK(sq.coeff(weight_from_ints({2, 0})) == 1);
    CHECK(sq.coeff(weight_from_ints({1, 1})) == 2);
    CHECK(sq.dimension() == 4);

    VirtualKModule v = ktype(a) - ktype(b);
    CHECK(v.coeff(a) == 1);
    CHECK(v.coeff(b) == -1);
    CHECK((v + ktype(b) - ktype(a)).is_zero());
    CHECK(2 * v == v + v);
}

TEST_CASE("oversized products stop at the term cap") {
    CharacterPoly rows;
    CharacterPoly cols;
    for (Int i = 0; i < 2049; ++i) {
        rows.add(weight_from_doubled({i, 0}), 1);
        cols.add(weight_from_doubled({0, i}), 1);
    }
    // The support of the product is a 2049 x 2049 grid, one past the cap.
    CHECK_THROWS_AS(rows * cols, ResourceError);
}

TEST_CASE("spin characters have the right dimensions") {
    CHECK(spin_character(su2_pair()).dimension() == 2);
    CHECK(spin_character(build_complex_pair('A', 3)).dimension() == 16);
    CHECK(spin_character(sp4_pair()).dimension() == 8);
    CHECK(spin_character(build_gl_real_pair(3)).dimension() == 8);
    CHECK(spin_character(build_gl_real_pair(4)).dimension() == 32);
}

TEST_CASE("the even/odd spin split for equal-rank pairs") {
    PairDatum sl2r = build_equal_rank_pair('C', 1, {});
    auto [plus, minus] = spin_plus_minus(sl2r);
    CHECK(plus == exp_weight(weight_from_ints({1})));
    CHECK(minus == exp_weight(weight_from_ints({-1})));

    PairDatum sp4 = sp4_pair();
    auto [sp, sm] = spin_plus_minus(sp4);
    CHECK(sp.dimension() == 4);
    CHECK(sm.dimension() == 4);
    CHECK(sp + sm == spin_character(sp4));
    CharacterPoly diff = sp - sm;
    CHECK(diff.terms.size() == 8);
    // Top term e^{rho(s)} with rho(s) = (3/2, 3/2), oriented to +1.
    CHECK(diff.coeff(weight_from_doubled({3, 3})) == 1);
    CHECK(diff.coeff(weight_from_doubled({-3, -3})) == -1);

    CHECK_THROWS_AS(spin_plus_minus(su2_pair()), UsageError);
    CHECK_THROWS_AS(spin_plus_minus(build_gl_real_pair(4)), UsageError);
}

TEST_CASE("k-type decomposition by shifted symmetrization") {
    PairDatum su2 = su2_pair();
    // e^{-3u}: the rho-shift lands on -2u, reflecting to 2u with sign -1,
    // so the symmetrization reads -E_u.
    VirtualKModule v = decompose_into_ktypes(exp_weight(weight_from_ints({-3})), su2);
    CHECK(v == (-1) * ktype(weight_from_ints({1})));

    // e^{-u} shifts onto the wall and drops.
    CHECK(decompose_into_ktypes(exp_weight(weight_from_ints({-1})), su2).is_zero());

    // SU(2) character by hand.
    CharacterPoly chi = exp_weight(weight_from_ints({2})) +
                        exp_weight(weight_from_ints({0})) +
                        exp_weight(weight_from_ints({-2}));
    CHECK(decompose_into_ktypes(chi, su2) == ktype(weight_from_ints({2})));
}

TEST_CASE("the Weyl character formula round trips") {
    PairDatum su2 = su2_pair();
    CharacterPoly two_dim = k_character(weight_from_ints({1}), su2);
    CHECK(two_dim == exp_weight(weight_from_ints({1})) +
                         exp_weight(weight_from_ints({-1})));
    for (Int n : {0, 1, 4}) {
        Weight tau = weight_from_ints({n});
        CharacterPoly chi = k_character(tau, su2);
        CHECK(chi.dimension() == n + 1);
        CHECK(decompose_into_ktypes(chi, su2) == ktype(tau));
    }

    PairDatum sp4 = sp4_pair();
    for (const Weight& tau : {weight_from_doubled({2, 0}),
                              weight_from_doubled({3, -1}),
                              weight_from_doubled({1, 1})}) {
        CHECK(decompose_into_ktypes(k_character(tau, sp4), sp4) == ktype(tau));
    }

    // gl(5,R): K-types of B2 flavor on the rank-2 small torus.
    PairDatum gl5 = build_gl_real_pair(5);
    for (const Weight& tau : {weight_from_ints({1, 0}), weight_from_ints({2, 1})}) {
        CharacterPoly chi = k_character(tau, gl5);
        CHECK(decompose_into_ktypes(chi, gl5) == ktype(tau));
        CHECK(Rational(chi.dimension()) == weyl_dimension(tau, gl5.k));
    }
}

TEST_CASE("character linearity over virtual modules") {
    PairDatum su2 = su2_pair();
    VirtualKModule v = ktype(weight_from_ints({2})) +
                       2 * ktype(weight_from_ints({1})) -
                       ktype(weight_from_ints({0}));
    CharacterPoly expected = k_character(weight_from_ints({2}), su2) +
                             2 * k_character(weight_from_ints({1}), su2) -
                             k_character(weight_from_ints({0}), su2);
    CHECK(character_of(v, su2) == expected);
    CHECK(character_of(VirtualKModule{}, su2).is_zero());
}

TEST_CASE("Weyl dimensions") {
    RootDatum b2 = build_root_datum('B', 2);
    CHECK(weyl_dimension(weight_from_ints({1, 0}), b2) == Rational(5));
    CHECK(weyl_dimension(zero_weight(2), b2) == Rational(1));
    // The spinor weight has half-integral coordinates and dimension 4.
    CHECK(weyl_dimension(weight_from_doubled({1, 1}), b2) == Rational(4));
    RootDatum a3 = build_root_datum('A', 3);
    CHECK(weyl_dimension(weight_from_ints({1, 0, -1}), a3) == Rational(8));
}

TEST_CASE("tensor products by the Klimyk rule") {
    PairDatum su2 = su2_pair();
    Weight u0 = weight_from_ints({0});
    Weight u1 = weight_from_ints({1});
    Weight u2 = weight_from_ints({2});
    Weight u3 = weight_from_ints({3});
    CHECK(tensor_decompose(u1, u1, su2) == ktype(u0) + ktype(u2));
    CHECK(tensor_decompose(u2, u1, su2) == ktype(u1) + ktype(u3));
    CHECK(prv_component(u2, u1, su2) == u1);
    CHECK(prv_component(u1, u1, su2) == u0);

    // Dimensions multiply across the decomposition.
    PairDatum sp4 = sp4_pair();
    Weight mu = weight_from_doubled({2, 0});
    Weight nu = weight_from_doubled({1, 1});
    VirtualKModule prod = tensor_decompose(mu, nu, sp4);
    Rational total(0);
    for (const auto& [tau, m] : prod.terms) {
        CHECK(m > 0);
        total = total + Rational(m) * weyl_dimension(tau, sp4.k);
    }
    CHECK(total == weyl_dimension(mu, sp4.k) * weyl_dimension(nu, sp4.k));
    CHECK(prod.coeff(prv_component(mu, nu, sp4)) >= 1);

    // Characters multiply too.
    CHECK(character_of(prod, sp4) ==
          k_character(mu, sp4) * k_character(nu, sp4));

    CHECK_THROWS_AS(tensor_decompose(weight_from_ints({-1}), u1, su2), UsageError);
    CHECK_THROWS_AS(prv_component(weight_from_ints({-1}), u1, su2), UsageError);
}

TEST_CASE("the spin module of a complex pair concentrates on rho") {
    CHECK(spin_rho_multiplicity(su2_pair()) == 1);
    CHECK(spin_rho_multiplicity(build_complex_pair('C', 2)) == 2);
    PairDatum a3 = build_complex_pair('A', 3);
    CHECK(spin_rho_multiplicity(a3) == 2);
    // The whole spin module is r copies of E_rho, nothing else.
    VirtualKModule spin = decompose_into_ktypes(spin_character(a3), a3);
    CHECK(spin == 2 * ktype(weight_from_ints({1, 0, -1})));

    CHECK_THROWS_AS(spin_rho_multiplicity(build_gl_real_pair(4)), UsageError);
    CHECK_THROWS_AS(spin_rho_multiplicity(sp4_pair()), UsageError);
}

TEST_CASE("character division rejects impossible inputs") {
    PairDatum su2 = su2_pair();
    // tau = u/2 pairs to 1/2 against the coroot; the division cannot
    // terminate and says so rather than looping.
    CHECK_THROWS_AS(k_character(weight_from_doubled({1}), su2), ConfigError);
    CHECK_THROWS_AS(k_character(weight_from_ints({-1}), su2), UsageError);
    CHECK_THROWS_AS(k_character(weight_from_ints({1, 0}), su2), ShapeError);
}
