#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "dirackit/lattice.hpp"

using namespace dirackit;

namespace {

Weight random_weight(std::mt19937& rng, int rank, int spread) {
    std::uniform_int_distribution<Int> dist(-spread, spread);
    std::vector<Int> doubled(static_cast<size_t>(rank));
    for (Int& c : doubled) c = dist(rng);
    return weight_from_doubled(doubled);
}

}  // namespace

TEST_CASE("root data of the classical families") {
    RootDatum a3 = build_root_datum('A', 3);
    CHECK(a3.positive_roots.size() == 3);
    CHECK(a3.simple_roots.size() == 2);
    CHECK(a3.rho == weight_from_ints({1, 0, -1}));

    RootDatum b2 = build_root_datum('B', 2);
    CHECK(b2.positive_roots.size() == 4);
    CHECK(b2.rho == weight_from_doubled({3, 1}));

    RootDatum c2 = build_root_datum('C', 2);
    CHECK(c2.positive_roots.size() == 4);
    CHECK(c2.rho == weight_from_ints({2, 1}));

    RootDatum d3 = build_root_datum('D', 3);
    CHECK(d3.positive_roots.size() == 6);

    CHECK(c2.is_positive_root(weight_from_ints({2, 0})));
    CHECK(c2.is_root(weight_from_ints({-1, 1})));
    CHECK_FALSE(c2.is_root(weight_from_ints({1, 0})));

    CHECK_THROWS_AS(build_root_datum('E', 8), ConfigError);
    CHECK_THROWS_AS(build_root_datum('D', 1), ConfigError);
    CHECK_THROWS_AS(build_root_datum('C', rank_cap() + 1), ConfigError);
}

TEST_CASE("Weyl enumeration matches the closed-form orders") {
    CHECK(theoretical_weyl_order('A', 4) == 24);
    CHECK(theoretical_weyl_order('B', 3) == 48);
    CHECK(theoretical_weyl_order('D', 3) == 24);

    for (auto [family, rank] : std::vector<std::pair<char, int>>{
             {'A', 4}, {'B', 3}, {'C', 2}, {'D', 3}}) {
        RootDatum datum = build_root_datum(family, rank);
        std::vector<WeylElement> weyl = enumerate_weyl(datum);
        CHECK(static_cast<long long>(weyl.size()) == theoretical_weyl_order(family, rank));
        CHECK(weyl.front().is_identity());
        for (size_t i = 1; i < weyl.size(); ++i) {
            CHECK(weyl[i - 1].length <= weyl[i].length);
        }
    }
}

TEST_CASE("length, determinant, and closure on C2") {
    RootDatum c2 = build_root_datum('C', 2);
    std::vector<WeylElement> weyl = enumerate_weyl(c2);
    REQUIRE(weyl.size() == 8);

    std::map<std::string, int> by_perm;
    for (const WeylElement& w : weyl) {
        CHECK(w.length == inversion_count(w.mat, c2));
        Int det = matrix_det(w.mat);
        CHECK(det == (w.length % 2 == 0 ? 1 : -1));
        by_perm[signed_perm_string(w.mat)] = w.length;
    }
    // Closure under composition.
    for (const WeylElement& v : weyl) {
        for (const WeylElement& w : weyl) {
            IMat product = v.mat * w.mat;
            CHECK(by_perm.count(signed_perm_string(product)) == 1);
        }
    }
    WeylElement w0 = longest_element(c2);
    CHECK(w0.length == 4);
    CHECK(apply(w0, c2.rho) == -c2.rho);
}

TEST_CASE("inner products are Weyl invariant") {
    std::mt19937 rng(12345);
    RootDatum d3 = build_root_datum('D', 3);
    std::vector<WeylElement> weyl = enumerate_weyl(d3);
    std::uniform_int_distribution<size_t> pick(0, weyl.size() - 1);
    for (int trial = 0; trial < 50; ++trial) {
        Weight a = random_weight(rng, 3, 9);
        Weight b = random_weight(rng, 3, 9);
        const WeylElement& w = weyl[pick(rng)];
        CHECK(inner(apply(w, a), apply(w, b)) == inner(a, b));
        CHECK(norm2(apply(w, a)) == norm2(a));
    }
    CHECK(inner(weight_from_ints({1, 1, 0}), weight_from_ints({1, -1, 5})) == Rational(0));
    CHECK(coroot_pairing(weight_from_ints({1, 0}), weight_from_ints({2, 0})) == Rational(1));
    CHECK(norm2(build_root_datum('C', 2).rho) == Rational(5));
    CHECK_THROWS_AS(inner(weight_from_ints({1}), weight_from_ints({1, 2})), ShapeError);
    CHECK_THROWS_AS(coroot_pairing(weight_from_ints({1, 0}), zero_weight(2)), UsageError);
}

TEST_CASE("dominant representatives are minimal and idempotent") {
    std::mt19937 rng(777);
    for (char family : {'B', 'C', 'D'}) {
        RootDatum datum = build_root_datum(family, family == 'D' ? 3 : 2);
        std::vector<WeylElement> weyl = enumerate_weyl(datum);
        for (int trial = 0; trial < 40; ++trial) {
            Weight mu = random_weight(rng, datum.ambient_rank, 7);
            DominantRep rep = dominant_rep(mu, datum);
            CHECK(apply(rep.w, mu) == rep.dominant);
            CHECK(is_dominant(rep.dominant, datum));
            CHECK(dominant_rep(rep.dominant, datum).w.is_identity());

            int best = 1 << 20;
            for (const WeylElement& v : weyl) {
                if (is_dominant(apply(v, mu), datum)) best = std::min(best, v.length);
            }
            CHECK(rep.w.length == best);

            bool singular = false;
            for (const Weight& alpha : datum.simple_roots) {
                if (inner(rep.dominant, alpha).is_zero()) singular = true;
            }
            CHECK(rep.singular == singular);
        }
    }
}

TEST_CASE("Weyl membership validation") {
    RootDatum a2 = build_root_datum('A', 2);
    IMat minus = -IMat::Identity(2, 2);
    // -id preserves the A1 root set but is not in its Weyl group.
    CHECK_THROWS_AS(weyl_from_matrix(minus, a2), ConfigError);

    RootDatum c2 = build_root_datum('C', 2);
    IMat minus2 = -IMat::Identity(2, 2);
    WeylElement w0 = weyl_from_matrix(minus2, c2);
    CHECK(w0.length == 4);

    IMat not_orth = IMat::Identity(2, 2);
    not_orth(0, 1) = 1;
    CHECK_THROWS_AS(weyl_from_matrix(not_orth, c2), ConfigError);
}

TEST_CASE("signed permutation notation round trips") {
    IMat m = parse_signed_perm("[2,-1]", 2);
    CHECK(signed_perm_string(m) == "[2,-1]");
    CHECK(apply(m, weight_from_ints({1, 0})) == weight_from_ints({0, 1}));
    CHECK(apply(m, weight_from_ints({0, 1})) == weight_from_ints({-1, 0}));
    CHECK(parse_signed_perm("e", 3) == IMat::Identity(3, 3));
    CHECK_THROWS_AS(parse_signed_perm("[2,2]", 2), ConfigError);
    CHECK_THROWS_AS(parse_signed_perm("[3,1]", 2), ConfigError);
    CHECK_THROWS_AS(parse_signed_perm("[1,2,3]", 2), ShapeError);
    CHECK(weight_string(weight_from_doubled({3, -1})) == "(3/2,-1/2)");
    CHECK(weight_string(weight_from_ints({2, 0})) == "(2,0)");
}

TEST_CASE("subsystems validate closure") {
    std::vector<Weight> closed{weight_from_ints({1, -1, 0}), weight_from_ints({0, 1, -1}),
                               weight_from_ints({1, 0, -1})};
    RootDatum sub = make_subsystem(closed, 3);
    CHECK(sub.positive_roots.size() == 3);
    CHECK(sub.simple_roots.size() == 2);
    CHECK(enumerate_weyl(sub).size() == 6);

    std::vector<Weight> open{weight_from_ints({1, -1, 0}), weight_from_ints({0, 1, -1})};
    CHECK_THROWS_AS(make_subsystem(open, 3), ConfigError);

    RootDatum empty = make_subsystem({}, 2);
    CHECK(empty.positive_roots.empty());
    CHECK(enumerate_weyl(empty).size() == 1);
    CHECK(is_dominant(weight_from_ints({-3, 1}), empty));
}

TEST_CASE("rational arithmetic stays normalized") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK((Rational(5, 2) / Rational(5)) == Rational(1, 2));
    CHECK(Rational(7, 3) > Rational(2));
    CHECK(Rational(4, 2).is_integer());
    CHECK(Rational(-1, 2).sign() == -1);
    CHECK(Rational(3, 2).to_string() == "3/2");
    CHECK_THROWS_AS(Rational(1, 0), UsageError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), UsageError);
}
