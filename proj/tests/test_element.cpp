#include <doctest.h>

#include "gring/element.hpp"
#include "gring/rng.hpp"
#include "gring/suites.hpp"

using namespace gring;

namespace {

MonoidPtr laurent() { return Monoid::full_group(AbelianGroup{1, {}}); }

RingElement x_power(const RingPtr& ring, const MonoidPtr& m, long d, long c) {
    return RingElement::epsilon(ring, m, m->element({mpz_class(d)})).scaled(Scalar::of(ring, c));
}

}  // namespace

TEST_CASE("epsilon and make") {
    RingPtr z6 = CoefficientRing::integers_mod(6);
    MonoidPtr z = laurent();
    RingElement one = RingElement::one(z6, z);
    CHECK(one.is_one());
    RingElement f = x_power(z6, z, 3, 2);
    CHECK(f * one == f);
    CHECK(one * f == f);

    // make drops explicit zeros
    RingElement zero = RingElement::make(z6, z, {{z->identity(), Scalar::zero(z6)}});
    CHECK(zero.is_zero());

    // epsilon multiplication adds degrees
    MonoidPtr n2 = Monoid::free_commutative(2);
    RingElement ex = RingElement::epsilon(z6, n2, n2->element({1, 0}));
    RingElement ey = RingElement::epsilon(z6, n2, n2->element({0, 1}));
    CHECK(ex * ey == RingElement::epsilon(z6, n2, n2->element({1, 1})));

    CHECK_THROWS_AS(RingElement::epsilon(z6, n2, n2->element({1, 0})) * f, Error);
}

TEST_CASE("the Laurent unit of the reduced Z-graded example") {
    RingPtr z6 = CoefficientRing::integers_mod(6);
    MonoidPtr z = laurent();
    RingElement g = x_power(z6, z, 1, 2) + x_power(z6, z, -1, 3);    // 2x + 3x^-1
    RingElement ginv = x_power(z6, z, 1, 3) + x_power(z6, z, -1, 2); // 3x + 2x^-1
    CHECK((g * ginv).is_one());
    CHECK((g * RingElement::zero(z6, z)).is_zero());
}

TEST_CASE("the rational idempotent in QQ[Z/2]") {
    RingPtr q = CoefficientRing::rationals();
    MonoidPtr z2 = Monoid::full_group(AbelianGroup{0, {2}});
    Scalar half = Scalar::rational(mpq_class(1, 2));
    RingElement f = (RingElement::epsilon(q, z2, z2->element({0})) +
                     RingElement::epsilon(q, z2, z2->element({1})))
                        .scaled(half);
    CHECK(f * f == f);
}

TEST_CASE("support and coefficient") {
    RingPtr z6 = CoefficientRing::integers_mod(6);
    MonoidPtr n = Monoid::free_commutative(1);
    RingElement f = x_power(z6, n, 0, 2) + x_power(z6, n, 1, 3);  // 2 + 3x
    auto supp = f.support();
    REQUIRE(supp.size() == 2);
    CHECK(supp[0] == n->element({0}));
    CHECK(supp[1] == n->element({1}));
    CHECK(RingElement::zero(z6, n).support().empty());

    MonoidPtr z = laurent();
    RingElement g = x_power(z6, z, 1, 2) + x_power(z6, z, -1, 3);
    CHECK(g.coefficient(z->element({-1})) == Scalar::of(z6, 3));
    CHECK(g.coefficient(z->element({7})) == Scalar::zero(z6));
}

TEST_CASE("trailing and leading degrees") {
    RingPtr z6 = CoefficientRing::integers_mod(6);
    MonoidPtr n = Monoid::free_commutative(1);
    DegreeOrder order(n);
    RingElement f = x_power(z6, n, 0, 2) + x_power(z6, n, 1, 3);
    CHECK(trailing_degree(f, order) == n->element({0}));
    CHECK(leading_degree(f, order) == n->element({1}));

    RingElement h = x_power(z6, n, 4, 5);  // homogeneous: equal degrees
    CHECK(trailing_degree(h, order) == leading_degree(h, order));

    MonoidPtr z = laurent();
    DegreeOrder zorder(z);
    RingElement g = x_power(z6, z, -2, 1) + x_power(z6, z, 5, 1);
    CHECK(trailing_degree(g, zorder) == z->element({-2}));
    CHECK(leading_degree(g, zorder) == z->element({5}));

    CHECK_THROWS_AS(trailing_degree(RingElement::zero(z6, n), order), Error);
    CHECK_THROWS_AS(DegreeOrder(Monoid::full_group(AbelianGroup{0, {2}})), Error);
}

TEST_CASE("degree law and support bounds on random homogeneous pairs") {
    Rng rng(42);
    RingPtr z7 = CoefficientRing::integers_mod(7);
    MonoidPtr z = laurent();
    DegreeOrder order(z);
    for (int t = 0; t < 500; ++t) {
        RingElement r = x_power(z7, z, rng.range(-5, 5), rng.range(1, 6));
        RingElement s = x_power(z7, z, rng.range(-5, 5), rng.range(1, 6));
        RingElement rs = r * s;
        if (rs.is_zero()) continue;  // cannot happen mod 7, keep the guard anyway
        CHECK(rs.is_homogeneous());
        CHECK(leading_degree(rs, order) ==
              z->add(leading_degree(r, order), leading_degree(s, order)));
    }
    // n_*(f) + n_*(g) <= n_*(fg) and n^*(fg) <= n^*(f) + n^*(g)
    RingPtr z6 = CoefficientRing::integers_mod(6);
    for (int t = 0; t < 500; ++t) {
        Rng trial(42, t);
        std::vector<std::pair<MonoidElement, Scalar>> fterms, gterms;
        for (long d = -2; d <= 2; ++d) {
            if (trial.chance(1, 2))
                fterms.emplace_back(z->element({mpz_class(d)}),
                                    Scalar::of(z6, trial.range(0, 5)));
            if (trial.chance(1, 2))
                gterms.emplace_back(z->element({mpz_class(d)}),
                                    Scalar::of(z6, trial.range(0, 5)));
        }
        RingElement f = RingElement::make(z6, z, fterms);
        RingElement g = RingElement::make(z6, z, gterms);
        RingElement fg = f * g;
        if (f.is_zero() || g.is_zero() || fg.is_zero()) continue;
        DegreeOrder zorder(z);
        MonoidElement lower =
            z->add(trailing_degree(f, zorder), trailing_degree(g, zorder));
        MonoidElement upper = z->add(leading_degree(f, zorder), leading_degree(g, zorder));
        CHECK_FALSE(zorder.less(trailing_degree(fg, zorder), lower));
        CHECK_FALSE(zorder.less(upper, leading_degree(fg, zorder)));
    }
}

TEST_CASE("regrade along a morphism") {
    RingPtr q = CoefficientRing::rationals();
    MonoidPtr n = Monoid::free_commutative(1);
    MonoidPtr z3 = Monoid::full_group(AbelianGroup{0, {3}});
    MonoidMorphism reduction = MonoidMorphism::linear(n, z3, {{1}});

    // x - 1 splits into components at residues 1 and 0
    RingElement f = x_power(q, n, 1, 1) + x_power(q, n, 0, -1);
    GradedView view = regrade(f, reduction);
    REQUIRE(view.components.size() == 2);
    CHECK(view.components.at(z3->element({1})) == x_power(q, n, 1, 1));
    CHECK(view.components.at(z3->element({0})) == x_power(q, n, 0, -1));
    CHECK(view.sum(q, n) == f);

    // x^3 - 1 is homogeneous of residue degree 0
    RingElement frob = x_power(q, n, 3, 1) + x_power(q, n, 0, -1);
    GradedView fview = regrade(frob, reduction);
    REQUIRE(fview.components.size() == 1);
    CHECK(fview.components.begin()->first == z3->element({0}));

    // identity morphism: one component per support degree
    MonoidMorphism id = MonoidMorphism::linear(n, n, {{1}});
    GradedView iview = regrade(f, id);
    CHECK(iview.components.size() == f.terms().size());

    MonoidPtr n2 = Monoid::free_commutative(2);
    MonoidMorphism other = MonoidMorphism::linear(n2, z3, {{1, 1}});
    CHECK_THROWS_AS(regrade(f, other), Error);
}

TEST_CASE("content ideal") {
    RingPtr z6 = CoefficientRing::integers_mod(6);
    MonoidPtr n = Monoid::free_commutative(1);
    auto gens = content_ideal(x_power(z6, n, 0, 2) + x_power(z6, n, 1, 3));
    REQUIRE(gens.size() == 1);
    CHECK(gens[0] == Scalar::one(z6));  // gcd(2,3,6) = 1: C(f) = R

    gens = content_ideal(x_power(z6, n, 0, 2) + x_power(z6, n, 1, 4));
    REQUIRE(gens.size() == 1);
    CHECK(gens[0] == Scalar::of(z6, 2));

    CHECK(content_ideal(RingElement::zero(z6, n)).empty());

    // rational coefficients: generator list is the coefficient list itself
    RingPtr q = CoefficientRing::rationals();
    RingElement h = RingElement::one(q, n).scaled(Scalar::rational(mpq_class(2, 3))) +
                    RingElement::epsilon(q, n, n->element({1}));
    CHECK(content_ideal(h).size() == 2);
}

TEST_CASE("identity is homogeneous of degree zero for cancellative monoids") {
    RingPtr z6 = CoefficientRing::integers_mod(6);
    std::vector<MonoidPtr> monoids = {
        Monoid::free_commutative(2),
        laurent(),
        Monoid::full_group(AbelianGroup{1, {4}}),
        Monoid::submonoid(AbelianGroup{1, {2}},
                          {MonoidElement{{1, 0}, -1}, MonoidElement{{1, 1}, -1}}),
    };
    for (const MonoidPtr& m : monoids) {
        RingElement one = RingElement::one(z6, m);
        REQUIRE(one.support().size() == 1);
        CHECK(one.support()[0] == m->identity());
    }
}

TEST_CASE("element ring axioms suite") {
    SuiteResult result = suite_ring_axioms(1000, 7);
    CHECK(result.failures == 0);
}
