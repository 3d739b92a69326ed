// Acceptance runner: one exact check per criterion, one pass/fail line each.
// Exit code 0 iff everything passes.

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "gring/finite_ring.hpp"
#include "gring/grobner.hpp"
#include "gring/structure.hpp"
#include "gring/suites.hpp"

using namespace gring;

namespace {

struct Criterion {
    std::string name;
    std::function<void(std::vector<std::string>&)> run;  // push a note per failed check
};

void expect(bool ok, const std::string& what, std::vector<std::string>& failures) {
    if (!ok) failures.push_back(what);
}

MonoidPtr laurent() { return Monoid::full_group(AbelianGroup{1, {}}); }
MonoidPtr naturals() { return Monoid::free_commutative(1); }

RingElement x_power(const RingPtr& ring, const MonoidPtr& m, long d, long c) {
    return RingElement::epsilon(ring, m, m->element({mpz_class(d)})).scaled(Scalar::of(ring, c));
}

RingElement cyclic_epsilon(const RingPtr& ring, const MonoidPtr& m, long k) {
    return RingElement::epsilon(ring, m, m->element({mpz_class(k)}));
}

void criterion_laurent_unit(std::vector<std::string>& failures) {
    RingPtr z6 = CoefficientRing::integers_mod(6);
    MonoidPtr z = laurent();
    RingElement g = x_power(z6, z, 1, 2) + x_power(z6, z, -1, 3);
    UnitCertificate cert = check_unit_characterization(g);
    expect(cert.is_unit, "2x + 3x^-1 must be a unit", failures);
    RingElement inverse = invert_group_ring(g);
    expect(inverse == x_power(z6, z, 1, 3) + x_power(z6, z, -1, 2),
           "inverse must be 3x + 2x^-1", failures);
    expect((g * inverse).is_one(), "product must be exactly 1", failures);
}

void criterion_mccoy_triple(std::vector<std::string>& failures) {
    RingPtr z6 = CoefficientRing::integers_mod(6);
    MonoidPtr n = naturals();
    RingElement two = x_power(z6, n, 0, 2);
    RingElement three_x = x_power(z6, n, 1, 3);
    RingElement sum = two + three_x;

    ZeroDivisorResult a = is_zero_divisor(two);
    expect(a.is_zero_divisor && *a.witness == Scalar::of(z6, 3), "2 -> Yes(3)", failures);
    ZeroDivisorResult b = is_zero_divisor(three_x);
    expect(b.is_zero_divisor && *b.witness == Scalar::of(z6, 2), "3x -> Yes(2)", failures);
    expect(!is_zero_divisor(sum).is_zero_divisor, "2 + 3x -> No", failures);

    // windowed oracle over support {0..4}: all 6^5 = 7776 candidates
    std::vector<MonoidElement> window;
    for (long d = 0; d <= 4; ++d) window.push_back(n->element({mpz_class(d)}));
    unsigned annihilators = 0;
    for (unsigned code = 0; code < 7776; ++code) {
        unsigned c = code;
        std::vector<std::pair<MonoidElement, Scalar>> terms;
        for (const auto& d : window) {
            terms.emplace_back(d, Scalar::of(z6, c % 6));
            c /= 6;
        }
        RingElement h = RingElement::make(z6, n, std::move(terms));
        if (!h.is_zero() && (h * sum).is_zero()) ++annihilators;
    }
    expect(annihilators == 0, "no windowed annihilator of 2 + 3x may exist", failures);
}

void criterion_q_z2_idempotent(std::vector<std::string>& failures) {
    RingPtr q = CoefficientRing::rationals();
    MonoidPtr z2 = Monoid::full_group(AbelianGroup{0, {2}});
    Scalar half = Scalar::rational(mpq_class(1, 2));
    RingElement f = (cyclic_epsilon(q, z2, 0) + cyclic_epsilon(q, z2, 1)).scaled(half);
    expect(f * f == f, "f must be idempotent", failures);

    SupportWindow window{{z2->element({0}), z2->element({1})}};
    std::vector<RingElement> basis = annihilator_in_window(f, window);
    expect(basis.size() == 1, "kernel must be one-dimensional", failures);
    if (basis.size() == 1) {
        RingElement generator = cyclic_epsilon(q, z2, 0) - cyclic_epsilon(q, z2, 1);
        Scalar lead = basis[0].coefficient(z2->element({0}));
        expect(basis[0] == generator.scaled(lead), "kernel must be spanned by e0 - e1", failures);
    }
    expect(!annihilator_is_graded_in_window(f, window).graded, "gradedness must fail", failures);
    for (long d : {0L, 1L})
        expect(!(cyclic_epsilon(q, z2, d) * f).is_zero(),
               "no nonzero homogeneous annihilator may exist", failures);
}

void criterion_idempotent_family(std::vector<std::string>& failures) {
    RingPtr q = CoefficientRing::rationals();
    for (long m = 2; m <= 12; ++m) {
        MonoidPtr zm = Monoid::full_group(AbelianGroup{0, {mpz_class(m)}});
        RingElement f = RingElement::zero(q, zm);
        for (long k = 0; k < m; ++k) f = f + cyclic_epsilon(q, zm, k);
        f = f.scaled(Scalar::rational(mpq_class(1, m)));
        expect(f * f == f, "f must be idempotent for n = " + std::to_string(m), failures);
        RingElement u = RingElement::one(q, zm) - f.scaled(Scalar::rational(mpq_class(2)));
        expect((u * u).is_one(), "(1 - 2f)^2 must be 1 for n = " + std::to_string(m), failures);
    }
    // n = 3: u = (1/3)(e0 - 2 e1 - 2 e2) is a non-homogeneous unit whose
    // coefficient products are not nilpotent (negative witness for the
    // torsion-free characterization)
    MonoidPtr z3 = Monoid::full_group(AbelianGroup{0, {3}});
    RingElement f3 = (cyclic_epsilon(q, z3, 0) + cyclic_epsilon(q, z3, 1) +
                      cyclic_epsilon(q, z3, 2))
                         .scaled(Scalar::rational(mpq_class(1, 3)));
    RingElement u3 = RingElement::one(q, z3) - f3.scaled(Scalar::rational(mpq_class(2)));
    expect(u3.coefficient(z3->element({0})) == Scalar::rational(mpq_class(1, 3)),
           "constant coefficient must be 1/3", failures);
    for (long k : {1L, 2L})
        expect(u3.coefficient(z3->element({k})) == Scalar::rational(mpq_class(-2, 3)),
               "coefficient at e" + std::to_string(k) + " must be -2/3", failures);
    expect(u3.terms().size() == 3, "1 - 2f must be non-homogeneous", failures);
    expect(!scalar_is_nilpotent(u3.coefficient(z3->element({1})) *
                                u3.coefficient(z3->element({2}))),
           "double products are not nilpotent over QQ", failures);
    bool hypothesis_rejected = false;
    try {
        check_unit_characterization(u3);
    } catch (const Error& e) {
        hypothesis_rejected = e.code() == errc::hypothesis_violation || e.code() == errc::not_torsion_free;
    }
    expect(hypothesis_rejected, "torsion grading must be rejected as a hypothesis violation",
           failures);
}

void criterion_frobenius(std::vector<std::string>& failures) {
    for (long p : {2L, 3L, 5L, 7L}) {
        RingPtr fp = CoefficientRing::integers_mod(p);
        MonoidPtr zp = Monoid::full_group(AbelianGroup{0, {mpz_class(p)}});
        RingElement f = cyclic_epsilon(fp, zp, 0) - cyclic_epsilon(fp, zp, 1);
        BoundedNilpotence bn = is_nilpotent_bruteforce(f, static_cast<unsigned>(p) + 4);
        expect(bn.nilpotent && bn.value == static_cast<unsigned>(p),
               "(e0 - eg)^p must vanish first at p = " + std::to_string(p), failures);
    }
}

void criterion_regrading(std::vector<std::string>& failures) {
    for (long p : {2L, 3L, 5L, 7L}) {
        RingPtr fp = CoefficientRing::integers_mod(p);
        MonoidPtr n = naturals();
        MonoidPtr zp = Monoid::full_group(AbelianGroup{0, {mpz_class(p)}});
        MonoidMorphism reduction = MonoidMorphism::linear(n, zp, {{1}});

        RingElement x_minus_1 = x_power(fp, n, 1, 1) + x_power(fp, n, 0, -1);
        RingElement frob = x_minus_1.pow(static_cast<unsigned>(p));
        RingElement expected = x_power(fp, n, p, 1) + x_power(fp, n, 0, -1);
        expect(frob == expected, "(x-1)^p must equal x^p - 1 mod " + std::to_string(p), failures);
        GradedView view = regrade(frob, reduction);
        expect(view.components.size() == 1 &&
                   view.components.begin()->first == zp->element({0}),
               "x^p - 1 must be homogeneous of degree 0 under the regrading", failures);

        // in F_p[x]/(x^p - 1), i.e. the group-ring F_p[Z/p], the nilradical
        // is not graded: witness component x
        RingElement nilpotent = cyclic_epsilon(fp, zp, 1) - cyclic_epsilon(fp, zp, 0);
        MonoidMorphism identity = MonoidMorphism::linear(zp, zp, {{1}});
        NilradicalGradednessResult res =
            nilradical_graded_check({nilpotent}, identity, static_cast<unsigned>(p) + 4);
        expect(!res.graded, "nilradical must not be graded at p = " + std::to_string(p), failures);
        expect(res.witness_component && *res.witness_component == cyclic_epsilon(fp, zp, 1),
               "witness component must be x", failures);
    }
}

void criterion_deligne(std::vector<std::string>& failures) {
    PolyRingPtr pr =
        PolyRing::make(CoefficientRing::rationals(), {"x1", "x2", "x3", "x4"}, TermOrder::Lex);
    auto mono = [&](std::vector<unsigned> exps) {
        return Polynomial::term(pr, Monomial{std::move(exps)}, Scalar::one(pr->field()));
    };
    GroebnerBasis gb = buchberger(
        pr, {mono({1, 0, 1, 0}), mono({0, 1, 0, 1}), mono({1, 0, 0, 1}) + mono({0, 1, 1, 0})});
    expect(normal_form(mono({1, 0, 1, 0}), gb).is_zero(), "x1 x3 must reduce to 0", failures);
    expect(!normal_form(mono({1, 0, 0, 1}), gb).is_zero(), "x1 x4 must not reduce to 0", failures);
    expect(!normal_form(mono({0, 1, 1, 0}), gb).is_zero(), "x2 x3 must not reduce to 0", failures);

    RingPtr ring = CoefficientRing::polynomial_quotient(std::make_shared<const QuotientRing>(gb));
    MonoidPtr n = naturals();
    auto a = [&](int i) {
        std::vector<unsigned> exps(4, 0);
        exps[i - 1] = 1;
        return Scalar::quotient_class(ring, mono(exps));
    };
    auto T = [&](long d) { return RingElement::epsilon(ring, n, n->element({mpz_class(d)})); };
    RingElement g = T(1).scaled(a(1)) + T(0).scaled(a(2));
    RingElement f = T(1).scaled(a(3)) + T(0).scaled(a(4));
    expect((g * f).is_zero(), "(a1 T + a2)(a3 T + a4) must vanish in the quotient", failures);

    RingElement h = shrink_to_homogeneous_annihilator(g, IdealSpec{{f}});
    expect(h == T(1).scaled(a(2) * a(3)), "the shrink must return a2 a3 T", failures);
    expect((h * f).is_zero(), "a2 a3 T must annihilate", failures);
    expect(h.is_homogeneous() && !h.is_zero(), "the result must be homogeneous nonzero", failures);
}

void criterion_grothendieck(std::vector<std::string>& failures) {
    for (long n : {2L, 3L, 4L}) {
        AbelianGroup ambient{1, {mpz_class(n)}};
        MonoidPtr m = Monoid::submonoid(
            ambient, {MonoidElement{{1, 0}, -1}, MonoidElement{{1, 1}, -1}});
        GrothendieckGroup g = grothendieck_group(m);
        expect(g.group == AbelianGroup{1, {mpz_class(n)}},
               "G must be Z + Z/" + std::to_string(n), failures);
        expect(torsion_subgroup(g.group).subgroup == AbelianGroup{0, {mpz_class(n)}},
               "T(G) must be Z/" + std::to_string(n), failures);
        expect(m->is_cancellative(), "M must be cancellative", failures);

        // canonical map injective: distinct small combinations stay distinct
        std::vector<MonoidElement> sample;
        for (long i = 0; i <= 3; ++i)
            for (long j = 0; j <= 3; ++j) {
                MonoidElement e = m->identity();
                for (long k = 0; k < i; ++k) e = m->add(e, m->generators()[0]);
                for (long k = 0; k < j; ++k) e = m->add(e, m->generators()[1]);
                sample.push_back(e);
            }
        bool injective = true;
        for (std::size_t i = 0; i < sample.size(); ++i)
            for (std::size_t j = i + 1; j < sample.size(); ++j) {
                bool same_element = sample[i] == sample[j];
                bool same_image = g.canonical.apply(sample[i]) == g.canonical.apply(sample[j]);
                if (same_element != same_image) injective = false;
            }
        expect(injective, "the canonical map must be injective", failures);
    }
}

void criterion_identity_split(std::vector<std::string>& failures) {
    // the direct product Z x Z graded by the table monoid {1,3,0}:
    // R_1 = {(0,0)}, R_3 = Z x {0}, R_0 = {0} x Z
    MonoidPtr m = Monoid::finite_by_table(3, {0, 1, 2, 1, 1, 2, 2, 2, 2}, 0);
    using Pair = std::pair<long, long>;
    auto mul = [](Pair a, Pair b) { return Pair{a.first * b.first, a.second * b.second}; };
    auto component = [&](Pair v, std::size_t deg) -> Pair {
        if (deg == 1) return {v.first, 0};   // index 1 carries the element 3
        if (deg == 2) return {0, v.second};  // index 2 carries the element 0
        return {0, 0};                       // index 0 (the identity 1) has R_1 = 0
    };
    Pair one{1, 1};
    expect(component(one, 0) == Pair{0, 0}, "the degree-1 component of (1,1) must vanish",
           failures);
    expect(component(one, 1) == Pair{1, 0}, "the degree-3 component must be (1,0)", failures);
    expect(component(one, 2) == Pair{0, 1}, "the degree-0 component must be (0,1)", failures);
    Pair rebuilt{component(one, 1).first + component(one, 2).first,
                 component(one, 1).second + component(one, 2).second};
    expect(rebuilt == one, "the identity must split as (1,0) + (0,1)", failures);

    // grading law R_a R_b inside R_{a o b} on full component samples
    for (long a1 : {-2L, 0L, 3L})
        for (long b2 : {-1L, 0L, 2L}) {
            Pair in_r3{a1, 0};
            Pair in_r0{0, b2};
            Pair prod = mul(in_r3, in_r0);
            std::size_t target = static_cast<std::size_t>(
                m->add(m->table_element(1), m->table_element(2)).index);
            expect(component(prod, target) == prod, "R_3 R_0 must land in R_{3*0}", failures);
            expect(mul(in_r3, in_r3).second == 0, "R_3 R_3 must stay in R_3", failures);
            expect(mul(in_r0, in_r0).first == 0, "R_0 R_0 must stay in R_0", failures);
        }

    // cancellative gradings keep 1 homogeneous of degree 0
    RingPtr z6 = CoefficientRing::integers_mod(6);
    std::vector<MonoidPtr> cancellative = {
        naturals(),
        laurent(),
        Monoid::free_commutative(2),
        Monoid::full_group(AbelianGroup{0, {4}}),
        Monoid::submonoid(AbelianGroup{1, {2}},
                          {MonoidElement{{1, 0}, -1}, MonoidElement{{1, 1}, -1}}),
    };
    for (const MonoidPtr& cm : cancellative) {
        RingElement one_elem = RingElement::one(z6, cm);
        expect(one_elem.support().size() == 1 && one_elem.support()[0] == cm->identity(),
               "1 must be homogeneous of degree 0 over " + cm->str(), failures);
    }
}

void criterion_idempotent_location(std::vector<std::string>& failures) {
    SuiteResult result = suite_idempotent_location();
    expect(result.failures == 0, "idempotent location suite must pass", failures);
    expect(result.trials == 7776, "the enumeration must cover all 7776 elements", failures);
}

void criterion_property_suites(std::vector<std::string>& failures) {
    for (const char* name : {"mccoy", "units", "nilpotence", "componentwise"}) {
        SuiteResult result = run_suite(name, 500, 42);
        std::string note = result.notes.empty() ? "" : (": " + result.notes.front());
        expect(result.failures == 0, std::string(name) + " suite must pass" + note, failures);
        expect(result.trials >= 500, std::string(name) + " must run >= 500 trials", failures);
    }
}

void criterion_snf_suite(std::vector<std::string>& failures) {
    SuiteResult result = suite_snf(200, 42);
    expect(result.failures == 0, "SNF suite must pass", failures);
    expect(result.trials == 200, "SNF suite must run 200 matrices", failures);
}

void criterion_quasi_jacobson(std::vector<std::string>& failures) {
    QuasiJacobsonReport a =
        finite_instance_jacobson_equals_nilradical(FiniteRing::truncated_polynomial(4, 3));
    expect(a.jacobson_equals_nilradical, "(Z/4)[x]/(x^3) must satisfy J = N", failures);
    expect(a.nilradical_graded, "(Z/4)[x]/(x^3) must have graded N", failures);
    expect(a.nilradical_size == 32, "N must have 32 elements", failures);

    QuasiJacobsonReport b =
        finite_instance_jacobson_equals_nilradical(FiniteRing::truncated_polynomial(2, 2));
    expect(b.jacobson_equals_nilradical, "F_2[x]/(x^2) must satisfy J = N", failures);
    expect(b.nilradical_graded, "F_2[x]/(x^2) must have graded N", failures);
    expect(b.nilradical_size == 2, "N must be {0, x}", failures);
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"1. Laurent unit over (Z/6)[x,x^-1]", criterion_laurent_unit},
        {"2. McCoy triple in (Z/6)[x] with the windowed oracle", criterion_mccoy_triple},
        {"3. QQ[Z/2] idempotent and its non-graded annihilator", criterion_q_z2_idempotent},
        {"4. QQ[Z/n] idempotent family, n = 2..12", criterion_idempotent_family},
        {"5. Frobenius nilpotents in F_p[Z/p], p in {2,3,5,7}", criterion_frobenius},
        {"6. Z/p-regrading of F_p[x] and the non-graded nilradical", criterion_regrading},
        {"7. Worked quotient instance: basis, zero product, shrink", criterion_deligne},
        {"8. Grothendieck group of N(1,0) + N(1,1), n in {2,3,4}", criterion_grothendieck},
        {"9. Non-cancellative identity split over the table monoid", criterion_identity_split},
        {"10. Idempotent location oracle over 7776 elements", criterion_idempotent_location},
        {"11. Property suites (seed 42, >= 500 trials)", criterion_property_suites},
        {"12. SNF suite (200 matrices, seed 42)", criterion_snf_suite},
        {"13. Finite quasi-Jacobson instances", criterion_quasi_jacobson},
    };
    unsigned failed = 0;
    for (const Criterion& criterion : criteria) {
        std::vector<std::string> failures;
        try {
            criterion.run(failures);
        } catch (const std::exception& e) {
            failures.push_back(std::string("exception: ") + e.what());
        }
        if (failures.empty()) {
            std::cout << "[PASS] " << criterion.name << "\n";
        } else {
            ++failed;
            std::cout << "[FAIL] " << criterion.name << "\n";
            for (const std::string& f : failures) std::cout << "       - " << f << "\n";
        }
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
              << "\n";
    return failed == 0 ? 0 : 1;
}
