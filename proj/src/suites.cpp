#include "gring/suites.hpp"

#include <algorithm>
#include <set>

#include "gring/rng.hpp"
#include "gring/smith.hpp"
#include "gring/structure.hpp"

namespace gring {

namespace {

void note_failure(SuiteResult& result, const std::string& what) {
    ++result.failures;
    if (result.notes.size() < 8) result.notes.push_back(what);
}

RingElement random_element(Rng& rng, const RingPtr& ring, const MonoidPtr& monoid, long lo, long hi,
                           bool bias_nilpotent) {
    const mpz_class& n = ring->modulus();
    const mpz_class& rad = ring->radical();
    std::vector<std::pair<MonoidElement, Scalar>> terms;
    for (long d = lo; d <= hi; ++d) {
        if (!rng.chance(1, 2)) continue;
        mpz_class c;
        if (bias_nilpotent && rng.chance(1, 2)) {
            c = rad * rng.range(0, mpz_class(n / rad).get_si() - 1);
        } else {
            c = rng.range(0, mpz_class(n - 1).get_si());
        }
        terms.emplace_back(monoid->element({mpz_class(d)}), Scalar::of(ring, c));
    }
    return RingElement::make(ring, monoid, std::move(terms));
}

}  // namespace

SuiteResult suite_mccoy(unsigned trials, std::uint64_t seed, long randomized_modulus) {
    SuiteResult result{"mccoy", 0, 0, seed, {}};
    MonoidPtr naturals = Monoid::free_commutative(1);

    auto check_one = [&](const RingElement& f, const SupportWindow& window) {
        ++result.trials;
        try {
            ZeroDivisorResult zd = is_zero_divisor(f);
            std::vector<RingElement> kernel = annihilator_in_window(f, window);
            if (zd.is_zero_divisor != !kernel.empty()) {
                note_failure(result, "disagreement on " + f.str());
                return;
            }
            if (zd.is_zero_divisor) {
                RingElement witness =
                    RingElement::one(f.ring(), f.monoid()).scaled(*zd.witness);
                if (zd.witness->is_zero() || !(witness * f).is_zero())
                    note_failure(result, "bad constant witness for " + f.str());
            }
        } catch (const Error& e) {
            note_failure(result, std::string("error: ") + e.what() + " on " + f.str());
        }
    };

    // exhaustive over (Z/4)[x], support in {0..3}
    RingPtr z4 = CoefficientRing::integers_mod(4);
    SupportWindow window4 = SupportWindow::range(naturals, 0, 6);
    for (unsigned code = 0; code < 256; ++code) {
        std::vector<std::pair<MonoidElement, Scalar>> terms;
        unsigned c = code;
        for (long d = 0; d < 4; ++d) {
            terms.emplace_back(naturals->element({mpz_class(d)}), Scalar::of(z4, c % 4));
            c /= 4;
        }
        check_one(RingElement::make(z4, naturals, std::move(terms)), window4);
    }

    // randomized phase
    RingPtr zn = CoefficientRing::integers_mod(randomized_modulus);
    SupportWindow window_n = SupportWindow::range(naturals, 0, 6);
    for (unsigned t = 0; t < trials; ++t) {
        Rng rng(seed, t);
        check_one(random_element(rng, zn, naturals, 0, 3, false), window_n);
    }
    return result;
}

SuiteResult suite_units(unsigned trials, std::uint64_t seed) {
    SuiteResult result{"units", 0, 0, seed, {}};
    MonoidPtr integers = Monoid::full_group(AbelianGroup{1, {}});
    const long moduli[] = {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};

    for (unsigned t = 0; t < trials; ++t) {
        Rng rng(seed, t);
        ++result.trials;
        RingPtr ring = CoefficientRing::integers_mod(moduli[rng.next() % 11]);
        const mpz_class& n = ring->modulus();
        RingElement f = RingElement::zero(ring, integers);
        if (rng.chance(1, 2)) {
            // likely unit: invertible homogeneous term plus nilpotent noise
            mpz_class a;
            do {
                a = rng.range(1, mpz_class(n - 1).get_si());
            } while (gcd(a, n) != 1);
            long x = rng.range(-2, 2);
            f = RingElement::epsilon(ring, integers, integers->element({mpz_class(x)})).scaled(
                Scalar::of(ring, a));
            f = f + random_element(rng, ring, integers, -2, 2, true)
                        .scaled(Scalar::of(ring, ring->radical()));
        } else {
            f = random_element(rng, ring, integers, -2, 2, false);
        }
        try {
            UnitCertificate cert = check_unit_characterization(f);
            // independent windowed inverse search: f * h = 1 with h in [-12, 12]
            std::vector<MonoidElement> window;
            for (long d = -12; d <= 12; ++d) window.push_back(integers->element({mpz_class(d)}));
            std::map<MonoidElement, std::size_t> rows;
            for (const auto& w : window)
                for (const auto& [m, c] : f.terms()) rows.emplace(integers->add(w, m), rows.size());
            rows.emplace(integers->identity(), rows.size());
            IntMat a(rows.size(), IntVec(window.size(), 0));
            for (std::size_t j = 0; j < window.size(); ++j)
                for (const auto& [m, c] : f.terms())
                    a[rows.at(integers->add(window[j], m))][j] += c.int_value();
            IntVec b(rows.size(), 0);
            b[rows.at(integers->identity())] = 1;
            auto brute = solve_mod(a, b, n);
            if (cert.is_unit != brute.has_value()) {
                note_failure(result, "verdict vs brute force on " + f.str());
                continue;
            }
            if (cert.is_unit) {
                if (!cert.inverse || !(f * *cert.inverse).is_one())
                    note_failure(result, "inverse check failed on " + f.str());
                std::vector<std::pair<MonoidElement, Scalar>> terms;
                for (std::size_t j = 0; j < window.size(); ++j)
                    terms.emplace_back(window[j], Scalar::of(ring, (*brute)[j]));
                RingElement h = RingElement::make(ring, integers, std::move(terms));
                if (!(f * h).is_one()) note_failure(result, "brute inverse fails on " + f.str());
            }
        } catch (const Error& e) {
            note_failure(result, std::string("error: ") + e.what() + " on " + f.str());
        }
    }
    return result;
}

SuiteResult suite_nilpotence(unsigned trials, std::uint64_t seed) {
    SuiteResult result{"nilpotence", 0, 0, seed, {}};
    MonoidPtr naturals = Monoid::free_commutative(1);
    RingPtr ring = CoefficientRing::integers_mod(12);
    for (unsigned t = 0; t < trials; ++t) {
        Rng rng(seed, t);
        ++result.trials;
        RingElement f = random_element(rng, ring, naturals, 0, 3, true);
        try {
            bool theorem = is_nilpotent(f);
            BoundedNilpotence brute = is_nilpotent_bruteforce(f, 64);
            if (theorem != brute.nilpotent)
                note_failure(result, "theorem vs brute force on " + f.str());
        } catch (const Error& e) {
            note_failure(result, std::string("error: ") + e.what());
        }
    }
    return result;
}

SuiteResult suite_componentwise(unsigned trials, std::uint64_t seed) {
    SuiteResult result{"componentwise", 0, 0, seed, {}};
    MonoidPtr integers = Monoid::full_group(AbelianGroup{1, {}});
    const long moduli[] = {4, 6, 12};
    for (unsigned t = 0; t < trials; ++t) {
        Rng rng(seed, t);
        ++result.trials;
        RingPtr ring = CoefficientRing::integers_mod(moduli[rng.next() % 3]);
        RingElement f = random_element(rng, ring, integers, -2, 2, true);
        RingElement g = random_element(rng, ring, integers, -2, 2, true);
        try {
            ComponentwiseNilpotence cw = componentwise_nilpotent_product(f, g);
            BoundedNilpotence brute = is_nilpotent_bruteforce(f * g, 24);
            if (cw.product_nilpotent != brute.nilpotent)
                note_failure(result, "pairwise route vs brute force on " + f.str());
        } catch (const Error& e) {
            note_failure(result, std::string("error: ") + e.what());
        }
    }
    return result;
}

SuiteResult suite_snf(unsigned matrices, std::uint64_t seed) {
    SuiteResult result{"snf", 0, 0, seed, {}};
    for (unsigned t = 0; t < matrices; ++t) {
        Rng rng(seed, t);
        ++result.trials;
        std::size_t rows = static_cast<std::size_t>(rng.range(1, 6));
        std::size_t cols = static_cast<std::size_t>(rng.range(1, 6));
        IntMat a(rows, IntVec(cols));
        for (auto& row : a)
            for (auto& entry : row) entry = rng.range(-20, 20);
        SmithResult snf = smith_normal_form(a);
        if (mat_mul(mat_mul(snf.U, a), snf.V) != snf.D) {
            note_failure(result, "U*A*V != D");
            continue;
        }
        if (abs(determinant(snf.U)) != 1 || abs(determinant(snf.V)) != 1) {
            note_failure(result, "transform not unimodular");
            continue;
        }
        std::vector<mpz_class> d = snf.diagonal();
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (d[i] < 0) note_failure(result, "negative invariant factor");
            if (i + 1 < d.size() && d[i + 1] != 0 && d[i] != 0 &&
                !mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t()))
                note_failure(result, "divisibility chain broken");
            if (d[i] == 0 && i + 1 < d.size() && d[i + 1] != 0)
                note_failure(result, "zero before nonzero on the diagonal");
        }
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (i != j && snf.D[i][j] != 0) note_failure(result, "D not diagonal");
    }
    return result;
}

SuiteResult suite_ring_axioms(unsigned trials, std::uint64_t seed) {
    SuiteResult result{"ring-axioms", 0, 0, seed, {}};
    std::vector<RingPtr> scalar_rings = {
        CoefficientRing::integers(),
        CoefficientRing::rationals(),
        CoefficientRing::integers_mod(6),
        CoefficientRing::integers_mod(12),
    };
    auto random_scalar = [&](Rng& rng, const RingPtr& ring) {
        switch (ring->kind()) {
            case RingKind::Rationals:
                return Scalar::rational(mpq_class(rng.range(-9, 9), rng.range(1, 9)));
            case RingKind::Integers: return Scalar::integer(rng.range(-50, 50));
            default: return Scalar::of(ring, rng.range(0, mpz_class(ring->modulus() - 1).get_si()));
        }
    };
    for (unsigned t = 0; t < trials; ++t) {
        Rng rng(seed, t);
        ++result.trials;
        for (const RingPtr& ring : scalar_rings) {
            Scalar a = random_scalar(rng, ring);
            Scalar b = random_scalar(rng, ring);
            Scalar c = random_scalar(rng, ring);
            bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) &&
                      a * (b + c) == a * b + a * c && a * b == b * a && a + b == b + a &&
                      a + Scalar::zero(ring) == a && a * Scalar::one(ring) == a;
            if (!ok) {
                note_failure(result, "scalar axioms fail in " + ring->name());
                break;
            }
        }
    }

    struct Instance {
        RingPtr ring;
        MonoidPtr monoid;
        std::vector<MonoidElement> degrees;
    };
    std::vector<Instance> instances;
    {
        MonoidPtr z2 = Monoid::full_group(AbelianGroup{2, {}});
        RingPtr r6 = CoefficientRing::integers_mod(6);
        std::vector<MonoidElement> degs;
        for (long a = -1; a <= 1; ++a)
            for (long b = -1; b <= 1; ++b) degs.push_back(z2->element({mpz_class(a), mpz_class(b)}));
        instances.push_back({r6, z2, degs});

        MonoidPtr naturals = Monoid::free_commutative(1);
        RingPtr r12 = CoefficientRing::integers_mod(12);
        std::vector<MonoidElement> ndegs;
        for (long d = 0; d <= 3; ++d) ndegs.push_back(naturals->element({mpz_class(d)}));
        instances.push_back({r12, naturals, ndegs});

        MonoidPtr zmod4 = Monoid::full_group(AbelianGroup{0, {4}});
        RingPtr rq = CoefficientRing::rationals();
        std::vector<MonoidElement> qdegs;
        for (long d = 0; d <= 3; ++d) qdegs.push_back(zmod4->element({mpz_class(d)}));
        instances.push_back({rq, zmod4, qdegs});
    }
    auto random_instance_element = [&](Rng& rng, const Instance& inst) {
        std::vector<std::pair<MonoidElement, Scalar>> terms;
        for (const auto& d : inst.degrees) {
            if (!rng.chance(1, 3)) continue;
            Scalar c = inst.ring->kind() == RingKind::Rationals
                           ? Scalar::rational(mpq_class(rng.range(-5, 5), rng.range(1, 4)))
                           : Scalar::of(inst.ring, rng.range(0, mpz_class(inst.ring->modulus() - 1).get_si()));
            terms.emplace_back(d, c);
        }
        return RingElement::make(inst.ring, inst.monoid, std::move(terms));
    };
    for (unsigned t = 0; t < trials; ++t) {
        Rng rng(seed, t * 2 + 1);
        for (const Instance& inst : instances) {
            ++result.trials;
            RingElement f = random_instance_element(rng, inst);
            RingElement g = random_instance_element(rng, inst);
            RingElement h = random_instance_element(rng, inst);
            bool ok = (f + g) + h == f + (g + h) && (f * g) * h == f * (g * h) &&
                      f * (g + h) == f * g + f * h && f * g == g * f &&
                      f * RingElement::one(inst.ring, inst.monoid) == f &&
                      (f * RingElement::zero(inst.ring, inst.monoid)).is_zero();
            if (!ok) note_failure(result, "element axioms fail over " + inst.monoid->str());
        }
    }
    return result;
}

SuiteResult suite_order(unsigned trials, std::uint64_t seed) {
    SuiteResult result{"order", 0, 0, seed, {}};
    MonoidPtr z2 = Monoid::full_group(AbelianGroup{2, {}});
    TotalOrder order(z2->group());
    for (unsigned t = 0; t < trials; ++t) {
        Rng rng(seed, t);
        ++result.trials;
        auto random_vec = [&] {
            return z2->element({mpz_class(rng.range(-50, 50)), mpz_class(rng.range(-50, 50))});
        };
        MonoidElement a = random_vec();
        MonoidElement b = random_vec();
        MonoidElement x = random_vec();
        if (order.less(a, b)) {
            if (!order.less(z2->add(a, x), z2->add(b, x)))
                note_failure(result, "translation invariance fails");
        }
        if (order.less(a, b) && order.less(b, a)) note_failure(result, "order not antisymmetric");
        if (!(a == b) && !order.less(a, b) && !order.less(b, a))
            note_failure(result, "order not total");
    }
    return result;
}

SuiteResult suite_idempotent_location() {
    SuiteResult result{"idempotent-location", 0, 0, 0, {}};
    MonoidPtr integers = Monoid::full_group(AbelianGroup{1, {}});
    RingPtr ring = CoefficientRing::integers_mod(6);
    std::vector<MonoidElement> degrees;
    for (long d = -2; d <= 2; ++d) degrees.push_back(integers->element({mpz_class(d)}));
    std::vector<RingElement> idempotents;
    for (unsigned code = 0; code < 7776; ++code) {
        ++result.trials;
        unsigned c = code;
        std::vector<std::pair<MonoidElement, Scalar>> terms;
        for (const auto& d : degrees) {
            terms.emplace_back(d, Scalar::of(ring, c % 6));
            c /= 6;
        }
        RingElement f = RingElement::make(ring, integers, std::move(terms));
        if (!is_idempotent(f)) continue;
        idempotents.push_back(f);
        for (const auto& [m, coeff] : f.terms())
            if (!(m == integers->identity()))
                note_failure(result, "idempotent with support off degree 0: " + f.str());
        if (!idempotent_support_in_quasi_torsion(f))
            note_failure(result, "support not quasi-torsion: " + f.str());
    }
    std::set<std::string> found;
    for (const auto& f : idempotents) found.insert(f.str());
    std::set<std::string> expected;
    for (long c : {0L, 1L, 3L, 4L}) {
        RingElement f = RingElement::one(ring, integers).scaled(Scalar::of(ring, c));
        expected.insert(f.str());
    }
    if (found != expected) note_failure(result, "idempotent set is not {0,1,3,4}*e[0]");
    return result;
}

SuiteResult suite_quasi_torsion(unsigned trials, std::uint64_t seed) {
    SuiteResult result{"quasi-torsion", 0, 0, seed, {}};
    // submonoid N(1,0) + N(1,1) of Z x Z/2: compare the canonical-image route
    // with the definitional search (cancellative: n*x + y = y iff n*x = 0)
    AbelianGroup ambient{1, {2}};
    MonoidPtr m = Monoid::submonoid(
        ambient, {MonoidElement{{1, 0}, -1}, MonoidElement{{1, 1}, -1}});
    for (unsigned t = 0; t < trials; ++t) {
        Rng rng(seed, t);
        ++result.trials;
        long a = rng.range(0, 6);
        long b = rng.range(0, 6);
        MonoidElement x = m->identity();
        for (long i = 0; i < a; ++i) x = m->add(x, m->generators()[0]);
        for (long i = 0; i < b; ++i) x = m->add(x, m->generators()[1]);
        bool via_image = quasi_torsion_contains(m, x);
        bool via_search = false;
        MonoidElement nx = x;
        for (unsigned n = 1; n <= 24 && !via_search; ++n) {
            via_search = nx == m->identity() && n >= 1;
            if (!via_search) nx = m->add(nx, x);
        }
        // n*x = 0 scanned for n in [1, 24]
        if (via_image != via_search)
            note_failure(result, "image route vs search on " + x.str());
    }
    // table monoids: direct search vs torsion of the canonical image
    std::vector<MonoidPtr> tables;
    tables.push_back(Monoid::finite_by_table(3, {0, 1, 2, 1, 1, 2, 2, 2, 2}, 0));  // {1,3,0} mod 6
    tables.push_back(Monoid::finite_by_table(2, {0, 1, 1, 0}, 0));                 // Z/2
    for (const MonoidPtr& table : tables) {
        GrothendieckGroup g = grothendieck_group(table);
        for (std::size_t i = 0; i < table->table_size(); ++i) {
            ++result.trials;
            MonoidElement x = table->table_element(i);
            bool via_search = quasi_torsion_contains(table, x);
            MonoidElement image = g.canonical.apply(x);
            bool via_image = true;
            for (std::size_t r = 0; r < g.group.free_rank; ++r)
                if (image.coords[r] != 0) via_image = false;
            if (via_search != via_image)
                note_failure(result, "table search vs image on " + x.str());
        }
    }
    return result;
}

std::vector<std::string> suite_names() {
    return {"mccoy",      "units", "nilpotence",          "componentwise", "snf",
            "ring-axioms", "order", "idempotent-location", "quasi-torsion"};
}

SuiteResult run_suite(const std::string& name, unsigned trials, std::uint64_t seed, long modulus) {
    if (name == "mccoy") return suite_mccoy(trials ? trials : 500, seed, modulus ? modulus : 6);
    if (name == "units") return suite_units(trials ? trials : 500, seed);
    if (name == "nilpotence") return suite_nilpotence(trials ? trials : 500, seed);
    if (name == "componentwise") return suite_componentwise(trials ? trials : 500, seed);
    if (name == "snf") return suite_snf(trials ? trials : 200, seed);
    if (name == "ring-axioms") return suite_ring_axioms(trials ? trials : 1000, seed);
    if (name == "order") return suite_order(trials ? trials : 1000, seed);
    if (name == "idempotent-location") return suite_idempotent_location();
    if (name == "quasi-torsion") return suite_quasi_torsion(trials ? trials : 200, seed);
    fail(errc::unknown_name, "no suite named '" + name + "'");
}

}  // namespace gring
