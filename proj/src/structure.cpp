#include "gring/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "gring/grobner.hpp"
#include "linalg.hpp"

namespace gring {

SupportWindow SupportWindow::range(const MonoidPtr& m, long lo, long hi) {
    SupportWindow w;
    for (long d = lo; d <= hi; ++d) w.degrees.push_back(m->element({mpz_class(d)}));
    return w;
}

namespace {

DegreeOrder require_ordered_grading(const RingElement& f) {
    // raises not_torsion_free when the grading admits no compatible order
    return DegreeOrder(f.monoid());
}

MonoidElement group_negate(const MonoidPtr& m, const MonoidElement& x) {
    IntVec coords = x.coords;
    for (auto& c : coords) c = -c;
    return m->element(std::move(coords));
}

RingElement map_coefficients(const RingElement& f, const RingPtr& target,
                             const std::function<Scalar(const Scalar&)>& fn) {
    std::vector<std::pair<MonoidElement, Scalar>> terms;
    for (const auto& [m, c] : f.terms()) terms.emplace_back(m, fn(c));
    return RingElement::make(target, f.monoid(), std::move(terms));
}

unsigned max_prime_exponent(const RingPtr& ring) {
    unsigned e = 1;
    for (const auto& block : ring->factorization()) e = std::max(e, block.exponent);
    return e;
}

}  // namespace

bool is_nilpotent(const RingElement& f) {
    require_ordered_grading(f);
    for (const auto& [m, c] : f.terms())
        if (!scalar_is_nilpotent(c)) return false;
    return true;
}

BoundedNilpotence is_nilpotent_bruteforce(const RingElement& f, unsigned bound) {
    if (f.is_zero()) return {true, 1};
    // f^bound by binary exponentiation first; nonzero settles NoUpTo at once
    RingElement acc = RingElement::one(f.ring(), f.monoid());
    RingElement base = f;
    unsigned e = bound;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    if (!acc.is_zero()) return {false, bound};
    RingElement power = f;
    for (unsigned k = 1; k <= bound; ++k) {
        if (power.is_zero()) return {true, k};
        power = power * f;
    }
    return {true, bound};  // f^bound == 0 established above
}

const char* UnitCertificate::reason_name(Reason r) {
    switch (r) {
        case Reason::None: return "None";
        case Reason::CoefficientsNotComaximal: return "CoefficientsNotComaximal";
        case Reason::ProductNotNilpotent: return "ProductNotNilpotent";
        case Reason::ConstantNotUnit: return "ConstantNotUnit";
        case Reason::Other: return "Other";
    }
    return "?";
}

namespace {

bool coefficients_comaximal(const RingElement& f) {
    switch (f.ring()->kind()) {
        case RingKind::Rationals: return !f.is_zero();
        case RingKind::Integers: {
            mpz_class g = 0;
            for (const auto& [m, c] : f.terms())
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.int_value().get_mpz_t());
            return g == 1;
        }
        case RingKind::IntegersMod: {
            mpz_class g = f.ring()->modulus();
            for (const auto& [m, c] : f.terms())
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.int_value().get_mpz_t());
            return g == 1;
        }
        default:
            fail(errc::unsupported, "co-maximality is decided for ZZ, QQ and Z/n coefficients only");
    }
}

}  // namespace

UnitCertificate check_unit_characterization(const RingElement& f) {
    if (!f.monoid()->is_group())
        fail(errc::hypothesis_violation,
             "unit characterization applies to group gradings; use is_unit_monoid_ring for " +
                 f.monoid()->str());
    require_ordered_grading(f);
    UnitCertificate cert;
    if (!coefficients_comaximal(f)) {
        cert.is_unit = false;
        cert.reason = UnitCertificate::Reason::CoefficientsNotComaximal;
        cert.detail = "coefficients do not generate the unit ideal";
        return cert;
    }
    const auto& terms = f.terms();
    for (auto i = terms.begin(); i != terms.end(); ++i)
        for (auto k = std::next(i); k != terms.end(); ++k) {
            if (!scalar_is_nilpotent(i->second * k->second)) {
                cert.is_unit = false;
                cert.reason = UnitCertificate::Reason::ProductNotNilpotent;
                cert.failing_pair = {i->first, k->first};
                cert.detail = "product of coefficients at " + i->first.str() + " and " +
                              k->first.str() + " is not nilpotent";
                return cert;
            }
        }
    cert.is_unit = true;
    cert.inverse = invert_group_ring(f);
    return cert;
}

namespace {

RingElement invert_homogeneous(const RingElement& f) {
    const auto& [degree, coeff] = *f.terms().begin();
    MonoidElement minus = group_negate(f.monoid(), degree);
    return RingElement::epsilon(f.ring(), f.monoid(), minus).scaled(scalar_inverse(coeff));
}

}  // namespace

RingElement invert_group_ring(const RingElement& f) {
    if (!f.monoid()->is_group()) fail(errc::hypothesis_violation, "inversion needs a group grading");
    require_ordered_grading(f);
    if (!coefficients_comaximal(f)) fail(errc::not_a_unit, "coefficients are not co-maximal");
    {
        const auto& terms = f.terms();
        for (auto i = terms.begin(); i != terms.end(); ++i)
            for (auto k = std::next(i); k != terms.end(); ++k)
                if (!scalar_is_nilpotent(i->second * k->second))
                    fail(errc::not_a_unit, "pairwise coefficient products are not all nilpotent");
    }
    const RingPtr& ring = f.ring();
    if (ring->kind() == RingKind::Rationals || ring->kind() == RingKind::Integers) {
        // reduced coefficients force a single homogeneous term
        if (f.terms().size() != 1) fail(errc::internal, "unit over a domain must be homogeneous");
        return invert_homogeneous(f);
    }
    if (ring->kind() != RingKind::IntegersMod)
        fail(errc::unsupported, "inversion implemented for ZZ, QQ and Z/n coefficients");

    RingElement inverse = RingElement::zero(ring, f.monoid());
    for (const auto& block : ring->factorization()) {
        mpz_class q;
        mpz_pow_ui(q.get_mpz_t(), block.prime.get_mpz_t(), block.exponent);
        RingPtr ring_q = CoefficientRing::integers_mod(q);
        RingElement f_q = map_coefficients(
            f, ring_q, [&](const Scalar& c) { return Scalar::of(ring_q, c.int_value()); });
        // mod p the element is homogeneous: a single coefficient survives
        const MonoidElement* degree = nullptr;
        const Scalar* unit_coeff = nullptr;
        for (const auto& [m, c] : f_q.terms()) {
            if (mpz_divisible_p(c.int_value().get_mpz_t(), block.prime.get_mpz_t())) continue;
            if (degree) fail(errc::internal, "two unit coefficients mod a prime block");
            degree = &m;
            unit_coeff = &c;
        }
        if (!degree) fail(errc::internal, "no unit coefficient mod a prime block");
        RingElement base_inv = RingElement::epsilon(ring_q, f.monoid(),
                                                    group_negate(f.monoid(), *degree))
                                   .scaled(scalar_inverse(*unit_coeff));
        RingElement nu = base_inv * f_q - RingElement::one(ring_q, f.monoid());
        RingElement series = RingElement::one(ring_q, f.monoid());
        RingElement nu_power = RingElement::one(ring_q, f.monoid());
        for (unsigned j = 1; j < block.exponent; ++j) {
            nu_power = nu_power * (-nu);
            series = series + nu_power;
        }
        RingElement inv_q = series * base_inv;
        if (!(inv_q * f_q).is_one()) fail(errc::internal, "prime-power inverse check failed");
        // CRT recombination with the block idempotent
        const mpz_class& e = block.idempotent;
        RingElement lifted = map_coefficients(
            inv_q, ring, [&](const Scalar& c) { return Scalar::of(ring, c.int_value() * e); });
        inverse = inverse + lifted;
    }
    if (!(inverse * f).is_one()) fail(errc::internal, "CRT inverse check failed");
    return inverse;
}

UnitCertificate is_unit_monoid_ring(const RingElement& f) {
    DegreeOrder order = require_ordered_grading(f);
    const MonoidPtr& m = f.monoid();
    const MonoidElement id = m->identity();
    // the identity must be the minimum of M under the compatible order
    switch (m->kind()) {
        case MonoidKind::FreeCommutative: break;
        case MonoidKind::FullGroup:
            if (m->group().dim() > 0)
                fail(errc::hypothesis_violation,
                     "the identity of a nontrivial group is not its minimum");
            break;
        case MonoidKind::SubmonoidByGenerators:
            for (const auto& g : m->generators())
                if (order.less(g, id))
                    fail(errc::hypothesis_violation,
                         "generator " + g.str() + " lies below the identity");
            break;
        case MonoidKind::FiniteByTable:
            fail(errc::hypothesis_violation, "finite table monoids admit no compatible order");
    }

    UnitCertificate cert;
    Scalar constant = f.coefficient(id);
    if (!scalar_is_unit(constant)) {
        cert.is_unit = false;
        cert.reason = UnitCertificate::Reason::ConstantNotUnit;
        cert.detail = "constant coefficient " + constant.str() + " is not a unit of " +
                      f.ring()->name();
        return cert;
    }
    for (const auto& [deg, c] : f.terms()) {
        if (deg == id) continue;
        if (!scalar_is_nilpotent(c)) {
            cert.is_unit = false;
            cert.reason = UnitCertificate::Reason::ProductNotNilpotent;
            cert.failing_pair = {id, deg};
            cert.detail = "coefficient at " + deg.str() + " is not nilpotent";
            return cert;
        }
    }
    // f = r0 (1 + nu) with nu supported above the identity and nilpotent:
    // every coefficient is a multiple of rad(n), so nu^e = 0 with e the
    // largest prime exponent of n
    Scalar r0_inv = scalar_inverse(constant);
    RingElement nu = f.scaled(r0_inv) - RingElement::one(f.ring(), f.monoid());
    unsigned e = f.ring()->kind() == RingKind::IntegersMod ? max_prime_exponent(f.ring()) : 1;
    RingElement series = RingElement::one(f.ring(), f.monoid());
    RingElement nu_power = RingElement::one(f.ring(), f.monoid());
    for (unsigned j = 1; j < e; ++j) {
        nu_power = nu_power * (-nu);
        series = series + nu_power;
    }
    RingElement inverse = series.scaled(r0_inv);
    if (!(inverse * f).is_one()) fail(errc::internal, "monoid-ring inverse check failed");
    cert.is_unit = true;
    cert.inverse = inverse;
    return cert;
}

ZeroDivisorResult is_zero_divisor(const RingElement& f) {
    require_ordered_grading(f);
    if (f.is_zero()) return {true, Scalar::one(f.ring())};
    switch (f.ring()->kind()) {
        case RingKind::IntegersMod: {
            auto witness = scalar_constant_annihilator(f.coefficients());
            if (witness) return {true, witness};
            return {false, std::nullopt};
        }
        case RingKind::Rationals:
        case RingKind::Integers:
            return {false, std::nullopt};  // monoid ring over a domain, ordered grading
        default:
            fail(errc::unsupported, "zero-divisor decision needs ZZ, QQ or Z/n coefficients");
    }
}

RingElement shrink_to_homogeneous_annihilator(const RingElement& g, const IdealSpec& ideal) {
    if (g.is_zero()) fail(errc::not_an_annihilator, "the seed annihilator must be nonzero");
    if (ideal.generators.empty()) fail(errc::empty_input, "ideal with no generators");
    for (const auto& h : ideal.generators) {
        require_same_ring(g.ring(), h.ring());
        require_same_monoid(g.monoid(), h.monoid());
    }
    DegreeOrder order(g.monoid());
    auto annihilates_all = [&](const RingElement& candidate) {
        for (const auto& h : ideal.generators)
            if (!(candidate * h).is_zero()) return false;
        return true;
    };
    if (!annihilates_all(g))
        fail(errc::not_an_annihilator, "the seed does not annihilate every generator");

    RingElement current = g;
    std::size_t budget = current.terms().size() + 1;
    for (std::size_t step = 0; step < budget; ++step) {
        for (const auto& [m, c] : current.terms()) {
            RingElement component = current.homogeneous_component(m);
            if (annihilates_all(component)) return component;
        }
        // highest component fails on some generator; shrink along the proof
        MonoidElement top = leading_degree(current, order);
        RingElement top_component = current.homogeneous_component(top);
        const RingElement* generator = nullptr;
        for (const auto& h : ideal.generators)
            if (!(top_component * h).is_zero()) {
                generator = &h;
                break;
            }
        if (!generator) fail(errc::internal, "no generator despite failing components");
        std::vector<MonoidElement> gen_support = generator->support();
        std::sort(gen_support.begin(), gen_support.end(),
                  [&](const MonoidElement& a, const MonoidElement& b) { return order.less(b, a); });
        RingElement next = RingElement::zero(g.ring(), g.monoid());
        bool found = false;
        for (const MonoidElement& t : gen_support) {
            RingElement product = current * generator->homogeneous_component(t);
            if (!product.is_zero()) {
                // degree argument: the top coefficient dies, support shrinks
                if (!(top_component * generator->homogeneous_component(t)).is_zero())
                    fail(errc::internal, "top-degree product expected to vanish");
                if (product.terms().size() >= current.terms().size())
                    fail(errc::internal, "support did not shrink");
                next = product;
                found = true;
                break;
            }
        }
        if (!found) fail(errc::internal, "no surviving generator component");
        current = next;
    }
    fail(errc::internal, "shrink did not terminate within the support budget");
}

bool is_idempotent(const RingElement& f) { return f * f == f; }

bool idempotent_support_in_quasi_torsion(const RingElement& f) {
    for (const auto& [m, c] : f.terms())
        if (!quasi_torsion_contains(f.monoid(), m)) return false;
    return true;
}

ComponentwiseNilpotence componentwise_nilpotent_product(const RingElement& f, const RingElement& g) {
    require_same_ring(f.ring(), g.ring());
    require_same_monoid(f.monoid(), g.monoid());
    require_ordered_grading(f);
    ComponentwiseNilpotence out;
    out.product_nilpotent = is_nilpotent(f * g);
    out.all_pairs_nilpotent = true;
    for (const auto& [mi, ci] : f.terms())
        for (const auto& [mk, ck] : g.terms()) {
            if (!scalar_is_nilpotent(ci * ck)) {
                out.all_pairs_nilpotent = false;
                if (!out.failing_pair) out.failing_pair = {mi, mk};
            }
        }
    if (!out.consistent())
        fail(errc::internal, "componentwise nilpotence disagrees with the product route");
    return out;
}

// ---------------------------------------------------------------------------
// windowed annihilators

namespace {

std::vector<MonoidElement> normalize_window(const RingElement& f, const SupportWindow& window) {
    std::set<MonoidElement> degrees;
    for (const auto& w : window.degrees) {
        if (!f.monoid()->valid(w)) fail(errc::invalid_element, "window degree outside the monoid");
        degrees.insert(w);
    }
    if (degrees.empty()) fail(errc::empty_input, "empty support window");
    return {degrees.begin(), degrees.end()};
}

std::vector<RingElement> annihilator_window_mod(const RingElement& f,
                                                const std::vector<MonoidElement>& window) {
    const mpz_class& n = f.ring()->modulus();
    std::map<MonoidElement, std::size_t> rows;
    for (const auto& w : window)
        for (const auto& [m, c] : f.terms()) rows.emplace(f.monoid()->add(w, m), rows.size());
    IntMat a(rows.size(), IntVec(window.size(), 0));
    for (std::size_t j = 0; j < window.size(); ++j)
        for (const auto& [m, c] : f.terms()) {
            std::size_t i = rows.at(f.monoid()->add(window[j], m));
            a[i][j] += c.int_value();
        }
    std::vector<RingElement> basis;
    for (const IntVec& x : kernel_mod(a, n)) {
        std::vector<std::pair<MonoidElement, Scalar>> terms;
        for (std::size_t j = 0; j < window.size(); ++j)
            terms.emplace_back(window[j], Scalar::of(f.ring(), x[j]));
        RingElement h = RingElement::make(f.ring(), f.monoid(), std::move(terms));
        if (!h.is_zero()) basis.push_back(std::move(h));
    }
    return basis;
}

std::vector<RingElement> annihilator_window_field(const RingElement& f,
                                                  const std::vector<MonoidElement>& window) {
    const RingPtr& field = f.ring();
    std::map<MonoidElement, std::size_t> rows;
    for (const auto& w : window)
        for (const auto& [m, c] : f.terms()) rows.emplace(f.monoid()->add(w, m), rows.size());
    linalg::Mat a(rows.size(), linalg::Vec(window.size(), Scalar::zero(field)));
    for (std::size_t j = 0; j < window.size(); ++j)
        for (const auto& [m, c] : f.terms()) {
            std::size_t i = rows.at(f.monoid()->add(window[j], m));
            a[i][j] = a[i][j] + c;
        }
    std::vector<RingElement> basis;
    for (const linalg::Vec& x : linalg::kernel(std::move(a), field, window.size())) {
        std::vector<std::pair<MonoidElement, Scalar>> terms;
        for (std::size_t j = 0; j < window.size(); ++j) terms.emplace_back(window[j], x[j]);
        RingElement h = RingElement::make(field, f.monoid(), std::move(terms));
        if (!h.is_zero()) basis.push_back(std::move(h));
    }
    return basis;
}

std::vector<RingElement> annihilator_window_quotient(const RingElement& f,
                                                     const std::vector<MonoidElement>& window,
                                                     unsigned degree_bound) {
    const RingPtr& ring = f.ring();
    const auto& quotient = ring->quotient();
    const PolyRingPtr& poly_ring = quotient->poly_ring();
    const RingPtr& field = poly_ring->field();

    // coefficient space: the whole staircase when finite, else standard
    // monomials up to the degree bound
    std::vector<Monomial> coeff_basis;
    {
        auto finite = quotient->standard_monomials();
        if (finite) {
            coeff_basis = *finite;
        } else {
            const std::size_t nvars = poly_ring->nvars();
            Monomial m = Monomial::one(nvars);
            for (;;) {
                bool standard = m.total_degree() <= degree_bound;
                for (const Polynomial& g : quotient->basis().generators())
                    if (standard && m.divisible_by(g.leading_monomial())) standard = false;
                if (standard) coeff_basis.push_back(m);
                std::size_t v = 0;
                while (v < nvars) {
                    if (++m.exps[v] <= degree_bound) break;
                    m.exps[v] = 0;
                    ++v;
                }
                if (v == nvars) break;
            }
        }
    }
    const std::size_t unknowns = window.size() * coeff_basis.size();
    if (unknowns == 0) return {};

    // rows: (product degree, standard monomial of the reduced product)
    std::map<std::pair<MonoidElement, Monomial>, std::size_t> rows;
    linalg::Mat a;
    auto row_of = [&](const MonoidElement& d, const Monomial& g) {
        auto [it, fresh] = rows.emplace(std::make_pair(d, g), rows.size());
        if (fresh) a.emplace_back(unknowns, Scalar::zero(field));
        return it->second;
    };
    for (std::size_t w = 0; w < window.size(); ++w)
        for (std::size_t b = 0; b < coeff_basis.size(); ++b) {
            const std::size_t col = w * coeff_basis.size() + b;
            Polynomial beta = Polynomial::term(poly_ring, coeff_basis[b], Scalar::one(field));
            for (const auto& [m, c] : f.terms()) {
                MonoidElement d = f.monoid()->add(window[w], m);
                Polynomial product = quotient->reduce(beta * c.poly_value());
                for (const auto& [gamma, coeff] : product.terms()) {
                    std::size_t i = row_of(d, gamma);
                    a[i][col] = a[i][col] + coeff;
                }
            }
        }
    std::vector<RingElement> basis;
    for (const linalg::Vec& x : linalg::kernel(std::move(a), field, unknowns)) {
        std::vector<std::pair<MonoidElement, Scalar>> terms;
        for (std::size_t w = 0; w < window.size(); ++w) {
            std::vector<std::pair<Monomial, Scalar>> poly_terms;
            for (std::size_t b = 0; b < coeff_basis.size(); ++b) {
                const Scalar& coeff = x[w * coeff_basis.size() + b];
                if (!coeff.is_zero()) poly_terms.emplace_back(coeff_basis[b], coeff);
            }
            if (!poly_terms.empty())
                terms.emplace_back(window[w],
                                   Scalar::quotient_class(ring, Polynomial::make(poly_ring,
                                                                                 std::move(poly_terms))));
        }
        RingElement h = RingElement::make(ring, f.monoid(), std::move(terms));
        if (!h.is_zero()) basis.push_back(std::move(h));
    }
    return basis;
}

}  // namespace

std::vector<RingElement> annihilator_in_window(const RingElement& f, const SupportWindow& window,
                                               const AnnihilatorOptions& options) {
    std::vector<MonoidElement> degrees = normalize_window(f, window);
    if (f.is_zero()) {
        std::vector<RingElement> basis;
        for (const auto& w : degrees) basis.push_back(RingElement::epsilon(f.ring(), f.monoid(), w));
        return basis;
    }
    std::vector<RingElement> basis;
    switch (f.ring()->kind()) {
        case RingKind::IntegersMod: basis = annihilator_window_mod(f, degrees); break;
        case RingKind::Rationals: basis = annihilator_window_field(f, degrees); break;
        case RingKind::PolynomialQuotient:
            basis = annihilator_window_quotient(f, degrees, options.coefficient_degree_bound);
            break;
        case RingKind::Integers:
            fail(errc::unsupported, "windowed annihilators need Z/n, QQ or quotient coefficients");
    }
    for (const auto& h : basis)
        if (!(h * f).is_zero()) fail(errc::internal, "windowed kernel element fails to annihilate");
    if (basis.empty()) {
        try {
            if (is_zero_divisor(f).is_zero_divisor)
                fail(errc::window_too_small,
                     "f is a zero-divisor but no annihilator fits the window; enlarge it");
        } catch (const Error& e) {
            if (e.code() == errc::window_too_small) throw;
            // zero-divisor status undecidable here; an empty kernel stands
        }
    }
    return basis;
}

GradednessResult annihilator_is_graded_in_window(const RingElement& f, const SupportWindow& window,
                                                 const AnnihilatorOptions& options) {
    GradednessResult out;
    for (const RingElement& h : annihilator_in_window(f, window, options)) {
        for (const auto& [m, c] : h.terms()) {
            RingElement component = h.homogeneous_component(m);
            if (!(component * f).is_zero()) {
                out.graded = false;
                out.failing_component = component;
                return out;
            }
        }
    }
    return out;
}

NilradicalGradednessResult nilradical_graded_check(const std::vector<RingElement>& nilpotents,
                                                   const MonoidMorphism& grading, unsigned bound) {
    NilradicalGradednessResult out;
    for (const RingElement& f : nilpotents) {
        if (f.is_zero()) continue;
        if (!is_nilpotent_bruteforce(f, bound).nilpotent)
            fail(errc::invalid_element, "supplied element " + f.str() + " is not nilpotent");
        GradedView view = regrade(f, grading);
        // highest degree first, so the canonical witness of the torsion
        // counterexamples is the positive-degree component
        for (auto it = view.components.rbegin(); it != view.components.rend(); ++it) {
            const auto& [degree, component] = *it;
            if (component.is_zero()) continue;
            if (!is_nilpotent_bruteforce(component, bound).nilpotent) {
                out.graded = false;
                out.witness_component = component;
                out.witness_degree = degree;
                return out;
            }
        }
    }
    return out;
}

}  // namespace gring
