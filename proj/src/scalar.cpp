#include "gring/scalar.hpp"

#include <algorithm>
#include <utility>

#include "gring/grobner.hpp"

namespace gring {

const char* errc_name(errc code) {
    switch (code) {
        case errc::ring_mismatch: return "RingMismatch";
        case errc::monoid_mismatch: return "MonoidMismatch";
        case errc::morphism_mismatch: return "MorphismMismatch";
        case errc::not_a_unit: return "NotAUnit";
        case errc::unsupported: return "Unsupported";
        case errc::not_idempotent_modulo_nilradical: return "NotIdempotentModuloNilradical";
        case errc::empty_input: return "EmptyInput";
        case errc::invalid_element: return "InvalidElement";
        case errc::zero_element: return "ZeroElement";
        case errc::not_torsion_free: return "NotTorsionFree";
        case errc::hypothesis_violation: return "HypothesisViolation";
        case errc::not_an_annihilator: return "NotAnAnnihilator";
        case errc::window_too_small: return "WindowTooSmall";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::unknown_name: return "UnknownName";
        case errc::syntax_error: return "SyntaxError";
        case errc::usage_error: return "UsageError";
        case errc::internal: return "Internal";
    }
    return "Unknown";
}

std::vector<PrimePower> crt_decompose(const mpz_class& n) {
    if (n < 2) fail(errc::invalid_element, "crt_decompose requires n >= 2, got " + n.get_str());
    std::vector<PrimePower> out;
    mpz_class rest = n;
    auto take = [&](const mpz_class& p) {
        unsigned k = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            ++k;
        }
        if (k > 0) out.push_back(PrimePower{p, k, 0});
    };
    take(2);
    for (mpz_class p = 3; p * p <= rest; p += 2) take(p);
    if (rest > 1) out.push_back(PrimePower{rest, 1, 0});

    for (auto& block : out) {
        mpz_class q;
        mpz_pow_ui(q.get_mpz_t(), block.prime.get_mpz_t(), block.exponent);
        mpz_class cofactor = n / q;
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), cofactor.get_mpz_t(), q.get_mpz_t()) == 0)
            fail(errc::internal, "CRT cofactor not invertible");
        block.idempotent = (cofactor * inv) % n;
    }
    return out;
}

const mpz_class& CoefficientRing::max_modulus() {
    static const mpz_class bound = mpz_class(1) << 31;
    return bound;
}

RingPtr CoefficientRing::integers() {
    static const RingPtr instance(new CoefficientRing(RingKind::Integers));
    return instance;
}

RingPtr CoefficientRing::rationals() {
    static const RingPtr instance(new CoefficientRing(RingKind::Rationals));
    return instance;
}

RingPtr CoefficientRing::integers_mod(const mpz_class& n) {
    if (n < 2) fail(errc::invalid_element, "modulus must be >= 2, got " + n.get_str());
    if (n > max_modulus()) fail(errc::unsupported, "modulus exceeds the configured bound 2^31");
    auto ring = std::shared_ptr<CoefficientRing>(new CoefficientRing(RingKind::IntegersMod));
    ring->modulus_ = n;
    ring->factors_ = crt_decompose(n);
    ring->radical_ = 1;
    for (const auto& block : ring->factors_) ring->radical_ *= block.prime;
    return ring;
}

RingPtr CoefficientRing::polynomial_quotient(std::shared_ptr<const QuotientRing> quotient) {
    if (!quotient) fail(errc::invalid_element, "null quotient handle");
    auto ring = std::shared_ptr<CoefficientRing>(new CoefficientRing(RingKind::PolynomialQuotient));
    ring->quotient_ = std::move(quotient);
    return ring;
}

bool CoefficientRing::is_field() const {
    if (kind_ == RingKind::Rationals) return true;
    if (kind_ == RingKind::IntegersMod) return factors_.size() == 1 && factors_.front().exponent == 1;
    return false;
}

const mpz_class& CoefficientRing::modulus() const {
    if (kind_ != RingKind::IntegersMod) fail(errc::internal, "modulus of a non-modular ring");
    return modulus_;
}

const mpz_class& CoefficientRing::radical() const {
    if (kind_ != RingKind::IntegersMod) fail(errc::internal, "radical of a non-modular ring");
    return radical_;
}

const std::vector<PrimePower>& CoefficientRing::factorization() const {
    if (kind_ != RingKind::IntegersMod) fail(errc::internal, "factorization of a non-modular ring");
    return factors_;
}

const std::shared_ptr<const QuotientRing>& CoefficientRing::quotient() const {
    if (kind_ != RingKind::PolynomialQuotient) fail(errc::internal, "quotient of a plain ring");
    return quotient_;
}

std::string CoefficientRing::name() const {
    switch (kind_) {
        case RingKind::Integers: return "ZZ";
        case RingKind::Rationals: return "QQ";
        case RingKind::IntegersMod: return "Zmod(" + modulus_.get_str() + ")";
        case RingKind::PolynomialQuotient: return quotient_->poly_ring()->name() + "/I";
    }
    return "?";
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind() != b->kind()) return false;
    switch (a->kind()) {
        case RingKind::Integers:
        case RingKind::Rationals: return true;
        case RingKind::IntegersMod: return a->modulus() == b->modulus();
        case RingKind::PolynomialQuotient: return a->quotient() == b->quotient();
    }
    return false;
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!same_ring(a, b))
        fail(errc::ring_mismatch, a->name() + " vs " + b->name());
}

Scalar::Scalar() : ring_(CoefficientRing::integers()), value_(mpz_class(0)) {}

Scalar Scalar::integer(mpz_class v) {
    Scalar s;
    s.ring_ = CoefficientRing::integers();
    s.value_ = std::move(v);
    return s;
}

Scalar Scalar::rational(mpq_class v) {
    v.canonicalize();
    Scalar s;
    s.ring_ = CoefficientRing::rationals();
    s.value_ = std::move(v);
    return s;
}

Scalar Scalar::of(const RingPtr& ring, const mpz_class& v) {
    Scalar s;
    s.ring_ = ring;
    switch (ring->kind()) {
        case RingKind::Integers: s.value_ = v; break;
        case RingKind::Rationals: s.value_ = mpq_class(v); break;
        case RingKind::IntegersMod: {
            mpz_class r;
            mpz_mod(r.get_mpz_t(), v.get_mpz_t(), ring->modulus().get_mpz_t());
            s.value_ = r;
            break;
        }
        case RingKind::PolynomialQuotient: {
            const auto& q = ring->quotient();
            Polynomial c = Polynomial::constant(q->poly_ring(), Scalar::of(q->poly_ring()->field(), v));
            s.value_ = std::make_shared<const Polynomial>(std::move(c));
            break;
        }
    }
    return s;
}

Scalar Scalar::of_rational(const RingPtr& ring, const mpq_class& v) {
    mpq_class canonical = v;
    canonical.canonicalize();
    if (canonical.get_den() == 1) return of(ring, canonical.get_num());
    switch (ring->kind()) {
        case RingKind::Rationals: return rational(canonical);
        case RingKind::IntegersMod: {
            mpz_class inv;
            if (mpz_invert(inv.get_mpz_t(), canonical.get_den().get_mpz_t(),
                           ring->modulus().get_mpz_t()) == 0)
                fail(errc::not_a_unit,
                     "denominator " + canonical.get_den().get_str() + " not invertible mod " +
                         ring->modulus().get_str());
            return of(ring, canonical.get_num() * inv);
        }
        case RingKind::PolynomialQuotient: {
            const auto& field = ring->quotient()->poly_ring()->field();
            Scalar c = of_rational(field, canonical);
            Polynomial p = Polynomial::constant(ring->quotient()->poly_ring(), c);
            return quotient_class(ring, std::move(p));
        }
        case RingKind::Integers:
            fail(errc::invalid_element, "fraction " + canonical.get_str() + " is not an integer");
    }
    fail(errc::internal, "unreachable");
}

Scalar Scalar::quotient_class(const RingPtr& ring, Polynomial normal_form) {
    if (ring->kind() != RingKind::PolynomialQuotient)
        fail(errc::internal, "quotient_class on a plain ring");
    Scalar s;
    s.ring_ = ring;
    s.value_ = std::make_shared<const Polynomial>(ring->quotient()->reduce(normal_form));
    return s;
}

bool Scalar::is_zero() const {
    switch (ring_->kind()) {
        case RingKind::Integers:
        case RingKind::IntegersMod: return std::get<mpz_class>(value_) == 0;
        case RingKind::Rationals: return std::get<mpq_class>(value_) == 0;
        case RingKind::PolynomialQuotient: return poly_value().is_zero();
    }
    return false;
}

bool Scalar::is_one() const {
    switch (ring_->kind()) {
        case RingKind::Integers:
        case RingKind::IntegersMod: return std::get<mpz_class>(value_) == 1;
        case RingKind::Rationals: return std::get<mpq_class>(value_) == 1;
        case RingKind::PolynomialQuotient: {
            const Polynomial& p = poly_value();
            return p.terms().size() == 1 && p.terms().front().first.is_one() &&
                   p.terms().front().second.is_one();
        }
    }
    return false;
}

const mpz_class& Scalar::int_value() const { return std::get<mpz_class>(value_); }
const mpq_class& Scalar::rat_value() const { return std::get<mpq_class>(value_); }
const Polynomial& Scalar::poly_value() const {
    return *std::get<std::shared_ptr<const Polynomial>>(value_);
}

Scalar Scalar::operator-() const {
    Scalar s;
    s.ring_ = ring_;
    switch (ring_->kind()) {
        case RingKind::Integers: s.value_ = mpz_class(-int_value()); break;
        case RingKind::Rationals: s.value_ = mpq_class(-rat_value()); break;
        case RingKind::IntegersMod: {
            mpz_class r = -int_value();
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), ring_->modulus().get_mpz_t());
            s.value_ = r;
            break;
        }
        case RingKind::PolynomialQuotient:
            s.value_ = std::make_shared<const Polynomial>(-poly_value());
            break;
    }
    return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same_ring(a.ring_, b.ring_);
    Scalar s;
    s.ring_ = a.ring_;
    switch (a.ring_->kind()) {
        case RingKind::Integers: s.value_ = mpz_class(a.int_value() + b.int_value()); break;
        case RingKind::Rationals: {
            mpq_class r = a.rat_value() + b.rat_value();
            r.canonicalize();
            s.value_ = r;
            break;
        }
        case RingKind::IntegersMod: {
            mpz_class r = a.int_value() + b.int_value();
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), a.ring_->modulus().get_mpz_t());
            s.value_ = r;
            break;
        }
        case RingKind::PolynomialQuotient:
            // sums of normal forms stay normal
            s.value_ = std::make_shared<const Polynomial>(a.poly_value() + b.poly_value());
            break;
    }
    return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same_ring(a.ring_, b.ring_);
    Scalar s;
    s.ring_ = a.ring_;
    switch (a.ring_->kind()) {
        case RingKind::Integers: s.value_ = mpz_class(a.int_value() * b.int_value()); break;
        case RingKind::Rationals: {
            mpq_class r = a.rat_value() * b.rat_value();
            r.canonicalize();
            s.value_ = r;
            break;
        }
        case RingKind::IntegersMod: {
            mpz_class r = a.int_value() * b.int_value();
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), a.ring_->modulus().get_mpz_t());
            s.value_ = r;
            break;
        }
        case RingKind::PolynomialQuotient: {
            Polynomial product = a.poly_value() * b.poly_value();
            s.value_ = std::make_shared<const Polynomial>(a.ring_->quotient()->reduce(product));
            break;
        }
    }
    return s;
}

bool Scalar::operator==(const Scalar& other) const {
    if (!same_ring(ring_, other.ring_)) return false;
    switch (ring_->kind()) {
        case RingKind::Integers:
        case RingKind::IntegersMod: return int_value() == other.int_value();
        case RingKind::Rationals: return rat_value() == other.rat_value();
        case RingKind::PolynomialQuotient: return poly_value() == other.poly_value();
    }
    return false;
}

bool Scalar::operator<(const Scalar& other) const {
    switch (ring_->kind()) {
        case RingKind::Integers:
        case RingKind::IntegersMod: return int_value() < other.int_value();
        case RingKind::Rationals: return rat_value() < other.rat_value();
        case RingKind::PolynomialQuotient: return str() < other.str();
    }
    return false;
}

std::string Scalar::str() const {
    switch (ring_->kind()) {
        case RingKind::Integers:
        case RingKind::IntegersMod: return int_value().get_str();
        case RingKind::Rationals: return rat_value().get_str();
        case RingKind::PolynomialQuotient: return "{" + poly_value().str() + "}";
    }
    return "?";
}

bool scalar_is_unit(const Scalar& a) {
    switch (a.ring()->kind()) {
        case RingKind::Integers: return a.int_value() == 1 || a.int_value() == -1;
        case RingKind::Rationals: return !a.is_zero();
        case RingKind::IntegersMod: {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), a.int_value().get_mpz_t(), a.ring()->modulus().get_mpz_t());
            return g == 1;
        }
        case RingKind::PolynomialQuotient: return quotient_scalar_is_unit(a);
    }
    return false;
}

Scalar scalar_inverse(const Scalar& a) {
    switch (a.ring()->kind()) {
        case RingKind::Integers:
            if (a.int_value() == 1 || a.int_value() == -1) return a;
            fail(errc::not_a_unit, a.str() + " is not a unit of ZZ");
        case RingKind::Rationals: {
            if (a.is_zero()) fail(errc::not_a_unit, "0 is not a unit of QQ");
            mpq_class inv = 1 / a.rat_value();
            inv.canonicalize();
            return Scalar::rational(inv);
        }
        case RingKind::IntegersMod: {
            mpz_class inv;
            if (mpz_invert(inv.get_mpz_t(), a.int_value().get_mpz_t(),
                           a.ring()->modulus().get_mpz_t()) == 0)
                fail(errc::not_a_unit,
                     a.str() + " is not a unit mod " + a.ring()->modulus().get_str());
            return Scalar::of(a.ring(), inv);
        }
        case RingKind::PolynomialQuotient: return quotient_scalar_inverse(a);
    }
    fail(errc::internal, "unreachable");
}

bool scalar_is_nilpotent(const Scalar& a) {
    switch (a.ring()->kind()) {
        case RingKind::Integers:
        case RingKind::Rationals: return a.is_zero();
        case RingKind::IntegersMod:
            // nilpotent iff rad(n) divides a
            return mpz_divisible_p(a.int_value().get_mpz_t(), a.ring()->radical().get_mpz_t()) != 0;
        case RingKind::PolynomialQuotient:
            fail(errc::unsupported, "nilpotence of quotient scalars is bounded-only; use is_nilpotent_bounded");
    }
    return false;
}

std::optional<Scalar> scalar_constant_annihilator(const std::vector<Scalar>& coeffs) {
    if (coeffs.empty()) fail(errc::empty_input, "constant annihilator of an empty coefficient list");
    const RingPtr& ring = coeffs.front().ring();
    if (ring->kind() != RingKind::IntegersMod)
        fail(errc::unsupported, "constant annihilator needs Z/n coefficients");
    const mpz_class& n = ring->modulus();
    mpz_class g = n;
    for (const Scalar& c : coeffs) {
        require_same_ring(ring, c.ring());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.int_value().get_mpz_t());
    }
    if (g == 1) return std::nullopt;
    return Scalar::of(ring, n / g);
}

Scalar lift_idempotent(const Scalar& a) {
    const RingPtr& ring = a.ring();
    if (ring->kind() != RingKind::IntegersMod)
        fail(errc::unsupported, "idempotent lifting needs a Z/n scalar");
    const mpz_class& rad = ring->radical();
    mpz_class defect = a.int_value() * a.int_value() - a.int_value();
    if (!mpz_divisible_p(defect.get_mpz_t(), rad.get_mpz_t()))
        fail(errc::not_idempotent_modulo_nilradical,
             a.str() + " is not idempotent mod rad(" + ring->modulus().get_str() + ") = " +
                 rad.get_str());
    unsigned max_exponent = 1;
    for (const auto& block : ring->factorization())
        max_exponent = std::max(max_exponent, block.exponent);
    unsigned iterations = 1;
    while ((1u << iterations) < max_exponent) ++iterations;
    Scalar e = a;
    for (unsigned i = 0; i <= iterations + 1; ++i) {
        if (e * e == e) return e;
        Scalar e2 = e * e;
        Scalar e3 = e2 * e;
        e = Scalar::of(ring, 3 * e2.int_value() - 2 * e3.int_value());
    }
    if (e * e == e) return e;
    fail(errc::internal, "idempotent lift did not converge");
}

}  // namespace gring
