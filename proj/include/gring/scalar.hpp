#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gring/error.hpp"

namespace gring {

class Polynomial;
class QuotientRing;

enum class RingKind { Integers, Rationals, IntegersMod, PolynomialQuotient };

/// One prime-power block of Z/n together with its CRT idempotent
/// (e == 1 mod p^k, e == 0 mod every other block; x == sum x_i e_i mod n).
struct PrimePower {
    mpz_class prime;
    unsigned exponent = 0;
    mpz_class idempotent;
};

std::vector<PrimePower> crt_decompose(const mpz_class& n);

class CoefficientRing;
using RingPtr = std::shared_ptr<const CoefficientRing>;

/// Descriptor of a supported commutative coefficient ring. Immutable; moduli
/// are factored eagerly at construction so radical queries are cheap.
class CoefficientRing {
public:
    static RingPtr integers();
    static RingPtr rationals();
    static RingPtr integers_mod(const mpz_class& n);
    static RingPtr polynomial_quotient(std::shared_ptr<const QuotientRing> quotient);

    /// Largest accepted modulus for Z/n descriptors.
    static const mpz_class& max_modulus();

    RingKind kind() const { return kind_; }
    bool is_field() const;

    const mpz_class& modulus() const;
    const mpz_class& radical() const;
    const std::vector<PrimePower>& factorization() const;
    const std::shared_ptr<const QuotientRing>& quotient() const;

    std::string name() const;

private:
    explicit CoefficientRing(RingKind kind) : kind_(kind) {}

    RingKind kind_;
    mpz_class modulus_;
    mpz_class radical_;
    std::vector<PrimePower> factors_;
    std::shared_ptr<const QuotientRing> quotient_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b);

/// An exact element of one of the supported rings, kept in canonical form:
/// residues in [0, n), fractions reduced with positive denominator, quotient
/// classes Groebner-reduced. Two scalars are equal iff their canonical
/// representatives are identical.
class Scalar {
public:
    Scalar();  // integer zero

    static Scalar integer(mpz_class v);
    static Scalar rational(mpq_class v);
    /// Canonical image of an integer in `ring` (reduces mod n, embeds in QQ or
    /// a quotient as the constant class).
    static Scalar of(const RingPtr& ring, const mpz_class& v);
    static Scalar of_rational(const RingPtr& ring, const mpq_class& v);
    static Scalar quotient_class(const RingPtr& ring, Polynomial normal_form);
    static Scalar zero(const RingPtr& ring) { return of(ring, 0); }
    static Scalar one(const RingPtr& ring) { return of(ring, 1); }

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const;
    bool is_one() const;

    const mpz_class& int_value() const;   // Integers / IntegersMod
    const mpq_class& rat_value() const;   // Rationals
    const Polynomial& poly_value() const; // PolynomialQuotient

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    bool operator==(const Scalar& other) const;
    bool operator!=(const Scalar& other) const { return !(*this == other); }

    /// Deterministic ordering used for canonical printing and map keys.
    bool operator<(const Scalar& other) const;

    std::string str() const;

private:
    RingPtr ring_;
    std::variant<mpz_class, mpq_class, std::shared_ptr<const Polynomial>> value_;
};

bool scalar_is_unit(const Scalar& a);
Scalar scalar_inverse(const Scalar& a);
bool scalar_is_nilpotent(const Scalar& a);

/// Nonzero a with a*c = 0 for every coefficient c, when one exists.
/// All scalars must live in one Z/n ring.
std::optional<Scalar> scalar_constant_annihilator(const std::vector<Scalar>& coeffs);

/// Newton lift e <- 3e^2 - 2e^3 of an idempotent-mod-rad(n) residue to a true
/// idempotent of Z/n congruent to it mod rad(n).
Scalar lift_idempotent(const Scalar& a);

/// Yes(k) carries the minimal exponent with a^k = 0; otherwise NoUpTo(bound).
struct BoundedNilpotence {
    bool nilpotent = false;
    unsigned value = 0;
};

}  // namespace gring
