#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gring/scalar.hpp"

namespace gring {

enum class TermOrder { Lex, GrevLex };

const char* term_order_name(TermOrder order);

struct Monomial {
    std::vector<unsigned> exps;

    static Monomial one(std::size_t nvars) { return Monomial{std::vector<unsigned>(nvars, 0)}; }
    unsigned total_degree() const;
    bool is_one() const { return total_degree() == 0; }
    bool divisible_by(const Monomial& d) const;
    Monomial operator*(const Monomial& other) const;
    Monomial operator/(const Monomial& d) const;  // requires divisibility
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool operator==(const Monomial& other) const { return exps == other.exps; }
    bool operator<(const Monomial& other) const { return exps < other.exps; }  // storage order only
};

/// <0, 0, >0 as a comes before/equal/after b in descending term order.
int order_compare(TermOrder order, const Monomial& a, const Monomial& b);

class PolyRing;
using PolyRingPtr = std::shared_ptr<const PolyRing>;

/// Ambient polynomial ring over a field (QQ or Z/p) with a fixed term order.
class PolyRing {
public:
    static PolyRingPtr make(RingPtr field, std::vector<std::string> vars, TermOrder order);

    const RingPtr& field() const { return field_; }
    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    TermOrder order() const { return order_; }
    std::string name() const;

    /// Variable count cap; Buchberger instances beyond this are refused.
    static constexpr std::size_t max_vars = 8;

private:
    PolyRing(RingPtr field, std::vector<std::string> vars, TermOrder order)
        : field_(std::move(field)), vars_(std::move(vars)), order_(order) {}

    RingPtr field_;
    std::vector<std::string> vars_;
    TermOrder order_;
};

class Polynomial {
public:
    static Polynomial zero(PolyRingPtr ring);
    static Polynomial constant(PolyRingPtr ring, const Scalar& c);
    static Polynomial term(PolyRingPtr ring, Monomial m, const Scalar& c);
    /// Collects duplicate monomials, drops zeros, sorts descending.
    static Polynomial make(PolyRingPtr ring, std::vector<std::pair<Monomial, Scalar>> terms);

    const PolyRingPtr& ring() const { return ring_; }
    const std::vector<std::pair<Monomial, Scalar>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    const Monomial& leading_monomial() const;
    const Scalar& leading_coefficient() const;
    Scalar coefficient(const Monomial& m) const;
    unsigned total_degree() const;  // 0 for the zero polynomial

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Scalar& c) const;
    Polynomial monic() const;
    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    std::string str() const;

private:
    explicit Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}

    PolyRingPtr ring_;
    std::vector<std::pair<Monomial, Scalar>> terms_;  // strictly descending in ring order
};

/// Reduced Groebner basis: monic generators, no leading monomial divides
/// another, tails fully reduced. Certified at construction (every S-polynomial
/// of basis pairs reduces to zero).
class GroebnerBasis {
public:
    const PolyRingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    friend GroebnerBasis buchberger(const PolyRingPtr& ring, std::vector<Polynomial> gens,
                                    std::size_t budget);

private:
    GroebnerBasis(PolyRingPtr ring, std::vector<Polynomial> gens)
        : ring_(std::move(ring)), gens_(std::move(gens)) {}

    PolyRingPtr ring_;
    std::vector<Polynomial> gens_;
};

GroebnerBasis buchberger(const PolyRingPtr& ring, std::vector<Polynomial> gens,
                         std::size_t budget = 100000);

/// Fully reduced remainder; zero exactly on ideal members.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// Division with recorded quotients: f = sum quotients[i] * gb[i] + remainder.
struct DivisionResult {
    Polynomial remainder;
    std::vector<Polynomial> quotients;  // one per basis generator
};
DivisionResult divide(const Polynomial& f, const GroebnerBasis& gb);

/// k[x1..xm]/I presented by a completed basis; the handle target of
/// PolynomialQuotient coefficient rings.
class QuotientRing {
public:
    explicit QuotientRing(GroebnerBasis basis) : basis_(std::move(basis)) {}

    const GroebnerBasis& basis() const { return basis_; }
    const PolyRingPtr& poly_ring() const { return basis_.ring(); }
    Polynomial reduce(const Polynomial& f) const { return normal_form(f, basis_); }

    /// Monomials outside the leading-term ideal, or nullopt when the staircase
    /// is infinite (some variable has no pure power among the leading terms).
    std::optional<std::vector<Monomial>> standard_monomials() const;

private:
    GroebnerBasis basis_;
};

/// Minimal k <= bound with a^k == 0 in its quotient ring, else NoUpTo(bound).
BoundedNilpotence is_nilpotent_bounded(const Scalar& quotient_element, unsigned bound);

/// Unit decision for a quotient-ring scalar by linear solve in the
/// finite-dimensional case; errc::unsupported otherwise.
bool quotient_scalar_is_unit(const Scalar& a);
Scalar quotient_scalar_inverse(const Scalar& a);

}  // namespace gring
