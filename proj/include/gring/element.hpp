#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gring/monoid.hpp"
#include "gring/scalar.hpp"

namespace gring {

/// Element of the monoid-ring R[M]: a finitely supported map from monoid
/// elements to nonzero scalars. The zero element is the empty map; supports
/// are kept sorted by the deterministic element ordering so printed output is
/// byte-stable.
class RingElement {
public:
    static RingElement zero(RingPtr ring, MonoidPtr monoid);
    static RingElement one(RingPtr ring, MonoidPtr monoid);
    static RingElement epsilon(RingPtr ring, MonoidPtr monoid, const MonoidElement& m);
    static RingElement make(RingPtr ring, MonoidPtr monoid,
                            std::vector<std::pair<MonoidElement, Scalar>> terms);

    const RingPtr& ring() const { return ring_; }
    const MonoidPtr& monoid() const { return monoid_; }
    const std::map<MonoidElement, Scalar>& terms() const { return terms_; }

    std::vector<MonoidElement> support() const;
    Scalar coefficient(const MonoidElement& m) const;  // zero scalar off-support
    std::vector<Scalar> coefficients() const;
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_homogeneous() const { return terms_.size() == 1; }
    RingElement homogeneous_component(const MonoidElement& m) const;

    RingElement operator-() const;
    friend RingElement operator+(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a, const RingElement& b);
    /// Convolution product; absorbing table-monoid degrees merge keys.
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    RingElement scaled(const Scalar& c) const;
    RingElement pow(unsigned k) const;
    bool operator==(const RingElement& other) const;
    bool operator!=(const RingElement& other) const { return !(*this == other); }

    std::string str() const;

private:
    RingElement(RingPtr ring, MonoidPtr monoid) : ring_(std::move(ring)), monoid_(std::move(monoid)) {}
    void insert_term(const MonoidElement& m, const Scalar& c);

    RingPtr ring_;
    MonoidPtr monoid_;
    std::map<MonoidElement, Scalar> terms_;
};

/// Smallest / largest support degree under a compatible total order.
/// errc::zero_element on 0; the order construction raises not_torsion_free
/// where no compatible order exists.
MonoidElement trailing_degree(const RingElement& f, const DegreeOrder& order);
MonoidElement leading_degree(const RingElement& f, const DegreeOrder& order);

/// f seen through a change of grading phi: components keyed by phi-image
/// degree; they sum back to f.
struct GradedView {
    std::map<MonoidElement, RingElement> components;

    RingElement sum(const RingPtr& ring, const MonoidPtr& monoid) const;
};

GradedView regrade(const RingElement& f, const MonoidMorphism& phi);

/// Generators of the content ideal C(f); over Z/n collapsed to the single
/// gcd generator.
std::vector<Scalar> content_ideal(const RingElement& f);

}  // namespace gring
