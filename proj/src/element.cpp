#include "gring/element.hpp"

#include <algorithm>

namespace gring {

RingElement RingElement::zero(RingPtr ring, MonoidPtr monoid) {
    return RingElement(std::move(ring), std::move(monoid));
}

RingElement RingElement::one(RingPtr ring, MonoidPtr monoid) {
    MonoidElement id = monoid->identity();
    return epsilon(std::move(ring), std::move(monoid), id);
}

RingElement RingElement::epsilon(RingPtr ring, MonoidPtr monoid, const MonoidElement& m) {
    RingElement f(std::move(ring), std::move(monoid));
    if (!f.monoid_->valid(m))
        fail(errc::invalid_element, m.str() + " is not an element of " + f.monoid_->str());
    f.terms_.emplace(m, Scalar::one(f.ring_));
    return f;
}

RingElement RingElement::make(RingPtr ring, MonoidPtr monoid,
                              std::vector<std::pair<MonoidElement, Scalar>> terms) {
    RingElement f(std::move(ring), std::move(monoid));
    for (auto& [m, c] : terms) {
        if (!f.monoid_->valid(m))
            fail(errc::invalid_element, m.str() + " is not an element of " + f.monoid_->str());
        require_same_ring(f.ring_, c.ring());
        f.insert_term(m, c);
    }
    return f;
}

void RingElement::insert_term(const MonoidElement& m, const Scalar& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(m, c);
        return;
    }
    Scalar sum = it->second + c;
    if (sum.is_zero())
        terms_.erase(it);
    else
        it->second = sum;
}

std::vector<MonoidElement> RingElement::support() const {
    std::vector<MonoidElement> s;
    s.reserve(terms_.size());
    for (const auto& [m, c] : terms_) s.push_back(m);
    return s;
}

Scalar RingElement::coefficient(const MonoidElement& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(ring_) : it->second;
}

std::vector<Scalar> RingElement::coefficients() const {
    std::vector<Scalar> cs;
    cs.reserve(terms_.size());
    for (const auto& [m, c] : terms_) cs.push_back(c);
    return cs;
}

bool RingElement::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == monoid_->identity() &&
           terms_.begin()->second.is_one();
}

RingElement RingElement::homogeneous_component(const MonoidElement& m) const {
    RingElement f(ring_, monoid_);
    auto it = terms_.find(m);
    if (it != terms_.end()) f.terms_.emplace(it->first, it->second);
    return f;
}

RingElement RingElement::operator-() const {
    RingElement f(ring_, monoid_);
    for (const auto& [m, c] : terms_) f.terms_.emplace(m, -c);
    return f;
}

RingElement operator+(const RingElement& a, const RingElement& b) {
    require_same_ring(a.ring_, b.ring_);
    require_same_monoid(a.monoid_, b.monoid_);
    RingElement f = a;
    for (const auto& [m, c] : b.terms_) f.insert_term(m, c);
    return f;
}

RingElement operator-(const RingElement& a, const RingElement& b) { return a + (-b); }

RingElement operator*(const RingElement& a, const RingElement& b) {
    require_same_ring(a.ring_, b.ring_);
    require_same_monoid(a.monoid_, b.monoid_);
    RingElement f(a.ring_, a.monoid_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) f.insert_term(a.monoid_->add(ma, mb), ca * cb);
    return f;
}

RingElement RingElement::scaled(const Scalar& c) const {
    require_same_ring(ring_, c.ring());
    RingElement f(ring_, monoid_);
    if (c.is_zero()) return f;
    for (const auto& [m, coeff] : terms_) {
        Scalar product = coeff * c;
        if (!product.is_zero()) f.terms_.emplace(m, product);
    }
    return f;
}

RingElement RingElement::pow(unsigned k) const {
    RingElement acc = one(ring_, monoid_);
    for (unsigned i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

bool RingElement::operator==(const RingElement& other) const {
    return same_ring(ring_, other.ring_) && same_monoid(monoid_, other.monoid_) &&
           terms_ == other.terms_;
}

std::string RingElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.str() + "*" + m.str();
    }
    return s;
}

MonoidElement trailing_degree(const RingElement& f, const DegreeOrder& order) {
    if (f.is_zero()) fail(errc::zero_element, "trailing degree of 0");
    require_same_monoid(f.monoid(), order.monoid());
    const MonoidElement* best = nullptr;
    for (const auto& [m, c] : f.terms())
        if (!best || order.less(m, *best)) best = &m;
    return *best;
}

MonoidElement leading_degree(const RingElement& f, const DegreeOrder& order) {
    if (f.is_zero()) fail(errc::zero_element, "leading degree of 0");
    require_same_monoid(f.monoid(), order.monoid());
    const MonoidElement* best = nullptr;
    for (const auto& [m, c] : f.terms())
        if (!best || order.less(*best, m)) best = &m;
    return *best;
}

RingElement GradedView::sum(const RingPtr& ring, const MonoidPtr& monoid) const {
    RingElement total = RingElement::zero(ring, monoid);
    for (const auto& [degree, part] : components) total = total + part;
    return total;
}

GradedView regrade(const RingElement& f, const MonoidMorphism& phi) {
    if (!same_monoid(phi.source(), f.monoid()))
        fail(errc::morphism_mismatch, "grading morphism source is not the element's monoid");
    GradedView view;
    for (const auto& [m, c] : f.terms()) {
        MonoidElement degree = phi.apply(m);
        auto it = view.components.find(degree);
        if (it == view.components.end())
            it = view.components.emplace(degree, RingElement::zero(f.ring(), f.monoid())).first;
        it->second = it->second + f.homogeneous_component(m);
    }
    return view;
}

std::vector<Scalar> content_ideal(const RingElement& f) {
    if (f.ring()->kind() == RingKind::IntegersMod) {
        const mpz_class& n = f.ring()->modulus();
        mpz_class g = n;
        for (const auto& [m, c] : f.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.int_value().get_mpz_t());
        if (g == n) return {};  // zero ideal
        return {Scalar::of(f.ring(), g)};
    }
    return f.coefficients();
}

}  // namespace gring
