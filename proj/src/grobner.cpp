#include "gring/grobner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "linalg.hpp"

namespace gring {

const char* term_order_name(TermOrder order) {
    return order == TermOrder::Lex ? "lex" : "grevlex";
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (unsigned e : exps) d += e;
    return d;
}

bool Monomial::divisible_by(const Monomial& d) const {
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] < d.exps[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial m = *this;
    for (std::size_t i = 0; i < exps.size(); ++i) m.exps[i] += other.exps[i];
    return m;
}

Monomial Monomial::operator/(const Monomial& d) const {
    Monomial m = *this;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (m.exps[i] < d.exps[i]) fail(errc::internal, "monomial division without divisibility");
        m.exps[i] -= d.exps[i];
    }
    return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] = std::max(a.exps[i], b.exps[i]);
    return m;
}

int order_compare(TermOrder order, const Monomial& a, const Monomial& b) {
    if (order == TermOrder::Lex) {
        for (std::size_t i = 0; i < a.exps.size(); ++i) {
            if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? 1 : -1;
        }
        return 0;
    }
    const unsigned da = a.total_degree();
    const unsigned db = b.total_degree();
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = a.exps.size(); i-- > 0;) {
        if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? 1 : -1;
    }
    return 0;
}

PolyRingPtr PolyRing::make(RingPtr field, std::vector<std::string> vars, TermOrder order) {
    if (!field->is_field())
        fail(errc::unsupported, "polynomial coefficients must form a field (QQ or Z/p), got " +
                                    field->name());
    if (vars.empty() || vars.size() > max_vars)
        fail(errc::unsupported, "variable count must be in [1, " + std::to_string(max_vars) + "]");
    return PolyRingPtr(new PolyRing(std::move(field), std::move(vars), order));
}

std::string PolyRing::name() const {
    std::string s = field_->name() + "[";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i) s += ",";
        s += vars_[i];
    }
    return s + "]";
}

Polynomial Polynomial::zero(PolyRingPtr ring) { return Polynomial(std::move(ring)); }

Polynomial Polynomial::constant(PolyRingPtr ring, const Scalar& c) {
    Monomial one = Monomial::one(ring->nvars());
    return term(std::move(ring), std::move(one), c);
}

Polynomial Polynomial::term(PolyRingPtr ring, Monomial m, const Scalar& c) {
    Polynomial p(std::move(ring));
    if (m.exps.size() != p.ring_->nvars()) fail(errc::invalid_element, "monomial arity mismatch");
    if (!c.is_zero()) p.terms_.emplace_back(std::move(m), c);
    return p;
}

Polynomial Polynomial::make(PolyRingPtr ring, std::vector<std::pair<Monomial, Scalar>> terms) {
    Polynomial p(ring);
    std::map<Monomial, Scalar> acc;
    for (auto& [m, c] : terms) {
        if (m.exps.size() != ring->nvars()) fail(errc::invalid_element, "monomial arity mismatch");
        auto it = acc.find(m);
        if (it == acc.end())
            acc.emplace(std::move(m), c);
        else
            it->second = it->second + c;
    }
    for (auto& [m, c] : acc)
        if (!c.is_zero()) p.terms_.emplace_back(m, c);
    std::sort(p.terms_.begin(), p.terms_.end(), [&](const auto& a, const auto& b) {
        return order_compare(ring->order(), a.first, b.first) > 0;
    });
    return p;
}

const Monomial& Polynomial::leading_monomial() const {
    if (is_zero()) fail(errc::zero_element, "leading monomial of 0");
    return terms_.front().first;
}

const Scalar& Polynomial::leading_coefficient() const {
    if (is_zero()) fail(errc::zero_element, "leading coefficient of 0");
    return terms_.front().second;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
    for (const auto& [mono, c] : terms_)
        if (mono == m) return c;
    return Scalar::zero(ring_->field());
}

unsigned Polynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

Polynomial Polynomial::operator-() const {
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) p.terms_.emplace_back(m, -c);
    return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<std::pair<Monomial, Scalar>> terms = a.terms_;
    terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
    return Polynomial::make(a.ring_, std::move(terms));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::vector<std::pair<Monomial, Scalar>> terms;
    terms.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) terms.emplace_back(ma * mb, ca * cb);
    return Polynomial::make(a.ring_, std::move(terms));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    if (c.is_zero()) return zero(ring_);
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size());
    for (const auto& [m, coeff] : terms_) p.terms_.emplace_back(m, coeff * c);
    return p;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(scalar_inverse(leading_coefficient()));
}

bool Polynomial::operator==(const Polynomial& other) const { return terms_ == other.terms_; }

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& [m, c] = terms_[i];
        Scalar coeff = c;
        if (i == 0) {
            if (ring_->field()->kind() == RingKind::Rationals && c.rat_value() < 0) {
                s += "-";
                coeff = -c;
            }
        } else {
            bool negative = ring_->field()->kind() == RingKind::Rationals && c.rat_value() < 0;
            s += negative ? " - " : " + ";
            if (negative) coeff = -c;
        }
        const bool unit_coeff = coeff.is_one();
        std::string mono;
        for (std::size_t v = 0; v < m.exps.size(); ++v) {
            if (m.exps[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->vars()[v];
            if (m.exps[v] > 1) mono += "^" + std::to_string(m.exps[v]);
        }
        if (mono.empty())
            s += coeff.str();
        else if (unit_coeff)
            s += mono;
        else
            s += coeff.str() + "*" + mono;
    }
    return s;
}

namespace {

struct Reduction {
    Polynomial remainder;
    std::size_t steps = 0;
};

Reduction reduce_full(const Polynomial& f, const std::vector<Polynomial>& basis,
                      std::vector<Polynomial>* quotients = nullptr) {
    const PolyRingPtr& ring = f.ring();
    Polynomial p = f;
    Polynomial r = Polynomial::zero(ring);
    std::size_t steps = 0;
    if (quotients) quotients->assign(basis.size(), Polynomial::zero(ring));
    while (!p.is_zero()) {
        const Monomial& lead = p.leading_monomial();
        const Polynomial* reducer = nullptr;
        std::size_t reducer_index = 0;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const Polynomial& g = basis[i];
            if (!g.is_zero() && lead.divisible_by(g.leading_monomial())) {
                reducer = &g;
                reducer_index = i;
                break;
            }
        }
        if (reducer) {
            Scalar factor = p.leading_coefficient() * scalar_inverse(reducer->leading_coefficient());
            Monomial shift = lead / reducer->leading_monomial();
            Polynomial multiple = Polynomial::term(ring, shift, factor);
            p = p - multiple * *reducer;
            if (quotients) (*quotients)[reducer_index] = (*quotients)[reducer_index] + multiple;
            ++steps;
        } else {
            Polynomial lt = Polynomial::term(ring, lead, p.leading_coefficient());
            r = r + lt;
            p = p - lt;
        }
    }
    return {std::move(r), steps};
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    const PolyRingPtr& ring = f.ring();
    Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial left =
        Polynomial::term(ring, l / f.leading_monomial(), scalar_inverse(f.leading_coefficient())) * f;
    Polynomial right =
        Polynomial::term(ring, l / g.leading_monomial(), scalar_inverse(g.leading_coefficient())) * g;
    return left - right;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    return reduce_full(f, gb.generators()).remainder;
}

DivisionResult divide(const Polynomial& f, const GroebnerBasis& gb) {
    DivisionResult out{Polynomial::zero(f.ring()), {}};
    Reduction red = reduce_full(f, gb.generators(), &out.quotients);
    out.remainder = std::move(red.remainder);
    return out;
}

GroebnerBasis buchberger(const PolyRingPtr& ring, std::vector<Polynomial> gens, std::size_t budget) {
    std::vector<Polynomial> basis;
    for (Polynomial& g : gens)
        if (!g.is_zero()) basis.push_back(g.monic());

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };
    auto pair_before = [&](const Pair& a, const Pair& b) {
        int cmp = order_compare(ring->order(), a.lcm, b.lcm);
        if (cmp != 0) return cmp < 0;  // smaller lcm first (normal strategy)
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::vector<Pair> pairs;
    auto push_pairs = [&](std::size_t fresh) {
        for (std::size_t i = 0; i < fresh; ++i)
            pairs.push_back(
                {i, fresh, Monomial::lcm(basis[i].leading_monomial(), basis[fresh].leading_monomial())});
    };
    for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

    std::size_t reductions = 0;
    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(), pair_before);
        Pair pair = *it;
        pairs.erase(it);
        const Monomial& li = basis[pair.i].leading_monomial();
        const Monomial& lj = basis[pair.j].leading_monomial();
        if (pair.lcm == li * lj) continue;  // coprime leads, S-poly reduces to 0
        Reduction red = reduce_full(s_polynomial(basis[pair.i], basis[pair.j]), basis);
        reductions += red.steps + 1;
        if (reductions > budget)
            fail(errc::budget_exceeded, "Buchberger pair budget " + std::to_string(budget) + " hit");
        if (!red.remainder.is_zero()) {
            basis.push_back(red.remainder.monic());
            push_pairs(basis.size() - 1);
        }
    }

    // minimalize: drop generators whose lead is divisible by another lead
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (basis[i].leading_monomial().divisible_by(basis[j].leading_monomial())) {
                // ties (equal leads) keep the earliest
                if (basis[j].leading_monomial() == basis[i].leading_monomial() && j > i) continue;
                redundant = true;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // inter-reduce tails
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(reduce_full(minimal[i], others).remainder.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order_compare(ring->order(), a.leading_monomial(), b.leading_monomial()) > 0;
    });

    GroebnerBasis gb(ring, std::move(reduced));
    // construction invariant: every S-polynomial of basis pairs reduces to 0
    const auto& final_gens = gb.generators();
    for (std::size_t i = 0; i < final_gens.size(); ++i)
        for (std::size_t j = i + 1; j < final_gens.size(); ++j) {
            if (!normal_form(s_polynomial(final_gens[i], final_gens[j]), gb).is_zero())
                fail(errc::internal, "completed basis has an unreduced S-polynomial");
        }
    return gb;
}

std::optional<std::vector<Monomial>> QuotientRing::standard_monomials() const {
    const PolyRingPtr& ring = poly_ring();
    const std::size_t nvars = ring->nvars();
    std::vector<unsigned> bound(nvars, 0);
    std::vector<bool> bounded(nvars, false);
    for (const Polynomial& g : basis_.generators()) {
        const Monomial& lm = g.leading_monomial();
        std::size_t nonzero = 0, var = 0;
        for (std::size_t v = 0; v < nvars; ++v)
            if (lm.exps[v] > 0) {
                ++nonzero;
                var = v;
            }
        if (nonzero == 0) return std::vector<Monomial>{};  // 1 in the ideal, zero ring
        if (nonzero == 1) {
            if (!bounded[var] || lm.exps[var] < bound[var]) bound[var] = lm.exps[var];
            bounded[var] = true;
        }
    }
    for (std::size_t v = 0; v < nvars; ++v)
        if (!bounded[v]) return std::nullopt;

    std::vector<Monomial> standard;
    Monomial m = Monomial::one(nvars);
    const auto& leads = basis_.generators();
    for (;;) {
        bool in_ideal = false;
        for (const Polynomial& g : leads)
            if (m.divisible_by(g.leading_monomial())) {
                in_ideal = true;
                break;
            }
        if (!in_ideal) standard.push_back(m);
        // odometer over the box [0, bound_v)
        std::size_t v = 0;
        while (v < nvars) {
            if (++m.exps[v] < bound[v]) break;
            m.exps[v] = 0;
            ++v;
        }
        if (v == nvars) break;
        if (standard.size() > 65536) fail(errc::budget_exceeded, "standard monomial basis too large");
    }
    std::sort(standard.begin(), standard.end(), [&](const Monomial& a, const Monomial& b) {
        return order_compare(ring->order(), a, b) < 0;
    });
    return standard;
}

BoundedNilpotence is_nilpotent_bounded(const Scalar& quotient_element, unsigned bound) {
    if (quotient_element.ring()->kind() != RingKind::PolynomialQuotient)
        fail(errc::unsupported, "is_nilpotent_bounded expects a quotient-ring scalar");
    Scalar power = quotient_element;
    for (unsigned k = 1; k <= bound; ++k) {
        if (power.is_zero()) return {true, k};
        power = power * quotient_element;
    }
    return {false, bound};
}

namespace {

linalg::Vec coords_of(const Polynomial& p, const std::vector<Monomial>& basis, const RingPtr& field) {
    linalg::Vec v(basis.size(), Scalar::zero(field));
    for (const auto& [m, c] : p.terms()) {
        auto it = std::find(basis.begin(), basis.end(), m);
        if (it == basis.end()) fail(errc::internal, "normal form outside the standard basis");
        v[static_cast<std::size_t>(it - basis.begin())] = c;
    }
    return v;
}

}  // namespace

static std::optional<Polynomial> quotient_inverse_impl(const Scalar& a) {
    const RingPtr& ring = a.ring();
    const auto& quotient = ring->quotient();
    auto basis = quotient->standard_monomials();
    if (!basis)
        fail(errc::unsupported, "unit decision needs a finite-dimensional quotient");
    const RingPtr& field = quotient->poly_ring()->field();
    const std::size_t dim = basis->size();
    if (dim == 0) return std::nullopt;  // zero ring
    // columns: multiplication-by-a images of the standard monomials
    linalg::Mat m(dim, linalg::Vec(dim, Scalar::zero(field)));
    for (std::size_t j = 0; j < dim; ++j) {
        Polynomial image = quotient->reduce(
            a.poly_value() * Polynomial::term(quotient->poly_ring(), (*basis)[j], Scalar::one(field)));
        linalg::Vec col = coords_of(image, *basis, field);
        for (std::size_t i = 0; i < dim; ++i) m[i][j] = col[i];
    }
    linalg::Vec one = coords_of(Polynomial::constant(quotient->poly_ring(), Scalar::one(field)),
                                *basis, field);
    auto sol = linalg::solve(std::move(m), std::move(one), field);
    if (!sol) return std::nullopt;
    std::vector<std::pair<Monomial, Scalar>> terms;
    for (std::size_t j = 0; j < dim; ++j)
        if (!(*sol)[j].is_zero()) terms.emplace_back((*basis)[j], (*sol)[j]);
    return Polynomial::make(quotient->poly_ring(), std::move(terms));
}

bool quotient_scalar_is_unit(const Scalar& a) { return quotient_inverse_impl(a).has_value(); }

Scalar quotient_scalar_inverse(const Scalar& a) {
    auto inv = quotient_inverse_impl(a);
    if (!inv) fail(errc::not_a_unit, a.str() + " is not a unit of " + a.ring()->name());
    return Scalar::quotient_class(a.ring(), std::move(*inv));
}

}  // namespace gring
