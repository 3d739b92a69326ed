#include "gring/finite_ring.hpp"

#include <algorithm>
#include <set>

#include "gring/error.hpp"

namespace gring {

FiniteRing FiniteRing::truncated_polynomial(const mpz_class& n, unsigned k) {
    if (n < 2 || k == 0) fail(errc::invalid_element, "truncation needs n >= 2 and k >= 1");
    FiniteRing r;
    r.modulus_ = n.get_ui();
    r.truncation_ = k;
    std::size_t size = 1;
    for (unsigned i = 0; i < k; ++i) {
        size *= r.modulus_;
        if (size > 1u << 20) fail(errc::budget_exceeded, "finite ring too large to enumerate");
    }
    r.size_ = size;
    r.one_ = 1;  // constant polynomial 1
    return r;
}

FiniteRing FiniteRing::product(const FiniteRing& a, const FiniteRing& b) {
    FiniteRing r;
    r.is_product_ = true;
    r.factors_ = {a, b};
    r.size_ = a.size() * b.size();
    r.one_ = a.one() * b.size() + b.one();
    return r;
}

std::vector<unsigned long> FiniteRing::digits(std::size_t a) const {
    std::vector<unsigned long> d(truncation_);
    for (unsigned i = 0; i < truncation_; ++i) {
        d[i] = a % modulus_;
        a /= modulus_;
    }
    return d;
}

std::size_t FiniteRing::from_digits(const std::vector<unsigned long>& d) const {
    std::size_t a = 0;
    for (unsigned i = truncation_; i-- > 0;) a = a * modulus_ + d[i];
    return a;
}

std::pair<std::size_t, std::size_t> FiniteRing::split(std::size_t a) const {
    return {a / factors_[1].size(), a % factors_[1].size()};
}

std::size_t FiniteRing::join(std::size_t a, std::size_t b) const {
    return a * factors_[1].size() + b;
}

std::size_t FiniteRing::add(std::size_t a, std::size_t b) const {
    if (is_product_) {
        auto [a0, a1] = split(a);
        auto [b0, b1] = split(b);
        return join(factors_[0].add(a0, b0), factors_[1].add(a1, b1));
    }
    auto da = digits(a);
    auto db = digits(b);
    for (unsigned i = 0; i < truncation_; ++i) da[i] = (da[i] + db[i]) % modulus_;
    return from_digits(da);
}

std::size_t FiniteRing::mul(std::size_t a, std::size_t b) const {
    if (is_product_) {
        auto [a0, a1] = split(a);
        auto [b0, b1] = split(b);
        return join(factors_[0].mul(a0, b0), factors_[1].mul(a1, b1));
    }
    auto da = digits(a);
    auto db = digits(b);
    std::vector<unsigned long> dc(truncation_, 0);
    for (unsigned i = 0; i < truncation_; ++i)
        for (unsigned j = 0; i + j < truncation_; ++j)
            dc[i + j] = (dc[i + j] + da[i] * db[j]) % modulus_;
    return from_digits(dc);
}

std::size_t FiniteRing::neg(std::size_t a) const {
    if (is_product_) {
        auto [a0, a1] = split(a);
        return join(factors_[0].neg(a0), factors_[1].neg(a1));
    }
    auto da = digits(a);
    for (auto& d : da) d = (modulus_ - d) % modulus_;
    return from_digits(da);
}

bool FiniteRing::is_nilpotent(std::size_t a) const {
    std::size_t power = a;
    for (std::size_t i = 0; i < size_; ++i) {
        if (power == zero()) return true;
        power = mul(power, a);
    }
    return false;
}

bool FiniteRing::is_unit(std::size_t a) const {
    for (std::size_t b = 0; b < size_; ++b)
        if (mul(a, b) == one()) return true;
    return false;
}

std::vector<std::size_t> FiniteRing::homogeneous_components(std::size_t a) const {
    if (is_product_) return {a};  // trivial grading
    std::vector<std::size_t> parts;
    auto da = digits(a);
    for (unsigned i = 0; i < truncation_; ++i) {
        if (da[i] == 0) continue;
        std::vector<unsigned long> comp(truncation_, 0);
        comp[i] = da[i];
        parts.push_back(from_digits(comp));
    }
    return parts;
}

std::string FiniteRing::element_str(std::size_t a) const {
    if (is_product_) {
        auto [a0, a1] = split(a);
        return "(" + factors_[0].element_str(a0) + "," + factors_[1].element_str(a1) + ")";
    }
    auto da = digits(a);
    std::string s;
    for (unsigned i = 0; i < truncation_; ++i) {
        if (da[i] == 0) continue;
        if (!s.empty()) s += " + ";
        if (i == 0)
            s += std::to_string(da[i]);
        else if (da[i] == 1)
            s += "x" + (i > 1 ? "^" + std::to_string(i) : "");
        else
            s += std::to_string(da[i]) + "*x" + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return s.empty() ? "0" : s;
}

std::string FiniteRing::name() const {
    if (is_product_) return factors_[0].name() + " x " + factors_[1].name();
    return "Zmod(" + std::to_string(modulus_) + ")[x]/(x^" + std::to_string(truncation_) + ")";
}

QuasiJacobsonReport finite_instance_jacobson_equals_nilradical(const FiniteRing& ring,
                                                               std::size_t ideal_budget) {
    const std::size_t size = ring.size();
    using Ideal = std::vector<bool>;  // membership mask

    auto principal = [&](std::size_t g) {
        Ideal ideal(size, false);
        for (std::size_t r = 0; r < size; ++r) ideal[ring.mul(r, g)] = true;
        return ideal;
    };
    // ideal sum: additive closure of the union (masks are already closed
    // under ring multiplication)
    auto ideal_sum = [&](const Ideal& a, const Ideal& b) {
        Ideal sum(size, false);
        std::vector<std::size_t> in_a, in_b;
        for (std::size_t x = 0; x < size; ++x) {
            if (a[x]) in_a.push_back(x);
            if (b[x]) in_b.push_back(x);
        }
        for (std::size_t x : in_a)
            for (std::size_t y : in_b) sum[ring.add(x, y)] = true;
        return sum;
    };

    std::set<Ideal> ideals;
    for (std::size_t g = 0; g < size; ++g) ideals.insert(principal(g));
    for (;;) {
        std::set<Ideal> fresh = ideals;
        for (const Ideal& a : ideals)
            for (const Ideal& b : ideals) fresh.insert(ideal_sum(a, b));
        if (fresh.size() > ideal_budget)
            fail(errc::budget_exceeded, "ideal lattice larger than the budget");
        if (fresh.size() == ideals.size()) break;
        ideals = std::move(fresh);
    }

    auto proper = [&](const Ideal& ideal) { return !ideal[ring.one()]; };
    auto contains = [&](const Ideal& big, const Ideal& small) {
        for (std::size_t x = 0; x < size; ++x)
            if (small[x] && !big[x]) return false;
        return true;
    };
    std::vector<Ideal> maximal;
    for (const Ideal& candidate : ideals) {
        if (!proper(candidate)) continue;
        bool is_max = true;
        for (const Ideal& other : ideals) {
            if (!proper(other) || other == candidate) continue;
            if (contains(other, candidate)) {
                is_max = false;
                break;
            }
        }
        if (is_max) maximal.push_back(candidate);
    }

    QuasiJacobsonReport report;
    report.ideal_count = ideals.size();
    report.maximal_ideal_count = maximal.size();
    std::vector<bool> jacobson(size, true);
    for (const Ideal& m : maximal)
        for (std::size_t x = 0; x < size; ++x)
            if (!m[x]) jacobson[x] = false;
    std::vector<bool> nilradical(size, false);
    for (std::size_t x = 0; x < size; ++x) nilradical[x] = ring.is_nilpotent(x);

    report.jacobson_equals_nilradical = jacobson == nilradical;
    for (std::size_t x = 0; x < size; ++x) {
        if (jacobson[x]) ++report.jacobson_size;
        if (nilradical[x]) ++report.nilradical_size;
    }
    report.nilradical_graded = true;
    for (std::size_t x = 0; x < size && report.nilradical_graded; ++x) {
        if (!nilradical[x]) continue;
        for (std::size_t comp : ring.homogeneous_components(x))
            if (!ring.is_nilpotent(comp)) report.nilradical_graded = false;
    }
    return report;
}

}  // namespace gring
