#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace gring {

/// A finite commutative ring small enough to enumerate: the truncation
/// (Z/n)[x]/(x^k), or a direct product of two such rings. Elements are
/// indices; truncated rings identify index <-> base-n digit vector
/// (coefficient of x^d = digit d).
class FiniteRing {
public:
    static FiniteRing truncated_polynomial(const mpz_class& n, unsigned k);
    static FiniteRing product(const FiniteRing& a, const FiniteRing& b);

    std::size_t size() const { return size_; }
    std::size_t zero() const { return 0; }
    std::size_t one() const { return one_; }
    std::size_t add(std::size_t a, std::size_t b) const;
    std::size_t mul(std::size_t a, std::size_t b) const;
    std::size_t neg(std::size_t a) const;

    bool is_nilpotent(std::size_t a) const;
    bool is_unit(std::size_t a) const;

    /// Decomposition into graded pieces: for truncated rings, one component
    /// per x-degree; products carry the trivial grading.
    std::vector<std::size_t> homogeneous_components(std::size_t a) const;

    std::string element_str(std::size_t a) const;
    std::string name() const;

private:
    FiniteRing() = default;

    bool is_product_ = false;
    // truncated polynomial data
    unsigned long modulus_ = 0;
    unsigned truncation_ = 0;
    // shared
    std::size_t size_ = 0;
    std::size_t one_ = 0;
    // product data (operate componentwise on index pairs)
    std::vector<FiniteRing> factors_;

    std::vector<unsigned long> digits(std::size_t a) const;
    std::size_t from_digits(const std::vector<unsigned long>& d) const;
    std::pair<std::size_t, std::size_t> split(std::size_t a) const;
    std::size_t join(std::size_t a, std::size_t b) const;
};

struct QuasiJacobsonReport {
    bool jacobson_equals_nilradical = false;
    bool nilradical_graded = false;
    std::size_t nilradical_size = 0;
    std::size_t jacobson_size = 0;
    std::size_t ideal_count = 0;
    std::size_t maximal_ideal_count = 0;
};

/// Exhaustive comparison of the nilradical with the intersection of maximal
/// ideals; the ideal lattice is generated from principal ideals closed under
/// sums, capped by `ideal_budget` (errc::budget_exceeded beyond it).
QuasiJacobsonReport finite_instance_jacobson_equals_nilradical(const FiniteRing& ring,
                                                               std::size_t ideal_budget = 4096);

}  // namespace gring
