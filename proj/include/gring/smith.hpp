#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace gring {

/// Dense integer matrix, row-major. All rows share one length.
using IntMat = std::vector<std::vector<mpz_class>>;
using IntVec = std::vector<mpz_class>;

IntMat identity_matrix(std::size_t n);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntVec mat_apply(const IntMat& a, const IntVec& x);
mpz_class determinant(const IntMat& a);  // Bareiss, square matrices

/// U*A*V = D with U, V unimodular and D diagonal, d1 | d2 | ..., all di >= 0.
/// Pivot selection is minimal absolute value with row-major tie-break, so the
/// output is reproducible.
struct SmithResult {
    IntMat U;
    IntMat D;
    IntMat V;
    std::size_t rank = 0;
    std::vector<mpz_class> diagonal() const;
};

SmithResult smith_normal_form(const IntMat& a);

/// Lattice basis of { x : A x = 0 } over the integers (one vector per column).
std::vector<IntVec> kernel_integer(const IntMat& a);

/// One integral solution of A x = b, or nullopt.
std::optional<IntVec> solve_integer(const IntMat& a, const IntVec& b);

/// Generating set for { x : A x == 0 (mod n) }, vectors reduced into [0, n).
std::vector<IntVec> kernel_mod(const IntMat& a, const mpz_class& n);

/// One solution of A x == b (mod n), or nullopt when none exists.
std::optional<IntVec> solve_mod(const IntMat& a, const IntVec& b, const mpz_class& n);

}  // namespace gring
