#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gring/element.hpp"

namespace gring {

struct IdealSpec {
    std::vector<RingElement> generators;
};

/// Finite set of candidate support degrees for windowed searches.
struct SupportWindow {
    std::vector<MonoidElement> degrees;

    /// { e[lo], ..., e[hi] } over a rank-one coordinate monoid.
    static SupportWindow range(const MonoidPtr& m, long lo, long hi);
};

/// True iff every coefficient of f is nilpotent in R. Valid for cancellative
/// M with torsion-free Grothendieck group; raises not_torsion_free otherwise
/// (callers fall back to is_nilpotent_bruteforce).
bool is_nilpotent(const RingElement& f);

/// Minimal k <= bound with f^k = 0, else NoUpTo(bound). No hypotheses.
BoundedNilpotence is_nilpotent_bruteforce(const RingElement& f, unsigned bound);

struct UnitCertificate {
    enum class Reason { None, CoefficientsNotComaximal, ProductNotNilpotent, ConstantNotUnit, Other };

    bool is_unit = false;
    Reason reason = Reason::None;
    std::optional<RingElement> inverse;  // filled when available; f * inverse == 1 exactly
    std::optional<std::pair<MonoidElement, MonoidElement>> failing_pair;
    std::string detail;

    static const char* reason_name(Reason r);
};

/// Unit test for f in R[G], G a torsion-free group grading: the coefficients
/// generate R and all distinct double products are nilpotent. The inverse is
/// filled when M is a group.
UnitCertificate check_unit_characterization(const RingElement& f);

/// Inverse of a unit of (Z/n)[G], Z[G] or QQ[G] with G finitely generated
/// torsion-free: CRT split, homogeneous reduction mod p, geometric series in
/// the nilpotent part, CRT recombination. errc::not_a_unit when
/// check_unit_characterization rejects f.
RingElement invert_group_ring(const RingElement& f);

/// Unit test for f in R[M] where the identity of M is the minimum of a
/// compatible order: constant coefficient a unit, all others nilpotent.
UnitCertificate is_unit_monoid_ring(const RingElement& f);

struct ZeroDivisorResult {
    bool is_zero_divisor = false;
    std::optional<Scalar> witness;  // nonzero constant annihilator
};

/// McCoy-style decision over (Z/n)[M], Z[M] or field[M] with M cancellative
/// and totally orderable. Zero is a zero-divisor with witness 1.
ZeroDivisorResult is_zero_divisor(const RingElement& f);

/// The constructive shrink: from any nonzero g with g*I = 0, produce a
/// homogeneous nonzero h with h*I = 0 by repeatedly multiplying with the
/// highest generator component that does not yet annihilate. Support size
/// strictly decreases each step.
RingElement shrink_to_homogeneous_annihilator(const RingElement& g, const IdealSpec& ideal);

bool is_idempotent(const RingElement& f);

/// Every support degree lies in the quasi-torsion submonoid (torsion subgroup
/// for group gradings).
bool idempotent_support_in_quasi_torsion(const RingElement& f);

struct ComponentwiseNilpotence {
    bool product_nilpotent = false;
    bool all_pairs_nilpotent = false;
    std::optional<std::pair<MonoidElement, MonoidElement>> failing_pair;

    bool consistent() const { return product_nilpotent == all_pairs_nilpotent; }
};

/// fg nilpotent iff every pairwise coefficient product is nilpotent; both
/// routes are evaluated and the equivalence asserted.
ComponentwiseNilpotence componentwise_nilpotent_product(const RingElement& f, const RingElement& g);

struct AnnihilatorOptions {
    /// Total-degree cap on quotient-ring coefficients of candidate
    /// annihilators (quotient staircases may be infinite).
    unsigned coefficient_degree_bound = 2;
};

/// Generating set of { h supported in W : h * f = 0 }: kernel mod n via Smith
/// normal form of the convolution matrix, field linear algebra otherwise.
std::vector<RingElement> annihilator_in_window(const RingElement& f, const SupportWindow& window,
                                               const AnnihilatorOptions& options = {});

struct GradednessResult {
    bool graded = true;
    std::optional<RingElement> failing_component;
};

/// Whether every homogeneous component of every windowed annihilator is again
/// an annihilator.
GradednessResult annihilator_is_graded_in_window(const RingElement& f, const SupportWindow& window,
                                                 const AnnihilatorOptions& options = {});

struct NilradicalGradednessResult {
    bool graded = true;
    std::optional<RingElement> witness_component;
    std::optional<MonoidElement> witness_degree;
};

/// For each supplied nilpotent, check all phi-homogeneous components are
/// nilpotent (brute-force bound). First failure is returned as witness.
NilradicalGradednessResult nilradical_graded_check(const std::vector<RingElement>& nilpotents,
                                                   const MonoidMorphism& grading, unsigned bound = 64);

}  // namespace gring
