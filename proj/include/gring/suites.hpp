#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gring {

struct SuiteResult {
    std::string name;
    unsigned trials = 0;
    unsigned failures = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> notes;  // first few failure descriptions

    bool pass() const { return failures == 0; }
};

/// Zero-divisor decision vs. windowed annihilator kernel: exhaustive over
/// (Z/4)[x] with support in {0..3}, randomized over (Z/n)[x] (default n = 6).
SuiteResult suite_mccoy(unsigned trials, std::uint64_t seed, long randomized_modulus = 6);

/// Unit characterization vs. constructed inverse vs. windowed brute-force
/// inverse over (Z/n)[Z], support in {-2..2}.
SuiteResult suite_units(unsigned trials, std::uint64_t seed);

/// Coefficientwise nilpotence vs. brute force to exponent 64 over (Z/12)[N].
SuiteResult suite_nilpotence(unsigned trials, std::uint64_t seed);

/// fg nilpotent iff all pairwise coefficient products nilpotent, over
/// (Z/n)[Z]; cross-checked against bounded brute force.
SuiteResult suite_componentwise(unsigned trials, std::uint64_t seed);

/// U*A*V = D, unimodularity, divisibility chain on random matrices up to 6x6
/// with entries in [-20, 20].
SuiteResult suite_snf(unsigned matrices, std::uint64_t seed);

/// Associativity / commutativity / distributivity of scalars and ring
/// elements on random triples.
SuiteResult suite_ring_axioms(unsigned trials, std::uint64_t seed);

/// Translation invariance of the compatible total order on random triples.
SuiteResult suite_order(unsigned trials, std::uint64_t seed);

/// Exhaustive idempotent search over (Z/6)[x, x^-1] with support in {-2..2}:
/// the idempotent set is exactly {0,1,3,4}*e[0].
SuiteResult suite_idempotent_location();

/// Quasi-torsion membership vs. the definitional bounded search.
SuiteResult suite_quasi_torsion(unsigned trials, std::uint64_t seed);

std::vector<std::string> suite_names();
/// Dispatch by name; errc::unknown_name for anything not listed. A nonzero
/// modulus overrides the randomized-phase modulus where a suite has one.
SuiteResult run_suite(const std::string& name, unsigned trials, std::uint64_t seed,
                      long modulus = 0);

}  // namespace gring
