#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "gring/error.hpp"
#include "gring/smith.hpp"

namespace gring {

/// Canonical form Z^r + Z/n1 + ... + Z/nt with 2 <= n1 | n2 | ... | nt.
/// Element coordinates: r free integers followed by t residues in [0, ni).
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<mpz_class> invariant_factors;

    std::size_t dim() const { return free_rank + invariant_factors.size(); }
    bool torsion_free() const { return invariant_factors.empty(); }
    bool trivial() const { return dim() == 0; }
    bool operator==(const AbelianGroup& other) const = default;
    std::string str() const;
};

struct MonoidElement {
    std::vector<mpz_class> coords;  // coordinate monoids
    long index = -1;                // FiniteByTable

    bool is_table() const { return index >= 0; }
    bool operator==(const MonoidElement& other) const = default;
    bool operator<(const MonoidElement& other) const {
        if (index != other.index) return index < other.index;
        return coords < other.coords;
    }
    std::string str() const;
};

enum class MonoidKind { FreeCommutative, FullGroup, SubmonoidByGenerators, FiniteByTable };

class Monoid;
using MonoidPtr = std::shared_ptr<const Monoid>;

/// A finitely generated commutative monoid in one of four presentations.
/// Immutable; FiniteByTable laws (commutativity, associativity, identity) are
/// checked exhaustively at construction.
class Monoid {
public:
    static MonoidPtr free_commutative(std::size_t k);
    static MonoidPtr full_group(AbelianGroup group);
    static MonoidPtr submonoid(AbelianGroup ambient, std::vector<MonoidElement> generators);
    static MonoidPtr finite_by_table(std::size_t size, std::vector<std::size_t> table,
                                     std::size_t identity_index);

    MonoidKind kind() const { return kind_; }
    std::size_t free_vars() const { return free_vars_; }
    const AbelianGroup& group() const { return group_; }     // FullGroup / Submonoid ambient
    const std::vector<MonoidElement>& generators() const { return generators_; }
    std::size_t table_size() const { return table_size_; }
    std::size_t identity_index() const { return identity_index_; }

    MonoidElement identity() const;
    MonoidElement add(const MonoidElement& a, const MonoidElement& b) const;
    /// Coordinate element, canonicalized (residues reduced); errc::invalid_element
    /// on wrong arity or negative free-monoid coordinates.
    MonoidElement element(std::vector<mpz_class> coords) const;
    MonoidElement table_element(std::size_t idx) const;
    bool valid(const MonoidElement& x) const;

    bool is_group() const;
    bool is_cancellative() const;  // exhaustive for tables

    std::string str() const;

private:
    Monoid() = default;

    MonoidKind kind_ = MonoidKind::FreeCommutative;
    std::size_t free_vars_ = 0;
    AbelianGroup group_;
    std::vector<MonoidElement> generators_;
    std::size_t table_size_ = 0;
    std::vector<std::size_t> table_;
    std::size_t identity_index_ = 0;
};

bool same_monoid(const MonoidPtr& a, const MonoidPtr& b);
void require_same_monoid(const MonoidPtr& a, const MonoidPtr& b);

/// phi : source -> target. Linear morphisms act by an integer matrix on
/// coordinates (target residues reduced afterwards); table morphisms list one
/// image per element; generator morphisms express an element in terms of the
/// source generators before applying a class map. phi(0) = 0 and additivity
/// on generators are checked at construction.
class MonoidMorphism {
public:
    MonoidMorphism() = default;  // empty placeholder; not applicable

    static MonoidMorphism linear(MonoidPtr source, MonoidPtr target, IntMat matrix);
    static MonoidMorphism from_table(MonoidPtr source, MonoidPtr target,
                                     std::vector<MonoidElement> images);
    /// Canonical map of a SubmonoidByGenerators into a canonical-form group:
    /// x is solved as an integral combination of the ambient generator matrix,
    /// then mapped by class_map.
    static MonoidMorphism from_generators(MonoidPtr source, MonoidPtr target, IntMat generator_matrix,
                                          IntVec ambient_moduli, IntMat class_map);

    const MonoidPtr& source() const { return source_; }
    const MonoidPtr& target() const { return target_; }
    MonoidElement apply(const MonoidElement& x) const;

    bool is_linear() const { return action_ == Kind::Linear; }
    bool is_table() const { return action_ == Kind::Table; }
    const IntMat& matrix() const { return matrix_; }
    const std::vector<MonoidElement>& images() const { return images_; }

private:
    enum class Kind { Linear, Table, FromGenerators };

    Kind action_ = Kind::Linear;
    MonoidPtr source_;
    MonoidPtr target_;
    IntMat matrix_;
    std::vector<MonoidElement> images_;
    IntMat generator_matrix_;
    IntVec ambient_moduli_;
    IntMat class_map_;
};

struct GrothendieckGroup {
    AbelianGroup group;
    MonoidPtr group_monoid;    // FullGroup wrapper around `group`
    MonoidMorphism canonical;  // m -> [m, 0]
};

/// Universal group of M with the canonical morphism. FiniteByTable monoids use
/// the explicit equivalence-class construction on M x M; coordinate monoids go
/// through Smith normal form.
GrothendieckGroup grothendieck_group(const MonoidPtr& m);

struct TorsionSubgroup {
    AbelianGroup subgroup;
    MonoidMorphism embedding;  // T(G) -> G
};

TorsionSubgroup torsion_subgroup(const AbelianGroup& g);

/// Lexicographic order on the free part of a torsion-free group; translation
/// invariant. errc::not_torsion_free when invariant factors are present.
class TotalOrder {
public:
    explicit TotalOrder(AbelianGroup group);

    const AbelianGroup& group() const { return group_; }
    bool less(const MonoidElement& a, const MonoidElement& b) const;

private:
    AbelianGroup group_;
};

/// Order on a cancellative monoid through the canonical morphism into its
/// (torsion-free) Grothendieck group.
class DegreeOrder {
public:
    explicit DegreeOrder(const MonoidPtr& m);

    const MonoidPtr& monoid() const { return monoid_; }
    const GrothendieckGroup& grothendieck() const { return grothendieck_; }
    bool less(const MonoidElement& a, const MonoidElement& b) const;

private:
    MonoidPtr monoid_;
    GrothendieckGroup grothendieck_;
    TotalOrder order_;
};

/// x in the quasi-torsion submonoid { x : exists n >= 1, y with nx + y = y },
/// decided through the canonical image (tables by direct search).
bool quasi_torsion_contains(const MonoidPtr& m, const MonoidElement& x);

/// Quasi-zero submonoid { x : exists y, x + y = y } of a finite table monoid.
std::vector<MonoidElement> quasi_zero_submonoid(const MonoidPtr& m);

enum class Ternary { No, Yes, Unknown };

/// Membership of an ambient element in a SubmonoidByGenerators. Complete when
/// the generator free parts admit the coordinate-sum functional; otherwise a
/// budgeted search that may answer Unknown.
Ternary submonoid_contains(const MonoidPtr& m, const MonoidElement& x, std::size_t budget = 4096);

}  // namespace gring
