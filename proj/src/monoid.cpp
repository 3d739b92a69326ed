#include "gring/monoid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace gring {

std::string AbelianGroup::str() const {
    if (trivial()) return "0";
    std::string s;
    if (free_rank == 1) s = "Z";
    if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
    for (const auto& n : invariant_factors) {
        if (!s.empty()) s += " x ";
        s += "Z/" + n.get_str();
    }
    return s;
}

std::string MonoidElement::str() const {
    if (is_table()) return "e[" + std::to_string(index) + "]";
    std::string s = "e[";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ",";
        s += coords[i].get_str();
    }
    return s + "]";
}

namespace {

IntVec reduce_group_coords(const AbelianGroup& g, IntVec coords) {
    for (std::size_t i = 0; i < g.invariant_factors.size(); ++i) {
        mpz_class& c = coords[g.free_rank + i];
        mpz_mod(c.get_mpz_t(), c.get_mpz_t(), g.invariant_factors[i].get_mpz_t());
    }
    return coords;
}

}  // namespace

MonoidPtr Monoid::free_commutative(std::size_t k) {
    auto m = std::shared_ptr<Monoid>(new Monoid());
    m->kind_ = MonoidKind::FreeCommutative;
    m->free_vars_ = k;
    return m;
}

MonoidPtr Monoid::full_group(AbelianGroup group) {
    for (std::size_t i = 0; i < group.invariant_factors.size(); ++i) {
        if (group.invariant_factors[i] < 2)
            fail(errc::invalid_element, "invariant factors must be >= 2");
        if (i + 1 < group.invariant_factors.size() &&
            !mpz_divisible_p(group.invariant_factors[i + 1].get_mpz_t(),
                             group.invariant_factors[i].get_mpz_t()))
            fail(errc::invalid_element, "invariant factors must form a divisibility chain");
    }
    auto m = std::shared_ptr<Monoid>(new Monoid());
    m->kind_ = MonoidKind::FullGroup;
    m->group_ = std::move(group);
    return m;
}

MonoidPtr Monoid::submonoid(AbelianGroup ambient, std::vector<MonoidElement> generators) {
    if (generators.empty()) fail(errc::invalid_element, "submonoid needs at least one generator");
    auto ambient_monoid = full_group(ambient);  // validates the chain
    auto m = std::shared_ptr<Monoid>(new Monoid());
    m->kind_ = MonoidKind::SubmonoidByGenerators;
    m->group_ = std::move(ambient);
    for (auto& g : generators) {
        if (g.is_table() || g.coords.size() != m->group_.dim())
            fail(errc::invalid_element, "generator does not live in the ambient group");
        g.coords = reduce_group_coords(m->group_, std::move(g.coords));
    }
    m->generators_ = std::move(generators);
    return m;
}

MonoidPtr Monoid::finite_by_table(std::size_t size, std::vector<std::size_t> table,
                                  std::size_t identity_index) {
    if (size == 0 || table.size() != size * size || identity_index >= size)
        fail(errc::invalid_element, "malformed Cayley table");
    for (std::size_t v : table)
        if (v >= size) fail(errc::invalid_element, "Cayley table entry out of range");
    auto at = [&](std::size_t a, std::size_t b) { return table[a * size + b]; };
    for (std::size_t a = 0; a < size; ++a) {
        if (at(identity_index, a) != a || at(a, identity_index) != a)
            fail(errc::invalid_element, "identity law fails in the Cayley table");
        for (std::size_t b = 0; b < size; ++b) {
            if (at(a, b) != at(b, a)) fail(errc::invalid_element, "Cayley table is not commutative");
            for (std::size_t c = 0; c < size; ++c)
                if (at(at(a, b), c) != at(a, at(b, c)))
                    fail(errc::invalid_element, "Cayley table is not associative");
        }
    }
    auto m = std::shared_ptr<Monoid>(new Monoid());
    m->kind_ = MonoidKind::FiniteByTable;
    m->table_size_ = size;
    m->table_ = std::move(table);
    m->identity_index_ = identity_index;
    return m;
}

MonoidElement Monoid::identity() const {
    switch (kind_) {
        case MonoidKind::FreeCommutative: return MonoidElement{IntVec(free_vars_, 0), -1};
        case MonoidKind::FullGroup:
        case MonoidKind::SubmonoidByGenerators: return MonoidElement{IntVec(group_.dim(), 0), -1};
        case MonoidKind::FiniteByTable: return MonoidElement{{}, static_cast<long>(identity_index_)};
    }
    fail(errc::internal, "unreachable");
}

bool Monoid::valid(const MonoidElement& x) const {
    switch (kind_) {
        case MonoidKind::FreeCommutative:
            if (x.is_table() || x.coords.size() != free_vars_) return false;
            for (const auto& c : x.coords)
                if (c < 0) return false;
            return true;
        case MonoidKind::FullGroup:
        case MonoidKind::SubmonoidByGenerators: {
            if (x.is_table() || x.coords.size() != group_.dim()) return false;
            for (std::size_t i = 0; i < group_.invariant_factors.size(); ++i) {
                const mpz_class& c = x.coords[group_.free_rank + i];
                if (c < 0 || c >= group_.invariant_factors[i]) return false;
            }
            return true;
        }
        case MonoidKind::FiniteByTable:
            return x.is_table() && x.coords.empty() && x.index < static_cast<long>(table_size_);
    }
    return false;
}

MonoidElement Monoid::add(const MonoidElement& a, const MonoidElement& b) const {
    if (!valid(a) || !valid(b)) fail(errc::invalid_element, "element does not belong to " + str());
    if (kind_ == MonoidKind::FiniteByTable)
        return MonoidElement{{}, static_cast<long>(table_[a.index * table_size_ + b.index])};
    IntVec coords(a.coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = a.coords[i] + b.coords[i];
    if (kind_ != MonoidKind::FreeCommutative) coords = reduce_group_coords(group_, std::move(coords));
    return MonoidElement{std::move(coords), -1};
}

MonoidElement Monoid::element(IntVec coords) const {
    if (kind_ == MonoidKind::FiniteByTable) {
        if (coords.size() != 1 || coords[0] < 0 || coords[0] >= table_size_)
            fail(errc::invalid_element, "table monoid expects a single index in range");
        return table_element(coords[0].get_ui());
    }
    MonoidElement x{std::move(coords), -1};
    if (kind_ != MonoidKind::FreeCommutative) {
        if (x.coords.size() != group_.dim())
            fail(errc::invalid_element, "expected " + std::to_string(group_.dim()) + " coordinates");
        x.coords = reduce_group_coords(group_, std::move(x.coords));
    }
    if (!valid(x)) fail(errc::invalid_element, x.str() + " is not an element of " + str());
    return x;
}

MonoidElement Monoid::table_element(std::size_t idx) const {
    if (kind_ != MonoidKind::FiniteByTable || idx >= table_size_)
        fail(errc::invalid_element, "table index out of range");
    return MonoidElement{{}, static_cast<long>(idx)};
}

bool Monoid::is_group() const {
    switch (kind_) {
        case MonoidKind::FullGroup: return true;
        case MonoidKind::FreeCommutative: return free_vars_ == 0;
        case MonoidKind::SubmonoidByGenerators: return false;  // treated as a proper submonoid
        case MonoidKind::FiniteByTable: {
            for (std::size_t a = 0; a < table_size_; ++a) {
                bool invertible = false;
                for (std::size_t b = 0; b < table_size_ && !invertible; ++b)
                    invertible = table_[a * table_size_ + b] == identity_index_;
                if (!invertible) return false;
            }
            return true;
        }
    }
    return false;
}

bool Monoid::is_cancellative() const {
    if (kind_ != MonoidKind::FiniteByTable) return true;  // submonoids of groups cancel
    for (std::size_t c = 0; c < table_size_; ++c)
        for (std::size_t a = 0; a < table_size_; ++a)
            for (std::size_t b = a + 1; b < table_size_; ++b)
                if (table_[a * table_size_ + c] == table_[b * table_size_ + c]) return false;
    return true;
}

std::string Monoid::str() const {
    switch (kind_) {
        case MonoidKind::FreeCommutative: return "N^" + std::to_string(free_vars_);
        case MonoidKind::FullGroup: return group_.str();
        case MonoidKind::SubmonoidByGenerators: {
            std::string s = "Submonoid(" + group_.str() + ";";
            for (const auto& g : generators_) s += " " + g.str();
            return s + ")";
        }
        case MonoidKind::FiniteByTable:
            return "TableMonoid(" + std::to_string(table_size_) + ")";
    }
    return "?";
}

bool same_monoid(const MonoidPtr& a, const MonoidPtr& b) {
    if (a == b) return true;
    if (!a || !b || a->kind() != b->kind()) return false;
    switch (a->kind()) {
        case MonoidKind::FreeCommutative: return a->free_vars() == b->free_vars();
        case MonoidKind::FullGroup: return a->group() == b->group();
        case MonoidKind::SubmonoidByGenerators:
            return a->group() == b->group() && a->generators() == b->generators();
        case MonoidKind::FiniteByTable:
            return a->table_size() == b->table_size() && a->identity_index() == b->identity_index();
    }
    return false;
}

void require_same_monoid(const MonoidPtr& a, const MonoidPtr& b) {
    if (!same_monoid(a, b)) fail(errc::monoid_mismatch, a->str() + " vs " + b->str());
}

// ---------------------------------------------------------------------------
// morphisms

MonoidMorphism MonoidMorphism::linear(MonoidPtr source, MonoidPtr target, IntMat matrix) {
    MonoidMorphism phi;
    phi.action_ = Kind::Linear;
    phi.source_ = std::move(source);
    phi.target_ = std::move(target);
    phi.matrix_ = std::move(matrix);
    const std::size_t source_dim = phi.source_->kind() == MonoidKind::FreeCommutative
                                       ? phi.source_->free_vars()
                                       : phi.source_->group().dim();
    if (phi.matrix_.size() != (phi.target_->kind() == MonoidKind::FreeCommutative
                                   ? phi.target_->free_vars()
                                   : phi.target_->group().dim()))
        fail(errc::morphism_mismatch, "matrix row count does not match the target");
    for (const auto& row : phi.matrix_)
        if (row.size() != source_dim)
            fail(errc::morphism_mismatch, "matrix column count does not match the source");
    // well-definedness on torsion generators: n_i * phi(e_i) must vanish
    if (phi.source_->kind() != MonoidKind::FreeCommutative) {
        const AbelianGroup& g = phi.source_->group();
        for (std::size_t i = 0; i < g.invariant_factors.size(); ++i) {
            IntVec e(source_dim, 0);
            e[g.free_rank + i] = g.invariant_factors[i];
            IntVec image = mat_apply(phi.matrix_, e);
            MonoidElement reduced = phi.target_->element(image);
            if (!(reduced == phi.target_->identity()))
                fail(errc::morphism_mismatch, "matrix does not respect torsion relations");
        }
    }
    return phi;
}

MonoidMorphism MonoidMorphism::from_table(MonoidPtr source, MonoidPtr target,
                                          std::vector<MonoidElement> images) {
    if (source->kind() != MonoidKind::FiniteByTable)
        fail(errc::morphism_mismatch, "table morphisms need a table source");
    if (images.size() != source->table_size())
        fail(errc::morphism_mismatch, "one image per monoid element expected");
    MonoidMorphism phi;
    phi.action_ = Kind::Table;
    phi.source_ = std::move(source);
    phi.target_ = std::move(target);
    phi.images_ = std::move(images);
    for (const auto& img : phi.images_)
        if (!phi.target_->valid(img)) fail(errc::morphism_mismatch, "image outside the target");
    // phi(0) = 0 and additivity, checked exhaustively on the finite source
    const std::size_t n = phi.source_->table_size();
    if (!(phi.images_[phi.source_->identity_index()] == phi.target_->identity()))
        fail(errc::morphism_mismatch, "identity is not preserved");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            MonoidElement sum = phi.source_->add(phi.source_->table_element(a),
                                                 phi.source_->table_element(b));
            MonoidElement lhs = phi.images_[static_cast<std::size_t>(sum.index)];
            MonoidElement rhs = phi.target_->add(phi.images_[a], phi.images_[b]);
            if (!(lhs == rhs)) fail(errc::morphism_mismatch, "table morphism is not additive");
        }
    return phi;
}

MonoidMorphism MonoidMorphism::from_generators(MonoidPtr source, MonoidPtr target,
                                               IntMat generator_matrix, IntVec ambient_moduli,
                                               IntMat class_map) {
    MonoidMorphism phi;
    phi.action_ = Kind::FromGenerators;
    phi.source_ = std::move(source);
    phi.target_ = std::move(target);
    phi.generator_matrix_ = std::move(generator_matrix);
    phi.ambient_moduli_ = std::move(ambient_moduli);
    phi.class_map_ = std::move(class_map);
    return phi;
}

MonoidElement MonoidMorphism::apply(const MonoidElement& x) const {
    if (!source_ || !target_) fail(errc::internal, "apply on an empty morphism");
    if (!source_->valid(x)) fail(errc::invalid_element, "morphism argument outside the source");
    switch (action_) {
        case Kind::Table: return images_[static_cast<std::size_t>(x.index)];
        case Kind::Linear: return target_->element(mat_apply(matrix_, x.coords));
        case Kind::FromGenerators: {
            // solve generator_matrix * v == x (free rows exact, torsion rows
            // modulo the ambient invariant factors), then map the class of v
            const std::size_t rows = generator_matrix_.size();
            const std::size_t gens = rows ? generator_matrix_.front().size() : 0;
            std::size_t torsion_rows = 0;
            for (const auto& m : ambient_moduli_)
                if (m != 0) ++torsion_rows;
            IntMat a(rows, IntVec(gens + torsion_rows, 0));
            std::size_t slack = 0;
            for (std::size_t i = 0; i < rows; ++i) {
                for (std::size_t j = 0; j < gens; ++j) a[i][j] = generator_matrix_[i][j];
                if (ambient_moduli_[i] != 0) a[i][gens + slack++] = ambient_moduli_[i];
            }
            auto sol = solve_integer(a, x.coords);
            if (!sol)
                fail(errc::invalid_element,
                     x.str() + " is not in the subgroup generated by the monoid generators");
            IntVec v(sol->begin(), sol->begin() + static_cast<long>(gens));
            return target_->element(mat_apply(class_map_, v));
        }
    }
    fail(errc::internal, "unreachable");
}

// ---------------------------------------------------------------------------
// Grothendieck groups

namespace {

/// Canonical data of Z^g modulo the column lattice of `relations`:
/// the quotient group and the induced map Z^g -> canonical coordinates.
struct QuotientPresentation {
    AbelianGroup group;
    IntMat class_map;  // group.dim() rows, g columns
};

QuotientPresentation present_quotient(std::size_t g, const IntMat& relations) {
    QuotientPresentation out;
    if (g == 0) return out;
    IntMat rel = relations;
    if (rel.empty()) rel = IntMat(g, IntVec{});
    SmithResult snf = smith_normal_form(rel);
    std::vector<mpz_class> diag = snf.diagonal();
    diag.resize(g, 0);
    std::vector<std::size_t> free_rows, torsion_rows;
    for (std::size_t i = 0; i < g; ++i) {
        if (diag[i] == 0)
            free_rows.push_back(i);
        else if (diag[i] >= 2)
            torsion_rows.push_back(i);
    }
    out.group.free_rank = free_rows.size();
    for (std::size_t i : torsion_rows) out.group.invariant_factors.push_back(diag[i]);
    out.class_map.reserve(free_rows.size() + torsion_rows.size());
    for (std::size_t i : free_rows) out.class_map.push_back(snf.U[i]);
    for (std::size_t i : torsion_rows) out.class_map.push_back(snf.U[i]);
    return out;
}

GrothendieckGroup grothendieck_of_table(const MonoidPtr& m) {
    const std::size_t n = m->table_size();
    std::vector<MonoidElement> elems;
    for (std::size_t i = 0; i < n; ++i) elems.push_back(m->table_element(i));

    // (a,b) ~ (c,d) iff (a+d)+x = (b+c)+x for some x
    auto equivalent = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
        MonoidElement left = m->add(elems[a], elems[d]);
        MonoidElement right = m->add(elems[b], elems[c]);
        for (std::size_t x = 0; x < n; ++x)
            if (m->add(left, elems[x]) == m->add(right, elems[x])) return true;
        return false;
    };
    std::vector<long> cls(n * n, -1);
    std::vector<std::pair<std::size_t, std::size_t>> reps;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t p = a * n + b;
            for (std::size_t r = 0; r < reps.size(); ++r)
                if (equivalent(a, b, reps[r].first, reps[r].second)) {
                    cls[p] = static_cast<long>(r);
                    break;
                }
            if (cls[p] < 0) {
                cls[p] = static_cast<long>(reps.size());
                reps.emplace_back(a, b);
            }
        }
    const std::size_t classes = reps.size();
    auto class_add = [&](std::size_t r, std::size_t s) {
        MonoidElement a = m->add(elems[reps[r].first], elems[reps[s].first]);
        MonoidElement b = m->add(elems[reps[r].second], elems[reps[s].second]);
        return static_cast<std::size_t>(cls[static_cast<std::size_t>(a.index) * n +
                                            static_cast<std::size_t>(b.index)]);
    };
    const std::size_t id_class =
        static_cast<std::size_t>(cls[m->identity_index() * n + m->identity_index()]);

    // present the class group by generators e_r and relations
    // e_r + e_s - e_{r+s} = 0, e_id = 0
    IntMat relations(classes, IntVec{});
    auto push_column = [&](const IntVec& col) {
        for (std::size_t i = 0; i < classes; ++i) relations[i].push_back(col[i]);
    };
    {
        IntVec col(classes, 0);
        col[id_class] = 1;
        push_column(col);
    }
    for (std::size_t r = 0; r < classes; ++r)
        for (std::size_t s = r; s < classes; ++s) {
            IntVec col(classes, 0);
            col[r] += 1;
            col[s] += 1;
            col[class_add(r, s)] -= 1;
            push_column(col);
        }
    QuotientPresentation pres = present_quotient(classes, relations);

    GrothendieckGroup out;
    out.group = pres.group;
    out.group_monoid = Monoid::full_group(pres.group);
    std::vector<MonoidElement> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = static_cast<std::size_t>(cls[i * n + m->identity_index()]);
        IntVec e(classes, 0);
        e[r] = 1;
        images.push_back(out.group_monoid->element(mat_apply(pres.class_map, e)));
    }
    out.canonical = MonoidMorphism::from_table(m, out.group_monoid, std::move(images));
    return out;
}

}  // namespace

GrothendieckGroup grothendieck_group(const MonoidPtr& m) {
    GrothendieckGroup out;
    switch (m->kind()) {
        case MonoidKind::FreeCommutative: {
            out.group.free_rank = m->free_vars();
            out.group_monoid = Monoid::full_group(out.group);
            out.canonical =
                MonoidMorphism::linear(m, out.group_monoid, identity_matrix(m->free_vars()));
            return out;
        }
        case MonoidKind::FullGroup: {
            out.group = m->group();
            out.group_monoid = Monoid::full_group(out.group);
            out.canonical = MonoidMorphism::linear(m, out.group_monoid, identity_matrix(out.group.dim()));
            return out;
        }
        case MonoidKind::SubmonoidByGenerators: {
            const AbelianGroup& ambient = m->group();
            const std::size_t gens = m->generators().size();
            const std::size_t dim = ambient.dim();
            // relation lattice of the generators inside the ambient group
            std::size_t torsion = ambient.invariant_factors.size();
            IntMat a(dim, IntVec(gens + torsion, 0));
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < gens; ++j) a[i][j] = m->generators()[j].coords[i];
            for (std::size_t t = 0; t < torsion; ++t)
                a[ambient.free_rank + t][gens + t] = ambient.invariant_factors[t];
            std::vector<IntVec> kernel = kernel_integer(a);
            IntMat relations(gens, IntVec(kernel.size(), 0));
            for (std::size_t c = 0; c < kernel.size(); ++c)
                for (std::size_t r = 0; r < gens; ++r) relations[r][c] = kernel[c][r];
            QuotientPresentation pres = present_quotient(gens, relations);
            out.group = pres.group;
            out.group_monoid = Monoid::full_group(pres.group);
            IntVec moduli(dim, 0);
            for (std::size_t t = 0; t < torsion; ++t)
                moduli[ambient.free_rank + t] = ambient.invariant_factors[t];
            IntMat generator_matrix(dim, IntVec(gens, 0));
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < gens; ++j)
                    generator_matrix[i][j] = m->generators()[j].coords[i];
            out.canonical = MonoidMorphism::from_generators(m, out.group_monoid,
                                                            std::move(generator_matrix),
                                                            std::move(moduli), pres.class_map);
            return out;
        }
        case MonoidKind::FiniteByTable: return grothendieck_of_table(m);
    }
    fail(errc::internal, "unreachable");
}

TorsionSubgroup torsion_subgroup(const AbelianGroup& g) {
    TorsionSubgroup out;
    out.subgroup.free_rank = 0;
    out.subgroup.invariant_factors = g.invariant_factors;
    const std::size_t t = g.invariant_factors.size();
    IntMat embed(g.dim(), IntVec(t, 0));
    for (std::size_t i = 0; i < t; ++i) embed[g.free_rank + i][i] = 1;
    out.embedding = MonoidMorphism::linear(Monoid::full_group(out.subgroup), Monoid::full_group(g),
                                           std::move(embed));
    return out;
}

TotalOrder::TotalOrder(AbelianGroup group) : group_(std::move(group)) {
    if (!group_.torsion_free())
        fail(errc::not_torsion_free, group_.str() + " admits no compatible total order");
}

bool TotalOrder::less(const MonoidElement& a, const MonoidElement& b) const {
    return a.coords < b.coords;  // lexicographic on the free part
}

DegreeOrder::DegreeOrder(const MonoidPtr& m)
    : monoid_(m),
      grothendieck_(grothendieck_group(m)),
      order_((grothendieck_.group.torsion_free() && m->is_cancellative())
                 ? grothendieck_.group
                 : throw Error(errc::not_torsion_free,
                               m->str() + " has no torsion-free ordered grading group")) {}

bool DegreeOrder::less(const MonoidElement& a, const MonoidElement& b) const {
    return order_.less(grothendieck_.canonical.apply(a), grothendieck_.canonical.apply(b));
}

bool quasi_torsion_contains(const MonoidPtr& m, const MonoidElement& x) {
    if (!m->valid(x)) fail(errc::invalid_element, "element outside the monoid");
    if (m->kind() == MonoidKind::FiniteByTable) {
        // direct search: n*x + y = y with n <= |M|
        const std::size_t size = m->table_size();
        MonoidElement nx = x;
        for (std::size_t n = 1; n <= size; ++n) {
            for (std::size_t y = 0; y < size; ++y) {
                MonoidElement yy = m->table_element(y);
                if (m->add(nx, yy) == yy) return true;
            }
            nx = m->add(nx, x);
        }
        return false;
    }
    GrothendieckGroup g = grothendieck_group(m);
    MonoidElement image = g.canonical.apply(x);
    for (std::size_t i = 0; i < g.group.free_rank; ++i)
        if (image.coords[i] != 0) return false;
    return true;
}

std::vector<MonoidElement> quasi_zero_submonoid(const MonoidPtr& m) {
    if (m->kind() != MonoidKind::FiniteByTable)
        fail(errc::unsupported, "quasi-zero submonoid is computed for finite table monoids");
    std::vector<MonoidElement> members;
    for (std::size_t a = 0; a < m->table_size(); ++a) {
        MonoidElement x = m->table_element(a);
        for (std::size_t b = 0; b < m->table_size(); ++b) {
            MonoidElement y = m->table_element(b);
            if (m->add(x, y) == y) {
                members.push_back(x);
                break;
            }
        }
    }
    return members;
}

namespace {

mpz_class element_order_in_torsion(const AbelianGroup& g, const IntVec& coords) {
    mpz_class order = 1;
    for (std::size_t i = 0; i < g.invariant_factors.size(); ++i) {
        const mpz_class& n = g.invariant_factors[i];
        mpz_class c = coords[g.free_rank + i];
        mpz_class gc;
        mpz_gcd(gc.get_mpz_t(), c.get_mpz_t(), n.get_mpz_t());
        mpz_class ord = n / gc;
        mpz_lcm(order.get_mpz_t(), order.get_mpz_t(), ord.get_mpz_t());
    }
    return order;
}

}  // namespace

Ternary submonoid_contains(const MonoidPtr& m, const MonoidElement& x, std::size_t budget) {
    if (m->kind() != MonoidKind::SubmonoidByGenerators)
        fail(errc::unsupported, "membership search is for submonoids by generators");
    MonoidElement target = m->element(x.coords);
    const AbelianGroup& ambient = m->group();
    const auto& gens = m->generators();
    const std::size_t r = ambient.free_rank;

    bool all_nonneg = true;
    for (const auto& g : gens)
        for (std::size_t i = 0; i < r; ++i)
            if (g.coords[i] < 0) all_nonneg = false;

    if (all_nonneg) {
        for (std::size_t i = 0; i < r; ++i)
            if (target.coords[i] < 0) return Ternary::No;
        // coordinate-sum functional: generators of weight zero are pure torsion,
        // so the search below is complete
        mpz_class weight_x = 0;
        for (std::size_t i = 0; i < r; ++i) weight_x += target.coords[i];
        std::vector<mpz_class> weights;
        std::vector<mpz_class> bounds;
        for (const auto& g : gens) {
            mpz_class w = 0;
            for (std::size_t i = 0; i < r; ++i) w += g.coords[i];
            weights.push_back(w);
            bounds.push_back(w == 0 ? element_order_in_torsion(ambient, g.coords) : weight_x / w + 1);
        }
        std::size_t visited = 0;
        bool exceeded = false;
        std::function<bool(std::size_t, const MonoidElement&, const mpz_class&)> search =
            [&](std::size_t idx, const MonoidElement& acc, const mpz_class& weight_left) -> bool {
            if (++visited > budget) {
                exceeded = true;
                return false;
            }
            if (idx == gens.size()) return acc == target;
            MonoidElement current = acc;
            for (mpz_class c = 0; c < bounds[idx]; ++c) {
                if (weights[idx] > 0 && c * weights[idx] > weight_left) break;
                if (search(idx + 1, current, weight_left - c * weights[idx])) return true;
                if (exceeded) return false;
                current = m->add(current, gens[idx]);
            }
            return false;
        };
        if (search(0, m->identity(), weight_x)) return Ternary::Yes;
        return exceeded ? Ternary::Unknown : Ternary::No;
    }

    // mixed-sign free parts: bounded search only
    std::size_t visited = 0;
    mpz_class norm = 1;
    for (std::size_t i = 0; i < r; ++i) norm += abs(target.coords[i]);
    unsigned long cap = mpz_class(norm + 4).get_ui();
    std::function<bool(std::size_t, const MonoidElement&, unsigned long)> search =
        [&](std::size_t idx, const MonoidElement& acc, unsigned long left) -> bool {
        if (++visited > budget) return false;
        if (acc == target) return true;
        if (idx == gens.size() || left == 0) return false;
        if (search(idx + 1, acc, left)) return true;
        MonoidElement next = m->add(acc, gens[idx]);
        return search(idx, next, left - 1);
    };
    if (search(0, m->identity(), cap)) return Ternary::Yes;
    return Ternary::Unknown;
}

}  // namespace gring
