#include "gring/session.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace gring {

const RingPtr* SessionDeclaration::find_ring(const std::string& name) const {
    for (const auto& [n, r] : rings)
        if (n == name) return &r;
    return nullptr;
}

const MonoidPtr* SessionDeclaration::find_monoid(const std::string& name) const {
    for (const auto& [n, m] : monoids)
        if (n == name) return &m;
    return nullptr;
}

const MonoidMorphism* SessionDeclaration::find_grading(const std::string& name) const {
    for (const auto& [n, g] : gradings)
        if (n == name) return &g;
    return nullptr;
}

const RingElement* SessionDeclaration::find_element(const std::string& name) const {
    for (const auto& [n, e] : elements)
        if (n == name) return &e;
    return nullptr;
}

bool SessionDeclaration::name_taken(const std::string& name) const {
    return find_ring(name) || find_monoid(name) || find_grading(name) || find_element(name);
}

const RingPtr& SessionDeclaration::current_ring() const {
    if (rings.empty()) fail(errc::unknown_name, "no ring declared yet");
    return rings.back().second;
}

const MonoidPtr& SessionDeclaration::current_monoid() const {
    if (monoids.empty()) fail(errc::unknown_name, "no monoid declared yet");
    return monoids.back().second;
}

// ---------------------------------------------------------------------------
// lexer

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    int line = 1;
    int column = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

    [[noreturn]] void error(const std::string& what) const {
        throw ParseError(what, current_.line, current_.column);
    }

private:
    void advance() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                column_ = 1;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++column_;
                ++pos_;
            } else if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
        current_ = Token{Tok::End, "", line_, column_};
        if (pos_ >= text_.size()) return;
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            current_.kind = Tok::Ident;
            current_.text = text_.substr(start, pos_ - start);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            current_.kind = Tok::Int;
            current_.text = text_.substr(start, pos_ - start);
        } else if (std::string("();,=[]{}+-*/^:").find(c) != std::string::npos) {
            current_.kind = Tok::Punct;
            current_.text = std::string(1, c);
            ++pos_;
        } else {
            throw ParseError("unexpected character '" + std::string(1, c) + "'", line_, column_);
        }
        column_ += static_cast<int>(current_.text.size());
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
    Token current_;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    SessionDeclaration parse() {
        SessionDeclaration session;
        while (lex_.peek().kind != Tok::End) statement(session);
        return session;
    }

    RingElement expression_in(const SessionDeclaration& session, const RingPtr& ring,
                              const MonoidPtr& monoid) {
        RingElement value = expr(session, ring, monoid);
        if (lex_.peek().kind != Tok::End) lex_.error("trailing input after the expression");
        return value;
    }

private:
    Lexer lex_;

    bool at_punct(const std::string& p) {
        return lex_.peek().kind == Tok::Punct && lex_.peek().text == p;
    }

    void expect_punct(const std::string& p) {
        if (!at_punct(p)) lex_.error("expected '" + p + "'");
        lex_.take();
    }

    std::string expect_ident() {
        if (lex_.peek().kind != Tok::Ident) lex_.error("expected a name");
        return lex_.take().text;
    }

    std::string expect_keyword(const std::string& kw) {
        if (lex_.peek().kind != Tok::Ident || lex_.peek().text != kw)
            lex_.error("expected '" + kw + "'");
        return lex_.take().text;
    }

    mpz_class expect_integer() {
        bool negative = false;
        if (at_punct("-")) {
            lex_.take();
            negative = true;
        }
        if (lex_.peek().kind != Tok::Int) lex_.error("expected an integer");
        mpz_class v(lex_.take().text, 10);  // base pinned: "08" is decimal, not octal
        return negative ? mpz_class(-v) : v;
    }

    unsigned long expect_natural() {
        mpz_class v = expect_integer();
        if (v < 0) lex_.error("expected a nonnegative integer");
        return v.get_ui();
    }

    std::vector<mpz_class> integer_list(const std::string& closer) {
        std::vector<mpz_class> values;
        if (at_punct(closer)) return values;
        values.push_back(expect_integer());
        while (at_punct(",")) {
            lex_.take();
            values.push_back(expect_integer());
        }
        return values;
    }

    void statement(SessionDeclaration& session) {
        // semantic failures (unknown names, ring mismatches, bad descriptors)
        // are reported with the statement's source location
        const Token start = lex_.peek();
        try {
            statement_impl(session);
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(e.what(), start.line, start.column);
        }
    }

    void statement_impl(SessionDeclaration& session) {
        std::string kw = expect_ident();
        if (kw == "ring") {
            std::string name = expect_ident();
            if (session.name_taken(name)) lex_.error("name '" + name + "' already bound");
            expect_punct("=");
            RingPtr ring = ring_spec();
            expect_punct(";");
            session.rings.emplace_back(name, std::move(ring));
        } else if (kw == "monoid") {
            std::string name = expect_ident();
            if (session.name_taken(name)) lex_.error("name '" + name + "' already bound");
            expect_punct("=");
            MonoidPtr monoid = monoid_spec(session);
            expect_punct(";");
            session.monoids.emplace_back(name, std::move(monoid));
        } else if (kw == "grading") {
            std::string name = expect_ident();
            if (session.name_taken(name)) lex_.error("name '" + name + "' already bound");
            expect_punct("=");
            MonoidMorphism phi = morphism_spec(session);
            expect_punct(";");
            session.gradings.emplace_back(name, std::move(phi));
        } else if (kw == "let") {
            std::string name = expect_ident();
            if (session.name_taken(name)) lex_.error("name '" + name + "' already bound");
            RingPtr ring;
            MonoidPtr monoid;
            if (at_punct(":")) {  // explicit context: let g : R[M] = ...
                lex_.take();
                std::string ring_name = expect_ident();
                const RingPtr* r = session.find_ring(ring_name);
                if (!r) lex_.error("unknown ring '" + ring_name + "'");
                expect_punct("[");
                std::string monoid_name = expect_ident();
                const MonoidPtr* m = session.find_monoid(monoid_name);
                if (!m) lex_.error("unknown monoid '" + monoid_name + "'");
                expect_punct("]");
                ring = *r;
                monoid = *m;
            } else {
                ring = session.current_ring();
                monoid = session.current_monoid();
            }
            expect_punct("=");
            RingElement value = expr(session, ring, monoid);
            expect_punct(";");
            session.elements.emplace_back(name, std::move(value));
        } else {
            lex_.error("expected 'ring', 'monoid', 'grading' or 'let'");
        }
    }

    RingPtr field_spec() {
        std::string kw = expect_ident();
        if (kw == "QQ") return CoefficientRing::rationals();
        if (kw == "Zmod") {
            expect_punct("(");
            mpz_class n = expect_integer();
            expect_punct(")");
            return CoefficientRing::integers_mod(n);
        }
        lex_.error("expected a field (QQ or Zmod(p))");
    }

    RingPtr ring_spec() {
        std::string kw = expect_ident();
        if (kw == "ZZ") return CoefficientRing::integers();
        if (kw == "QQ") return CoefficientRing::rationals();
        if (kw == "Zmod") {
            expect_punct("(");
            mpz_class n = expect_integer();
            expect_punct(")");
            return CoefficientRing::integers_mod(n);
        }
        if (kw == "PolyQuotient") {
            expect_punct("(");
            RingPtr field = field_spec();
            expect_punct(";");
            std::vector<std::string> vars;
            vars.push_back(expect_ident());
            while (at_punct(",")) {
                lex_.take();
                vars.push_back(expect_ident());
            }
            expect_punct(";");
            TermOrder order = TermOrder::Lex;
            PolyRingPtr poly_ring;  // needs the order; parse generators textually first
            std::vector<std::vector<std::pair<std::vector<unsigned>, mpq_class>>> raw_polys;
            if (!at_punct(";")) {
                raw_polys.push_back(poly_literal_raw(vars));
                while (at_punct(",")) {
                    lex_.take();
                    raw_polys.push_back(poly_literal_raw(vars));
                }
            }
            expect_punct(";");
            std::string order_name = expect_ident();
            if (order_name == "lex")
                order = TermOrder::Lex;
            else if (order_name == "grevlex")
                order = TermOrder::GrevLex;
            else
                lex_.error("expected 'lex' or 'grevlex'");
            expect_punct(")");
            poly_ring = PolyRing::make(field, vars, order);
            std::vector<Polynomial> gens;
            for (const auto& raw : raw_polys) {
                std::vector<std::pair<Monomial, Scalar>> terms;
                for (const auto& [exps, coeff] : raw)
                    terms.emplace_back(Monomial{exps}, Scalar::of_rational(field, coeff));
                gens.push_back(Polynomial::make(poly_ring, std::move(terms)));
            }
            auto quotient = std::make_shared<const QuotientRing>(buchberger(poly_ring, std::move(gens)));
            return CoefficientRing::polynomial_quotient(quotient);
        }
        lex_.error("expected ZZ, QQ, Zmod(n) or PolyQuotient(...)");
    }

    // {2*x1^2*x3 - x2} against a fixed variable list, before the ring exists
    std::vector<std::pair<std::vector<unsigned>, mpq_class>> poly_literal_raw(
        const std::vector<std::string>& vars) {
        expect_punct("{");
        std::vector<std::pair<std::vector<unsigned>, mpq_class>> terms;
        bool negative = false;
        if (at_punct("-")) {
            lex_.take();
            negative = true;
        }
        for (;;) {
            auto [exps, coeff] = poly_term_raw(vars);
            if (negative) coeff = -coeff;
            terms.emplace_back(std::move(exps), std::move(coeff));
            if (at_punct("+"))
                negative = false;
            else if (at_punct("-"))
                negative = true;
            else
                break;
            lex_.take();
        }
        expect_punct("}");
        return terms;
    }

    std::pair<std::vector<unsigned>, mpq_class> poly_term_raw(const std::vector<std::string>& vars) {
        std::vector<unsigned> exps(vars.size(), 0);
        mpq_class coeff = 1;
        bool saw_coeff = false, saw_var = false;
        auto var_power = [&]() {
            std::string name = expect_ident();
            auto it = std::find(vars.begin(), vars.end(), name);
            if (it == vars.end()) lex_.error("unknown variable '" + name + "'");
            unsigned long e = 1;
            if (at_punct("^")) {
                lex_.take();
                e = expect_natural();
            }
            exps[static_cast<std::size_t>(it - vars.begin())] += e;
            saw_var = true;
        };
        if (lex_.peek().kind == Tok::Int) {
            mpz_class num = expect_integer();
            mpz_class den = 1;
            if (at_punct("/")) {
                lex_.take();
                den = expect_integer();
                if (den == 0) lex_.error("zero denominator");
            }
            coeff = mpq_class(num, den);
            coeff.canonicalize();
            saw_coeff = true;
        } else {
            var_power();
        }
        while (at_punct("*")) {
            lex_.take();
            var_power();
        }
        if (!saw_coeff && !saw_var) lex_.error("empty polynomial term");
        return {std::move(exps), std::move(coeff)};
    }

    MonoidPtr monoid_spec(const SessionDeclaration& session) {
        std::string kw = expect_ident();
        if (kw == "FreeMonoid") {
            expect_punct("(");
            unsigned long k = expect_natural();
            expect_punct(")");
            return Monoid::free_commutative(k);
        }
        if (kw == "FreeAbelianGroup") {
            expect_punct("(");
            unsigned long r = expect_natural();
            expect_punct(")");
            return Monoid::full_group(AbelianGroup{r, {}});
        }
        if (kw == "AbelianGroup") {
            expect_punct("(");
            unsigned long r = expect_natural();
            std::vector<mpz_class> factors;
            if (at_punct(";")) {
                lex_.take();
                factors = integer_list(")");
            }
            expect_punct(")");
            return Monoid::full_group(AbelianGroup{r, std::move(factors)});
        }
        if (kw == "Submonoid") {
            expect_punct("(");
            std::string ambient_name = expect_ident();
            const MonoidPtr* ambient = session.find_monoid(ambient_name);
            if (!ambient) lex_.error("unknown monoid '" + ambient_name + "'");
            if ((*ambient)->kind() != MonoidKind::FullGroup)
                lex_.error("submonoid ambient must be a full group");
            expect_punct(";");
            std::vector<MonoidElement> gens;
            for (;;) {
                expect_punct("[");
                gens.push_back(MonoidElement{integer_list("]"), -1});
                expect_punct("]");
                if (!at_punct(",")) break;
                lex_.take();
            }
            expect_punct(")");
            return Monoid::submonoid((*ambient)->group(), std::move(gens));
        }
        if (kw == "TableMonoid") {
            expect_punct("(");
            unsigned long size = expect_natural();
            expect_punct(";");
            expect_punct("[");
            std::vector<mpz_class> raw = integer_list("]");
            expect_punct("]");
            expect_punct(";");
            unsigned long id = expect_natural();
            expect_punct(")");
            std::vector<std::size_t> table;
            for (const auto& v : raw) {
                if (v < 0) lex_.error("table entries must be element indices");
                table.push_back(v.get_ui());
            }
            return Monoid::finite_by_table(size, std::move(table), id);
        }
        lex_.error("expected a monoid spec");
    }

    MonoidMorphism morphism_spec(const SessionDeclaration& session) {
        std::string kw = expect_ident();
        auto named_monoid = [&](const std::string& name) -> MonoidPtr {
            const MonoidPtr* m = session.find_monoid(name);
            if (!m) lex_.error("unknown monoid '" + name + "'");
            return *m;
        };
        if (kw == "Morphism") {
            expect_punct("(");
            MonoidPtr source = named_monoid(expect_ident());
            expect_punct(";");
            MonoidPtr target = named_monoid(expect_ident());
            expect_punct(";");
            expect_punct("[");
            IntMat matrix;
            if (!at_punct("]")) {
                for (;;) {
                    expect_punct("[");
                    matrix.push_back(integer_list("]"));
                    expect_punct("]");
                    if (!at_punct(",")) break;
                    lex_.take();
                }
            }
            expect_punct("]");
            expect_punct(")");
            return MonoidMorphism::linear(std::move(source), std::move(target), std::move(matrix));
        }
        if (kw == "MorphismTable") {
            expect_punct("(");
            MonoidPtr source = named_monoid(expect_ident());
            expect_punct(";");
            MonoidPtr target = named_monoid(expect_ident());
            expect_punct(";");
            std::vector<MonoidElement> images;
            for (;;) {
                images.push_back(basis_degree(target));
                if (!at_punct(",")) break;
                lex_.take();
            }
            expect_punct(")");
            return MonoidMorphism::from_table(std::move(source), std::move(target),
                                              std::move(images));
        }
        lex_.error("expected Morphism(...) or MorphismTable(...)");
    }

    MonoidElement basis_degree(const MonoidPtr& monoid) {
        expect_keyword("e");
        expect_punct("[");
        std::vector<mpz_class> coords = integer_list("]");
        expect_punct("]");
        try {
            return monoid->element(std::move(coords));
        } catch (const Error& e) {
            lex_.error(e.what());
        }
    }

    RingElement expr(const SessionDeclaration& session, const RingPtr& ring,
                     const MonoidPtr& monoid) {
        bool negative = false;
        if (at_punct("-")) {
            lex_.take();
            negative = true;
        }
        RingElement value = term(session, ring, monoid);
        if (negative) value = -value;
        while (at_punct("+") || at_punct("-")) {
            bool minus = lex_.take().text == "-";
            RingElement rhs = term(session, ring, monoid);
            value = minus ? value - rhs : value + rhs;
        }
        return value;
    }

    RingElement term(const SessionDeclaration& session, const RingPtr& ring,
                     const MonoidPtr& monoid) {
        RingElement value = factor(session, ring, monoid);
        while (at_punct("*")) {
            lex_.take();
            value = value * factor(session, ring, monoid);
        }
        return value;
    }

    RingElement factor(const SessionDeclaration& session, const RingPtr& ring,
                       const MonoidPtr& monoid) {
        RingElement value = primary(session, ring, monoid);
        while (at_punct("^")) {
            lex_.take();
            value = value.pow(static_cast<unsigned>(expect_natural()));
        }
        return value;
    }

    RingElement primary(const SessionDeclaration& session, const RingPtr& ring,
                        const MonoidPtr& monoid) {
        const Token& tok = lex_.peek();
        if (at_punct("(")) {
            lex_.take();
            RingElement value = expr(session, ring, monoid);
            expect_punct(")");
            return value;
        }
        if (at_punct("{")) {  // quotient-ring scalar literal
            if (ring->kind() != RingKind::PolynomialQuotient)
                lex_.error("polynomial literals need a PolyQuotient ring");
            const auto& poly_ring = ring->quotient()->poly_ring();
            auto raw = poly_literal_raw(poly_ring->vars());
            std::vector<std::pair<Monomial, Scalar>> terms;
            for (const auto& [exps, coeff] : raw)
                terms.emplace_back(Monomial{exps}, Scalar::of_rational(poly_ring->field(), coeff));
            Scalar c = Scalar::quotient_class(ring, Polynomial::make(poly_ring, std::move(terms)));
            return RingElement::one(ring, monoid).scaled(c);
        }
        if (tok.kind == Tok::Int) {
            mpz_class num = expect_integer();
            if (at_punct("/")) {
                lex_.take();
                mpz_class den = expect_integer();
                if (den == 0) lex_.error("zero denominator");
                mpq_class q(num, den);
                q.canonicalize();
                return RingElement::one(ring, monoid).scaled(Scalar::of_rational(ring, q));
            }
            return RingElement::one(ring, monoid).scaled(Scalar::of(ring, num));
        }
        if (tok.kind == Tok::Ident) {
            if (tok.text == "e") {
                MonoidElement degree = basis_degree(monoid);
                try {
                    return RingElement::epsilon(ring, monoid, degree);
                } catch (const Error& e) {
                    lex_.error(e.what());
                }
            }
            std::string name = expect_ident();
            const RingElement* bound = session.find_element(name);
            if (!bound) lex_.error("unknown element '" + name + "'");
            return *bound;
        }
        lex_.error("expected a scalar, e[...], a bound name or '('");
    }
};

}  // namespace

SessionDeclaration parse_session(const std::string& text) { return Parser(text).parse(); }

RingElement evaluate_expression(const std::string& text, const SessionDeclaration& session) {
    Parser parser(text);
    RingPtr ring = session.rings.empty() ? CoefficientRing::integers() : session.current_ring();
    MonoidPtr monoid =
        session.monoids.empty() ? Monoid::free_commutative(1) : session.current_monoid();
    return parser.expression_in(session, ring, monoid);
}

// ---------------------------------------------------------------------------
// printing

std::string print_scalar(const Scalar& scalar) { return scalar.str(); }

std::string print_element(const RingElement& element) {
    if (element.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : element.terms()) {
        if (!s.empty()) s += " + ";
        s += print_scalar(c) + "*" + m.str();
    }
    return s;
}

namespace {

std::string print_ring_spec(const RingPtr& ring) {
    switch (ring->kind()) {
        case RingKind::Integers: return "ZZ";
        case RingKind::Rationals: return "QQ";
        case RingKind::IntegersMod: return "Zmod(" + ring->modulus().get_str() + ")";
        case RingKind::PolynomialQuotient: {
            const auto& quotient = ring->quotient();
            const auto& pr = quotient->poly_ring();
            std::string s = "PolyQuotient(" + print_ring_spec(pr->field()) + "; ";
            for (std::size_t i = 0; i < pr->vars().size(); ++i) {
                if (i) s += ",";
                s += pr->vars()[i];
            }
            s += "; ";
            const auto& gens = quotient->basis().generators();
            for (std::size_t i = 0; i < gens.size(); ++i) {
                if (i) s += ", ";
                s += "{" + gens[i].str() + "}";
            }
            s += "; " + std::string(term_order_name(pr->order())) + ")";
            return s;
        }
    }
    return "?";
}

std::string print_monoid_spec(const MonoidPtr& monoid, const SessionDeclaration& session) {
    switch (monoid->kind()) {
        case MonoidKind::FreeCommutative:
            return "FreeMonoid(" + std::to_string(monoid->free_vars()) + ")";
        case MonoidKind::FullGroup: {
            const AbelianGroup& g = monoid->group();
            if (g.invariant_factors.empty())
                return "FreeAbelianGroup(" + std::to_string(g.free_rank) + ")";
            std::string s = "AbelianGroup(" + std::to_string(g.free_rank) + "; ";
            for (std::size_t i = 0; i < g.invariant_factors.size(); ++i) {
                if (i) s += ",";
                s += g.invariant_factors[i].get_str();
            }
            return s + ")";
        }
        case MonoidKind::SubmonoidByGenerators: {
            // reference the ambient by name when declared, which the grammar requires
            std::string ambient_name;
            for (const auto& [n, m] : session.monoids)
                if (m->kind() == MonoidKind::FullGroup && m->group() == monoid->group()) {
                    ambient_name = n;
                    break;
                }
            std::string s = "Submonoid(" + ambient_name + "; ";
            const auto& gens = monoid->generators();
            for (std::size_t i = 0; i < gens.size(); ++i) {
                if (i) s += ", ";
                s += "[";
                for (std::size_t j = 0; j < gens[i].coords.size(); ++j) {
                    if (j) s += ",";
                    s += gens[i].coords[j].get_str();
                }
                s += "]";
            }
            return s + ")";
        }
        case MonoidKind::FiniteByTable: {
            std::string s = "TableMonoid(" + std::to_string(monoid->table_size()) + "; [";
            for (std::size_t a = 0; a < monoid->table_size(); ++a)
                for (std::size_t b = 0; b < monoid->table_size(); ++b) {
                    if (a || b) s += ",";
                    s += std::to_string(
                        monoid->add(monoid->table_element(a), monoid->table_element(b)).index);
                }
            return s + "]; " + std::to_string(monoid->identity_index()) + ")";
        }
    }
    return "?";
}

std::string name_of_ring(const SessionDeclaration& session, const RingPtr& ring) {
    for (const auto& [n, r] : session.rings)
        if (same_ring(r, ring)) return n;
    return "";
}

std::string name_of_monoid(const SessionDeclaration& session, const MonoidPtr& monoid) {
    for (const auto& [n, m] : session.monoids)
        if (same_monoid(m, monoid)) return n;
    return "";
}

}  // namespace

std::string print_session(const SessionDeclaration& session) {
    std::string out;
    for (const auto& [name, ring] : session.rings)
        out += "ring " + name + " = " + print_ring_spec(ring) + ";\n";
    for (const auto& [name, monoid] : session.monoids)
        out += "monoid " + name + " = " + print_monoid_spec(monoid, session) + ";\n";
    for (const auto& [name, phi] : session.gradings) {
        std::string src = name_of_monoid(session, phi.source());
        std::string tgt = name_of_monoid(session, phi.target());
        if (phi.is_table()) {
            std::string s = "grading " + name + " = MorphismTable(" + src + "; " + tgt + "; ";
            for (std::size_t i = 0; i < phi.images().size(); ++i) {
                if (i) s += ", ";
                s += phi.images()[i].str();
            }
            out += s + ");\n";
        } else {
            std::string s = "grading " + name + " = Morphism(" + src + "; " + tgt + "; [";
            for (std::size_t i = 0; i < phi.matrix().size(); ++i) {
                if (i) s += ",";
                s += "[";
                for (std::size_t j = 0; j < phi.matrix()[i].size(); ++j) {
                    if (j) s += ",";
                    s += phi.matrix()[i][j].get_str();
                }
                s += "]";
            }
            out += s + "]);\n";
        }
    }
    for (const auto& [name, element] : session.elements) {
        std::string rn = name_of_ring(session, element.ring());
        std::string mn = name_of_monoid(session, element.monoid());
        out += "let " + name + " : " + rn + "[" + mn + "] = " + print_element(element) + ";\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// structural equality

namespace {

bool ring_structural_equal(const RingPtr& a, const RingPtr& b) {
    if (a->kind() != b->kind()) return false;
    switch (a->kind()) {
        case RingKind::Integers:
        case RingKind::Rationals: return true;
        case RingKind::IntegersMod: return a->modulus() == b->modulus();
        case RingKind::PolynomialQuotient: {
            const auto& qa = a->quotient();
            const auto& qb = b->quotient();
            if (!ring_structural_equal(qa->poly_ring()->field(), qb->poly_ring()->field()))
                return false;
            if (qa->poly_ring()->vars() != qb->poly_ring()->vars()) return false;
            if (qa->poly_ring()->order() != qb->poly_ring()->order()) return false;
            const auto& ga = qa->basis().generators();
            const auto& gb = qb->basis().generators();
            if (ga.size() != gb.size()) return false;
            for (std::size_t i = 0; i < ga.size(); ++i)
                if (!(ga[i] == gb[i])) return false;
            return true;
        }
    }
    return false;
}

bool scalar_structural_equal(const Scalar& a, const Scalar& b) {
    if (a.ring()->kind() != b.ring()->kind()) return false;
    if (a.ring()->kind() == RingKind::PolynomialQuotient) return a.poly_value() == b.poly_value();
    return a == b;
}

bool element_structural_equal(const RingElement& a, const RingElement& b) {
    if (!ring_structural_equal(a.ring(), b.ring())) return false;
    if (!same_monoid(a.monoid(), b.monoid())) return false;
    if (a.terms().size() != b.terms().size()) return false;
    auto ita = a.terms().begin();
    auto itb = b.terms().begin();
    for (; ita != a.terms().end(); ++ita, ++itb) {
        if (!(ita->first == itb->first)) return false;
        if (!scalar_structural_equal(ita->second, itb->second)) return false;
    }
    return true;
}

bool morphism_structural_equal(const MonoidMorphism& a, const MonoidMorphism& b) {
    if (!same_monoid(a.source(), b.source()) || !same_monoid(a.target(), b.target())) return false;
    if (a.is_table() != b.is_table() || a.is_linear() != b.is_linear()) return false;
    if (a.is_table()) return a.images() == b.images();
    return a.matrix() == b.matrix();
}

}  // namespace

bool session_equal(const SessionDeclaration& a, const SessionDeclaration& b) {
    if (a.rings.size() != b.rings.size() || a.monoids.size() != b.monoids.size() ||
        a.gradings.size() != b.gradings.size() || a.elements.size() != b.elements.size())
        return false;
    for (std::size_t i = 0; i < a.rings.size(); ++i)
        if (a.rings[i].first != b.rings[i].first ||
            !ring_structural_equal(a.rings[i].second, b.rings[i].second))
            return false;
    for (std::size_t i = 0; i < a.monoids.size(); ++i)
        if (a.monoids[i].first != b.monoids[i].first ||
            !same_monoid(a.monoids[i].second, b.monoids[i].second))
            return false;
    for (std::size_t i = 0; i < a.gradings.size(); ++i)
        if (a.gradings[i].first != b.gradings[i].first ||
            !morphism_structural_equal(a.gradings[i].second, b.gradings[i].second))
            return false;
    for (std::size_t i = 0; i < a.elements.size(); ++i)
        if (a.elements[i].first != b.elements[i].first ||
            !element_structural_equal(a.elements[i].second, b.elements[i].second))
            return false;
    return true;
}

}  // namespace gring
