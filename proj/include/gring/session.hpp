#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gring/element.hpp"
#include "gring/grobner.hpp"
#include "gring/monoid.hpp"

namespace gring {

/// Named declarations of a CLI session, in declaration order. Element
/// literals bind against the most recently declared ring and monoid.
struct SessionDeclaration {
    std::vector<std::pair<std::string, RingPtr>> rings;
    std::vector<std::pair<std::string, MonoidPtr>> monoids;
    std::vector<std::pair<std::string, MonoidMorphism>> gradings;
    std::vector<std::pair<std::string, RingElement>> elements;

    const RingPtr* find_ring(const std::string& name) const;
    const MonoidPtr* find_monoid(const std::string& name) const;
    const MonoidMorphism* find_grading(const std::string& name) const;
    const RingElement* find_element(const std::string& name) const;
    bool name_taken(const std::string& name) const;

    const RingPtr& current_ring() const;    // errc::unknown_name when none declared
    const MonoidPtr& current_monoid() const;
};

/// Parses a session script. Diagnostics carry line and column (ParseError);
/// name clashes and unresolved references raise errc::unknown_name.
SessionDeclaration parse_session(const std::string& text);

/// Canonical text form; parse(print(s)) == s structurally.
std::string print_session(const SessionDeclaration& session);

/// Structural equality (descriptor values, not handle identity).
bool session_equal(const SessionDeclaration& a, const SessionDeclaration& b);

/// Evaluates an expression (+, -, *, ^, parentheses, scalar and e[...]
/// literals, bound names) against a session.
RingElement evaluate_expression(const std::string& text, const SessionDeclaration& session);

std::string print_element(const RingElement& element);
std::string print_scalar(const Scalar& scalar);

}  // namespace gring
