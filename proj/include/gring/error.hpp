#pragma once

#include <stdexcept>
#include <string>

namespace gring {

enum class errc {
    ring_mismatch,
    monoid_mismatch,
    morphism_mismatch,
    not_a_unit,
    unsupported,
    not_idempotent_modulo_nilradical,
    empty_input,
    invalid_element,
    zero_element,
    not_torsion_free,
    hypothesis_violation,
    not_an_annihilator,
    window_too_small,
    budget_exceeded,
    unknown_name,
    syntax_error,
    usage_error,
    internal,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

/// Syntax errors carry a 1-based source location.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(errc::syntax_error,
                what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace gring
