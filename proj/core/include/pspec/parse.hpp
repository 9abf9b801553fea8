#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pspec/coeff.hpp"
#include "pspec/poly.hpp"
#include "pspec/ratfunc.hpp"
#include "pspec/structure.hpp"

namespace pspec {

/// x1, x2, ..., xn.
std::vector<std::string> default_variable_names(std::size_t n);

/// Parses a polynomial expression over the named variables.
///
/// Grammar: integers, fractions a/b of integer literals, identifiers, binary
/// + - *, ^ with a non-negative integer exponent, parentheses. '*' is
/// mandatory, '^' binds tighter than '*', and unary minus applies to a whole
/// product. Errors are reported as ParseError with 1-based line/column;
/// `line` and `column_offset` place the text inside a larger document.
Poly parse_poly(std::string_view text, std::span<const std::string> names, std::size_t line = 1,
                std::size_t column_offset = 0);

/// Comma-separated list of expressions.
std::vector<Poly> parse_poly_list(std::string_view text, std::span<const std::string> names);

/// Comma-separated list of rationals ("1,-2,3/4").
std::vector<Coeff> parse_coeff_list(std::string_view text);

/// Canonical text: terms in descending graded lex order, "*" between factors,
/// "^" for powers, integer or a/b coefficients, "0" for zero.
std::string to_string(const Poly& p, std::span<const std::string> names);
std::string to_string(const Poly& p);

/// "num" when the denominator is 1, otherwise "num/den" with multi-term parts
/// parenthesized.
std::string to_string(const RatFunc& f, std::span<const std::string> names);

/// Parses the text of a structure file:
///
///   vars: <name> <name> ...
///   pair: s = <expr> ; t = <expr>      (exactly n-2 lines)
///
/// '#' starts a comment; blank lines are ignored; CRLF is accepted.
PoissonStructure parse_structure(std::string_view text);

/// Reads and parses a structure file. I/O failures raise DomainError.
PoissonStructure load_structure_file(const std::filesystem::path& path);

/// Renders a structure in the file format parse_structure() reads.
std::string to_structure_text(const PoissonStructure& s);

}  // namespace pspec
