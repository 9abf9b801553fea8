#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pspec {

/// Exact rational coefficient. GMP keeps every value in lowest terms with a
/// positive denominator, and zero as 0/1.
using Coeff = mpq_class;

/// Integer coefficient used inside fraction-free algorithms.
using Integer = mpz_class;

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Coeff& c);

/// Parses an optionally signed integer or fraction "a/b". Throws DomainError on
/// malformed input or a zero denominator.
Coeff parse_coeff(std::string_view text);

}  // namespace pspec
