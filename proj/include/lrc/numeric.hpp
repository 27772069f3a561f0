#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lrc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Input violates a mathematical precondition (illegal type, non-reduced word, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The operation is not implemented for this Cartan type (non-simply-laced moves).
class UnsupportedType : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A configured cap (seeds, terms, nodes) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A broken internal invariant, e.g. a Laurent division that leaves a remainder.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input or q == 0.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise (canonical form).
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

using RationalMatrix = std::vector<std::vector<Rational>>;

Rational determinant(RationalMatrix m);

/// Solves m * x = rhs for square nonsingular m.
std::vector<Rational> solve(RationalMatrix m, std::vector<Rational> rhs);

}  // namespace lrc
