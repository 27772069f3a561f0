#pragma once

#include "lrc/numeric.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lrc {

using Exponents = std::vector<int>;

/// Multivariate Laurent polynomial with big-integer coefficients in a fixed
/// number of variables. Terms are kept canonical: no zero coefficients, one
/// entry per exponent vector. Ordering of exponent vectors is lexicographic,
/// so the last term is the lex-leading one.
class LaurentPoly {
 public:
  using Terms = std::map<Exponents, Integer>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}

  static LaurentPoly constant(std::size_t nvars, const Integer& c);
  static LaurentPoly variable(std::size_t nvars, std::size_t index);
  static LaurentPoly monomial(Exponents exps, const Integer& c = 1);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& exps, const Integer& c);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly pow(unsigned e) const;

  /// Componentwise minimum exponent over all terms (the monomial content).
  Exponents min_exponents() const;
  /// Multiplies by x^shift.
  LaurentPoly shifted(const Exponents& shift) const;

  /// Exact quotient this / divisor, or nullopt when the quotient is not a
  /// Laurent polynomial with integer coefficients.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

  /// True when every exponent of the listed variables is >= 0.
  bool polynomial_in(std::size_t first_var, std::size_t last_var) const;

  Rational evaluate(const std::vector<Rational>& point) const;

  /// Human-readable form, e.g. "x1^-1*x2 + x1^-1".
  std::string to_string(const std::vector<std::string>& names) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
    return a.terms_ < b.terms_;
  }

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

}  // namespace lrc
