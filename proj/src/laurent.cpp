#include "lrc/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace lrc {

LaurentPoly LaurentPoly::constant(std::size_t nvars, const Integer& c) {
  LaurentPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t index) {
  Exponents e(nvars, 0);
  e.at(index) = 1;
  return monomial(std::move(e));
}

LaurentPoly LaurentPoly::monomial(Exponents exps, const Integer& c) {
  LaurentPoly p(exps.size());
  p.add_term(exps, c);
  return p;
}

void LaurentPoly::add_term(const Exponents& exps, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out(std::max(a.nvars_, b.nvars_));
  Exponents e(out.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result = constant(nvars_, 1);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

Exponents LaurentPoly::min_exponents() const {
  Exponents m(nvars_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
    first = false;
  }
  return m;
}

LaurentPoly LaurentPoly::shifted(const Exponents& shift) const {
  LaurentPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents moved = e;
    for (std::size_t i = 0; i < nvars_; ++i) moved[i] += shift[i];
    out.terms_.emplace_hint(out.terms_.end(), std::move(moved), c);
  }
  return out;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  if (is_zero()) return LaurentPoly(nvars_);
  // Strip monomial content from both sides; x_i is prime in the polynomial
  // ring, so an exact Laurent quotient forces an exact polynomial quotient of
  // the stripped parts.
  Exponents num_shift = min_exponents();
  Exponents den_shift = divisor.min_exponents();
  Exponents neg(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) neg[i] = -num_shift[i];
  LaurentPoly remainder = shifted(neg);
  for (std::size_t i = 0; i < nvars_; ++i) neg[i] = -den_shift[i];
  const LaurentPoly d0 = divisor.shifted(neg);

  const auto& [lead_exp, lead_coef] = *d0.terms_.rbegin();
  LaurentPoly quotient(nvars_);
  Exponents e(nvars_);
  while (!remainder.is_zero()) {
    const auto& [rexp, rcoef] = *remainder.terms_.rbegin();
    for (std::size_t i = 0; i < nvars_; ++i) {
      e[i] = rexp[i] - lead_exp[i];
      if (e[i] < 0) return std::nullopt;
    }
    if (!mpz_divisible_p(rcoef.get_mpz_t(), lead_coef.get_mpz_t())) return std::nullopt;
    const Integer q = rcoef / lead_coef;
    quotient.add_term(e, q);
    Exponents t(nvars_);
    for (const auto& [de, dc] : d0.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) t[i] = e[i] + de[i];
      remainder.add_term(t, -q * dc);
    }
  }
  for (std::size_t i = 0; i < nvars_; ++i) neg[i] = num_shift[i] - den_shift[i];
  return quotient.shifted(neg);
}

bool LaurentPoly::polynomial_in(std::size_t first_var, std::size_t last_var) const {
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = first_var; i < last_var && i < nvars_; ++i) {
      if (e[i] < 0) return false;
    }
  }
  return true;
}

Rational LaurentPoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) throw DomainError("evaluation point has the wrong length");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (int k = 0; k < std::abs(e[i]); ++k) {
        if (e[i] > 0) {
          term *= point[i];
        } else {
          if (point[i] == 0) throw DomainError("negative power evaluated at zero");
          term /= point[i];
        }
      }
    }
    total += term;
  }
  return total;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    std::ostringstream mono;
    bool any = false;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      mono << (any ? "*" : "") << names.at(i);
      if (e[i] != 1) mono << '^' << e[i];
      any = true;
    }
    if (!any) {
      os << mag.get_str();
    } else if (mag != 1) {
      os << mag.get_str() << '*' << mono.str();
    } else {
      os << mono.str();
    }
  }
  return os.str();
}

}  // namespace lrc
