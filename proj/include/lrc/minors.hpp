#pragma once

// Exact SL_n computations. Weyl group elements of type A_{n-1} act as
// permutations of [1,n]; the weight u(omega_i) corresponds to the row or
// column set {u(1), ..., u(i)}. Minors for i = 0 equal 1 and for i = n equal
// the determinant, so the identities below hold on all of GL_n.

#include "lrc/numeric.hpp"
#include "lrc/rootsys.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace lrc {

class ExactMatrix {
 public:
  ExactMatrix() = default;
  /// Throws DomainError unless the rows form a square matrix.
  explicit ExactMatrix(RationalMatrix rows);

  static ExactMatrix identity(int n);
  /// x_i(t) = I + t E_{i,i+1}.
  static ExactMatrix elementary_upper(int n, int i, const Rational& t);
  /// y_i(t) = I + t E_{i+1,i}.
  static ExactMatrix elementary_lower(int n, int i, const Rational& t);

  int size() const { return static_cast<int>(rows_.size()); }
  /// 1-based access.
  const Rational& at(int i, int j) const { return rows_[i - 1][j - 1]; }
  const RationalMatrix& rows() const { return rows_; }

  bool is_upper_unitriangular() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  RationalMatrix rows_;
};

struct MinorIndex {
  std::vector<int> rows;  // strictly increasing, 1-based
  std::vector<int> cols;
};

/// x_{i_1}(t_1) ... x_{i_m}(t_m) in SL_n.
ExactMatrix group_element_from_word(const std::vector<int>& word, const std::vector<Rational>& params,
                                    int n);

/// Determinant of the submatrix; the empty minor is 1.
Rational minor(const ExactMatrix& x, const MinorIndex& idx);

/// One-line notation of s_{i_1} ... s_{i_l}, where the rightmost letter acts first.
std::vector<int> permutation_of(const ReducedWord& u, int n);

/// Sorted {u(1), ..., u(i)} for 0 <= i <= n.
std::vector<int> weight_index_set(const ReducedWord& u, int i, int n);

/// Delta_{u omega_i, v omega_i}(x).
Rational generalized_minor(const ExactMatrix& x, const ReducedWord& u, const ReducedWord& v, int i);

/// LHS - RHS of the condensation identity
///   D(u,v) D(us_i,vs_i) = D(us_i,v) D(u,vs_i) + prod_{j != i} D_j(u,v)^{-a_ji}.
/// Requires l(us_i) = l(u)+1 and l(vs_i) = l(v)+1.
Rational dodgson_residual(const ExactMatrix& x, const ReducedWord& u, const ReducedWord& v, int i);

/// LHS - RHS of the three-term Pluecker relation for a_ij = a_ji = -1 and
/// l(w s_i s_j s_i) = l(w) + 3.
Rational plucker_residual(const ExactMatrix& x, const ReducedWord& w, int i, int j);

/// Delta_{I,J}(x) > 0 for every I <= J componentwise. Throws DomainError for
/// input that is not upper unitriangular.
bool is_totally_positive_upper(const ExactMatrix& x);

/// (t_1, t_m) of the factorization of x along `word` (a reduced word of w0),
/// read off from minors.
std::pair<Rational, Rational> boundary_parameters(const ExactMatrix& x, const ReducedWord& word);

/// Delta_{omega_i, s_i omega_i}(x).
Rational special_minor(const ExactMatrix& x, int i);

/// Random rational number p/q with |p| <= max_num, 1 <= q <= max_den.
Rational random_rational(std::mt19937_64& rng, int max_num = 9, int max_den = 5);
/// Random positive rational p/q with 1 <= p <= max_num, 1 <= q <= max_den.
Rational random_positive_rational(std::mt19937_64& rng, int max_num = 9, int max_den = 5);
/// Random element of SL_n: a product of random elementary matrices.
ExactMatrix random_sl_matrix(int n, std::mt19937_64& rng);
/// Random n x n rational matrix (no determinant constraint).
ExactMatrix random_matrix(int n, std::mt19937_64& rng);

enum class MinorIdentity { Dodgson, Plucker };

struct IdentitySweep {
  MinorIdentity which = MinorIdentity::Dodgson;
  int n = 0;
  /// Legal (u, v, i) or (w, i, j) choices in SL_n.
  std::size_t choices = 0;
  std::size_t samples = 0;
  std::size_t evaluations = 0;
  std::size_t nonzero = 0;

  bool pass() const { return nonzero == 0 && evaluations > 0; }
};

/// Evaluates the identity for every legal choice on `samples` random SL_n matrices.
IdentitySweep sweep_identity(MinorIdentity which, int n, std::size_t samples, std::uint64_t seed = 1);

}  // namespace lrc
