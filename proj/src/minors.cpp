#include "lrc/minors.hpp"

#include <algorithm>
#include <numeric>

namespace lrc {

namespace {

void check_letters(const ReducedWord& w, int n) {
  for (int c : w.letters) {
    if (c < 1 || c >= n) {
      throw DomainError("letter " + std::to_string(c) + " out of range for SL_" + std::to_string(n));
    }
  }
}

CartanMatrix type_a(int n) {
  if (n < 2) throw DomainError("SL_n computations need n >= 2");
  return CartanMatrix::of_type('A', n - 1);
}

ReducedWord append(ReducedWord w, std::initializer_list<int> tail) {
  w.letters.insert(w.letters.end(), tail);
  return w;
}

void check_index_set(const std::vector<int>& s, int n) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] < 1 || s[k] > n || (k > 0 && s[k] <= s[k - 1])) {
      throw DomainError("minor index sets must be strictly increasing within [1,n]");
    }
  }
}

Rational range_minor(const ExactMatrix& x, int row_from, int row_to, std::vector<int> cols) {
  MinorIndex idx;
  for (int r = row_from; r <= row_to; ++r) idx.rows.push_back(r);
  idx.cols = std::move(cols);
  return minor(x, idx);
}

std::vector<int> iota_set(int from, int to) {
  std::vector<int> s;
  for (int k = from; k <= to; ++k) s.push_back(k);
  return s;
}

// All increasing k-subsets of [1,n].
void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int v = start; v <= n; ++v) {
    cur.push_back(v);
    subsets(n, k, v + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

ExactMatrix::ExactMatrix(RationalMatrix rows) : rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.size() != rows_.size()) throw DomainError("matrix is not square");
  }
}

ExactMatrix ExactMatrix::identity(int n) {
  RationalMatrix m(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return ExactMatrix(std::move(m));
}

ExactMatrix ExactMatrix::elementary_upper(int n, int i, const Rational& t) {
  if (i < 1 || i >= n) throw DomainError("elementary index out of range");
  ExactMatrix m = identity(n);
  m.rows_[i - 1][i] = t;
  return m;
}

ExactMatrix ExactMatrix::elementary_lower(int n, int i, const Rational& t) {
  if (i < 1 || i >= n) throw DomainError("elementary index out of range");
  ExactMatrix m = identity(n);
  m.rows_[i][i - 1] = t;
  return m;
}

bool ExactMatrix::is_upper_unitriangular() const {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    if (rows_[i][i] != 1) return false;
    for (int j = 0; j < i; ++j) {
      if (rows_[i][j] != 0) return false;
    }
  }
  return true;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  const int n = a.size();
  if (b.size() != n) throw DomainError("matrix size mismatch");
  RationalMatrix c(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (a.rows_[i][k] == 0) continue;
      for (int j = 0; j < n; ++j) c[i][j] += a.rows_[i][k] * b.rows_[k][j];
    }
  }
  return ExactMatrix(std::move(c));
}

ExactMatrix group_element_from_word(const std::vector<int>& word, const std::vector<Rational>& params,
                                    int n) {
  if (word.size() != params.size()) throw DomainError("word and parameter lengths differ");
  ExactMatrix x = ExactMatrix::identity(n);
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (params[k] <= 0) throw DomainError("factorization parameters must be positive");
    x = x * ExactMatrix::elementary_upper(n, word[k], params[k]);
  }
  return x;
}

Rational minor(const ExactMatrix& x, const MinorIndex& idx) {
  if (idx.rows.size() != idx.cols.size()) throw DomainError("row and column sets differ in size");
  check_index_set(idx.rows, x.size());
  check_index_set(idx.cols, x.size());
  RationalMatrix sub(idx.rows.size(), std::vector<Rational>(idx.cols.size()));
  for (std::size_t r = 0; r < idx.rows.size(); ++r) {
    for (std::size_t c = 0; c < idx.cols.size(); ++c) sub[r][c] = x.at(idx.rows[r], idx.cols[c]);
  }
  return sub.empty() ? Rational(1) : determinant(std::move(sub));
}

std::vector<int> permutation_of(const ReducedWord& u, int n) {
  check_letters(u, n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it) {
    const int c = *it;
    for (int& v : perm) {
      if (v == c) {
        v = c + 1;
      } else if (v == c + 1) {
        v = c;
      }
    }
  }
  return perm;
}

std::vector<int> weight_index_set(const ReducedWord& u, int i, int n) {
  if (i < 0 || i > n) throw DomainError("fundamental weight index out of range");
  const auto perm = permutation_of(u, n);
  std::vector<int> s(perm.begin(), perm.begin() + i);
  std::sort(s.begin(), s.end());
  return s;
}

Rational generalized_minor(const ExactMatrix& x, const ReducedWord& u, const ReducedWord& v, int i) {
  const int n = x.size();
  return minor(x, {weight_index_set(u, i, n), weight_index_set(v, i, n)});
}

Rational dodgson_residual(const ExactMatrix& x, const ReducedWord& u, const ReducedWord& v, int i) {
  const int n = x.size();
  const CartanMatrix a = type_a(n);
  if (i < 1 || i >= n) throw DomainError("index i out of range");
  check_letters(u, n);
  check_letters(v, n);
  const ReducedWord us = append(u, {i});
  const ReducedWord vs = append(v, {i});
  if (element_length(a, us) != element_length(a, u) + 1 ||
      element_length(a, vs) != element_length(a, v) + 1) {
    throw DomainError("condensation identity needs l(u s_i) = l(u) + 1 and l(v s_i) = l(v) + 1");
  }
  const Rational lhs = generalized_minor(x, u, v, i) * generalized_minor(x, us, vs, i);
  Rational rhs = generalized_minor(x, us, v, i) * generalized_minor(x, u, vs, i);
  rhs += generalized_minor(x, u, v, i - 1) * generalized_minor(x, u, v, i + 1);
  return lhs - rhs;
}

Rational plucker_residual(const ExactMatrix& x, const ReducedWord& w, int i, int j) {
  const int n = x.size();
  const CartanMatrix a = type_a(n);
  if (i < 1 || i >= n || j < 1 || j >= n) throw DomainError("index out of range");
  if (a.a(i, j) != -1 || a.a(j, i) != -1) throw DomainError("Pluecker relation needs a_ij = a_ji = -1");
  check_letters(w, n);
  if (element_length(a, append(w, {i, j, i})) != element_length(a, w) + 3) {
    throw DomainError("Pluecker relation needs l(w s_i s_j s_i) = l(w) + 3");
  }
  const ReducedWord e;
  const Rational lhs = generalized_minor(x, e, append(w, {i}), i) *
                       generalized_minor(x, e, append(w, {j}), j);
  const Rational rhs = generalized_minor(x, e, w, i) * generalized_minor(x, e, append(w, {i, j}), j) +
                       generalized_minor(x, e, append(w, {j, i}), i) * generalized_minor(x, e, w, j);
  return lhs - rhs;
}

bool is_totally_positive_upper(const ExactMatrix& x) {
  if (!x.is_upper_unitriangular()) throw DomainError("matrix is not upper unitriangular");
  const int n = x.size();
  for (int k = 1; k <= n; ++k) {
    std::vector<std::vector<int>> sets;
    std::vector<int> cur;
    subsets(n, k, 1, cur, sets);
    for (const auto& rows : sets) {
      for (const auto& cols : sets) {
        bool below = true;
        for (int p = 0; p < k && below; ++p) below = rows[p] <= cols[p];
        if (below && minor(x, {rows, cols}) <= 0) return false;
      }
    }
  }
  return true;
}

std::pair<Rational, Rational> boundary_parameters(const ExactMatrix& x, const ReducedWord& word) {
  const int n = x.size();
  const CartanMatrix a = type_a(n);
  check_letters(word, n);
  if (word.empty() || !is_reduced(a, word) ||
      static_cast<int>(word.size()) != n * (n - 1) / 2) {
    throw DomainError(to_string(word) + " is not a reduced word of the longest element");
  }
  const int first = word.letters.front();
  const int last = word.letters.back();
  const int star = n - last;

  // w0 omega_i = {n-i+1..n}; s_i omega_i = {1..i-1, i+1}.
  std::vector<int> s_rows = iota_set(1, first - 1);
  s_rows.push_back(first + 1);
  const Rational num1 = range_minor(x, 1, first, iota_set(n - first + 1, n));
  const Rational den1 = minor(x, {s_rows, iota_set(n - first + 1, n)});

  // s_{i_m} w0 omega_{i*} = s_{i_m}{i_m+1..n} = {i_m, i_m+2..n}.
  std::vector<int> s_cols{last};
  for (int k = last + 2; k <= n; ++k) s_cols.push_back(k);
  const Rational numm = range_minor(x, 1, star, iota_set(n - star + 1, n));
  const Rational denm = range_minor(x, 1, star, s_cols);

  if (den1 == 0 || denm == 0) throw DomainError("zero denominator: matrix is not totally positive");
  return {num1 / den1, numm / denm};
}

Rational special_minor(const ExactMatrix& x, int i) {
  const int n = x.size();
  if (i < 1 || i >= n) throw DomainError("index out of range");
  std::vector<int> cols = iota_set(1, i - 1);
  cols.push_back(i + 1);
  return range_minor(x, 1, i, cols);
}

Rational random_rational(std::mt19937_64& rng, int max_num, int max_den) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

Rational random_positive_rational(std::mt19937_64& rng, int max_num, int max_den) {
  std::uniform_int_distribution<int> num(1, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

ExactMatrix random_sl_matrix(int n, std::mt19937_64& rng) {
  ExactMatrix x = ExactMatrix::identity(n);
  std::uniform_int_distribution<int> letter(1, n - 1);
  for (int step = 0; step < 3 * n; ++step) {
    const int i = letter(rng);
    x = x * ExactMatrix::elementary_upper(n, i, random_rational(rng));
    x = x * ExactMatrix::elementary_lower(n, letter(rng), random_rational(rng));
  }
  // Torus factor diag(c, 1/c, 1, ...) keeps the determinant at 1.
  RationalMatrix h = ExactMatrix::identity(n).rows();
  const Rational c = random_positive_rational(rng);
  h[0][0] = c;
  h[1][1] = 1 / c;
  return x * ExactMatrix(std::move(h));
}

ExactMatrix random_matrix(int n, std::mt19937_64& rng) {
  RationalMatrix m(n, std::vector<Rational>(n));
  for (auto& row : m) {
    for (auto& v : row) v = random_rational(rng);
  }
  return ExactMatrix(std::move(m));
}

IdentitySweep sweep_identity(MinorIdentity which, int n, std::size_t samples, std::uint64_t seed) {
  const CartanMatrix a = type_a(n);
  const auto elements = weyl_group_elements(a);
  std::vector<std::pair<ReducedWord, std::pair<ReducedWord, std::pair<int, int>>>> choices;
  for (const auto& u : elements) {
    if (which == MinorIdentity::Dodgson) {
      for (const auto& v : elements) {
        for (int i = 1; i < n; ++i) {
          const int lu = element_length(a, u), lv = element_length(a, v);
          if (element_length(a, append(u, {i})) == lu + 1 &&
              element_length(a, append(v, {i})) == lv + 1) {
            choices.push_back({u, {v, {i, 0}}});
          }
        }
      }
    } else {
      for (int i = 1; i < n; ++i) {
        for (int j = 1; j < n; ++j) {
          if (a.a(i, j) != -1 ||
              element_length(a, append(u, {i, j, i})) != element_length(a, u) + 3) {
            continue;
          }
          choices.push_back({u, {{}, {i, j}}});
        }
      }
    }
  }
  IdentitySweep sweep{which, n, choices.size(), samples, 0, 0};
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const ExactMatrix x = random_sl_matrix(n, rng);
    for (const auto& [u, rest] : choices) {
      const Rational r = which == MinorIdentity::Dodgson
                             ? dodgson_residual(x, u, rest.first, rest.second.first)
                             : plucker_residual(x, u, rest.second.first, rest.second.second);
      ++sweep.evaluations;
      if (r != 0) ++sweep.nonzero;
    }
  }
  return sweep;
}

}  // namespace lrc
