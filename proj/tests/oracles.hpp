#pragma once

// Reference implementations used only by the tests. They share no code with
// the library beyond plain data types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace oracle {

// ---- Littlewood-Richardson by exhaustive filling ---------------------------

// Enumerates every assignment of values 1..len(nu) to the boxes of mu/lambda,
// then filters by semistandardness, content and the lattice condition.
inline std::uint64_t brute_force_lr(std::vector<int> lambda, std::vector<int> nu, std::vector<int> mu) {
  auto size = [](const std::vector<int>& p) { return std::accumulate(p.begin(), p.end(), 0); };
  if (size(lambda) + size(nu) != size(mu)) return 0;
  const std::size_t rows = mu.size();
  lambda.resize(std::max(lambda.size(), rows), 0);
  if (lambda.size() > rows) {
    for (std::size_t r = rows; r < lambda.size(); ++r) {
      if (lambda[r] != 0) return 0;
    }
  }
  for (std::size_t r = 0; r < rows; ++r) {
    if (lambda[r] > mu[r]) return 0;
  }
  std::vector<std::pair<int, int>> boxes;  // (row, col)
  for (std::size_t r = 0; r < rows; ++r) {
    for (int c = lambda[r]; c < mu[r]; ++c) boxes.emplace_back(static_cast<int>(r), c);
  }
  const int letters = static_cast<int>(nu.size());
  if (boxes.empty()) return 1;
  if (letters == 0) return 0;

  std::map<std::pair<int, int>, int> fill;
  std::uint64_t count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == boxes.size()) {
      std::vector<int> content(letters + 1, 0);
      for (const auto& [b, v] : fill) ++content[v];
      for (int v = 1; v <= letters; ++v) {
        if (content[v] != nu[v - 1]) return;
      }
      for (const auto& [b, v] : fill) {
        auto right = fill.find({b.first, b.second + 1});
        if (right != fill.end() && right->second < v) return;
        auto below = fill.find({b.first + 1, b.second});
        if (below != fill.end() && below->second <= v) return;
      }
      // Reverse reading word: rows top to bottom, each right to left.
      std::vector<int> seen(letters + 2, 0);
      for (std::size_t r = 0; r < rows; ++r) {
        for (int c = mu[r] - 1; c >= lambda[r]; --c) {
          const int v = fill.at({static_cast<int>(r), c});
          ++seen[v];
          if (v > 1 && seen[v] > seen[v - 1]) return;
        }
      }
      ++count;
      return;
    }
    for (int v = 1; v <= letters; ++v) {
      fill[boxes[k]] = v;
      rec(k + 1);
    }
    fill.erase(boxes[k]);
  };
  rec(0);
  return count;
}

// ---- Polynomials in n variables -------------------------------------------

using Mono = std::vector<int>;
using Poly = std::map<Mono, mpz_class>;

inline void add_to(Poly& p, const Mono& m, const mpz_class& c) {
  if (c == 0) return;
  auto& slot = p[m];
  slot += c;
  if (slot == 0) p.erase(m);
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Mono m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      add_to(out, m, ca * cb);
    }
  }
  return out;
}

// Exact division by lex-leading terms; throws if it does not divide.
inline Poly divide(Poly num, const Poly& den) {
  Poly q;
  const auto& [lm, lc] = *den.rbegin();
  while (!num.empty()) {
    const auto [m, c] = *num.rbegin();
    Mono e(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      e[i] = m[i] - lm[i];
      if (e[i] < 0) throw std::runtime_error("polynomial division is not exact");
    }
    if (c % lc != 0) throw std::runtime_error("polynomial division is not exact");
    const mpz_class t = c / lc;
    add_to(q, e, t);
    for (const auto& [dm, dc] : den) {
      Mono s(m.size());
      for (std::size_t i = 0; i < m.size(); ++i) s[i] = e[i] + dm[i];
      add_to(num, s, -t * dc);
    }
  }
  return q;
}

// a_alpha = sum over permutations of sign * x^{sigma(alpha)}.
inline Poly alternant(const std::vector<int>& alpha) {
  const std::size_t n = alpha.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Poly p;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    Mono m(n);
    for (std::size_t i = 0; i < n; ++i) m[perm[i]] = alpha[i];
    add_to(p, m, inversions % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return p;
}

inline std::vector<int> padded(std::vector<int> p, std::size_t n) {
  p.resize(n, 0);
  return p;
}

inline std::vector<int> plus_delta(std::vector<int> p) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) p[i] += static_cast<int>(n - 1 - i);
  return p;
}

// s_lambda as a_{lambda+delta}/a_delta in n variables.
inline Poly schur(const std::vector<int>& lambda, std::size_t n) {
  return divide(alternant(plus_delta(padded(lambda, n))), alternant(plus_delta(std::vector<int>(n, 0))));
}

// c^mu_{lambda,nu}: coefficient of x^{mu+delta} in a_{lambda+delta} * s_nu.
inline std::map<std::vector<int>, mpz_class> alternant_expansion(const std::vector<int>& lambda,
                                                                 const std::vector<int>& nu, std::size_t n) {
  const Poly prod = mul(alternant(plus_delta(padded(lambda, n))), schur(nu, n));
  std::map<std::vector<int>, mpz_class> out;
  for (const auto& [m, c] : prod) {
    bool strict = true;
    for (std::size_t i = 0; i + 1 < n; ++i) strict = strict && m[i] > m[i + 1];
    if (!strict || m[n - 1] < 0) continue;
    std::vector<int> mu(n);
    for (std::size_t i = 0; i < n; ++i) mu[i] = m[i] - static_cast<int>(n - 1 - i);
    while (!mu.empty() && mu.back() == 0) mu.pop_back();
    out[mu] = c;
  }
  return out;
}

// ---- Determinants by the Leibniz formula ----------------------------------

inline mpq_class leibniz(const std::vector<std::vector<mpq_class>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  mpq_class total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    mpq_class term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// ---- Weyl group words through integer reflection matrices ------------------

using IntMat = std::vector<std::vector<long>>;

// Reflection s_i on simple-root coordinates: s_i(alpha_j) = alpha_j - a_ij alpha_i.
inline IntMat reflection(const std::vector<std::vector<int>>& a, int i) {
  const std::size_t r = a.size();
  IntMat s(r, std::vector<long>(r, 0));
  for (std::size_t j = 0; j < r; ++j) {
    s[j][j] = 1;
    s[i - 1][j] -= a[i - 1][j];
  }
  return s;
}

inline IntMat matmul(const IntMat& x, const IntMat& y) {
  const std::size_t r = x.size();
  IntMat z(r, std::vector<long>(r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < r; ++k) {
      for (std::size_t j = 0; j < r; ++j) z[i][j] += x[i][k] * y[k][j];
    }
  }
  return z;
}

inline IntMat word_matrix(const std::vector<std::vector<int>>& a, const std::vector<int>& word) {
  const std::size_t r = a.size();
  IntMat m(r, std::vector<long>(r, 0));
  for (std::size_t i = 0; i < r; ++i) m[i][i] = 1;
  for (int c : word) m = matmul(m, reflection(a, c));
  return m;
}

// All words of the given length whose product equals `target`.
inline std::size_t count_words_for(const std::vector<std::vector<int>>& a, std::size_t length,
                                   const IntMat& target) {
  const int r = static_cast<int>(a.size());
  std::size_t count = 0;
  std::vector<int> word(length, 1);
  for (;;) {
    if (word_matrix(a, word) == target) ++count;
    std::size_t k = 0;
    while (k < length && ++word[k] > r) word[k++] = 1;
    if (k == length) break;
  }
  return count;
}

// |W| by closing {identity} under right multiplication by reflections.
inline std::size_t weyl_order(const std::vector<std::vector<int>>& a) {
  const std::size_t r = a.size();
  IntMat id(r, std::vector<long>(r, 0));
  for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
  std::vector<IntMat> frontier{id};
  std::vector<IntMat> all{id};
  std::map<IntMat, bool> seen{{id, true}};
  while (!frontier.empty()) {
    std::vector<IntMat> next;
    for (const auto& m : frontier) {
      for (std::size_t i = 1; i <= r; ++i) {
        IntMat n = matmul(m, reflection(a, static_cast<int>(i)));
        if (seen.emplace(n, true).second) next.push_back(n);
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

// ---- Catalan numbers ---------------------------------------------------------

inline std::uint64_t catalan(unsigned n) {
  std::uint64_t c = 1;
  for (unsigned k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

}  // namespace oracle
