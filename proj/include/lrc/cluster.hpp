#pragma once

// Cluster algebras of geometric type.
//
// An exchange matrix is m x n with a skew-symmetrizable top n x n block.
// Rows n+1..m belong to coefficient variables p_{n+1}..p_m. All Laurent
// polynomials in a seed live in m variables: the n initial cluster variables
// followed by the m - n coefficients, which must only appear with
// nonnegative exponents.

#include "lrc/laurent.hpp"
#include "lrc/rootsys.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lrc {

using IntMatrix = std::vector<std::vector<int>>;

class ExchangeMatrix {
 public:
  ExchangeMatrix() = default;
  /// entries is m x n with m >= n >= 1. Throws DomainError when the principal
  /// part is not skew-symmetrizable.
  explicit ExchangeMatrix(IntMatrix entries);

  int n() const { return n_; }
  int m() const { return static_cast<int>(entries_.size()); }
  /// 1-based entry b_ij.
  int b(int i, int j) const { return entries_[i - 1][j - 1]; }
  const IntMatrix& entries() const { return entries_; }
  IntMatrix principal() const;

  friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;

 private:
  IntMatrix entries_;
  int n_ = 0;
};

/// Positive integer D (as a vector) with D B skew-symmetric, smallest per
/// connected component, or nullopt. B must be square.
std::optional<std::vector<int>> is_skew_symmetrizable(const IntMatrix& b);

/// a_ii = 2, a_ij = -|b_ij|.
IntMatrix cartan_companion(const IntMatrix& b);

/// Matrix mutation at k (1-based, k <= n).
ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k);
IntMatrix mutate_matrix(const IntMatrix& b, int k);

/// Bipartite exchange matrix with cartan_companion equal to the given Cartan
/// matrix (whose Dynkin diagram must be a forest).
ExchangeMatrix exchange_matrix_for_cartan(const CartanMatrix& a);

struct Seed {
  ExchangeMatrix matrix;
  std::vector<LaurentPoly> cluster;
  /// m names: cluster variables first, then coefficients.
  std::vector<std::string> names;

  /// The initial seed (x_1, ..., x_n). Default names are x1..xn and p{n+1}..p{m}.
  static Seed initial(ExchangeMatrix matrix, std::vector<std::string> names = {});

  int n() const { return matrix.n(); }
  int m() const { return matrix.m(); }

  friend bool operator==(const Seed& a, const Seed& b) {
    return a.matrix == b.matrix && a.cluster == b.cluster;
  }
};

/// The two monomials of the exchange relation at k, as polynomials in the
/// current cluster and coefficients.
std::pair<LaurentPoly, LaurentPoly> exchange_monomials(const Seed& s, int k);

/// Seed mutation at k. Throws InternalError when the exchange quotient is not a
/// Laurent polynomial or involves a negative power of a coefficient.
Seed mutate_seed(const Seed& s, int k);

/// Textual exchange relation "x_k * x_k' = M1 + M2" where the names of the
/// current cluster are used for the left monomial factors.
std::string exchange_relation_text(const std::vector<std::string>& cluster_names,
                                   const std::vector<std::string>& coefficient_names,
                                   const ExchangeMatrix& b, int k, const std::string& new_name);

struct ExplorationCaps {
  std::size_t max_seeds = 100000;
  std::size_t max_terms = 200000;
};

struct LaurentReport {
  bool pass = true;
  /// True when every sequence up to the depth was walked without hitting a cap.
  bool complete = true;
  bool cap_hit = false;
  /// The walk ran out of new seeds before reaching the depth.
  bool closed = false;
  int depth = 0;
  std::size_t seeds_visited = 0;
  std::size_t mutations = 0;
  std::size_t max_terms = 0;
  /// Distinct cluster variables, in discovery order (initial cluster first).
  std::vector<LaurentPoly> variables;
  std::string failure;
};

/// Breadth-first walk of all mutation sequences of length <= depth, pruned by
/// seed identity, checking the Laurent property of every produced variable.
LaurentReport laurent_check(const ExchangeMatrix& b, int depth, ExplorationCaps caps = {});

struct ExchangeEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  int direction = 0;  // 1-based mutation direction at `from`
};

struct ExchangeGraph {
  /// Distinct cluster variables in discovery order.
  std::vector<LaurentPoly> variables;
  /// Each cluster is the sorted list of variable ids.
  std::vector<std::vector<std::size_t>> clusters;
  std::vector<ExchangeEdge> edges;
  std::vector<Seed> seeds;
  bool complete = false;
  std::size_t max_terms = 0;
};

/// BFS over seeds; seeds are identified by their unordered set of cluster
/// variables. Stops with complete = false when a cap is exceeded.
ExchangeGraph enumerate_exchange_graph(const Seed& initial, ExplorationCaps caps = {});
ExchangeGraph enumerate_exchange_graph(const ExchangeMatrix& b, ExplorationCaps caps = {});

enum class FiniteVerdict { Finite, Infinite, Inconclusive };

struct FiniteTypeResult {
  FiniteVerdict verdict = FiniteVerdict::Inconclusive;
  /// Finite: a class member whose companion is of finite type.
  /// Infinite: a class member with |b_ij b_ji| >= 4.
  std::optional<IntMatrix> witness;
  std::size_t class_size = 0;
  bool cap_hit = false;
  std::string reason;
};

/// Explores the mutation class of the principal part up to simultaneous
/// permutation and global sign. Throws DomainError for a principal part that is
/// not skew-symmetrizable.
FiniteTypeResult is_finite_type(const ExchangeMatrix& b, std::size_t max_class = 20000);

std::string to_string(FiniteVerdict v);

/// Lexicographically smallest matrix among P B P^T and -P B P^T over all permutations P.
IntMatrix canonical_form(const IntMatrix& b);

}  // namespace lrc
