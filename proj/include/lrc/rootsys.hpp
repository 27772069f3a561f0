#pragma once

// Cartan matrices of finite type, weights, Weyl-group words and braid moves.
//
// Conventions used throughout the library:
//   * a_ij = <alpha_i^vee, alpha_j>. For B_2 this gives [[2,-1],[-2,2]] with
//     alpha_1 long, alpha_2 short and symmetrizer (2,1) (Bourbaki labelling).
//   * Simple-root labels (word letters, pairing indices, star map) are 1-based.
//     Coordinate vectors are ordinary 0-based containers.
//   * Weights are stored in fundamental-weight coordinates, roots in
//     simple-root coordinates. The simple root alpha_j has fundamental-weight
//     coordinates given by column j of the Cartan matrix.

#include "lrc/numeric.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lrc {

class CartanMatrix {
 public:
  /// Validates a_ii = 2, a_ij <= 0, a_ij = 0 <=> a_ji = 0 and derives a minimal
  /// symmetrizer. Finite type is not required here.
  explicit CartanMatrix(std::vector<std::vector<int>> entries, std::string name = {});

  /// Standard matrix of the Cartan-Killing list: A_r (r>=1), B_r (r>=2),
  /// C_r (r>=3), D_r (r>=4), E_6..E_8, F_4, G_2.
  static CartanMatrix of_type(char series, int rank);
  /// Parses names such as "A2" or "D6".
  static CartanMatrix parse(std::string_view name);

  int rank() const { return static_cast<int>(entries_.size()); }
  /// Entry a_ij for 1-based labels.
  int a(int i, int j) const { return entries_[i - 1][j - 1]; }
  const std::vector<std::vector<int>>& entries() const { return entries_; }
  /// d_i with d_i a_ij = d_j a_ji, smallest positive integers per component.
  const std::vector<int>& symmetrizer() const { return symmetrizer_; }
  const std::string& name() const { return name_; }

  bool simply_laced() const;
  bool finite_type() const { return finite_; }

  bool operator==(const CartanMatrix& other) const { return entries_ == other.entries_; }

 private:
  std::vector<std::vector<int>> entries_;
  std::vector<int> symmetrizer_;
  std::string name_;
  bool finite_ = false;
};

/// True iff every principal minor is positive. Throws DomainError when
/// conditions (a_ii = 2, sign and zero pattern) fail.
bool is_finite_type_cartan(const std::vector<std::vector<int>>& a);

struct Weight {
  std::vector<int> coords;

  bool dominant() const;
  /// <alpha_i^vee, lambda> for 1-based i.
  int pairing(int i) const { return coords[i - 1]; }
  auto operator<=>(const Weight&) const = default;
};

struct RootVector {
  std::vector<int> coords;

  bool in_positive_cone() const;
  auto operator<=>(const RootVector&) const = default;
};

struct ReducedWord {
  std::vector<int> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  int operator[](std::size_t k) const { return letters[k]; }
  auto operator<=>(const ReducedWord&) const = default;
};

std::string to_string(const ReducedWord& word);

// Reflection action.

/// s_i applied to a weight (fundamental-weight coordinates).
std::vector<int> reflect_weight(const CartanMatrix& a, std::vector<int> x, int i);
/// s_i applied to a root-lattice vector (simple-root coordinates).
RootVector reflect_root(const CartanMatrix& a, RootVector beta, int i);
/// s_{i_1} ... s_{i_l} applied to a weight; the rightmost letter acts first.
std::vector<int> act_on_weight(const CartanMatrix& a, const ReducedWord& word, std::vector<int> x);
RootVector act_on_root(const CartanMatrix& a, const ReducedWord& word, RootVector beta);

Weight root_to_weight(const CartanMatrix& a, const RootVector& beta);
/// Exact simple-root coordinates of a weight, A^{-1} * coords.
std::vector<Rational> weight_to_root_coords(const CartanMatrix& a, const Weight& lambda);
/// Integral simple-root coordinates of lambda when lambda lies in the root lattice.
std::optional<RootVector> weight_to_root(const CartanMatrix& a, const Weight& lambda);

/// Length of the Weyl group element s_{i_1} ... s_{i_l} (not of the word).
int element_length(const CartanMatrix& a, const ReducedWord& word);
bool is_reduced(const CartanMatrix& a, const ReducedWord& word);

/// All positive roots, sorted. Throws DomainError for non-finite type.
std::vector<RootVector> positive_roots(const CartanMatrix& a);

/// beta_k = s_{i_1} ... s_{i_{k-1}} (alpha_{i_k}) for each position of the word.
std::vector<RootVector> word_roots(const CartanMatrix& a, const ReducedWord& word);

struct LongestElement {
  int length = 0;
  ReducedWord word;
  /// star[i-1] = i*, where w0(alpha_i) = -alpha_{i*}.
  std::vector<int> star;
};

LongestElement longest_element_data(const CartanMatrix& a);

enum class MoveKind { Commute, Braid3, Braid4, Braid6 };

struct BraidNeighbor {
  std::size_t position = 0;  // 0-based index of the first letter touched
  MoveKind kind = MoveKind::Commute;
  ReducedWord word;
};

/// Letters rewritten by a braid move of the given kind starting at `position`,
/// or nullopt when the move is illegal there.
std::optional<ReducedWord> apply_word_move(const CartanMatrix& a, const ReducedWord& word,
                                           std::size_t position, MoveKind kind);

/// Every word one braid move away, sorted lexicographically. Commutations need
/// a_ij = 0, 3-moves a_ij = a_ji = -1, 4- and 6-moves a_ij a_ji = 2 or 3.
/// Throws DomainError for a non-reduced input.
std::vector<BraidNeighbor> braid_neighbors(const ReducedWord& word, const CartanMatrix& a);

/// A reduced word for w0 beginning with `first` and/or ending with `last`.
/// Throws DomainError when both are given and no such word exists.
ReducedWord reduced_word_with_boundary(const CartanMatrix& a, std::optional<int> first,
                                       std::optional<int> last);

/// A reduced word for the element whose image of rho is `rho_image`,
/// built by repeatedly splitting off a left descent.
ReducedWord reduced_word_of(const CartanMatrix& a, std::vector<int> rho_image);

/// All reduced words reachable from `start` by braid moves (BFS). Throws
/// ResourceError beyond `cap` words.
std::vector<ReducedWord> braid_class(const CartanMatrix& a, const ReducedWord& start,
                                     std::size_t cap = 200000);

/// One reduced word per Weyl group element, ordered by length.
std::vector<ReducedWord> weyl_group_elements(const CartanMatrix& a, std::size_t cap = 100000);

/// Dimension of V_lambda by the Weyl dimension formula.
Integer weyl_dimension(const CartanMatrix& a, const Weight& lambda);

/// Standard invariant form (x, y) on weights given in fundamental coordinates,
/// normalized by (alpha_i, alpha_i) = 2 d_i.
Rational weight_form(const CartanMatrix& a, const std::vector<int>& x, const std::vector<int>& y);

}  // namespace lrc
