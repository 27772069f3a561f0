#pragma once

// Tensor-product multiplicities c^mu_{lambda,nu}.
//
// The tropical engine counts parameter tuples t on a reduced word of w0 with
// degree sum_k t_k beta_k = lambda + nu - mu such that, after transition to a
// word starting with i, the first entry is at most <alpha_i^vee, lambda>, and
// after transition to a word ending with j, the last entry is at most
// <alpha_{j*}^vee, nu>.
//
// The oracle is independent: Freudenthal weight multiplicities of V_nu fed
// into the Brauer-Klimyk alternating sum.

#include "lrc/numeric.hpp"
#include "lrc/rootsys.hpp"
#include "lrc/tropical.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace lrc {

struct MultiplicityQuery {
  CartanMatrix cartan;
  Weight lambda;
  Weight nu;
  Weight mu;
};

using Tuple = std::vector<std::int64_t>;

/// All t in Z^m_{>=0} with sum_k t_k beta_k = gamma, in lexicographic order.
std::vector<Tuple> degree_tuples(const CartanMatrix& a, const ReducedWord& word,
                                 const RootVector& gamma);

enum class BoundaryMode {
  /// One word per first letter and one per last letter.
  Representative,
  /// Every reduced word of w0 (small ranks only).
  AllWords,
};

class MultiplicityEngine {
 public:
  /// Throws UnsupportedType for non-simply-laced types and DomainError for
  /// non-finite types or a base word that is not a reduced word of w0.
  explicit MultiplicityEngine(CartanMatrix a, std::optional<ReducedWord> base = std::nullopt,
                              BoundaryMode mode = BoundaryMode::Representative);

  const CartanMatrix& cartan() const { return a_; }
  const ReducedWord& base_word() const { return base_; }
  std::size_t boundary_word_count() const { return checks_.size(); }

  std::uint64_t count(const Weight& lambda, const Weight& nu, const Weight& mu) const;
  /// The passing tuples on the base word, in lexicographic order.
  std::vector<Tuple> witnesses(const Weight& lambda, const Weight& nu, const Weight& mu) const;

 private:
  struct BoundaryCheck {
    BraidPath path;
    int first_letter;  // bound t'_1 by lambda at this label
    int last_label;    // bound t'_m by nu at this label (already starred)
  };

  bool passes(const Tuple& t, const Weight& lambda, const Weight& nu) const;
  void check_query(const Weight& lambda, const Weight& nu, const Weight& mu) const;

  CartanMatrix a_;
  ReducedWord base_;
  std::vector<int> star_;
  std::vector<BoundaryCheck> checks_;
};

std::uint64_t tensor_multiplicity(const MultiplicityQuery& q);

/// Weight multiplicities of V_lambda (fundamental coordinates), by Freudenthal's recursion.
std::map<std::vector<int>, Integer> weight_multiplicities(const CartanMatrix& a,
                                                          const Weight& lambda);

/// Full decomposition of V_lambda (x) V_nu from precomputed weights of V_nu.
std::map<Weight, Integer> brauer_klimyk(const CartanMatrix& a, const Weight& lambda,
                                        const std::map<std::vector<int>, Integer>& nu_weights);

/// c^mu_{lambda,nu} through the alternating Weyl-group sum. Works for every finite type.
std::uint64_t racah_oracle(const MultiplicityQuery& q);

/// Dominant mu with lambda + nu - mu in the positive root cone.
std::vector<Weight> candidate_highest_weights(const CartanMatrix& a, const Weight& lambda,
                                              const Weight& nu);

}  // namespace lrc
