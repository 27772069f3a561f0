#pragma once

// Classical type-A side: partitions, the Littlewood-Richardson rule and
// Schur-product expansions. Serves as the reference for the tropical
// multiplicity engine on sl_{r+1}.

#include "lrc/numeric.hpp"
#include "lrc/rootsys.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace lrc {

class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are weakly decreasing and >= 0.
  /// Trailing zeros are dropped.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  /// parts[k], or 0 past the end.
  int operator[](std::size_t k) const { return k < parts_.size() ? parts_[k] : 0; }
  bool contains(const Partition& inner) const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

std::string to_string(const Partition& p);

/// Number of LR tableaux of shape mu/lambda and content nu: semistandard skew
/// fillings whose reverse reading word (rows top to bottom, each right to
/// left) is a lattice word.
std::uint64_t lr_coefficient(const Partition& lambda, const Partition& nu, const Partition& mu);

/// All mu with at most n parts and c^mu_{lambda,nu} > 0.
std::map<Partition, std::uint64_t> schur_product_expansion(const Partition& lambda,
                                                           const Partition& nu, int n);

/// Partitions of `total` with at most `max_parts` parts, each at most `max_part`.
std::vector<Partition> partitions_of(int total, int max_parts, int max_part);

/// s_mu(1, ..., 1) with n ones: the dimension of the GL_n module.
Integer schur_dimension(const Partition& mu, int n);

// Dictionary between dominant sl_{r+1} weights and partitions with at most
// r+1 parts: lambda_j = l_j + ... + l_r.

Partition partition_from_weight(const Weight& lambda);
Weight weight_from_partition(const Partition& p, int rank);

/// c^mu_{lambda,nu} for sl_{r+1} weights through the LR rule: mu is padded by
/// full columns of height r+1 to reach |lambda| + |nu| boxes. Returns 0 when
/// the box count cannot be matched.
std::uint64_t lr_coefficient_for_weights(const Weight& lambda, const Weight& nu, const Weight& mu);

}  // namespace lrc
