#pragma once

// Transition maps between parametrizations attached to reduced words of w0.
//
// Geometric mode: positive rationals, the parameters of a factorization
// x_{i_1}(t_1) ... x_{i_m}(t_m) of a totally positive unipotent matrix.
// Tropical mode: nonnegative integers, the (min,+) shadow of the same maps.
//
// A 2-move swaps the two parameters in both modes. A 3-move at (t1,t2,t3)
// sends them to
//   geometric: (t2 t3/(t1+t3), t1+t3, t1 t2/(t1+t3))
//   tropical:  (t2+t3-min(t1,t3), min(t1,t3), t1+t2-min(t1,t3)).
// Only simply-laced types are supported.

#include "lrc/numeric.hpp"
#include "lrc/rootsys.hpp"

#include <cstdint>
#include <map>
#include <tuple>
#include <string>
#include <variant>
#include <vector>

namespace lrc {

enum class ParamMode { Tropical, Geometric };

template <class T>
struct Params {
  ReducedWord word;
  std::vector<T> values;

  bool operator==(const Params&) const = default;
};

using TropicalParams = Params<std::int64_t>;
using GeometricParams = Params<Rational>;
using ParamTuple = std::variant<TropicalParams, GeometricParams>;

struct BraidStep {
  std::size_t position = 0;
  MoveKind kind = MoveKind::Commute;
  bool operator==(const BraidStep&) const = default;
};
using BraidPath = std::vector<BraidStep>;

/// Throws DomainError unless lengths match and values are >= 0 (tropical)
/// or > 0 (geometric).
void validate(const TropicalParams& t);
void validate(const GeometricParams& t);

TropicalParams apply_braid_move(const TropicalParams& t, std::size_t position, MoveKind kind,
                                const CartanMatrix& a);
GeometricParams apply_braid_move(const GeometricParams& t, std::size_t position, MoveKind kind,
                                 const CartanMatrix& a);

/// Shortest braid-move path; BFS visits neighbors in lexicographic word order
/// and keeps the first discovery, so the result is reproducible. Both words
/// must be reduced words of w0.
BraidPath braid_path(const CartanMatrix& a, const ReducedWord& from, const ReducedWord& to);

TropicalParams apply_path(TropicalParams t, const BraidPath& path, const CartanMatrix& a);
GeometricParams apply_path(GeometricParams t, const BraidPath& path, const CartanMatrix& a);

/// Tropical values pushed along a path that is already known to be legal for
/// their word (no word bookkeeping or validation).
std::vector<std::int64_t> apply_path_values(std::vector<std::int64_t> values, const BraidPath& path);

TropicalParams transition(const TropicalParams& t, const ReducedWord& target, const CartanMatrix& a);
GeometricParams transition(const GeometricParams& t, const ReducedWord& target,
                           const CartanMatrix& a);
ParamTuple transition(const ParamTuple& t, const ReducedWord& target, const CartanMatrix& a);

/// True when the word is a reduced word of the longest element.
bool is_longest_word(const CartanMatrix& a, const ReducedWord& word);

// Symbolic subtraction-free expressions, used to check that tropical
// transitions are the (min,+) evaluation of the geometric ones.

class ExprArena {
 public:
  enum class Op { Var, Add, Mul, Div };
  struct Node {
    Op op;
    int var;  // Var only, 0-based
    int lhs;
    int rhs;
  };

  int var(int index);
  int add(int x, int y);
  int mul(int x, int y);
  int div(int x, int y);

  std::size_t size() const { return nodes_.size(); }
  const Node& node(int id) const { return nodes_[id]; }

  /// Evaluates every node with + -> min, * -> +, / -> -.
  std::vector<std::int64_t> evaluate_tropical(const std::vector<std::int64_t>& vars) const;
  std::string render(int id) const;

 private:
  int intern(Node n);
  std::vector<Node> nodes_;
  std::map<std::tuple<int, int, int, int>, int> index_;
};

struct TropicalizationReport {
  bool pass = true;
  std::size_t samples_run = 0;
  /// Per output slot: did tropical moves and (min,+) evaluation agree on every sample.
  std::vector<bool> component_pass;
  /// Rendered geometric expressions for each output slot.
  std::vector<std::string> expressions;
  std::size_t expression_nodes = 0;
};

class ExpressionBlowup : public ResourceError {
 public:
  ExpressionBlowup(std::string what, TropicalizationReport partial)
      : ResourceError(std::move(what)), partial_(std::move(partial)) {}
  const TropicalizationReport& partial() const { return partial_; }

 private:
  TropicalizationReport partial_;
};

TropicalizationReport verify_tropicalization(const CartanMatrix& a, const ReducedWord& from,
                                             const ReducedWord& to, std::size_t samples,
                                             std::uint64_t seed = 1,
                                             std::size_t max_nodes = 100000);

}  // namespace lrc
