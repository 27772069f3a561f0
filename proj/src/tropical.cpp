#include "lrc/tropical.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>

namespace lrc {

namespace {

void check_move_supported(const CartanMatrix& a, MoveKind kind) {
  if (!a.simply_laced() || kind == MoveKind::Braid4 || kind == MoveKind::Braid6) {
    throw UnsupportedType("transition maps are implemented for simply-laced types only");
  }
}

ReducedWord moved_word(const ReducedWord& word, std::size_t position, MoveKind kind,
                       const CartanMatrix& a) {
  check_move_supported(a, kind);
  auto next = apply_word_move(a, word, position, kind);
  if (!next) {
    throw DomainError("no legal braid move at position " + std::to_string(position) + " of " +
                      to_string(word));
  }
  return std::move(*next);
}

template <class T>
void check_size(const Params<T>& t) {
  if (t.values.size() != t.word.size()) {
    throw DomainError("parameter tuple length does not match word length");
  }
}

void require_longest(const CartanMatrix& a, const ReducedWord& word) {
  if (!is_longest_word(a, word)) {
    throw DomainError(to_string(word) + " is not a reduced word of the longest element");
  }
}

void tropical_move(std::int64_t* v, MoveKind kind) {
  if (kind == MoveKind::Commute) {
    std::swap(v[0], v[1]);
    return;
  }
  const std::int64_t t1 = v[0], t2 = v[1], t3 = v[2];
  const std::int64_t m = std::min(t1, t3);
  v[0] = t2 + t3 - m;
  v[1] = m;
  v[2] = t1 + t2 - m;
}

}  // namespace

void validate(const TropicalParams& t) {
  check_size(t);
  for (auto v : t.values) {
    if (v < 0) throw DomainError("tropical parameters must be nonnegative");
  }
}

void validate(const GeometricParams& t) {
  check_size(t);
  for (const auto& v : t.values) {
    if (v <= 0) throw DomainError("geometric parameters must be positive");
  }
}

bool is_longest_word(const CartanMatrix& a, const ReducedWord& word) {
  if (!a.finite_type() || !is_reduced(a, word)) return false;
  const auto x = act_on_weight(a, word, std::vector<int>(a.rank(), 1));
  return std::all_of(x.begin(), x.end(), [](int c) { return c < 0; });
}

TropicalParams apply_braid_move(const TropicalParams& t, std::size_t position, MoveKind kind,
                                const CartanMatrix& a) {
  check_size(t);
  TropicalParams out{moved_word(t.word, position, kind, a), t.values};
  tropical_move(out.values.data() + position, kind);
  return out;
}

GeometricParams apply_braid_move(const GeometricParams& t, std::size_t position, MoveKind kind,
                                 const CartanMatrix& a) {
  check_size(t);
  GeometricParams out{moved_word(t.word, position, kind, a), t.values};
  auto* v = out.values.data() + position;
  if (kind == MoveKind::Commute) {
    std::swap(v[0], v[1]);
  } else {
    const Rational t1 = v[0], t2 = v[1], t3 = v[2];
    const Rational s = t1 + t3;
    if (s == 0) throw DomainError("geometric 3-move undefined when t1 + t3 = 0");
    v[0] = t2 * t3 / s;
    v[1] = s;
    v[2] = t1 * t2 / s;
  }
  return out;
}

BraidPath braid_path(const CartanMatrix& a, const ReducedWord& from, const ReducedWord& to) {
  require_longest(a, from);
  require_longest(a, to);
  if (from == to) return {};
  std::map<ReducedWord, std::pair<ReducedWord, BraidStep>> parent;
  parent.emplace(from, std::make_pair(from, BraidStep{}));
  std::deque<ReducedWord> queue{from};
  bool found = false;
  while (!queue.empty() && !found) {
    ReducedWord w = std::move(queue.front());
    queue.pop_front();
    for (auto& nb : braid_neighbors(w, a)) {
      if (parent.count(nb.word)) continue;
      parent.emplace(nb.word, std::make_pair(w, BraidStep{nb.position, nb.kind}));
      if (nb.word == to) {
        found = true;
        break;
      }
      queue.push_back(std::move(nb.word));
    }
  }
  if (!found) {
    throw InternalError("no braid path between reduced words of w0: " + to_string(from) + " -> " +
                        to_string(to));
  }
  BraidPath path;
  for (ReducedWord w = to; w != from;) {
    const auto& [prev, step] = parent.at(w);
    path.push_back(step);
    w = prev;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

TropicalParams apply_path(TropicalParams t, const BraidPath& path, const CartanMatrix& a) {
  for (const auto& step : path) t = apply_braid_move(t, step.position, step.kind, a);
  return t;
}

std::vector<std::int64_t> apply_path_values(std::vector<std::int64_t> values, const BraidPath& path) {
  for (const auto& step : path) tropical_move(values.data() + step.position, step.kind);
  return values;
}

GeometricParams apply_path(GeometricParams t, const BraidPath& path, const CartanMatrix& a) {
  for (const auto& step : path) t = apply_braid_move(t, step.position, step.kind, a);
  return t;
}

TropicalParams transition(const TropicalParams& t, const ReducedWord& target, const CartanMatrix& a) {
  validate(t);
  return apply_path(t, braid_path(a, t.word, target), a);
}

GeometricParams transition(const GeometricParams& t, const ReducedWord& target,
                           const CartanMatrix& a) {
  validate(t);
  return apply_path(t, braid_path(a, t.word, target), a);
}

ParamTuple transition(const ParamTuple& t, const ReducedWord& target, const CartanMatrix& a) {
  return std::visit([&](const auto& p) -> ParamTuple { return transition(p, target, a); }, t);
}

int ExprArena::intern(Node n) {
  const auto key = std::make_tuple(static_cast<int>(n.op), n.var, n.lhs, n.rhs);
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  const int id = static_cast<int>(nodes_.size());
  nodes_.push_back(n);
  index_.emplace(key, id);
  return id;
}

int ExprArena::var(int index) { return intern({Op::Var, index, -1, -1}); }
int ExprArena::add(int x, int y) { return intern({Op::Add, -1, std::min(x, y), std::max(x, y)}); }
int ExprArena::mul(int x, int y) { return intern({Op::Mul, -1, std::min(x, y), std::max(x, y)}); }
int ExprArena::div(int x, int y) { return intern({Op::Div, -1, x, y}); }

std::vector<std::int64_t> ExprArena::evaluate_tropical(const std::vector<std::int64_t>& vars) const {
  std::vector<std::int64_t> val(nodes_.size());
  for (std::size_t id = 0; id < nodes_.size(); ++id) {
    const Node& n = nodes_[id];
    switch (n.op) {
      case Op::Var: val[id] = vars.at(n.var); break;
      case Op::Add: val[id] = std::min(val[n.lhs], val[n.rhs]); break;
      case Op::Mul: val[id] = val[n.lhs] + val[n.rhs]; break;
      case Op::Div: val[id] = val[n.lhs] - val[n.rhs]; break;
    }
  }
  return val;
}

std::string ExprArena::render(int id) const {
  const Node& n = nodes_[id];
  auto wrap = [&](int child, bool need) {
    const std::string s = render(child);
    return need ? "(" + s + ")" : s;
  };
  switch (n.op) {
    case Op::Var:
      return "t" + std::to_string(n.var + 1);
    case Op::Add:
      return render(n.lhs) + " + " + render(n.rhs);
    case Op::Mul:
      return wrap(n.lhs, nodes_[n.lhs].op == Op::Add || nodes_[n.lhs].op == Op::Div) + "*" +
             wrap(n.rhs, nodes_[n.rhs].op == Op::Add || nodes_[n.rhs].op == Op::Div);
    case Op::Div:
      return wrap(n.lhs, nodes_[n.lhs].op == Op::Add) + "/" +
             wrap(n.rhs, nodes_[n.rhs].op != Op::Var);
  }
  return {};
}

TropicalizationReport verify_tropicalization(const CartanMatrix& a, const ReducedWord& from,
                                             const ReducedWord& to, std::size_t samples,
                                             std::uint64_t seed, std::size_t max_nodes) {
  if (!a.simply_laced()) {
    throw UnsupportedType("transition maps are implemented for simply-laced types only");
  }
  const BraidPath path = braid_path(a, from, to);
  const std::size_t m = from.size();

  TropicalizationReport report;
  ExprArena arena;
  std::vector<int> slots(m);
  for (std::size_t k = 0; k < m; ++k) slots[k] = arena.var(static_cast<int>(k));
  for (const auto& step : path) {
    int* s = slots.data() + step.position;
    if (step.kind == MoveKind::Commute) {
      std::swap(s[0], s[1]);
    } else {
      const int sum = arena.add(s[0], s[2]);
      const int first = arena.div(arena.mul(s[1], s[2]), sum);
      const int last = arena.div(arena.mul(s[0], s[1]), sum);
      s[0] = first;
      s[1] = sum;
      s[2] = last;
    }
    if (arena.size() > max_nodes) {
      report.pass = false;
      report.expression_nodes = arena.size();
      throw ExpressionBlowup("symbolic transition exceeds " + std::to_string(max_nodes) + " nodes",
                             report);
    }
  }
  report.expression_nodes = arena.size();
  report.component_pass.assign(m, true);
  // Rendering unshares the DAG, so only small expressions are spelled out.
  if (arena.size() <= 256) {
    for (int s : slots) report.expressions.push_back(arena.render(s));
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(0, 30);
  for (std::size_t run = 0; run < samples; ++run) {
    TropicalParams t{from, std::vector<std::int64_t>(m)};
    for (auto& v : t.values) v = dist(rng);
    const TropicalParams moved = apply_path(t, path, a);
    const auto values = arena.evaluate_tropical(t.values);
    for (std::size_t k = 0; k < m; ++k) {
      if (values[slots[k]] != moved.values[k]) {
        report.component_pass[k] = false;
        report.pass = false;
      }
    }
    ++report.samples_run;
  }
  return report;
}

}  // namespace lrc
