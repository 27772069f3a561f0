#include "lrc/cluster.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace lrc {

namespace {

void check_rectangular(const IntMatrix& b, std::size_t cols) {
  for (const auto& row : b) {
    if (row.size() != cols) throw DomainError("exchange matrix rows have unequal length");
  }
}

// Interning table for cluster variables; ids are discovery order.
class VariableTable {
 public:
  std::size_t intern(const LaurentPoly& p) {
    auto [it, inserted] = ids_.try_emplace(p, polys_.size());
    if (inserted) polys_.push_back(p);
    return it->second;
  }
  std::vector<LaurentPoly>& polys() { return polys_; }

 private:
  std::map<LaurentPoly, std::size_t> ids_;
  std::vector<LaurentPoly> polys_;
};

std::vector<std::size_t> cluster_key(VariableTable& table, const Seed& s) {
  std::vector<std::size_t> key;
  key.reserve(s.cluster.size());
  for (const auto& x : s.cluster) key.push_back(table.intern(x));
  std::sort(key.begin(), key.end());
  return key;
}

std::string monomial_text(const std::vector<std::pair<std::string, int>>& factors) {
  std::vector<std::string> parts;
  for (const auto& [name, e] : factors) {
    parts.push_back(e == 1 ? name : name + "^" + std::to_string(e));
  }
  std::sort(parts.begin(), parts.end());
  if (parts.empty()) return "1";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += "*" + parts[i];
  return out;
}

}  // namespace

ExchangeMatrix::ExchangeMatrix(IntMatrix entries) : entries_(std::move(entries)) {
  if (entries_.empty() || entries_.front().empty()) throw DomainError("exchange matrix is empty");
  n_ = static_cast<int>(entries_.front().size());
  check_rectangular(entries_, n_);
  if (m() < n_) throw DomainError("exchange matrix needs at least n rows");
  if (!is_skew_symmetrizable(principal())) {
    throw DomainError("principal part of the exchange matrix is not skew-symmetrizable");
  }
}

IntMatrix ExchangeMatrix::principal() const {
  return IntMatrix(entries_.begin(), entries_.begin() + n_);
}

std::optional<std::vector<int>> is_skew_symmetrizable(const IntMatrix& b) {
  const std::size_t n = b.size();
  check_rectangular(b, n);
  if (n == 0) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i) {
    if (b[i][i] != 0) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      if ((b[i][j] > 0) != (b[j][i] < 0) || (b[i][j] == 0) != (b[j][i] == 0)) return std::nullopt;
    }
  }
  // d_i |b_ij| = d_j |b_ji| is the symmetrizability of the companion.
  try {
    return CartanMatrix(cartan_companion(b)).symmetrizer();
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

IntMatrix cartan_companion(const IntMatrix& b) {
  const std::size_t n = b.size();
  check_rectangular(b, n);
  IntMatrix a(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = i == j ? 2 : -std::abs(b[i][j]);
  }
  return a;
}

IntMatrix mutate_matrix(const IntMatrix& b, int k) {
  if (b.empty() || k < 1 || k > static_cast<int>(b.front().size()) ||
      k > static_cast<int>(b.size())) {
    throw DomainError("mutation direction " + std::to_string(k) + " out of range");
  }
  const std::size_t kk = k - 1;
  IntMatrix out = b;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b[i].size(); ++j) {
      if (i == kk || j == kk) {
        out[i][j] = -b[i][j];
      } else {
        out[i][j] = b[i][j] + (std::abs(b[i][kk]) * b[kk][j] + b[i][kk] * std::abs(b[kk][j])) / 2;
      }
    }
  }
  return out;
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k) {
  if (k < 1 || k > b.n()) throw DomainError("mutation direction " + std::to_string(k) + " out of range");
  return ExchangeMatrix(mutate_matrix(b.entries(), k));
}

ExchangeMatrix exchange_matrix_for_cartan(const CartanMatrix& a) {
  const int r = a.rank();
  std::vector<int> sign(r, 0);
  for (int root = 0; root < r; ++root) {
    if (sign[root] != 0) continue;
    sign[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      for (int j = 0; j < r; ++j) {
        if (i == j || a.entries()[i][j] == 0) continue;
        if (sign[j] == 0) {
          sign[j] = -sign[i];
          queue.push_back(j);
        } else if (sign[j] == sign[i]) {
          throw DomainError("Dynkin diagram is not bipartite");
        }
      }
    }
  }
  IntMatrix b(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      if (i != j) b[i][j] = sign[i] * a.entries()[i][j];
    }
  }
  return ExchangeMatrix(std::move(b));
}

Seed Seed::initial(ExchangeMatrix matrix, std::vector<std::string> names) {
  const int n = matrix.n();
  const int m = matrix.m();
  if (names.empty()) {
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    for (int i = n + 1; i <= m; ++i) names.push_back("p" + std::to_string(i));
  }
  if (static_cast<int>(names.size()) != m) throw DomainError("need one name per exchange-matrix row");
  Seed s{std::move(matrix), {}, std::move(names)};
  for (int i = 0; i < n; ++i) s.cluster.push_back(LaurentPoly::variable(m, i));
  return s;
}

std::pair<LaurentPoly, LaurentPoly> exchange_monomials(const Seed& s, int k) {
  const int n = s.n();
  const int m = s.m();
  if (k < 1 || k > n) throw DomainError("mutation direction " + std::to_string(k) + " out of range");
  LaurentPoly plus = LaurentPoly::constant(m, 1);
  LaurentPoly minus = LaurentPoly::constant(m, 1);
  for (int i = 1; i <= m; ++i) {
    const int e = s.matrix.b(i, k);
    if (e == 0) continue;
    const LaurentPoly base = i <= n ? s.cluster[i - 1] : LaurentPoly::variable(m, i - 1);
    (e > 0 ? plus : minus) = (e > 0 ? plus : minus) * base.pow(std::abs(e));
  }
  return {std::move(plus), std::move(minus)};
}

Seed mutate_seed(const Seed& s, int k) {
  auto [plus, minus] = exchange_monomials(s, k);
  const LaurentPoly numerator = plus + minus;
  auto quotient = numerator.divide_exact(s.cluster[k - 1]);
  if (!quotient) {
    throw InternalError("Laurent phenomenon violated: exchange at " + std::to_string(k) +
                        " is not a Laurent polynomial");
  }
  if (!quotient->polynomial_in(s.n(), s.m())) {
    throw InternalError("Laurent phenomenon violated: negative power of a coefficient");
  }
  Seed out{mutate_matrix(s.matrix, k), s.cluster, s.names};
  out.cluster[k - 1] = std::move(*quotient);
  return out;
}

std::string exchange_relation_text(const std::vector<std::string>& cluster_names,
                                   const std::vector<std::string>& coefficient_names,
                                   const ExchangeMatrix& b, int k, const std::string& new_name) {
  const int n = b.n();
  if (static_cast<int>(cluster_names.size()) != n ||
      static_cast<int>(coefficient_names.size()) != b.m() - n) {
    throw DomainError("name lists do not match the exchange matrix");
  }
  if (k < 1 || k > n) throw DomainError("mutation direction " + std::to_string(k) + " out of range");
  std::vector<std::pair<std::string, int>> plus, minus;
  for (int i = 1; i <= b.m(); ++i) {
    const int e = b.b(i, k);
    const std::string& name = i <= n ? cluster_names[i - 1] : coefficient_names[i - n - 1];
    if (e > 0) plus.emplace_back(name, e);
    if (e < 0) minus.emplace_back(name, -e);
  }
  std::string p = monomial_text(plus);
  std::string q = monomial_text(minus);
  if (q < p) std::swap(p, q);
  return cluster_names[k - 1] + "*" + new_name + " = " + p + " + " + q;
}

LaurentReport laurent_check(const ExchangeMatrix& b, int depth, ExplorationCaps caps) {
  if (depth < 0) throw DomainError("depth must be nonnegative");
  LaurentReport report;
  VariableTable table;
  Seed start = Seed::initial(b);
  for (const auto& x : start.cluster) table.intern(x);
  std::set<std::vector<std::size_t>> seen{cluster_key(table, start)};
  std::vector<Seed> frontier{std::move(start)};
  report.seeds_visited = 1;
  report.max_terms = 1;

  for (int level = 0; level < depth && !frontier.empty(); ++level) {
    std::vector<Seed> next;
    for (const Seed& s : frontier) {
      for (int k = 1; k <= s.n(); ++k) {
        Seed t;
        try {
          t = mutate_seed(s, k);
        } catch (const InternalError& e) {
          report.pass = false;
          report.complete = false;
          report.failure = e.what();
          report.variables = table.polys();
          return report;
        }
        ++report.mutations;
        const std::size_t terms = t.cluster[k - 1].term_count();
        report.max_terms = std::max(report.max_terms, terms);
        if (terms > caps.max_terms) {
          report.cap_hit = true;
          report.complete = false;
          report.variables = table.polys();
          return report;
        }
        if (seen.insert(cluster_key(table, t)).second) {
          if (++report.seeds_visited > caps.max_seeds) {
            report.cap_hit = true;
            report.complete = false;
            report.variables = table.polys();
            return report;
          }
          next.push_back(std::move(t));
        }
      }
    }
    frontier = std::move(next);
    report.depth = level + 1;
  }
  report.closed = frontier.empty();
  report.variables = table.polys();
  return report;
}

ExchangeGraph enumerate_exchange_graph(const Seed& initial, ExplorationCaps caps) {
  ExchangeGraph g;
  VariableTable table;
  for (const auto& x : initial.cluster) table.intern(x);
  std::map<std::vector<std::size_t>, std::size_t> index;
  index.emplace(cluster_key(table, initial), 0);
  g.clusters.push_back(index.begin()->first);
  g.seeds.push_back(initial);
  g.max_terms = 1;
  const int n = initial.n();
  // known[s][k-1] = neighbor id when the edge was already found from the other side.
  std::vector<std::vector<long>> known{std::vector<long>(n, -1)};

  for (std::size_t s = 0; s < g.seeds.size(); ++s) {
    for (int k = 1; k <= n; ++k) {
      if (known[s][k - 1] >= 0) continue;
      Seed t = mutate_seed(g.seeds[s], k);
      const std::size_t terms = t.cluster[k - 1].term_count();
      g.max_terms = std::max(g.max_terms, terms);
      if (terms > caps.max_terms) {
        g.variables = table.polys();
        return g;
      }
      auto key = cluster_key(table, t);
      const LaurentPoly fresh = t.cluster[k - 1];
      auto [it, inserted] = index.try_emplace(key, g.seeds.size());
      const std::size_t id = it->second;
      if (inserted) {
        if (g.seeds.size() >= caps.max_seeds) {
          g.variables = table.polys();
          return g;
        }
        g.clusters.push_back(std::move(key));
        g.seeds.push_back(std::move(t));
        known.emplace_back(n, -1);
      }
      known[s][k - 1] = static_cast<long>(id);
      // The stored seed at `id` may order its cluster differently from t.
      const auto& stored = g.seeds[id].cluster;
      known[id][std::find(stored.begin(), stored.end(), fresh) - stored.begin()] = static_cast<long>(s);
      g.edges.push_back({s, id, k});
    }
  }
  g.complete = true;
  g.variables = table.polys();
  return g;
}

ExchangeGraph enumerate_exchange_graph(const ExchangeMatrix& b, ExplorationCaps caps) {
  return enumerate_exchange_graph(Seed::initial(b), caps);
}

IntMatrix canonical_form(const IntMatrix& b) {
  const std::size_t n = b.size();
  if (n > 9) throw ResourceError("canonical form is limited to rank 9");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  IntMatrix best;
  IntMatrix cand(n, std::vector<int>(n));
  do {
    for (int sign : {1, -1}) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) cand[i][j] = sign * b[perm[i]][perm[j]];
      }
      if (best.empty() || cand < best) best = cand;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

FiniteTypeResult is_finite_type(const ExchangeMatrix& b, std::size_t max_class) {
  FiniteTypeResult result;
  const IntMatrix start = b.principal();
  const std::size_t n = start.size();
  std::set<IntMatrix> seen{canonical_form(start)};
  std::deque<IntMatrix> queue{start};
  while (!queue.empty()) {
    IntMatrix cur = std::move(queue.front());
    queue.pop_front();
    ++result.class_size;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const long prod = std::labs(static_cast<long>(cur[i][j]) * cur[j][i]);
        if (prod >= 4) {
          result.verdict = FiniteVerdict::Infinite;
          result.reason = "class member with |b_" + std::to_string(i + 1) + std::to_string(j + 1) +
                          " * b_" + std::to_string(j + 1) + std::to_string(i + 1) +
                          "| = " + std::to_string(prod) + " >= 4";
          result.witness = std::move(cur);
          return result;
        }
      }
    }
    if (is_finite_type_cartan(cartan_companion(cur))) {
      result.verdict = FiniteVerdict::Finite;
      result.reason = "class member with a finite-type Cartan companion";
      result.witness = std::move(cur);
      return result;
    }
    for (std::size_t k = 1; k <= n; ++k) {
      IntMatrix next = mutate_matrix(cur, static_cast<int>(k));
      if (seen.insert(canonical_form(next)).second) {
        if (seen.size() > max_class) {
          result.verdict = FiniteVerdict::Inconclusive;
          result.cap_hit = true;
          result.reason = "mutation class exceeds " + std::to_string(max_class) +
                          " members without a witness";
          return result;
        }
        queue.push_back(std::move(next));
      }
    }
  }
  // A finite class with no witness either way.
  result.verdict = FiniteVerdict::Inconclusive;
  result.reason = "mutation class exhausted without a witness";
  return result;
}

std::string to_string(FiniteVerdict v) {
  switch (v) {
    case FiniteVerdict::Finite: return "finite";
    case FiniteVerdict::Infinite: return "infinite";
    case FiniteVerdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

}  // namespace lrc
