#include "lrc/multiplicity.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace lrc {

namespace {

void degree_rec(const std::vector<RootVector>& betas, std::size_t k, std::vector<int>& remaining,
                Tuple& current, std::vector<Tuple>& out) {
  if (k == betas.size()) {
    if (std::all_of(remaining.begin(), remaining.end(), [](int c) { return c == 0; })) {
      out.push_back(current);
    }
    return;
  }
  const auto& beta = betas[k].coords;
  int bound = -1;
  for (std::size_t j = 0; j < beta.size(); ++j) {
    if (beta[j] <= 0) continue;
    const int b = remaining[j] / beta[j];
    bound = bound < 0 ? b : std::min(bound, b);
  }
  for (int v = 0; v <= std::max(bound, 0); ++v) {
    for (std::size_t j = 0; j < beta.size(); ++j) remaining[j] -= v * beta[j];
    current[k] = v;
    degree_rec(betas, k + 1, remaining, current, out);
    for (std::size_t j = 0; j < beta.size(); ++j) remaining[j] += v * beta[j];
  }
  current[k] = 0;
}

void check_weight(const CartanMatrix& a, const Weight& w, const char* what) {
  if (static_cast<int>(w.coords.size()) != a.rank()) {
    throw DomainError(std::string(what) + " has the wrong number of coordinates");
  }
  if (!w.dominant()) throw DomainError(std::string(what) + " is not dominant");
}

std::vector<int> add(const std::vector<int>& x, const std::vector<int>& y) {
  std::vector<int> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return out;
}

// Gram matrix (omega_i, omega_j) = d_i (A^{-1})_{ij}.
RationalMatrix fundamental_gram(const CartanMatrix& a) {
  const int r = a.rank();
  RationalMatrix g(r, std::vector<Rational>(r));
  for (int j = 0; j < r; ++j) {
    Weight e{std::vector<int>(r, 0)};
    e.coords[j] = 1;
    const auto col = weight_to_root_coords(a, e);
    for (int i = 0; i < r; ++i) g[i][j] = col[i] * a.symmetrizer()[i];
  }
  return g;
}

Rational form(const RationalMatrix& g, const std::vector<int>& x, const std::vector<int>& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] != 0) s += g[i][j] * (x[i] * y[j]);
    }
  }
  return s;
}

// Dominant representative of the W-orbit of x.
std::vector<int> dominant_conjugate(const CartanMatrix& a, std::vector<int> x) {
  for (;;) {
    auto it = std::find_if(x.begin(), x.end(), [](int c) { return c < 0; });
    if (it == x.end()) return x;
    x = reflect_weight(a, std::move(x), static_cast<int>(it - x.begin()) + 1);
  }
}

}  // namespace

std::vector<Tuple> degree_tuples(const CartanMatrix& a, const ReducedWord& word,
                                 const RootVector& gamma) {
  if (!gamma.in_positive_cone()) return {};
  const auto betas = word_roots(a, word);
  for (const auto& b : betas) {
    if (!b.in_positive_cone()) throw DomainError(to_string(word) + " is not reduced");
  }
  std::vector<Tuple> out;
  std::vector<int> remaining = gamma.coords;
  Tuple current(word.size(), 0);
  degree_rec(betas, 0, remaining, current, out);
  return out;
}

MultiplicityEngine::MultiplicityEngine(CartanMatrix a, std::optional<ReducedWord> base,
                                       BoundaryMode mode)
    : a_(std::move(a)) {
  if (!a_.finite_type()) throw DomainError("tensor multiplicities need a finite-type Cartan matrix");
  if (!a_.simply_laced()) {
    throw UnsupportedType("tropical multiplicity engine supports simply-laced types only");
  }
  const LongestElement w0 = longest_element_data(a_);
  star_ = w0.star;
  base_ = base ? *base : w0.word;
  if (!is_longest_word(a_, base_)) {
    throw DomainError(to_string(base_) + " is not a reduced word of the longest element");
  }
  std::vector<ReducedWord> words;
  if (mode == BoundaryMode::AllWords) {
    words = braid_class(a_, base_);
  } else {
    std::set<ReducedWord> unique;
    for (int i = 1; i <= a_.rank(); ++i) {
      unique.insert(reduced_word_with_boundary(a_, i, std::nullopt));
      unique.insert(reduced_word_with_boundary(a_, std::nullopt, i));
    }
    words.assign(unique.begin(), unique.end());
  }
  for (const auto& w : words) {
    checks_.push_back({braid_path(a_, base_, w), w.letters.front(), star_[w.letters.back() - 1]});
  }
}

void MultiplicityEngine::check_query(const Weight& lambda, const Weight& nu, const Weight& mu) const {
  check_weight(a_, lambda, "lambda");
  check_weight(a_, nu, "nu");
  check_weight(a_, mu, "mu");
}

bool MultiplicityEngine::passes(const Tuple& t, const Weight& lambda, const Weight& nu) const {
  for (const auto& check : checks_) {
    const auto moved = apply_path_values(t, check.path);
    if (moved.front() > lambda.pairing(check.first_letter)) return false;
    if (moved.back() > nu.pairing(check.last_label)) return false;
  }
  return true;
}

std::vector<Tuple> MultiplicityEngine::witnesses(const Weight& lambda, const Weight& nu,
                                                 const Weight& mu) const {
  check_query(lambda, nu, mu);
  Weight diff{std::vector<int>(a_.rank())};
  for (int i = 0; i < a_.rank(); ++i) diff.coords[i] = lambda.coords[i] + nu.coords[i] - mu.coords[i];
  const auto gamma = weight_to_root(a_, diff);
  if (!gamma || !gamma->in_positive_cone()) return {};
  std::vector<Tuple> out;
  for (auto& t : degree_tuples(a_, base_, *gamma)) {
    if (passes(t, lambda, nu)) out.push_back(std::move(t));
  }
  return out;
}

std::uint64_t MultiplicityEngine::count(const Weight& lambda, const Weight& nu,
                                        const Weight& mu) const {
  return witnesses(lambda, nu, mu).size();
}

std::uint64_t tensor_multiplicity(const MultiplicityQuery& q) {
  return MultiplicityEngine(q.cartan).count(q.lambda, q.nu, q.mu);
}

std::map<std::vector<int>, Integer> weight_multiplicities(const CartanMatrix& a,
                                                          const Weight& lambda) {
  check_weight(a, lambda, "highest weight");
  const int r = a.rank();
  const auto roots = positive_roots(a);
  std::vector<std::vector<int>> roots_fw;
  for (const auto& alpha : roots) roots_fw.push_back(root_to_weight(a, alpha).coords);
  const RationalMatrix g = fundamental_gram(a);
  const std::vector<int> rho(r, 1);

  auto is_weight = [&](const std::vector<int>& x) {
    const auto dom = dominant_conjugate(a, x);
    Weight diff{std::vector<int>(r)};
    for (int i = 0; i < r; ++i) diff.coords[i] = lambda.coords[i] - dom[i];
    const auto c = weight_to_root_coords(a, diff);
    return std::all_of(c.begin(), c.end(), [](const Rational& v) { return v >= 0; });
  };

  // BFS from the highest weight by subtracting simple roots: layers are
  // ordered by depth, so every m(beta + k alpha) is known before m(beta).
  std::vector<std::vector<int>> order{lambda.coords};
  std::set<std::vector<int>> seen{lambda.coords};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (int j = 1; j <= r; ++j) {
      std::vector<int> next = order[head];
      for (int i = 1; i <= r; ++i) next[i - 1] -= a.a(i, j);
      if (seen.count(next) || !is_weight(next)) continue;
      seen.insert(next);
      order.push_back(std::move(next));
    }
  }

  std::map<std::vector<int>, Integer> mult;
  const auto top = add(lambda.coords, rho);
  const Rational top_norm = form(g, top, top);
  mult[lambda.coords] = 1;
  for (std::size_t idx = 1; idx < order.size(); ++idx) {
    const auto& beta = order[idx];
    Rational sum = 0;
    for (const auto& alpha : roots_fw) {
      std::vector<int> shifted = beta;
      for (;;) {
        for (int i = 0; i < r; ++i) shifted[i] += alpha[i];
        auto it = mult.find(shifted);
        if (it == mult.end()) break;
        sum += Rational(it->second) * form(g, shifted, alpha);
      }
    }
    const auto b = add(beta, rho);
    const Rational denom = top_norm - form(g, b, b);
    Rational m = 2 * sum / denom;
    m.canonicalize();
    if (m.get_den() != 1 || m < 0) throw InternalError("Freudenthal recursion produced a non-integer");
    if (m != 0) mult[beta] = m.get_num();
  }
  return mult;
}

std::map<Weight, Integer> brauer_klimyk(const CartanMatrix& a, const Weight& lambda,
                                        const std::map<std::vector<int>, Integer>& nu_weights) {
  const int r = a.rank();
  std::map<Weight, Integer> out;
  for (const auto& [beta, m] : nu_weights) {
    std::vector<int> x(r);
    for (int i = 0; i < r; ++i) x[i] = lambda.coords[i] + beta[i] + 1;
    int sign = 1;
    bool wall = false;
    for (;;) {
      if (std::any_of(x.begin(), x.end(), [](int c) { return c == 0; })) {
        wall = true;
        break;
      }
      auto it = std::find_if(x.begin(), x.end(), [](int c) { return c < 0; });
      if (it == x.end()) break;
      x = reflect_weight(a, std::move(x), static_cast<int>(it - x.begin()) + 1);
      sign = -sign;
    }
    if (wall) continue;
    for (auto& c : x) c -= 1;
    out[Weight{std::move(x)}] += sign * m;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second < 0) throw InternalError("Brauer-Klimyk sum produced a negative multiplicity");
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

std::uint64_t racah_oracle(const MultiplicityQuery& q) {
  check_weight(q.cartan, q.lambda, "lambda");
  check_weight(q.cartan, q.mu, "mu");
  const auto decomposition =
      brauer_klimyk(q.cartan, q.lambda, weight_multiplicities(q.cartan, q.nu));
  auto it = decomposition.find(q.mu);
  return it == decomposition.end() ? 0 : it->second.get_ui();
}

std::vector<Weight> candidate_highest_weights(const CartanMatrix& a, const Weight& lambda,
                                              const Weight& nu) {
  const int r = a.rank();
  Weight top{add(lambda.coords, nu.coords)};
  const auto c = weight_to_root_coords(a, top);
  std::vector<int> bound(r);
  for (int i = 0; i < r; ++i) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), c[i].get_num_mpz_t(), c[i].get_den_mpz_t());
    bound[i] = static_cast<int>(f.get_si());
  }
  std::vector<Weight> out;
  std::vector<int> gamma(r, 0);
  for (;;) {
    Weight mu = top;
    for (int j = 0; j < r; ++j) {
      for (int i = 0; i < r; ++i) mu.coords[i] -= gamma[j] * a.entries()[i][j];
    }
    if (mu.dominant()) out.push_back(std::move(mu));
    int k = 0;
    while (k < r && ++gamma[k] > bound[k]) gamma[k++] = 0;
    if (k == r) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lrc
