#include "lrc/rootsys.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace lrc {

namespace {

void check_generalized_cartan(const std::vector<std::vector<int>>& a) {
  const std::size_t n = a.size();
  if (n == 0) throw DomainError("Cartan matrix must have positive rank");
  for (const auto& row : a) {
    if (row.size() != n) throw DomainError("Cartan matrix must be square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i][i] != 2) throw DomainError("Cartan matrix needs a_ii = 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) throw DomainError("Cartan matrix needs a_ij <= 0 off the diagonal");
      if ((a[i][j] == 0) != (a[j][i] == 0)) {
        throw DomainError("Cartan matrix needs a_ij = 0 <=> a_ji = 0");
      }
    }
  }
}

// Smallest positive integers d with d_i a_ij = d_j a_ji, or empty if none exist.
std::vector<int> find_symmetrizer(const std::vector<std::vector<int>>& a) {
  const std::size_t n = a.size();
  std::vector<Rational> d(n, 0);
  std::vector<int> component(n, -1);
  int components = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (component[root] >= 0) continue;
    d[root] = 1;
    component[root] = components;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || a[i][j] == 0) continue;
        const Rational want = d[i] * a[i][j] / a[j][i];
        if (component[j] < 0) {
          d[j] = want;
          component[j] = components;
          queue.push_back(j);
        } else if (d[j] != want) {
          return {};
        }
      }
    }
    ++components;
  }
  std::vector<int> out(n);
  for (int c = 0; c < components; ++c) {
    Integer lcm_den = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (component[i] == c) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d[i].get_den_mpz_t());
    }
    Integer gcd_num = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (component[i] != c) continue;
      const Integer scaled = d[i].get_num() * (lcm_den / d[i].get_den());
      mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled.get_mpz_t());
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (component[i] != c) continue;
      const Integer scaled = d[i].get_num() * (lcm_den / d[i].get_den()) / gcd_num;
      out[i] = static_cast<int>(scaled.get_si());
    }
  }
  return out;
}

bool all_principal_minors_positive(const std::vector<std::vector<int>>& a) {
  const std::size_t n = a.size();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) idx.push_back(i);
    }
    RationalMatrix sub(idx.size(), std::vector<Rational>(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r) {
      for (std::size_t c = 0; c < idx.size(); ++c) sub[r][c] = a[idx[r]][idx[c]];
    }
    if (determinant(std::move(sub)) <= 0) return false;
  }
  return true;
}

void check_label(const CartanMatrix& a, int i) {
  if (i < 1 || i > a.rank()) {
    throw DomainError("simple root label " + std::to_string(i) + " outside [1," +
                      std::to_string(a.rank()) + "]");
  }
}

void require_finite(const CartanMatrix& a) {
  if (!a.finite_type()) throw DomainError("Cartan matrix is not of finite type");
}

std::vector<int> rho(const CartanMatrix& a) { return std::vector<int>(a.rank(), 1); }

// Sign of <x, alpha^vee> for weight x and root alpha (coords c); the positive
// factor 2/(alpha,alpha) does not affect the sign.
long long root_pairing_numerator(const CartanMatrix& a, const std::vector<int>& x,
                                 const RootVector& alpha) {
  long long s = 0;
  const auto& d = a.symmetrizer();
  for (int j = 0; j < a.rank(); ++j) s += static_cast<long long>(alpha.coords[j]) * d[j] * x[j];
  return s;
}

int braid_order(const CartanMatrix& a, int i, int j) {
  switch (a.a(i, j) * a.a(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;  // infinite order
  }
}

MoveKind kind_for_order(int m) {
  switch (m) {
    case 2: return MoveKind::Commute;
    case 3: return MoveKind::Braid3;
    case 4: return MoveKind::Braid4;
    default: return MoveKind::Braid6;
  }
}

int order_for_kind(MoveKind kind) {
  switch (kind) {
    case MoveKind::Commute: return 2;
    case MoveKind::Braid3: return 3;
    case MoveKind::Braid4: return 4;
    case MoveKind::Braid6: return 6;
  }
  return 0;
}

}  // namespace

CartanMatrix::CartanMatrix(std::vector<std::vector<int>> entries, std::string name)
    : entries_(std::move(entries)), name_(std::move(name)) {
  check_generalized_cartan(entries_);
  symmetrizer_ = find_symmetrizer(entries_);
  if (symmetrizer_.empty()) throw DomainError("Cartan matrix is not symmetrizable");
  finite_ = all_principal_minors_positive(entries_);
}

CartanMatrix CartanMatrix::of_type(char series, int rank) {
  const std::string name = std::string(1, series) + std::to_string(rank);
  auto illegal = [&] { return DomainError("no Cartan-Killing type " + name); };
  if (rank < 1) throw illegal();
  std::vector<std::vector<int>> m(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) m[i][i] = 2;
  auto link = [&](int i, int j, int aij = -1, int aji = -1) {
    m[i - 1][j - 1] = aij;
    m[j - 1][i - 1] = aji;
  };
  auto chain = [&](int upto) {
    for (int i = 1; i < upto; ++i) link(i, i + 1);
  };
  switch (series) {
    case 'A':
      chain(rank);
      break;
    case 'B':
      if (rank < 2) throw illegal();
      chain(rank - 1);
      link(rank - 1, rank, -1, -2);
      break;
    case 'C':
      if (rank < 3) throw illegal();
      chain(rank - 1);
      link(rank - 1, rank, -2, -1);
      break;
    case 'D':
      if (rank < 4) throw illegal();
      chain(rank - 1);
      link(rank - 2, rank);
      break;
    case 'E':
      if (rank < 6 || rank > 8) throw illegal();
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (int i = 4; i < rank; ++i) link(i, i + 1);
      break;
    case 'F':
      if (rank != 4) throw illegal();
      link(1, 2);
      link(2, 3, -1, -2);
      link(3, 4);
      break;
    case 'G':
      if (rank != 2) throw illegal();
      link(1, 2, -3, -1);
      break;
    default:
      throw illegal();
  }
  return CartanMatrix(std::move(m), name);
}

CartanMatrix CartanMatrix::parse(std::string_view name) {
  if (name.size() < 2) throw DomainError("bad Cartan type name '" + std::string(name) + "'");
  int rank = 0;
  const auto* first = name.data() + 1;
  const auto* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, rank);
  if (ec != std::errc{} || ptr != last) {
    throw DomainError("bad Cartan type name '" + std::string(name) + "'");
  }
  char series = name[0];
  if (series >= 'a' && series <= 'z') series = static_cast<char>(series - 'a' + 'A');
  return of_type(series, rank);
}

bool CartanMatrix::simply_laced() const {
  for (int i = 0; i < rank(); ++i) {
    for (int j = 0; j < rank(); ++j) {
      if (i != j && entries_[i][j] < -1) return false;
    }
  }
  return true;
}

bool is_finite_type_cartan(const std::vector<std::vector<int>>& a) {
  check_generalized_cartan(a);
  return all_principal_minors_positive(a);
}

bool Weight::dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

bool RootVector::in_positive_cone() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

std::string to_string(const ReducedWord& word) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < word.size(); ++k) os << (k ? "," : "") << word[k];
  os << ')';
  return os.str();
}

std::vector<int> reflect_weight(const CartanMatrix& a, std::vector<int> x, int i) {
  const int xi = x[i - 1];
  if (xi == 0) return x;
  for (int r = 1; r <= a.rank(); ++r) x[r - 1] -= xi * a.a(r, i);
  return x;
}

RootVector reflect_root(const CartanMatrix& a, RootVector beta, int i) {
  int pairing = 0;
  for (int j = 1; j <= a.rank(); ++j) pairing += a.a(i, j) * beta.coords[j - 1];
  beta.coords[i - 1] -= pairing;
  return beta;
}

std::vector<int> act_on_weight(const CartanMatrix& a, const ReducedWord& word, std::vector<int> x) {
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    x = reflect_weight(a, std::move(x), *it);
  }
  return x;
}

RootVector act_on_root(const CartanMatrix& a, const ReducedWord& word, RootVector beta) {
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    beta = reflect_root(a, std::move(beta), *it);
  }
  return beta;
}

Weight root_to_weight(const CartanMatrix& a, const RootVector& beta) {
  Weight w{std::vector<int>(a.rank(), 0)};
  for (int i = 1; i <= a.rank(); ++i) {
    for (int j = 1; j <= a.rank(); ++j) w.coords[i - 1] += a.a(i, j) * beta.coords[j - 1];
  }
  return w;
}

std::vector<Rational> weight_to_root_coords(const CartanMatrix& a, const Weight& lambda) {
  RationalMatrix m(a.rank(), std::vector<Rational>(a.rank()));
  for (int i = 0; i < a.rank(); ++i) {
    for (int j = 0; j < a.rank(); ++j) m[i][j] = a.entries()[i][j];
  }
  std::vector<Rational> rhs(lambda.coords.begin(), lambda.coords.end());
  return solve(std::move(m), std::move(rhs));
}

std::optional<RootVector> weight_to_root(const CartanMatrix& a, const Weight& lambda) {
  const auto c = weight_to_root_coords(a, lambda);
  RootVector out{std::vector<int>(c.size())};
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].get_den() != 1) return std::nullopt;
    out.coords[i] = static_cast<int>(c[i].get_num().get_si());
  }
  return out;
}

std::vector<RootVector> positive_roots(const CartanMatrix& a) {
  require_finite(a);
  const int r = a.rank();
  std::set<RootVector> roots;
  std::deque<RootVector> queue;
  for (int i = 0; i < r; ++i) {
    RootVector e{std::vector<int>(r, 0)};
    e.coords[i] = 1;
    roots.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    RootVector beta = queue.front();
    queue.pop_front();
    for (int i = 1; i <= r; ++i) {
      RootVector image = reflect_root(a, beta, i);
      if (!image.in_positive_cone()) continue;
      if (roots.insert(image).second) queue.push_back(std::move(image));
    }
  }
  return {roots.begin(), roots.end()};
}

std::vector<RootVector> word_roots(const CartanMatrix& a, const ReducedWord& word) {
  std::vector<RootVector> out;
  out.reserve(word.size());
  for (std::size_t k = 0; k < word.size(); ++k) {
    RootVector e{std::vector<int>(a.rank(), 0)};
    check_label(a, word[k]);
    e.coords[word[k] - 1] = 1;
    ReducedWord prefix{std::vector<int>(word.letters.begin(), word.letters.begin() + k)};
    out.push_back(act_on_root(a, prefix, std::move(e)));
  }
  return out;
}

int element_length(const CartanMatrix& a, const ReducedWord& word) {
  for (int letter : word.letters) check_label(a, letter);
  const auto x = act_on_weight(a, word, rho(a));
  int len = 0;
  for (const auto& alpha : positive_roots(a)) {
    if (root_pairing_numerator(a, x, alpha) < 0) ++len;
  }
  return len;
}

bool is_reduced(const CartanMatrix& a, const ReducedWord& word) {
  for (const auto& beta : word_roots(a, word)) {
    if (!beta.in_positive_cone()) return false;
  }
  return true;
}

LongestElement longest_element_data(const CartanMatrix& a) {
  require_finite(a);
  const int r = a.rank();
  LongestElement out;
  // Reflect rho through positive coordinates until it becomes antidominant;
  // each step raises the length by one.
  std::vector<int> x = rho(a);
  for (;;) {
    auto it = std::find_if(x.begin(), x.end(), [](int c) { return c > 0; });
    if (it == x.end()) break;
    const int i = static_cast<int>(it - x.begin()) + 1;
    out.word.letters.push_back(i);
    x = reflect_weight(a, std::move(x), i);
  }
  out.length = static_cast<int>(out.word.size());
  out.star.resize(r);
  for (int i = 1; i <= r; ++i) {
    RootVector e{std::vector<int>(r, 0)};
    e.coords[i - 1] = 1;
    const RootVector image = act_on_root(a, out.word, e);
    for (int j = 0; j < r; ++j) {
      if (image.coords[j] == -1) out.star[i - 1] = j + 1;
    }
  }
  return out;
}

std::optional<ReducedWord> apply_word_move(const CartanMatrix& a, const ReducedWord& word,
                                           std::size_t position, MoveKind kind) {
  const int m = order_for_kind(kind);
  if (position + m > word.size()) return std::nullopt;
  const int i = word[position];
  const int j = word[position + 1];
  if (i == j || braid_order(a, i, j) != m) return std::nullopt;
  for (int k = 0; k < m; ++k) {
    if (word[position + k] != (k % 2 == 0 ? i : j)) return std::nullopt;
  }
  ReducedWord out = word;
  for (int k = 0; k < m; ++k) out.letters[position + k] = (k % 2 == 0 ? j : i);
  return out;
}

std::vector<BraidNeighbor> braid_neighbors(const ReducedWord& word, const CartanMatrix& a) {
  if (!is_reduced(a, word)) throw DomainError("word " + to_string(word) + " is not reduced");
  std::vector<BraidNeighbor> out;
  for (std::size_t p = 0; p + 1 < word.size(); ++p) {
    const int m = braid_order(a, word[p], word[p + 1]);
    if (word[p] == word[p + 1] || m == 0) continue;
    const MoveKind kind = kind_for_order(m);
    if (auto next = apply_word_move(a, word, p, kind)) {
      out.push_back({p, kind, std::move(*next)});
    }
  }
  std::sort(out.begin(), out.end(), [](const BraidNeighbor& x, const BraidNeighbor& y) {
    return std::tie(x.word, x.position) < std::tie(y.word, y.position);
  });
  return out;
}

ReducedWord reduced_word_of(const CartanMatrix& a, std::vector<int> rho_image) {
  ReducedWord out;
  for (;;) {
    auto it = std::find_if(rho_image.begin(), rho_image.end(), [](int c) { return c < 0; });
    if (it == rho_image.end()) break;
    const int j = static_cast<int>(it - rho_image.begin()) + 1;
    out.letters.push_back(j);
    rho_image = reflect_weight(a, std::move(rho_image), j);
  }
  return out;
}

ReducedWord reduced_word_with_boundary(const CartanMatrix& a, std::optional<int> first,
                                       std::optional<int> last) {
  require_finite(a);
  if (first) check_label(a, *first);
  if (last) check_label(a, *last);
  const LongestElement w0 = longest_element_data(a);
  if (!first && !last) return w0.word;
  if (w0.length == 1) {
    if ((first && *first != 1) || (last && *last != 1)) {
      throw DomainError("no reduced word of w0 with the requested boundary letters");
    }
    return w0.word;
  }
  std::vector<int> x = rho(a);
  if (last) x = reflect_weight(a, std::move(x), *last);
  x = act_on_weight(a, w0.word, std::move(x));
  if (first) x = reflect_weight(a, std::move(x), *first);
  ReducedWord middle = reduced_word_of(a, std::move(x));
  const std::size_t expected = w0.length - (first ? 1 : 0) - (last ? 1 : 0);
  if (middle.size() != expected) {
    throw DomainError("no reduced word of w0 with the requested boundary letters");
  }
  ReducedWord out;
  if (first) out.letters.push_back(*first);
  out.letters.insert(out.letters.end(), middle.letters.begin(), middle.letters.end());
  if (last) out.letters.push_back(*last);
  return out;
}

std::vector<ReducedWord> braid_class(const CartanMatrix& a, const ReducedWord& start,
                                     std::size_t cap) {
  std::set<ReducedWord> seen{start};
  std::deque<ReducedWord> queue{start};
  while (!queue.empty()) {
    ReducedWord w = std::move(queue.front());
    queue.pop_front();
    for (auto& nb : braid_neighbors(w, a)) {
      if (seen.insert(nb.word).second) {
        if (seen.size() > cap) throw ResourceError("braid class exceeds cap");
        queue.push_back(std::move(nb.word));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<ReducedWord> weyl_group_elements(const CartanMatrix& a, std::size_t cap) {
  require_finite(a);
  std::map<std::vector<int>, ReducedWord> seen;
  std::vector<std::pair<std::vector<int>, ReducedWord>> order;
  seen.emplace(rho(a), ReducedWord{});
  order.emplace_back(rho(a), ReducedWord{});
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (int i = 1; i <= a.rank(); ++i) {
      auto image = reflect_weight(a, order[head].first, i);
      if (seen.count(image)) continue;
      ReducedWord w;
      w.letters.push_back(i);
      const auto& tail = order[head].second.letters;
      w.letters.insert(w.letters.end(), tail.begin(), tail.end());
      seen.emplace(image, w);
      order.emplace_back(std::move(image), std::move(w));
      if (order.size() > cap) throw ResourceError("Weyl group exceeds cap");
    }
  }
  std::vector<ReducedWord> out;
  out.reserve(order.size());
  for (auto& entry : order) out.push_back(std::move(entry.second));
  return out;
}

Integer weyl_dimension(const CartanMatrix& a, const Weight& lambda) {
  const auto& d = a.symmetrizer();
  Rational dim = 1;
  for (const auto& alpha : positive_roots(a)) {
    long num = 0;
    long den = 0;
    for (int j = 0; j < a.rank(); ++j) {
      num += static_cast<long>(alpha.coords[j]) * d[j] * (lambda.coords[j] + 1);
      den += static_cast<long>(alpha.coords[j]) * d[j];
    }
    dim *= Rational(Integer(num), Integer(den));
  }
  dim.canonicalize();
  return dim.get_num();
}

Rational weight_form(const CartanMatrix& a, const std::vector<int>& x, const std::vector<int>& y) {
  const auto c = weight_to_root_coords(a, Weight{y});
  Rational s = 0;
  for (int i = 0; i < a.rank(); ++i) s += Rational(x[i] * a.symmetrizer()[i]) * c[i];
  return s;
}

}  // namespace lrc
