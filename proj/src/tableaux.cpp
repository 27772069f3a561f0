#include "lrc/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lrc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 0 || (k > 0 && parts_[k] > parts_[k - 1])) {
      throw std::invalid_argument("partition parts must be weakly decreasing and nonnegative");
    }
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int k = 0; k < inner.length(); ++k) {
    if (inner[k] > (*this)[k]) return false;
  }
  return true;
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << '(';
  for (int k = 0; k < p.length(); ++k) os << (k ? "," : "") << p[k];
  os << ')';
  return os.str();
}

namespace {

class LrFiller {
 public:
  LrFiller(const Partition& lambda, const Partition& nu, const Partition& mu)
      : lambda_(lambda), mu_(mu), content_(nu.parts()), counts_(nu.length() + 1, 0) {
    for (int r = 0; r < mu.length(); ++r) {
      grid_.emplace_back(mu[r], 0);
      for (int c = mu[r] - 1; c >= lambda[r]; --c) cells_.push_back({r, c});
    }
  }

  std::uint64_t count() { return fill(0); }

 private:
  struct Cell {
    int row;
    int col;
  };

  std::uint64_t fill(std::size_t k) {
    if (k == cells_.size()) return 1;
    const auto [r, c] = cells_[k];
    int lo = 1;
    int hi = static_cast<int>(content_.size());
    if (c + 1 < mu_[r]) hi = std::min(hi, grid_[r][c + 1]);
    if (r > 0 && c >= lambda_[r - 1]) lo = std::max(lo, grid_[r - 1][c] + 1);
    // A lattice word never uses a value larger than the row index + 1.
    hi = std::min(hi, r + 1);
    std::uint64_t total = 0;
    for (int v = lo; v <= hi; ++v) {
      if (counts_[v] >= content_[v - 1]) continue;
      if (v > 1 && counts_[v] + 1 > counts_[v - 1]) continue;
      ++counts_[v];
      grid_[r][c] = v;
      total += fill(k + 1);
      --counts_[v];
    }
    grid_[r][c] = 0;
    return total;
  }

  const Partition& lambda_;
  const Partition& mu_;
  std::vector<int> content_;
  std::vector<int> counts_;
  std::vector<std::vector<int>> grid_;
  std::vector<Cell> cells_;
};

void partitions_rec(int remaining, int max_parts, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (max_parts == 0) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, max_parts - 1, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::uint64_t lr_coefficient(const Partition& lambda, const Partition& nu, const Partition& mu) {
  if (mu.size() != lambda.size() + nu.size() || !mu.contains(lambda)) return 0;
  return LrFiller(lambda, nu, mu).count();
}

std::vector<Partition> partitions_of(int total, int max_parts, int max_part) {
  std::vector<Partition> out;
  std::vector<int> current;
  partitions_rec(total, max_parts, max_part, current, out);
  return out;
}

std::map<Partition, std::uint64_t> schur_product_expansion(const Partition& lambda,
                                                           const Partition& nu, int n) {
  if (lambda.length() > n || nu.length() > n) {
    throw DomainError("factors must have at most n parts");
  }
  std::map<Partition, std::uint64_t> out;
  for (const auto& mu : partitions_of(lambda.size() + nu.size(), n, lambda[0] + nu[0])) {
    if (const auto c = lr_coefficient(lambda, nu, mu); c > 0) out.emplace(mu, c);
  }
  return out;
}

Integer schur_dimension(const Partition& mu, int n) {
  Rational dim = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) dim *= Rational(mu[i] - mu[j] + j - i, j - i);
  }
  dim.canonicalize();
  return dim.get_num();
}

Partition partition_from_weight(const Weight& lambda) {
  std::vector<int> parts(lambda.coords.size(), 0);
  int running = 0;
  for (std::size_t j = lambda.coords.size(); j-- > 0;) {
    running += lambda.coords[j];
    parts[j] = running;
  }
  return Partition(std::move(parts));
}

Weight weight_from_partition(const Partition& p, int rank) {
  if (p.length() > rank + 1) throw DomainError("partition has more than rank+1 parts");
  Weight w{std::vector<int>(rank)};
  for (int j = 0; j < rank; ++j) w.coords[j] = p[j] - p[j + 1];
  return w;
}

std::uint64_t lr_coefficient_for_weights(const Weight& lambda, const Weight& nu, const Weight& mu) {
  const int n = static_cast<int>(lambda.coords.size()) + 1;
  const Partition lp = partition_from_weight(lambda);
  const Partition np = partition_from_weight(nu);
  const Partition mp = partition_from_weight(mu);
  const int excess = lp.size() + np.size() - mp.size();
  if (excess < 0 || excess % n != 0) return 0;
  std::vector<int> padded(n);
  for (int j = 0; j < n; ++j) padded[j] = mp[j] + excess / n;
  return lr_coefficient(lp, np, Partition(std::move(padded)));
}

}  // namespace lrc
