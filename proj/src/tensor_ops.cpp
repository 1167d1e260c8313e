#include "hspec/tensor_ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hspec/util.hpp"

namespace hspec {

namespace {

constexpr int kMaxExactOrder = 20;

void check_alpha_args(int k, int s) {
  if (k < 1 || k > kMaxExactOrder)
    throw std::domain_error("alpha: exact integer arithmetic requires 1 <= k <= 20, got k = " +
                            std::to_string(k));
  if (s < 1 || s > k)
    throw std::domain_error("alpha: edge size must satisfy 1 <= s <= k, got s = " + std::to_string(s));
}

uint128 u128_pow(uint128 base, int exp) {
  uint128 r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// factorials up to 20! (fits in 64 bits)
uint128 factorial(int n) {
  uint128 r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

uint128 alpha(int k, int s) {
  check_alpha_args(k, s);
  // inclusion-exclusion over the surjection target: sum_j (-1)^j C(s,j) (s-j)^k
  __int128 total = 0;
  for (int j = 0; j <= s; ++j) {
    __int128 term = static_cast<__int128>(binomial(s, j)) * static_cast<__int128>(u128_pow(s - j, k));
    total += (j % 2 == 0) ? term : -term;
  }
  return static_cast<uint128>(total);
}

uint128 alpha_by_compositions(int k, int s) {
  check_alpha_args(k, s);
  uint128 k_fact = factorial(k);
  uint128 total = 0;
  std::vector<int> parts(s);
  // enumerate k_1 + ... + k_s = k with all parts >= 1
  auto recurse = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == s - 1) {
      parts[pos] = remaining;
      uint128 denom = 1;
      for (int p : parts) denom *= factorial(p);
      total += k_fact / denom;
      return;
    }
    int max_part = remaining - (s - 1 - pos);
    for (int p = 1; p <= max_part; ++p) {
      parts[pos] = p;
      self(self, pos + 1, remaining - p);
    }
  };
  recurse(recurse, 0, k);
  return total;
}

double alpha_double(int k, int s) { return static_cast<double>(alpha(k, s)); }

namespace {

void check_edge_against(const Edge& e, const std::vector<double>& x, int k) {
  if (e.size() < 1) throw std::invalid_argument("empty edge");
  if (e.size() > k)
    throw std::domain_error("edge size " + std::to_string(e.size()) + " exceeds tensor order " +
                            std::to_string(k));
  if (e.vertices.back() >= static_cast<int>(x.size()) || e.vertices.front() < 0)
    throw std::invalid_argument("edge vertex outside vector dimension");
}

// subset sums over the members of e: sums[mask] = sum of x over the vertices
// selected by mask
void fill_subset_sums(const Edge& e, const std::vector<double>& x, std::vector<double>& sums) {
  int s = e.size();
  sums.assign(std::size_t{1} << s, 0.0);
  for (unsigned mask = 1; mask < (1u << s); ++mask) {
    unsigned low = mask & (~mask + 1u);
    sums[mask] = sums[mask ^ low] + x[e.vertices[__builtin_ctz(low)]];
  }
}

}  // namespace

double edge_poly_value(const Edge& e, const std::vector<double>& x, int k) {
  check_edge_against(e, x, k);
  int s = e.size();
  std::vector<double> sums;
  fill_subset_sums(e, x, sums);
  double total = 0.0;
  for (unsigned mask = 1; mask < (1u << s); ++mask) {
    double term = ipow(sums[mask], k);
    total += ((s - __builtin_popcount(mask)) % 2 == 0) ? term : -term;
  }
  return total;
}

double edge_poly_value_by_compositions(const Edge& e, const std::vector<double>& x, int k) {
  check_edge_against(e, x, k);
  int s = e.size();
  double k_fact = static_cast<double>(factorial(k));
  double total = 0.0;
  std::vector<int> parts(s);
  auto recurse = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == s - 1) {
      parts[pos] = remaining;
      double denom = 1.0, mono = 1.0;
      for (int j = 0; j < s; ++j) {
        denom *= static_cast<double>(factorial(parts[j]));
        mono *= ipow(x[e.vertices[j]], parts[j]);
      }
      total += k_fact / denom * mono;
      return;
    }
    int max_part = remaining - (s - 1 - pos);
    for (int p = 1; p <= max_part; ++p) {
      parts[pos] = p;
      self(self, pos + 1, remaining - p);
    }
  };
  recurse(recurse, 0, k);
  return total;
}

std::vector<double> edge_poly_gradient(const Edge& e, const std::vector<double>& x, int k) {
  check_edge_against(e, x, k);
  int s = e.size();
  std::vector<double> sums;
  fill_subset_sums(e, x, sums);
  std::vector<double> grad(s, 0.0);
  for (unsigned mask = 1; mask < (1u << s); ++mask) {
    double w = ipow(sums[mask], k - 1);
    if ((s - __builtin_popcount(mask)) % 2 != 0) w = -w;
    unsigned rest = mask;
    while (rest != 0) {
      unsigned low = rest & (~rest + 1u);
      grad[__builtin_ctz(low)] += w;
      rest ^= low;
    }
  }
  for (double& g : grad) g *= k;
  return grad;
}

namespace {

void check_apply_args(const Hypergraph& g, const std::vector<double>& x) {
  if (!g.has_edges()) throw std::domain_error("tensor order undefined: empty edge set");
  if (static_cast<int>(x.size()) != g.vertex_count())
    throw std::invalid_argument("vector dimension " + std::to_string(x.size()) +
                                " does not match vertex count " + std::to_string(g.vertex_count()));
}

}  // namespace

std::vector<double> adjacency_apply(const Hypergraph& g, const std::vector<double>& x) {
  check_apply_args(g, x);
  int k = g.rank();
  std::vector<double> y(x.size(), 0.0);
  std::vector<double> sums;
  std::vector<double> local;
  for (const Edge& e : g.edges()) {
    int s = e.size();
    double coef = static_cast<double>(s) / alpha_double(k, s);
    fill_subset_sums(e, x, sums);
    local.assign(s, 0.0);
    // (1/k) dP_e/dx_i = sum over subsets T of e containing i of
    // (-1)^{s-|T|} (sum_{u in T} x_u)^{k-1}
    for (unsigned mask = 1; mask < (1u << s); ++mask) {
      double w = ipow(sums[mask], k - 1);
      if ((s - __builtin_popcount(mask)) % 2 != 0) w = -w;
      unsigned rest = mask;
      while (rest != 0) {
        unsigned low = rest & (~rest + 1u);
        local[__builtin_ctz(low)] += w;
        rest ^= low;
      }
    }
    for (int j = 0; j < s; ++j) y[e.vertices[j]] += coef * local[j];
  }
  return y;
}

std::vector<double> signless_apply(const Hypergraph& g, const std::vector<double>& x) {
  std::vector<double> y = adjacency_apply(g, x);
  int k = g.rank();
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degrees()[v] > 0) y[v] += g.degrees()[v] * ipow(x[v], k - 1);
  }
  return y;
}

double rayleigh_adjacency(const Hypergraph& g, const std::vector<double>& x) {
  check_apply_args(g, x);
  int k = g.rank();
  double total = 0.0;
  for (const Edge& e : g.edges()) {
    double coef = static_cast<double>(e.size()) / alpha_double(k, e.size());
    total += coef * edge_poly_value(e, x, k);
  }
  return total;
}

double rayleigh_signless(const Hypergraph& g, const std::vector<double>& x) {
  double total = rayleigh_adjacency(g, x);
  int k = g.rank();
  for (const Edge& e : g.edges()) {
    for (int v : e.vertices) total += ipow(x[v], k);
  }
  return total;
}

namespace {

std::int64_t dense_entry_count(int n, int k, std::int64_t cap) {
  std::int64_t count = 1;
  for (int i = 0; i < k; ++i) {
    count *= n;
    if (count > cap)
      throw std::length_error("dense tensor size n^k exceeds entry cap " + std::to_string(cap));
  }
  return count;
}

std::vector<double> dense_adjacency_entries(const Hypergraph& g, std::int64_t cap) {
  int n = g.vertex_count();
  int k = g.rank();
  std::int64_t count = dense_entry_count(n, k, cap);
  std::vector<double> entries(static_cast<std::size_t>(count), 0.0);
  for (const Edge& e : g.edges()) {
    int s = e.size();
    double value = static_cast<double>(s) / alpha_double(k, s);
    // every tuple in e^k whose support is all of e
    std::vector<int> digits(k, 0);
    while (true) {
      unsigned seen = 0;
      for (int d : digits) seen |= 1u << d;
      if (seen == (1u << s) - 1u) {
        std::int64_t flat = 0;
        for (int d : digits) flat = flat * n + e.vertices[d];
        entries[static_cast<std::size_t>(flat)] = value;
      }
      int pos = k - 1;
      while (pos >= 0 && digits[pos] == s - 1) digits[pos--] = 0;
      if (pos < 0) break;
      ++digits[pos];
    }
  }
  return entries;
}

}  // namespace

DenseTensor DenseTensor::adjacency(const Hypergraph& g, std::int64_t entry_cap) {
  if (!g.has_edges()) throw std::domain_error("tensor order undefined: empty edge set");
  return DenseTensor(g.vertex_count(), g.rank(), dense_adjacency_entries(g, entry_cap));
}

DenseTensor DenseTensor::signless(const Hypergraph& g, std::int64_t entry_cap) {
  if (!g.has_edges()) throw std::domain_error("tensor order undefined: empty edge set");
  int n = g.vertex_count();
  int k = g.rank();
  std::vector<double> entries = dense_adjacency_entries(g, entry_cap);
  for (int v = 0; v < n; ++v) {
    std::int64_t flat = 0;
    for (int i = 0; i < k; ++i) flat = flat * n + v;
    entries[static_cast<std::size_t>(flat)] += g.degrees()[v];
  }
  return DenseTensor(n, k, std::move(entries));
}

double DenseTensor::entry(const std::vector<int>& indices) const {
  if (static_cast<int>(indices.size()) != k_) throw std::invalid_argument("index tuple length != order");
  std::int64_t flat = 0;
  for (int idx : indices) {
    if (idx < 0 || idx >= n_) throw std::out_of_range("tensor index out of range");
    flat = flat * n_ + idx;
  }
  return entries_[static_cast<std::size_t>(flat)];
}

std::vector<double> DenseTensor::apply(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("vector dimension != tensor dimension");
  std::vector<double> y(static_cast<std::size_t>(n_), 0.0);
  std::size_t un = static_cast<std::size_t>(n_);
  for (std::size_t flat = 0; flat < entries_.size(); ++flat) {
    double a = entries_[flat];
    if (a == 0.0) continue;
    std::size_t rem = flat;
    double prod = 1.0;
    for (int j = k_ - 1; j >= 1; --j) {
      prod *= x[rem % un];
      rem /= un;
    }
    y[rem] += a * prod;  // rem is now the leading index
  }
  return y;
}

double DenseTensor::rayleigh(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("vector dimension != tensor dimension");
  std::size_t un = static_cast<std::size_t>(n_);
  double total = 0.0;
  for (std::size_t flat = 0; flat < entries_.size(); ++flat) {
    double a = entries_[flat];
    if (a == 0.0) continue;
    std::size_t rem = flat;
    double prod = 1.0;
    for (int j = 0; j < k_; ++j) {
      prod *= x[rem % un];
      rem /= un;
    }
    total += a * prod;
  }
  return total;
}

std::vector<double> maclaurin_means(const std::vector<double>& x) {
  int m = static_cast<int>(x.size());
  if (m == 0) throw std::domain_error("maclaurin_means: empty vector");
  for (double v : x) {
    if (!(v > 0.0)) throw std::domain_error("maclaurin_means: entries must be positive");
  }
  // elementary symmetric polynomials e_1..e_m
  std::vector<double> elem(static_cast<std::size_t>(m) + 1, 0.0);
  elem[0] = 1.0;
  for (int i = 0; i < m; ++i) {
    for (int j = std::min(i + 1, m); j >= 1; --j) elem[j] += x[i] * elem[j - 1];
  }
  std::vector<double> means(m);
  for (int j = 1; j <= m; ++j) means[j - 1] = elem[j] / static_cast<double>(binomial(m, j));
  return means;
}

bool maclaurin_chain_holds(const std::vector<double>& means, double tol) {
  for (std::size_t j = 0; j + 1 < means.size(); ++j) {
    double lhs = std::pow(means[j], 1.0 / static_cast<double>(j + 1));
    double rhs = std::pow(means[j + 1], 1.0 / static_cast<double>(j + 2));
    if (lhs < rhs - tol) return false;
  }
  return true;
}

bool maclaurin_chain_tight(const std::vector<double>& means, double tol) {
  double first = means.front();
  double last = std::pow(means.back(), 1.0 / static_cast<double>(means.size()));
  return first - last <= tol;
}

}  // namespace hspec
