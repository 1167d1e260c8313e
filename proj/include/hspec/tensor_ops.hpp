#pragma once

#include <cstdint>
#include <vector>

#include "hspec/hypergraph.hpp"

namespace hspec {

/// 128-bit unsigned integer for exact surjection counts; alpha(20, s) can
/// exceed 64 bits (e.g. alpha(20, 10) ~ 2.2e19).
using uint128 = unsigned __int128;

/// alpha(s) for tensor order k: the number of ways to choose an index tuple
/// (i_1, ..., i_k) from an s-element set using every element at least once.
/// Equals the composition sum over k_1+...+k_s = k, k_i >= 1 of the
/// multinomial k!/(k_1!...k_s!), i.e. the number of surjections from a k-set
/// onto an s-set. Evaluated by inclusion-exclusion; exact for k <= 20.
/// Throws std::domain_error when s < 1, s > k, or k > 20.
uint128 alpha(int k, int s);

/// Same value by direct enumeration of the compositions of k into s positive
/// parts. Exponentially slower; kept as the independent oracle for alpha and
/// the edge polynomials.
uint128 alpha_by_compositions(int k, int s);

double alpha_double(int k, int s);

/// P_e(x): the surjective part of (sum_{j in e} x_j)^k, i.e.
/// sum over compositions k_1+...+k_s = k of k!/(k_1!...k_s!) x_{v_1}^{k_1}...x_{v_s}^{k_s}.
/// Evaluated by inclusion-exclusion over the subsets of e (O(2^s) terms).
/// P_e at the all-ones vector equals alpha(|e|).
double edge_poly_value(const Edge& e, const std::vector<double>& x, int k);

/// Same value by direct composition enumeration (the oracle path).
double edge_poly_value_by_compositions(const Edge& e, const std::vector<double>& x, int k);

/// Gradient of P_e, supported on e: entry j is dP_e/dx_{e.vertices[j]}
///   = k * sum_{T subset of e, T containing v_j} (-1)^{|e|-|T|} (sum_{u in T} x_u)^{k-1}.
std::vector<double> edge_poly_gradient(const Edge& e, const std::vector<double>& x, int k);

/// (A(G) x^{k-1})_i with k = rank(G), computed matrix-free:
/// y_i = sum over edges e containing i of (|e|/alpha(|e|)) * (1/k) dP_e/dx_i.
/// Edge contributions are accumulated in canonical edge order, so identical
/// inputs give bit-identical outputs.
/// Throws std::domain_error on an empty edge set, std::invalid_argument on a
/// dimension mismatch.
std::vector<double> adjacency_apply(const Hypergraph& g, const std::vector<double>& x);

/// (Q(G) x^{k-1})_i = d_i x_i^{k-1} + (A(G) x^{k-1})_i.
std::vector<double> signless_apply(const Hypergraph& g, const std::vector<double>& x);

/// x^T (A(G) x^{k-1}) = sum_e (|e|/alpha(|e|)) P_e(x).
double rayleigh_adjacency(const Hypergraph& g, const std::vector<double>& x);

/// x^T (Q(G) x^{k-1}) = sum_e sum_{j in e} x_j^k + x^T (A(G) x^{k-1}).
double rayleigh_signless(const Hypergraph& g, const std::vector<double>& x);

/// Fully enumerated order-k, dimension-n tensor. Brute-force oracle for the
/// matrix-free paths; only viable while n^k stays below the entry cap.
class DenseTensor {
 public:
  static constexpr std::int64_t kDefaultEntryCap = 10'000'000;

  /// Adjacency tensor of Definition-style entries: s/alpha(s) at every index
  /// tuple whose support is exactly an edge of size s, zero elsewhere.
  /// Throws std::length_error when n^rank exceeds entry_cap.
  static DenseTensor adjacency(const Hypergraph& g, std::int64_t entry_cap = kDefaultEntryCap);

  /// Adjacency plus the diagonal degree tensor (d_i at position (i,...,i)).
  static DenseTensor signless(const Hypergraph& g, std::int64_t entry_cap = kDefaultEntryCap);

  int dim() const { return n_; }
  int order() const { return k_; }
  const std::vector<double>& entries() const { return entries_; }

  double entry(const std::vector<int>& indices) const;

  /// y_i = sum_{i_2..i_k} a_{i,i_2..i_k} x_{i_2}...x_{i_k}, by full enumeration.
  std::vector<double> apply(const std::vector<double>& x) const;

  /// x^T (T x^{k-1}) by full enumeration.
  double rayleigh(const std::vector<double>& x) const;

 private:
  DenseTensor(int n, int k, std::vector<double> entries)
      : n_(n), k_(k), entries_(std::move(entries)) {}

  int n_ = 0;
  int k_ = 0;
  std::vector<double> entries_;
};

/// Maclaurin means of a positive vector: S_j = e_j(x) / C(m, j) for
/// j = 1..m, with e_j the elementary symmetric polynomials. The chain
/// S_1 >= S_2^{1/2} >= ... >= S_m^{1/m} holds, with equality throughout iff
/// all entries are equal. Throws std::domain_error on a nonpositive entry.
std::vector<double> maclaurin_means(const std::vector<double>& x);

/// Checks S_j^{1/j} >= S_{j+1}^{1/(j+1)} - tol along the whole chain.
bool maclaurin_chain_holds(const std::vector<double>& means, double tol = 1e-12);

/// True iff the chain collapses: S_1 - S_m^{1/m} <= tol.
bool maclaurin_chain_tight(const std::vector<double>& means, double tol = 1e-9);

}  // namespace hspec
