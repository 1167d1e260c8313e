#pragma once

#include <cstdint>
#include <vector>

#include "hspec/clique.hpp"
#include "hspec/hypergraph.hpp"

namespace hspec {

/// Nonnegative n-vector on the standard simplex (1-norm equal to 1).
struct SimplexVector {
  std::vector<double> values;

  /// Validates entries >= -tol and |sum - 1| <= tol; throws
  /// std::invalid_argument otherwise.
  static SimplexVector checked(std::vector<double> values, double tol = 1e-9);
  static SimplexVector uniform(int n);
  /// 1/|support| on the support vertices, zero elsewhere.
  static SimplexVector uniform_on(const std::vector<int>& support, int n);
};

struct LagrangianOptions {
  int random_starts = 8;        // Dirichlet(1) starts drawn from `seed`
  int clique_starts = 4;        // maximum-clique start plus greedy maximal cliques
  long max_iterations = 2000;   // ascent steps per start
  double tolerance = 1e-10;     // projected-gradient norm stopping threshold
  std::uint64_t seed = 0;
  std::int64_t clique_node_cap = 10'000'000;
};

struct LagrangianResult {
  double value = 0.0;
  std::vector<double> argmax;
  int starts = 0;
  double kkt_residual = 0.0;  // max |g_i - mu| over the support, mu = sum_i x_i g_i
  long iterations = 0;        // accepted ascent steps over all starts
};

/// L(G, x) = sum_e P_e(x) / alpha(|e|) with k = rank(G).
/// Throws std::domain_error on an empty edge set, std::invalid_argument on a
/// dimension mismatch.
double lagrangian_value(const Hypergraph& g, const SimplexVector& x);

/// Gradient of L(G, .) at an arbitrary point (no simplex check).
std::vector<double> lagrangian_gradient(const Hypergraph& g, const std::vector<double>& x);

/// Closed-form Lagrangian of a clique of size omega:
/// sum over s in r of C(omega, s) / omega^k (terms with s > omega vanish).
double clique_support_value(int omega, const std::vector<int>& r, int k);

/// Multi-start projected gradient ascent of L(G, .) over the simplex.
/// Starts: uniform, uniform-on-clique for the maximum clique and a few greedy
/// maximal cliques, and seeded Dirichlet(1) vectors. Ascent is monotone, so
/// the result never falls below the clique start value
/// clique_support_value(omega(G), R, k). Best-found semantics: the value is a
/// certified lower estimate of L(G), global only under the clique-cover
/// hypotheses. Returns 0 with a uniform argmax for an empty edge set.
LagrangianResult maximize_lagrangian(const Hypergraph& g, const LagrangianOptions& opts = {});

}  // namespace hspec
