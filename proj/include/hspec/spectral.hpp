#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hspec/hypergraph.hpp"
#include "hspec/tensor_ops.hpp"

namespace hspec {

struct IterationOptions {
  double tolerance = 1e-10;   // stopping width of the eigenvalue bracket
  long max_iterations = 100000;
  std::uint64_t seed = 0;     // start vector for the stall restart
  bool allow_restart = true;  // one seeded random restart if the bracket stops narrowing
};

/// Outcome of a Perron eigenpair computation. The eigenvector is normalized
/// so that sum_i x_i^k = 1 and is zero off the dominant component; entry_sum
/// is U = sum_i x_i under that normalization.
struct SpectralResult {
  double value = 0.0;
  std::vector<double> vector;
  long iterations = 0;
  double residual = 0.0;  // max_i |(T x^{k-1})_i - value * x_i^{k-1}|
  bool converged = false;
  double entry_sum = 0.0;
  // final Collatz-Wielandt bracket (shift removed); value lies inside it
  double bracket_low = 0.0;
  double bracket_high = 0.0;
};

using TensorApply = std::function<std::vector<double>(const std::vector<double>&)>;

/// Shifted power iteration x <- normalize_k((T x^{k-1} + x^{[k-1]})^{[1/(k-1)]})
/// for a single weakly irreducible block, restricted to the vertices in
/// `support` (entries elsewhere stay zero). The eigenvalue estimate is the
/// midpoint of the bracket [min_i z_i/x_i^{k-1}, max_i z_i/x_i^{k-1}] minus
/// the unit shift; iteration stops when the bracket width falls below the
/// tolerance. On non-convergence the result carries converged = false and the
/// last bracket rather than a silent answer.
SpectralResult power_iteration(const TensorApply& apply, int n, int k,
                               const std::vector<int>& support,
                               const IterationOptions& opts = {});

/// rho(G): H+-spectral radius of the adjacency tensor, computed per connected
/// component (maximum over components; ties go to the lowest-indexed one).
/// An empty edge set yields value 0, converged = true, a zero vector.
SpectralResult spectral_radius(const Hypergraph& g, const IterationOptions& opts = {});

/// q(G): same scheme for the signless Laplacian tensor Q = D + A.
SpectralResult signless_spectral_radius(const Hypergraph& g, const IterationOptions& opts = {});

/// Same per-component driver but with the fully enumerated tensor as the
/// apply operator; the independent route used for oracle comparisons.
SpectralResult dense_spectral_radius(const DenseTensor& tensor, const Hypergraph& g,
                                     const IterationOptions& opts = {});

/// U = sum of principal-eigenvector entries. Throws std::invalid_argument on
/// an unconverged input.
double principal_entry_sum(const SpectralResult& result);

}  // namespace hspec
