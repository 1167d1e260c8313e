#include "hspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hspec/util.hpp"

namespace hspec {

namespace {

void normalize_k(std::vector<double>& x, const std::vector<int>& support, int k) {
  double sum = 0.0;
  for (int v : support) sum += ipow(x[v], k);
  double norm = std::pow(sum, 1.0 / k);
  for (int v : support) x[v] /= norm;
}

}  // namespace

SpectralResult power_iteration(const TensorApply& apply, int n, int k,
                               const std::vector<int>& support,
                               const IterationOptions& opts) {
  if (support.empty()) throw std::invalid_argument("power_iteration: empty support");
  if (opts.tolerance <= 0.0) throw std::invalid_argument("tolerance must be positive");
  if (opts.max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");

  SpectralResult result;
  result.vector.assign(n, 0.0);
  std::vector<double>& x = result.vector;
  for (int v : support) x[v] = 1.0;
  normalize_k(x, support, k);

  std::vector<double> z(n, 0.0);
  double bmin = 0.0, bmax = 0.0;
  bool restarted = false;
  double checkpoint_width = std::numeric_limits<double>::infinity();
  constexpr long kCheckpointInterval = 1000;

  std::vector<double> y;
  for (long iter = 1; iter <= opts.max_iterations; ++iter) {
    result.iterations = iter;
    y = apply(x);
    bmin = std::numeric_limits<double>::infinity();
    bmax = -std::numeric_limits<double>::infinity();
    for (int v : support) {
      double xk1 = ipow(x[v], k - 1);
      z[v] = y[v] + xk1;  // unit diagonal shift keeps the iteration convergent
      double ratio = z[v] / xk1;
      bmin = std::min(bmin, ratio);
      bmax = std::max(bmax, ratio);
    }
    double width = bmax - bmin;
    if (width <= opts.tolerance) {
      result.converged = true;
      break;
    }
    if (opts.allow_restart && !restarted && iter % kCheckpointInterval == 0) {
      if (width >= checkpoint_width * (1.0 - 1e-12)) {
        // bracket stopped narrowing; restart once from a seeded positive vector
        Rng rng(opts.seed);
        for (int v : support) x[v] = 0.5 + rng.uniform();
        normalize_k(x, support, k);
        restarted = true;
        continue;
      }
      checkpoint_width = width;
    }
    if (k == 2) {
      for (int v : support) x[v] = z[v];
    } else {
      for (int v : support) x[v] = std::pow(z[v], 1.0 / (k - 1));
    }
    normalize_k(x, support, k);
  }

  if (!result.converged) {
    // bracket the final iterate rather than the one before the last update
    y = apply(x);
    bmin = std::numeric_limits<double>::infinity();
    bmax = -std::numeric_limits<double>::infinity();
    for (int v : support) {
      double xk1 = ipow(x[v], k - 1);
      double ratio = (y[v] + xk1) / xk1;
      bmin = std::min(bmin, ratio);
      bmax = std::max(bmax, ratio);
    }
  }
  result.bracket_low = bmin - 1.0;
  result.bracket_high = bmax - 1.0;
  result.value = 0.5 * (bmin + bmax) - 1.0;
  y = apply(x);
  double res = 0.0;
  for (int v = 0; v < n; ++v) res = std::max(res, std::abs(y[v] - result.value * ipow(x[v], k - 1)));
  result.residual = res;
  for (int v : support) result.entry_sum += x[v];
  return result;
}

namespace {

SpectralResult max_over_components(const Hypergraph& g, const TensorApply& apply,
                                   const IterationOptions& opts) {
  int n = g.vertex_count();
  if (!g.has_edges()) {
    SpectralResult empty;
    empty.vector.assign(n, 0.0);
    empty.converged = true;  // rho = q = 0 by convention
    return empty;
  }
  int k = g.rank();
  SpectralResult winner;
  bool have_winner = false;
  long total_iterations = 0;
  bool all_converged = true;
  for (const std::vector<int>& component : g.connected_components()) {
    if (component.size() < 2) continue;  // singleton components carry no edges
    SpectralResult r = power_iteration(apply, n, k, component, opts);
    total_iterations += r.iterations;
    all_converged = all_converged && r.converged;
    if (!have_winner || r.value > winner.value) {
      winner = std::move(r);
      have_winner = true;
    }
  }
  winner.iterations = total_iterations;
  winner.converged = all_converged;
  return winner;
}

}  // namespace

SpectralResult spectral_radius(const Hypergraph& g, const IterationOptions& opts) {
  return max_over_components(
      g, [&g](const std::vector<double>& x) { return adjacency_apply(g, x); }, opts);
}

SpectralResult signless_spectral_radius(const Hypergraph& g, const IterationOptions& opts) {
  return max_over_components(
      g, [&g](const std::vector<double>& x) { return signless_apply(g, x); }, opts);
}

SpectralResult dense_spectral_radius(const DenseTensor& tensor, const Hypergraph& g,
                                     const IterationOptions& opts) {
  return max_over_components(
      g, [&tensor](const std::vector<double>& x) { return tensor.apply(x); }, opts);
}

double principal_entry_sum(const SpectralResult& result) {
  if (!result.converged) throw std::invalid_argument("principal_entry_sum: unconverged result");
  return result.entry_sum;
}

}  // namespace hspec
