#include "hspec/lagrangian.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <numeric>
#include <stdexcept>

#include "hspec/tensor_ops.hpp"
#include "hspec/util.hpp"

namespace hspec {

SimplexVector SimplexVector::checked(std::vector<double> values, double tol) {
  double sum = 0.0;
  for (double v : values) {
    if (v < -tol) throw std::invalid_argument("simplex vector has a negative entry");
    sum += v;
  }
  if (std::abs(sum - 1.0) > tol)
    throw std::invalid_argument("simplex vector does not sum to 1 (sum = " + std::to_string(sum) + ")");
  return SimplexVector{std::move(values)};
}

SimplexVector SimplexVector::uniform(int n) {
  return SimplexVector{std::vector<double>(n, 1.0 / n)};
}

SimplexVector SimplexVector::uniform_on(const std::vector<int>& support, int n) {
  std::vector<double> values(n, 0.0);
  for (int v : support) values[v] = 1.0 / static_cast<double>(support.size());
  return SimplexVector{std::move(values)};
}

double lagrangian_value(const Hypergraph& g, const SimplexVector& x) {
  if (!g.has_edges()) throw std::domain_error("Lagrangian undefined: empty edge set");
  if (static_cast<int>(x.values.size()) != g.vertex_count())
    throw std::invalid_argument("vector dimension does not match vertex count");
  int k = g.rank();
  double total = 0.0;
  for (const Edge& e : g.edges()) {
    total += edge_poly_value(e, x.values, k) / alpha_double(k, e.size());
  }
  return total;
}

std::vector<double> lagrangian_gradient(const Hypergraph& g, const std::vector<double>& x) {
  if (!g.has_edges()) throw std::domain_error("Lagrangian undefined: empty edge set");
  if (static_cast<int>(x.size()) != g.vertex_count())
    throw std::invalid_argument("vector dimension does not match vertex count");
  int k = g.rank();
  std::vector<double> grad(x.size(), 0.0);
  for (const Edge& e : g.edges()) {
    double inv_alpha = 1.0 / alpha_double(k, e.size());
    std::vector<double> local = edge_poly_gradient(e, x, k);
    for (int j = 0; j < e.size(); ++j) grad[e.vertices[j]] += inv_alpha * local[j];
  }
  return grad;
}

double clique_support_value(int omega, const std::vector<int>& r, int k) {
  if (omega < 1) throw std::invalid_argument("omega must be >= 1");
  double total = 0.0;
  double scale = ipow(1.0 / static_cast<double>(omega), k);
  for (int s : r) total += static_cast<double>(binomial(omega, s)) * scale;
  return total;
}

namespace {

// Euclidean projection onto the standard simplex (sort-based)
void project_simplex(std::vector<double>& x) {
  std::vector<double> u = x;
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cumulative = 0.0;
  double tau = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    cumulative += u[j];
    double candidate = (cumulative - 1.0) / static_cast<double>(j + 1);
    if (u[j] - candidate > 0.0) tau = candidate;
  }
  double sum = 0.0;
  for (double& v : x) {
    v = std::max(v - tau, 0.0);
    sum += v;
  }
  for (double& v : x) v /= sum;  // remove the last few ulps of drift
}

struct AscentOutcome {
  double value = 0.0;
  std::vector<double> x;
  long accepted_steps = 0;
};

AscentOutcome ascend(const Hypergraph& g, std::vector<double> x, const LagrangianOptions& opts) {
  project_simplex(x);
  double fx = lagrangian_value(g, SimplexVector{x});
  double step = 1.0;
  AscentOutcome out;
  for (long it = 0; it < opts.max_iterations; ++it) {
    std::vector<double> grad = lagrangian_gradient(g, x);
    std::vector<double> probe = x;
    for (std::size_t i = 0; i < x.size(); ++i) probe[i] += grad[i];
    project_simplex(probe);
    double pg_norm = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      double d = probe[i] - x[i];
      pg_norm += d * d;
    }
    if (std::sqrt(pg_norm) <= opts.tolerance) break;

    bool accepted = false;
    double gain = 0.0;
    while (step >= 1e-16) {
      std::vector<double> cand = x;
      for (std::size_t i = 0; i < x.size(); ++i) cand[i] += step * grad[i];
      project_simplex(cand);
      double fc = lagrangian_value(g, SimplexVector{cand});
      double along = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) along += grad[i] * (cand[i] - x[i]);
      if (fc >= fx && fc >= fx + 1e-4 * along - 1e-18) {
        gain = fc - fx;
        x = std::move(cand);
        fx = fc;
        ++out.accepted_steps;
        step = std::min(step * 2.0, 1e6);
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;       // no ascent direction left at float resolution
    if (gain <= 1e-15) break;   // progress below float noise
  }
  out.value = fx;
  out.x = std::move(x);
  return out;
}

// up to `limit` distinct maximal cliques: the exact maximum clique first,
// then greedy maximal cliques grown in a few deterministic vertex orders
std::vector<std::vector<int>> clique_seeds(const Hypergraph& g, int limit,
                                           std::int64_t node_cap) {
  std::vector<std::vector<int>> seeds;
  if (limit <= 0) return seeds;
  CliqueResult exact = max_clique_exact(g, CliqueOptions{node_cap});
  if (!exact.vertices.empty()) seeds.push_back(exact.vertices);
  CliqueResult greedy = greedy_clique(g);
  auto push_unique = [&seeds, limit](const std::vector<int>& clique) {
    if (static_cast<int>(seeds.size()) >= limit || clique.empty()) return;
    if (std::find(seeds.begin(), seeds.end(), clique) == seeds.end()) seeds.push_back(clique);
  };
  push_unique(greedy.vertices);
  // grow maximal cliques starting from the lowest- and highest-indexed vertices
  for (int direction = 0; direction < 2 && static_cast<int>(seeds.size()) < limit; ++direction) {
    std::vector<int> clique;
    int n = g.vertex_count();
    for (int i = 0; i < n; ++i) {
      int v = direction == 0 ? i : n - 1 - i;
      std::vector<int> candidate = clique;
      candidate.push_back(v);
      if (is_clique(g, candidate)) clique.push_back(v);
    }
    std::sort(clique.begin(), clique.end());
    push_unique(clique);
  }
  return seeds;
}

}  // namespace

LagrangianResult maximize_lagrangian(const Hypergraph& g, const LagrangianOptions& opts) {
  LagrangianResult result;
  int n = g.vertex_count();
  if (!g.has_edges()) {
    result.argmax = SimplexVector::uniform(n).values;
    return result;  // L(G) = 0 by the omega = 1 convention
  }

  std::vector<std::vector<double>> starts;
  starts.push_back(SimplexVector::uniform(n).values);
  for (const std::vector<int>& clique : clique_seeds(g, opts.clique_starts, opts.clique_node_cap)) {
    starts.push_back(SimplexVector::uniform_on(clique, n).values);
  }
  // one start per edge type: the maximum can sit on a small-support face
  // (mass on a single low-size edge can beat every clique-uniform point)
  for (int s : g.edge_types()) {
    for (const Edge& e : g.edges()) {
      if (e.size() == s) {
        starts.push_back(SimplexVector::uniform_on(e.vertices, n).values);
        break;
      }
    }
  }
  Rng rng(opts.seed);
  for (int i = 0; i < opts.random_starts; ++i) {
    std::vector<double> x(n);
    double sum = 0.0;
    for (double& v : x) {
      v = rng.exponential();
      sum += v;
    }
    for (double& v : x) v /= sum;  // Dirichlet(1) on the simplex
    starts.push_back(std::move(x));
  }

  std::vector<AscentOutcome> outcomes(starts.size());
  int budget = std::min<int>(thread_budget(), static_cast<int>(starts.size()));
  if (budget <= 1) {
    for (std::size_t i = 0; i < starts.size(); ++i) outcomes[i] = ascend(g, starts[i], opts);
  } else {
    // starts are independent; results land in index order, so the reduction
    // below is unaffected by scheduling
    std::vector<std::future<void>> workers;
    std::atomic<std::size_t> next{0};
    for (int w = 0; w < budget; ++w) {
      workers.push_back(std::async(std::launch::async, [&]() {
        while (true) {
          std::size_t i = next.fetch_add(1);
          if (i >= starts.size()) return;
          outcomes[i] = ascend(g, starts[i], opts);
        }
      }));
    }
    for (auto& worker : workers) worker.get();
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < outcomes.size(); ++i) {
    if (outcomes[i].value > outcomes[best].value ||
        (outcomes[i].value == outcomes[best].value &&
         std::lexicographical_compare(outcomes[i].x.begin(), outcomes[i].x.end(),
                                      outcomes[best].x.begin(), outcomes[best].x.end()))) {
      best = i;
    }
  }
  for (const AscentOutcome& o : outcomes) result.iterations += o.accepted_steps;
  result.starts = static_cast<int>(starts.size());
  result.argmax = outcomes[best].x;
  result.value = lagrangian_value(g, SimplexVector{result.argmax});

  std::vector<double> grad = lagrangian_gradient(g, result.argmax);
  double mu = 0.0;
  for (int i = 0; i < n; ++i) mu += result.argmax[i] * grad[i];
  double kkt = 0.0;
  for (int i = 0; i < n; ++i) {
    if (result.argmax[i] > 1e-12) kkt = std::max(kkt, std::abs(grad[i] - mu));
  }
  result.kkt_residual = kkt;
  return result;
}

}  // namespace hspec
