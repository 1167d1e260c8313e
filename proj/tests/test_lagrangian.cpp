#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hspec/clique.hpp"
#include "hspec/lagrangian.hpp"
#include "hspec/tensor_ops.hpp"
#include "hspec/util.hpp"

using namespace hspec;

namespace {

// drop vertex v and its edges, reindexing the survivors
Hypergraph delete_vertex(const Hypergraph& g, int v) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (e.contains(v)) continue;
    Edge mapped;
    for (int u : e.vertices) mapped.vertices.push_back(u > v ? u - 1 : u);
    edges.push_back(std::move(mapped));
  }
  return Hypergraph(g.vertex_count() - 1, std::move(edges));
}

}  // namespace

TEST_CASE("lagrangian_value on uniform vectors") {
  Hypergraph k4 = complete_r_graph(4, {2});
  CHECK(lagrangian_value(k4, SimplexVector::uniform(4)) ==
        doctest::Approx(3.0 / 8.0).epsilon(1e-13));

  Hypergraph g = complete_r_graph(4, {2, 3});
  CHECK(lagrangian_value(g, SimplexVector::uniform(4)) ==
        doctest::Approx(10.0 / 64.0).epsilon(1e-13));

  // an indicator vector kills every edge polynomial
  SimplexVector indicator = SimplexVector::uniform_on({2}, 4);
  CHECK(lagrangian_value(g, indicator) == 0.0);
}

TEST_CASE("lagrangian_value validation") {
  Hypergraph g = complete_r_graph(4, {2});
  CHECK_THROWS_AS(lagrangian_value(g, SimplexVector::uniform(5)), std::invalid_argument);
  CHECK_THROWS_AS(lagrangian_value(Hypergraph(3, {}), SimplexVector::uniform(3)),
                  std::domain_error);
  CHECK_THROWS_AS(SimplexVector::checked({0.5, 0.2}), std::invalid_argument);
  CHECK_THROWS_AS(SimplexVector::checked({1.5, -0.5}), std::invalid_argument);
  CHECK(SimplexVector::checked({0.25, 0.75}).values[1] == 0.75);
}

TEST_CASE("clique_support_value closed forms") {
  CHECK(clique_support_value(4, {2, 3}, 3) == doctest::Approx(0.15625).epsilon(1e-14));
  CHECK(clique_support_value(1, {2, 3}, 3) == 0.0);
  for (int n : {2, 3, 4, 7}) {
    CHECK(clique_support_value(n, {2}, 2) ==
          doctest::Approx(0.5 * (1.0 - 1.0 / n)).epsilon(1e-13));
  }
  // sizes above omega contribute nothing
  CHECK(clique_support_value(2, {2, 3}, 3) == doctest::Approx(1.0 / 8.0).epsilon(1e-14));
}

TEST_CASE("optimizer gradient matches finite differences") {
  Rng rng(3);
  const double h = 1e-6;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Hypergraph g = random_r_graph(6, {2, 3}, 0.6, seed);
    if (!g.has_edges()) continue;
    std::vector<double> x(6);
    double sum = 0;
    for (double& v : x) {
      v = rng.uniform(0.1, 1.0);
      sum += v;
    }
    for (double& v : x) v /= sum;
    std::vector<double> grad = lagrangian_gradient(g, x);
    for (int i = 0; i < 6; ++i) {
      std::vector<double> plus = x, minus = x;
      plus[i] += h;
      minus[i] -= h;
      double fd = (lagrangian_value(g, SimplexVector{plus}) -
                   lagrangian_value(g, SimplexVector{minus})) /
                  (2 * h);
      CHECK(grad[i] == doctest::Approx(fd).epsilon(1e-5));
    }
  }
}

TEST_CASE("maximizer reaches the closed form on complete R-graphs") {
  // R-sets for which omega -> clique_support_value(omega, R, k) is
  // nondecreasing, so the full-support point is the true maximum
  for (auto [n, r] : std::vector<std::pair<int, std::vector<int>>>{
           {4, {2}}, {5, {2}}, {4, {2, 3}}, {5, {3}}, {6, {3, 4}}, {4, {3, 4}}}) {
    Hypergraph g = complete_r_graph(n, r);
    LagrangianResult res = maximize_lagrangian(g);
    double expected = clique_support_value(n, r, g.rank());
    CHECK(std::abs(res.value - expected) <= 1e-6);
    CHECK(res.kkt_residual <= 1e-6);
  }
}

TEST_CASE("full-support value is beaten when a small edge type dominates") {
  // when omega -> clique_support_value(omega, R, k) decreases, mass
  // concentrated on one small edge exceeds the full-support value, so the
  // maximum over the simplex is NOT clique_support_value(n, R, k)
  for (auto [n, r] : std::vector<std::pair<int, std::vector<int>>>{
           {6, {2, 3, 4}}, {4, {2, 4}}, {5, {2, 4}}}) {
    Hypergraph g = complete_r_graph(n, r);
    int k = g.rank();
    double full_support = clique_support_value(n, r, k);
    double two_point = clique_support_value(2, r, k);  // = 2^{-k}
    CHECK(two_point > full_support);
    // direct evaluation, no optimizer involved
    CHECK(lagrangian_value(g, SimplexVector::uniform_on({0, 1}, n)) ==
          doctest::Approx(two_point).epsilon(1e-13));
    LagrangianResult res = maximize_lagrangian(g);
    CHECK(res.value >= two_point - 1e-9);  // edge-type start certifies this
  }
}

TEST_CASE("maximizer matches Motzkin-Straus on graphs") {
  int tested = 0;
  for (std::uint64_t seed = 0; tested < 12; ++seed) {
    int n = 5 + static_cast<int>(seed % 5);
    Hypergraph g = random_r_graph(n, {2}, 0.5, seed);
    if (!g.has_edges()) continue;
    int omega = max_clique_exact(g).omega;
    LagrangianResult res = maximize_lagrangian(g);
    CHECK(std::abs(res.value - 0.5 * (1.0 - 1.0 / omega)) <= 1e-4);
    ++tested;
  }
}

TEST_CASE("two disjoint clique copies satisfy the closed form") {
  // two copies of complete_r_graph(3, {2,3}): nonadjacent equal-R(v) pairs exist
  std::vector<Edge> edges;
  for (int base : {0, 3}) {
    edges.push_back(Edge{base, base + 1});
    edges.push_back(Edge{base, base + 2});
    edges.push_back(Edge{base + 1, base + 2});
    edges.push_back(Edge{base, base + 1, base + 2});
  }
  Hypergraph g(6, edges);
  LagrangianResult res = maximize_lagrangian(g);
  CHECK(std::abs(res.value - clique_support_value(3, {2, 3}, 3)) <= 1e-4);
}

TEST_CASE("value is a certified lower bound via the clique start") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    int n = 5 + static_cast<int>(seed % 4);
    Hypergraph g = random_r_graph(n, {2, 3}, 0.45, seed);
    if (!g.has_edges()) continue;
    int omega = max_clique_exact(g).omega;
    LagrangianResult res = maximize_lagrangian(g);
    CHECK(res.value >= clique_support_value(omega, g.edge_types(), g.rank()) - 1e-9);
    // reported value re-evaluates at the argmax
    CHECK(std::abs(res.value - lagrangian_value(g, SimplexVector{res.argmax})) <= 1e-12);
    // argmax feasibility
    double sum = 0;
    for (double v : res.argmax) {
      CHECK(v >= -1e-14);
      sum += v;
    }
    CHECK(std::abs(sum - 1.0) <= 1e-12);
  }
}

TEST_CASE("ascent never falls below its start values") {
  Hypergraph g = random_r_graph(7, {2, 3}, 0.5, 11);
  REQUIRE(g.has_edges());
  LagrangianResult res = maximize_lagrangian(g);
  CHECK(res.value >= lagrangian_value(g, SimplexVector::uniform(7)) - 1e-12);
  CliqueResult clique = max_clique_exact(g);
  CHECK(res.value >=
        lagrangian_value(g, SimplexVector::uniform_on(clique.vertices, 7)) - 1e-12);
}

TEST_CASE("zero-mass vertices can be deleted without changing L") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Hypergraph g = random_r_graph(6, {2, 3}, 0.5, seed);
    if (!g.has_edges()) continue;
    int v = static_cast<int>(seed % 6);
    Hypergraph reduced = delete_vertex(g, v);
    // deletion must keep the rank, else the polynomial degree changes
    if (!reduced.has_edges() || reduced.rank() != g.rank()) continue;
    Rng rng(seed);
    std::vector<double> x(6, 0.0);
    double sum = 0;
    for (int i = 0; i < 6; ++i) {
      if (i == v) continue;
      x[i] = rng.uniform(0.05, 1.0);
      sum += x[i];
    }
    for (double& xi : x) xi /= sum;
    std::vector<double> restricted;
    for (int i = 0; i < 6; ++i)
      if (i != v) restricted.push_back(x[i]);
    CHECK(lagrangian_value(g, SimplexVector{x}) ==
          doctest::Approx(lagrangian_value(reduced, SimplexVector{restricted})).epsilon(1e-12));
  }
}

TEST_CASE("empty edge set gives L = 0") {
  LagrangianResult res = maximize_lagrangian(Hypergraph(4, {}));
  CHECK(res.value == 0.0);
  CHECK(res.argmax == std::vector<double>(4, 0.25));
}

TEST_CASE("restart count is reported") {
  Hypergraph g = complete_r_graph(4, {2});
  LagrangianOptions opts;
  opts.random_starts = 3;
  opts.clique_starts = 2;
  LagrangianResult res = maximize_lagrangian(g, opts);
  CHECK(res.starts >= 5);  // uniform + clique starts + edge-type start + 3 random
  CHECK(res.starts <= 7);
}
