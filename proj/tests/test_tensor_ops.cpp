#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hspec/hypergraph.hpp"
#include "hspec/tensor_ops.hpp"
#include "hspec/util.hpp"

using namespace hspec;

namespace {

std::vector<double> random_positive(int n, Rng& rng, double lo = 0.05, double hi = 1.0) {
  std::vector<double> x(n);
  for (double& v : x) v = rng.uniform(lo, hi);
  return x;
}

}  // namespace

TEST_CASE("alpha small values") {
  CHECK(static_cast<long>(alpha(3, 3)) == 6);
  CHECK(static_cast<long>(alpha(3, 2)) == 6);
  CHECK(static_cast<long>(alpha(4, 2)) == 14);
  CHECK(static_cast<long>(alpha(2, 2)) == 2);
  CHECK(static_cast<long>(alpha(5, 1)) == 1);
}

TEST_CASE("alpha boundary behaviour") {
  // alpha(k) = k! and alpha(1) = 1 for every order
  uint128 fact = 1;
  for (int k = 1; k <= 12; ++k) {
    fact *= k;
    CHECK(alpha(k, k) == fact);
    CHECK(static_cast<long>(alpha(k, 1)) == 1);
  }
  CHECK_THROWS_AS(alpha(3, 0), std::domain_error);
  CHECK_THROWS_AS(alpha(3, 4), std::domain_error);
  CHECK_THROWS_AS(alpha(21, 2), std::domain_error);
}

TEST_CASE("alpha matches composition enumeration") {
  for (int k = 1; k <= 12; ++k) {
    for (int s = 1; s <= k; ++s) {
      CHECK(alpha(k, s) == alpha_by_compositions(k, s));
    }
  }
  // largest exact case: needs more than 64 bits
  CHECK(alpha(20, 10) == alpha_by_compositions(20, 10));
  CHECK(alpha(20, 10) > uint128(UINT64_MAX) / 2);
}

TEST_CASE("edge polynomial values") {
  std::vector<double> half{0.5, 0.5, 0.5};
  CHECK(edge_poly_value(Edge{0, 1}, half, 2) == doctest::Approx(0.5).epsilon(1e-14));

  std::vector<double> ones{1.0, 1.0, 1.0};
  CHECK(edge_poly_value(Edge{0, 1}, ones, 3) == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(edge_poly_value(Edge{0, 1, 2}, ones, 3) == doctest::Approx(6.0).epsilon(1e-14));
  CHECK_THROWS_AS(edge_poly_value(Edge{0, 1, 2}, ones, 2), std::domain_error);
}

TEST_CASE("edge polynomial equals the composition sum") {
  Rng rng(11);
  for (int k = 2; k <= 10; ++k) {
    for (int s = 2; s <= k; ++s) {
      Edge e;
      for (int i = 0; i < s; ++i) e.vertices.push_back(i);
      std::vector<double> x = random_positive(s, rng);
      double fast = edge_poly_value(e, x, k);
      double slow = edge_poly_value_by_compositions(e, x, k);
      // the alternating sum cancels down from terms of size up to
      // (sum x)^k, so the attainable accuracy is set by that mass
      double mass = 0.0;
      for (unsigned mask = 1; mask < (1u << s); ++mask) {
        double st = 0.0;
        for (int i = 0; i < s; ++i)
          if (mask & (1u << i)) st += x[i];
        mass += ipow(st, k);
      }
      CHECK(std::abs(fast - slow) <= 1e-14 * mass);
      if (s <= 6) CHECK(fast == doctest::Approx(slow).epsilon(1e-12));
    }
  }
}

TEST_CASE("edge polynomial homogeneity") {
  Rng rng(5);
  Edge e{0, 2, 3};
  for (int k : {3, 4, 5}) {
    std::vector<double> x = random_positive(5, rng);
    std::vector<double> tx = x;
    double t = 1.7;
    for (double& v : tx) v *= t;
    CHECK(edge_poly_value(e, tx, k) ==
          doctest::Approx(ipow(t, k) * edge_poly_value(e, x, k)).epsilon(1e-12));
  }
}

TEST_CASE("edge polynomial gradient closed forms") {
  std::vector<double> ab{0.3, 0.9};
  std::vector<double> g2 = edge_poly_gradient(Edge{0, 1}, ab, 2);
  CHECK(g2[0] == doctest::Approx(2 * 0.9).epsilon(1e-14));  // P = 2ab
  CHECK(g2[1] == doctest::Approx(2 * 0.3).epsilon(1e-14));

  std::vector<double> ones{1.0, 1.0};
  std::vector<double> g3 = edge_poly_gradient(Edge{0, 1}, ones, 3);
  CHECK(g3[0] == doctest::Approx(9.0).epsilon(1e-14));  // P = 3a^2 b + 3 a b^2
  CHECK(g3[1] == doctest::Approx(9.0).epsilon(1e-14));

  // homogeneity degree k-1 >= 1 kills the gradient at x = 0 on e
  std::vector<double> zero{0.0, 0.0, 5.0};
  for (double gi : edge_poly_gradient(Edge{0, 1}, zero, 4)) CHECK(gi == 0.0);
}

TEST_CASE("gradient matches central finite differences") {
  Rng rng(23);
  const double h = 1e-6;
  for (int trial = 0; trial < 10; ++trial) {
    int k = 2 + static_cast<int>(rng.below(4));
    int s = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(k, 4) - 1)));
    Edge e;
    for (int i = 0; i < s; ++i) e.vertices.push_back(i * 2);  // spread over the vector
    std::vector<double> x = random_positive(2 * s, rng);
    std::vector<double> grad = edge_poly_gradient(e, x, k);
    for (int j = 0; j < s; ++j) {
      std::vector<double> plus = x, minus = x;
      plus[e.vertices[j]] += h;
      minus[e.vertices[j]] -= h;
      double fd = (edge_poly_value(e, plus, k) - edge_poly_value(e, minus, k)) / (2 * h);
      CHECK(grad[j] == doctest::Approx(fd).epsilon(1e-5));
    }
  }
}

TEST_CASE("gradient Euler identity: x . grad = k P") {
  Rng rng(31);
  Edge e{0, 1, 2, 3};
  for (int k : {4, 5, 6}) {
    std::vector<double> x = random_positive(4, rng);
    std::vector<double> grad = edge_poly_gradient(e, x, k);
    double dot = 0;
    for (int j = 0; j < 4; ++j) dot += x[e.vertices[j]] * grad[j];
    CHECK(dot == doctest::Approx(k * edge_poly_value(e, x, k)).epsilon(1e-12));
  }
}

TEST_CASE("adjacency apply on tiny instances") {
  Hypergraph single(2, {Edge{0, 1}});
  std::vector<double> y = adjacency_apply(single, {1.0, 1.0});
  CHECK(y[0] == doctest::Approx(1.0));
  CHECK(y[1] == doctest::Approx(1.0));

  Hypergraph g = complete_r_graph(4, {2, 3});
  std::vector<double> yc = adjacency_apply(g, std::vector<double>(4, 1.0));
  for (double yi : yc) CHECK(yi == doctest::Approx(6.0).epsilon(1e-13));

  Hypergraph iso(3, {Edge{0, 1}});
  std::vector<double> yi = adjacency_apply(iso, {0.4, 0.7, 0.9});
  CHECK(yi[2] == 0.0);

  CHECK_THROWS_AS(adjacency_apply(g, std::vector<double>(3, 1.0)), std::invalid_argument);
  CHECK_THROWS_AS(adjacency_apply(Hypergraph(3, {}), std::vector<double>(3, 1.0)),
                  std::domain_error);
}

TEST_CASE("row-sum identity: apply at all-ones gives degrees") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    int n = 4 + static_cast<int>(seed % 5);
    Hypergraph g = random_r_graph(n, {2, 3, 4}, 0.4, seed);
    if (!g.has_edges()) continue;
    std::vector<double> ones(n, 1.0);
    std::vector<double> ya = adjacency_apply(g, ones);
    std::vector<double> yq = signless_apply(g, ones);
    for (int v = 0; v < n; ++v) {
      CHECK(std::abs(ya[v] - g.degree(v)) <= 1e-12);
      CHECK(std::abs(yq[v] - 2.0 * g.degree(v)) <= 1e-12);
    }
  }
}

TEST_CASE("signless apply degree term") {
  Hypergraph single(2, {Edge{0, 1}});
  std::vector<double> y = signless_apply(single, {1.0, 0.0});
  CHECK(y[0] == doctest::Approx(1.0));  // degree term only
  CHECK(y[1] == doctest::Approx(1.0));  // adjacency term only
}

TEST_CASE("rayleigh forms") {
  Hypergraph k4 = complete_r_graph(4, {2});
  std::vector<double> x(4, 0.5);  // k-norm 1 for k = 2
  CHECK(rayleigh_adjacency(k4, x) == doctest::Approx(3.0).epsilon(1e-13));

  CHECK(rayleigh_adjacency(k4, std::vector<double>(4, 0.0)) == 0.0);

  Hypergraph tri(3, {Edge{0, 1, 2}});
  double t = 0.6;
  CHECK(rayleigh_adjacency(tri, {t, t, t}) == doctest::Approx(3 * t * t * t).epsilon(1e-13));
}

TEST_CASE("rayleigh equals x . apply") {
  Rng rng(77);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Hypergraph g = random_r_graph(6, {2, 3}, 0.5, seed);
    if (!g.has_edges()) continue;
    std::vector<double> x = random_positive(6, rng);
    std::vector<double> ya = adjacency_apply(g, x);
    std::vector<double> yq = signless_apply(g, x);
    double dot_a = 0, dot_q = 0;
    for (int i = 0; i < 6; ++i) {
      dot_a += x[i] * ya[i];
      dot_q += x[i] * yq[i];
    }
    CHECK(rayleigh_adjacency(g, x) == doctest::Approx(dot_a).epsilon(1e-12));
    CHECK(rayleigh_signless(g, x) == doctest::Approx(dot_q).epsilon(1e-12));
  }
}

TEST_CASE("apply homogeneity of degree k-1") {
  Rng rng(99);
  Hypergraph g = complete_r_graph(5, {2, 3});
  std::vector<double> x = random_positive(5, rng);
  std::vector<double> tx = x;
  for (double& v : tx) v *= 2.0;
  std::vector<double> y = adjacency_apply(g, x);
  std::vector<double> yt = adjacency_apply(g, tx);
  for (int i = 0; i < 5; ++i) CHECK(yt[i] == doctest::Approx(4.0 * y[i]).epsilon(1e-12));
}

TEST_CASE("dense oracle entries for a single graph edge") {
  Hypergraph g(3, {Edge{0, 1}});
  DenseTensor t = DenseTensor::adjacency(g);
  CHECK(t.entry({0, 1}) == doctest::Approx(1.0));
  CHECK(t.entry({1, 0}) == doctest::Approx(1.0));
  CHECK(t.entry({0, 0}) == 0.0);
  CHECK(t.entry({2, 1}) == 0.0);
}

TEST_CASE("dense oracle entries for one edge inside an order-3 tensor") {
  Hypergraph g(3, {Edge{0, 1}, Edge{0, 1, 2}});  // rank 3
  DenseTensor t = DenseTensor::adjacency(g);
  int nonzero_pair = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int l = 0; l < 3; ++l) {
        double v = t.entry({i, j, l});
        bool support_01 = (i < 2 && j < 2 && l < 2) && (i + j + l > 0) && (i + j + l < 3);
        if (support_01) {
          CHECK(v == doctest::Approx(2.0 / 6.0));  // s/alpha(s) = 2/6
          ++nonzero_pair;
        }
      }
  CHECK(nonzero_pair == 6);  // alpha(2) surjective tuples
  CHECK(t.entry({0, 1, 2}) == doctest::Approx(0.5));  // 3/alpha(3) = 3/6
}

TEST_CASE("dense oracle nonzero count and entry mass per edge") {
  Hypergraph g = complete_r_graph(4, {2, 3});
  int k = g.rank();
  DenseTensor t = DenseTensor::adjacency(g);
  // group entries by support
  double total = 0.0;
  for (double v : t.entries()) total += v;
  double expected = 0.0;
  for (const Edge& e : g.edges()) expected += e.size();
  CHECK(total == doctest::Approx(expected).epsilon(1e-12));

  // per-edge count: alpha(s) tuples carry s/alpha(s) each
  int nonzero = 0;
  for (double v : t.entries()) nonzero += v != 0.0;
  long expected_nonzero = 0;
  for (const Edge& e : g.edges()) expected_nonzero += static_cast<long>(alpha(k, e.size()));
  CHECK(nonzero == expected_nonzero);
}

TEST_CASE("dense oracle entries are symmetric") {
  Hypergraph g(4, {Edge{0, 1}, Edge{1, 2, 3}});
  DenseTensor t = DenseTensor::adjacency(g);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int l = 0; l < 4; ++l) {
        double v = t.entry({i, j, l});
        CHECK(t.entry({i, l, j}) == v);
        CHECK(t.entry({j, i, l}) == v);
        CHECK(t.entry({j, l, i}) == v);
        CHECK(t.entry({l, i, j}) == v);
        CHECK(t.entry({l, j, i}) == v);
      }
}

TEST_CASE("dense oracle agrees with the matrix-free paths") {
  Rng rng(1234);
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    int n = 4 + static_cast<int>(seed % 3);
    Hypergraph g = random_r_graph(n, {2, 3, 4}, 0.5, seed);
    if (!g.has_edges()) continue;
    DenseTensor ta = DenseTensor::adjacency(g);
    DenseTensor tq = DenseTensor::signless(g);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<double> x = random_positive(n, rng);
      std::vector<double> fast_a = adjacency_apply(g, x);
      std::vector<double> slow_a = ta.apply(x);
      std::vector<double> fast_q = signless_apply(g, x);
      std::vector<double> slow_q = tq.apply(x);
      for (int i = 0; i < n; ++i) {
        CHECK(std::abs(fast_a[i] - slow_a[i]) <= 1e-10);
        CHECK(std::abs(fast_q[i] - slow_q[i]) <= 1e-10);
      }
      CHECK(std::abs(rayleigh_adjacency(g, x) - ta.rayleigh(x)) <= 1e-10);
      CHECK(std::abs(rayleigh_signless(g, x) - tq.rayleigh(x)) <= 1e-10);
    }
  }
}

TEST_CASE("dense oracle size cap") {
  Hypergraph g = complete_r_graph(12, {4});
  CHECK_THROWS_AS(DenseTensor::adjacency(g, 1000), std::length_error);
}

TEST_CASE("maclaurin means on hand-checked vectors") {
  std::vector<double> constant{1.3, 1.3, 1.3, 1.3};
  std::vector<double> mc = maclaurin_means(constant);
  for (std::size_t j = 0; j < mc.size(); ++j) {
    CHECK(std::pow(mc[j], 1.0 / (j + 1)) == doctest::Approx(1.3).epsilon(1e-13));
  }
  CHECK(maclaurin_chain_tight(mc));

  std::vector<double> m2 = maclaurin_means({1.0, 2.0});
  CHECK(m2[0] == doctest::Approx(1.5));
  CHECK(m2[1] == doctest::Approx(2.0));
  CHECK(1.5 >= std::sqrt(2.0));

  std::vector<double> m3 = maclaurin_means({1.0, 2.0, 3.0});
  CHECK(m3[0] == doctest::Approx(2.0));
  CHECK(m3[1] == doctest::Approx(11.0 / 3.0));
  CHECK(m3[2] == doctest::Approx(6.0));
  CHECK(maclaurin_chain_holds(m3));
  CHECK_FALSE(maclaurin_chain_tight(m3));

  CHECK_THROWS_AS(maclaurin_means({1.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(maclaurin_means({1.0, -2.0}), std::domain_error);
}

TEST_CASE("maclaurin chain on random vectors, equality only for constants") {
  Rng rng(4242);
  for (int trial = 0; trial < 1000; ++trial) {
    int m = 2 + static_cast<int>(rng.below(9));
    std::vector<double> x = random_positive(m, rng, 0.1, 2.0);
    std::vector<double> means = maclaurin_means(x);
    CHECK(maclaurin_chain_holds(means));
    double spread = 0.0;
    for (double v : x) spread = std::max(spread, std::abs(v - x[0]));
    if (maclaurin_chain_tight(means, 1e-9)) CHECK(spread <= 1e-7);
  }
}
