#include "hspec/clique.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hspec {

namespace {

// every (size)-subset of `base` extended by `extra` is an edge of g
bool closing_subsets_present(const Hypergraph& g, const std::vector<int>& base, int size,
                             int extra) {
  int m = static_cast<int>(base.size());
  if (size > m) return true;
  std::vector<int> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> probe(size + 1);
  while (true) {
    for (int j = 0; j < size; ++j) probe[j] = base[idx[j]];
    probe[size] = extra;
    if (!g.has_edge(probe)) return false;
    int i = size - 1;
    while (i >= 0 && idx[i] == m - size + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
  return true;
}

// C stays a clique when v joins it: all newly required subsets contain v
bool can_extend(const Hypergraph& g, const std::vector<int>& clique, int v) {
  int target = static_cast<int>(clique.size()) + 1;
  for (int s : g.edge_types()) {
    if (s > target) break;
    if (!closing_subsets_present(g, clique, s - 1, v)) return false;
  }
  return true;
}

}  // namespace

bool is_clique(const Hypergraph& g, const std::vector<int>& vertices) {
  std::vector<int> s = vertices;
  for (int v : s) {
    if (v < 0 || v >= g.vertex_count())
      throw std::out_of_range("vertex id out of range: " + std::to_string(v));
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  std::vector<int> partial;
  for (int v : s) {
    if (!can_extend(g, partial, v)) return false;
    partial.push_back(v);
  }
  return true;
}

CliqueResult greedy_clique(const Hypergraph& g) {
  CliqueResult result;
  if (!g.has_edges()) {
    result.vertices = {0};
    result.omega = 1;
    return result;
  }
  std::vector<int> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&g](int a, int b) { return g.degrees()[a] > g.degrees()[b]; });
  std::vector<int> clique;  // kept sorted
  for (int v : order) {
    if (can_extend(g, clique, v)) {
      clique.insert(std::lower_bound(clique.begin(), clique.end(), v), v);
    }
  }
  result.vertices = clique;
  result.omega = static_cast<int>(clique.size());
  return result;
}

namespace {

struct Search {
  const Hypergraph& g;
  std::vector<std::vector<char>> compat;
  std::int64_t node_cap;
  std::int64_t nodes = 0;
  bool aborted = false;
  int best_size = 0;
  std::vector<int> best;
  std::vector<int> current;

  void dfs(const std::vector<int>& candidates) {
    ++nodes;
    if (nodes > node_cap) {
      aborted = true;
      return;
    }
    int csize = static_cast<int>(current.size());
    int psize = static_cast<int>(candidates.size());
    if (csize + psize <= best_size) return;
    for (int idx = 0; idx < psize; ++idx) {
      if (aborted) return;
      if (csize + (psize - idx) <= best_size) return;
      int v = candidates[idx];
      if (!can_extend(g, current, v)) continue;
      current.push_back(v);
      if (static_cast<int>(current.size()) > best_size) {
        best_size = static_cast<int>(current.size());
        best = current;
      }
      std::vector<int> next;
      next.reserve(psize - idx - 1);
      for (int j = idx + 1; j < psize; ++j) {
        if (compat[v][candidates[j]]) next.push_back(candidates[j]);
      }
      dfs(next);
      current.pop_back();
    }
  }
};

}  // namespace

CliqueResult max_clique_exact(const Hypergraph& g, const CliqueOptions& opts) {
  CliqueResult result;
  if (!g.has_edges()) {
    result.vertices = {0};
    result.omega = 1;
    result.optimal = true;
    return result;
  }

  int n = g.vertex_count();
  bool pairs_required = g.corank() == 2;
  Search search{.g = g, .compat = {}, .node_cap = opts.node_cap};
  search.compat.assign(n, std::vector<char>(n, 0));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      bool ok = pairs_required ? g.has_edge({u, v}) : g.adjacent(u, v);
      search.compat[u][v] = search.compat[v][u] = static_cast<char>(ok);
    }
  }

  // every corank-sized edge is a clique, so omega >= corank; seeding one
  // below the target keeps the first maximum clique found lexicographically
  // smallest
  CliqueResult greedy = greedy_clique(g);
  search.best_size = std::max(greedy.omega, g.corank()) - 1;

  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  search.dfs(all);

  if (static_cast<int>(search.best.size()) < greedy.omega) {
    search.best = greedy.vertices;  // aborted before beating the greedy seed
  }
  result.vertices = search.best;
  result.omega = static_cast<int>(search.best.size());
  result.nodes_explored = search.nodes;
  result.optimal = !search.aborted;
  return result;
}

}  // namespace hspec
