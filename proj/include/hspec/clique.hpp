#pragma once

#include <cstdint>
#include <vector>

#include "hspec/hypergraph.hpp"

namespace hspec {

struct CliqueOptions {
  // branch-and-bound node budget; on exhaustion the best clique found so far
  // is returned with optimal = false
  std::int64_t node_cap = 10'000'000;
};

struct CliqueResult {
  std::vector<int> vertices;  // sorted ascending
  int omega = 0;
  std::int64_t nodes_explored = 0;
  bool optimal = false;
};

/// Clique test for R-graphs: S is a clique iff for every edge type s in R
/// with s <= |S|, every s-subset of S is an edge. Sizes in R larger than |S|
/// impose nothing, so sets smaller than min(R) are vacuously cliques.
/// Throws std::out_of_range on a vertex id outside [0, n).
bool is_clique(const Hypergraph& g, const std::vector<int>& vertices);

/// Deterministic greedy extension in (degree desc, id asc) order; a lower
/// bound for omega. Returns size 1 for an empty edge set (omega convention).
CliqueResult greedy_clique(const Hypergraph& g);

/// Exact maximum clique by depth-first branch and bound over the hereditary
/// clique property, pruned by the |C| + |P| bound and by pair compatibility
/// (two vertices can share a clique of size >= min(R) only if they share an
/// edge, and if 2 is in R only if they form one). Returns the
/// lexicographically smallest maximum clique. If the node cap is exhausted,
/// the result carries optimal = false and the best clique found.
CliqueResult max_clique_exact(const Hypergraph& g, const CliqueOptions& opts = {});

}  // namespace hspec
