#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hspec {

/// An edge of a general hypergraph: a set of at least two distinct vertices,
/// stored sorted ascending.
struct Edge {
  std::vector<int> vertices;

  Edge() = default;
  Edge(std::initializer_list<int> vs) : vertices(vs) {}
  explicit Edge(std::vector<int> vs) : vertices(std::move(vs)) {}

  int size() const { return static_cast<int>(vertices.size()); }
  bool contains(int v) const;

  bool operator==(const Edge&) const = default;
};

/// Canonical edge order: by size first, then lexicographically on the
/// (sorted) vertex lists. All edge lists in this library are kept in this
/// order so that serialization and floating-point summation are reproducible.
bool edge_less(const Edge& a, const Edge& b);

/// Immutable general hypergraph (R-graph). Edges may have different
/// cardinalities; the set of cardinalities occurring in the edge list is the
/// edge-type set R, its maximum the rank and its minimum the corank.
///
/// Construction validates everything and canonicalizes the edge order; all
/// queries afterwards are pure, so instances are safe to share across threads.
class Hypergraph {
 public:
  /// Throws std::invalid_argument on: n < 1, a vertex id outside [0, n),
  /// a repeated vertex inside an edge, an edge of size < 2, or a duplicate
  /// edge. Vertex lists inside edges may arrive unsorted.
  Hypergraph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_[i]; }
  bool has_edges() const { return !edges_.empty(); }

  /// Maximum edge size. Throws std::domain_error when the edge set is empty.
  int rank() const;
  /// Minimum edge size. Throws std::domain_error when the edge set is empty.
  int corank() const;
  /// Edge-type set R, sorted ascending; empty when the edge set is empty.
  const std::vector<int>& edge_types() const { return edge_types_; }

  int degree(int v) const;
  const std::vector<int>& degrees() const { return degrees_; }
  /// Indices (into edges()) of the edges containing v.
  const std::vector<int>& incident_edges(int v) const;
  /// R(v): the multiset of edge sizes over the edges containing v, sorted.
  std::vector<int> edge_type_multiset(int v) const;

  /// Membership test for a vertex set given in any order.
  bool has_edge(std::vector<int> vertices) const;
  /// True iff u and v share at least one edge.
  bool adjacent(int u, int v) const;

  /// Partition of [0, n) into connected components, each sorted ascending,
  /// ordered by smallest contained vertex. Isolated vertices are singletons.
  std::vector<std::vector<int>> connected_components() const;

  bool operator==(const Hypergraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> degrees_;
  std::vector<std::vector<int>> incidence_;
  std::vector<int> edge_types_;
};

/// Parses the .hg text format:
///   - lines starting with '#' are comments, blank lines are ignored;
///   - the first payload line is "n <vertex count>";
///   - every following payload line is "e <v0> <v1> ..." with distinct
///     0-indexed vertex ids.
/// Duplicate edges are an error, not a silent merge.
/// Throws std::invalid_argument with a line reference on malformed input.
Hypergraph parse_hypergraph(std::string_view text);

/// Reads a .hg file from disk. Throws std::invalid_argument if unreadable.
Hypergraph load_hypergraph(const std::string& path);

/// Canonical serialization; parse(serialize(g)) == g, and serializing equal
/// hypergraphs yields byte-identical text.
std::string serialize_hypergraph(const Hypergraph& g);

/// Complete R-graph on n vertices: every s-subset of [0, n) is an edge, for
/// each s in r. Throws std::invalid_argument when max(r) > n or r contains a
/// value < 2.
Hypergraph complete_r_graph(int n, const std::vector<int>& r);

/// Random R-graph: every candidate s-subset (s in r) is included
/// independently with probability p. Deterministic for a fixed seed.
Hypergraph random_r_graph(int n, const std::vector<int>& r, double p, std::uint64_t seed);

}  // namespace hspec
