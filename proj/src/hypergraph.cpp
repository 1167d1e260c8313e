#include "hspec/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hspec/util.hpp"

namespace hspec {

bool Edge::contains(int v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool edge_less(const Edge& a, const Edge& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.vertices < b.vertices;
}

Hypergraph::Hypergraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw std::invalid_argument("vertex count must be >= 1");
  for (Edge& e : edges_) {
    if (e.size() < 2) throw std::invalid_argument("edge size must be >= 2");
    std::sort(e.vertices.begin(), e.vertices.end());
    for (int i = 0; i < e.size(); ++i) {
      int v = e.vertices[i];
      if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
      if (i > 0 && e.vertices[i - 1] == v)
        throw std::invalid_argument("repeated vertex in edge: " + std::to_string(v));
    }
  }
  std::sort(edges_.begin(), edges_.end(), edge_less);
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i] == edges_[i - 1]) throw std::invalid_argument("duplicate edge");
  }

  degrees_.assign(n_, 0);
  incidence_.assign(n_, {});
  for (std::size_t idx = 0; idx < edges_.size(); ++idx) {
    for (int v : edges_[idx].vertices) {
      ++degrees_[v];
      incidence_[v].push_back(static_cast<int>(idx));
    }
  }
  for (const Edge& e : edges_) {
    if (edge_types_.empty() || edge_types_.back() != e.size()) edge_types_.push_back(e.size());
  }
}

int Hypergraph::rank() const {
  if (edges_.empty()) throw std::domain_error("rank undefined: empty edge set");
  return edge_types_.back();
}

int Hypergraph::corank() const {
  if (edges_.empty()) throw std::domain_error("corank undefined: empty edge set");
  return edge_types_.front();
}

void Hypergraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range: " + std::to_string(v));
}

int Hypergraph::degree(int v) const {
  check_vertex(v);
  return degrees_[v];
}

const std::vector<int>& Hypergraph::incident_edges(int v) const {
  check_vertex(v);
  return incidence_[v];
}

std::vector<int> Hypergraph::edge_type_multiset(int v) const {
  check_vertex(v);
  std::vector<int> types;
  types.reserve(incidence_[v].size());
  for (int idx : incidence_[v]) types.push_back(edges_[idx].size());
  std::sort(types.begin(), types.end());
  return types;
}

bool Hypergraph::has_edge(std::vector<int> vertices) const {
  std::sort(vertices.begin(), vertices.end());
  Edge probe{std::move(vertices)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), probe, edge_less);
  return it != edges_.end() && *it == probe;
}

bool Hypergraph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  const std::vector<int>& smaller = incidence_[u].size() <= incidence_[v].size() ? incidence_[u] : incidence_[v];
  int other = incidence_[u].size() <= incidence_[v].size() ? v : u;
  for (int idx : smaller) {
    if (edges_[idx].contains(other)) return true;
  }
  return false;
}

std::vector<std::vector<int>> Hypergraph::connected_components() const {
  std::vector<int> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (const Edge& e : edges_) {
    int root = find(e.vertices[0]);
    for (int v : e.vertices) parent[find(v)] = root;
  }
  std::vector<std::vector<int>> buckets(n_);
  for (int v = 0; v < n_; ++v) buckets[find(v)].push_back(v);
  std::vector<std::vector<int>> components;
  for (auto& bucket : buckets) {
    if (!bucket.empty()) components.push_back(std::move(bucket));
  }
  return components;
}

namespace {

int parse_int(std::string_view token, int line_no, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": malformed " + what + " '" +
                                std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
  int n = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string_view> tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "n") {
      if (n >= 0) throw std::invalid_argument("line " + std::to_string(line_no) + ": repeated 'n' line");
      if (tokens.size() != 2) throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 'n <count>'");
      n = parse_int(tokens[1], line_no, "vertex count");
      if (n < 1) throw std::invalid_argument("line " + std::to_string(line_no) + ": vertex count must be >= 1");
    } else if (tokens[0] == "e") {
      if (n < 0) throw std::invalid_argument("line " + std::to_string(line_no) + ": edge before 'n' line");
      Edge e;
      for (std::size_t t = 1; t < tokens.size(); ++t) {
        e.vertices.push_back(parse_int(tokens[t], line_no, "vertex id"));
      }
      if (e.size() < 2) throw std::invalid_argument("line " + std::to_string(line_no) + ": edge size must be >= 2");
      edges.push_back(std::move(e));
    } else {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": unknown directive '" +
                                  std::string(tokens[0]) + "'");
    }
  }
  if (n < 0) throw std::invalid_argument("missing 'n' line");
  return Hypergraph(n, std::move(edges));
}

Hypergraph load_hypergraph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_hypergraph(buffer.str());
}

std::string serialize_hypergraph(const Hypergraph& g) {
  std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += 'e';
    for (int v : e.vertices) {
      out += ' ';
      out += std::to_string(v);
    }
    out += '\n';
  }
  return out;
}

namespace {

void check_edge_types(int n, const std::vector<int>& r) {
  for (int s : r) {
    if (s < 2) throw std::invalid_argument("edge type must be >= 2");
    if (s > n) throw std::invalid_argument("edge type " + std::to_string(s) +
                                           " exceeds vertex count " + std::to_string(n));
  }
}

}  // namespace

Hypergraph complete_r_graph(int n, const std::vector<int>& r) {
  check_edge_types(n, r);
  std::vector<int> sizes = r;
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  std::vector<Edge> edges;
  for (int s : sizes) {
    for_each_subset(n, s, [&](const std::vector<int>& subset) { edges.push_back(Edge{subset}); });
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph random_r_graph(int n, const std::vector<int>& r, double p, std::uint64_t seed) {
  check_edge_types(n, r);
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("inclusion probability must be in [0, 1]");
  std::vector<int> sizes = r;
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int s : sizes) {
    for_each_subset(n, s, [&](const std::vector<int>& subset) {
      if (rng.uniform() < p) edges.push_back(Edge{subset});
    });
  }
  return Hypergraph(n, std::move(edges));
}

}  // namespace hspec
