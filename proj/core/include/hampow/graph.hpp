#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hampow {

// Bit-matrix adjacency keeps every hot loop a word-wise intersection, so the
// vertex count is capped to what a dense matrix can afford.
inline constexpr int kMaxVertices = 20000;

using Edge = std::pair<int, int>;

// Subset of 0..n-1 as a bitmask.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n);

  static VertexSet all(int n);
  static VertexSet of(int n, std::initializer_list<int> vs);

  int universe() const { return n_; }
  bool contains(int v) const;
  void insert(int v);
  void erase(int v);
  int count() const;
  bool empty() const { return count() == 0; }
  bool subset_of(const VertexSet& other) const;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& subtract(const VertexSet& other);

  std::vector<int> to_vector() const;
  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  bool operator==(const VertexSet&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Immutable simple graph on vertices 0..n-1. Derived graphs are new values;
// values are safe to share across threads.
class Graph {
 public:
  Graph() = default;

  int order() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  VertexSet neighbors(int v) const;

  // Raw adjacency row of v, one bit per vertex.
  std::span<const std::uint64_t> row(int v) const;
  std::size_t words_per_row() const { return words_; }

  // Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  friend class GraphBuilder;

  int n_ = 0;
  std::size_t words_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Single-owner construction phase; Graph itself has no mutators.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);

  int order() const { return g_.n_; }
  void add_edge(int u, int v);  // rejects loops and out-of-range endpoints
  bool has_edge(int u, int v) const { return g_.has_edge(u, v); }
  Graph build() &&;

 private:
  Graph g_;
};

Graph make_graph(int n, std::span<const Edge> edges);
Graph make_graph(int n, std::initializer_list<Edge> edges);
Graph empty_graph(int n);
Graph complete_graph(int n);

// Edge-set union of two graphs on the same vertex count.
Graph union_graphs(const Graph& a, const Graph& b);

// m-th power of the path P_s / the cycle C_n: vertices at (cyclic) distance
// at most m are joined.
Graph power_path(int s, int m);
Graph power_cycle(int n, int m);

// Intersection of N(u) over u in j; j must be nonempty.
VertexSet joint_neighborhood(const Graph& g, const VertexSet& j);

int min_degree(const Graph& g);

std::size_t induced_edge_count(const Graph& g, const VertexSet& s);

// Throws std::invalid_argument unless entries are distinct and in range.
void validate_tuple(const Graph& g, std::span<const int> tuple, const char* what);

// Text format: first line "n e", then e lines "u v". In strict mode duplicate
// and loop lines are rejected.
Graph read_edge_list(std::istream& in, bool strict = true);
Graph read_edge_list_file(const std::string& path, bool strict = true);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace hampow
