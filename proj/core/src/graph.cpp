#include "hampow/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace hampow {

namespace {

std::size_t words_for(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
  }
}

}  // namespace

VertexSet::VertexSet(int n) : n_(n), words_(words_for(n), 0) { check_order(n); }

VertexSet VertexSet::all(int n) {
  VertexSet s(n);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~0ULL;
  const int tail = n % 64;
  if (tail != 0 && !s.words_.empty()) s.words_.back() = (1ULL << tail) - 1;
  return s;
}

VertexSet VertexSet::of(int n, std::initializer_list<int> vs) {
  VertexSet s(n);
  for (int v : vs) s.insert(v);
  return s;
}

bool VertexSet::contains(int v) const {
  if (v < 0 || v >= n_) return false;
  return (words_[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1ULL;
}

void VertexSet::insert(int v) {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
  words_[static_cast<std::size_t>(v) / 64] |= 1ULL << (v % 64);
}

void VertexSet::erase(int v) {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
  words_[static_cast<std::size_t>(v) / 64] &= ~(1ULL << (v % 64));
}

int VertexSet::count() const {
  int c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::subset_of(const VertexSet& other) const {
  if (n_ != other.n_) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  if (n_ != other.n_) throw std::invalid_argument("vertex sets over different universes");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  if (n_ != other.n_) throw std::invalid_argument("vertex sets over different universes");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::subtract(const VertexSet& other) {
  if (n_ != other.n_) throw std::invalid_argument("vertex sets over different universes");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      const int b = std::countr_zero(bits);
      out.push_back(static_cast<int>(w * 64) + b);
      bits &= bits - 1;
    }
  }
  return out;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  return (bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] >>
          (v % 64)) &
         1ULL;
}

int Graph::degree(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
  int d = 0;
  for (std::size_t w = 0; w < words_; ++w) {
    d += std::popcount(bits_[static_cast<std::size_t>(v) * words_ + w]);
  }
  return d;
}

VertexSet Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
  VertexSet s(n_);
  auto r = row(v);
  std::copy(r.begin(), r.end(), s.words().begin());
  return s;
}

std::span<const std::uint64_t> Graph::row(int v) const {
  return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u) {
    auto r = row(u);
    for (std::size_t w = (static_cast<std::size_t>(u) + 1) / 64; w < words_; ++w) {
      std::uint64_t bits = r[w];
      if (static_cast<int>(w * 64) <= u) bits &= ~((2ULL << (u % 64)) - 1);
      while (bits) {
        const int v = static_cast<int>(w * 64) + std::countr_zero(bits);
        out.emplace_back(u, v);
        bits &= bits - 1;
      }
    }
  }
  return out;
}

GraphBuilder::GraphBuilder(int n) {
  check_order(n);
  g_.n_ = n;
  g_.words_ = words_for(n);
  g_.bits_.assign(static_cast<std::size_t>(n) * g_.words_, 0);
}

void GraphBuilder::add_edge(int u, int v) {
  if (u < 0 || u >= g_.n_ || v < 0 || v >= g_.n_) {
    throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + ", " +
                                std::to_string(v) + ")");
  }
  if (u == v) throw std::invalid_argument("loop edge (" + std::to_string(u) + ")");
  if (g_.has_edge(u, v)) return;
  g_.bits_[static_cast<std::size_t>(u) * g_.words_ + static_cast<std::size_t>(v) / 64] |=
      1ULL << (v % 64);
  g_.bits_[static_cast<std::size_t>(v) * g_.words_ + static_cast<std::size_t>(u) / 64] |=
      1ULL << (u % 64);
  ++g_.edge_count_;
}

Graph GraphBuilder::build() && { return std::move(g_); }

Graph make_graph(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

Graph make_graph(int n, std::initializer_list<Edge> edges) {
  return make_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph empty_graph(int n) { return GraphBuilder(n).build(); }

Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  }
  return std::move(b).build();
}

Graph union_graphs(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("union of graphs with different vertex counts");
  }
  GraphBuilder out(a.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(u, v);
  return std::move(out).build();
}

Graph power_path(int s, int m) {
  if (s < 1) throw std::invalid_argument("power_path: need s >= 1");
  if (m < 1) throw std::invalid_argument("power_path: need m >= 1");
  GraphBuilder b(s);
  for (int u = 0; u < s; ++u) {
    for (int v = u + 1; v < s && v - u <= m; ++v) b.add_edge(u, v);
  }
  return std::move(b).build();
}

Graph power_cycle(int n, int m) {
  if (n < 3) throw std::invalid_argument("power_cycle: need n >= 3");
  if (m < 1) throw std::invalid_argument("power_cycle: need m >= 1");
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int d = std::min(v - u, n - (v - u));
      if (d <= m) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

VertexSet joint_neighborhood(const Graph& g, const VertexSet& j) {
  if (j.universe() != g.order()) {
    throw std::invalid_argument("joint_neighborhood: set universe mismatch");
  }
  if (j.empty()) throw std::invalid_argument("joint_neighborhood: empty set");
  VertexSet acc = VertexSet::all(g.order());
  for (int v : j.to_vector()) acc &= g.neighbors(v);
  return acc;
}

int min_degree(const Graph& g) {
  if (g.order() < 1) throw std::invalid_argument("min_degree: empty graph");
  int best = g.degree(0);
  for (int v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

std::size_t induced_edge_count(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) {
    throw std::invalid_argument("induced_edge_count: set universe mismatch");
  }
  std::size_t twice = 0;
  for (int v : s.to_vector()) {
    auto r = g.row(v);
    auto sw = s.words();
    for (std::size_t w = 0; w < r.size(); ++w) twice += std::popcount(r[w] & sw[w]);
  }
  return twice / 2;
}

void validate_tuple(const Graph& g, std::span<const int> tuple, const char* what) {
  std::unordered_set<int> seen;
  for (int v : tuple) {
    if (v < 0 || v >= g.order()) {
      throw std::invalid_argument(std::string(what) + ": vertex out of range");
    }
    if (!seen.insert(v).second) {
      throw std::invalid_argument(std::string(what) + ": repeated vertex");
    }
  }
}

Graph read_edge_list(std::istream& in, bool strict) {
  int n = 0;
  long long e = 0;
  if (!(in >> n >> e)) throw std::runtime_error("edge list: malformed header");
  if (e < 0) throw std::runtime_error("edge list: negative edge count");
  GraphBuilder b(n);
  for (long long i = 0; i < e; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) {
      throw std::runtime_error("edge list: expected " + std::to_string(e) + " edges, got " +
                               std::to_string(i));
    }
    if (strict && u == v) {
      throw std::runtime_error("edge list: loop at line " + std::to_string(i + 2));
    }
    if (strict && b.has_edge(u, v)) {
      throw std::runtime_error("edge list: duplicate edge at line " + std::to_string(i + 2));
    }
    if (u == v && !strict) continue;
    b.add_edge(u, v);
  }
  return std::move(b).build();
}

Graph read_edge_list_file(const std::string& path, bool strict) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return read_edge_list(in, strict);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace hampow
