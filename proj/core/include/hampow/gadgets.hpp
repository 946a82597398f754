#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hampow/graph.hpp"
#include "hampow/rational.hpp"

namespace hampow {

// The tuple (k, l, r) with m = k*l + r. The strong regime l >= r(r+1) is
// where the clique density l/2 dominates every braid subgraph.
struct ProblemParams {
  int k = 1;
  int ell = 2;
  int r = 1;

  int m() const { return k * ell + r; }
  bool strong_regime() const { return ell >= r * (r + 1); }
  void validate() const;  // k >= 1, ell >= 2, 1 <= r <= ell

  static ProblemParams checked(int k, int ell, int r);
};

struct VertexLabel {
  std::string role;  // "u" for blow-up classes, "b<copy>" for braid copies
  int segment = 0;
  int position = 0;
};

// A graph whose vertices carry semantic addresses, so tests and verifiers can
// name the construction's segments and classes deterministically.
struct LabeledGadget {
  Graph graph;
  std::vector<VertexLabel> labels;  // one per vertex

  std::vector<int> segment_members(const std::string& role, int segment) const;
};

// Replace vertex i of f by an independent block of sizes[i] consecutive ids;
// edges become complete bipartite graphs. Size 0 yields an empty class.
LabeledGadget blow_up(const Graph& f, std::span<const int> sizes);
LabeledGadget blow_up(const Graph& f, std::initializer_list<int> sizes);

// Triangular bridge pattern: v[i] adjacent to u[0..i] for every i.
bool check_r_bridge(const Graph& g, std::span<const int> v, std::span<const int> u, int r);

// t cliques K_l in a row; the last r vertices of each clique and the first r
// of the next are r-bridged. t*l vertices, t*C(l,2) + (t-1)*C(r+1,2) edges.
LabeledGadget braid(int ell, int r, int t);

// s vertex-disjoint translated copies of braid(ell, r, t).
LabeledGadget multi_braid(int s, int ell, int r, int t);

// multi_braid(k+1, ell, r, 2) with the last ell-r vertices of the second
// clique removed in copies 0 and k, ids compacted. 2m vertices,
// 2k*C(l,2) + 2*C(r,2) + (k+1)*C(r+1,2) edges.
LabeledGadget b_minus(const ProblemParams& params);

// Parameters of the extremal lower-bound construction: a complete
// (k+1)-partite graph overlaid with complete bipartite graphs between W_i
// (the first ceil(eps*n) ids of part i) and the rest of the part.
struct LowerBoundSpec {
  int n = 0;
  int k = 1;
  Rational eps{0, 1};

  void validate() const;  // n >= k+1, eps >= 0
  std::vector<int> part_sizes() const;  // remainder goes to the lowest-indexed parts
  std::vector<int> part_starts() const;
  int w_size() const;  // ceil(eps * n), clamped to the smallest part

  // Reference value (2(m+1)(k+1))^-1; not enforced.
  static Rational reference_eps0(int k, int m);
  // The construction's analysis wants n >= 4(k+2)(m+1); smaller n is accepted.
  bool below_recommended_n(int m) const;
};

Graph lower_bound_graph(const LowerBoundSpec& spec);

VertexSet lower_bound_w_set(const LowerBoundSpec& spec);

// Sidecar format, one line per vertex: "vertex role segment position".
void write_labels(std::ostream& out, const LabeledGadget& gadget);
std::vector<VertexLabel> read_labels(std::istream& in, int n);

}  // namespace hampow
