#include "hampow/gadgets.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace hampow {

namespace {

// Cliques on each segment plus the triangular bridge between consecutive
// segments: last r of segments[i] against first r of segments[i+1].
void add_braid_edges(GraphBuilder& b, const std::vector<std::vector<int>>& segments, int r) {
  for (const auto& seg : segments) {
    for (std::size_t i = 0; i < seg.size(); ++i) {
      for (std::size_t j = i + 1; j < seg.size(); ++j) b.add_edge(seg[i], seg[j]);
    }
  }
  for (std::size_t s = 0; s + 1 < segments.size(); ++s) {
    const auto& a = segments[s];
    const auto& c = segments[s + 1];
    if (static_cast<int>(a.size()) < r || static_cast<int>(c.size()) < r) {
      throw std::invalid_argument("braid: segment shorter than bridge width");
    }
    for (int i = 0; i < r; ++i) {
      const int vi = a[a.size() - r + i];
      for (int j = 0; j <= i; ++j) b.add_edge(vi, c[j]);
    }
  }
}

void check_braid_params(int ell, int r, int t) {
  if (t < 1) throw std::invalid_argument("braid: need t >= 1");
  if (ell < 2) throw std::invalid_argument("braid: need ell >= 2");
  if (r < 1 || r > ell) throw std::invalid_argument("braid: need 1 <= r <= ell");
}

}  // namespace

void ProblemParams::validate() const {
  if (k < 1) throw std::invalid_argument("params: need k >= 1");
  if (ell < 2) throw std::invalid_argument("params: need ell >= 2");
  if (r < 1 || r > ell) throw std::invalid_argument("params: need 1 <= r <= ell");
}

ProblemParams ProblemParams::checked(int k, int ell, int r) {
  ProblemParams p{k, ell, r};
  p.validate();
  return p;
}

std::vector<int> LabeledGadget::segment_members(const std::string& role, int segment) const {
  std::vector<int> out;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (labels[v].role == role && labels[v].segment == segment) out.push_back(static_cast<int>(v));
  }
  return out;
}

LabeledGadget blow_up(const Graph& f, std::span<const int> sizes) {
  if (static_cast<int>(sizes.size()) != f.order()) {
    throw std::invalid_argument("blow_up: sizes length must equal vertex count");
  }
  for (int s : sizes) {
    if (s < 0) throw std::invalid_argument("blow_up: negative class size");
  }
  const long long total = std::accumulate(sizes.begin(), sizes.end(), 0LL);
  if (total > kMaxVertices) throw std::invalid_argument("blow_up: too many vertices");

  std::vector<int> start(sizes.size() + 1, 0);
  for (std::size_t i = 0; i < sizes.size(); ++i) start[i + 1] = start[i] + sizes[i];

  GraphBuilder b(static_cast<int>(total));
  for (auto [x, y] : f.edges()) {
    for (int u = start[x]; u < start[x + 1]; ++u) {
      for (int v = start[y]; v < start[y + 1]; ++v) b.add_edge(u, v);
    }
  }

  LabeledGadget out{std::move(b).build(), {}};
  out.labels.resize(static_cast<std::size_t>(total));
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    for (int p = 0; p < sizes[i]; ++p) {
      out.labels[static_cast<std::size_t>(start[i] + p)] = {"u", static_cast<int>(i), p};
    }
  }
  return out;
}

LabeledGadget blow_up(const Graph& f, std::initializer_list<int> sizes) {
  return blow_up(f, std::span<const int>(sizes.begin(), sizes.size()));
}

bool check_r_bridge(const Graph& g, std::span<const int> v, std::span<const int> u, int r) {
  if (static_cast<int>(v.size()) != r || static_cast<int>(u.size()) != r) {
    throw std::invalid_argument("check_r_bridge: tuples must have length r");
  }
  std::vector<int> both(v.begin(), v.end());
  both.insert(both.end(), u.begin(), u.end());
  validate_tuple(g, both, "check_r_bridge");

  bool forward = true;
  for (int i = 0; i < r && forward; ++i) {
    for (int j = 0; j <= i; ++j) {
      if (!g.has_edge(v[i], u[j])) {
        forward = false;
        break;
      }
    }
  }
  // The reversed formulation must agree: u[i] adjacent to v[i..r-1].
  bool backward = true;
  for (int i = 0; i < r && backward; ++i) {
    for (int j = i; j < r; ++j) {
      if (!g.has_edge(u[i], v[j])) {
        backward = false;
        break;
      }
    }
  }
  if (forward != backward) throw std::logic_error("check_r_bridge: formulations disagree");
  return forward;
}

LabeledGadget braid(int ell, int r, int t) { return multi_braid(1, ell, r, t); }

LabeledGadget multi_braid(int s, int ell, int r, int t) {
  if (s < 1) throw std::invalid_argument("multi_braid: need s >= 1");
  check_braid_params(ell, r, t);
  const long long total = static_cast<long long>(s) * t * ell;
  if (total > kMaxVertices) throw std::invalid_argument("multi_braid: too many vertices");

  GraphBuilder b(static_cast<int>(total));
  LabeledGadget out;
  out.labels.resize(static_cast<std::size_t>(total));
  for (int c = 0; c < s; ++c) {
    const int base = c * t * ell;
    std::vector<std::vector<int>> segments(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
      segments[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(ell));
      for (int p = 0; p < ell; ++p) {
        const int id = base + i * ell + p;
        segments[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)] = id;
        out.labels[static_cast<std::size_t>(id)] = {"b" + std::to_string(c), i, p};
      }
    }
    add_braid_edges(b, segments, r);
  }
  out.graph = std::move(b).build();
  return out;
}

LabeledGadget b_minus(const ProblemParams& params) {
  params.validate();
  const int k = params.k, ell = params.ell, r = params.r;

  // Segment sizes of the k+1 two-clique copies; copies 0 and k keep only the
  // first r vertices of their second clique, so the incoming bridge survives.
  const int total = 2 * params.m();
  GraphBuilder b(total);
  LabeledGadget out;
  out.labels.resize(static_cast<std::size_t>(total));
  int next = 0;
  for (int c = 0; c <= k; ++c) {
    const int second = (c == 0 || c == k) ? r : ell;
    std::vector<std::vector<int>> segments(2);
    segments[0].resize(static_cast<std::size_t>(ell));
    segments[1].resize(static_cast<std::size_t>(second));
    for (int p = 0; p < ell; ++p) {
      segments[0][static_cast<std::size_t>(p)] = next;
      out.labels[static_cast<std::size_t>(next)] = {"b" + std::to_string(c), 0, p};
      ++next;
    }
    for (int p = 0; p < second; ++p) {
      segments[1][static_cast<std::size_t>(p)] = next;
      out.labels[static_cast<std::size_t>(next)] = {"b" + std::to_string(c), 1, p};
      ++next;
    }
    add_braid_edges(b, segments, r);
  }
  out.graph = std::move(b).build();
  return out;
}

void LowerBoundSpec::validate() const {
  if (k < 1) throw std::invalid_argument("lower_bound: need k >= 1");
  if (n < k + 1) throw std::invalid_argument("lower_bound: need n >= k+1");
  if (eps < Rational(0)) throw std::invalid_argument("lower_bound: need eps >= 0");
}

std::vector<int> LowerBoundSpec::part_sizes() const {
  std::vector<int> sizes(static_cast<std::size_t>(k + 1), n / (k + 1));
  for (int i = 0; i < n % (k + 1); ++i) ++sizes[static_cast<std::size_t>(i)];
  return sizes;
}

std::vector<int> LowerBoundSpec::part_starts() const {
  const auto sizes = part_sizes();
  std::vector<int> starts(sizes.size() + 1, 0);
  for (std::size_t i = 0; i < sizes.size(); ++i) starts[i + 1] = starts[i] + sizes[i];
  return starts;
}

int LowerBoundSpec::w_size() const {
  const long long w = ceil_scaled(eps, n);
  const auto sizes = part_sizes();
  const int smallest = *std::min_element(sizes.begin(), sizes.end());
  return static_cast<int>(std::min<long long>(w, smallest));
}

Rational LowerBoundSpec::reference_eps0(int k, int m) {
  return Rational(1, 2LL * (m + 1) * (k + 1));
}

bool LowerBoundSpec::below_recommended_n(int m) const { return n < 4 * (k + 2) * (m + 1); }

Graph lower_bound_graph(const LowerBoundSpec& spec) {
  spec.validate();
  const auto starts = spec.part_starts();
  const int w = spec.w_size();

  GraphBuilder b(spec.n);
  // Complete multipartite part.
  for (int i = 0; i <= spec.k; ++i) {
    for (int j = i + 1; j <= spec.k; ++j) {
      for (int u = starts[static_cast<std::size_t>(i)]; u < starts[static_cast<std::size_t>(i) + 1];
           ++u) {
        for (int v = starts[static_cast<std::size_t>(j)];
             v < starts[static_cast<std::size_t>(j) + 1]; ++v) {
          b.add_edge(u, v);
        }
      }
    }
  }
  // W_i to the rest of each part.
  for (int i = 0; i <= spec.k; ++i) {
    const int lo = starts[static_cast<std::size_t>(i)];
    const int hi = starts[static_cast<std::size_t>(i) + 1];
    for (int u = lo; u < lo + w; ++u) {
      for (int v = lo + w; v < hi; ++v) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

VertexSet lower_bound_w_set(const LowerBoundSpec& spec) {
  const auto starts = spec.part_starts();
  const int w = spec.w_size();
  VertexSet out(spec.n);
  for (int i = 0; i <= spec.k; ++i) {
    for (int u = starts[static_cast<std::size_t>(i)]; u < starts[static_cast<std::size_t>(i)] + w;
         ++u) {
      out.insert(u);
    }
  }
  return out;
}

void write_labels(std::ostream& out, const LabeledGadget& gadget) {
  for (std::size_t v = 0; v < gadget.labels.size(); ++v) {
    const auto& l = gadget.labels[v];
    out << v << ' ' << l.role << ' ' << l.segment << ' ' << l.position << '\n';
  }
}

std::vector<VertexLabel> read_labels(std::istream& in, int n) {
  std::vector<VertexLabel> labels(static_cast<std::size_t>(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  int v = 0;
  VertexLabel l;
  while (in >> v >> l.role >> l.segment >> l.position) {
    if (v < 0 || v >= n) throw std::runtime_error("labels: vertex out of range");
    if (seen[static_cast<std::size_t>(v)]) throw std::runtime_error("labels: duplicate vertex");
    seen[static_cast<std::size_t>(v)] = true;
    labels[static_cast<std::size_t>(v)] = l;
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool x) { return x; })) {
    throw std::runtime_error("labels: missing vertex");
  }
  return labels;
}

}  // namespace hampow
