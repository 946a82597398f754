#include "hampow/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hampow {

namespace {

// Braid copy i on the segments congruent to i mod k+1, given every segment's
// vertex ids in host order. Returns the k+1 copies as one labeled graph on
// the full vertex universe.
LabeledGadget braids_on_segments(const std::vector<std::vector<int>>& segments, int n, int k,
                                 int r) {
  GraphBuilder b(n);
  LabeledGadget out;
  out.labels.resize(static_cast<std::size_t>(n));
  for (int copy = 0; copy <= k; ++copy) {
    std::vector<std::vector<int>> chain;
    for (std::size_t s = static_cast<std::size_t>(copy); s < segments.size();
         s += static_cast<std::size_t>(k + 1)) {
      chain.push_back(segments[s]);
    }
    for (std::size_t local = 0; local < chain.size(); ++local) {
      for (std::size_t p = 0; p < chain[local].size(); ++p) {
        out.labels[static_cast<std::size_t>(chain[local][p])] = {
            "b" + std::to_string(copy), static_cast<int>(local), static_cast<int>(p)};
      }
    }
    // Cliques + bridges along the chain (same pattern as the standalone braid).
    for (const auto& seg : chain) {
      for (std::size_t i = 0; i < seg.size(); ++i) {
        for (std::size_t j = i + 1; j < seg.size(); ++j) b.add_edge(seg[i], seg[j]);
      }
    }
    for (std::size_t s = 0; s + 1 < chain.size(); ++s) {
      const auto& a = chain[s];
      const auto& c = chain[s + 1];
      for (int i = 0; i < r; ++i) {
        const int vi = a[a.size() - static_cast<std::size_t>(r) + static_cast<std::size_t>(i)];
        for (int j = 0; j <= i; ++j) b.add_edge(vi, c[static_cast<std::size_t>(j)]);
      }
    }
  }
  out.graph = std::move(b).build();
  return out;
}

}  // namespace

Decomposition decompose_path(const ProblemParams& params, int t) {
  params.validate();
  if (t < 1) throw std::invalid_argument("decompose_path: need t >= 1");
  const int k = params.k, ell = params.ell;
  const int seg_count = (k + 1) * t;
  const int n = seg_count * ell;

  std::vector<int> sizes(static_cast<std::size_t>(seg_count), ell);
  Decomposition d;
  d.base = blow_up(power_path(seg_count, k), sizes);
  d.target_m = params.m();
  d.host_order.resize(static_cast<std::size_t>(n));
  std::iota(d.host_order.begin(), d.host_order.end(), 0);

  std::vector<std::vector<int>> segments(static_cast<std::size_t>(seg_count));
  for (int s = 0; s < seg_count; ++s) {
    segments[static_cast<std::size_t>(s)].resize(static_cast<std::size_t>(ell));
    for (int p = 0; p < ell; ++p) {
      segments[static_cast<std::size_t>(s)][static_cast<std::size_t>(p)] = s * ell + p;
    }
  }
  d.braids = braids_on_segments(segments, n, k, params.r);
  return d;
}

Decomposition decompose_cycle(const ProblemParams& params, int t) {
  params.validate();
  if (t < 2 || t % 2 != 0) throw std::invalid_argument("decompose_cycle: need even t >= 2");
  const int k = params.k, ell = params.ell;
  const int classes = 2 * k + 2;
  const int class_size = ell * t / 2;
  const int seg_count = (k + 1) * t;
  const int n = classes * class_size;

  std::vector<int> sizes(static_cast<std::size_t>(classes), class_size);
  Decomposition d;
  d.base = blow_up(power_cycle(classes, k), sizes);
  d.target_m = params.m();

  // Segment s draws the next ell unused ids of class s mod (2k+2); the
  // concatenation of segments is the path order wound around the cycle.
  std::vector<std::vector<int>> segments(static_cast<std::size_t>(seg_count));
  d.host_order.reserve(static_cast<std::size_t>(n));
  for (int s = 0; s < seg_count; ++s) {
    const int cls = s % classes;
    const int block = s / classes;
    auto& seg = segments[static_cast<std::size_t>(s)];
    seg.resize(static_cast<std::size_t>(ell));
    for (int p = 0; p < ell; ++p) {
      seg[static_cast<std::size_t>(p)] = cls * class_size + block * ell + p;
      d.host_order.push_back(seg[static_cast<std::size_t>(p)]);
    }
  }
  d.braids = braids_on_segments(segments, n, k, params.r);
  return d;
}

VerificationReport verify_decomposition(const Decomposition& d) {
  const Graph& base = d.base.graph;
  const Graph& braids = d.braids.graph;
  if (base.order() != braids.order()) {
    throw std::invalid_argument("verify_decomposition: vertex universes differ");
  }
  const int n = base.order();
  if (static_cast<int>(d.host_order.size()) != n) {
    throw std::invalid_argument("verify_decomposition: host_order length mismatch");
  }
  {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : d.host_order) {
      if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
        throw std::invalid_argument("verify_decomposition: host_order not a permutation");
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  VerificationReport report;
  report.braid_edges_used = braids.edge_count();

  report.edge_disjoint = true;
  for (auto [u, v] : braids.edges()) {
    if (base.has_edge(u, v)) {
      report.edge_disjoint = false;
      break;
    }
  }

  report.covers_m_path = true;
  for (int i = 0; i < n && report.covers_m_path; ++i) {
    const int max_off = std::min(d.target_m, n - 1 - i);
    for (int off = 1; off <= max_off; ++off) {
      const int u = d.host_order[static_cast<std::size_t>(i)];
      const int v = d.host_order[static_cast<std::size_t>(i + off)];
      if (!base.has_edge(u, v) && !braids.has_edge(u, v)) {
        report.covers_m_path = false;
        report.first_failure = {i, off};
        break;
      }
    }
  }
  return report;
}

}  // namespace hampow
