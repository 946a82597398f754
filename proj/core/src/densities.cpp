#include "hampow/densities.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hampow {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Per-subset edge counts for all 2^n induced subgraphs, n <= kHardSubsetCap.
struct SubsetTable {
  int n;
  std::vector<std::uint32_t> adj;  // adjacency masks
  std::vector<std::int32_t> edge_count;

  explicit SubsetTable(const Graph& g, int cap) : n(g.order()) {
    if (n > cap) {
      throw std::invalid_argument("subset enumeration cap exceeded: n = " + std::to_string(n) +
                                  " > " + std::to_string(cap));
    }
    if (cap > kHardSubsetCap) {
      throw std::invalid_argument("subset enumeration cap above hard limit");
    }
    adj.assign(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (g.has_edge(u, v)) adj[static_cast<std::size_t>(u)] |= 1u << v;
      }
    }
    edge_count.assign(std::size_t{1} << n, 0);
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
      const int v = std::countr_zero(s);
      const std::uint32_t rest = s & (s - 1);
      edge_count[s] = edge_count[rest] +
                      std::popcount(adj[static_cast<std::size_t>(v)] & rest);
    }
  }

  bool has_isolated(std::uint32_t s) const {
    std::uint32_t bits = s;
    while (bits) {
      const int v = std::countr_zero(bits);
      if ((adj[static_cast<std::size_t>(v)] & s) == 0) return true;
      bits &= bits - 1;
    }
    return false;
  }
};

std::vector<int> mask_to_vertices(std::uint32_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

RandomModel RandomModel::with_p(std::int64_t n, double p) {
  if (n < 1) throw std::invalid_argument("model: need n >= 1");
  if (p < 0.0 || p > 1.0 || !std::isfinite(p)) throw std::invalid_argument("model: p not in [0,1]");
  RandomModel m;
  m.n = n;
  m.p_value = p;
  return m;
}

RandomModel RandomModel::with_scale(std::int64_t n, double c, double exponent) {
  if (n < 1) throw std::invalid_argument("model: need n >= 1");
  if (c < 0.0 || !std::isfinite(c)) throw std::invalid_argument("model: need C >= 0");
  RandomModel m;
  m.n = n;
  m.from_scale = true;
  m.scale_c = c;
  m.scale_exponent = exponent;
  m.p_value = std::min(1.0, c * std::pow(static_cast<double>(n), exponent));
  return m;
}

double RandomModel::p() const { return p_value; }

double RandomModel::log_p() const {
  if (from_scale) {
    if (scale_c == 0.0) return kNegInf;
    const double raw = std::log(scale_c) + scale_exponent * log_n();
    return std::min(0.0, raw);
  }
  return p_value == 0.0 ? kNegInf : std::log(p_value);
}

double RandomModel::log_n() const { return std::log(static_cast<double>(n)); }

double psi_log(std::int64_t v, std::int64_t e, const RandomModel& model) {
  if (v < 1) throw std::invalid_argument("psi: need v >= 1");
  if (e < 0) throw std::invalid_argument("psi: need e >= 0");
  if (e == 0) return static_cast<double>(v) * model.log_n();
  return static_cast<double>(v) * model.log_n() + static_cast<double>(e) * model.log_p();
}

PhiResult phi(const Graph& g, const RandomModel& model, int cap) {
  if (g.edge_count() == 0) throw std::invalid_argument("phi: edgeless graph");
  SubsetTable table(g, cap);

  // Adding edges (p <= 1) and dropping isolated vertices never increases Psi,
  // so induced subgraphs without isolated vertices suffice. Ascending mask
  // order plus strict improvement gives the lexicographically smallest argmin.
  PhiResult best{std::numeric_limits<double>::infinity(), {}};
  std::uint32_t best_mask = 0;
  for (std::uint32_t s = 1; s < (1u << table.n); ++s) {
    const std::int32_t e = table.edge_count[s];
    if (e == 0) continue;
    if (table.has_isolated(s)) continue;
    const double value = psi_log(std::popcount(s), e, model);
    if (value < best.log_value) {
      best.log_value = value;
      best_mask = s;
    }
  }
  best.argmin = mask_to_vertices(best_mask);
  return best;
}

MaxDensityResult max_density_m(const Graph& g, int cap) {
  SubsetTable table(g, cap);
  MaxDensityResult best;
  std::uint32_t best_mask = 0;
  for (std::uint32_t s = 1; s < (1u << table.n); ++s) {
    const int v = std::popcount(s);
    if (v < 2) continue;
    const Rational d(table.edge_count[s], v - 1);
    if (best_mask == 0 || d > best.value) {
      best.value = d;
      best_mask = s;
    }
  }
  best.argmax = mask_to_vertices(best_mask);
  return best;
}

BraidDensityResult braid_m_closed_form(int ell, int r, int t) {
  if (t < 1 || ell < 2 || r < 1 || r > ell) {
    throw std::invalid_argument("braid_m_closed_form: bad parameters");
  }
  if (ell >= r * (r + 1)) {
    return {Rational(ell, 2), BraidDensityForm::CliqueHalfEll};
  }
  if (ell == 3 && r == 2) {
    return {Rational(6LL * t - 3, 3LL * t - 1), BraidDensityForm::Braid32};
  }
  return {std::nullopt, BraidDensityForm::None};
}

double janson_upper_bound(double tau, const Graph& g, const RandomModel& model, int cap) {
  if (!(tau > 0.0) || tau > 1.0) throw std::invalid_argument("janson: need 0 < tau <= 1");
  const PhiResult f = phi(g, model, cap);
  // Phi * 4^-e / 8 in the log domain; Phi = 0 gives the vacuous bound 1.
  const double log_scaled = f.log_value -
                            static_cast<double>(g.edge_count()) * std::log(4.0) - std::log(8.0);
  const double exponent = -tau * tau * std::exp(log_scaled);
  const double bound = std::exp(exponent);
  return std::min(1.0, std::max(0.0, bound));
}

DensityProfile density_profile(const Graph& g, const RandomModel& model, int cap) {
  DensityProfile out;
  out.v = g.order();
  out.e = static_cast<std::int64_t>(g.edge_count());
  out.d = out.v >= 2 ? Rational(out.e, out.v - 1) : Rational(0);
  const auto m = max_density_m(g, cap);
  out.m = m.value;
  out.psi_log_value = psi_log(out.v, out.e, model);
  const auto f = phi(g, model, cap);
  out.phi_log_value = f.log_value;
  out.argmin_subgraph = f.argmin;
  return out;
}

}  // namespace hampow
