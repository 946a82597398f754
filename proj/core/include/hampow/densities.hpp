#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hampow/graph.hpp"
#include "hampow/rational.hpp"

namespace hampow {

// Random-graph scale G(n, p); p may be given directly or as C * n^exponent.
// p() clamps to [0, 1]; log_p() is computed from the scale form when one is
// given, so exponent arithmetic stays exact in the log domain.
struct RandomModel {
  std::int64_t n = 0;
  double p_value = 0.0;
  bool from_scale = false;
  double scale_c = 0.0;
  double scale_exponent = 0.0;

  static RandomModel with_p(std::int64_t n, double p);
  static RandomModel with_scale(std::int64_t n, double c, double exponent);

  double p() const;
  double log_p() const;  // -inf when p == 0, at most 0
  double log_n() const;
};

// log Psi = v*ln n + e*ln p for the expected-count scale n^v p^e.
double psi_log(std::int64_t v, std::int64_t e, const RandomModel& model);

// Exhaustive subset enumeration is capped; beyond this the closed forms have
// to carry the experiments.
inline constexpr int kDefaultSubsetCap = 16;
inline constexpr int kHardSubsetCap = 22;

struct PhiResult {
  double log_value = 0.0;
  std::vector<int> argmin;  // lexicographically smallest minimizing subset
};

// min over subsets S with e(G[S]) > 0 and no isolated vertex of Psi(|S|, e(G[S])).
PhiResult phi(const Graph& g, const RandomModel& model, int cap = kDefaultSubsetCap);

struct MaxDensityResult {
  Rational value{0, 1};
  std::vector<int> argmax;
};

// max over induced subsets with |S| >= 2 of e(G[S]) / (|S| - 1).
MaxDensityResult max_density_m(const Graph& g, int cap = kDefaultSubsetCap);

enum class BraidDensityForm { CliqueHalfEll, Braid32, None };

struct BraidDensityResult {
  std::optional<Rational> value;
  BraidDensityForm form = BraidDensityForm::None;
};

// l/2 when l >= r(r+1); (6t-3)/(3t-1) for (l, r) = (3, 2); otherwise no
// closed form and the caller falls back to max_density_m.
BraidDensityResult braid_m_closed_form(int ell, int r, int t);

// exp(-tau^2 * 4^-e * Phi / 8), clamped to [0, 1]. A lower-tail bound for the
// number of copies of g present in G(n, p).
double janson_upper_bound(double tau, const Graph& g, const RandomModel& model,
                          int cap = kDefaultSubsetCap);

struct DensityProfile {
  std::int64_t v = 0;
  std::int64_t e = 0;
  Rational d{0, 1};
  Rational m{0, 1};
  double psi_log_value = 0.0;
  double phi_log_value = 0.0;
  std::vector<int> argmin_subgraph;
};

DensityProfile density_profile(const Graph& g, const RandomModel& model,
                               int cap = kDefaultSubsetCap);

}  // namespace hampow
