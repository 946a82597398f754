#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hampow/densities.hpp"
#include "hampow/gadgets.hpp"
#include "hampow/graph.hpp"
#include "hampow/rational.hpp"
#include "hampow/search.hpp"

namespace hampow {

inline constexpr const char* kBuildId = "hampow 0.1.0";

// G(n, p) with each pair decided by a counter-based generator keyed on
// (seed, pair index): identical inputs give identical graphs everywhere.
Graph sample_gnp(int n, double p, std::uint64_t seed);

enum class BaseKind { Empty, LowerBound, File };
enum class ExperimentMode { Curve, PHalf, Threshold };

struct ExperimentConfig {
  BaseKind base_kind = BaseKind::Empty;
  Rational eps{0, 1};     // lower-bound base
  std::string base_path;  // file base

  int k = 1;
  int m = 1;
  std::optional<ProblemParams> klr;  // set when l (and r) are specified

  std::vector<int> ns;
  std::vector<double> ps;  // explicit probability grid
  bool scaled = false;     // or p = C * n^exponent per grid entry
  std::vector<double> cs;
  double exponent = 0.0;

  int trials = 1;
  std::uint64_t master_seed = 0;
  SearchBudget budget;
  int workers = 1;
  bool timing = false;       // wall-clock fields make output non-reproducible
  bool clique_audit = false;  // per-trial intra-part K_l count (needs l, lower-bound base)

  ExperimentMode mode = ExperimentMode::Curve;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  int max_probes = 24;

  void validate() const;
  std::vector<double> p_grid(int n) const;
  Graph build_base(int n) const;

  // Canonical key=value dump; hashed together with the build id into the
  // config hash every record carries.
  std::string canonical() const;
  std::uint64_t config_hash() const;
};

// Key=value sections:  [base] kind eps path   [target] k m l r
// [model] n p C exponent                      [run] trials seed max_nodes
// max_ms workers timing audit mode bracket max_probes
ExperimentConfig parse_experiment_config(std::istream& in);
ExperimentConfig parse_experiment_config_file(const std::string& path);

struct TrialRecord {
  std::uint64_t config_hash = 0;
  int n = 0;
  double p = 0.0;
  int p_index = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  Verdict verdict = Verdict::NotFound;
  std::uint64_t nodes = 0;
  double elapsed_ms = 0.0;
  std::optional<std::uint64_t> audit_cliques;
};

std::uint64_t derive_trial_seed(std::uint64_t master, int n, int p_index, int trial);

TrialRecord run_trial(const ExperimentConfig& cfg, int n, int p_index, double p, int trial);

// One JSON object per line; elapsed_ms is emitted only when timing is on.
std::string trial_record_jsonl(const TrialRecord& rec, bool timing);

struct CurvePoint {
  int n = 0;
  double p = 0.0;
  int p_index = 0;
  int successes = 0;
  int failures = 0;
  int timeouts = 0;
  int trials = 0;
  double rate = 0.0;  // successes / (successes + failures); timeouts are censored
  double ci_lo = 0.0;
  double ci_hi = 1.0;
};

std::pair<double, double> wilson_interval(int successes, int total,
                                          double z = 1.959963984540054);

// Full grid; records stream to jsonl (if given) in (n, p, trial) order
// regardless of worker count.
std::vector<CurvePoint> success_curve(const ExperimentConfig& cfg, std::ostream* jsonl);

void write_csv_summary(std::ostream& out, std::span<const CurvePoint> points);

struct BracketError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TimeoutBudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ProbeStat {
  double p = 0.0;
  int successes = 0;
  int failures = 0;
  int timeouts = 0;
  int trials = 0;
  double rate = 0.0;
};

struct PHalfResult {
  int n = 0;
  double p_half = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  int probes = 0;
  std::vector<ProbeStat> stats;
};

// Bisection between cfg.bracket_lo/hi until the bracket is within 10%
// relative width or the probe budget runs out. Throws BracketError when the
// endpoint rates do not straddle 1/2 and TimeoutBudgetError when more than
// 20% of any probe's trials are censored.
PHalfResult find_p_half(const ExperimentConfig& cfg, int n, std::ostream* jsonl);

struct FitResult {
  double slope = 0.0;
  double stderr_value = 0.0;
};

// Least squares on (log n, log p_half); needs >= 3 points with distinct n.
FitResult fit_threshold_exponent(std::span<const std::pair<double, double>> points);

struct ThresholdResult {
  std::vector<PHalfResult> per_n;
  FitResult fit;
};

ThresholdResult run_threshold(const ExperimentConfig& cfg, std::ostream* jsonl);

struct AuditReport {
  int n = 0;
  int k = 0;
  int ell = 0;
  int m = 0;
  bool pigeonhole_valid = false;   // ceil((m+1)/(k+1)) == l
  std::uint64_t w_avoiding_cliques = 0;
  bool structural_ok = false;      // every W-avoiding K_{m+1} has l vertices in one part
  std::uint64_t intra_part_cliques = 0;  // K_l of the random graph inside single parts
  long long demand = 0;            // floor(n/(m+1)) - (k+1)*ceil(eps*n)
  bool demand_met = false;
  bool certifies_absence = false;  // intra-part count below the demand
};

AuditReport lower_bound_audit_on(const LowerBoundSpec& spec, const ProblemParams& params,
                                 const Graph& random_graph,
                                 std::uint64_t enumeration_cap = 10'000'000);

AuditReport lower_bound_audit(const LowerBoundSpec& spec, const ProblemParams& params,
                              const RandomModel& model, std::uint64_t seed,
                              std::uint64_t enumeration_cap = 10'000'000);

struct PathEdgeAudit {
  long long q = 0;
  long long p1_edges = 0;        // q - 1
  long long p2_edges = 0;        // 2q - 3
  long long p3_edges = 0;        // 3q - 6
  long long p4_edges = 0;        // 4q - 10 for q >= 5
  long long p4_quoted_edges = 0; // 4q - 6, the count used with extra structure
  bool p4_discrepancy = false;
  Rational p2_exponent{0, 1};    // q / (2q - 3)
};

PathEdgeAudit path_edge_audit(long long q);

// 9e / (2 - 18e) for 0 < e < 1/9, and the q = ceil(1/(6e)) it belongs to.
Rational c_prime(const Rational& eps);
long long q_for_eps(const Rational& eps);

}  // namespace hampow
