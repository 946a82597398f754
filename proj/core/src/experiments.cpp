#include "hampow/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string_view>
#include <thread>

#include "hampow/rng.hpp"

namespace hampow {

namespace {

std::string fmt_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string fmt_hex64(std::uint64_t x) {
  char buf[17];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x, 16);
  std::string s(buf, res.ptr);
  return std::string(16 - s.size(), '0') + s;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// First worker exception wins; remaining tasks still drain.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
  const int lanes = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), count));
  if (lanes <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex err_mutex;
  std::exception_ptr error;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::scoped_lock lock(err_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(lanes));
  for (int t = 0; t < lanes; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ' ' || c == ',' || c == '\t') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& tok : split_list(text)) out.push_back(std::stoi(tok));
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& tok : split_list(text)) out.push_back(std::stod(tok));
  return out;
}

bool parse_flag(const std::string& text) {
  if (text == "on" || text == "true" || text == "1" || text == "yes") return true;
  if (text == "off" || text == "false" || text == "0" || text == "no") return false;
  throw std::invalid_argument("config: bad flag value '" + text + "'");
}

TrialRecord run_trial_impl(const ExperimentConfig& cfg, const Graph& base, int n, int p_index,
                           double p, int trial) {
  TrialRecord rec;
  rec.config_hash = cfg.config_hash();
  rec.n = n;
  rec.p = p;
  rec.p_index = p_index;
  rec.trial = trial;
  rec.seed = derive_trial_seed(cfg.master_seed, n, p_index, trial);

  const Graph random_part = sample_gnp(n, p, rec.seed);
  const Graph h = union_graphs(base, random_part);
  const SearchOutcome outcome = contains_power_ham_cycle(h, cfg.m, cfg.budget);
  rec.verdict = outcome.verdict;
  rec.nodes = outcome.nodes_expanded;
  rec.elapsed_ms = outcome.elapsed_ms;

  if (cfg.clique_audit && cfg.klr && cfg.base_kind == BaseKind::LowerBound) {
    const LowerBoundSpec spec{n, cfg.k, cfg.eps};
    const auto starts = spec.part_starts();
    std::uint64_t intra = 0;
    for (int i = 0; i <= spec.k; ++i) {
      VertexSet part(n);
      for (int u = starts[static_cast<std::size_t>(i)]; u < starts[static_cast<std::size_t>(i) + 1];
           ++u) {
        part.insert(u);
      }
      intra += enumerate_cliques(random_part, cfg.klr->ell, part, kNoCap, nullptr).count;
    }
    rec.audit_cliques = intra;
  }
  return rec;
}

CurvePoint aggregate(int n, int p_index, double p, std::span<const TrialRecord> records) {
  CurvePoint pt;
  pt.n = n;
  pt.p = p;
  pt.p_index = p_index;
  pt.trials = static_cast<int>(records.size());
  for (const auto& r : records) {
    switch (r.verdict) {
      case Verdict::Found: ++pt.successes; break;
      case Verdict::NotFound: ++pt.failures; break;
      case Verdict::Timeout: ++pt.timeouts; break;
    }
  }
  const int effective = pt.successes + pt.failures;
  pt.rate = effective > 0 ? static_cast<double>(pt.successes) / effective : 0.0;
  const auto ci = wilson_interval(pt.successes, effective);
  pt.ci_lo = ci.first;
  pt.ci_hi = ci.second;
  return pt;
}

}  // namespace

Graph sample_gnp(int n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0 || !std::isfinite(p)) {
    throw std::invalid_argument("sample_gnp: p not in [0,1]");
  }
  GraphBuilder b(n);
  std::uint64_t pair_index = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++pair_index) {
      if (uniform01(seed, pair_index) < p) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

void ExperimentConfig::validate() const {
  if (k < 1) throw std::invalid_argument("config: need k >= 1");
  if (m < 1) throw std::invalid_argument("config: need m >= 1");
  if (klr) {
    klr->validate();
    if (klr->k != k || klr->m() != m) {
      throw std::invalid_argument("config: k*l + r inconsistent with m");
    }
  }
  if (ns.empty()) throw std::invalid_argument("config: need at least one n");
  for (int n : ns) {
    if (n < m + 2) throw std::invalid_argument("config: every n must be >= m + 2");
    if (n > kMaxVertices) throw std::invalid_argument("config: n too large");
  }
  if (trials < 1) throw std::invalid_argument("config: need trials >= 1");
  budget.validate();
  if (workers < 1) throw std::invalid_argument("config: need workers >= 1");
  if (base_kind == BaseKind::File && base_path.empty()) {
    throw std::invalid_argument("config: file base needs a path");
  }
  if (base_kind == BaseKind::LowerBound && eps < Rational(0)) {
    throw std::invalid_argument("config: need eps >= 0");
  }
  if (clique_audit && (!klr || base_kind != BaseKind::LowerBound)) {
    throw std::invalid_argument("config: clique audit needs l,r and a lower-bound base");
  }
  if (mode == ExperimentMode::Curve) {
    if (scaled) {
      if (cs.empty()) throw std::invalid_argument("config: need a C grid");
    } else {
      if (ps.empty()) throw std::invalid_argument("config: need a p grid");
      for (double p : ps) {
        if (p < 0.0 || p > 1.0) throw std::invalid_argument("config: p outside [0,1]");
      }
    }
  } else {
    if (!(bracket_lo >= 0.0 && bracket_lo < bracket_hi && bracket_hi <= 1.0)) {
      throw std::invalid_argument("config: need bracket 0 <= lo < hi <= 1");
    }
    if (max_probes < 2) throw std::invalid_argument("config: need max_probes >= 2");
  }
}

std::vector<double> ExperimentConfig::p_grid(int n) const {
  if (!scaled) return ps;
  std::vector<double> out;
  out.reserve(cs.size());
  for (double c : cs) {
    out.push_back(std::min(1.0, c * std::pow(static_cast<double>(n), exponent)));
  }
  return out;
}

Graph ExperimentConfig::build_base(int n) const {
  switch (base_kind) {
    case BaseKind::Empty:
      return empty_graph(n);
    case BaseKind::LowerBound:
      return lower_bound_graph(LowerBoundSpec{n, k, eps});
    case BaseKind::File: {
      Graph g = read_edge_list_file(base_path);
      if (g.order() != n) {
        throw std::invalid_argument("config: file base has " + std::to_string(g.order()) +
                                    " vertices, grid wants " + std::to_string(n));
      }
      return g;
    }
  }
  throw std::logic_error("unreachable base kind");
}

std::string ExperimentConfig::canonical() const {
  std::ostringstream out;
  out << "build=" << kBuildId << '\n';
  out << "base.kind=" << (base_kind == BaseKind::Empty ? "empty"
                          : base_kind == BaseKind::LowerBound ? "lower_bound" : "file")
      << '\n';
  out << "base.eps=" << format_rational(eps) << '\n';
  out << "base.path=" << base_path << '\n';
  out << "target.k=" << k << '\n';
  out << "target.m=" << m << '\n';
  out << "target.l=" << (klr ? std::to_string(klr->ell) : "-") << '\n';
  out << "target.r=" << (klr ? std::to_string(klr->r) : "-") << '\n';
  out << "model.n=";
  for (std::size_t i = 0; i < ns.size(); ++i) out << (i ? "," : "") << ns[i];
  out << '\n';
  if (scaled) {
    out << "model.C=";
    for (std::size_t i = 0; i < cs.size(); ++i) out << (i ? "," : "") << fmt_double(cs[i]);
    out << "\nmodel.exponent=" << fmt_double(exponent) << '\n';
  } else {
    out << "model.p=";
    for (std::size_t i = 0; i < ps.size(); ++i) out << (i ? "," : "") << fmt_double(ps[i]);
    out << '\n';
  }
  out << "run.trials=" << trials << '\n';
  out << "run.seed=" << master_seed << '\n';
  out << "run.max_nodes=" << budget.max_nodes << '\n';
  out << "run.max_ms=" << budget.max_millis << '\n';
  out << "run.audit=" << (clique_audit ? "on" : "off") << '\n';
  out << "run.mode=" << (mode == ExperimentMode::Curve ? "curve"
                         : mode == ExperimentMode::PHalf ? "p_half" : "threshold")
      << '\n';
  out << "run.bracket=" << fmt_double(bracket_lo) << "," << fmt_double(bracket_hi) << '\n';
  out << "run.max_probes=" << max_probes << '\n';
  return out.str();
}

std::uint64_t ExperimentConfig::config_hash() const { return fnv1a(canonical()); }

ExperimentConfig parse_experiment_config(std::istream& in) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }

  ExperimentConfig cfg;
  const std::string kind = tree.get<std::string>("base.kind", "empty");
  if (kind == "empty") {
    cfg.base_kind = BaseKind::Empty;
  } else if (kind == "lower_bound") {
    cfg.base_kind = BaseKind::LowerBound;
  } else if (kind == "file") {
    cfg.base_kind = BaseKind::File;
  } else {
    throw std::invalid_argument("config: unknown base kind '" + kind + "'");
  }
  cfg.eps = parse_rational(tree.get<std::string>("base.eps", "0"));
  cfg.base_path = tree.get<std::string>("base.path", "");

  cfg.k = tree.get<int>("target.k");
  const auto l = tree.get_optional<int>("target.l");
  const auto r = tree.get_optional<int>("target.r");
  const auto m = tree.get_optional<int>("target.m");
  if (l && r) {
    cfg.klr = ProblemParams::checked(cfg.k, *l, *r);
    cfg.m = cfg.klr->m();
    if (m && *m != cfg.m) throw std::invalid_argument("config: m disagrees with k*l + r");
  } else if (l && m) {
    const int derived_r = *m - cfg.k * *l;
    cfg.klr = ProblemParams::checked(cfg.k, *l, derived_r);
    cfg.m = *m;
  } else if (!l && !r && m) {
    cfg.m = *m;
  } else {
    throw std::invalid_argument("config: give m, or l with r (or l with m)");
  }

  cfg.ns = parse_int_list(tree.get<std::string>("model.n"));
  const auto p_text = tree.get_optional<std::string>("model.p");
  const auto c_text = tree.get_optional<std::string>("model.C");
  if (p_text && c_text) throw std::invalid_argument("config: give p or C, not both");
  if (p_text) {
    cfg.ps = parse_double_list(*p_text);
  } else if (c_text) {
    cfg.scaled = true;
    cfg.cs = parse_double_list(*c_text);
    cfg.exponent = tree.get<double>("model.exponent");
  }

  cfg.trials = tree.get<int>("run.trials", 1);
  cfg.master_seed = std::stoull(tree.get<std::string>("run.seed", "0"));
  cfg.budget.max_nodes = std::stoull(tree.get<std::string>("run.max_nodes", "1000000"));
  cfg.budget.max_millis = tree.get<std::int64_t>("run.max_ms", 60000);
  cfg.workers = tree.get<int>("run.workers", 1);
  cfg.timing = parse_flag(tree.get<std::string>("run.timing", "off"));
  cfg.clique_audit = parse_flag(tree.get<std::string>("run.audit", "off"));
  const std::string mode = tree.get<std::string>("run.mode", "curve");
  if (mode == "curve") {
    cfg.mode = ExperimentMode::Curve;
  } else if (mode == "p_half") {
    cfg.mode = ExperimentMode::PHalf;
  } else if (mode == "threshold") {
    cfg.mode = ExperimentMode::Threshold;
  } else {
    throw std::invalid_argument("config: unknown mode '" + mode + "'");
  }
  if (const auto bracket = tree.get_optional<std::string>("run.bracket")) {
    const auto parts = parse_double_list(*bracket);
    if (parts.size() != 2) throw std::invalid_argument("config: bracket needs two values");
    cfg.bracket_lo = parts[0];
    cfg.bracket_hi = parts[1];
  }
  cfg.max_probes = tree.get<int>("run.max_probes", 24);
  cfg.validate();
  return cfg;
}

ExperimentConfig parse_experiment_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  return parse_experiment_config(in);
}

std::uint64_t derive_trial_seed(std::uint64_t master, int n, int p_index, int trial) {
  std::uint64_t h = hash_combine(master, static_cast<std::uint64_t>(n));
  h = hash_combine(h, static_cast<std::uint64_t>(p_index));
  return hash_combine(h, static_cast<std::uint64_t>(trial));
}

TrialRecord run_trial(const ExperimentConfig& cfg, int n, int p_index, double p, int trial) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("run_trial: p not in [0,1]");
  const Graph base = cfg.build_base(n);
  return run_trial_impl(cfg, base, n, p_index, p, trial);
}

std::string trial_record_jsonl(const TrialRecord& rec, bool timing) {
  std::string out = "{\"config\":\"" + fmt_hex64(rec.config_hash) + "\"";
  out += ",\"n\":" + std::to_string(rec.n);
  out += ",\"p\":" + fmt_double(rec.p);
  out += ",\"p_index\":" + std::to_string(rec.p_index);
  out += ",\"trial\":" + std::to_string(rec.trial);
  out += ",\"seed\":" + std::to_string(rec.seed);
  out += ",\"verdict\":\"" + std::string(verdict_name(rec.verdict)) + "\"";
  out += ",\"nodes\":" + std::to_string(rec.nodes);
  if (timing) out += ",\"elapsed_ms\":" + fmt_double(rec.elapsed_ms);
  if (rec.audit_cliques) out += ",\"audit_cliques\":" + std::to_string(*rec.audit_cliques);
  out += "}";
  return out;
}

std::pair<double, double> wilson_interval(int successes, int total, double z) {
  if (total <= 0) return {0.0, 1.0};
  const double nn = total;
  const double phat = static_cast<double>(successes) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = (phat + z2 / (2.0 * nn)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / nn + z2 / (4.0 * nn * nn)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

std::vector<CurvePoint> success_curve(const ExperimentConfig& cfg, std::ostream* jsonl) {
  cfg.validate();
  if (cfg.mode != ExperimentMode::Curve) {
    throw std::invalid_argument("success_curve: config mode is not curve");
  }

  struct Cell {
    int n;
    int p_index;
    double p;
    std::size_t base_index;
  };
  std::vector<Cell> cells;
  std::vector<Graph> bases;
  bases.reserve(cfg.ns.size());
  for (std::size_t ni = 0; ni < cfg.ns.size(); ++ni) {
    const int n = cfg.ns[ni];
    bases.push_back(cfg.build_base(n));
    const auto grid = cfg.p_grid(n);
    for (std::size_t pi = 0; pi < grid.size(); ++pi) {
      cells.push_back({n, static_cast<int>(pi), grid[pi], ni});
    }
  }

  const std::size_t per_cell = static_cast<std::size_t>(cfg.trials);
  std::vector<TrialRecord> records(cells.size() * per_cell);
  parallel_for(records.size(), cfg.workers, [&](std::size_t idx) {
    const Cell& cell = cells[idx / per_cell];
    const int trial = static_cast<int>(idx % per_cell);
    records[idx] =
        run_trial_impl(cfg, bases[cell.base_index], cell.n, cell.p_index, cell.p, trial);
  });

  if (jsonl) {
    for (const auto& rec : records) *jsonl << trial_record_jsonl(rec, cfg.timing) << '\n';
  }

  std::vector<CurvePoint> points;
  points.reserve(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    points.push_back(aggregate(cells[c].n, cells[c].p_index, cells[c].p,
                               std::span<const TrialRecord>(records).subspan(c * per_cell, per_cell)));
  }
  return points;
}

void write_csv_summary(std::ostream& out, std::span<const CurvePoint> points) {
  out << "n,p,successes,trials,timeouts,rate,ci_lo,ci_hi\n";
  for (const auto& pt : points) {
    out << pt.n << ',' << fmt_double(pt.p) << ',' << pt.successes << ',' << pt.trials << ','
        << pt.timeouts << ',' << fmt_double(pt.rate) << ',' << fmt_double(pt.ci_lo) << ','
        << fmt_double(pt.ci_hi) << '\n';
  }
}

PHalfResult find_p_half(const ExperimentConfig& cfg, int n, std::ostream* jsonl) {
  cfg.validate();
  const Graph base = cfg.build_base(n);
  PHalfResult result;
  result.n = n;

  int probe_index = 0;
  auto probe = [&](double p) -> ProbeStat {
    std::vector<TrialRecord> records(static_cast<std::size_t>(cfg.trials));
    parallel_for(records.size(), cfg.workers, [&](std::size_t t) {
      records[t] = run_trial_impl(cfg, base, n, probe_index, p, static_cast<int>(t));
    });
    if (jsonl) {
      for (const auto& rec : records) *jsonl << trial_record_jsonl(rec, cfg.timing) << '\n';
    }
    const CurvePoint pt = aggregate(n, probe_index, p, records);
    ++probe_index;
    if (pt.timeouts * 5 > pt.trials) {
      throw TimeoutBudgetError("find_p_half: more than 20% timeouts at p = " + fmt_double(p));
    }
    ProbeStat st{p, pt.successes, pt.failures, pt.timeouts, pt.trials, pt.rate};
    result.stats.push_back(st);
    return st;
  };

  double lo = cfg.bracket_lo;
  double hi = cfg.bracket_hi;
  const ProbeStat at_lo = probe(lo);
  const ProbeStat at_hi = probe(hi);
  if (!(at_lo.rate < 0.5 && at_hi.rate >= 0.5)) {
    throw BracketError("find_p_half: endpoint rates " + fmt_double(at_lo.rate) + " / " +
                       fmt_double(at_hi.rate) + " do not straddle 1/2");
  }

  while (hi - lo > 0.1 * hi && static_cast<int>(result.stats.size()) < cfg.max_probes) {
    const double mid = lo > 0.0 ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
    const ProbeStat st = probe(mid);
    if (st.rate >= 0.5) {
      hi = mid;
    } else {
      lo = mid;
    }
  }

  result.lo = lo;
  result.hi = hi;
  result.p_half = lo > 0.0 ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
  result.probes = static_cast<int>(result.stats.size());
  return result;
}

FitResult fit_threshold_exponent(std::span<const std::pair<double, double>> points) {
  if (points.size() < 3) throw std::invalid_argument("fit: need at least 3 points");
  std::vector<double> xs, ys;
  for (const auto& [n, p_half] : points) {
    if (n <= 0.0 || p_half <= 0.0) throw std::invalid_argument("fit: need positive n and p_half");
    xs.push_back(std::log(n));
    ys.push_back(std::log(p_half));
  }
  {
    auto sorted = xs;
    std::sort(sorted.begin(), sorted.end());
    if (std::unique(sorted.begin(), sorted.end()) - sorted.begin() < 3) {
      throw std::invalid_argument("fit: need at least 3 distinct n");
    }
  }
  const std::size_t count = xs.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(count);
  my /= static_cast<double>(count);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit: degenerate spread");
  FitResult fit;
  fit.slope = sxy / sxx;
  double sse = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double resid = ys[i] - (my + fit.slope * (xs[i] - mx));
    sse += resid * resid;
  }
  const double sigma2 = std::max(0.0, sse) / static_cast<double>(count - 2);
  fit.stderr_value = std::sqrt(sigma2 / sxx);
  return fit;
}

ThresholdResult run_threshold(const ExperimentConfig& cfg, std::ostream* jsonl) {
  ThresholdResult out;
  std::vector<std::pair<double, double>> points;
  for (int n : cfg.ns) {
    out.per_n.push_back(find_p_half(cfg, n, jsonl));
    points.emplace_back(static_cast<double>(n), out.per_n.back().p_half);
  }
  out.fit = fit_threshold_exponent(points);
  return out;
}

AuditReport lower_bound_audit_on(const LowerBoundSpec& spec, const ProblemParams& params,
                                 const Graph& random_graph, std::uint64_t enumeration_cap) {
  spec.validate();
  params.validate();
  if (random_graph.order() != spec.n) {
    throw std::invalid_argument("audit: random graph order mismatch");
  }
  if (params.k != spec.k) throw std::invalid_argument("audit: k mismatch");

  AuditReport rep;
  rep.n = spec.n;
  rep.k = spec.k;
  rep.ell = params.ell;
  rep.m = params.m();
  rep.pigeonhole_valid = ((rep.m + 1 + rep.k) / (rep.k + 1) == rep.ell);

  const Graph g_alpha = lower_bound_graph(spec);
  const Graph h = union_graphs(g_alpha, random_graph);
  VertexSet allowed = VertexSet::all(spec.n);
  allowed.subtract(lower_bound_w_set(spec));

  const auto starts = spec.part_starts();
  std::vector<int> part_of(static_cast<std::size_t>(spec.n), 0);
  for (int i = 0; i <= spec.k; ++i) {
    for (int u = starts[static_cast<std::size_t>(i)]; u < starts[static_cast<std::size_t>(i) + 1];
         ++u) {
      part_of[static_cast<std::size_t>(u)] = i;
    }
  }

  rep.structural_ok = true;
  std::vector<int> per_part(static_cast<std::size_t>(spec.k + 1), 0);
  const auto check_clique = [&](std::span<const int> clique) {
    std::fill(per_part.begin(), per_part.end(), 0);
    int best = 0;
    for (int v : clique) {
      best = std::max(best, ++per_part[static_cast<std::size_t>(part_of[static_cast<std::size_t>(v)])]);
    }
    if (best < rep.ell) rep.structural_ok = false;
  };
  const CliqueCount cc = enumerate_cliques(h, rep.m + 1, allowed, enumeration_cap, check_clique);
  if (cc.capped) throw std::runtime_error("audit: enumeration cap exceeded");
  rep.w_avoiding_cliques = cc.count;

  std::uint64_t intra = 0;
  for (int i = 0; i <= spec.k; ++i) {
    VertexSet part(spec.n);
    for (int u = starts[static_cast<std::size_t>(i)]; u < starts[static_cast<std::size_t>(i) + 1];
         ++u) {
      part.insert(u);
    }
    const CliqueCount pc = enumerate_cliques(random_graph, rep.ell, part, enumeration_cap, nullptr);
    if (pc.capped) throw std::runtime_error("audit: enumeration cap exceeded");
    intra += pc.count;
  }
  rep.intra_part_cliques = intra;
  rep.demand = spec.n / (rep.m + 1) -
               static_cast<long long>(spec.k + 1) * ceil_scaled(spec.eps, spec.n);
  rep.demand_met = static_cast<long long>(intra) >= rep.demand;
  rep.certifies_absence = rep.pigeonhole_valid && static_cast<long long>(intra) < rep.demand;
  return rep;
}

AuditReport lower_bound_audit(const LowerBoundSpec& spec, const ProblemParams& params,
                              const RandomModel& model, std::uint64_t seed,
                              std::uint64_t enumeration_cap) {
  if (model.n != spec.n) throw std::invalid_argument("audit: model n mismatch");
  const Graph random_graph = sample_gnp(spec.n, model.p(), seed);
  return lower_bound_audit_on(spec, params, random_graph, enumeration_cap);
}

PathEdgeAudit path_edge_audit(long long q) {
  if (q < 4) throw std::invalid_argument("path_edge_audit: need q >= 4");
  PathEdgeAudit out;
  out.q = q;
  out.p1_edges = q - 1;
  out.p2_edges = 2 * q - 3;
  out.p3_edges = 3 * q - 6;
  out.p4_edges = 4 * q - 10;
  out.p4_quoted_edges = 4 * q - 6;
  out.p4_discrepancy = out.p4_edges != out.p4_quoted_edges;
  out.p2_exponent = Rational(q, 2 * q - 3);
  return out;
}

Rational c_prime(const Rational& eps) {
  if (!(eps > Rational(0)) || !(eps < Rational(1, 9))) {
    throw std::invalid_argument("c_prime: need 0 < eps < 1/9");
  }
  return Rational(9) * eps / (Rational(2) - Rational(18) * eps);
}

long long q_for_eps(const Rational& eps) {
  if (!(eps > Rational(0))) throw std::invalid_argument("q_for_eps: need eps > 0");
  const Rational inv = Rational(1) / (Rational(6) * eps);
  return (inv.numerator() + inv.denominator() - 1) / inv.denominator();
}

}  // namespace hampow
