#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hampow/decomposition.hpp"
#include "hampow/densities.hpp"
#include "hampow/experiments.hpp"
#include "hampow/gadgets.hpp"
#include "hampow/graph.hpp"
#include "hampow/rational.hpp"
#include "hampow/search.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace hampow;

// Human mode prints the same data as JSON, flattened to key = value lines.
void print_human(const json& j, const std::string& prefix) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      print_human(value, prefix.empty() ? key : prefix + "." + key);
    }
  } else {
    std::cout << prefix << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

void emit(const json& doc, const std::string& mode) {
  if (mode == "human") {
    print_human(doc, "");
  } else {
    std::cout << doc.dump() << '\n';
  }
}

std::vector<long long> parse_csv_ints(const std::string& text, std::size_t expect,
                                      const char* what) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoll(tok));
  if (out.size() != expect) {
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(expect) +
                                " comma-separated values");
  }
  return out;
}

void write_gadget_files(const LabeledGadget& gadget, const std::string& out_path,
                        const std::string& labels_path) {
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    write_edge_list(out, gadget.graph);
  }
  if (!labels_path.empty()) {
    std::ofstream out(labels_path);
    if (!out) throw std::runtime_error("cannot write " + labels_path);
    write_labels(out, gadget);
  }
}

json rational_json(const Rational& q) { return format_rational(q); }

RandomModel model_from_flags(long long n, std::optional<double> p, std::optional<double> c,
                             std::optional<double> exponent) {
  if (p && (c || exponent)) throw std::invalid_argument("give --p or --C/--exponent, not both");
  if (p) return RandomModel::with_p(n, *p);
  if (c && exponent) return RandomModel::with_scale(n, *c, *exponent);
  throw std::invalid_argument("need --p or both --C and --exponent");
}

int run_gadget(const std::string& braid_arg, const std::string& multi_arg,
               const std::string& bminus_arg, const std::string& lower_arg,
               const std::string& out_path, const std::string& labels_path,
               const std::string& mode) {
  const int given = !braid_arg.empty() + !multi_arg.empty() + !bminus_arg.empty() +
                    !lower_arg.empty();
  if (given != 1) {
    throw std::invalid_argument("choose exactly one of --braid/--multi-braid/--b-minus/--lower-bound");
  }
  json doc;
  if (!braid_arg.empty()) {
    const auto v = parse_csv_ints(braid_arg, 3, "--braid");
    const auto g = braid(static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2]));
    write_gadget_files(g, out_path, labels_path);
    doc = {{"kind", "braid"},
           {"l", v[0]},
           {"r", v[1]},
           {"t", v[2]},
           {"n", g.graph.order()},
           {"edges", g.graph.edge_count()}};
  } else if (!multi_arg.empty()) {
    const auto v = parse_csv_ints(multi_arg, 4, "--multi-braid");
    const auto g = multi_braid(static_cast<int>(v[0]), static_cast<int>(v[1]),
                               static_cast<int>(v[2]), static_cast<int>(v[3]));
    write_gadget_files(g, out_path, labels_path);
    doc = {{"kind", "multi_braid"}, {"s", v[0]}, {"l", v[1]}, {"r", v[2]}, {"t", v[3]},
           {"n", g.graph.order()}, {"edges", g.graph.edge_count()}};
  } else if (!bminus_arg.empty()) {
    const auto v = parse_csv_ints(bminus_arg, 3, "--b-minus");
    const auto params = ProblemParams::checked(static_cast<int>(v[0]), static_cast<int>(v[1]),
                                               static_cast<int>(v[2]));
    const auto g = b_minus(params);
    write_gadget_files(g, out_path, labels_path);
    doc = {{"kind", "b_minus"}, {"k", params.k}, {"l", params.ell}, {"r", params.r},
           {"m", params.m()}, {"n", g.graph.order()}, {"edges", g.graph.edge_count()}};
  } else {
    std::stringstream ss(lower_arg);
    std::string n_tok, k_tok, eps_tok;
    if (!std::getline(ss, n_tok, ',') || !std::getline(ss, k_tok, ',') ||
        !std::getline(ss, eps_tok, ',')) {
      throw std::invalid_argument("--lower-bound: expected n,k,eps");
    }
    const LowerBoundSpec spec{std::stoi(n_tok), std::stoi(k_tok), parse_rational(eps_tok)};
    const Graph g = lower_bound_graph(spec);
    if (!labels_path.empty()) {
      throw std::invalid_argument("--lower-bound emits a plain graph, no labels");
    }
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) throw std::runtime_error("cannot write " + out_path);
      write_edge_list(out, g);
    }
    doc = {{"kind", "lower_bound"},
           {"n", spec.n},
           {"k", spec.k},
           {"eps", format_rational(spec.eps)},
           {"w_size", spec.w_size()},
           {"min_degree", min_degree(g)},
           {"edges", g.edge_count()}};
  }
  emit(doc, mode);
  return 0;
}

int run_decompose(int k, int l, int r, int t, bool cycle, const std::string& dump_base,
                  const std::string& dump_braids, const std::string& labels_base,
                  const std::string& labels_braids, const std::string& mode) {
  const auto params = ProblemParams::checked(k, l, r);
  const Decomposition d = cycle ? decompose_cycle(params, t) : decompose_path(params, t);
  const VerificationReport report = verify_decomposition(d);
  write_gadget_files(d.base, dump_base, labels_base);
  write_gadget_files(d.braids, dump_braids, labels_braids);

  json doc = {{"k", k},          {"l", l},
              {"r", r},          {"t", t},
              {"m", params.m()}, {"cycle", cycle},
              {"n", d.base.graph.order()},
              {"edge_disjoint", report.edge_disjoint},
              {"covers_m_path", report.covers_m_path},
              {"base_edges", d.base.graph.edge_count()},
              {"braid_edges_used", report.braid_edges_used}};
  if (report.first_failure) {
    doc["first_failure"] = {{"position", report.first_failure->first},
                            {"offset", report.first_failure->second}};
  } else {
    doc["first_failure"] = nullptr;
  }
  emit(doc, mode);
  return 0;
}

int run_density(const std::string& graph_path, const std::string& braid_arg, long long n,
                std::optional<double> p, std::optional<double> c, std::optional<double> exponent,
                int cap, const std::string& mode) {
  if (graph_path.empty() == braid_arg.empty()) {
    throw std::invalid_argument("give exactly one of --graph or --braid");
  }
  const RandomModel model = model_from_flags(n, p, c, exponent);

  Graph g;
  json doc;
  std::optional<BraidDensityResult> closed;
  if (!braid_arg.empty()) {
    const auto v = parse_csv_ints(braid_arg, 3, "--braid");
    g = braid(static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2])).graph;
    closed = braid_m_closed_form(static_cast<int>(v[0]), static_cast<int>(v[1]),
                                 static_cast<int>(v[2]));
  } else {
    g = read_edge_list_file(graph_path);
  }

  doc["v"] = g.order();
  doc["e"] = g.edge_count();
  doc["n"] = model.n;
  doc["p"] = model.p();
  doc["d"] = g.order() >= 2 ? rational_json(Rational(static_cast<long long>(g.edge_count()),
                                                     g.order() - 1))
                            : rational_json(Rational(0));
  const bool exhaustive = g.order() <= cap;
  doc["exhaustive"] = exhaustive;
  if (exhaustive) {
    const DensityProfile profile = density_profile(g, model, cap);
    doc["m"] = rational_json(profile.m);
    doc["psi_log"] = profile.psi_log_value;
    doc["phi_log"] = profile.phi_log_value;
    doc["phi"] = std::exp(profile.phi_log_value);
    doc["argmin_subgraph"] = profile.argmin_subgraph;
  } else {
    if (!closed || !closed->value) {
      throw std::invalid_argument("graph exceeds the enumeration cap and has no closed form");
    }
    doc["m"] = nullptr;
    doc["psi_log"] = psi_log(g.order(), static_cast<std::int64_t>(g.edge_count()), model);
    doc["phi_log"] = nullptr;
    doc["phi"] = nullptr;
    doc["argmin_subgraph"] = nullptr;
  }
  if (closed) {
    doc["m_closed_form"] = closed->value ? rational_json(*closed->value) : json(nullptr);
    doc["m_closed_form_kind"] = closed->form == BraidDensityForm::CliqueHalfEll ? "l_over_2"
                                : closed->form == BraidDensityForm::Braid32     ? "braid_3_2"
                                                                                : "none";
  }
  emit(doc, mode);
  return 0;
}

int run_search(const std::string& graph_path, int m, std::uint64_t max_nodes,
               std::int64_t max_ms, const std::string& mode) {
  const Graph g = read_edge_list_file(graph_path);
  SearchBudget budget;
  budget.max_nodes = max_nodes;
  budget.max_millis = max_ms;
  const SearchOutcome outcome = contains_power_ham_cycle(g, m, budget);
  json doc = {{"verdict", verdict_name(outcome.verdict)},
              {"n", g.order()},
              {"m", m},
              {"nodes", outcome.nodes_expanded},
              {"elapsed_ms", outcome.elapsed_ms}};
  if (outcome.verdict == Verdict::Found) {
    doc["witness"] = outcome.witness;
  } else {
    doc["witness"] = nullptr;
  }
  emit(doc, mode);
  return 0;
}

json probe_json(const ProbeStat& st) {
  return {{"p", st.p},       {"successes", st.successes}, {"failures", st.failures},
          {"timeouts", st.timeouts}, {"trials", st.trials},  {"rate", st.rate}};
}

json p_half_json(const PHalfResult& r) {
  json probes = json::array();
  for (const auto& st : r.stats) probes.push_back(probe_json(st));
  return {{"n", r.n},   {"p_half", r.p_half}, {"lo", r.lo},
          {"hi", r.hi}, {"probes", r.probes}, {"probe_stats", probes}};
}

int run_experiment(const std::string& config_path, int workers_override,
                   const std::string& out_path, const std::string& summary_path,
                   const std::string& mode) {
  ExperimentConfig cfg = parse_experiment_config_file(config_path);
  if (workers_override > 0) cfg.workers = workers_override;

  std::ofstream out_file;
  std::ostream* records = nullptr;
  if (!out_path.empty()) {
    out_file.open(out_path);
    if (!out_file) throw std::runtime_error("cannot write " + out_path);
    records = &out_file;
  }

  if (cfg.mode == ExperimentMode::Curve) {
    // With no --out the record stream is the primary output.
    const bool stream_stdout = out_path.empty() && mode != "human";
    const auto points = success_curve(cfg, stream_stdout ? &std::cout : records);
    if (!summary_path.empty()) {
      std::ofstream csv(summary_path);
      if (!csv) throw std::runtime_error("cannot write " + summary_path);
      write_csv_summary(csv, points);
    }
    if (!stream_stdout) {
      for (const auto& pt : points) {
        json doc = {{"n", pt.n},           {"p", pt.p},
                    {"successes", pt.successes}, {"trials", pt.trials},
                    {"timeouts", pt.timeouts},   {"rate", pt.rate},
                    {"ci_lo", pt.ci_lo},         {"ci_hi", pt.ci_hi}};
        emit(doc, mode);
      }
    }
    return 0;
  }

  if (cfg.mode == ExperimentMode::PHalf) {
    for (int n : cfg.ns) {
      const PHalfResult r = find_p_half(cfg, n, records);
      emit(p_half_json(r), mode);
    }
    return 0;
  }

  const ThresholdResult r = run_threshold(cfg, records);
  json per_n = json::array();
  for (const auto& ph : r.per_n) per_n.push_back(p_half_json(ph));
  emit(json{{"per_n", per_n}, {"slope", r.fit.slope}, {"stderr", r.fit.stderr_value}}, mode);
  return 0;
}

int run_audit(bool paths, long long q, const std::string& eps_arg, int n, int k, int l, int r,
              int m, std::optional<double> p, std::optional<double> c,
              std::optional<double> exponent, std::uint64_t seed, std::uint64_t cap,
              const std::string& mode) {
  if (paths) {
    if (q < 4) throw std::invalid_argument("--paths needs --q >= 4");
    const PathEdgeAudit audit = path_edge_audit(q);
    json doc = {{"q", audit.q},
                {"p1_edges", audit.p1_edges},
                {"p2_edges", audit.p2_edges},
                {"p3_edges", audit.p3_edges},
                {"p4_edges", audit.p4_edges},
                {"p4_quoted_edges", audit.p4_quoted_edges},
                {"p4_discrepancy", audit.p4_discrepancy},
                {"p2_exponent", rational_json(audit.p2_exponent)}};
    if (!eps_arg.empty()) {
      const Rational eps = parse_rational(eps_arg);
      doc["eps"] = format_rational(eps);
      doc["c_prime"] = rational_json(c_prime(eps));
      doc["q_for_eps"] = q_for_eps(eps);
    }
    emit(doc, mode);
    return 0;
  }

  if (n <= 0 || k <= 0) throw std::invalid_argument("audit needs --n and --k");
  ProblemParams params;
  if (l > 0 && r > 0) {
    params = ProblemParams::checked(k, l, r);
    if (m > 0 && params.m() != m) throw std::invalid_argument("m disagrees with k*l + r");
  } else if (m > 0) {
    const int ell = (m + 1 + k) / (k + 1);
    params = ProblemParams::checked(k, ell, m - k * ell);
  } else {
    throw std::invalid_argument("audit needs --l/--r or --m");
  }
  if (eps_arg.empty()) throw std::invalid_argument("audit needs --eps");
  const LowerBoundSpec spec{n, k, parse_rational(eps_arg)};
  const RandomModel model = model_from_flags(n, p, c, exponent);
  const AuditReport report = lower_bound_audit(spec, params, model, seed, cap);
  json doc = {{"n", report.n},
              {"k", report.k},
              {"l", report.ell},
              {"m", report.m},
              {"eps", format_rational(spec.eps)},
              {"p", model.p()},
              {"seed", seed},
              {"pigeonhole_valid", report.pigeonhole_valid},
              {"w_avoiding_cliques", report.w_avoiding_cliques},
              {"structural_ok", report.structural_ok},
              {"intra_part_cliques", report.intra_part_cliques},
              {"demand", report.demand},
              {"demand_met", report.demand_met},
              {"certifies_absence", report.certifies_absence}};
  emit(doc, mode);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"powers of Hamiltonian cycles in randomly augmented graphs: gadget "
               "constructions, decompositions, density machinery, exact search, and "
               "Monte-Carlo experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kBuildId));

  std::string output_mode = "json";

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output", output_mode, "json or human")
        ->check(CLI::IsMember({"json", "human"}));
  };

  // gadget
  std::string braid_arg, multi_arg, bminus_arg, lower_arg, out_path, labels_path;
  auto* gadget_cmd = app.add_subcommand("gadget", "construct a named gadget graph");
  gadget_cmd->add_option("--braid", braid_arg, "l,r,t");
  gadget_cmd->add_option("--multi-braid", multi_arg, "s,l,r,t");
  gadget_cmd->add_option("--b-minus", bminus_arg, "k,l,r");
  gadget_cmd->add_option("--lower-bound", lower_arg, "n,k,eps");
  gadget_cmd->add_option("--out", out_path, "write the edge list here");
  gadget_cmd->add_option("--labels", labels_path, "write the label sidecar here");
  add_output(gadget_cmd);

  // decompose
  int dk = 0, dl = 0, dr = 0, dt = 0;
  bool dcycle = false;
  std::string dump_base, dump_braids, labels_base, labels_braids;
  auto* dec_cmd = app.add_subcommand("decompose", "build and verify an m-path decomposition");
  dec_cmd->add_option("--k", dk)->required();
  dec_cmd->add_option("--l", dl)->required();
  dec_cmd->add_option("--r", dr)->required();
  dec_cmd->add_option("--t", dt)->required();
  dec_cmd->add_flag("--cycle", dcycle, "use the cycle-power base");
  dec_cmd->add_option("--dump-base", dump_base);
  dec_cmd->add_option("--dump-braids", dump_braids);
  dec_cmd->add_option("--labels-base", labels_base);
  dec_cmd->add_option("--labels-braids", labels_braids);
  add_output(dec_cmd);

  // density
  std::string den_graph, den_braid;
  long long den_n = 0;
  std::optional<double> den_p, den_c, den_expo;
  int den_cap = kDefaultSubsetCap;
  auto* den_cmd = app.add_subcommand("density", "density profile of a graph at scale (n, p)");
  den_cmd->add_option("--graph", den_graph, "edge-list file");
  den_cmd->add_option("--braid", den_braid, "l,r,t");
  den_cmd->add_option("--n", den_n)->required();
  den_cmd->add_option("--p", den_p);
  den_cmd->add_option("--C", den_c);
  den_cmd->add_option("--exponent", den_expo);
  den_cmd->add_option("--cap", den_cap, "subset enumeration cap");
  add_output(den_cmd);

  // search
  std::string search_graph;
  int search_m = 0;
  std::uint64_t search_nodes = 1'000'000;
  std::int64_t search_ms = 60'000;
  auto* search_cmd = app.add_subcommand("search", "exact m-th-power Hamiltonian cycle search");
  search_cmd->add_option("--graph", search_graph)->required();
  search_cmd->add_option("--m", search_m)->required();
  search_cmd->add_option("--max-nodes", search_nodes);
  search_cmd->add_option("--max-ms", search_ms);
  add_output(search_cmd);

  // experiment
  std::string exp_config, exp_out, exp_summary;
  int exp_workers = 0;
  auto* exp_cmd = app.add_subcommand("experiment", "run a Monte-Carlo experiment config");
  exp_cmd->add_option("--config", exp_config)->required();
  exp_cmd->add_option("--workers", exp_workers, "override the config worker count");
  exp_cmd->add_option("--out", exp_out, "write the JSONL record stream here");
  exp_cmd->add_option("--summary", exp_summary, "write the CSV summary here");
  add_output(exp_cmd);

  // audit
  bool audit_paths = false;
  long long audit_q = 0;
  std::string audit_eps;
  int audit_n = 0, audit_k = 0, audit_l = 0, audit_r = 0, audit_m = 0;
  std::optional<double> audit_p, audit_c, audit_expo;
  std::uint64_t audit_seed = 0, audit_cap = 10'000'000;
  auto* audit_cmd = app.add_subcommand("audit", "lower-bound counting audits");
  audit_cmd->add_flag("--paths", audit_paths, "path-power edge-count audit");
  audit_cmd->add_option("--q", audit_q);
  audit_cmd->add_option("--eps", audit_eps, "rational, e.g. 1/16");
  audit_cmd->add_option("--n", audit_n);
  audit_cmd->add_option("--k", audit_k);
  audit_cmd->add_option("--l", audit_l);
  audit_cmd->add_option("--r", audit_r);
  audit_cmd->add_option("--m", audit_m);
  audit_cmd->add_option("--p", audit_p);
  audit_cmd->add_option("--C", audit_c);
  audit_cmd->add_option("--exponent", audit_expo);
  audit_cmd->add_option("--seed", audit_seed);
  audit_cmd->add_option("--cap", audit_cap, "clique enumeration cap");
  add_output(audit_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "{\"error\":\"" << e.what() << "\"}\n";
    return 2;
  }

  try {
    if (gadget_cmd->parsed()) {
      return run_gadget(braid_arg, multi_arg, bminus_arg, lower_arg, out_path, labels_path,
                        output_mode);
    }
    if (dec_cmd->parsed()) {
      return run_decompose(dk, dl, dr, dt, dcycle, dump_base, dump_braids, labels_base,
                           labels_braids, output_mode);
    }
    if (den_cmd->parsed()) {
      return run_density(den_graph, den_braid, den_n, den_p, den_c, den_expo, den_cap,
                         output_mode);
    }
    if (search_cmd->parsed()) {
      return run_search(search_graph, search_m, search_nodes, search_ms, output_mode);
    }
    if (exp_cmd->parsed()) {
      return run_experiment(exp_config, exp_workers, exp_out, exp_summary, output_mode);
    }
    if (audit_cmd->parsed()) {
      return run_audit(audit_paths, audit_q, audit_eps, audit_n, audit_k, audit_l, audit_r,
                       audit_m, audit_p, audit_c, audit_expo, audit_seed, audit_cap, output_mode);
    }
  } catch (const std::exception& e) {
    std::string msg = e.what();
    for (auto& ch : msg) {
      if (ch == '"') ch = '\'';
    }
    std::cerr << "{\"error\":\"" << msg << "\"}\n";
    return 1;
  }
  return 0;
}
