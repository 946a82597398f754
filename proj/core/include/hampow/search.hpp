#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hampow/gadgets.hpp"
#include "hampow/graph.hpp"
#include "hampow/rational.hpp"

namespace hampow {

inline constexpr std::uint64_t kNoCap = ~0ULL;

struct SearchBudget {
  std::uint64_t max_nodes = 1'000'000;
  std::int64_t max_millis = 60'000;
  bool record_stats = true;

  void validate() const;
};

enum class Verdict { Found, NotFound, Timeout };

const char* verdict_name(Verdict v);

// Found carries a full cyclic ordering; NotFound is an exhaustive proof of
// absence; Timeout means a budget ran out and must be treated as censored.
struct SearchOutcome {
  Verdict verdict = Verdict::NotFound;
  std::vector<int> witness;
  std::uint64_t nodes_expanded = 0;
  double elapsed_ms = 0.0;
};

// Exact backtracking search for the m-th power of a Hamiltonian cycle.
// Anchored at vertex 0, reflection broken by witness[1] < witness[n-1];
// deterministic given the graph. Requires n >= m + 2.
SearchOutcome contains_power_ham_cycle(const Graph& g, int m, const SearchBudget& budget);

// Direct re-validation of an ordering against the adjacency matrix; shares no
// state with the solver.
bool is_power_ham_cycle_witness(const Graph& g, std::span<const int> order, int m);

struct CliqueCount {
  std::uint64_t count = 0;
  bool capped = false;
};

// Unlabeled K_ell count; stops early once the count reaches cap.
CliqueCount count_cliques(const Graph& g, int ell, std::uint64_t cap = kNoCap);

// Enumeration over cliques with all vertices inside `allowed`; the callback
// sees each vertex set once, in ascending order.
CliqueCount enumerate_cliques(const Graph& g, int ell, const VertexSet& allowed,
                              std::uint64_t cap,
                              const std::function<void(std::span<const int>)>& callback);

struct ConnectabilitySpec {
  ProblemParams params;
  Rational xi{1, 100};

  void validate() const;  // params valid, 0 < xi <= 1
};

// Ordered (k+1)-cliques (y_1..y_{k+1}), disjoint from x, with y_i in the
// joint neighborhood of the tuple's suffix starting at block i. The tuple is
// listed with the attachment end last: suffixes always contain x_m.
CliqueCount connectable_witness_count(const Graph& g, std::span<const int> x,
                                      const ConnectabilitySpec& spec, std::uint64_t cap);

// witness count >= xi * n^(k+1).
bool is_connectable(const Graph& g, std::span<const int> x, const ConnectabilitySpec& spec);

// y_i in N(x_i, ..., x_last, y_1, ..., y_{i-1}) for every i.
bool interlaces(const Graph& g, std::span<const int> x, std::span<const int> y);

struct AbsorberReport {
  bool half = false;
  bool full = false;
  bool absorbs = false;
};

// tuple2m is in path order (x_m..x_1, x_1'..x_m'). half: neighbors of v,
// connectable ends, and the (r,l,...,l,r)-blow-up pattern in g_det. full:
// the same with the blow-up strengthened to an m-path in g_union. absorbs:
// inserting v in the middle still spans an m-path in g_union.
AbsorberReport absorber_check(const Graph& g_det, const Graph& g_union, int v,
                              std::span<const int> tuple2m, const ConnectabilitySpec& spec);

}  // namespace hampow
