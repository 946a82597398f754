#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hampow/gadgets.hpp"
#include "hampow/graph.hpp"

namespace hampow {

// An m-path embedding target split into a blow-up base and k+1 braids living
// on the same vertex ids, edge-disjoint by construction. host_order lists the
// vertices in the order along which the m-path must appear.
struct Decomposition {
  std::vector<int> host_order;
  LabeledGadget base;    // blow-up of a path power (or cycle power, re-ordered)
  LabeledGadget braids;  // k+1 braid copies on interleaved segments
  int target_m = 0;
};

struct VerificationReport {
  bool edge_disjoint = false;
  bool covers_m_path = false;
  // (host position, missing forward offset) of the first uncovered pair.
  std::optional<std::pair<int, int>> first_failure;
  std::size_t braid_edges_used = 0;
};

// Base: blow_up(power_path((k+1)t, k), [l,...]); braid copy i runs along the
// segments congruent to i mod k+1. The union covers P^m on the identity order.
Decomposition decompose_path(const ProblemParams& params, int t);

// Base: blow_up(power_cycle(2k+2, k), [l*t/2,...]); class i contributes the
// segments congruent to i mod 2k+2, so each braid copy touches only two
// antipodal classes. t must be even.
Decomposition decompose_cycle(const ProblemParams& params, int t);

VerificationReport verify_decomposition(const Decomposition& d);

}  // namespace hampow
