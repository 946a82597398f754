#include "hampow/densities.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "hampow/gadgets.hpp"
#include "hampow/graph.hpp"
#include "oracles.hpp"

using namespace hampow;

namespace {

// Connectivity-restricted variant of the density maximum, for the
// connected-argmax cross-check.
Rational max_density_connected(const Graph& g) {
  const int n = g.order();
  REQUIRE(n <= 16);
  Rational best(0);
  for (unsigned s = 1; s < (1u << n); ++s) {
    std::vector<int> verts;
    for (int v = 0; v < n; ++v) {
      if (s & (1u << v)) verts.push_back(v);
    }
    if (verts.size() < 2) continue;
    // BFS over the induced subgraph
    std::vector<int> stack = {verts[0]};
    std::set<int> seen = {verts[0]};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : verts) {
        if (!seen.count(v) && g.has_edge(u, v)) {
          seen.insert(v);
          stack.push_back(v);
        }
      }
    }
    if (seen.size() != verts.size()) continue;
    long long e = 0;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      for (std::size_t j = i + 1; j < verts.size(); ++j) {
        if (g.has_edge(verts[i], verts[j])) ++e;
      }
    }
    const Rational d(e, static_cast<long long>(verts.size()) - 1);
    if (d > best) best = d;
  }
  return best;
}

}  // namespace

TEST_CASE("random model evaluation") {
  const RandomModel plain = RandomModel::with_p(100, 0.25);
  CHECK(plain.p() == 0.25);
  CHECK(plain.log_p() == doctest::Approx(std::log(0.25)));

  const RandomModel scaled = RandomModel::with_scale(100, 2.0, -0.5);
  CHECK(scaled.p() == doctest::Approx(0.2));
  CHECK(scaled.log_p() == doctest::Approx(std::log(2.0) - 0.5 * std::log(100.0)));

  // clamping at 1 and the p = 0 boundary
  CHECK(RandomModel::with_scale(10, 5.0, 0.0).p() == 1.0);
  CHECK(RandomModel::with_scale(10, 5.0, 0.0).log_p() == 0.0);
  CHECK(RandomModel::with_p(10, 0.0).log_p() == -std::numeric_limits<double>::infinity());
  CHECK(RandomModel::with_scale(10, 0.0, -1.0).p() == 0.0);

  CHECK_THROWS_AS(RandomModel::with_p(0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(RandomModel::with_p(5, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(RandomModel::with_scale(5, -1.0, 0.0), std::invalid_argument);
}

TEST_CASE("psi in the log domain") {
  // p = 1: Psi = n^v
  CHECK(psi_log(3, 2, RandomModel::with_p(7, 1.0)) == doctest::Approx(3 * std::log(7.0)));

  // single edge at n=100, p=0.01
  CHECK(std::exp(psi_log(2, 1, RandomModel::with_p(100, 0.01))) == doctest::Approx(100.0));

  // K_l at p = n^(-2/l) scales like n
  for (int ell : {2, 3, 4, 5}) {
    const auto model = RandomModel::with_scale(1000, 1.0, -2.0 / ell);
    const double expected = std::log(1000.0);
    CHECK(psi_log(ell, ell * (ell - 1) / 2, model) == doctest::Approx(expected).epsilon(1e-9));
  }

  CHECK(psi_log(2, 1, RandomModel::with_p(10, 0.0)) ==
        -std::numeric_limits<double>::infinity());
  CHECK(psi_log(2, 0, RandomModel::with_p(10, 0.0)) == doctest::Approx(2 * std::log(10.0)));
  CHECK_THROWS_AS(psi_log(0, 0, RandomModel::with_p(10, 0.5)), std::invalid_argument);
}

TEST_CASE("phi minimizes over subgraphs") {
  const auto single = phi(make_graph(2, {{0, 1}}), RandomModel::with_p(100, 0.01));
  CHECK(std::exp(single.log_value) == doctest::Approx(100.0));
  CHECK(single.argmin == std::vector<int>{0, 1});

  const auto tri = phi(complete_graph(3), RandomModel::with_p(10, 0.1));
  CHECK(std::exp(tri.log_value) == doctest::Approx(1.0));
  CHECK(tri.argmin == std::vector<int>{0, 1, 2});

  // p = 1 makes the single edge the unique minimum shape; smallest mask wins
  const auto unit = phi(complete_graph(4), RandomModel::with_p(10, 1.0));
  CHECK(unit.argmin == std::vector<int>{0, 1});

  CHECK_THROWS_AS(phi(empty_graph(3), RandomModel::with_p(10, 0.5)), std::invalid_argument);
  CHECK_THROWS_AS(phi(complete_graph(17), RandomModel::with_p(10, 0.5), 16),
                  std::invalid_argument);
  CHECK_THROWS_AS(phi(complete_graph(5), RandomModel::with_p(10, 0.5), 30),
                  std::invalid_argument);
}

TEST_CASE("phi of the absorber braids scales like C n in the strong regime") {
  for (int ell : {2, 3, 4}) {
    const auto g = multi_braid(2, ell, 1, 2).graph;  // k = 1
    for (double c : {1.0, 2.0}) {
      for (std::int64_t n : {100LL, 1000LL, 10000LL}) {
        const auto model = RandomModel::with_scale(n, c, -2.0 / ell);
        const auto f = phi(g, model, 16);
        CHECK(f.log_value >= std::log(c * static_cast<double>(n)) - 1e-9);
      }
    }
  }
}

TEST_CASE("max density brute force") {
  for (int ell = 2; ell <= 6; ++ell) {
    CHECK(max_density_m(complete_graph(ell)).value == Rational(ell, 2));
  }
  for (int t = 1; t <= 4; ++t) {
    CHECK(max_density_m(braid(3, 2, t).graph).value == Rational(6 * t - 3, 3 * t - 1));
  }
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    CHECK(max_density_m(oracles::random_tree(9, seed)).value == Rational(1));
  }
  CHECK_THROWS_AS(max_density_m(complete_graph(17), 16), std::invalid_argument);
}

TEST_CASE("closed forms agree with brute force on the braid grid") {
  for (int ell = 2; ell <= 6; ++ell) {
    for (int r = 1; r <= ell; ++r) {
      for (int t = 1; t <= 4 && t * ell <= 12; ++t) {
        const auto closed = braid_m_closed_form(ell, r, t);
        if (!closed.value) continue;
        CAPTURE(ell);
        CAPTURE(r);
        CAPTURE(t);
        CHECK(max_density_m(braid(ell, r, t).graph).value == *closed.value);
      }
    }
  }
}

TEST_CASE("braid closed form selection") {
  CHECK(braid_m_closed_form(6, 2, 3).value == Rational(3));
  CHECK(braid_m_closed_form(6, 2, 3).form == BraidDensityForm::CliqueHalfEll);
  CHECK(braid_m_closed_form(3, 2, 2).value == Rational(9, 5));
  CHECK(braid_m_closed_form(3, 2, 2).form == BraidDensityForm::Braid32);
  CHECK(braid_m_closed_form(2, 1, 5).value == Rational(1));
  CHECK_FALSE(braid_m_closed_form(3, 3, 2).value.has_value());
  CHECK(braid_m_closed_form(3, 3, 2).form == BraidDensityForm::None);
  CHECK_THROWS_AS(braid_m_closed_form(1, 1, 1), std::invalid_argument);
}

TEST_CASE("disjoint union lowers the density and the argmax is connected") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    Graph a = oracles::random_graph(5, 0.6, seed);
    Graph b = oracles::random_graph(5, 0.6, seed + 50);
    if (a.edge_count() == 0 || b.edge_count() == 0) continue;

    GraphBuilder joined(10);
    for (auto [u, v] : a.edges()) joined.add_edge(u, v);
    for (auto [u, v] : b.edges()) joined.add_edge(u + 5, v + 5);
    const Graph both = std::move(joined).build();

    const Rational da(static_cast<long long>(a.edge_count()), a.order() - 1);
    const Rational db(static_cast<long long>(b.edge_count()), b.order() - 1);
    const Rational du(static_cast<long long>(both.edge_count()), both.order() - 1);
    CHECK(du < std::max(da, db));

    CHECK(max_density_m(both).value == max_density_connected(both));
  }
}

TEST_CASE("janson bound") {
  const Graph tri = complete_graph(3);
  const auto model = RandomModel::with_p(10, 0.1);
  CHECK(janson_upper_bound(1.0, tri, model) == doctest::Approx(std::exp(-1.0 / 512)));

  // vacuous at the p = 0 boundary
  CHECK(janson_upper_bound(0.5, tri, RandomModel::with_p(10, 0.0)) == 1.0);

  // monotone decreasing in tau and in Phi (phi grows with p here)
  double prev = 2.0;
  for (double tau : {0.1, 0.3, 0.6, 1.0}) {
    const double b = janson_upper_bound(tau, tri, model);
    CHECK(b < prev);
    prev = b;
  }
  prev = 2.0;
  for (double p : {0.01, 0.05, 0.2, 0.8}) {
    const double b = janson_upper_bound(1.0, tri, RandomModel::with_p(50, p));
    CHECK(b < prev);
    prev = b;
  }

  CHECK_THROWS_AS(janson_upper_bound(0.0, tri, model), std::invalid_argument);
  CHECK_THROWS_AS(janson_upper_bound(1.5, tri, model), std::invalid_argument);
}

TEST_CASE("profile invariants on random graphs") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = oracles::random_graph(8, 0.5, seed);
    if (g.edge_count() == 0) continue;
    const auto model = RandomModel::with_p(40, 0.2);
    const DensityProfile prof = density_profile(g, model);
    CHECK(prof.m >= prof.d);
    CHECK(prof.phi_log_value <= prof.psi_log_value + 1e-12);

    // Phi is at most Psi of any clique inside g
    for (int ell = 2; ell <= 4; ++ell) {
      std::vector<int> clique;
      for (int a = 0; a < 8 && clique.empty(); ++a) {
        for (int b = a + 1; b < 8 && clique.empty(); ++b) {
          if (!g.has_edge(a, b)) continue;
          if (ell == 2) {
            clique = {a, b};
            break;
          }
          for (int c = b + 1; c < 8 && clique.empty(); ++c) {
            if (g.has_edge(a, c) && g.has_edge(b, c)) {
              if (ell == 3) clique = {a, b, c};
            }
          }
        }
      }
      if (!clique.empty()) {
        const double clique_psi =
            psi_log(static_cast<int>(clique.size()),
                    static_cast<long long>(clique.size() * (clique.size() - 1) / 2), model);
        CHECK(prof.phi_log_value <= clique_psi + 1e-12);
      }
    }
  }
}
