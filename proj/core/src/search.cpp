#include "hampow/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace hampow {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void collect_bits(std::span<const std::uint64_t> words, std::vector<int>& out) {
  out.clear();
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::uint64_t bits = words[w];
    while (bits) {
      out.push_back(static_cast<int>(w * 64) + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
}

}  // namespace

void SearchBudget::validate() const {
  if (max_nodes == 0) throw std::invalid_argument("budget: max_nodes must be positive");
  if (max_millis <= 0) throw std::invalid_argument("budget: max_millis must be positive");
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Found: return "found";
    case Verdict::NotFound: return "not_found";
    case Verdict::Timeout: return "timeout";
  }
  return "unknown";
}

namespace {

// True when `allowed` spans a clique on `size` vertices; early-exit DFS.
bool has_clique_within(const Graph& g, std::span<const std::uint64_t> allowed, int size,
                       std::vector<std::uint64_t>& scratch_pool) {
  if (size <= 0) return true;
  const std::size_t words = g.words_per_row();
  int present = 0;
  for (std::uint64_t w : allowed) present += std::popcount(w);
  if (present < size) return false;
  if (size == 1) return true;

  // scratch_pool holds one candidate mask per depth
  if (scratch_pool.size() < static_cast<std::size_t>(size) * words) {
    scratch_pool.assign(static_cast<std::size_t>(size) * words, 0);
  }
  auto level = [&](int depth) {
    return std::span<std::uint64_t>(scratch_pool.data() + static_cast<std::size_t>(depth) * words,
                                    words);
  };
  std::copy(allowed.begin(), allowed.end(), level(0).begin());
  auto rec = [&](auto&& self, int depth) -> bool {
    auto cur = level(depth);
    int pc = 0;
    for (std::uint64_t w : cur) pc += std::popcount(w);
    if (pc < size - depth) return false;
    if (depth == size) return true;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = cur[w];
      while (bits) {
        const int v = static_cast<int>(w * 64) + std::countr_zero(bits);
        bits &= bits - 1;
        if (depth + 1 == size) return true;
        auto r = g.row(v);
        auto nxt = level(depth + 1);
        // candidates above v keep each clique visited once
        for (std::size_t x = 0; x < words; ++x) nxt[x] = cur[x] & r[x];
        for (std::size_t x = 0; x < w; ++x) nxt[x] = 0;
        nxt[w] &= v % 64 == 63 ? 0ULL : ~((2ULL << (v % 64)) - 1);
        if (self(self, depth + 1)) return true;
      }
    }
    return false;
  };
  return rec(rec, 0);
}

// Any vertex set hitting every K_{m+1} bounds the disjoint-K_{m+1} packing
// from above; greedily removing the busiest vertex yields one such set.
int clique_packing_bound(const Graph& g, int clique_size) {
  const int n = g.order();
  VertexSet avail = VertexSet::all(n);
  int hits = 0;
  for (;;) {
    int best_v = -1;
    std::uint64_t best_count = 0;
    for (int v = 0; v < n; ++v) {
      if (!avail.contains(v)) continue;
      VertexSet around = g.neighbors(v);
      around &= avail;
      around.erase(v);
      const std::uint64_t through =
          enumerate_cliques(g, clique_size - 1, around, 2'000'000, nullptr).count;
      if (through > best_count) {
        best_count = through;
        best_v = v;
      }
    }
    if (best_v < 0) break;
    avail.erase(best_v);
    ++hits;
    if (hits > n) break;
  }
  return hits;
}

}  // namespace

SearchOutcome contains_power_ham_cycle(const Graph& g, int m, const SearchBudget& budget) {
  budget.validate();
  if (m < 1) throw std::invalid_argument("search: need m >= 1");
  const int n = g.order();
  if (n < m + 2) throw std::invalid_argument("search: need n >= m + 2");

  const auto start = Clock::now();
  SearchOutcome out;

  // delta(C_n^m) = min(2m, n-1); anything below cannot contain it.
  if (min_degree(g) < std::min(2 * m, n - 1)) {
    out.verdict = Verdict::NotFound;
    out.elapsed_ms = ms_since(start);
    return out;
  }
  // The cycle power packs floor(n/(m+1)) vertex-disjoint K_{m+1}'s; a cheap
  // hitting-set bound on that packing rejects resource-starved graphs.
  if (n > 2 * m + 1 && clique_packing_bound(g, m + 1) < n / (m + 1)) {
    out.verdict = Verdict::NotFound;
    out.elapsed_ms = ms_since(start);
    return out;
  }

  const std::size_t words = g.words_per_row();
  std::vector<std::uint64_t> used(words, 0);
  std::uint64_t tail_mask = ~0ULL;
  if (n % 64 != 0) tail_mask = (1ULL << (n % 64)) - 1;

  std::vector<int> order(static_cast<std::size_t>(n), -1);
  order[0] = 0;
  used[0] |= 1ULL;

  auto mark = [&](int v, bool on) {
    if (on) {
      used[static_cast<std::size_t>(v) / 64] |= 1ULL << (v % 64);
    } else {
      used[static_cast<std::size_t>(v) / 64] &= ~(1ULL << (v % 64));
    }
  };

  std::vector<std::uint64_t> scratch(words);
  std::vector<std::uint64_t> reach(words);      // avail + both windows
  std::vector<std::uint64_t> near_v(words);
  std::vector<std::uint64_t> clique_pool;
  std::vector<int> raw;
  std::vector<std::pair<int, int>> ranked;
  std::vector<std::vector<int>> cands(static_cast<std::size_t>(n));
  std::vector<std::size_t> next(static_cast<std::size_t>(n), 0);

  // Vertices that can still appear in a future window: the unused ones, the
  // last min(m, i) placed, and the first m placed (for the wraparound).
  auto compute_reach = [&](int i) {
    for (std::size_t w = 0; w < words; ++w) reach[w] = ~used[w];
    reach[words - 1] &= tail_mask;
    for (int d = 1; d <= std::min(m, i); ++d) {
      const int v = order[static_cast<std::size_t>(i - d)];
      reach[static_cast<std::size_t>(v) / 64] |= 1ULL << (v % 64);
    }
    for (int j = 0; j < std::min(m, i); ++j) {
      const int v = order[static_cast<std::size_t>(j)];
      reach[static_cast<std::size_t>(v) / 64] |= 1ULL << (v % 64);
    }
  };

  // Closing the cycle needs distinct unused vertices for the final m
  // positions; position n-j must neighbor the first m-j+1-1 placed vertices.
  // The constraint sets are nested, so Hall's condition is a popcount per
  // prefix depth.
  std::vector<std::uint64_t> closure(words);
  auto closure_feasible = [&](int i) {
    for (std::size_t w = 0; w < words; ++w) closure[w] = ~used[w];
    closure[words - 1] &= tail_mask;
    const int smax = std::min(m, i);
    for (int s = 1; s <= smax; ++s) {
      auto r = g.row(order[static_cast<std::size_t>(s - 1)]);
      int count = 0;
      for (std::size_t w = 0; w < words; ++w) {
        closure[w] &= r[w];
        count += std::popcount(closure[w]);
      }
      const int required = std::max(0, std::min(m - s + 1, n - i));
      if (count < required) return false;
    }
    return true;
  };

  // Every unused vertex still needs 2m cycle-neighbors and a K_{m+1} around
  // it, all drawn from the reachable region.
  auto viable = [&](int i) {
    if (!closure_feasible(i)) return false;
    compute_reach(i);
    const int needed = std::min(2 * m, n - 1);
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = ~used[w];
      if (w == words - 1) bits &= tail_mask;
      while (bits) {
        const int v = static_cast<int>(w * 64) + std::countr_zero(bits);
        bits &= bits - 1;
        auto r = g.row(v);
        int deg = 0;
        for (std::size_t x = 0; x < words; ++x) {
          near_v[x] = r[x] & reach[x];
          deg += std::popcount(near_v[x]);
        }
        if (deg < needed) return false;
        if (!has_clique_within(g, near_v, m, clique_pool)) return false;
      }
    }
    return true;
  };

  // Candidates for position i: unused vertices adjacent to the previous
  // min(m, i) choices and, once the window wraps, to the opening vertices
  // order[0 .. i+m-n]. Interchangeable candidates (equal rows inside the
  // reachable region) collapse to their smallest member; expansion order is
  // ascending degree in the remaining graph (fail-first), ties by id.
  auto compute_candidates = [&](int i) {
    for (std::size_t w = 0; w < words; ++w) scratch[w] = ~used[w];
    scratch[words - 1] &= tail_mask;
    const int back = std::min(m, i);
    for (int d = 1; d <= back; ++d) {
      auto r = g.row(order[static_cast<std::size_t>(i - d)]);
      for (std::size_t w = 0; w < words; ++w) scratch[w] &= r[w];
    }
    for (int j = 0; j <= i + m - n; ++j) {
      auto r = g.row(order[static_cast<std::size_t>(j)]);
      for (std::size_t w = 0; w < words; ++w) scratch[w] &= r[w];
    }
    collect_bits(scratch, raw);

    ranked.clear();
    for (std::size_t a = 0; a < raw.size(); ++a) {
      const int c = raw[a];
      if (i == n - 1 && c <= order[1]) continue;  // reflection symmetry
      bool duplicate = false;
      for (std::size_t b = 0; b < a && !duplicate; ++b) {
        const int d = raw[b];
        auto rc = g.row(c);
        auto rd = g.row(d);
        duplicate = true;
        for (std::size_t w = 0; w < words; ++w) {
          std::uint64_t mc = rc[w] & reach[w];
          std::uint64_t md = rd[w] & reach[w];
          if (static_cast<std::size_t>(c) / 64 == w) {
            mc &= ~(1ULL << (c % 64));
            md &= ~(1ULL << (c % 64));
          }
          if (static_cast<std::size_t>(d) / 64 == w) {
            mc &= ~(1ULL << (d % 64));
            md &= ~(1ULL << (d % 64));
          }
          if (mc != md) {
            duplicate = false;
            break;
          }
        }
      }
      if (duplicate) continue;
      auto r = g.row(c);
      int deg = 0;
      for (std::size_t w = 0; w < words; ++w) deg += std::popcount(r[w] & ~used[w]);
      ranked.emplace_back(deg, c);
    }
    std::sort(ranked.begin(), ranked.end());
    auto& list = cands[static_cast<std::size_t>(i)];
    list.clear();
    for (auto [deg, c] : ranked) list.push_back(c);
    next[static_cast<std::size_t>(i)] = 0;
  };

  int i = 1;
  compute_reach(1);
  compute_candidates(1);
  while (true) {
    if ((out.nodes_expanded & 0xFFF) == 0 &&
        ms_since(start) > static_cast<double>(budget.max_millis)) {
      out.verdict = Verdict::Timeout;
      break;
    }
    auto& cursor = next[static_cast<std::size_t>(i)];
    const auto& list = cands[static_cast<std::size_t>(i)];
    if (cursor == list.size()) {
      if (i == 1) {
        out.verdict = Verdict::NotFound;
        break;
      }
      --i;
      mark(order[static_cast<std::size_t>(i)], false);
      order[static_cast<std::size_t>(i)] = -1;
      continue;
    }
    const int c = list[cursor++];
    if (++out.nodes_expanded > budget.max_nodes) {
      out.verdict = Verdict::Timeout;
      break;
    }
    order[static_cast<std::size_t>(i)] = c;
    mark(c, true);
    if (i == n - 1) {
      out.verdict = Verdict::Found;
      out.witness = order;
      break;
    }
    ++i;
    if (!viable(i)) {
      --i;
      mark(c, false);
      order[static_cast<std::size_t>(i)] = -1;
      continue;
    }
    compute_candidates(i);
  }
  out.elapsed_ms = ms_since(start);
  return out;
}

bool is_power_ham_cycle_witness(const Graph& g, std::span<const int> order, int m) {
  const int n = g.order();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : order) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (int a = 0; a < n; ++a) {
    for (int d = 1; d <= m; ++d) {
      const int b = (a + d) % n;
      if (a == b) continue;
      if (!g.has_edge(order[static_cast<std::size_t>(a)], order[static_cast<std::size_t>(b)])) {
        return false;
      }
    }
  }
  return true;
}

CliqueCount enumerate_cliques(const Graph& g, int ell, const VertexSet& allowed,
                              std::uint64_t cap,
                              const std::function<void(std::span<const int>)>& callback) {
  if (ell < 1) throw std::invalid_argument("enumerate_cliques: need ell >= 1");
  if (allowed.universe() != g.order()) {
    throw std::invalid_argument("enumerate_cliques: set universe mismatch");
  }
  const std::size_t words = g.words_per_row();
  CliqueCount result;
  if (cap == 0) {
    result.capped = true;
    return result;
  }

  std::vector<int> members(static_cast<std::size_t>(ell));
  std::vector<std::vector<std::uint64_t>> cand(static_cast<std::size_t>(ell));
  for (auto& c : cand) c.resize(words);

  std::vector<int> scratch_bits;
  // rec(depth) consumes cand[depth]; members[0..depth-1] chosen so far.
  auto rec = [&](auto&& self, int depth) -> bool {
    auto& cur = cand[static_cast<std::size_t>(depth)];
    int remaining = 0;
    for (std::uint64_t w : cur) remaining += std::popcount(w);
    if (remaining < ell - depth) return true;

    collect_bits(cur, scratch_bits);
    const std::vector<int> here = scratch_bits;  // recursion reuses the scratch
    for (int v : here) {
      members[static_cast<std::size_t>(depth)] = v;
      if (depth + 1 == ell) {
        ++result.count;
        if (callback) callback(std::span<const int>(members.data(), members.size()));
        if (result.count >= cap) {
          result.capped = true;
          return false;
        }
        continue;
      }
      auto r = g.row(v);
      auto& nxt = cand[static_cast<std::size_t>(depth) + 1];
      for (std::size_t w = 0; w < words; ++w) nxt[w] = cur[w] & r[w];
      // only ids above v, so each set appears once
      const std::size_t vw = static_cast<std::size_t>(v) / 64;
      for (std::size_t w = 0; w < vw; ++w) nxt[w] = 0;
      if (v % 64 == 63) {
        nxt[vw] = 0;
      } else {
        nxt[vw] &= ~((2ULL << (v % 64)) - 1);
      }
      if (!self(self, depth + 1)) return false;
    }
    return true;
  };

  auto aw = allowed.words();
  std::copy(aw.begin(), aw.end(), cand[0].begin());
  rec(rec, 0);
  return result;
}

CliqueCount count_cliques(const Graph& g, int ell, std::uint64_t cap) {
  if (ell < 2) throw std::invalid_argument("count_cliques: need ell >= 2");
  return enumerate_cliques(g, ell, VertexSet::all(g.order()), cap, nullptr);
}

void ConnectabilitySpec::validate() const {
  params.validate();
  if (!(xi > Rational(0)) || xi > Rational(1)) {
    throw std::invalid_argument("connectability: need 0 < xi <= 1");
  }
}

CliqueCount connectable_witness_count(const Graph& g, std::span<const int> x,
                                      const ConnectabilitySpec& spec, std::uint64_t cap) {
  spec.validate();
  const int m = spec.params.m();
  const int k = spec.params.k;
  const int ell = spec.params.ell;
  if (static_cast<int>(x.size()) != m) {
    throw std::invalid_argument("connectable_witness_count: tuple length must be m");
  }
  validate_tuple(g, x, "connectable_witness_count");
  const int n = g.order();

  // Suffix joint neighborhoods: block b needs N(x_{b*ell}, ..., x_{m-1}).
  std::vector<VertexSet> suffix(static_cast<std::size_t>(k + 1), VertexSet(n));
  VertexSet acc = VertexSet::all(n);
  for (int v : x) acc.erase(v);  // witnesses avoid the tuple itself
  for (int j = m - 1; j >= 0; --j) {
    acc &= g.neighbors(x[static_cast<std::size_t>(j)]);
    if (j % ell == 0 && j / ell <= k) suffix[static_cast<std::size_t>(j / ell)] = acc;
  }

  CliqueCount result;
  if (cap == 0) {
    result.capped = true;
    return result;
  }
  std::vector<int> chosen(static_cast<std::size_t>(k + 1));
  auto rec = [&](auto&& self, int level, const VertexSet& allowed) -> bool {
    for (int y : allowed.to_vector()) {
      if (level == k) {
        ++result.count;
        if (result.count >= cap) {
          result.capped = true;
          return false;
        }
        continue;
      }
      chosen[static_cast<std::size_t>(level)] = y;
      VertexSet nxt = suffix[static_cast<std::size_t>(level) + 1];
      for (int l = 0; l <= level; ++l) {
        nxt &= g.neighbors(chosen[static_cast<std::size_t>(l)]);
        nxt.erase(chosen[static_cast<std::size_t>(l)]);
      }
      if (!self(self, level + 1, nxt)) return false;
    }
    return true;
  };
  rec(rec, 0, suffix[0]);
  return result;
}

bool is_connectable(const Graph& g, std::span<const int> x, const ConnectabilitySpec& spec) {
  spec.validate();
  // Exact test of count * den >= num * n^(k+1) in 128-bit arithmetic.
  using U = unsigned __int128;
  constexpr U kMax = ~static_cast<U>(0);
  const U num = static_cast<U>(spec.xi.numerator());
  const U den = static_cast<U>(spec.xi.denominator());
  const U n = static_cast<U>(g.order());
  U pw = 1;
  for (int i = 0; i <= spec.params.k; ++i) {
    if (n != 0 && pw > kMax / n) return false;  // threshold beyond any witness count
    pw *= n;
  }
  if (num != 0 && pw > kMax / num) return false;
  const U threshold = num * pw;  // compare against count * den
  const U cap128 = (threshold + den - 1) / den;
  const std::uint64_t cap =
      cap128 >= static_cast<U>(kNoCap) ? kNoCap : std::max<std::uint64_t>(1, static_cast<std::uint64_t>(cap128));
  const CliqueCount c = connectable_witness_count(g, x, spec, cap);
  return static_cast<U>(c.count) * den >= threshold;
}

bool interlaces(const Graph& g, std::span<const int> x, std::span<const int> y) {
  if (x.size() != y.size() || x.empty()) {
    throw std::invalid_argument("interlaces: tuples must have equal positive length");
  }
  std::vector<int> both(x.begin(), x.end());
  both.insert(both.end(), y.begin(), y.end());
  validate_tuple(g, both, "interlaces");

  const int len = static_cast<int>(x.size());
  for (int i = 0; i < len; ++i) {
    for (int j = i; j < len; ++j) {
      if (!g.has_edge(y[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(j)])) return false;
    }
    for (int j = 0; j < i; ++j) {
      if (!g.has_edge(y[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(j)])) return false;
    }
  }
  return true;
}

AbsorberReport absorber_check(const Graph& g_det, const Graph& g_union, int v,
                              std::span<const int> tuple2m, const ConnectabilitySpec& spec) {
  spec.validate();
  const int m = spec.params.m();
  const int k = spec.params.k;
  const int ell = spec.params.ell;
  const int r = spec.params.r;
  if (static_cast<int>(tuple2m.size()) != 2 * m) {
    throw std::invalid_argument("absorber_check: tuple length must be 2m");
  }
  if (g_det.order() != g_union.order()) {
    throw std::invalid_argument("absorber_check: graphs must share the vertex universe");
  }
  std::vector<int> all(tuple2m.begin(), tuple2m.end());
  all.push_back(v);
  validate_tuple(g_union, all, "absorber_check");
  for (auto [a, b] : g_det.edges()) {
    if (!g_union.has_edge(a, b)) {
      throw std::invalid_argument("absorber_check: deterministic graph not contained in union");
    }
  }

  // (i): every tuple vertex neighbors v in the deterministic graph.
  bool cond_i = true;
  for (int u : tuple2m) {
    if (!g_det.has_edge(v, u)) {
      cond_i = false;
      break;
    }
  }

  // (ii): both ends connectable; the tuple is in path order, so the left end
  // read attachment-last is the reversed first half.
  std::vector<int> x_left(tuple2m.begin(), tuple2m.begin() + m);
  std::reverse(x_left.begin(), x_left.end());
  std::vector<int> x_right(tuple2m.begin() + m, tuple2m.end());
  const bool cond_ii = is_connectable(g_det, x_left, spec) && is_connectable(g_det, x_right, spec);

  // (iii): the (r, l, ..., l, r)-blow-up of P^k_{2k+2} along the tuple.
  std::vector<int> class_of(static_cast<std::size_t>(2 * m));
  {
    std::vector<int> sizes(static_cast<std::size_t>(2 * k + 2), ell);
    sizes.front() = r;
    sizes.back() = r;
    int pos = 0;
    for (std::size_t cls = 0; cls < sizes.size(); ++cls) {
      for (int p = 0; p < sizes[cls]; ++p) class_of[static_cast<std::size_t>(pos++)] = static_cast<int>(cls);
    }
  }
  bool cond_iii = true;
  for (int a = 0; a < 2 * m && cond_iii; ++a) {
    for (int b = a + 1; b < 2 * m; ++b) {
      const int dist = class_of[static_cast<std::size_t>(b)] - class_of[static_cast<std::size_t>(a)];
      if (dist >= 1 && dist <= k &&
          !g_det.has_edge(tuple2m[static_cast<std::size_t>(a)], tuple2m[static_cast<std::size_t>(b)])) {
        cond_iii = false;
        break;
      }
    }
  }

  // (iii)': the tuple spans an m-path in the union.
  bool cond_iii_prime = true;
  for (int a = 0; a < 2 * m && cond_iii_prime; ++a) {
    for (int b = a + 1; b < 2 * m && b - a <= m; ++b) {
      if (!g_union.has_edge(tuple2m[static_cast<std::size_t>(a)], tuple2m[static_cast<std::size_t>(b)])) {
        cond_iii_prime = false;
        break;
      }
    }
  }

  AbsorberReport report;
  report.half = cond_i && cond_ii && cond_iii;
  report.full = cond_i && cond_ii && cond_iii_prime;

  // Inserting v between the halves must again span an m-path.
  std::vector<int> inserted(tuple2m.begin(), tuple2m.begin() + m);
  inserted.push_back(v);
  inserted.insert(inserted.end(), tuple2m.begin() + m, tuple2m.end());
  report.absorbs = true;
  for (std::size_t a = 0; a < inserted.size() && report.absorbs; ++a) {
    for (std::size_t b = a + 1; b < inserted.size() && b - a <= static_cast<std::size_t>(m); ++b) {
      if (!g_union.has_edge(inserted[a], inserted[b])) {
        report.absorbs = false;
        break;
      }
    }
  }
  return report;
}

}  // namespace hampow
