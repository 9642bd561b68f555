#include "roldarp/analysis.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "roldarp/sbp.hpp"

namespace roldarp {

WindowSets shift_one_window(const WindowSets& windows) {
  if (windows.empty()) return {};
  return WindowSets(windows.begin() + 1, windows.end());
}

namespace {

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

void check_disjoint(const WindowSets& family, const char* name) {
  std::set<std::size_t> seen;
  for (const auto& window : family) {
    for (std::size_t r : window) {
      if (!seen.insert(r).second) {
        throw Error(ErrorCode::kInconsistentInputs,
                    std::string(name) + " serves request " + std::to_string(r) + " twice");
      }
    }
  }
}

Rational set_revenue(const Instance& inst, const std::vector<std::size_t>& ids) {
  Rational total(0);
  for (std::size_t r : ids) total += inst.requests[r].p;
  return total;
}

}  // namespace

WindowDecomposition decompose_windows(const Instance& inst, const Schedule& opt_schedule,
                                      const WindowSets& sbp_prime) {
  SegmentClock clock{inst.T, inst.f};
  const int m = clock.window_count() - 1;
  if (static_cast<int>(sbp_prime.size()) < m) {
    throw Error(ErrorCode::kInconsistentInputs, "shifted window sets shorter than m");
  }
  auto segments = served_by_segment(inst, opt_schedule);

  WindowSets s_star(m), j_star(m);
  for (int i = 1; i <= m; ++i) {
    auto [lo, hi] = clock.window_segments(i);
    std::vector<std::size_t> first = sorted(segments[lo - 1]);
    std::vector<std::size_t> second = sorted(segments[hi - 1]);
    Rational rev_first = set_revenue(inst, first);
    Rational rev_second = set_revenue(inst, second);
    if (rev_second > rev_first) {
      s_star[i - 1] = std::move(second);
      j_star[i - 1] = std::move(first);
    } else {
      s_star[i - 1] = std::move(first);
      j_star[i - 1] = std::move(second);
    }
  }
  WindowSets prime(m);
  for (int i = 0; i < m; ++i) prime[i] = sorted(sbp_prime[i]);

  check_disjoint(s_star, "opt");
  check_disjoint(prime, "sbp-prime");

  WindowDecomposition out;
  out.windows.resize(m);
  std::set<std::size_t> prime_before;  // union of S'_w, w < i
  std::set<std::size_t> star_before;   // union of S*_w, w < i
  for (int i = 0; i < m; ++i) {
    WindowCells& cells = out.windows[i];
    cells.s_star = s_star[i];
    cells.j_star = j_star[i];
    cells.s_prime = prime[i];
    std::set<std::size_t> in_prime(prime[i].begin(), prime[i].end());
    std::set<std::size_t> in_star(s_star[i].begin(), s_star[i].end());
    for (std::size_t r : cells.s_star) {
      if (in_prime.count(r)) {
        cells.a.push_back(r);
      } else if (prime_before.count(r)) {
        cells.x_star.push_back(r);
      } else {
        cells.y_star.push_back(r);
      }
    }
    for (std::size_t r : cells.s_prime) {
      if (in_star.count(r)) continue;  // already in a
      if (star_before.count(r)) {
        cells.x.push_back(r);
      } else {
        cells.y.push_back(r);
      }
    }
    prime_before.insert(prime[i].begin(), prime[i].end());
    star_before.insert(s_star[i].begin(), s_star[i].end());
  }
  return out;
}

WindowSets opt_echo_schedule(const Instance& inst, const Schedule& opt_schedule) {
  SegmentClock clock{inst.T, inst.f};
  auto windows = served_by_window(inst, opt_schedule);
  WindowSets echo(clock.window_count());
  for (int i = 2; i <= clock.window_count(); ++i) {
    const auto& prev = windows[i - 2];
    if (prev.empty()) continue;
    std::size_t best = prev.front();
    for (std::size_t r : prev) {
      if (inst.requests[r].p > inst.requests[best].p ||
          (inst.requests[r].p == inst.requests[best].p && r < best)) {
        best = r;
      }
    }
    echo[i - 1].push_back(best);
  }
  return echo;
}

WindowSets greedy_singleton_schedule(const Instance& inst) {
  ValidationReport report = validate_instance(inst);
  if (!report.valid()) {
    throw Error(ErrorCode::kInvalidInstance, report.violations.front().message);
  }
  SegmentClock clock{inst.T, inst.f};
  WindowSets out(clock.window_count());
  std::vector<bool> taken(inst.requests.size(), false);
  for (int i = 1; i <= clock.window_count(); ++i) {
    if (2 * i > inst.f) break;  // single-segment window: no move+serve pair fits
    Rational window_start = clock.segment_start(2 * i - 1);
    std::optional<std::size_t> best;
    for (std::size_t r = 0; r < inst.requests.size(); ++r) {
      if (taken[r] || inst.requests[r].t > window_start) continue;
      if (!best || inst.requests[r].p > inst.requests[*best].p) best = r;
    }
    if (best) {
      taken[*best] = true;
      out[i - 1].push_back(*best);
    }
  }
  return out;
}

const char* to_string(BoundId bound) {
  switch (bound) {
    case BoundId::kThm4: return "thm4";
    case BoundId::kThm6: return "thm6";
    case BoundId::kThm7: return "thm7";
    case BoundId::kThm8: return "thm8";
    case BoundId::kLem3: return "lem3";
    case BoundId::kLem8: return "lem8";
    case BoundId::kLem9: return "lem9";
  }
  return "unknown";
}

std::optional<BoundId> bound_from_string(std::string_view name) {
  if (name == "thm4") return BoundId::kThm4;
  if (name == "thm6") return BoundId::kThm6;
  if (name == "thm7") return BoundId::kThm7;
  if (name == "thm8") return BoundId::kThm8;
  if (name == "lem3") return BoundId::kLem3;
  if (name == "lem8") return BoundId::kLem8;
  if (name == "lem9") return BoundId::kLem9;
  return std::nullopt;
}

namespace {

/// All revenues equal; returns the common revenue.
std::optional<Rational> uniform_revenue(const Instance& inst) {
  if (inst.requests.empty()) return Rational(1);
  const Rational& p = inst.requests.front().p;
  for (const Request& r : inst.requests) {
    if (r.p != p) return std::nullopt;
  }
  return p;
}

Rational ceil_inverse(const Rational& k) { return Rational((Rational(1) / k).ceil(), BigInt(1)); }

void set_sides(BoundReport& report, Rational lhs, Rational rhs) {
  report.lhs = std::move(lhs);
  report.rhs = std::move(rhs);
  report.slack = report.rhs - report.lhs;
  report.holds = report.slack.sign() >= 0;
}

}  // namespace

BoundReport check_bound(const Instance& inst, BoundId bound, const OracleOptions& oracle) {
  ValidationReport validity = validate_instance(inst);
  if (!validity.valid()) {
    throw Error(ErrorCode::kInvalidInstance, validity.violations.front().message);
  }

  BoundReport report;
  report.bound = bound;

  const bool needs_bipartite = bound == BoundId::kThm7 || bound == BoundId::kThm8;
  if (needs_bipartite) {
    if (!inst.graph.bipartite()) {
      throw Error(ErrorCode::kHypothesisViolated, "bound requires a bipartite instance");
    }
    if (!inst.min_edge_factor) {
      throw Error(ErrorCode::kHypothesisViolated, "bound requires the min-edge factor k");
    }
  }
  std::optional<Rational> common;
  if (bound == BoundId::kThm6 || bound == BoundId::kThm7) {
    common = uniform_revenue(inst);
    if (!common) {
      throw Error(ErrorCode::kHypothesisViolated, "bound requires uniform revenues");
    }
  }

  SbpResult sbp = run_sbp(inst);
  OracleResult opt = optimal_offline(inst, oracle);
  RevenueProfile opt_profile = revenue_profile(inst, opt.schedule);
  SegmentClock clock{inst.T, inst.f};
  const int mu = clock.window_count();

  switch (bound) {
    case BoundId::kThm4: {
      Rational c = opt_profile.by_segment[inst.f - 2] + opt_profile.by_segment[inst.f - 1];
      report.terms.emplace_back("c", c);
      report.terms.emplace_back("sbp_revenue", sbp.profile.total);
      report.terms.emplace_back("opt_revenue", opt_profile.total);
      set_sides(report, opt_profile.total, Rational(5) * sbp.profile.total + c);
      break;
    }
    case BoundId::kThm6: {
      Rational c = opt_profile.by_segment[inst.f - 2] + opt_profile.by_segment[inst.f - 1];
      Rational additive = Rational(2 * mu) * *common;
      report.terms.emplace_back("c", c);
      report.terms.emplace_back("common_revenue", *common);
      report.terms.emplace_back("sbp_revenue", sbp.profile.total);
      report.terms.emplace_back("opt_revenue", opt_profile.total);
      set_sides(report, opt_profile.total, Rational(4) * sbp.profile.total + additive + c);
      break;
    }
    case BoundId::kThm7: {
      Rational r = ceil_inverse(*inst.min_edge_factor);
      report.terms.emplace_back("ceil_inv_k", r);
      report.terms.emplace_back("common_revenue", *common);
      report.terms.emplace_back("sbp_revenue", sbp.profile.total);
      report.terms.emplace_back("opt_revenue", opt_profile.total);
      set_sides(report, opt_profile.total, r * sbp.profile.total + r * *common);
      break;
    }
    case BoundId::kThm8: {
      Rational r = ceil_inverse(*inst.min_edge_factor);
      Rational c = opt_profile.by_window[mu - 1];
      report.terms.emplace_back("ceil_inv_k", r);
      report.terms.emplace_back("c", c);
      report.terms.emplace_back("sbp_revenue", sbp.profile.total);
      report.terms.emplace_back("opt_revenue", opt_profile.total);
      set_sides(report, opt_profile.total, r * sbp.profile.total + c);
      break;
    }
    case BoundId::kLem3: {
      auto sbp_windows = served_by_window(inst, sbp.schedule);
      WindowDecomposition decomp =
          decompose_windows(inst, opt.schedule, shift_one_window(sbp_windows));
      long long x_star_prefix = 0;
      long long y_prefix = 0;
      long long worst = 0;
      Rational worst_lhs(0), worst_rhs(0);
      Rational worst_slack;
      for (std::size_t i = 0; i < decomp.windows.size(); ++i) {
        x_star_prefix += static_cast<long long>(decomp.windows[i].x_star.size());
        y_prefix += static_cast<long long>(decomp.windows[i].y.size());
        Rational slack = Rational(y_prefix - x_star_prefix);
        if (i == 0 || slack < worst_slack) {
          worst_slack = slack;
          worst_lhs = Rational(x_star_prefix);
          worst_rhs = Rational(y_prefix);
          worst = static_cast<long long>(i + 1);
        }
      }
      report.terms.emplace_back("m", Rational(static_cast<long long>(decomp.windows.size())));
      report.terms.emplace_back("worst_prefix", Rational(worst));
      set_sides(report, worst_lhs, worst_rhs);
      break;
    }
    case BoundId::kLem8: {
      WindowSets echo = opt_echo_schedule(inst, opt.schedule);
      WindowSets singles = greedy_singleton_schedule(inst);
      auto revenues = [&inst, mu](const WindowSets& sets) {
        std::vector<Rational> out;
        for (const auto& window : sets) {
          for (std::size_t r : window) out.push_back(inst.requests[r].p);
        }
        std::sort(out.begin(), out.end(), std::greater<Rational>());
        out.resize(mu, Rational(0));
        return out;
      };
      std::vector<Rational> o_prime = revenues(echo);
      std::vector<Rational> o_double = revenues(singles);
      std::size_t worst = 0;
      for (std::size_t z = 0; z < o_prime.size(); ++z) {
        if (o_double[z] - o_prime[z] < o_double[worst] - o_prime[worst]) worst = z;
      }
      Rational echo_total(0), singleton_total(0);
      for (const Rational& p : o_prime) echo_total += p;
      for (const Rational& p : o_double) singleton_total += p;
      report.terms.emplace_back("echo_total", echo_total);
      report.terms.emplace_back("singleton_total", singleton_total);
      report.terms.emplace_back("worst_rank", Rational(static_cast<long long>(worst + 1)));
      set_sides(report, o_prime[worst], o_double[worst]);
      break;
    }
    case BoundId::kLem9: {
      WindowSets singles = greedy_singleton_schedule(inst);
      Rational singleton_total(0);
      for (const auto& window : singles) {
        for (std::size_t r : window) singleton_total += inst.requests[r].p;
      }
      report.terms.emplace_back("singleton_total", singleton_total);
      report.terms.emplace_back("sbp_revenue", sbp.profile.total);
      set_sides(report, singleton_total, sbp.profile.total);
      break;
    }
  }
  return report;
}

}  // namespace roldarp
