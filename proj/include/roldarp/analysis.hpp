#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "roldarp/core.hpp"
#include "roldarp/oracle.hpp"

namespace roldarp {

/// Request-index sets per window. Proof-device schedules are plain window
/// set sequences, never replayable Schedules: the shifted and echoed
/// schedules are generally infeasible, and every lemma below is a set or
/// revenue computation.
using WindowSets = std::vector<std::vector<std::size_t>>;

/// Window i of the output is window i+1 of the input; the input's first
/// window is dropped.
WindowSets shift_one_window(const WindowSets& windows);

struct WindowCells {
  std::vector<std::size_t> s_star;   // OPT's richer segment of the window
  std::vector<std::size_t> j_star;   // OPT's poorer segment of the window
  std::vector<std::size_t> s_prime;  // shifted-SBP window set
  std::vector<std::size_t> a;        // in both s_star and s_prime
  std::vector<std::size_t> x_star;   // in s_star, served by SBP' in an earlier window
  std::vector<std::size_t> y_star;   // in s_star, in no S'_w for w <= i
  std::vector<std::size_t> x;        // in s_prime, served by OPT* in an earlier window
  std::vector<std::size_t> y;        // in s_prime, in no S*_w for w <= i
};

struct WindowDecomposition {
  std::vector<WindowCells> windows;  // i = 1..m, m = ceil(f/2) - 1
};

/// Builds the per-window partition cells from OPT's segment attribution and
/// the shifted SBP window sets. The richer segment wins ties toward the
/// earlier segment. Throws kInconsistentInputs when a request appears twice
/// within either family.
WindowDecomposition decompose_windows(const Instance& inst, const Schedule& opt_schedule,
                                      const WindowSets& sbp_prime);

/// Window 1 empty; window i >= 2 holds the single max-revenue request OPT
/// served in window i-1 (lexicographic tie-break on canonical ids).
WindowSets opt_echo_schedule(const Instance& inst, const Schedule& opt_schedule);

/// Per two-segment window: the highest-revenue request released by the
/// window start and not yet taken (move in the first segment, serve in the
/// second). A trailing single-segment window serves nothing.
WindowSets greedy_singleton_schedule(const Instance& inst);

enum class BoundId { kThm4, kThm6, kThm7, kThm8, kLem3, kLem8, kLem9 };

const char* to_string(BoundId bound);
std::optional<BoundId> bound_from_string(std::string_view name);

struct BoundReport {
  BoundId bound = BoundId::kThm4;
  std::string instance_id;
  Rational lhs;
  Rational rhs;
  Rational slack;  // rhs - lhs; holds <=> slack >= 0
  bool holds = false;
  std::vector<std::pair<std::string, Rational>> terms;
};

/// Evaluates both sides of the named inequality exactly on this instance.
/// Additive constants are instantiated from the oracle schedule itself: the
/// last two segments' revenue for thm4/thm6 and the last window's revenue
/// for thm8. For elementwise bounds (lem3, lem8) the reported sides belong
/// to the worst prefix/rank. Throws kHypothesisViolated when the instance
/// does not satisfy the bound's hypotheses.
BoundReport check_bound(const Instance& inst, BoundId bound, const OracleOptions& oracle = {});

}  // namespace roldarp
