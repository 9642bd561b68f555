#pragma once

#include <optional>

#include "roldarp/core.hpp"

namespace roldarp {

struct OracleOptions {
  /// Revenue is maximized over schedules completing by this time; defaults
  /// to T. Values above T are clamped to T.
  std::optional<Rational> horizon;
  /// Hard guard on the exhaustive search; exceeding it is an error, not a
  /// truncation.
  std::size_t max_requests = 16;
};

struct OracleResult {
  Schedule schedule;
  Rational revenue;
};

/// Exact offline optimum via depth-first branch and bound. Branches on the
/// next request to serve (move to its source, wait out its release, serve);
/// prunes when the accumulated revenue plus all unserved revenue cannot beat
/// the incumbent. Deterministic: among equal-revenue optima the schedule
/// with the lexicographically smallest serve sequence (canonical request
/// order) is returned.
OracleResult optimal_offline(const Instance& inst, const OracleOptions& options = {});

}  // namespace roldarp
