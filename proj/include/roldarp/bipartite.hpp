#pragma once

#include <optional>
#include <string>
#include <vector>

#include "roldarp/core.hpp"

namespace roldarp {

struct BipartiteReduction {
  Instance instance;  // the bipartite image, time limit T + delta
  Rational eps;       // weight of the per-vertex connector edges
  Rational delta;     // T * eps, the extra time budget
  /// original vertex -> (source-side copy, destination-side copy)
  std::vector<std::pair<std::string, std::pair<std::string, std::string>>> vertex_map;
  /// original request index -> bipartite request index (both canonical)
  std::vector<std::size_t> request_map;
};

/// Splits every vertex u into u_1 in V1 and u_2 in V2 joined by an eps edge;
/// every original edge becomes the two cross edges of the same weight, every
/// request maps source to the V1 copy and destination to the V2 copy, and
/// the time limit grows by delta = T*eps. eps defaults to (smallest
/// edge)/(2T), so delta is half the smallest edge; delta must stay below the
/// smallest edge weight.
BipartiteReduction to_bipartite(const Instance& inst,
                                std::optional<Rational> eps = std::nullopt);

/// Rewrites a feasible schedule of the original instance over the bipartite
/// image, inserting an eps hop wherever a serve needs the source-side copy.
Schedule lift_schedule(const Instance& general, const BipartiteReduction& reduction,
                       const Schedule& sched);

/// Deletes the eps hops of a feasible bipartite schedule and replays the
/// rest on the original instance, waiting out releases where the removed
/// hops pulled a serve too early.
Schedule project_schedule(const Instance& general, const BipartiteReduction& reduction,
                          const Schedule& bip_sched);

/// ceil(1/k): the most serve completions a single window admits when every
/// edge takes at least kT/f.
long long per_window_capacity(const Rational& k);

}  // namespace roldarp
