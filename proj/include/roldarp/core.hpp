#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "roldarp/rational.hpp"

namespace roldarp {

enum class ErrorCode {
  kDisconnected,
  kNonpositiveWeight,
  kInvalidInstance,
  kInfeasibleSchedule,
  kTooLarge,
  kBadParams,
  kEpsilonTooLarge,
  kBadK,
  kHypothesisViolated,
  kInconsistentInputs,
  kParseError,
  kBadArgument,
  kUnknownRequest,
  kUnknownVertex,
  kInfeasibleInput,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct RawEdge {
  std::string u;
  std::string v;
  Rational w;
};

struct Bipartition {
  std::vector<std::string> v1;  // source side
  std::vector<std::string> v2;  // destination side (origin lives here)
};

/// Symmetric weighted graph over opaque string vertex ids. Vertices are kept
/// in lexicographic order; that order is the canonical tie-break order used
/// throughout the library. Pairs without an edge (the same-side pairs of
/// bipartite instances) are marked absent.
class MetricGraph {
 public:
  MetricGraph() = default;
  /// Builds a graph from a vertex list and an edge list. Vertex names are
  /// sorted and must be unique; edges must reference known vertices and may
  /// not repeat or be self-loops.
  static MetricGraph build(std::vector<std::string> vertices, const std::vector<RawEdge>& edges,
                           const std::optional<Bipartition>& bipartition = std::nullopt,
                           bool pre_closed = false);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;  // throws kUnknownVertex

  bool has_edge(std::size_t i, std::size_t j) const { return present_[i * size() + j] != 0; }
  const Rational& weight(std::size_t i, std::size_t j) const { return weight_[i * size() + j]; }

  bool bipartite() const { return !side_.empty(); }
  /// 1 = V1 (sources), 2 = V2 (destinations), 0 = unlabeled.
  int side(std::size_t i) const { return side_.empty() ? 0 : side_[i]; }

  /// Instances whose distance tables come verbatim from an adversarial
  /// construction and are not the closure of anything.
  bool pre_closed() const { return pre_closed_; }
  void set_pre_closed(bool value) { pre_closed_ = value; }

  /// Edge list in canonical (u < v) order; used by serialization.
  std::vector<RawEdge> edge_list() const;

  void add_vertex(const std::string& name, const Rational& default_weight);
  void set_weight(std::string_view u, std::string_view v, const Rational& w);

 private:
  std::vector<std::string> vertices_;
  std::vector<Rational> weight_;
  std::vector<std::uint8_t> present_;
  std::vector<std::int8_t> side_;
  bool pre_closed_ = false;
};

struct Request {
  std::string s;
  std::string d;
  Rational t;  // release time
  Rational p;  // revenue
};

/// Canonical request order: (s, d, t, p) lexicographic.
bool request_less(const Request& a, const Request& b);

struct Instance {
  MetricGraph graph;
  std::string origin;
  Rational T;
  int f = 0;
  std::optional<Rational> min_edge_factor;  // the bipartite k
  std::vector<Request> requests;            // canonically sorted

  Rational segment_length() const { return T / Rational(f); }
};

/// Stable-sorts requests into canonical order.
void canonicalize_requests(Instance& inst);

enum class ViolationCode {
  kMissingOrigin,
  kBadF,
  kBadK,
  kMissingEdge,
  kNonpositiveWeight,
  kMaxEdgeExceeded,
  kMinEdgeViolated,
  kSameSideEdge,
  kBipartitionUnlabeled,
  kBipartitionOrigin,
  kBipartitionRequest,
  kUnknownVertex,
  kLoopRequest,
  kNonpositiveRevenue,
  kNegativeRelease,
  kReleaseAfterLimit,
};

const char* to_string(ViolationCode code);

struct Violation {
  ViolationCode code;
  std::string entity;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

/// Reports every violated instance invariant; violations are data, not errors.
ValidationReport validate_instance(const Instance& inst);

/// All-pairs shortest paths. The returned graph is complete, has the
/// shortest-path distance on every pair, and satisfies the triangle
/// inequality. Bipartite graphs are rejected (closure would create
/// same-side edges).
MetricGraph metric_closure(const MetricGraph& raw);

struct Action {
  enum class Kind { kMove, kServe, kIdle };
  Kind kind = Kind::kIdle;
  Rational start;
  std::string from;          // Move
  std::string to;            // Move
  std::size_t request = 0;   // Serve
  Rational duration;         // Idle
};

Action make_move(std::string from, std::string to, Rational start);
Action make_serve(std::size_t request, Rational start);
Action make_idle(Rational start, Rational duration);

struct Schedule {
  std::vector<Action> actions;
};

enum class ScheduleRule {
  kOk,
  kUnknownVertex,
  kUnknownRequest,
  kWrongPosition,
  kTimeOverlap,
  kNegativeDuration,
  kMissingEdge,
  kRequestNotReleased,
  kRequestServedTwice,
  kExceedsTimeLimit,
};

const char* to_string(ScheduleRule rule);

struct ScheduleVerdict {
  bool feasible = false;
  ScheduleRule rule = ScheduleRule::kOk;
  std::size_t action_index = 0;
  std::string message;
  Rational revenue;     // only meaningful when feasible
  Rational completion;  // end of the last action, 0 for an empty schedule
};

/// Replays the schedule against the instance. An action may start after the
/// previous one ends (the server waits in place); it may never start before.
ScheduleVerdict validate_schedule(const Instance& inst, const Schedule& sched);

/// Segment and window clock. Segment j (1-based) is the half-open interval
/// ((j-1)T/f, jT/f]; a completion at exactly jT/f belongs to segment j.
/// Window i pairs segments 2i-1 and 2i; the last window of an odd f is the
/// single segment f.
struct SegmentClock {
  Rational T;
  int f = 0;

  Rational segment_length() const { return T / Rational(f); }
  int window_count() const { return (f + 1) / 2; }
  Rational segment_start(int j) const { return Rational(j - 1) * segment_length(); }
  Rational segment_end(int j) const { return Rational(j) * segment_length(); }
  std::pair<int, int> window_segments(int i) const {
    return {2 * i - 1, 2 * i <= f ? 2 * i : f};
  }
  int window_of_segment(int j) const { return (j + 1) / 2; }
  /// Requires 0 < time <= T.
  int segment_of_completion(const Rational& time) const;
};

struct RevenueProfile {
  std::vector<Rational> by_segment;  // index j-1, j = 1..f
  std::vector<Rational> by_window;   // index i-1, i = 1..window_count
  Rational total;
};

/// Revenue earned per segment: each served request counts in the segment
/// containing its serve completion time. Throws kInfeasibleSchedule when the
/// schedule does not validate.
RevenueProfile revenue_profile(const Instance& inst, const Schedule& sched);

/// Request indices served per segment / per window (completion attribution).
/// Both require a feasible schedule.
std::vector<std::vector<std::size_t>> served_by_segment(const Instance& inst,
                                                        const Schedule& sched);
std::vector<std::vector<std::size_t>> served_by_window(const Instance& inst,
                                                       const Schedule& sched);

Rational schedule_revenue(const Instance& inst, const Schedule& sched);

}  // namespace roldarp
