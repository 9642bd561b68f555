#pragma once

#include <deque>
#include <vector>

#include "roldarp/core.hpp"
#include "roldarp/online.hpp"

namespace roldarp {

/// The released-and-unserved requests visible at a decision instant, viewed
/// as request edges over the metric's vertices.
struct AuxiliaryGraph {
  const MetricGraph* metric = nullptr;
  std::vector<std::size_t> ids;    // request ids, ascending
  std::vector<Request> requests;   // parallel to ids
};

AuxiliaryGraph auxiliary_from_view(const PolicyView& view);
AuxiliaryGraph auxiliary_from_instance(const Instance& inst, const Rational& instant,
                                       const std::vector<bool>& served);

/// An ordered request chain plus its implied connecting empty moves. The
/// duration counts serve times and the moves between consecutive requests;
/// the approach move into the first source happens in the planning segment
/// and is not counted.
struct ServePlan {
  std::vector<std::size_t> request_ids;
  Rational duration;
  Rational revenue;
  bool empty() const { return request_ids.empty(); }
};

/// Exhaustive chain enumeration with duration pruning. Ties are broken by
/// higher revenue, then fewer requests, then lexicographically smallest id
/// sequence. Chains may revisit vertices.
ServePlan max_revenue_request_set(const AuxiliaryGraph& aux, const Rational& budget);

/// The segmented best path policy: alternates a planning segment (move to
/// the chosen chain's first source) with a serving segment (execute the
/// chain), idling through both when nothing fits. Odd f idles through t_1.
class SbpPolicy : public OnlinePolicy {
 public:
  struct PlanRecord {
    Rational instant;
    ServePlan plan;
  };

  void restart() override;
  PolicyAction decide(const PolicyView& view) override;

  const std::vector<PlanRecord>& plan_trace() const { return trace_; }

 private:
  int next_plan_index_ = 0;  // 0 until the first decision fixes parity
  std::deque<std::size_t> queue_;
  std::vector<Request> queued_requests_;
  Rational serve_segment_start_;
  std::vector<PlanRecord> trace_;
};

struct SbpResult {
  Schedule schedule;
  RevenueProfile profile;
  std::vector<SbpPolicy::PlanRecord> plans;
};

/// Runs the policy on a static instance. Throws kInvalidInstance when the
/// instance does not validate.
SbpResult run_sbp(const Instance& inst);

}  // namespace roldarp
