#pragma once

#include <functional>
#include <string>
#include <vector>

#include "roldarp/core.hpp"

namespace roldarp {

struct ReleasedRequest {
  std::size_t id;  // simulation-order request id
  Request request;
  bool served = false;
};

/// What an online policy is allowed to see: the metric revealed so far and
/// the requests released at or before the current instant.
struct PolicyView {
  const MetricGraph* graph = nullptr;
  Rational T;
  int f = 0;
  Rational now;
  std::string position;
  std::vector<ReleasedRequest> released;
};

/// One committed action. Commitments are binding: once returned, the engine
/// executes the action to completion (non-preemption). kWait is the absence
/// of a commitment; the policy is asked again at the next event.
struct PolicyAction {
  enum class Kind { kWait, kMoveTo, kServe, kIdleFor };
  Kind kind = Kind::kWait;
  std::string target;       // kMoveTo
  std::size_t request = 0;  // kServe, simulation-order id
  Rational duration;        // kIdleFor

  static PolicyAction wait() { return {}; }
  static PolicyAction move_to(std::string v);
  static PolicyAction serve(std::size_t id);
  static PolicyAction idle_for(Rational d);
};

class OnlinePolicy {
 public:
  virtual ~OnlinePolicy() = default;
  virtual void restart() = 0;
  virtual PolicyAction decide(const PolicyView& view) = 0;
};

/// A policy that never commits to anything.
class IdlePolicy : public OnlinePolicy {
 public:
  void restart() override {}
  PolicyAction decide(const PolicyView&) override { return PolicyAction::wait(); }
};

/// Event-driven simulation of one policy against a request stream. Events
/// are request releases, segment boundaries, and action completions; the
/// policy is consulted whenever it is free at an event. Adversary drivers
/// may register time callbacks and an action observer, and may extend the
/// graph and inject future-released requests while the simulation runs.
class Simulation {
 public:
  Simulation(MetricGraph graph, std::string origin, Rational T, int f);

  /// Registers a request. Before run() any release time is accepted; from
  /// inside callbacks the release must not lie in the past.
  void add_request(Request r);
  void schedule_callback(Rational at, std::function<void(Simulation&)> cb);
  void set_commit_observer(std::function<void(Simulation&, const Action&)> observer);

  MetricGraph& graph() { return graph_; }
  const MetricGraph& graph() const { return graph_; }
  const Rational& now() const { return now_; }
  const std::string& position() const { return position_; }
  const Rational& T() const { return T_; }
  int f() const { return f_; }
  const std::vector<Request>& requests() const { return requests_; }
  const std::vector<bool>& served() const { return served_; }

  /// Runs the policy from time 0 to T. Returns the committed actions; wait
  /// gaps are not materialized (the feasibility checker treats a late start
  /// as waiting in place).
  Schedule run(OnlinePolicy& policy);

  /// The finalized instance: every request that ended up released, in
  /// canonical order.
  Instance finalize_instance() const;
  /// Maps simulation-order request ids to indices in finalize_instance().
  std::vector<std::size_t> canonical_index_map() const;
  static Schedule remap_requests(const Schedule& sched, const std::vector<std::size_t>& map);

 private:
  MetricGraph graph_;
  std::string origin_;
  Rational T_;
  int f_ = 0;
  Rational now_;
  std::string position_;
  std::vector<Request> requests_;
  std::vector<bool> served_;
  std::vector<std::pair<Rational, std::function<void(Simulation&)>>> callbacks_;
  std::size_t fired_ = 0;  // callbacks_ prefix already fired (kept sorted)
  std::function<void(Simulation&, const Action&)> observer_;
  bool running_ = false;

  PolicyView make_view() const;
  Rational next_event_after(const Rational& t) const;
  void advance_to(const Rational& t);
  void sort_callbacks();
};

}  // namespace roldarp
