#include "roldarp/sbp.hpp"

#include <algorithm>

namespace roldarp {

AuxiliaryGraph auxiliary_from_view(const PolicyView& view) {
  AuxiliaryGraph aux;
  aux.metric = view.graph;
  for (const ReleasedRequest& r : view.released) {
    if (r.served) continue;
    aux.ids.push_back(r.id);
    aux.requests.push_back(r.request);
  }
  return aux;
}

AuxiliaryGraph auxiliary_from_instance(const Instance& inst, const Rational& instant,
                                       const std::vector<bool>& served) {
  AuxiliaryGraph aux;
  aux.metric = &inst.graph;
  for (std::size_t i = 0; i < inst.requests.size(); ++i) {
    if (i < served.size() && served[i]) continue;
    if (inst.requests[i].t > instant) continue;
    aux.ids.push_back(i);
    aux.requests.push_back(inst.requests[i]);
  }
  return aux;
}

namespace {

bool plan_better(const ServePlan& a, const ServePlan& b) {
  if (a.revenue != b.revenue) return a.revenue > b.revenue;
  if (a.request_ids.size() != b.request_ids.size()) {
    return a.request_ids.size() < b.request_ids.size();
  }
  return a.request_ids < b.request_ids;
}

struct PlanSearch {
  const AuxiliaryGraph& aux;
  const Rational& budget;
  std::vector<Rational> serve_time;   // per aux entry
  std::vector<std::size_t> src, dst;  // vertex indices per aux entry
  std::vector<bool> used;
  std::vector<std::size_t> chain;  // aux positions
  Rational duration{0};
  Rational revenue{0};
  ServePlan best;

  explicit PlanSearch(const AuxiliaryGraph& aux_in, const Rational& budget_in)
      : aux(aux_in), budget(budget_in) {
    const MetricGraph& g = *aux.metric;
    serve_time.reserve(aux.requests.size());
    for (const Request& r : aux.requests) {
      std::size_t si = g.index_of(r.s);
      std::size_t di = g.index_of(r.d);
      src.push_back(si);
      dst.push_back(di);
      serve_time.push_back(g.weight(si, di));
    }
    used.assign(aux.requests.size(), false);
    best.duration = Rational(0);
    best.revenue = Rational(0);
  }

  void record() {
    if (chain.empty()) return;
    ServePlan candidate;
    candidate.request_ids.reserve(chain.size());
    for (std::size_t pos : chain) candidate.request_ids.push_back(aux.ids[pos]);
    candidate.duration = duration;
    candidate.revenue = revenue;
    if (best.empty() || plan_better(candidate, best)) best = std::move(candidate);
  }

  void extend() {
    record();
    const MetricGraph& g = *aux.metric;
    for (std::size_t next = 0; next < aux.requests.size(); ++next) {
      if (used[next]) continue;
      Rational step = serve_time[next];
      if (!chain.empty()) {
        std::size_t prev_dst = dst[chain.back()];
        if (prev_dst != src[next]) {
          if (!g.has_edge(prev_dst, src[next])) continue;
          step += g.weight(prev_dst, src[next]);
        }
      }
      Rational total = duration + step;
      if (total > budget) continue;
      used[next] = true;
      chain.push_back(next);
      std::swap(duration, total);
      revenue += aux.requests[next].p;
      extend();
      revenue -= aux.requests[next].p;
      std::swap(duration, total);
      chain.pop_back();
      used[next] = false;
    }
  }
};

}  // namespace

ServePlan max_revenue_request_set(const AuxiliaryGraph& aux, const Rational& budget) {
  PlanSearch search(aux, budget);
  search.extend();
  return search.best;
}

void SbpPolicy::restart() {
  next_plan_index_ = 0;
  queue_.clear();
  queued_requests_.clear();
  serve_segment_start_ = Rational(0);
  trace_.clear();
}

PolicyAction SbpPolicy::decide(const PolicyView& view) {
  const Rational seg = view.T / Rational(view.f);
  if (next_plan_index_ == 0) next_plan_index_ = (view.f % 2 == 1) ? 2 : 1;

  if (next_plan_index_ < view.f &&
      view.now == Rational(next_plan_index_ - 1) * seg) {
    AuxiliaryGraph aux = auxiliary_from_view(view);
    ServePlan plan = max_revenue_request_set(aux, seg);
    trace_.push_back({view.now, plan});
    const int i = next_plan_index_;
    next_plan_index_ += 2;
    if (plan.empty()) return PolicyAction::idle_for(seg + seg);
    queue_.assign(plan.request_ids.begin(), plan.request_ids.end());
    queued_requests_.clear();
    for (std::size_t id : plan.request_ids) {
      for (const ReleasedRequest& r : view.released) {
        if (r.id == id) queued_requests_.push_back(r.request);
      }
    }
    serve_segment_start_ = Rational(i) * seg;
    const std::string& first_source = queued_requests_.front().s;
    if (view.position != first_source) return PolicyAction::move_to(first_source);
    return PolicyAction::idle_for(seg);
  }

  if (!queue_.empty()) {
    if (view.now < serve_segment_start_) {
      return PolicyAction::idle_for(serve_segment_start_ - view.now);
    }
    const Request& next = queued_requests_[queued_requests_.size() - queue_.size()];
    if (view.position != next.s) return PolicyAction::move_to(next.s);
    std::size_t id = queue_.front();
    queue_.pop_front();
    return PolicyAction::serve(id);
  }

  Rational target = next_plan_index_ < view.f
                        ? Rational(next_plan_index_ - 1) * seg
                        : view.T;
  if (target > view.now) return PolicyAction::idle_for(target - view.now);
  return PolicyAction::wait();
}

SbpResult run_sbp(const Instance& inst) {
  ValidationReport report = validate_instance(inst);
  if (!report.valid()) {
    throw Error(ErrorCode::kInvalidInstance, report.violations.front().message);
  }
  Simulation sim(inst.graph, inst.origin, inst.T, inst.f);
  for (const Request& r : inst.requests) sim.add_request(r);
  SbpPolicy policy;
  policy.restart();
  SbpResult result;
  result.schedule = sim.run(policy);
  result.profile = revenue_profile(inst, result.schedule);
  result.plans = policy.plan_trace();
  return result;
}

}  // namespace roldarp
