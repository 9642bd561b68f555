#include "roldarp/online.hpp"

#include <algorithm>

namespace roldarp {

PolicyAction PolicyAction::move_to(std::string v) {
  PolicyAction a;
  a.kind = Kind::kMoveTo;
  a.target = std::move(v);
  return a;
}

PolicyAction PolicyAction::serve(std::size_t id) {
  PolicyAction a;
  a.kind = Kind::kServe;
  a.request = id;
  return a;
}

PolicyAction PolicyAction::idle_for(Rational d) {
  PolicyAction a;
  a.kind = Kind::kIdleFor;
  a.duration = std::move(d);
  return a;
}

Simulation::Simulation(MetricGraph graph, std::string origin, Rational T, int f)
    : graph_(std::move(graph)), origin_(std::move(origin)), T_(std::move(T)), f_(f),
      now_(0), position_(origin_) {
  graph_.index_of(origin_);  // throws on unknown origin
  if (f_ < 2) throw Error(ErrorCode::kBadArgument, "simulation needs f >= 2");
}

void Simulation::add_request(Request r) {
  if (running_ && r.t < now_) {
    throw Error(ErrorCode::kBadArgument, "request released in the policy's past");
  }
  requests_.push_back(std::move(r));
  served_.push_back(false);
}

void Simulation::schedule_callback(Rational at, std::function<void(Simulation&)> cb) {
  callbacks_.emplace_back(std::move(at), std::move(cb));
  sort_callbacks();
}

void Simulation::sort_callbacks() {
  std::stable_sort(callbacks_.begin() + fired_, callbacks_.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
}

void Simulation::set_commit_observer(std::function<void(Simulation&, const Action&)> observer) {
  observer_ = std::move(observer);
}

PolicyView Simulation::make_view() const {
  PolicyView view;
  view.graph = &graph_;
  view.T = T_;
  view.f = f_;
  view.now = now_;
  view.position = position_;
  for (std::size_t i = 0; i < requests_.size(); ++i) {
    if (requests_[i].t <= now_) view.released.push_back({i, requests_[i], served_[i]});
  }
  return view;
}

Rational Simulation::next_event_after(const Rational& t) const {
  Rational best = T_;
  auto consider = [&best, &t](const Rational& candidate) {
    if (candidate > t && candidate < best) best = candidate;
  };
  for (const Request& r : requests_) consider(r.t);
  for (std::size_t i = fired_; i < callbacks_.size(); ++i) consider(callbacks_[i].first);
  const Rational seg = T_ / Rational(f_);
  for (int j = 1; j <= f_; ++j) consider(Rational(j) * seg);
  return best;
}

void Simulation::advance_to(const Rational& t) {
  // Fire callbacks with timestamps in (now, t], in time order.
  while (fired_ < callbacks_.size() && callbacks_[fired_].first <= t) {
    now_ = callbacks_[fired_].first;
    auto cb = callbacks_[fired_].second;
    ++fired_;
    cb(*this);
    sort_callbacks();  // a callback may have scheduled more
  }
  now_ = t;
}

Schedule Simulation::run(OnlinePolicy& policy) {
  running_ = true;
  Schedule schedule;
  // Fire time-zero callbacks before the first decision.
  while (fired_ < callbacks_.size() && callbacks_[fired_].first <= now_) {
    auto cb = callbacks_[fired_].second;
    ++fired_;
    cb(*this);
    sort_callbacks();
  }
  while (now_ < T_) {
    PolicyAction pa = policy.decide(make_view());
    switch (pa.kind) {
      case PolicyAction::Kind::kWait: {
        advance_to(next_event_after(now_));
        break;
      }
      case PolicyAction::Kind::kMoveTo: {
        std::size_t from = graph_.index_of(position_);
        std::size_t to = graph_.index_of(pa.target);
        if (from == to) throw Error(ErrorCode::kBadArgument, "policy move to its own position");
        if (!graph_.has_edge(from, to)) {
          throw Error(ErrorCode::kBadArgument, "policy move along missing edge");
        }
        Rational end = now_ + graph_.weight(from, to);
        if (end > T_) throw Error(ErrorCode::kBadArgument, "policy move past the time limit");
        Action act = make_move(position_, pa.target, now_);
        schedule.actions.push_back(act);
        if (observer_) observer_(*this, act);
        advance_to(end);
        position_ = pa.target;
        break;
      }
      case PolicyAction::Kind::kServe: {
        if (pa.request >= requests_.size()) {
          throw Error(ErrorCode::kUnknownRequest, std::to_string(pa.request));
        }
        const Request& r = requests_[pa.request];
        if (r.t > now_) throw Error(ErrorCode::kBadArgument, "policy serves unreleased request");
        if (served_[pa.request]) throw Error(ErrorCode::kBadArgument, "policy serves twice");
        std::size_t s = graph_.index_of(r.s);
        std::size_t d = graph_.index_of(r.d);
        if (graph_.index_of(position_) != s) {
          throw Error(ErrorCode::kBadArgument, "policy serves away from the source");
        }
        Rational end = now_ + graph_.weight(s, d);
        if (end > T_) throw Error(ErrorCode::kBadArgument, "policy serve past the time limit");
        // Callbacks fired while the serve runs may grow requests_, so keep
        // the destination by value.
        std::string dest = r.d;
        Action act = make_serve(pa.request, now_);
        schedule.actions.push_back(act);
        served_[pa.request] = true;
        if (observer_) observer_(*this, act);
        advance_to(end);
        position_ = std::move(dest);
        break;
      }
      case PolicyAction::Kind::kIdleFor: {
        if (!(pa.duration.sign() > 0)) {
          throw Error(ErrorCode::kBadArgument, "policy idle must have positive duration");
        }
        Rational end = now_ + pa.duration;
        if (end > T_) throw Error(ErrorCode::kBadArgument, "policy idle past the time limit");
        Action act = make_idle(now_, pa.duration);
        schedule.actions.push_back(act);
        if (observer_) observer_(*this, act);
        advance_to(end);
        break;
      }
    }
  }
  running_ = false;
  return schedule;
}

Instance Simulation::finalize_instance() const {
  Instance inst;
  inst.graph = graph_;
  inst.origin = origin_;
  inst.T = T_;
  inst.f = f_;
  inst.requests = requests_;
  canonicalize_requests(inst);
  return inst;
}

std::vector<std::size_t> Simulation::canonical_index_map() const {
  std::vector<std::size_t> order(requests_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
    return request_less(requests_[a], requests_[b]);
  });
  std::vector<std::size_t> map(requests_.size());
  for (std::size_t sorted_pos = 0; sorted_pos < order.size(); ++sorted_pos) {
    map[order[sorted_pos]] = sorted_pos;
  }
  return map;
}

Schedule Simulation::remap_requests(const Schedule& sched, const std::vector<std::size_t>& map) {
  Schedule out = sched;
  for (Action& a : out.actions) {
    if (a.kind == Action::Kind::kServe) a.request = map.at(a.request);
  }
  return out;
}

}  // namespace roldarp
