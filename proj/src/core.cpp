#include "roldarp/core.hpp"

#include <algorithm>
#include <set>

namespace roldarp {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDisconnected: return "DISCONNECTED";
    case ErrorCode::kNonpositiveWeight: return "NONPOSITIVE_WEIGHT";
    case ErrorCode::kInvalidInstance: return "INVALID_INSTANCE";
    case ErrorCode::kInfeasibleSchedule: return "INFEASIBLE_SCHEDULE";
    case ErrorCode::kTooLarge: return "TOO_LARGE";
    case ErrorCode::kBadParams: return "BAD_PARAMS";
    case ErrorCode::kEpsilonTooLarge: return "EPSILON_TOO_LARGE";
    case ErrorCode::kBadK: return "BAD_K";
    case ErrorCode::kHypothesisViolated: return "HYPOTHESIS_VIOLATED";
    case ErrorCode::kInconsistentInputs: return "INCONSISTENT_INPUTS";
    case ErrorCode::kParseError: return "PARSE_ERROR";
    case ErrorCode::kBadArgument: return "BAD_ARGUMENT";
    case ErrorCode::kUnknownRequest: return "UNKNOWN_REQUEST";
    case ErrorCode::kUnknownVertex: return "UNKNOWN_VERTEX";
    case ErrorCode::kInfeasibleInput: return "INFEASIBLE_INPUT";
  }
  return "UNKNOWN_ERROR";
}

const char* to_string(ViolationCode code) {
  switch (code) {
    case ViolationCode::kMissingOrigin: return "MISSING_ORIGIN";
    case ViolationCode::kBadF: return "BAD_F";
    case ViolationCode::kBadK: return "BAD_K";
    case ViolationCode::kMissingEdge: return "MISSING_EDGE";
    case ViolationCode::kNonpositiveWeight: return "NONPOSITIVE_WEIGHT";
    case ViolationCode::kMaxEdgeExceeded: return "MAX_EDGE_EXCEEDED";
    case ViolationCode::kMinEdgeViolated: return "MIN_EDGE_VIOLATED";
    case ViolationCode::kSameSideEdge: return "SAME_SIDE_EDGE";
    case ViolationCode::kBipartitionUnlabeled: return "BIPARTITION_UNLABELED";
    case ViolationCode::kBipartitionOrigin: return "BIPARTITION_ORIGIN";
    case ViolationCode::kBipartitionRequest: return "BIPARTITION_REQUEST";
    case ViolationCode::kUnknownVertex: return "UNKNOWN_VERTEX";
    case ViolationCode::kLoopRequest: return "LOOP_REQUEST";
    case ViolationCode::kNonpositiveRevenue: return "NONPOSITIVE_REVENUE";
    case ViolationCode::kNegativeRelease: return "NEGATIVE_RELEASE";
    case ViolationCode::kReleaseAfterLimit: return "RELEASE_AFTER_LIMIT";
  }
  return "UNKNOWN_VIOLATION";
}

const char* to_string(ScheduleRule rule) {
  switch (rule) {
    case ScheduleRule::kOk: return "OK";
    case ScheduleRule::kUnknownVertex: return "UNKNOWN_VERTEX";
    case ScheduleRule::kUnknownRequest: return "UNKNOWN_REQUEST";
    case ScheduleRule::kWrongPosition: return "WRONG_POSITION";
    case ScheduleRule::kTimeOverlap: return "TIME_OVERLAP";
    case ScheduleRule::kNegativeDuration: return "NEGATIVE_DURATION";
    case ScheduleRule::kMissingEdge: return "MISSING_EDGE";
    case ScheduleRule::kRequestNotReleased: return "REQUEST_NOT_RELEASED";
    case ScheduleRule::kRequestServedTwice: return "REQUEST_SERVED_TWICE";
    case ScheduleRule::kExceedsTimeLimit: return "EXCEEDS_TIME_LIMIT";
  }
  return "UNKNOWN_RULE";
}

MetricGraph MetricGraph::build(std::vector<std::string> vertices,
                               const std::vector<RawEdge>& edges,
                               const std::optional<Bipartition>& bipartition, bool pre_closed) {
  MetricGraph g;
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw Error(ErrorCode::kBadArgument, "duplicate vertex name");
  }
  g.vertices_ = std::move(vertices);
  const std::size_t n = g.vertices_.size();
  g.weight_.assign(n * n, Rational(0));
  g.present_.assign(n * n, 0);
  g.pre_closed_ = pre_closed;
  for (const RawEdge& e : edges) {
    std::size_t i = g.index_of(e.u);
    std::size_t j = g.index_of(e.v);
    if (i == j) throw Error(ErrorCode::kBadArgument, "self edge on vertex " + e.u);
    if (g.present_[i * n + j]) {
      throw Error(ErrorCode::kBadArgument, "duplicate edge " + e.u + "-" + e.v);
    }
    g.weight_[i * n + j] = e.w;
    g.weight_[j * n + i] = e.w;
    g.present_[i * n + j] = 1;
    g.present_[j * n + i] = 1;
  }
  if (bipartition) {
    g.side_.assign(n, 0);
    for (const std::string& name : bipartition->v1) g.side_[g.index_of(name)] = 1;
    for (const std::string& name : bipartition->v2) {
      std::size_t i = g.index_of(name);
      if (g.side_[i] == 1) {
        throw Error(ErrorCode::kBadArgument, "vertex on both sides: " + name);
      }
      g.side_[i] = 2;
    }
  }
  return g;
}

std::optional<std::size_t> MetricGraph::find(std::string_view name) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t MetricGraph::index_of(std::string_view name) const {
  auto idx = find(name);
  if (!idx) throw Error(ErrorCode::kUnknownVertex, std::string(name));
  return *idx;
}

std::vector<RawEdge> MetricGraph::edge_list() const {
  std::vector<RawEdge> out;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (present_[i * n + j]) out.push_back({vertices_[i], vertices_[j], weight_[i * n + j]});
    }
  }
  return out;
}

void MetricGraph::add_vertex(const std::string& name, const Rational& default_weight) {
  if (find(name)) throw Error(ErrorCode::kBadArgument, "vertex exists: " + name);
  std::vector<std::string> verts = vertices_;
  verts.push_back(name);
  std::vector<RawEdge> edges = edge_list();
  for (const std::string& other : vertices_) edges.push_back({name, other, default_weight});
  std::optional<Bipartition> bip;
  MetricGraph rebuilt = MetricGraph::build(std::move(verts), edges, bip, pre_closed_);
  // Bipartition labels are carried over by name.
  if (!side_.empty()) {
    rebuilt.side_.assign(rebuilt.size(), 0);
    for (std::size_t i = 0; i < size(); ++i) {
      rebuilt.side_[rebuilt.index_of(vertices_[i])] = side_[i];
    }
  }
  *this = std::move(rebuilt);
}

void MetricGraph::set_weight(std::string_view u, std::string_view v, const Rational& w) {
  std::size_t i = index_of(u);
  std::size_t j = index_of(v);
  if (i == j) throw Error(ErrorCode::kBadArgument, "self edge");
  const std::size_t n = size();
  weight_[i * n + j] = w;
  weight_[j * n + i] = w;
  present_[i * n + j] = 1;
  present_[j * n + i] = 1;
}

bool request_less(const Request& a, const Request& b) {
  if (a.s != b.s) return a.s < b.s;
  if (a.d != b.d) return a.d < b.d;
  if (a.t != b.t) return a.t < b.t;
  return a.p < b.p;
}

void canonicalize_requests(Instance& inst) {
  std::stable_sort(inst.requests.begin(), inst.requests.end(), request_less);
}

ValidationReport validate_instance(const Instance& inst) {
  ValidationReport report;
  auto add = [&report](ViolationCode code, std::string entity, std::string message) {
    report.violations.push_back({code, std::move(entity), std::move(message)});
  };

  const MetricGraph& g = inst.graph;
  const std::size_t n = g.size();

  if (!g.find(inst.origin)) {
    add(ViolationCode::kMissingOrigin, inst.origin, "origin is not a vertex of the graph");
  }
  if (inst.f <= 1 || !(Rational(inst.f) < inst.T)) {
    add(ViolationCode::kBadF, "f=" + std::to_string(inst.f),
        "f must satisfy 1 < f < T");
  }
  if (inst.min_edge_factor) {
    const Rational& k = *inst.min_edge_factor;
    if (!(k.sign() > 0) || k > Rational(1)) {
      add(ViolationCode::kBadK, "k=" + k.to_string(), "k must lie in (0, 1]");
    }
  }

  const Rational seg = inst.f > 0 ? inst.T / Rational(inst.f) : Rational(0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::string pair = g.vertices()[i] + "-" + g.vertices()[j];
      const bool same_side = g.bipartite() && g.side(i) != 0 && g.side(i) == g.side(j);
      if (same_side) {
        if (g.has_edge(i, j)) {
          add(ViolationCode::kSameSideEdge, pair, "bipartite instances have no same-side edges");
        }
        continue;
      }
      if (!g.has_edge(i, j)) {
        add(ViolationCode::kMissingEdge, pair, "graph is not complete");
        continue;
      }
      const Rational& w = g.weight(i, j);
      if (!(w.sign() > 0)) {
        add(ViolationCode::kNonpositiveWeight, pair, "edge weight must be positive");
        continue;
      }
      if (inst.f > 1 && w > seg) {
        add(ViolationCode::kMaxEdgeExceeded, pair,
            "edge weight " + w.to_string() + " exceeds T/f = " + seg.to_string());
      }
      if (inst.min_edge_factor && inst.f > 1) {
        const Rational lower = *inst.min_edge_factor * seg;
        if (w < lower) {
          add(ViolationCode::kMinEdgeViolated, pair,
              "edge weight " + w.to_string() + " below k*T/f = " + lower.to_string());
        }
      }
    }
  }

  if (g.bipartite()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (g.side(i) == 0) {
        add(ViolationCode::kBipartitionUnlabeled, g.vertices()[i],
            "vertex belongs to neither V1 nor V2");
      }
    }
    auto origin_idx = g.find(inst.origin);
    if (origin_idx && g.side(*origin_idx) != 2) {
      add(ViolationCode::kBipartitionOrigin, inst.origin, "origin must lie in V2");
    }
  }

  for (std::size_t r = 0; r < inst.requests.size(); ++r) {
    const Request& req = inst.requests[r];
    const std::string entity = "request " + std::to_string(r);
    auto si = g.find(req.s);
    auto di = g.find(req.d);
    if (!si) add(ViolationCode::kUnknownVertex, entity, "unknown source " + req.s);
    if (!di) add(ViolationCode::kUnknownVertex, entity, "unknown destination " + req.d);
    if (req.s == req.d) add(ViolationCode::kLoopRequest, entity, "source equals destination");
    if (!(req.p.sign() > 0)) add(ViolationCode::kNonpositiveRevenue, entity, "revenue must be positive");
    if (req.t.sign() < 0) add(ViolationCode::kNegativeRelease, entity, "release time is negative");
    if (req.t > inst.T) add(ViolationCode::kReleaseAfterLimit, entity, "release time exceeds T");
    if (g.bipartite() && si && di) {
      if (g.side(*si) != 1 || g.side(*di) != 2) {
        add(ViolationCode::kBipartitionRequest, entity,
            "sources must lie in V1 and destinations in V2");
      }
    }
  }
  return report;
}

MetricGraph metric_closure(const MetricGraph& raw) {
  if (raw.bipartite()) {
    throw Error(ErrorCode::kBadArgument, "metric closure of a bipartite graph");
  }
  const std::size_t n = raw.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (raw.has_edge(i, j) && !(raw.weight(i, j).sign() > 0)) {
        throw Error(ErrorCode::kNonpositiveWeight,
                    "edge " + raw.vertices()[i] + "-" + raw.vertices()[j]);
      }
    }
  }
  // Floyd-Warshall over optional distances.
  std::vector<std::optional<Rational>> dist(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    dist[i * n + i] = Rational(0);
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && raw.has_edge(i, j)) dist[i * n + j] = raw.weight(i, j);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!dist[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!dist[k * n + j]) continue;
        Rational via = *dist[i * n + k] + *dist[k * n + j];
        if (!dist[i * n + j] || via < *dist[i * n + j]) dist[i * n + j] = std::move(via);
      }
    }
  }
  std::vector<RawEdge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!dist[i * n + j]) {
        throw Error(ErrorCode::kDisconnected,
                    raw.vertices()[i] + " unreachable from " + raw.vertices()[j]);
      }
      edges.push_back({raw.vertices()[i], raw.vertices()[j], *dist[i * n + j]});
    }
  }
  return MetricGraph::build(raw.vertices(), edges, std::nullopt, false);
}

Action make_move(std::string from, std::string to, Rational start) {
  Action a;
  a.kind = Action::Kind::kMove;
  a.from = std::move(from);
  a.to = std::move(to);
  a.start = std::move(start);
  return a;
}

Action make_serve(std::size_t request, Rational start) {
  Action a;
  a.kind = Action::Kind::kServe;
  a.request = request;
  a.start = std::move(start);
  return a;
}

Action make_idle(Rational start, Rational duration) {
  Action a;
  a.kind = Action::Kind::kIdle;
  a.start = std::move(start);
  a.duration = std::move(duration);
  return a;
}

ScheduleVerdict validate_schedule(const Instance& inst, const Schedule& sched) {
  ScheduleVerdict verdict;
  verdict.revenue = Rational(0);
  verdict.completion = Rational(0);
  const MetricGraph& g = inst.graph;

  auto fail = [&verdict](ScheduleRule rule, std::size_t index, std::string message) {
    verdict.feasible = false;
    verdict.rule = rule;
    verdict.action_index = index;
    verdict.message = std::move(message);
    return verdict;
  };

  auto origin_idx = g.find(inst.origin);
  if (!origin_idx) return fail(ScheduleRule::kUnknownVertex, 0, "origin " + inst.origin);

  std::size_t pos = *origin_idx;
  Rational now(0);
  std::vector<bool> served(inst.requests.size(), false);

  for (std::size_t i = 0; i < sched.actions.size(); ++i) {
    const Action& a = sched.actions[i];
    if (a.start < now) {
      return fail(ScheduleRule::kTimeOverlap, i,
                  "action starts at " + a.start.to_string() + " before " + now.to_string());
    }
    Rational end;
    switch (a.kind) {
      case Action::Kind::kMove: {
        auto from = g.find(a.from);
        auto to = g.find(a.to);
        if (!from || !to) return fail(ScheduleRule::kUnknownVertex, i, a.from + "/" + a.to);
        if (*from == *to) return fail(ScheduleRule::kMissingEdge, i, "move to same vertex");
        if (*from != pos) {
          return fail(ScheduleRule::kWrongPosition, i,
                      "move starts at " + a.from + " but server is at " + g.vertices()[pos]);
        }
        if (!g.has_edge(*from, *to)) {
          return fail(ScheduleRule::kMissingEdge, i, a.from + "-" + a.to);
        }
        end = a.start + g.weight(*from, *to);
        pos = *to;
        break;
      }
      case Action::Kind::kServe: {
        if (a.request >= inst.requests.size()) {
          return fail(ScheduleRule::kUnknownRequest, i, std::to_string(a.request));
        }
        const Request& req = inst.requests[a.request];
        auto si = g.find(req.s);
        auto di = g.find(req.d);
        if (!si || !di) return fail(ScheduleRule::kUnknownVertex, i, req.s + "/" + req.d);
        if (*si != pos) {
          return fail(ScheduleRule::kWrongPosition, i,
                      "serve starts at " + req.s + " but server is at " + g.vertices()[pos]);
        }
        if (!g.has_edge(*si, *di)) return fail(ScheduleRule::kMissingEdge, i, req.s + "-" + req.d);
        if (a.start < req.t) {
          return fail(ScheduleRule::kRequestNotReleased, i,
                      "serve at " + a.start.to_string() + " before release " + req.t.to_string());
        }
        if (served[a.request]) {
          return fail(ScheduleRule::kRequestServedTwice, i, std::to_string(a.request));
        }
        served[a.request] = true;
        verdict.revenue += req.p;
        end = a.start + g.weight(*si, *di);
        pos = *di;
        break;
      }
      case Action::Kind::kIdle: {
        if (a.duration.sign() < 0) {
          return fail(ScheduleRule::kNegativeDuration, i, a.duration.to_string());
        }
        end = a.start + a.duration;
        break;
      }
    }
    if (end > inst.T) {
      return fail(ScheduleRule::kExceedsTimeLimit, i,
                  "action ends at " + end.to_string() + " after T = " + inst.T.to_string());
    }
    now = std::move(end);
  }
  verdict.feasible = true;
  verdict.completion = now;
  return verdict;
}

int SegmentClock::segment_of_completion(const Rational& time) const {
  if (!(time.sign() > 0) || time > T) {
    throw Error(ErrorCode::kBadArgument, "completion time outside (0, T]");
  }
  BigInt j = (time * Rational(f) / T).ceil();
  return static_cast<int>(j.to_int64());
}

RevenueProfile revenue_profile(const Instance& inst, const Schedule& sched) {
  ScheduleVerdict verdict = validate_schedule(inst, sched);
  if (!verdict.feasible) {
    throw Error(ErrorCode::kInfeasibleSchedule,
                std::string(to_string(verdict.rule)) + " at action " +
                    std::to_string(verdict.action_index));
  }
  SegmentClock clock{inst.T, inst.f};
  RevenueProfile profile;
  profile.by_segment.assign(inst.f, Rational(0));
  profile.by_window.assign(clock.window_count(), Rational(0));
  profile.total = Rational(0);
  for (const Action& a : sched.actions) {
    if (a.kind != Action::Kind::kServe) continue;
    const Request& req = inst.requests[a.request];
    Rational completion = a.start + inst.graph.weight(inst.graph.index_of(req.s),
                                                      inst.graph.index_of(req.d));
    int seg = clock.segment_of_completion(completion);
    profile.by_segment[seg - 1] += req.p;
    profile.by_window[clock.window_of_segment(seg) - 1] += req.p;
    profile.total += req.p;
  }
  return profile;
}

std::vector<std::vector<std::size_t>> served_by_segment(const Instance& inst,
                                                        const Schedule& sched) {
  ScheduleVerdict verdict = validate_schedule(inst, sched);
  if (!verdict.feasible) {
    throw Error(ErrorCode::kInfeasibleSchedule,
                std::string(to_string(verdict.rule)) + " at action " +
                    std::to_string(verdict.action_index));
  }
  SegmentClock clock{inst.T, inst.f};
  std::vector<std::vector<std::size_t>> out(inst.f);
  for (const Action& a : sched.actions) {
    if (a.kind != Action::Kind::kServe) continue;
    const Request& req = inst.requests[a.request];
    Rational completion = a.start + inst.graph.weight(inst.graph.index_of(req.s),
                                                      inst.graph.index_of(req.d));
    out[clock.segment_of_completion(completion) - 1].push_back(a.request);
  }
  return out;
}

std::vector<std::vector<std::size_t>> served_by_window(const Instance& inst,
                                                       const Schedule& sched) {
  SegmentClock clock{inst.T, inst.f};
  auto segments = served_by_segment(inst, sched);
  std::vector<std::vector<std::size_t>> out(clock.window_count());
  for (int j = 1; j <= inst.f; ++j) {
    auto& dst = out[clock.window_of_segment(j) - 1];
    dst.insert(dst.end(), segments[j - 1].begin(), segments[j - 1].end());
  }
  return out;
}

Rational schedule_revenue(const Instance& inst, const Schedule& sched) {
  Rational total(0);
  for (const Action& a : sched.actions) {
    if (a.kind == Action::Kind::kServe && a.request < inst.requests.size()) {
      total += inst.requests[a.request].p;
    }
  }
  return total;
}

}  // namespace roldarp
