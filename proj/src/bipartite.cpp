#include "roldarp/bipartite.hpp"

#include <algorithm>
#include <map>

namespace roldarp {

BipartiteReduction to_bipartite(const Instance& inst, std::optional<Rational> eps) {
  ValidationReport validity = validate_instance(inst);
  if (!validity.valid()) {
    throw Error(ErrorCode::kInvalidInstance, validity.violations.front().message);
  }
  if (inst.graph.bipartite()) {
    throw Error(ErrorCode::kBadArgument, "instance is already bipartite");
  }
  const MetricGraph& g = inst.graph;
  const std::size_t n = g.size();
  if (n == 0) throw Error(ErrorCode::kBadArgument, "empty graph");

  std::optional<Rational> min_edge;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!min_edge || g.weight(i, j) < *min_edge) min_edge = g.weight(i, j);
    }
  }
  if (!min_edge) min_edge = inst.T;  // single-vertex graph: no constraint to respect

  BipartiteReduction out;
  out.eps = eps.value_or(*min_edge / (Rational(2) * inst.T));
  if (!(out.eps.sign() > 0)) throw Error(ErrorCode::kBadParams, "eps must be positive");
  out.delta = inst.T * out.eps;
  if (!(out.delta < *min_edge)) {
    throw Error(ErrorCode::kEpsilonTooLarge,
                "delta = " + out.delta.to_string() + " must stay below the smallest edge " +
                    min_edge->to_string());
  }

  std::vector<std::string> vertices;
  Bipartition bip;
  for (const std::string& name : g.vertices()) {
    std::string v1 = name + "_1";
    std::string v2 = name + "_2";
    out.vertex_map.push_back({name, {v1, v2}});
    bip.v1.push_back(v1);
    bip.v2.push_back(v2);
    vertices.push_back(std::move(v1));
    vertices.push_back(std::move(v2));
  }
  std::vector<RawEdge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({out.vertex_map[i].second.first, out.vertex_map[i].second.second, out.eps});
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      edges.push_back({out.vertex_map[i].second.first, out.vertex_map[j].second.second,
                       g.weight(i, j)});
    }
  }

  Instance& image = out.instance;
  image.graph = MetricGraph::build(std::move(vertices), edges, bip, g.pre_closed());
  image.origin = inst.origin + "_2";
  image.T = inst.T + out.delta;
  image.f = inst.f;
  for (const Request& r : inst.requests) {
    image.requests.push_back({r.s + "_1", r.d + "_2", r.t, r.p});
  }
  std::vector<std::size_t> order(image.requests.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&image](std::size_t a, std::size_t b) {
    return request_less(image.requests[a], image.requests[b]);
  });
  out.request_map.assign(order.size(), 0);
  for (std::size_t pos = 0; pos < order.size(); ++pos) out.request_map[order[pos]] = pos;
  canonicalize_requests(image);
  return out;
}

namespace {

struct SplitNames {
  std::map<std::string, std::pair<std::string, std::string>> forward;
  std::map<std::string, std::pair<std::string, int>> backward;  // copy -> (original, side)

  explicit SplitNames(const BipartiteReduction& red) {
    for (const auto& [orig, copies] : red.vertex_map) {
      forward[orig] = copies;
      backward[copies.first] = {orig, 1};
      backward[copies.second] = {orig, 2};
    }
  }
};

}  // namespace

Schedule lift_schedule(const Instance& general, const BipartiteReduction& reduction,
                       const Schedule& sched) {
  ScheduleVerdict verdict = validate_schedule(general, sched);
  if (!verdict.feasible) {
    throw Error(ErrorCode::kInfeasibleInput,
                std::string(to_string(verdict.rule)) + " at action " +
                    std::to_string(verdict.action_index));
  }
  SplitNames names(reduction);
  Schedule out;
  std::string pos = general.origin;
  int side = 2;  // the bipartite server starts at origin_2
  Rational shift(0);
  for (const Action& a : sched.actions) {
    switch (a.kind) {
      case Action::Kind::kMove: {
        const auto& from = side == 1 ? names.forward[a.from].first : names.forward[a.from].second;
        const auto& to = side == 1 ? names.forward[a.to].second : names.forward[a.to].first;
        out.actions.push_back(make_move(from, to, a.start + shift));
        side = side == 1 ? 2 : 1;
        pos = a.to;
        break;
      }
      case Action::Kind::kServe: {
        const Request& r = general.requests[a.request];
        if (side == 2) {
          const auto& copies = names.forward[r.s];
          out.actions.push_back(make_move(copies.second, copies.first, a.start + shift));
          shift += reduction.eps;
          side = 1;
        }
        out.actions.push_back(make_serve(reduction.request_map[a.request], a.start + shift));
        side = 2;
        pos = r.d;
        break;
      }
      case Action::Kind::kIdle: {
        out.actions.push_back(make_idle(a.start + shift, a.duration));
        break;
      }
    }
  }
  return out;
}

Schedule project_schedule(const Instance& general, const BipartiteReduction& reduction,
                          const Schedule& bip_sched) {
  ScheduleVerdict verdict = validate_schedule(reduction.instance, bip_sched);
  if (!verdict.feasible) {
    throw Error(ErrorCode::kInfeasibleInput,
                std::string(to_string(verdict.rule)) + " at action " +
                    std::to_string(verdict.action_index));
  }
  SplitNames names(reduction);
  std::vector<std::size_t> inverse(reduction.request_map.size());
  for (std::size_t orig = 0; orig < reduction.request_map.size(); ++orig) {
    inverse[reduction.request_map[orig]] = orig;
  }
  Schedule out;
  Rational removed(0);
  Rational prev_end(0);
  for (const Action& a : bip_sched.actions) {
    Rational start = a.start - removed;
    if (start < prev_end) start = prev_end;
    switch (a.kind) {
      case Action::Kind::kMove: {
        const auto& [from_base, from_side] = names.backward.at(a.from);
        const auto& [to_base, to_side] = names.backward.at(a.to);
        if (from_base == to_base) {
          removed += reduction.eps;  // connector hop: the server stays put
          break;
        }
        out.actions.push_back(make_move(from_base, to_base, start));
        prev_end = start + general.graph.weight(general.graph.index_of(from_base),
                                                general.graph.index_of(to_base));
        break;
      }
      case Action::Kind::kServe: {
        std::size_t orig = inverse.at(a.request);
        const Request& r = general.requests[orig];
        if (start < r.t) start = r.t;
        out.actions.push_back(make_serve(orig, start));
        prev_end = start + general.graph.weight(general.graph.index_of(r.s),
                                                general.graph.index_of(r.d));
        break;
      }
      case Action::Kind::kIdle: {
        out.actions.push_back(make_idle(start, a.duration));
        prev_end = start + a.duration;
        break;
      }
    }
  }
  return out;
}

long long per_window_capacity(const Rational& k) {
  if (!(k.sign() > 0) || k > Rational(1)) {
    throw Error(ErrorCode::kBadK, "k must lie in (0, 1]");
  }
  return (Rational(1) / k).ceil().to_int64();
}

}  // namespace roldarp
