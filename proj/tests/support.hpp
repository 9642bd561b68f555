#pragma once

// Reference implementations the test suites use as oracles. These re-derive
// results straight from the definitions (full enumeration, no pruning, no
// shared code with the library search paths).

#include <algorithm>
#include <functional>
#include <string>
#include <tuple>
#include <vector>

#include "roldarp/core.hpp"

namespace testsupport {

using roldarp::Action;
using roldarp::Instance;
using roldarp::MetricGraph;
using roldarp::Rational;
using roldarp::RawEdge;
using roldarp::Request;
using roldarp::Schedule;

/// Best revenue over every ordered sequence of distinct open requests whose
/// serve times plus connecting moves fit in the budget.
inline Rational brute_force_best_chain(const MetricGraph& g, const std::vector<Request>& open,
                                       const Rational& budget) {
  Rational best(0);
  std::vector<std::size_t> order;
  std::vector<bool> used(open.size(), false);
  auto chain_value = [&]() {
    Rational duration(0);
    Rational revenue(0);
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      const Request& r = open[order[pos]];
      std::size_t s = g.index_of(r.s);
      std::size_t d = g.index_of(r.d);
      if (pos > 0) {
        const Request& prev = open[order[pos - 1]];
        std::size_t pd = g.index_of(prev.d);
        if (pd != s) {
          if (!g.has_edge(pd, s)) return;  // chain impossible
          duration += g.weight(pd, s);
        }
      }
      duration += g.weight(s, d);
      revenue += r.p;
    }
    if (duration <= budget && revenue > best) best = revenue;
  };
  std::function<void()> recurse = [&]() {
    chain_value();
    for (std::size_t i = 0; i < open.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      order.push_back(i);
      recurse();
      order.pop_back();
      used[i] = false;
    }
  };
  recurse();
  return best;
}

/// Best offline revenue by plain depth-first enumeration of serve orders
/// (move to the source, wait out the release, serve). No incumbent pruning.
inline Rational exhaustive_best_revenue(const Instance& inst, const Rational& horizon) {
  const MetricGraph& g = inst.graph;
  Rational best(0);
  std::vector<bool> used(inst.requests.size(), false);
  std::function<void(std::size_t, Rational, Rational)> recurse =
      [&](std::size_t pos, Rational now, Rational revenue) {
        if (revenue > best) best = revenue;
        for (std::size_t i = 0; i < inst.requests.size(); ++i) {
          if (used[i]) continue;
          const Request& r = inst.requests[i];
          std::size_t s = g.index_of(r.s);
          std::size_t d = g.index_of(r.d);
          Rational begin = now;
          if (pos != s) {
            if (!g.has_edge(pos, s)) continue;
            begin += g.weight(pos, s);
          }
          if (begin < r.t) begin = r.t;
          Rational end = begin + g.weight(s, d);
          if (end > horizon) continue;
          used[i] = true;
          recurse(d, end, revenue + r.p);
          used[i] = false;
        }
      };
  recurse(g.index_of(inst.origin), Rational(0), Rational(0));
  return best;
}

/// Step simulator: tracks position and time, accepting exactly the schedules
/// the model allows (late starts are waiting in place).
inline bool replay_feasible(const Instance& inst, const Schedule& sched) {
  const MetricGraph& g = inst.graph;
  auto origin = g.find(inst.origin);
  if (!origin) return false;
  std::size_t pos = *origin;
  Rational clock(0);
  std::vector<bool> done(inst.requests.size(), false);
  for (const Action& a : sched.actions) {
    if (a.start < clock) return false;
    Rational end = a.start;
    if (a.kind == Action::Kind::kMove) {
      auto u = g.find(a.from), v = g.find(a.to);
      if (!u || !v || *u == *v || *u != pos || !g.has_edge(*u, *v)) return false;
      end += g.weight(*u, *v);
      pos = *v;
    } else if (a.kind == Action::Kind::kServe) {
      if (a.request >= inst.requests.size()) return false;
      const Request& r = inst.requests[a.request];
      auto s = g.find(r.s), d = g.find(r.d);
      if (!s || !d || *s != pos || !g.has_edge(*s, *d)) return false;
      if (a.start < r.t || done[a.request]) return false;
      done[a.request] = true;
      end += g.weight(*s, *d);
      pos = *d;
    } else {
      if (a.duration.sign() < 0) return false;
      end += a.duration;
    }
    if (end > inst.T) return false;
    clock = end;
  }
  return true;
}

/// Complete-graph instance builder: every pair gets `fill`, then overrides.
inline Instance make_complete_instance(
    std::vector<std::string> vertices, const std::string& origin, const Rational& T, int f,
    const Rational& fill,
    const std::vector<std::tuple<std::string, std::string, Rational>>& overrides,
    std::vector<Request> requests) {
  std::vector<RawEdge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      Rational w = fill;
      for (const auto& [u, v, value] : overrides) {
        if ((u == vertices[i] && v == vertices[j]) || (u == vertices[j] && v == vertices[i])) {
          w = value;
        }
      }
      edges.push_back({vertices[i], vertices[j], w});
    }
  }
  Instance inst;
  inst.graph = MetricGraph::build(vertices, edges, std::nullopt, true);
  inst.origin = origin;
  inst.T = T;
  inst.f = f;
  inst.requests = std::move(requests);
  roldarp::canonicalize_requests(inst);
  return inst;
}

}  // namespace testsupport
