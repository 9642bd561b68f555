#include "roldarp/adversary.hpp"

#include <algorithm>
#include <functional>

namespace roldarp {

namespace {

std::string pad2(const std::string& prefix, long long i) {
  std::string digits = std::to_string(i);
  if (digits.size() < 2) digits.insert(digits.begin(), '0');
  return prefix + digits;
}

std::size_t canonical_request_index(const Instance& inst, const Request& r) {
  auto it = std::lower_bound(inst.requests.begin(), inst.requests.end(), r, request_less);
  if (it == inst.requests.end() || it->s != r.s || it->d != r.d || it->t != r.t || it->p != r.p) {
    throw Error(ErrorCode::kBadArgument, "request not found: " + r.s + "->" + r.d);
  }
  return static_cast<std::size_t>(it - inst.requests.begin());
}

}  // namespace

Fig1Output gen_fig1(const Fig1Params& params) {
  const int f = params.f;
  const Rational& h = params.h;
  const Rational& B = params.B;
  const Rational& eps = params.eps;
  if (f <= 2 || f % 2 != 0 || f > 60) {
    throw Error(ErrorCode::kBadParams, "f must be an even integer in (2, 60]");
  }
  if (!(h > Rational(1))) throw Error(ErrorCode::kBadParams, "h must exceed 1");
  if (!(B.sign() > 0)) throw Error(ErrorCode::kBadParams, "B must be positive");
  if (!(eps.sign() > 0) || !(eps < Rational(1))) {
    throw Error(ErrorCode::kBadParams, "eps must lie in (0, 1)");
  }
  const Rational T = Rational(2) * h * Rational(f);
  const Rational m_bound =
      (Rational(3) * h * Rational(f) - Rational(4) * h - Rational(f) + Rational(2)) /
      (Rational(2) * (h + Rational(1)));
  const long long m = m_bound.floor().to_int64();
  if (m < 1) throw Error(ErrorCode::kBadParams, "parameters give m < 1");

  std::vector<std::string> vertices{"o"};
  for (int i = 1; i <= f; ++i) vertices.push_back(pad2("u", i));
  for (long long i = 1; i <= m; ++i) vertices.push_back(pad2("v", i));

  // Every pair defaults to h; the named distances override it.
  std::vector<RawEdge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      edges.push_back({vertices[i], vertices[j], h});
    }
  }
  auto override_edge = [&edges](const std::string& u, const std::string& v, const Rational& w) {
    for (RawEdge& e : edges) {
      if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) {
        e.w = w;
        return;
      }
    }
  };
  override_edge("o", pad2("u", 1), Rational(1));
  for (int i = 1; i < f; i += 2) override_edge(pad2("u", i), pad2("u", i + 1), Rational(1));
  override_edge("o", pad2("v", 1), Rational(1));
  for (long long i = 1; i < m; ++i) {
    override_edge(pad2("v", i), pad2("v", i + 1), h + Rational(1));
  }
  override_edge(pad2("v", m), pad2("u", 2), h + Rational(1));

  Fig1Output out;
  out.m = m;
  out.instance.graph = MetricGraph::build(vertices, edges, std::nullopt, /*pre_closed=*/true);
  out.instance.origin = "o";
  out.instance.T = T;
  out.instance.f = f;

  const Rational four_h = Rational(4) * h;
  out.instance.requests.push_back({pad2("u", 1), pad2("u", 2), Rational(0), eps});
  for (int i = 1; i <= f / 2 - 1; ++i) {
    Rational ih = Rational(i) * four_h;
    out.instance.requests.push_back({pad2("u", 2 * i + 1), pad2("u", 2 * i + 2), ih, B + eps});
    out.instance.requests.push_back({pad2("u", 2 * i), pad2("u", 2 * i + 1), ih + Rational(1), B});
  }
  for (long long i = 1; i < m; ++i) {
    out.instance.requests.push_back({pad2("v", i), pad2("v", i + 1), Rational(1), B});
  }
  out.instance.requests.push_back({pad2("v", m), pad2("u", 2), Rational(1), B});
  canonicalize_requests(out.instance);

  // Arrival times of the witness at u_{2k}; Lemma: tau_k >= 4kh + 1, i.e. the
  // top-row requests at u_{2k} are already released when the witness arrives.
  for (int k = 1; k <= f / 2 - 2; ++k) {
    Rational tau = Rational(1) + Rational(m) * (h + Rational(1)) +
                   (Rational(1) + h) * Rational(k - 1);
    if (tau < Rational(4 * k) * h + Rational(1)) {
      throw Error(ErrorCode::kBadParams, "witness arrives before release at u_" +
                                             std::to_string(2 * k));
    }
    out.tau.push_back(std::move(tau));
  }

  // Witness: o, v_1, ..., v_m, u_2, ..., u_{f-2}.
  Schedule& w = out.witness;
  Rational now(0);
  auto serve = [&](const std::string& s, const std::string& d) {
    Request probe;
    probe.s = s;
    probe.d = d;
    for (const Request& r : out.instance.requests) {
      if (r.s == s && r.d == d) {
        probe = r;
        break;
      }
    }
    std::size_t idx = canonical_request_index(out.instance, probe);
    if (now < probe.t) {
      w.actions.push_back(make_idle(now, probe.t - now));
      now = probe.t;
    }
    w.actions.push_back(make_serve(idx, now));
    now += out.instance.graph.weight(out.instance.graph.index_of(s),
                                     out.instance.graph.index_of(d));
  };
  w.actions.push_back(make_move("o", pad2("v", 1), now));
  now += Rational(1);
  for (long long i = 1; i < m; ++i) serve(pad2("v", i), pad2("v", i + 1));
  serve(pad2("v", m), pad2("u", 2));
  for (int k = 1; k <= f / 2 - 2; ++k) {
    serve(pad2("u", 2 * k), pad2("u", 2 * k + 1));
    serve(pad2("u", 2 * k + 1), pad2("u", 2 * k + 2));
  }

  out.witness_revenue = Rational(m) * B + (Rational(2) * B + eps) * Rational(f - 4) / Rational(2);
  ScheduleVerdict verdict = validate_schedule(out.instance, out.witness);
  if (!verdict.feasible || verdict.revenue != out.witness_revenue) {
    throw Error(ErrorCode::kBadParams, "witness construction failed: " + verdict.message);
  }
  return out;
}

namespace {

struct CommittedAction {
  Rational time;
  Action action;
};

/// Vertices, edge overrides, and requests revealed together at one instant.
struct Addition {
  Rational at;
  std::vector<std::string> vertices;
  Rational default_weight;
  std::vector<std::tuple<std::string, std::string, Rational>> weights;
  std::vector<Request> requests;
};

struct RunOutcome {
  Instance instance;
  Schedule schedule;  // canonical request indices
  std::vector<CommittedAction> log;  // simulation-order request ids
};

RunOutcome run_with_additions(OnlinePolicy& policy, const MetricGraph& base,
                              const std::string& origin, const Rational& T, int f,
                              const std::vector<Addition>& additions, bool mark_pre_closed) {
  Simulation sim(base, origin, T, f);
  for (const Addition& add : additions) {
    sim.schedule_callback(add.at, [&add](Simulation& s) {
      for (const std::string& name : add.vertices) s.graph().add_vertex(name, add.default_weight);
      for (const auto& [u, v, w] : add.weights) s.graph().set_weight(u, v, w);
      for (const Request& r : add.requests) s.add_request(r);
    });
  }
  RunOutcome out;
  sim.set_commit_observer([&out](Simulation& s, const Action& a) {
    out.log.push_back({s.now(), a});
  });
  policy.restart();
  Schedule raw = sim.run(policy);
  out.instance = sim.finalize_instance();
  out.instance.graph.set_pre_closed(mark_pre_closed);
  out.schedule = Simulation::remap_requests(raw, sim.canonical_index_map());
  return out;
}

void finish_transcript(AdversaryTranscript& t, const Rational& horizon) {
  t.policy_revenue = schedule_revenue(t.instance, t.policy_schedule);
  OracleOptions opts;
  opts.horizon = horizon;
  OracleResult opt = optimal_offline(t.instance, opts);
  t.opt_schedule = std::move(opt.schedule);
  t.opt_revenue = std::move(opt.revenue);
  t.opt_horizon = horizon;
  if (!t.policy_revenue.is_zero()) t.ratio = t.opt_revenue / t.policy_revenue;
}

}  // namespace

AdversaryTranscript adaptive_last_window(OnlinePolicy& policy, const LastWindowParams& params) {
  if (params.f < 2 || !(Rational(params.f) < params.T)) {
    throw Error(ErrorCode::kBadParams, "need 2 <= f < T");
  }
  if (params.k < 1) throw Error(ErrorCode::kBadParams, "k must be at least 1");
  const Rational seg = params.T / Rational(params.f);
  const Rational tau = params.T - seg - seg;
  const Rational delta = params.delta.value_or(seg / Rational(2));
  if (!(delta.sign() > 0) || !(delta < seg)) {
    throw Error(ErrorCode::kBadParams, "delta must lie in (0, T/f)");
  }

  MetricGraph base = MetricGraph::build({"o"}, {}, std::nullopt, true);
  Simulation sim(std::move(base), "o", params.T, params.f);

  bool bait_released = false;
  bool committed = false;
  sim.schedule_callback(tau, [&bait_released, &tau, &seg](Simulation& s) {
    // The bait sits one full move from everything, the policy included.
    s.graph().add_vertex("xs", seg);
    s.graph().add_vertex("xd", seg);
    s.add_request({"xs", "xd", tau, Rational(1)});
    bait_released = true;
  });
  sim.set_commit_observer([&](Simulation& s, const Action& act) {
    if (committed || !bait_released) return;
    if (!(s.now() == tau)) return;
    if (act.kind != Action::Kind::kMove || act.to != "xs") return;
    committed = true;
    if (!params.uniform) {
      s.graph().add_vertex("ya", seg);
      s.graph().add_vertex("yb", seg);
      s.add_request({"ya", "yb", tau + delta, Rational(params.k)});
    } else {
      const Rational len = (seg + seg - delta) / Rational(2 * params.k);
      std::vector<std::string> chain;
      for (long long i = 0; i <= params.k; ++i) {
        chain.push_back(pad2("y", i));
        s.graph().add_vertex(chain.back(), seg);
      }
      for (std::size_t i = 0; i < chain.size(); ++i) {
        for (std::size_t j = i + 1; j < chain.size(); ++j) {
          s.graph().set_weight(chain[i], chain[j], Rational(static_cast<long long>(j - i)) * len);
        }
      }
      for (long long i = 1; i <= params.k; ++i) {
        s.add_request({pad2("y", i - 1), pad2("y", i), tau + delta, Rational(1)});
      }
    }
  });

  policy.restart();
  Schedule raw = sim.run(policy);

  AdversaryTranscript t;
  t.adversary = "last-window";
  t.uniform = params.uniform;
  t.fired_case = committed ? "commit" : "decline";
  t.instance = sim.finalize_instance();
  t.instance.graph.set_pre_closed(true);
  t.policy_schedule = Simulation::remap_requests(raw, sim.canonical_index_map());
  finish_transcript(t, params.T);
  return t;
}

namespace {

struct FirstHorizonBuilder {
  const FirstHorizonParams& params;
  Rational X;
  Rational T;
  Rational delta;  // uniform only
  std::vector<Addition> additions;

  explicit FirstHorizonBuilder(const FirstHorizonParams& p) : params(p), X(p.X), T(p.X * Rational(5)) {}

  Rational rev1() const { return params.uniform ? Rational(1) : params.eps; }

  Addition opening() const {
    Addition a;
    a.at = X;
    a.default_weight = X;
    if (params.uniform) {
      a.vertices = {"a1", "a2", "b1", "b2"};
      a.requests = {{"a1", "a2", X, Rational(1)}, {"b1", "b2", X, Rational(1)}};
    } else {
      a.vertices = {"a1", "b1", "a2", "b2"};
      a.requests = {{"a1", "b1", X, params.eps}, {"a2", "b2", X, params.eps}};
    }
    return a;
  }

  std::vector<std::string> opening_sources() const {
    return params.uniform ? std::vector<std::string>{"a1", "b1"}
                          : std::vector<std::string>{"a1", "a2"};
  }
};

std::optional<CommittedAction> first_move_to(const std::vector<CommittedAction>& log,
                                             const std::vector<std::string>& targets) {
  for (const CommittedAction& c : log) {
    if (c.action.kind != Action::Kind::kMove) continue;
    if (std::find(targets.begin(), targets.end(), c.action.to) != targets.end()) return c;
  }
  return std::nullopt;
}

}  // namespace

AdversaryTranscript adaptive_first_horizon(OnlinePolicy& policy, const FirstHorizonParams& params) {
  const Rational& X = params.X;
  if (params.uniform) {
    if (params.k < 1) throw Error(ErrorCode::kBadParams, "k must be at least 1");
    if (!(X.sign() > 0)) throw Error(ErrorCode::kBadParams, "X must be positive");
  } else {
    if (X < Rational(3)) throw Error(ErrorCode::kBadParams, "X must be at least 3");
    if (!(params.eps.sign() > 0) || !(params.eps < Rational(1))) {
      throw Error(ErrorCode::kBadParams, "eps must lie in (0, 1)");
    }
  }
  FirstHorizonBuilder b(params);
  const Rational T = b.T;
  const int f = 5;
  const Rational horizon = X * Rational(3);
  if (params.uniform) {
    b.delta = params.delta.value_or(X / Rational(4 * params.k));
    if (!(b.delta.sign() > 0) || !(b.delta * Rational(2 * params.k) < X)) {
      throw Error(ErrorCode::kBadParams, "delta must lie in (0, X/(2k))");
    }
  }

  MetricGraph base = MetricGraph::build({"a0"}, {}, std::nullopt, true);
  const Addition opening = b.opening();

  // The opponent is deterministic, so its reaction to any fixed request
  // prefix can be observed in advance; each round of observation decides the
  // next reveal. The definitive run then replays the policy against the
  // finalized release plan.
  auto presimulate = [&](const std::vector<Addition>& additions) {
    return run_with_additions(policy, base, "a0", T, f, additions, true);
  };

  RunOutcome probe1 = presimulate({opening});
  auto depart = first_move_to(probe1.log, b.opening_sources());

  std::string fired;
  std::vector<Addition> additions{opening};

  if (!depart) {
    fired = "1";
  } else if (depart->time > X) {
    // Which opening request the policy went for decides the side the chase
    // continues on; the fresh vertices extend the other request's path.
    const bool toward_first = depart->action.to == b.opening_sources().front();
    Addition chase;
    chase.default_weight = X;
    if (!params.uniform) {
      const std::string bo = toward_first ? "b2" : "b1";
      const std::string co = toward_first ? "c2" : "c1";
      const std::string dono = toward_first ? "d2" : "d1";
      if (depart->time < X + X) {
        fired = "2a";
        chase.at = X + X;
        chase.vertices = {co};
        chase.requests = {{bo, co, X + X, params.eps}};
      } else {
        fired = depart->time == X + X ? "2b" : "2c";
        chase.at = X + X + Rational(1);
        chase.vertices = {co, dono};
        chase.weights = {{bo, co, Rational(1)}, {co, dono, X - Rational(1)}};
        chase.requests = {{co, dono, X + X + Rational(1), params.eps}};
      }
    } else {
      const std::string prefix = toward_first ? "b" : "a";
      const std::string o2 = prefix + "2";
      const std::string o3 = prefix + "3";
      const std::string o4 = prefix + "4";
      if (depart->time < X + X) {
        fired = "2a";
        chase.at = X + X;
        chase.vertices = {o3};
        chase.requests = {{o2, o3, X + X, Rational(1)}};
      } else {
        fired = depart->time == X + X ? "2b" : "2c";
        chase.at = X + X + b.delta;
        chase.vertices = {o3, o4};
        chase.weights = {{o2, o3, b.delta}, {o3, o4, X - b.delta}};
        chase.requests = {{o3, o4, X + X + b.delta, Rational(1)}};
      }
    }
    additions.push_back(std::move(chase));
  } else {
    // Case 3: the policy departs exactly at the release instant.
    if (!params.uniform) {
      Addition pair;
      pair.at = X + Rational(1);
      pair.default_weight = X;
      pair.vertices = {"a3", "b3", "a4", "b4"};
      pair.requests = {{"a3", "b3", X + Rational(1), Rational(1)},
                       {"a4", "b4", X + Rational(1), Rational(1)}};
      RunOutcome probe2 = presimulate({opening, pair});

      std::optional<Rational> serve_time;
      for (const CommittedAction& c : probe2.log) {
        if (c.action.kind == Action::Kind::kServe && c.action.request < 2) {
          serve_time = c.time;
          break;
        }
      }
      std::optional<CommittedAction> later_move;
      const Rational watermark = serve_time ? *serve_time : depart->time;
      for (const CommittedAction& c : probe2.log) {
        if (c.action.kind == Action::Kind::kMove && c.time > watermark) {
          later_move = c;
          break;
        }
      }
      // The straggler lands on the family the policy is not heading for.
      int family = 4;
      if (later_move &&
          (later_move->action.to == "a4" || later_move->action.to == "b4")) {
        family = 3;
      }
      if (serve_time) {
        fired = "3a";
      } else if (later_move && later_move->time < X * Rational(3) - Rational(1)) {
        fired = "3b-i";
      } else {
        fired = "3b-ii";
        family = 4;
      }
      const std::string bs = family == 4 ? "b4" : "b3";
      const std::string cs = family == 4 ? "c4" : "c3";
      const std::string ds = family == 4 ? "d4" : "d3";
      Addition last;
      last.at = X * Rational(3) - Rational(1);
      last.default_weight = X;
      last.vertices = {cs, ds};
      last.weights = {{bs, cs, X - Rational(2)}, {cs, ds, Rational(1)}};
      last.requests = {{cs, ds, last.at, Rational(1)}};
      additions.push_back(std::move(pair));
      additions.push_back(std::move(last));
    } else {
      const Rational unit = X / Rational(params.k);
      Addition chains;
      chains.at = X + b.delta;
      chains.default_weight = X;
      for (long long i = 0; i <= params.k; ++i) chains.vertices.push_back(pad2("c", i));
      for (long long i = 0; i <= params.k; ++i) chains.vertices.push_back(pad2("d", i));
      for (long long i = 0; i <= params.k; ++i) {
        for (long long j = i + 1; j <= params.k; ++j) {
          chains.weights.push_back({pad2("c", i), pad2("c", j), Rational(j - i) * unit});
          chains.weights.push_back({pad2("d", i), pad2("d", j), Rational(j - i) * unit});
        }
      }
      for (long long i = 1; i <= params.k; ++i) {
        chains.requests.push_back({pad2("c", i - 1), pad2("c", i), chains.at, Rational(1)});
      }
      for (long long i = 1; i <= params.k; ++i) {
        chains.requests.push_back({pad2("d", i - 1), pad2("d", i), chains.at, Rational(1)});
      }
      RunOutcome probe2 = presimulate({opening, chains});

      std::optional<Rational> serve_time;
      for (const CommittedAction& c : probe2.log) {
        if (c.action.kind == Action::Kind::kServe && c.action.request < 2) {
          serve_time = c.time;
          break;
        }
      }
      std::optional<CommittedAction> later_move;
      const Rational watermark = serve_time ? *serve_time : depart->time;
      for (const CommittedAction& c : probe2.log) {
        if (c.action.kind == Action::Kind::kMove && c.time > watermark) {
          later_move = c;
          break;
        }
      }
      Rational w = b.delta;
      if (serve_time) {
        fired = "3a";
      } else if (later_move && later_move->time < X * Rational(3) - b.delta) {
        fired = "3b-i";
        w = X * Rational(3) - later_move->time - b.delta;
      } else {
        fired = "3b-ii";
      }
      // Attach the closing chain opposite the family the policy heads for.
      std::string attach = "d";
      if (later_move && !later_move->action.to.empty() && later_move->action.to[0] == 'd') {
        attach = "c";
      }
      const Rational conn = X - b.delta - w;
      const Rational step = w / Rational(params.k);
      Addition closing;
      closing.at = X * Rational(3) - w;
      closing.default_weight = X;
      std::vector<std::string> chain;
      chain.push_back(conn.is_zero() ? pad2(attach, params.k) : std::string("e00"));
      if (!conn.is_zero()) closing.vertices.push_back(chain.front());
      for (long long i = 1; i <= params.k; ++i) {
        chain.push_back(pad2("e", i));
        closing.vertices.push_back(chain.back());
      }
      if (!conn.is_zero()) {
        closing.weights.push_back({pad2(attach, params.k), chain.front(), conn});
      }
      for (std::size_t i = 0; i < chain.size(); ++i) {
        for (std::size_t j = i + 1; j < chain.size(); ++j) {
          closing.weights.push_back(
              {chain[i], chain[j], Rational(static_cast<long long>(j - i)) * step});
        }
      }
      for (long long i = 1; i <= params.k; ++i) {
        closing.requests.push_back({chain[i - 1], chain[i], closing.at, Rational(1)});
      }
      additions.push_back(std::move(chains));
      additions.push_back(std::move(closing));
    }
  }

  RunOutcome final_run = run_with_additions(policy, base, "a0", T, f, additions, true);

  AdversaryTranscript t;
  t.adversary = "first-horizon";
  t.uniform = params.uniform;
  t.fired_case = fired;
  t.instance = std::move(final_run.instance);
  t.policy_schedule = std::move(final_run.schedule);
  finish_transcript(t, horizon);
  return t;
}

}  // namespace roldarp
