#include "roldarp/oracle.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace roldarp {

namespace {

struct StateKey {
  std::uint64_t mask;
  std::uint32_t pos;
  bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const {
    std::uint64_t h = (k.mask + k.pos + 1) * 0x9e3779b97f4a7c15ull;
    h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ull;
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

struct Search {
  const Instance& inst;
  const MetricGraph& g;
  Rational horizon;
  std::vector<std::size_t> src, dst;
  std::vector<Rational> serve_time;
  std::vector<std::size_t> sequence;
  std::vector<std::size_t> best_sequence;
  Rational best_revenue{0};
  std::uint64_t served_mask = 0;
  // Earliest known arrival per (served set, position). The served set fixes
  // the accumulated revenue, so a revisit no earlier than the recorded time
  // cannot improve on the first exploration and is cut.
  std::unordered_map<StateKey, Rational, StateKeyHash> seen;

  explicit Search(const Instance& inst_in, Rational horizon_in)
      : inst(inst_in), g(inst_in.graph), horizon(std::move(horizon_in)) {
    for (const Request& r : inst.requests) {
      std::size_t si = g.index_of(r.s);
      std::size_t di = g.index_of(r.d);
      src.push_back(si);
      dst.push_back(di);
      serve_time.push_back(g.weight(si, di));
    }
  }

  void run(std::size_t pos, const Rational& now, const Rational& revenue) {
    if (revenue > best_revenue) {
      best_revenue = revenue;
      best_sequence = sequence;
    }
    StateKey key{served_mask, static_cast<std::uint32_t>(pos)};
    auto [it, inserted] = seen.try_emplace(key, now);
    if (!inserted) {
      if (!(now < it->second)) return;
      it->second = now;
    }
    Rational bound = revenue;
    for (std::size_t i = 0; i < inst.requests.size(); ++i) {
      if (!(served_mask & (1ull << i))) bound += inst.requests[i].p;
    }
    if (!(bound > best_revenue)) return;

    for (std::size_t i = 0; i < inst.requests.size(); ++i) {
      if (served_mask & (1ull << i)) continue;
      const Request& r = inst.requests[i];
      Rational begin = now;
      if (pos != src[i]) {
        if (!g.has_edge(pos, src[i])) continue;
        begin += g.weight(pos, src[i]);
      }
      if (begin < r.t) begin = r.t;
      Rational end = begin + serve_time[i];
      if (end > horizon) continue;
      served_mask |= 1ull << i;
      sequence.push_back(i);
      run(dst[i], end, revenue + r.p);
      sequence.pop_back();
      served_mask &= ~(1ull << i);
    }
  }
};

}  // namespace

OracleResult optimal_offline(const Instance& inst, const OracleOptions& options) {
  ValidationReport report = validate_instance(inst);
  if (!report.valid()) {
    throw Error(ErrorCode::kInvalidInstance, report.violations.front().message);
  }
  if (inst.requests.size() > options.max_requests || inst.requests.size() > 63) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(inst.requests.size()) + " requests exceed the search guard of " +
                    std::to_string(options.max_requests));
  }
  Rational horizon = options.horizon.value_or(inst.T);
  if (horizon > inst.T) horizon = inst.T;

  Search search(inst, horizon);
  search.run(inst.graph.index_of(inst.origin), Rational(0), Rational(0));

  OracleResult result;
  result.revenue = search.best_revenue;
  std::size_t pos = inst.graph.index_of(inst.origin);
  Rational now(0);
  for (std::size_t i : search.best_sequence) {
    const Request& r = inst.requests[i];
    if (pos != search.src[i]) {
      result.schedule.actions.push_back(
          make_move(inst.graph.vertices()[pos], r.s, now));
      now += inst.graph.weight(pos, search.src[i]);
    }
    if (now < r.t) {
      result.schedule.actions.push_back(make_idle(now, r.t - now));
      now = r.t;
    }
    result.schedule.actions.push_back(make_serve(i, now));
    now += search.serve_time[i];
    pos = search.dst[i];
  }
  return result;
}

}  // namespace roldarp
