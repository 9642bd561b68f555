#include "roldarp/random_instances.hpp"

namespace roldarp {

namespace {

std::string vertex_name(int i) {
  std::string digits = std::to_string(i);
  if (digits.size() < 2) digits.insert(digits.begin(), '0');
  return "v" + digits;
}

}  // namespace

Instance gen_random(const RandomSpec& spec) {
  if (spec.vertices < 2 || spec.vertices > 99) {
    throw Error(ErrorCode::kBadParams, "vertices must lie in [2, 99]");
  }
  if (spec.requests < 0) throw Error(ErrorCode::kBadParams, "negative request count");
  if (spec.f < 2 || spec.T <= spec.f) throw Error(ErrorCode::kBadParams, "need 1 < f < T");
  if (spec.T % spec.f != 0) {
    throw Error(ErrorCode::kBadParams, "T must be a multiple of f");
  }
  const long long seg = spec.T / spec.f;

  SplitMix64 rng(spec.seed);
  std::vector<std::string> vertices;
  for (int i = 0; i < spec.vertices; ++i) vertices.push_back(vertex_name(i));

  Instance inst;
  inst.T = Rational(spec.T);
  inst.f = spec.f;

  if (!spec.bipartite) {
    std::vector<RawEdge> edges;
    for (int i = 0; i < spec.vertices; ++i) {
      for (int j = i + 1; j < spec.vertices; ++j) {
        long long w = 1 + static_cast<long long>(rng.bounded(static_cast<std::uint64_t>(seg)));
        edges.push_back({vertices[i], vertices[j], Rational(w)});
      }
    }
    inst.graph = metric_closure(MetricGraph::build(vertices, edges));
    inst.origin = vertices[rng.bounded(vertices.size())];
    for (int r = 0; r < spec.requests; ++r) {
      std::size_t s = rng.bounded(vertices.size());
      std::size_t d = rng.bounded(vertices.size() - 1);
      if (d >= s) ++d;
      Rational t(static_cast<long long>(rng.bounded(static_cast<std::uint64_t>(spec.T + 1))));
      Rational p = spec.uniform ? Rational(1)
                                : Rational(1 + static_cast<long long>(rng.bounded(10)));
      inst.requests.push_back({vertices[s], vertices[d], std::move(t), std::move(p)});
    }
  } else {
    if (!(spec.k.sign() > 0) || spec.k > Rational(1)) {
      throw Error(ErrorCode::kBadParams, "k must lie in (0, 1]");
    }
    const long long lo = (spec.k * Rational(seg)).ceil().to_int64();
    const long long hi = seg;
    if (lo < 1 || lo > hi) {
      throw Error(ErrorCode::kBadParams, "no integer weights in [k*T/f, T/f]");
    }
    const int n1 = (spec.vertices + 1) / 2;
    Bipartition bip;
    for (int i = 0; i < spec.vertices; ++i) {
      (i < n1 ? bip.v1 : bip.v2).push_back(vertices[i]);
    }
    std::vector<RawEdge> edges;
    for (const std::string& u : bip.v1) {
      for (const std::string& v : bip.v2) {
        long long w = lo + static_cast<long long>(rng.bounded(static_cast<std::uint64_t>(hi - lo + 1)));
        edges.push_back({u, v, Rational(w)});
      }
    }
    inst.graph = MetricGraph::build(vertices, edges, bip);
    inst.origin = bip.v2[rng.bounded(bip.v2.size())];
    inst.min_edge_factor = spec.k;
    for (int r = 0; r < spec.requests; ++r) {
      const std::string& s = bip.v1[rng.bounded(bip.v1.size())];
      const std::string& d = bip.v2[rng.bounded(bip.v2.size())];
      Rational t(static_cast<long long>(rng.bounded(static_cast<std::uint64_t>(spec.T + 1))));
      Rational p = spec.uniform ? Rational(1)
                                : Rational(1 + static_cast<long long>(rng.bounded(10)));
      inst.requests.push_back({s, d, std::move(t), std::move(p)});
    }
  }
  canonicalize_requests(inst);
  return inst;
}

}  // namespace roldarp
