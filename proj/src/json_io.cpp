#include "roldarp/json_io.hpp"

#include <filesystem>
#include <fstream>

namespace roldarp {

Json rational_to_json(const Rational& value) {
  Json j;
  j["num"] = value.num().to_string();
  j["den"] = value.den().to_string();
  return j;
}

Rational rational_from_json(const Json& j) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational::from_string(j.get<std::string>());
    auto field = [&j](const char* name) {
      const Json& v = j.at(name);
      if (v.is_string()) return BigInt::from_string(v.get<std::string>());
      return BigInt(v.get<long long>());
    };
    return Rational(field("num"), field("den"));
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("bad rational: ") + e.what());
  }
}

Json instance_to_json(const Instance& inst) {
  Json j;
  j["vertices"] = inst.graph.vertices();
  j["origin"] = inst.origin;
  Json edges = Json::array();
  for (const RawEdge& e : inst.graph.edge_list()) {
    Json edge;
    edge["u"] = e.u;
    edge["v"] = e.v;
    edge["w"] = rational_to_json(e.w);
    edges.push_back(std::move(edge));
  }
  j["edges"] = std::move(edges);
  j["T"] = rational_to_json(inst.T);
  j["f"] = inst.f;
  if (inst.min_edge_factor) j["k"] = rational_to_json(*inst.min_edge_factor);
  if (inst.graph.bipartite()) {
    Json bip;
    Json v1 = Json::array(), v2 = Json::array();
    for (std::size_t i = 0; i < inst.graph.size(); ++i) {
      if (inst.graph.side(i) == 1) v1.push_back(inst.graph.vertices()[i]);
      if (inst.graph.side(i) == 2) v2.push_back(inst.graph.vertices()[i]);
    }
    bip["V1"] = std::move(v1);
    bip["V2"] = std::move(v2);
    j["bipartition"] = std::move(bip);
  }
  Json requests = Json::array();
  for (const Request& r : inst.requests) {
    Json req;
    req["s"] = r.s;
    req["d"] = r.d;
    req["t"] = rational_to_json(r.t);
    req["p"] = rational_to_json(r.p);
    requests.push_back(std::move(req));
  }
  j["requests"] = std::move(requests);
  if (inst.graph.pre_closed()) j["pre_closed"] = true;
  return j;
}

Instance instance_from_json(const Json& j) {
  try {
    std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
    std::vector<RawEdge> edges;
    for (const Json& e : j.at("edges")) {
      edges.push_back({e.at("u").get<std::string>(), e.at("v").get<std::string>(),
                       rational_from_json(e.at("w"))});
    }
    std::optional<Bipartition> bip;
    if (j.contains("bipartition")) {
      Bipartition b;
      b.v1 = j.at("bipartition").at("V1").get<std::vector<std::string>>();
      b.v2 = j.at("bipartition").at("V2").get<std::vector<std::string>>();
      bip = std::move(b);
    }
    Instance inst;
    inst.graph = MetricGraph::build(std::move(vertices), edges, bip,
                                    j.value("pre_closed", false));
    inst.origin = j.at("origin").get<std::string>();
    inst.T = rational_from_json(j.at("T"));
    inst.f = j.at("f").get<int>();
    if (j.contains("k")) inst.min_edge_factor = rational_from_json(j.at("k"));
    for (const Json& r : j.at("requests")) {
      inst.requests.push_back({r.at("s").get<std::string>(), r.at("d").get<std::string>(),
                               rational_from_json(r.at("t")), rational_from_json(r.at("p"))});
    }
    canonicalize_requests(inst);
    return inst;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("bad instance: ") + e.what());
  }
}

Json schedule_to_json(const Schedule& sched) {
  Json actions = Json::array();
  for (const Action& a : sched.actions) {
    Json j;
    switch (a.kind) {
      case Action::Kind::kMove:
        j["type"] = "move";
        j["u"] = a.from;
        j["v"] = a.to;
        j["start"] = rational_to_json(a.start);
        break;
      case Action::Kind::kServe:
        j["type"] = "serve";
        j["request"] = a.request;
        j["start"] = rational_to_json(a.start);
        break;
      case Action::Kind::kIdle:
        j["type"] = "idle";
        j["start"] = rational_to_json(a.start);
        j["duration"] = rational_to_json(a.duration);
        break;
    }
    actions.push_back(std::move(j));
  }
  return actions;
}

Schedule schedule_from_json(const Json& j) {
  try {
    Schedule sched;
    for (const Json& a : j) {
      const std::string type = a.at("type").get<std::string>();
      if (type == "move") {
        sched.actions.push_back(make_move(a.at("u").get<std::string>(),
                                          a.at("v").get<std::string>(),
                                          rational_from_json(a.at("start"))));
      } else if (type == "serve") {
        sched.actions.push_back(make_serve(a.at("request").get<std::size_t>(),
                                           rational_from_json(a.at("start"))));
      } else if (type == "idle") {
        sched.actions.push_back(make_idle(rational_from_json(a.at("start")),
                                          rational_from_json(a.at("duration"))));
      } else {
        throw Error(ErrorCode::kParseError, "unknown action type " + type);
      }
    }
    return sched;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("bad schedule: ") + e.what());
  }
}

Json transcript_to_json(const AdversaryTranscript& t) {
  Json j;
  j["adversary"] = t.adversary;
  j["uniform"] = t.uniform;
  j["case"] = t.fired_case;
  j["opt_horizon"] = rational_to_json(t.opt_horizon);
  j["policy_revenue"] = rational_to_json(t.policy_revenue);
  j["opt_revenue"] = rational_to_json(t.opt_revenue);
  j["ratio"] = t.ratio ? rational_to_json(*t.ratio) : Json(nullptr);
  j["instance"] = instance_to_json(t.instance);
  j["policy_schedule"] = schedule_to_json(t.policy_schedule);
  j["opt_schedule"] = schedule_to_json(t.opt_schedule);
  return j;
}

Json bound_report_to_json(const BoundReport& report) {
  Json j;
  j["bound"] = to_string(report.bound);
  j["instance"] = report.instance_id;
  j["lhs"] = rational_to_json(report.lhs);
  j["rhs"] = rational_to_json(report.rhs);
  j["slack"] = rational_to_json(report.slack);
  j["holds"] = report.holds;
  Json terms;
  for (const auto& [name, value] : report.terms) terms[name] = rational_to_json(value);
  j["terms"] = std::move(terms);
  return j;
}

BoundReport bound_report_from_json(const Json& j) {
  try {
    BoundReport report;
    auto bound = bound_from_string(j.at("bound").get<std::string>());
    if (!bound) throw Error(ErrorCode::kParseError, "unknown bound id");
    report.bound = *bound;
    report.instance_id = j.value("instance", "");
    report.lhs = rational_from_json(j.at("lhs"));
    report.rhs = rational_from_json(j.at("rhs"));
    report.slack = rational_from_json(j.at("slack"));
    report.holds = j.at("holds").get<bool>();
    if (j.contains("terms")) {
      for (const auto& [name, value] : j.at("terms").items()) {
        report.terms.emplace_back(name, rational_from_json(value));
      }
    }
    return report;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("bad bound report: ") + e.what());
  }
}

std::string bound_report_csv_header() { return "bound,instance,lhs,rhs,slack,holds"; }

std::string bound_report_csv_row(const BoundReport& report) {
  std::string row = to_string(report.bound);
  row += ',';
  row += report.instance_id;
  row += ',';
  row += report.lhs.to_string();
  row += ',';
  row += report.rhs.to_string();
  row += ',';
  row += report.slack.to_string();
  row += ',';
  row += report.holds ? "true" : "false";
  return row;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return text;
}

Json parse_json_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::kParseError, "malformed JSON");
  return j;
}

void write_text_atomic(const std::string& path, const std::string& text) {
  std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kBadArgument, "cannot write " + tmp.string());
    out << text;
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace roldarp
