#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "roldarp/json_io.hpp"

using namespace roldarp;
namespace fs = std::filesystem;

namespace {

const std::string kCli = ROLDARP_CLI_PATH;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("roldarp_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

int run_cli(const std::string& args) {
  std::string command = kCli + " " + args + " >/dev/null 2>/dev/null";
  int status = std::system(command.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("gen fig1 writes the documented instance") {
  TempDir dir;
  std::string out = dir.file("fig1.json");
  std::string witness = dir.file("witness.json");
  int rc = run_cli("gen fig1 --f 6 --h 3 --B 1 --eps 1/8 -o " + out + " --witness " + witness);
  CHECK(rc == 0);
  Instance inst = instance_from_json(parse_json_text(read_text_file(out)));
  CHECK(inst.requests.size() == 9);
  CHECK(inst.T == Rational(36));
  Schedule w = schedule_from_json(parse_json_text(read_text_file(witness)));
  ScheduleVerdict verdict = validate_schedule(inst, w);
  CHECK(verdict.feasible);
  CHECK(verdict.revenue == Rational(49, 8));
}

TEST_CASE("gen random is byte-deterministic per seed") {
  TempDir dir;
  std::string a = dir.file("a.json"), b = dir.file("b.json"), c = dir.file("c.json");
  CHECK(run_cli("gen random --vertices 5 --requests 6 --seed 42 -o " + a) == 0);
  CHECK(run_cli("gen random --vertices 5 --requests 6 --seed 42 -o " + b) == 0);
  CHECK(run_cli("gen random --vertices 5 --requests 6 --seed 43 -o " + c) == 0);
  CHECK(read_text_file(a) == read_text_file(b));
  CHECK(read_text_file(a) != read_text_file(c));
}

TEST_CASE("run sbp then opt: oracle dominates") {
  TempDir dir;
  std::string inst_path = dir.file("inst.json");
  std::string sbp_path = dir.file("sbp.json");
  std::string opt_path = dir.file("opt.json");
  REQUIRE(run_cli("gen random --vertices 5 --requests 6 --seed 9 -o " + inst_path) == 0);
  CHECK(run_cli("run sbp -i " + inst_path + " -o " + sbp_path) == 0);
  CHECK(run_cli("opt -i " + inst_path + " -o " + opt_path) == 0);
  Instance inst = instance_from_json(parse_json_text(read_text_file(inst_path)));
  Schedule sbp = schedule_from_json(parse_json_text(read_text_file(sbp_path)));
  Schedule opt = schedule_from_json(parse_json_text(read_text_file(opt_path)));
  ScheduleVerdict sv = validate_schedule(inst, sbp);
  ScheduleVerdict ov = validate_schedule(inst, opt);
  CHECK(sv.feasible);
  CHECK(ov.feasible);
  CHECK(ov.revenue >= sv.revenue);
}

TEST_CASE("check exits 2 on violated hypotheses and 0 on holds") {
  TempDir dir;
  std::string nonuniform = dir.file("nu.json");
  REQUIRE(run_cli("gen random --vertices 5 --requests 5 --seed 3 -o " + nonuniform) == 0);
  CHECK(run_cli("check --bound thm7 -i " + nonuniform) == 2);

  std::string report = dir.file("report.json");
  std::string csv = dir.file("report.csv");
  CHECK(run_cli("check --bound thm4 -i " + nonuniform + " -o " + report + " --csv " + csv) == 0);
  BoundReport parsed = bound_report_from_json(parse_json_text(read_text_file(report)));
  CHECK(parsed.holds);
  CHECK(parsed.instance_id == nonuniform);
  std::string csv_text = read_text_file(csv);
  CHECK(csv_text.find("bound,instance,lhs,rhs,slack,holds") == 0);
  CHECK(csv_text.find("thm4," + nonuniform) != std::string::npos);
}

TEST_CASE("duel emits a transcript") {
  TempDir dir;
  std::string out = dir.file("duel.json");
  CHECK(run_cli("duel --adversary last-window --policy sbp --k 100 -o " + out) == 0);
  Json j = parse_json_text(read_text_file(out));
  CHECK(j.at("adversary") == "last-window");
  CHECK(j.at("case") == "commit");
  CHECK(rational_from_json(j.at("policy_revenue")) == Rational(1));
  CHECK(rational_from_json(j.at("opt_revenue")) >= Rational(100));
  Instance inst = instance_from_json(j.at("instance"));
  CHECK(validate_instance(inst).valid());

  std::string fh = dir.file("duel_fh.json");
  CHECK(run_cli("duel --adversary first-horizon --policy sbp --X 6 --eps 1/100 -o " + fh) == 0);
  Json jf = parse_json_text(read_text_file(fh));
  CHECK(jf.at("case") == "3a");
  CHECK(rational_from_json(jf.at("opt_revenue")) == Rational(2));
}

TEST_CASE("reduce emits a bipartite instance and a map") {
  TempDir dir;
  std::string inst_path = dir.file("inst.json");
  std::string out = dir.file("bip.json");
  std::string map = dir.file("map.json");
  REQUIRE(run_cli("gen random --vertices 4 --requests 3 --seed 17 -o " + inst_path) == 0);
  CHECK(run_cli("reduce -i " + inst_path + " -o " + out + " --map " + map) == 0);
  Instance bip = instance_from_json(parse_json_text(read_text_file(out)));
  CHECK(bip.graph.bipartite());
  CHECK(validate_instance(bip).valid());
  Json m = parse_json_text(read_text_file(map));
  CHECK(m.contains("eps"));
  CHECK(m.contains("vertices"));
}

TEST_CASE("report aggregates bound reports into a csv") {
  TempDir dir;
  std::string inst_path = dir.file("inst.json");
  REQUIRE(run_cli("gen random --vertices 5 --requests 5 --seed 11 --uniform -o " + inst_path) == 0);
  fs::create_directories(dir.path / "out");
  CHECK(run_cli("check --bound thm4 -i " + inst_path + " -o " + dir.file("out/a.json")) == 0);
  CHECK(run_cli("check --bound thm6 -i " + inst_path + " -o " + dir.file("out/b.json")) == 0);
  CHECK(run_cli("check --bound lem9 -i " + inst_path + " -o " + dir.file("out/c.json")) == 0);
  std::string summary = dir.file("summary.csv");
  CHECK(run_cli("report --glob '" + (dir.path / "out" / "*.json").string() + "' --csv " + summary) == 0);
  std::string csv = read_text_file(summary);
  CHECK(csv.find("thm4") != std::string::npos);
  CHECK(csv.find("thm6") != std::string::npos);
  CHECK(csv.find("lem9") != std::string::npos);
  // header + 3 rows
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("check --bound nope -i missing.json") == 2);
  CHECK(run_cli("opt -i /nonexistent/file.json") == 2);
  CHECK(run_cli("duel --adversary bogus") == 2);
  TempDir dir;
  std::string bad = dir.file("bad.json");
  std::ofstream(bad) << "{ not json";
  CHECK(run_cli("run sbp -i " + bad) == 2);
}

TEST_CASE("rationals parse from a/b strings on the command line") {
  TempDir dir;
  std::string out = dir.file("fig.json");
  CHECK(run_cli("gen fig1 --f 4 --h 5/2 --B 2 --eps 3/7 -o " + out) == 0);
  Instance inst = instance_from_json(parse_json_text(read_text_file(out)));
  CHECK(inst.T == Rational(20));  // 2hf = 2*(5/2)*4
}

TEST_CASE("instance json round trip is byte stable") {
  TempDir dir;
  std::string path = dir.file("inst.json");
  REQUIRE(run_cli("gen random --vertices 6 --requests 7 --seed 77 --bipartite --k 2/5 -o " +
                  path) == 0);
  std::string text = read_text_file(path);
  Instance inst = instance_from_json(parse_json_text(text));
  CHECK(dump_json(instance_to_json(inst)) == text);

  std::string fig_path = dir.file("fig.json");
  REQUIRE(run_cli("gen fig1 --f 6 --h 3 --B 1 --eps 1/8 -o " + fig_path) == 0);
  std::string fig_text = read_text_file(fig_path);
  Instance fig = instance_from_json(parse_json_text(fig_text));
  CHECK(fig.graph.pre_closed());
  CHECK(dump_json(instance_to_json(fig)) == fig_text);
}

TEST_CASE("schedule json round trip is byte stable") {
  TempDir dir;
  std::string inst_path = dir.file("inst.json");
  std::string sched_path = dir.file("sched.json");
  REQUIRE(run_cli("gen random --vertices 5 --requests 6 --seed 21 -o " + inst_path) == 0);
  REQUIRE(run_cli("opt -i " + inst_path + " -o " + sched_path) == 0);
  std::string text = read_text_file(sched_path);
  Schedule sched = schedule_from_json(parse_json_text(text));
  CHECK(dump_json(schedule_to_json(sched)) == text);
}

TEST_CASE("ROLDARP_SEARCH_CAP lifts the oracle guard") {
  TempDir dir;
  std::string inst_path = dir.file("many.json");
  REQUIRE(run_cli("gen random --vertices 5 --requests 18 --seed 2 -o " + inst_path) == 0);
  CHECK(run_cli("opt -i " + inst_path) == 2);  // 18 > 16: TOO_LARGE
  std::string lifted = "ROLDARP_SEARCH_CAP=24 " + kCli + " opt -i " + inst_path +
                       " -o " + dir.file("opt.json") + " >/dev/null 2>/dev/null";
  CHECK(WEXITSTATUS(std::system(lifted.c_str())) == 0);
}
