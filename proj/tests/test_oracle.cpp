#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "roldarp/adversary.hpp"
#include "roldarp/json_io.hpp"
#include "roldarp/oracle.hpp"
#include "roldarp/random_instances.hpp"
#include "roldarp/sbp.hpp"
#include "support.hpp"

using namespace roldarp;
using testsupport::make_complete_instance;

TEST_CASE("single request: served when reachable, zero when not") {
  Instance reachable = make_complete_instance({"a", "b"}, "a", Rational(8), 4, Rational(2), {},
                                              {{"a", "b", Rational(0), Rational(7)}});
  OracleResult r = optimal_offline(reachable);
  CHECK(r.revenue == Rational(7));
  CHECK(validate_schedule(reachable, r.schedule).feasible);

  Instance unreachable = make_complete_instance({"a", "b"}, "a", Rational(8), 4, Rational(2), {},
                                                {{"a", "b", Rational(7), Rational(7)}});
  // release 7 + serve 2 > 8
  CHECK(optimal_offline(unreachable).revenue == Rational(0));
}

TEST_CASE("two simultaneous distant requests: only one fits") {
  // T = 6, f = 3, segment 2; either serve costs 4, both cost 10 > 6.
  Instance inst = make_complete_instance(
      {"o", "s1", "d1", "s2", "d2"}, "o", Rational(6), 3, Rational(2), {},
      {{"s1", "d1", Rational(0), Rational(3)}, {"s2", "d2", Rational(0), Rational(5)}});
  OracleResult r = optimal_offline(inst);
  CHECK(r.revenue == Rational(5));
  CHECK(r.revenue == testsupport::exhaustive_best_revenue(inst, inst.T));
}

TEST_CASE("lower-bound family: oracle beats the witness floor") {
  Fig1Output fig = gen_fig1({4, Rational(2), Rational(1), Rational(1, 16)});
  REQUIRE(fig.m == 2);
  REQUIRE(fig.instance.requests.size() == 5);
  OracleResult r = optimal_offline(fig.instance);
  CHECK(r.revenue >= Rational(2));  // 2B from the bottom chain alone
  CHECK(r.revenue == testsupport::exhaustive_best_revenue(fig.instance, fig.instance.T));
  // o,u1,(u1,u2),v-chain,(u2,u3),(u3,u4) nets 4B + 2eps = 33/8
  CHECK(r.revenue == Rational(33, 8));
  CHECK(validate_schedule(fig.instance, r.schedule).feasible);
}

TEST_CASE("horizon restriction is monotone") {
  std::mt19937_64 rng(43);
  for (int iter = 0; iter < 20; ++iter) {
    RandomSpec spec;
    spec.vertices = 4 + static_cast<int>(rng() % 3);
    spec.requests = 1 + static_cast<int>(rng() % 6);
    spec.f = 4;
    spec.T = 40;
    spec.seed = rng();
    Instance inst = gen_random(spec);
    OracleOptions half;
    half.horizon = Rational(20);
    OracleOptions quarter;
    quarter.horizon = Rational(10);
    Rational full = optimal_offline(inst).revenue;
    Rational at_half = optimal_offline(inst, half).revenue;
    Rational at_quarter = optimal_offline(inst, quarter).revenue;
    CHECK(at_quarter <= at_half);
    CHECK(at_half <= full);
  }
}

TEST_CASE("branch and bound equals the unpruned search") {
  std::mt19937_64 rng(47);
  for (int iter = 0; iter < 60; ++iter) {
    RandomSpec spec;
    spec.vertices = 3 + static_cast<int>(rng() % 4);
    spec.requests = static_cast<int>(rng() % 9);
    spec.f = 4 + 2 * static_cast<int>(rng() % 3);
    spec.T = 10 * spec.f;
    spec.seed = rng();
    spec.uniform = rng() % 3 == 0;
    spec.bipartite = rng() % 3 == 0;
    Instance inst = gen_random(spec);
    CHECK(optimal_offline(inst).revenue == testsupport::exhaustive_best_revenue(inst, inst.T));
  }
}

TEST_CASE("oracle dominates sbp") {
  std::mt19937_64 rng(53);
  for (int iter = 0; iter < 40; ++iter) {
    RandomSpec spec;
    spec.vertices = 4 + static_cast<int>(rng() % 3);
    spec.requests = 1 + static_cast<int>(rng() % 8);
    spec.f = 4 + 2 * static_cast<int>(rng() % 2);
    spec.T = 10 * spec.f;
    spec.seed = rng();
    Instance inst = gen_random(spec);
    CHECK(optimal_offline(inst).revenue >= run_sbp(inst).profile.total);
  }
}

TEST_CASE("schedule revenue matches the reported optimum") {
  std::mt19937_64 rng(59);
  for (int iter = 0; iter < 30; ++iter) {
    RandomSpec spec;
    spec.vertices = 4;
    spec.requests = 1 + static_cast<int>(rng() % 7);
    spec.f = 6;
    spec.T = 60;
    spec.seed = rng();
    Instance inst = gen_random(spec);
    OracleResult r = optimal_offline(inst);
    ScheduleVerdict verdict = validate_schedule(inst, r.schedule);
    CHECK(verdict.feasible);
    CHECK(verdict.revenue == r.revenue);
  }
}

TEST_CASE("request guard is a hard error") {
  std::vector<Request> many;
  for (int i = 0; i < 17; ++i) many.push_back({"a", "b", Rational(0), Rational(1)});
  Instance inst = make_complete_instance({"a", "b"}, "a", Rational(8), 4, Rational(2), {},
                                         std::move(many));
  try {
    optimal_offline(inst);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kTooLarge);
  }
  OracleOptions raised;
  raised.max_requests = 32;
  // serve [0,2], return [2,4], serve [4,6]; a third serve would end at 10 > T
  CHECK(optimal_offline(inst, raised).revenue == Rational(2));
}

TEST_CASE("oracle is deterministic") {
  RandomSpec spec;
  spec.vertices = 5;
  spec.requests = 7;
  spec.f = 6;
  spec.T = 60;
  spec.seed = 99;
  Instance inst = gen_random(spec);
  OracleResult a = optimal_offline(inst);
  OracleResult b = optimal_offline(inst);
  CHECK(a.revenue == b.revenue);
  CHECK(dump_json(schedule_to_json(a.schedule)) == dump_json(schedule_to_json(b.schedule)));
}
