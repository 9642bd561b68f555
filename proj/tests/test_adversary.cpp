#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "roldarp/adversary.hpp"
#include "roldarp/oracle.hpp"
#include "roldarp/sbp.hpp"
#include "support.hpp"

using namespace roldarp;

namespace {

void check_transcript_sound(const AdversaryTranscript& t) {
  CHECK(validate_instance(t.instance).valid());
  ScheduleVerdict policy = validate_schedule(t.instance, t.policy_schedule);
  CHECK(policy.feasible);
  CHECK(policy.revenue == t.policy_revenue);
  ScheduleVerdict opt = validate_schedule(t.instance, t.opt_schedule);
  CHECK(opt.feasible);
  CHECK(opt.revenue == t.opt_revenue);
  CHECK(opt.completion <= t.opt_horizon);
  for (const Request& r : t.instance.requests) {
    CHECK(r.t.sign() >= 0);
    CHECK(r.t <= t.instance.T);
  }
  if (t.ratio) {
    CHECK(*t.ratio == t.opt_revenue / t.policy_revenue);
  } else {
    CHECK(t.policy_revenue.is_zero());
  }
}

/// Idles until a set time, then moves to one fixed target once.
class DelayedChaser : public OnlinePolicy {
 public:
  DelayedChaser(Rational depart_at, std::string target)
      : depart_at_(std::move(depart_at)), target_(std::move(target)) {}
  void restart() override { moved_ = false; }
  PolicyAction decide(const PolicyView& view) override {
    if (!moved_ && view.now >= depart_at_ && view.graph->find(target_)) {
      moved_ = true;
      return PolicyAction::move_to(target_);
    }
    if (!moved_ && view.now < depart_at_ && depart_at_ < view.T) {
      return PolicyAction::idle_for(depart_at_ - view.now);
    }
    return PolicyAction::wait();
  }

 private:
  Rational depart_at_;
  std::string target_;
  bool moved_ = false;
};

/// Departs for the first opening source at its release, then flees to a
/// second target at a set time without ever serving.
class ArriveAndFlee : public OnlinePolicy {
 public:
  ArriveAndFlee(std::string first, Rational flee_at, std::string flee_to)
      : first_(std::move(first)), flee_at_(std::move(flee_at)), flee_to_(std::move(flee_to)) {}
  void restart() override { stage_ = 0; }
  PolicyAction decide(const PolicyView& view) override {
    if (stage_ == 0 && view.graph->find(first_)) {
      stage_ = 1;
      return PolicyAction::move_to(first_);
    }
    if (stage_ == 1 && view.now < flee_at_) {
      return PolicyAction::idle_for(flee_at_ - view.now);
    }
    if (stage_ == 1 && view.graph->find(flee_to_)) {
      stage_ = 2;
      return PolicyAction::move_to(flee_to_);
    }
    return PolicyAction::wait();
  }

 private:
  std::string first_;
  Rational flee_at_;
  std::string flee_to_;
  int stage_ = 0;
};

}  // namespace

TEST_CASE("gen_fig1 produces the documented small instance") {
  Fig1Output fig = gen_fig1({6, Rational(3), Rational(1), Rational(1, 8)});
  CHECK(fig.m == 4);
  CHECK(fig.instance.requests.size() == 9);
  CHECK(fig.instance.T == Rational(36));
  CHECK(fig.witness_revenue == Rational(49, 8));  // 4B + (2B+eps)(f-4)/2 = 6 + 1/8
  REQUIRE(fig.tau.size() == 1);
  CHECK(fig.tau[0] == Rational(17));
  CHECK(fig.tau[0] >= Rational(13));  // 4kh + 1 at k = 1
  CHECK(validate_schedule(fig.instance, fig.witness).completion <= Rational(24));
}

TEST_CASE("gen_fig1 rejects bad parameters") {
  auto expect_bad = [](Fig1Params params) {
    try {
      gen_fig1(params);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kBadParams);
    }
  };
  expect_bad({5, Rational(3), Rational(1), Rational(1, 8)});  // odd f
  expect_bad({2, Rational(3), Rational(1), Rational(1, 8)});  // f too small
  expect_bad({6, Rational(1), Rational(1), Rational(1, 8)});  // h must exceed 1
  expect_bad({6, Rational(3), Rational(0), Rational(1, 8)});  // B positive
  expect_bad({6, Rational(3), Rational(1), Rational(2)});     // eps < 1
}

TEST_CASE("sbp and witness revenues across the parameter sweep") {
  const Rational B(1);
  const Rational eps(1, 1000);
  for (int f : {4, 6, 8, 10}) {
    for (long long h : {2, 3, 5, 16, 50}) {
      Fig1Output fig = gen_fig1({f, Rational(h), B, eps});
      CHECK(validate_instance(fig.instance).valid());
      ScheduleVerdict witness = validate_schedule(fig.instance, fig.witness);
      CHECK(witness.feasible);
      CHECK(witness.completion <= Rational(2 * f - 4) * Rational(h));
      CHECK(witness.revenue ==
            Rational(fig.m) * B + (Rational(2) * B + eps) * Rational(f - 4) / Rational(2));
      SbpResult sbp = run_sbp(fig.instance);
      CHECK(sbp.profile.total == eps + Rational(f / 2 - 1) * (B + eps));
      for (std::size_t k = 0; k < fig.tau.size(); ++k) {
        CHECK(fig.tau[k] >=
              Rational(4 * static_cast<long long>(k + 1)) * Rational(h) + Rational(1));
      }
    }
  }
}

TEST_CASE("fig1 at f=10 h=30 approaches the limit ratio") {
  Fig1Output fig = gen_fig1({10, Rational(30), Rational(1), Rational(1, 1000)});
  CHECK(fig.m == 12);
  SbpResult sbp = run_sbp(fig.instance);
  // (18 + 3eps) / (4 + 5eps)
  CHECK(sbp.profile.total == Rational(4) + Rational(5, 1000));
  CHECK(fig.witness_revenue == Rational(18) + Rational(3, 1000));
  Rational ratio = fig.witness_revenue / sbp.profile.total;
  CHECK(ratio >= Rational(44, 10));
  CHECK(ratio <= Rational(45, 10));
}

TEST_CASE("last-window adversary beats sbp, nonuniform") {
  SbpPolicy sbp;
  LastWindowParams params;
  params.T = Rational(8);
  params.f = 4;
  params.k = 100;
  AdversaryTranscript t = adaptive_last_window(sbp, params);
  check_transcript_sound(t);
  CHECK(t.fired_case == "commit");
  CHECK(t.policy_revenue == Rational(1));
  CHECK(t.opt_revenue >= Rational(100));
  REQUIRE(t.ratio.has_value());
  CHECK(*t.ratio >= Rational(100));
}

TEST_CASE("last-window adversary beats sbp, uniform") {
  SbpPolicy sbp;
  LastWindowParams params;
  params.T = Rational(8);
  params.f = 4;
  params.uniform = true;
  params.k = 5;
  AdversaryTranscript t = adaptive_last_window(sbp, params);
  check_transcript_sound(t);
  CHECK(t.fired_case == "commit");
  CHECK(t.policy_revenue <= Rational(1));
  CHECK(t.opt_revenue == Rational(5));
}

TEST_CASE("last-window adversary vs an idle policy") {
  IdlePolicy idle;
  LastWindowParams params;
  params.T = Rational(8);
  params.f = 4;
  params.k = 100;
  AdversaryTranscript t = adaptive_last_window(idle, params);
  check_transcript_sound(t);
  CHECK(t.fired_case == "decline");
  CHECK(t.policy_revenue == Rational(0));
  CHECK(t.opt_revenue == Rational(1));
  CHECK(!t.ratio.has_value());
}

TEST_CASE("last-window adversary works for odd f") {
  SbpPolicy sbp;
  LastWindowParams params;
  params.T = Rational(10);
  params.f = 5;
  params.k = 7;
  AdversaryTranscript t = adaptive_last_window(sbp, params);
  check_transcript_sound(t);
  CHECK(t.fired_case == "commit");
  CHECK(t.policy_revenue == Rational(1));
  CHECK(t.opt_revenue >= Rational(7));
}

TEST_CASE("first-horizon adversary vs a never-moving policy fires case 1") {
  IdlePolicy idle;
  FirstHorizonParams params;
  params.X = Rational(6);
  AdversaryTranscript t = adaptive_first_horizon(idle, params);
  check_transcript_sound(t);
  CHECK(t.fired_case == "1");
  CHECK(t.policy_revenue == Rational(0));
  CHECK(t.opt_revenue == Rational(1, 100));  // one eps-revenue request within 3X
  CHECK(t.opt_horizon == Rational(18));

  FirstHorizonParams uparams;
  uparams.uniform = true;
  uparams.X = Rational(6);
  uparams.k = 3;
  IdlePolicy idle2;
  AdversaryTranscript ut = adaptive_first_horizon(idle2, uparams);
  check_transcript_sound(ut);
  CHECK(ut.fired_case == "1");
  CHECK(ut.opt_revenue == Rational(1));
}

TEST_CASE("first-horizon adversary vs sbp, nonuniform") {
  SbpPolicy sbp;
  FirstHorizonParams params;
  params.X = Rational(6);
  params.eps = Rational(1, 100);
  AdversaryTranscript t = adaptive_first_horizon(sbp, params);
  check_transcript_sound(t);
  CHECK(t.fired_case == "3a");
  CHECK(t.policy_revenue == Rational(101, 100));  // 1 + eps
  CHECK(t.opt_revenue == Rational(2));
  REQUIRE(t.ratio.has_value());
  CHECK(*t.ratio >= Rational(2) / (Rational(1) + Rational(1, 100)));
}

TEST_CASE("first-horizon adversary vs sbp, uniform") {
  SbpPolicy sbp;
  FirstHorizonParams params;
  params.uniform = true;
  params.X = Rational(6);
  params.k = 4;
  AdversaryTranscript t = adaptive_first_horizon(sbp, params);
  check_transcript_sound(t);
  CHECK(t.fired_case == "3a");
  CHECK(t.policy_revenue == Rational(5));  // 1 + k
  CHECK(t.opt_revenue == Rational(8));     // 2k within 3X
}

TEST_CASE("first-horizon case 2 fires for late chasers") {
  FirstHorizonParams params;
  params.X = Rational(6);

  DelayedChaser mid(Rational(9), "a1");  // departs inside (X, 2X)
  AdversaryTranscript t2a = adaptive_first_horizon(mid, params);
  check_transcript_sound(t2a);
  CHECK(t2a.fired_case == "2a");
  CHECK(t2a.policy_revenue == Rational(0));
  CHECK(t2a.opt_revenue == Rational(2, 100));  // r2 + r3, both eps

  DelayedChaser at_2x(Rational(12), "a1");
  AdversaryTranscript t2b = adaptive_first_horizon(at_2x, params);
  check_transcript_sound(t2b);
  CHECK(t2b.fired_case == "2b");
  CHECK(t2b.opt_revenue == Rational(2, 100));

  DelayedChaser late(Rational(13), "a1");
  AdversaryTranscript t2c = adaptive_first_horizon(late, params);
  check_transcript_sound(t2c);
  CHECK(t2c.fired_case == "2c");
  CHECK(t2c.opt_revenue == Rational(2, 100));
}

TEST_CASE("first-horizon case 3b fires for serve-dodging policies") {
  FirstHorizonParams params;
  params.X = Rational(6);
  // Arrives at a1 at 2X, flees toward a3 right away: case 3b-i, so the
  // straggler lands on the 4-family.
  ArriveAndFlee early("a1", Rational(12), "a3");
  AdversaryTranscript ti = adaptive_first_horizon(early, params);
  check_transcript_sound(ti);
  CHECK(ti.fired_case == "3b-i");
  CHECK(ti.instance.graph.find("c4").has_value());
  CHECK(ti.policy_revenue == Rational(0));
  CHECK(ti.opt_revenue == Rational(2));

  // Flees only at 3X - 1: case 3b-ii.
  ArriveAndFlee late("a1", Rational(17), "a3");
  AdversaryTranscript tii = adaptive_first_horizon(late, params);
  check_transcript_sound(tii);
  CHECK(tii.fired_case == "3b-ii");
  CHECK(tii.opt_revenue == Rational(2));
}

TEST_CASE("first-horizon parameter validation") {
  SbpPolicy sbp;
  FirstHorizonParams bad;
  bad.X = Rational(2);  // nonuniform requires X >= 3
  try {
    adaptive_first_horizon(sbp, bad);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kBadParams);
  }
  FirstHorizonParams bad_delta;
  bad_delta.uniform = true;
  bad_delta.X = Rational(6);
  bad_delta.k = 3;
  bad_delta.delta = Rational(1);  // X/(2k) = 1, not strictly below
  try {
    adaptive_first_horizon(sbp, bad_delta);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kBadParams);
  }
}
