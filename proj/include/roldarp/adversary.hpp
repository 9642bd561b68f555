#pragma once

#include <optional>
#include <string>

#include "roldarp/core.hpp"
#include "roldarp/online.hpp"
#include "roldarp/oracle.hpp"

namespace roldarp {

/// Parameters of the static lower-bound family. T = 2hf, so h is half a
/// segment length and only one request of length h+1 fits in a segment.
struct Fig1Params {
  int f = 6;        // even, > 2
  Rational h{3};    // > 1
  Rational B{1};    // > 0
  Rational eps{1, 8};  // in (0, 1)
};

struct Fig1Output {
  Instance instance;
  Schedule witness;  // the explicit offline path o, v_1..v_m, u_2..u_{f-2}
  Rational witness_revenue;
  long long m = 0;
  std::vector<Rational> tau;  // arrival times at u_{2k}, k = 1..f/2-2
};

Fig1Output gen_fig1(const Fig1Params& params);

struct AdversaryTranscript {
  Instance instance;  // every request that ended up released
  Schedule policy_schedule;
  Rational policy_revenue;
  Schedule opt_schedule;
  Rational opt_revenue;
  Rational opt_horizon;
  std::optional<Rational> ratio;  // nullopt when the policy earned nothing
  std::string fired_case;
  std::string adversary;  // "last-window" or "first-horizon"
  bool uniform = false;
};

/// The last-window adversary: a bait request released at T - 2T/f, exactly
/// one move away; a policy that departs for it is punished with a payoff
/// batch it can no longer reach (revenue k, or k unit-revenue requests in a
/// chain when uniform).
struct LastWindowParams {
  Rational T{8};
  int f = 4;
  bool uniform = false;
  long long k = 100;
  std::optional<Rational> delta;  // payoff release lag, default T/(2f)
};

AdversaryTranscript adaptive_last_window(OnlinePolicy& policy, const LastWindowParams& params);

/// The first-horizon adversary (f = 5, X = T/f): a reactive case analysis on
/// when and where the policy departs for the opening requests; the optimum
/// in the transcript is taken over the horizon 3X = T - 2T/f.
struct FirstHorizonParams {
  bool uniform = false;
  Rational X{6};
  long long k = 4;       // uniform batch size
  Rational eps{1, 100};  // nonuniform small revenue
  std::optional<Rational> delta;  // uniform lag, default X/(4k)
};

AdversaryTranscript adaptive_first_horizon(OnlinePolicy& policy, const FirstHorizonParams& params);

}  // namespace roldarp
