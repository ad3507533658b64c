// Copyright 2026 The latentbr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// One line per acceptance criterion.  Exit status 0 iff every criterion
// passes.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "latentbr/conformance.hpp"
#include "latentbr/scenario.hpp"
#include "oracle_sweep.hpp"

namespace {

using namespace latentbr;
using Clock = std::chrono::steady_clock;

// Pinned limits.
constexpr double kScenarioSeconds = 1.0;
constexpr double kConformanceSeconds = 300.0;
constexpr std::uint64_t kInstances = 1000;
constexpr int kConformanceAtoms = 4;
constexpr double kMinHitRate = 0.20;
constexpr std::uint64_t kWitnessBudget = 10000;
constexpr int kWitnessAtoms = 3;
constexpr int kOracleAtoms = 2;
constexpr int kOracleBaseSize = 2;
constexpr int kOraclePreOrders = 3;
constexpr std::uint64_t kOracleSeed = 2026;

const std::string kSource = LATENTBR_SOURCE_DIR;

struct Verdict {
  bool pass = false;
  std::string detail;
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Fixed(double x, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

bool SameTriplet(const Logic& logic, const BeliefTriplet& t, const char* s, const char* trig,
                 const char* rev) {
  return logic.equivalent(t.subject, logic.parse(s)) &&
         logic.equivalent(t.trigger, logic.parse(trig)) &&
         logic.equivalent(t.revealed, logic.parse(rev));
}

Verdict GameScenario() {
  const auto start = Clock::now();
  const Scenario s = LoadScenario(kSource + "/scenarios/game.lbr");
  const RunResult r = Run(s);
  const double secs = Seconds(start);
  const Logic& logic = *s.logic;

  // (subject, trigger, revealed) in the order they must fire.
  const std::vector<std::vector<const char*>> chain = {
      {"p4 & p5", "p8", "p6"}, {"p4 & p5", "p9", "p2"}, {"p1", "p2", "p3"}, {"p4 & p5", "p3", "p10"}};
  std::vector<std::pair<int, int>> when;  // (step, round)
  for (const auto& link : chain) {
    for (const TraceEvent& e : r.trace) {
      for (const Firing& f : e.triggered) {
        if (SameTriplet(logic, f.item.triplet, link[0], link[1], link[2])) {
          when.emplace_back(e.step, f.iteration);
        }
      }
    }
  }
  bool ordered = when.size() == chain.size();
  for (std::size_t i = 1; ordered && i < when.size(); ++i) ordered = when[i - 1] < when[i];
  const bool ok = r.final_set.consistent() && r.final_set.member(logic.parse("p10")) && ordered &&
                  secs < kScenarioSeconds;
  return {ok, "consistent=" + std::to_string(r.final_set.consistent()) +
                  " p10=" + std::to_string(r.final_set.member(logic.parse("p10"))) +
                  " chain_in_order=" + std::to_string(ordered) + " time=" + Fixed(secs) + "s"};
}

Verdict DroppedKeyScenario() {
  const auto start = Clock::now();
  const Scenario s = LoadScenario(kSource + "/scenarios/dropped_key.lbr");
  const RunResult r = Run(s);
  const Logic& logic = *s.logic;
  const Formula p1 = logic.parse("p1");
  const Formula p3 = logic.parse("p3");

  bool no_p1_triplet = true;
  bool p3_never = true;
  bool revised = false;
  for (std::size_t i = 0; i < r.trace.size(); ++i) {
    if (r.trace[i].op == EventOp::kRevise) revised = true;
    if (!revised) continue;
    const std::vector<TraceEvent> prefix(r.trace.begin(), r.trace.begin() + static_cast<long>(i) + 1);
    const BeliefSet at = Replay(s, prefix);
    for (const auto& item : at.triplets().items()) {
      if (logic.equivalent(item.triplet.subject, p1)) no_p1_triplet = false;
    }
    if (at.member(p3)) p3_never = false;
    for (const Firing& f : r.trace[i].triggered) {
      if (logic.equivalent(f.item.triplet.revealed, p3)) p3_never = false;
    }
  }
  const bool p9 = r.final_set.member(logic.parse("p9"));
  const double secs = Seconds(start);
  const bool ok = revised && no_p1_triplet && p3_never && p9 && r.final_set.adequate() &&
                  secs < kScenarioSeconds;
  return {ok, "no_p1_triplet=" + std::to_string(no_p1_triplet) + " p3_never=" +
                  std::to_string(p3_never) + " p9_accepted=" + std::to_string(p9) +
                  " time=" + Fixed(secs) + "s"};
}

Verdict LatentConflict() {
  const auto start = Clock::now();
  const ScenarioInstance inst = LatentConflictInstance();
  const BeliefSet bs = BeliefSet::Close(inst.interp, inst.base);
  const std::vector<Formula> v = Visible(bs, inst.info);
  const BeliefSet r = Revise(bs, inst.info, Selection::All());
  const double secs = Seconds(start);
  const bool ok = bs.consistent() && inst.logic->consistent(v) && !r.consistent() &&
                  secs < kScenarioSeconds;
  return {ok, "before=" + std::to_string(bs.consistent()) + " visible=" +
                  std::to_string(inst.logic->consistent(v)) + " revised=" +
                  std::to_string(r.consistent()) + " time=" + Fixed(secs) + "s"};
}

Verdict Theorem(const ConformanceReport& report, const char* name, double secs) {
  const Tally* t = report.find(name);
  if (t == nullptr) return {false, "no tally"};
  const bool ok = t->checked == kInstances * 4 && t->failed == 0 && secs < kConformanceSeconds;
  return {ok, std::to_string(t->checked) + " comparisons, " + std::to_string(t->failed) +
                  " mismatches, time=" + Fixed(secs, 1) + "s"};
}

Verdict Postulates(const ConformanceReport& report, const std::vector<std::string>& prefixes,
                   bool check_hit_rate) {
  bool ok = true;
  std::ostringstream failures, low;
  int count = 0;
  for (const Tally& t : report.tallies()) {
    bool wanted = false;
    for (const std::string& p : prefixes) wanted = wanted || t.name.rfind(p, 0) == 0;
    if (!wanted) continue;
    ++count;
    if (t.failed != 0) {
      ok = false;
      failures << " " << t.name << "=" << t.failed << "/" << t.fired;
    }
    if (t.conditional && check_hit_rate && t.hit_rate() < kMinHitRate) {
      ok = false;
      low << " " << t.name << "=" << Fixed(t.hit_rate(), 2);
    }
    if (t.conditional && t.fired == 0) ok = false;
  }
  std::string detail = std::to_string(count) + " postulates";
  detail += failures.str().empty() ? ", no failures" : "; failed:" + failures.str();
  if (!low.str().empty()) detail += "; hit rate below " + Fixed(kMinHitRate, 2) + ":" + low.str();
  return {ok && count > 0, detail};
}

Verdict ObservationWitnesses() {
  const auto start = Clock::now();
  Bounds bounds;
  bounds.atoms = kWitnessAtoms;
  const ObservationSearch search = FindObservationWitnesses(bounds, kWitnessBudget);
  std::ifstream in(kSource + "/tests/golden/observations.json");
  std::stringstream golden;
  golden << in.rdbuf();
  const bool matches = golden.str() == ObservationJson(search) + "\n";
  const bool ok = search.no_gratuitous_recovery && search.no_levi_identity && matches;
  return {ok, "searched=" + std::to_string(search.searched) + " recovery_seed=" +
                  (search.no_gratuitous_recovery ? std::to_string(search.no_gratuitous_recovery->seed) : "none") +
                  " identity_seed=" +
                  (search.no_levi_identity ? std::to_string(search.no_levi_identity->seed) : "none") +
                  " golden=" + std::to_string(matches) + " time=" + Fixed(Seconds(start)) + "s"};
}

Verdict ClassicalOracle() {
  const auto start = Clock::now();
  const oracle::SweepResult r =
      oracle::ClassicalSweep(kOracleAtoms, kOracleBaseSize, kOraclePreOrders, kOracleSeed);
  std::string detail = std::to_string(r.instances) + " instances, " +
                       std::to_string(r.mismatches) + " mismatches, time=" + Fixed(Seconds(start)) + "s";
  if (r.mismatches != 0) detail += "; first: " + r.first_mismatch;
  return {r.mismatches == 0 && r.instances > 0, detail};
}

}  // namespace

int main() {
  int failed = 0;
  const auto report_line = [&](int n, const char* title, const Verdict& v) {
    std::printf("criterion %d: %s  %s  (%s)\n", n, v.pass ? "PASS" : "FAIL", title, v.detail.c_str());
    std::fflush(stdout);
    if (!v.pass) ++failed;
  };

  report_line(1, "game scenario", GameScenario());
  report_line(2, "dropped-key scenario", DroppedKeyScenario());
  report_line(3, "latent inconsistency on revision", LatentConflict());

  Bounds bounds;
  bounds.atoms = kConformanceAtoms;
  const auto start = Clock::now();
  const ConformanceReport report = CheckSeeds(0, kInstances, bounds);
  const double secs = Seconds(start);
  report_line(4, "representation theorem", Theorem(report, "theorem.representation", secs));
  report_line(5, "identity theorem", Theorem(report, "theorem.identity", secs));
  report_line(6, "contraction and revision postulates",
              Postulates(report, {"contraction.", "revision."}, true));
  report_line(7, "observation witnesses", ObservationWitnesses());
  report_line(8, "classical oracle equivalence", ClassicalOracle());
  report_line(9, "supplementary postulates", Postulates(report, {"supplementary."}, false));

  std::printf("%d of 9 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
