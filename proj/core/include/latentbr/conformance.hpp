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

// Randomized postulate checking.
//
// Generate() builds a small instance from a seed.  CheckAll() runs every
// operator on it under SelectAll and three seeded pre-orders and tallies
// one verdict per postulate and selection.  A postulate whose antecedent
// does not hold counts as not applicable; the hit rate of each conditional
// postulate is reported so that vacuous passes stay visible.

#ifndef LATENTBR_CONFORMANCE_HPP_
#define LATENTBR_CONFORMANCE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latentbr/belief.hpp"
#include "latentbr/operators.hpp"

namespace latentbr {

struct Bounds {
  int atoms = 4;
  int base_formulas = 4;
  int assoc_entries = 4;
  int depth = 3;
};

struct ScenarioInstance {
  std::uint64_t seed = 0;
  Bounds bounds;
  LogicPtr logic;
  InterpretationPtr interp;
  BeliefBase base;
  ExternalInfo info;
  // Second information for the Extensionality postulates: usually an
  // equivalent rewrite of `info`, sometimes unrelated.
  ExternalInfo paired;
  // Seeds of the three random pre-orders.
  std::vector<std::uint64_t> preorder_seeds;
};

ScenarioInstance Generate(std::uint64_t seed, const Bounds& bounds = {});

// The instance as text in the scenario grammar.
std::string Describe(const ScenarioInstance& inst);

struct Witness {
  std::uint64_t seed = 0;
  std::string selection;
  std::string detail;
};

struct Tally {
  std::string name;
  bool conditional = false;
  std::uint64_t checked = 0;  // (instance, selection) pairs evaluated
  std::uint64_t fired = 0;    // antecedent held
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::vector<Witness> witnesses;  // failures, capped

  double hit_rate() const {
    return checked == 0 ? 0.0 : static_cast<double>(fired) / static_cast<double>(checked);
  }
};

class ConformanceReport {
 public:
  static constexpr std::size_t kMaxWitnesses = 5;

  // Records one evaluation.  `witness` is consulted only on failure.
  void Record(const std::string& name, bool conditional, bool fired, bool holds,
              std::uint64_t seed, const std::string& selection,
              const std::string& detail);
  void RecordOverflow(std::uint64_t seed);
  void CountInstance() { ++instances_; }

  void Merge(const ConformanceReport& other);

  const std::vector<Tally>& tallies() const { return tallies_; }
  const Tally* find(const std::string& name) const;
  std::uint64_t instances() const { return instances_; }
  const std::vector<std::uint64_t>& overflows() const { return overflows_; }
  bool all_passed() const;

  std::string Json(int indent = 2) const;

 private:
  Tally& Get(const std::string& name, bool conditional);

  std::vector<Tally> tallies_;
  std::uint64_t instances_ = 0;
  std::vector<std::uint64_t> overflows_;
};

// Evaluates every postulate and both theorems on one instance.
ConformanceReport CheckAll(const ScenarioInstance& inst, const Limits& limits = {});

// Seeds [first, first + count).
ConformanceReport CheckSeeds(std::uint64_t first, std::uint64_t count,
                             const Bounds& bounds, const Limits& limits = {});

struct ObservationWitness {
  std::uint64_t seed = 0;
  std::string instance;  // scenario text
  std::string detail;
};

struct ObservationSearch {
  std::uint64_t searched = 0;
  std::optional<ObservationWitness> no_gratuitous_recovery;  // Cn(B) not in (B - P) + P
  std::optional<ObservationWitness> no_levi_identity;        // B * P != (B - ~P) + P
  std::optional<ObservationWitness> latent_inconsistency;    // consistent inputs, inconsistent revision
};

// Tries seeds 0, 1, ... up to `budget` until every observation has a
// witness.  The latent inconsistency search starts from the known instance.
ObservationSearch FindObservationWitnesses(const Bounds& bounds, std::uint64_t budget,
                                           const Limits& limits = {});

std::string ObservationJson(const ObservationSearch& search, int indent = 2);

// The fixed instance: base p0 & ~p2, I(p0) = {(p1, p2)}, information p1.
ScenarioInstance LatentConflictInstance();

// Per-instance checks exposed for tests.
bool ShowsNoGratuitousRecovery(const ScenarioInstance& inst, const Limits& limits = {});
bool ShowsNoLeviIdentity(const ScenarioInstance& inst, const Limits& limits = {});
bool ShowsLatentInconsistency(const ScenarioInstance& inst, const Limits& limits = {});

}  // namespace latentbr

#endif  // LATENTBR_CONFORMANCE_HPP_
