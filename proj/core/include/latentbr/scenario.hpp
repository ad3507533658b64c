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

// Line-oriented scenario files:
//
//   atoms p1 p2 ...
//   assoc <literal>: (<formula>, <formula>)
//   item <name> essence <formula>
//   attr <name>: (<formula>, <formula>)
//   event expand|contract|revise <name> [select all | prefer <f>, <f>, ...]
//   print <f> <f> ...            (or comma separated)
//
// '#' starts a comment.  `atoms` must precede everything that mentions a
// formula.

#ifndef LATENTBR_SCENARIO_HPP_
#define LATENTBR_SCENARIO_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "latentbr/belief.hpp"
#include "latentbr/operators.hpp"

namespace latentbr {

class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

enum class EventOp { kExpand, kContract, kRevise };

std::string ToString(EventOp op);

struct ScenarioEvent {
  int line = 0;
  EventOp op = EventOp::kExpand;
  std::string item;
  std::string selection_text;  // "all" or "prefer f, f"
  Selection selection;
};

struct Scenario {
  LogicPtr logic;
  InterpretationPtr interp;
  std::vector<ExternalInfo> items;
  std::vector<ScenarioEvent> events;
  std::vector<Formula> print_basis;

  const ExternalInfo& item(const std::string& name) const;
};

Scenario ParseScenario(std::string_view text, int max_atoms = kDefaultMaxAtoms);
Scenario LoadScenario(const std::string& path, int max_atoms = kDefaultMaxAtoms);

// Parses "all" or "prefer f, f, ..." (the text after `select` / before it).
Selection ParseSelection(const std::string& text, const Logic& logic);

struct TraceEvent {
  int step = 0;
  EventOp op = EventOp::kExpand;
  std::string info;
  std::string selection_text;
  std::vector<Formula> newly_visible;
  std::vector<Firing> triggered;  // in firing order
  bool consistent = true;
};

struct RunResult {
  BeliefSet final_set;
  std::vector<TraceEvent> trace;
};

// Throws WorkLimitExceeded; `partial` (if given) then holds the events
// completed so far.
RunResult Run(const Scenario& scenario, const Limits& limits = {},
              std::vector<TraceEvent>* partial = nullptr);

// Re-applies the operators named by a trace.
BeliefSet Replay(const Scenario& scenario, const std::vector<TraceEvent>& trace,
                 const Limits& limits = {});

struct Snapshot {
  bool consistent = true;
  std::vector<Formula> members;  // basis order
  std::vector<BeliefTriplet> triggered;
  std::vector<BeliefTriplet> latent;
};

Snapshot TakeSnapshot(const BeliefSet& bs, const std::vector<Formula>& basis);

std::string SnapshotText(const Snapshot& snap, const Universe& u);
std::string TraceText(const std::vector<TraceEvent>& trace, const Universe& u);

// JSON document {"schema": 1, "atoms", "steps", "final"}.
std::string RunJson(const Scenario& scenario, const RunResult& result, int indent = 2);

}  // namespace latentbr

#endif  // LATENTBR_SCENARIO_HPP_
