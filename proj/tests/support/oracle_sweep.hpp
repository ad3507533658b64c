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

// Exhaustive comparison of contraction and revision with the classical
// oracle, for an empty interpretation.

#ifndef LATENTBR_TESTS_ORACLE_SWEEP_HPP_
#define LATENTBR_TESTS_ORACLE_SWEEP_HPP_

#include <cstdint>
#include <string>

namespace oracle {

struct SweepResult {
  std::uint64_t instances = 0;  // (base, information, selection) triples
  std::uint64_t mismatches = 0;
  std::string first_mismatch;
};

// Every base of at most `max_base` propositions and every information
// proposition over `atoms` atoms, under SelectAll and `preorders` seeded
// world-level pre-orders.
SweepResult ClassicalSweep(int atoms, int max_base, int preorders, std::uint64_t seed);

}  // namespace oracle

#endif  // LATENTBR_TESTS_ORACLE_SWEEP_HPP_
