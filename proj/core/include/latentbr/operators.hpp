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

// Expansion, partial meet package contraction and revision.
//
// Remainders are closed subsets C of a belief set B (model sets M_C that
// contain M_B) such that
//
//   1. no non-tautological visible formula is a member of C,
//   2. C is maximal: no closed set strictly between C and B satisfies 1,
//   3. closing C together with the visible formulas that are members of B
//      gives back B.
//
// Two independent procedures compute them.  Remainders() walks every model
// set between M_B and the full set in order of size.  SearchRemainders()
// starts at M_B and only adds models that repair a violated condition.
// Contract() uses the second; the first exists to check it.

#ifndef LATENTBR_OPERATORS_HPP_
#define LATENTBR_OPERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "latentbr/belief.hpp"

namespace latentbr {

// Formulas plus triplets, both taken verbatim.  Contracting by a package
// removes exactly its formulas; expanding by one adds both parts.
struct Package {
  std::vector<Formula> formulas;
  std::vector<BeliefTriplet> triplets;
};

struct Limits {
  // Model sets visited by either remainder procedure.
  std::size_t max_states = std::size_t{1} << 20;
};

class WorkLimitExceeded : public std::runtime_error {
 public:
  explicit WorkLimitExceeded(std::size_t limit);
};

class Selection {
 public:
  enum class Kind { kAll, kExplicit, kPreOrder };
  using Chooser =
      std::function<std::vector<std::size_t>(const std::vector<BeliefSet>&)>;
  // Higher keys rank higher; keys compare lexicographically.
  using RankFn = std::function<std::vector<std::int64_t>(const BeliefSet&)>;

  static Selection All();
  static Selection Explicit(Chooser chooser, std::string description = "explicit");
  static Selection PreOrder(RankFn rank, std::string description);
  // Sets retaining an earlier listed formula rank higher; ties are broken
  // by the number of listed formulas retained.
  static Selection Prefer(std::vector<Formula> formulas, std::string description);
  // A seeded total pre-order with `classes` rank levels.
  static Selection Random(std::uint64_t seed, int classes);

  Kind kind() const { return kind_; }
  const std::string& description() const { return description_; }

  // Nonempty subset of a nonempty delta.
  std::vector<BeliefSet> choose(const std::vector<BeliefSet>& delta) const;

 private:
  Kind kind_ = Kind::kAll;
  std::string description_ = "all";
  Chooser chooser_;
  RankFn rank_;
};

BeliefSet Expand(const BeliefSet& bs, const ExternalInfo& info,
                 std::vector<Firing>* firings = nullptr);
BeliefSet Expand(const BeliefSet& bs, const Package& pkg,
                 std::vector<Firing>* firings = nullptr);

// Exhaustive enumeration of the remainders of bs for `visible`.  Empty when
// every visible formula is a tautology.
std::vector<BeliefSet> Remainders(const BeliefSet& bs,
                                  const std::vector<Formula>& visible,
                                  const Limits& limits = {});
std::vector<BeliefSet> Remainders(const BeliefSet& bs, const ExternalInfo& info,
                                  const Limits& limits = {});

// Repair-guided search for the same sets.
std::vector<BeliefSet> SearchRemainders(const BeliefSet& bs,
                                        const std::vector<Formula>& visible,
                                        const Limits& limits = {});

// gamma: {fallback} for an empty delta.
std::vector<BeliefSet> Select(const Selection& sel,
                              const std::vector<BeliefSet>& delta,
                              const BeliefSet& fallback);

// Intersection of belief sets sharing one store, closed again.
BeliefSet Meet(const std::vector<BeliefSet>& sets);

BeliefSet Contract(const BeliefSet& bs, const std::vector<Formula>& visible,
                   const Selection& sel, const Limits& limits = {});
BeliefSet Contract(const BeliefSet& bs, const ExternalInfo& info,
                   const Selection& sel, const Limits& limits = {});

// Contract by the negated visible formulas, then expand by the visible
// formulas and the package triplets.
BeliefSet Revise(const BeliefSet& bs, const Package& visible_pkg,
                 const Selection& sel, const Limits& limits = {},
                 std::vector<Firing>* firings = nullptr);
BeliefSet Revise(const BeliefSet& bs, const ExternalInfo& info,
                 const Selection& sel, const Limits& limits = {},
                 std::vector<Firing>* firings = nullptr);

enum class Side { kLeft, kRight };

// `visible` with every element structurally equal to `conj` replaced by its
// chosen conjunct.  Throws std::invalid_argument when `conj` is not a
// conjunction occurring in `visible`.
std::vector<Formula> SubstituteConjunct(const std::vector<Formula>& visible,
                                        const Formula& conj, Side side);
std::vector<Formula> SubstituteConjunct(const BeliefSet& bs,
                                        const ExternalInfo& info,
                                        const Formula& conj, Side side);

}  // namespace latentbr

#endif  // LATENTBR_OPERATORS_HPP_
