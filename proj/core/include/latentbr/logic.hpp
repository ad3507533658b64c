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

// Classical semantics over a bounded universe, decided by model enumeration.

#ifndef LATENTBR_LOGIC_HPP_
#define LATENTBR_LOGIC_HPP_

#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>

#include "latentbr/formula.hpp"
#include "latentbr/model_set.hpp"

namespace latentbr {

inline constexpr int kDefaultMaxAtoms = 16;

class UniverseTooLarge : public std::runtime_error {
 public:
  UniverseTooLarge(std::size_t atoms, int bound);
};

// A universe plus a memo of formula model sets.  Logic objects are shared
// through std::shared_ptr<const Logic>; the memo is internally synchronized.
class Logic {
 public:
  explicit Logic(Universe universe, int max_atoms = kDefaultMaxAtoms);

  const Universe& universe() const { return universe_; }
  int atoms() const { return atoms_; }

  ModelSet all() const { return ModelSet::Full(atoms_); }
  ModelSet none() const { return ModelSet::Empty(atoms_); }

  ModelSet models(const Formula& f) const;
  // Models of the conjunction; all() for an empty span.
  ModelSet models(std::span<const Formula> fs) const;

  bool entails(std::span<const Formula> premises, const Formula& f) const;
  bool entails(const Formula& premise, const Formula& f) const;
  bool equivalent(const Formula& a, const Formula& b) const;
  bool tautology(const Formula& f) const;
  bool contradiction(const Formula& f) const;
  // True iff the conjunction of fs has a model.
  bool consistent(std::span<const Formula> fs) const;

  Formula parse(std::string_view text) const { return Parse(text, universe_); }
  std::string print(const Formula& f) const { return Print(f, universe_); }

 private:
  ModelSet Evaluate(const Formula& f) const;

  Universe universe_;
  int atoms_;
  mutable std::mutex mu_;
  mutable std::unordered_map<Formula, ModelSet, FormulaHash> memo_;
};

using LogicPtr = std::shared_ptr<const Logic>;

LogicPtr MakeLogic(std::vector<std::string> atom_names,
                   int max_atoms = kDefaultMaxAtoms);

// The literal reading of consistency: no formula occurs together with its
// negation, comparing canonical forms.
bool IsConsistentSyntactic(std::span<const Formula> fs);

}  // namespace latentbr

#endif  // LATENTBR_LOGIC_HPP_
