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

#include "latentbr/logic.hpp"

#include <unordered_set>

namespace latentbr {

UniverseTooLarge::UniverseTooLarge(std::size_t atoms, int bound)
    : std::runtime_error("universe of " + std::to_string(atoms) +
                         " atoms exceeds the bound of " + std::to_string(bound)) {}

Logic::Logic(Universe universe, int max_atoms)
    : universe_(std::move(universe)), atoms_(static_cast<int>(universe_.size())) {
  if (universe_.size() > static_cast<std::size_t>(max_atoms)) {
    throw UniverseTooLarge(universe_.size(), max_atoms);
  }
}

ModelSet Logic::Evaluate(const Formula& f) const {
  switch (f.op()) {
    case Op::kTop:
      return all();
    case Op::kBot:
      return none();
    case Op::kAtom:
      if (f.atom() >= atoms_) throw std::out_of_range("atom outside universe");
      return ModelSet::AtomTrue(atoms_, f.atom());
    case Op::kNeg:
      return models(f.child()).complement();
    case Op::kAnd:
      return models(f.lhs()) & models(f.rhs());
    case Op::kOr:
      return models(f.lhs()) | models(f.rhs());
  }
  return none();
}

ModelSet Logic::models(const Formula& f) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(f);
    if (it != memo_.end()) return it->second;
  }
  ModelSet result = Evaluate(f);
  std::lock_guard<std::mutex> lock(mu_);
  memo_.emplace(f, result);
  return result;
}

ModelSet Logic::models(std::span<const Formula> fs) const {
  ModelSet m = all();
  for (const Formula& f : fs) m &= models(f);
  return m;
}

bool Logic::entails(std::span<const Formula> premises, const Formula& f) const {
  return models(premises).subset_of(models(f));
}

bool Logic::entails(const Formula& premise, const Formula& f) const {
  return models(premise).subset_of(models(f));
}

bool Logic::equivalent(const Formula& a, const Formula& b) const {
  return models(a) == models(b);
}

bool Logic::tautology(const Formula& f) const { return models(f).full(); }

bool Logic::contradiction(const Formula& f) const { return models(f).empty(); }

bool Logic::consistent(std::span<const Formula> fs) const {
  return !models(fs).empty();
}

LogicPtr MakeLogic(std::vector<std::string> atom_names, int max_atoms) {
  return std::make_shared<const Logic>(Universe(std::move(atom_names)), max_atoms);
}

bool IsConsistentSyntactic(std::span<const Formula> fs) {
  std::unordered_set<Formula, FormulaHash> canon;
  for (const Formula& f : fs) canon.insert(Canonical(f));
  for (const Formula& f : canon) {
    if (canon.count(Canonical(Negate(f))) != 0) return false;
  }
  return true;
}

}  // namespace latentbr
