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

// Association links between propositions and the attributive beliefs they
// induce.
//
// An Interpretation maps literals to (trigger, revealed) pairs.  Assoc lifts
// it to arbitrary formulas relative to a context: the model set of a closed
// belief set.  Cond turns Assoc(P) into belief triplets P(trigger, revealed).
//
// Pairs and triplets are identified semantically: two triplets are the same
// when their subjects, triggers and revealed formulas are pairwise
// equivalent.  The first formula seen is kept for display.

#ifndef LATENTBR_ASSOCIATION_HPP_
#define LATENTBR_ASSOCIATION_HPP_

#include <memory>
#include <string>
#include <vector>

#include "latentbr/formula.hpp"
#include "latentbr/logic.hpp"
#include "latentbr/model_set.hpp"

namespace latentbr {

struct AssocPair {
  Formula trigger;
  Formula revealed;
};

// subject(trigger, revealed): revealed becomes part of subject once trigger
// is believed.
struct BeliefTriplet {
  Formula subject;
  Formula trigger;
  Formula revealed;
};

std::string PrintTriplet(const BeliefTriplet& t, const Universe& u);

// Semantically deduplicated, canonically ordered set of triplets.
class TripletSet {
 public:
  struct Item {
    BeliefTriplet triplet;
    ModelSet subject;
    ModelSet trigger;
    ModelSet revealed;
  };

  TripletSet() = default;

  // Returns false if an equivalent triplet is already present.
  bool insert(const Logic& logic, const BeliefTriplet& t);
  bool insert(Item item);
  void insert_all(const TripletSet& other);

  bool contains(const Item& item) const;
  bool subset_of(const TripletSet& other) const;
  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  const std::vector<Item>& items() const { return items_; }

  friend bool operator==(const TripletSet& a, const TripletSet& b);
  friend bool operator!=(const TripletSet& a, const TripletSet& b) {
    return !(a == b);
  }

 private:
  std::vector<Item> items_;
};

// The interpretation map from literals to pairs, plus the finite set of
// formulas over which Cond is enumerated when closing belief sets.
class Interpretation {
 public:
  struct Entry {
    Formula literal;  // canonical literal
    AssocPair pair;
  };
  struct PoolEntry {
    Formula formula;  // canonical
    ModelSet models;
  };

  explicit Interpretation(LogicPtr logic, std::vector<Entry> entries = {});

  const LogicPtr& logic() const { return logic_; }
  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  // Pairs attached to a literal (compared after canonicalization).
  std::vector<AssocPair> lookup(const Formula& literal) const;

  // Canonical formulas whose Cond is collected into every belief set: the
  // literal keys, the subformulas of linked formulas that mention a key, and
  // the pairwise conjunctions and disjunctions of those.  Equivalent
  // formulas are merged, keeping the first; tautologies and contradictions
  // are dropped.  Formulas that mention no key literal have no associations
  // and are never needed.
  const std::vector<PoolEntry>& pool() const { return pool_; }

 private:
  void BuildPool();

  LogicPtr logic_;
  std::vector<Entry> entries_;
  std::vector<PoolEntry> pool_;
};

using InterpretationPtr = std::shared_ptr<const Interpretation>;

InterpretationPtr MakeInterpretation(LogicPtr logic,
                                     std::vector<Interpretation::Entry> entries = {});

// (I, X, Assoc): Assoc itself is derived on demand, never stored.
struct AssociationTuple {
  InterpretationPtr interp;
  ModelSet context;  // models of X

  bool holds(const Formula& f) const;  // f in X
};

// Value of Assoc(P): a finite set of pairs, or the distinguished all-pairs
// value of an inconsistent P.
class AssocValue {
 public:
  static AssocValue AllPairs();
  AssocValue() = default;

  bool all_pairs() const { return all_pairs_; }
  const std::vector<AssocPair>& pairs() const { return pairs_; }

  // Adds unless an equivalent pair is present.
  void add(const Logic& logic, const AssocPair& p);

 private:
  bool all_pairs_ = false;
  std::vector<AssocPair> pairs_;
};

// Q in Exc(P): P entails Q or Q entails P.
bool InExc(const Logic& logic, const Formula& p, const Formula& q);

AssocValue Assoc(const AssociationTuple& tuple, const Formula& p);

// Empty for tautologies, contradictions and the all-pairs value.
std::vector<BeliefTriplet> Cond(const AssociationTuple& tuple, const Formula& p);

struct InterpretationViolation {
  Formula literal;
  AssocPair pair;
  bool trigger_excluded;
  bool revealed_excluded;
};

// Every entry whose trigger or revealed formula lies in Exc of its literal.
std::vector<InterpretationViolation> ValidateInterpretation(
    const Interpretation& interp);

}  // namespace latentbr

#endif  // LATENTBR_ASSOCIATION_HPP_
