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

// Belief bases, closed belief sets and external information.
//
// A BeliefSet keeps pi0 extensionally as a model set.  Its triplets (pi1)
// are never stored independently: they are recomputed from the model set as
//
//   { t in store | subject(t) is a member }
//     u  Cond(F) for every pool formula F that is a member,
//
// where the store holds the triplets that arrived with external
// information.  Because the store keeps triplets whose subject has been
// contracted away, a triplet returns when its subject does.  The store is
// bookkeeping only and takes no part in equality.

#ifndef LATENTBR_BELIEF_HPP_
#define LATENTBR_BELIEF_HPP_

#include <string>
#include <vector>

#include "latentbr/association.hpp"
#include "latentbr/formula.hpp"
#include "latentbr/logic.hpp"
#include "latentbr/model_set.hpp"

namespace latentbr {

// A finite presentation (explicit formulas, triplets).
struct BeliefBase {
  std::vector<Formula> explicit_formulas;
  std::vector<BeliefTriplet> triplets;
};

// {P}^<>: one essence plus attributive triplets whose subject is the essence.
struct ExternalInfo {
  std::string name;
  Formula essence;
  std::vector<BeliefTriplet> attributes;
};

// One triplet whose revealed formula was added by the closure.
struct Firing {
  int iteration = 0;
  TripletSet::Item item;
};

class BeliefSet {
 public:
  // Cn((empty, empty)): tautologies only.
  static BeliefSet Empty(InterpretationPtr interp);

  // Least fixpoint reached from `models` with the given store.  Every
  // triplet whose trigger becomes a member while its revealed formula is
  // not yet one fires and narrows the model set.
  static BeliefSet Close(InterpretationPtr interp, ModelSet models,
                         TripletSet store, std::vector<Firing>* firings = nullptr);

  static BeliefSet Close(InterpretationPtr interp, const BeliefBase& base,
                         std::vector<Firing>* firings = nullptr);

  // Built without closing; for tests that need non-closed sets.
  static BeliefSet Unchecked(InterpretationPtr interp, ModelSet models,
                             TripletSet store, TripletSet triplets);

  const InterpretationPtr& interp() const { return interp_; }
  const Logic& logic() const { return *interp_->logic(); }
  const ModelSet& models() const { return models_; }
  const TripletSet& store() const { return store_; }
  const TripletSet& triplets() const { return triplets_; }

  bool member(const Formula& f) const;
  bool member(const ModelSet& f_models) const { return models_.subset_of(f_models); }
  bool consistent() const { return !models_.empty(); }
  // Every triplet's subject is a member.
  bool adequate() const;
  // Re-running the closure from this set changes nothing.
  bool closed() const;

  // The association tuple bound to this set.
  AssociationTuple tuple() const { return AssociationTuple{interp_, models_}; }

  // Members and triplets both included in `other`'s.
  bool subset_of(const BeliefSet& other) const;

  friend bool operator==(const BeliefSet& a, const BeliefSet& b) {
    return a.models_ == b.models_ && a.triplets_ == b.triplets_;
  }
  friend bool operator!=(const BeliefSet& a, const BeliefSet& b) {
    return !(a == b);
  }

 private:
  BeliefSet(InterpretationPtr interp, ModelSet models, TripletSet store,
            TripletSet triplets)
      : interp_(std::move(interp)),
        models_(std::move(models)),
        store_(std::move(store)),
        triplets_(std::move(triplets)) {}

  InterpretationPtr interp_;
  ModelSet models_;
  TripletSet store_;
  TripletSet triplets_;
};

// pi1 of the set with the given model set and store.
TripletSet TripletsFor(const Interpretation& interp, const ModelSet& models,
                       const TripletSet& store);

// True iff no triplet of TripletsFor(models, store) fires.
bool IsFixpoint(const Interpretation& interp, const ModelSet& models,
                const TripletSet& store);

// {essence} u {revealed(t) | t in attributes, trigger(t) a member of bs}.
std::vector<Formula> Visible(const BeliefSet& bs, const ExternalInfo& info);

// Element-wise negation, in negation normal form.
std::vector<Formula> VisibleNeg(const std::vector<Formula>& visible);

TripletSet MakeStore(const Logic& logic, const std::vector<BeliefTriplet>& ts);

// Triplets whose trigger is a member (visible) and those whose trigger is
// not (latent).
struct TripletPartition {
  std::vector<BeliefTriplet> triggered;
  std::vector<BeliefTriplet> latent;
};
TripletPartition Partition(const BeliefSet& bs);

}  // namespace latentbr

#endif  // LATENTBR_BELIEF_HPP_
