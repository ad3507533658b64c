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

#include "latentbr/belief.hpp"

#include <algorithm>

namespace latentbr {

TripletSet TripletsFor(const Interpretation& interp, const ModelSet& models,
                       const TripletSet& store) {
  const Logic& logic = *interp.logic();
  TripletSet out;
  for (const TripletSet::Item& item : store.items()) {
    if (models.subset_of(item.subject)) out.insert(item);
  }
  if (interp.empty()) return out;

  // Cond needs the tuple to own a shared pointer; the interpretation is
  // always held through one, so alias it without taking ownership.
  const AssociationTuple tuple{
      InterpretationPtr(InterpretationPtr(), &interp), models};
  for (const Interpretation::PoolEntry& entry : interp.pool()) {
    if (!models.subset_of(entry.models)) continue;
    for (const BeliefTriplet& t : Cond(tuple, entry.formula)) {
      out.insert(TripletSet::Item{t, entry.models, logic.models(t.trigger),
                                  logic.models(t.revealed)});
    }
  }
  return out;
}

namespace {

bool Fires(const ModelSet& models, const TripletSet::Item& item) {
  return models.subset_of(item.trigger) && !models.subset_of(item.revealed);
}

}  // namespace

bool IsFixpoint(const Interpretation& interp, const ModelSet& models,
                const TripletSet& store) {
  const TripletSet ts = TripletsFor(interp, models, store);
  return std::none_of(ts.items().begin(), ts.items().end(),
                      [&](const TripletSet::Item& i) { return Fires(models, i); });
}

BeliefSet BeliefSet::Empty(InterpretationPtr interp) {
  ModelSet all = interp->logic()->all();
  return Close(std::move(interp), std::move(all), TripletSet());
}

BeliefSet BeliefSet::Close(InterpretationPtr interp, ModelSet models,
                           TripletSet store, std::vector<Firing>* firings) {
  for (int iteration = 0;; ++iteration) {
    TripletSet ts = TripletsFor(*interp, models, store);
    std::vector<const TripletSet::Item*> fired;
    for (const TripletSet::Item& item : ts.items()) {
      if (Fires(models, item)) fired.push_back(&item);
    }
    if (fired.empty()) {
      return BeliefSet(std::move(interp), std::move(models), std::move(store),
                       std::move(ts));
    }
    for (const TripletSet::Item* item : fired) {
      models &= item->revealed;
      if (firings != nullptr) firings->push_back(Firing{iteration, *item});
    }
  }
}

BeliefSet BeliefSet::Close(InterpretationPtr interp, const BeliefBase& base,
                           std::vector<Firing>* firings) {
  const Logic& logic = *interp->logic();
  ModelSet models = logic.models(base.explicit_formulas);
  TripletSet store = MakeStore(logic, base.triplets);
  return Close(std::move(interp), std::move(models), std::move(store), firings);
}

BeliefSet BeliefSet::Unchecked(InterpretationPtr interp, ModelSet models,
                               TripletSet store, TripletSet triplets) {
  return BeliefSet(std::move(interp), std::move(models), std::move(store),
                   std::move(triplets));
}

bool BeliefSet::member(const Formula& f) const {
  return models_.subset_of(logic().models(f));
}

bool BeliefSet::adequate() const {
  return std::all_of(triplets_.items().begin(), triplets_.items().end(),
                     [&](const TripletSet::Item& i) { return member(i.subject); });
}

bool BeliefSet::closed() const {
  return Close(interp_, models_, store_) == *this;
}

bool BeliefSet::subset_of(const BeliefSet& other) const {
  return other.models_.subset_of(models_) && triplets_.subset_of(other.triplets_);
}

std::vector<Formula> Visible(const BeliefSet& bs, const ExternalInfo& info) {
  std::vector<Formula> out{info.essence};
  for (const BeliefTriplet& t : info.attributes) {
    if (bs.member(t.trigger)) out.push_back(t.revealed);
  }
  return out;
}

std::vector<Formula> VisibleNeg(const std::vector<Formula>& visible) {
  std::vector<Formula> out;
  out.reserve(visible.size());
  for (const Formula& f : visible) out.push_back(Negate(f));
  return out;
}

TripletSet MakeStore(const Logic& logic, const std::vector<BeliefTriplet>& ts) {
  TripletSet store;
  for (const BeliefTriplet& t : ts) store.insert(logic, t);
  return store;
}

TripletPartition Partition(const BeliefSet& bs) {
  TripletPartition out;
  for (const TripletSet::Item& i : bs.triplets().items()) {
    (bs.member(i.trigger) ? out.triggered : out.latent).push_back(i.triplet);
  }
  return out;
}

}  // namespace latentbr
