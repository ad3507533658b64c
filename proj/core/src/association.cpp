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

#include "latentbr/association.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_set>

namespace latentbr {

std::string PrintTriplet(const BeliefTriplet& t, const Universe& u) {
  std::string subject = Print(t.subject, u);
  if (!t.subject.is_literal() && t.subject.op() != Op::kTop &&
      t.subject.op() != Op::kBot) {
    subject = "(" + subject + ")";
  }
  return subject + "(" + Print(t.trigger, u) + ", " + Print(t.revealed, u) + ")";
}

// ---------------------------------------------------------------------------
// TripletSet

namespace {

bool KeyLess(const TripletSet::Item& a, const TripletSet::Item& b) {
  if (a.subject != b.subject) return a.subject < b.subject;
  if (a.trigger != b.trigger) return a.trigger < b.trigger;
  return a.revealed < b.revealed;
}

bool KeyEqual(const TripletSet::Item& a, const TripletSet::Item& b) {
  return a.subject == b.subject && a.trigger == b.trigger &&
         a.revealed == b.revealed;
}

}  // namespace

bool TripletSet::insert(const Logic& logic, const BeliefTriplet& t) {
  return insert(Item{t, logic.models(t.subject), logic.models(t.trigger),
                     logic.models(t.revealed)});
}

bool TripletSet::insert(Item item) {
  auto it = std::lower_bound(items_.begin(), items_.end(), item, KeyLess);
  if (it != items_.end() && KeyEqual(*it, item)) return false;
  items_.insert(it, std::move(item));
  return true;
}

void TripletSet::insert_all(const TripletSet& other) {
  for (const Item& item : other.items_) insert(item);
}

bool TripletSet::contains(const Item& item) const {
  auto it = std::lower_bound(items_.begin(), items_.end(), item, KeyLess);
  return it != items_.end() && KeyEqual(*it, item);
}

bool TripletSet::subset_of(const TripletSet& other) const {
  return std::all_of(items_.begin(), items_.end(),
                     [&](const Item& i) { return other.contains(i); });
}

bool operator==(const TripletSet& a, const TripletSet& b) {
  return a.items_.size() == b.items_.size() &&
         std::equal(a.items_.begin(), a.items_.end(), b.items_.begin(), KeyEqual);
}

// ---------------------------------------------------------------------------
// Interpretation

Interpretation::Interpretation(LogicPtr logic, std::vector<Entry> entries)
    : logic_(std::move(logic)), entries_(std::move(entries)) {
  for (Entry& e : entries_) {
    e.literal = Canonical(e.literal);
    if (!e.literal.is_literal()) {
      throw std::invalid_argument("association key '" + logic_->print(e.literal) +
                                  "' is not a literal");
    }
  }
  BuildPool();
}

std::vector<AssocPair> Interpretation::lookup(const Formula& literal) const {
  const Formula key = Canonical(literal);
  std::vector<AssocPair> out;
  for (const Entry& e : entries_) {
    if (e.literal == key) out.push_back(e.pair);
  }
  return out;
}

namespace {

bool MentionsAny(const Formula& f,
                 const std::unordered_set<Formula, FormulaHash>& literals) {
  if (literals.count(f) != 0) return true;
  switch (f.op()) {
    case Op::kNeg:
      return false;  // in NNF a negation is a literal, handled above
    case Op::kAnd:
    case Op::kOr:
      return MentionsAny(f.lhs(), literals) || MentionsAny(f.rhs(), literals);
    default:
      return false;
  }
}

}  // namespace

void Interpretation::BuildPool() {
  if (entries_.empty()) return;
  std::unordered_set<Formula, FormulaHash> keys;
  for (const Entry& e : entries_) keys.insert(e.literal);

  std::vector<Formula> seeds;
  std::unordered_set<Formula, FormulaHash> seen;
  auto add_seed = [&](const Formula& f) {
    if (MentionsAny(f, keys) && seen.insert(f).second) seeds.push_back(f);
  };
  for (const Entry& e : entries_) add_seed(e.literal);
  for (const Entry& e : entries_) {
    for (const Formula* f : {&e.pair.trigger, &e.pair.revealed}) {
      for (const Formula& sub : Subformulas(Canonical(*f))) add_seed(sub);
    }
  }

  std::vector<Formula> candidates = seeds;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    for (std::size_t j = i + 1; j < seeds.size(); ++j) {
      candidates.push_back(Canonical(Formula::And(seeds[i], seeds[j])));
      candidates.push_back(Canonical(Formula::Or(seeds[i], seeds[j])));
    }
  }

  std::unordered_set<ModelSet, ModelSetHash> classes;
  for (const Formula& f : candidates) {
    ModelSet m = logic_->models(f);
    if (m.empty() || m.full()) continue;
    if (!classes.insert(m).second) continue;
    pool_.push_back(PoolEntry{f, std::move(m)});
  }
}

InterpretationPtr MakeInterpretation(LogicPtr logic,
                                     std::vector<Interpretation::Entry> entries) {
  return std::make_shared<const Interpretation>(std::move(logic), std::move(entries));
}

// ---------------------------------------------------------------------------
// Assoc

bool AssociationTuple::holds(const Formula& f) const {
  return context.subset_of(interp->logic()->models(f));
}

AssocValue AssocValue::AllPairs() {
  AssocValue v;
  v.all_pairs_ = true;
  return v;
}

void AssocValue::add(const Logic& logic, const AssocPair& p) {
  if (all_pairs_) return;
  const ModelSet t = logic.models(p.trigger);
  const ModelSet r = logic.models(p.revealed);
  for (const AssocPair& q : pairs_) {
    if (logic.models(q.trigger) == t && logic.models(q.revealed) == r) return;
  }
  pairs_.push_back(p);
}

bool InExc(const Logic& logic, const Formula& p, const Formula& q) {
  const ModelSet mp = logic.models(p);
  const ModelSet mq = logic.models(q);
  return mp.subset_of(mq) || mq.subset_of(mp);
}

namespace {

class AssocEvaluator {
 public:
  explicit AssocEvaluator(const AssociationTuple& tuple)
      : tuple_(tuple), logic_(*tuple.interp->logic()) {}

  // Top-level value, with the tautology and inconsistency checks first.
  AssocValue Eval(const Formula& nnf) {
    const ModelSet m = logic_.models(nnf);
    if (m.full()) return AssocValue();
    if (m.empty()) return AssocValue::AllPairs();
    return Structural(nnf);
  }

 private:
  bool InX(const Formula& f) const { return tuple_.holds(f); }

  // (U) restricted to pairs with neither side in Exc(conj).
  AssocValue Filter(const AssocValue& v, const Formula& conj) {
    if (v.all_pairs()) return v;
    AssocValue out;
    for (const AssocPair& p : v.pairs()) {
      if (!InExc(logic_, conj, p.trigger) && !InExc(logic_, conj, p.revealed)) {
        out.add(logic_, p);
      }
    }
    return out;
  }

  AssocValue Union(const AssocValue& a, const AssocValue& b) {
    if (a.all_pairs() || b.all_pairs()) return AssocValue::AllPairs();
    AssocValue out = a;
    for (const AssocPair& p : b.pairs()) out.add(logic_, p);
    return out;
  }

  AssocValue Structural(const Formula& f) {
    switch (f.op()) {
      case Op::kTop:
        return AssocValue();
      case Op::kBot:
        return AssocValue::AllPairs();
      case Op::kAtom:
      case Op::kNeg: {
        AssocValue v;
        for (const AssocPair& p : tuple_.interp->lookup(f)) v.add(logic_, p);
        return v;
      }
      case Op::kAnd:
        return Filter(Union(Eval(f.lhs()), Eval(f.rhs())), f);
      case Op::kOr:
        return Disjunction(f.lhs(), f.rhs());
    }
    return AssocValue();
  }

  AssocValue Disjunction(const Formula& a, const Formula& b) {
    // A contradictory disjunct contributes nothing: its negation is a
    // tautology and therefore in X, which is the one-sided case.
    if (logic_.contradiction(a)) return Eval(b);
    if (logic_.contradiction(b)) return Eval(a);
    const Formula conj = Formula::And(a, b);
    const bool a_in = InX(a);
    const bool b_in = InX(b);
    if (a_in && b_in) return Eval(conj);
    const bool not_a = InX(Negate(a));
    const bool not_b = InX(Negate(b));
    // Both negations held: either one-sided reading applies, so keep the
    // pairs they agree on.
    if (not_a && not_b) return Agreed(Eval(a), Eval(b), conj);
    if (not_b) return Eval(a);
    if (not_a) return Eval(b);
    // One disjunct held, the other undetermined.
    if (a_in) return Filter(Eval(a), conj);
    if (b_in) return Filter(Eval(b), conj);
    return Agreed(Eval(a), Eval(b), conj);
  }

  // Pairs (Px, Py) with (Pa, PA) from one side and (Pb, PB) from the other
  // such that Pa and Pb are equivalent, one of PA / PB entails the other,
  // Px = Pa and Py is the weaker of the two.
  AssocValue Agreed(const AssocValue& left, const AssocValue& right,
                    const Formula& conj) {
    if (left.all_pairs() && right.all_pairs()) return AssocValue::AllPairs();
    if (left.all_pairs()) return Filter(right, conj);
    if (right.all_pairs()) return Filter(left, conj);
    AssocValue out;
    for (const AssocPair& l : left.pairs()) {
      for (const AssocPair& r : right.pairs()) {
        if (!logic_.equivalent(l.trigger, r.trigger)) continue;
        const bool r_weaker = logic_.entails(l.revealed, r.revealed);
        const bool l_weaker = logic_.entails(r.revealed, l.revealed);
        if (!r_weaker && !l_weaker) continue;
        AssocPair p{l.trigger, r_weaker ? r.revealed : l.revealed};
        if (!InExc(logic_, conj, p.trigger) && !InExc(logic_, conj, p.revealed)) {
          out.add(logic_, p);
        }
      }
    }
    return out;
  }

  const AssociationTuple& tuple_;
  const Logic& logic_;
};

}  // namespace

AssocValue Assoc(const AssociationTuple& tuple, const Formula& p) {
  return AssocEvaluator(tuple).Eval(Nnf(p));
}

std::vector<BeliefTriplet> Cond(const AssociationTuple& tuple, const Formula& p) {
  const Logic& logic = *tuple.interp->logic();
  std::vector<BeliefTriplet> out;
  if (tuple.interp->empty() || logic.tautology(p) || logic.contradiction(p)) {
    return out;
  }
  const AssocValue v = Assoc(tuple, p);
  if (v.all_pairs()) return out;
  for (const AssocPair& pair : v.pairs()) {
    out.push_back(BeliefTriplet{p, pair.trigger, pair.revealed});
  }
  return out;
}

std::vector<InterpretationViolation> ValidateInterpretation(
    const Interpretation& interp) {
  const Logic& logic = *interp.logic();
  std::vector<InterpretationViolation> out;
  for (const Interpretation::Entry& e : interp.entries()) {
    const bool t = InExc(logic, e.literal, e.pair.trigger);
    const bool r = InExc(logic, e.literal, e.pair.revealed);
    if (t || r) out.push_back(InterpretationViolation{e.literal, e.pair, t, r});
  }
  return out;
}

}  // namespace latentbr
