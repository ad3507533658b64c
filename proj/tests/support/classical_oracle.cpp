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

#include "classical_oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

using latentbr::Formula;
using latentbr::Op;

bool Holds(const Formula& f, World w) {
  switch (f.op()) {
    case Op::kTop:
      return true;
    case Op::kBot:
      return false;
    case Op::kAtom:
      return ((w >> f.atom()) & 1U) != 0;
    case Op::kNeg:
      return !Holds(f.child(), w);
    case Op::kAnd:
      return Holds(f.lhs(), w) && Holds(f.rhs(), w);
    case Op::kOr:
      return Holds(f.lhs(), w) || Holds(f.rhs(), w);
  }
  throw std::logic_error("unknown operator");
}

Table TruthTable(const Formula& f, int atoms) {
  Table t = 0;
  for (World w = 0; w < (1U << atoms); ++w) {
    if (Holds(f, w)) t |= Table{1} << w;
  }
  return t;
}

Formula WorldFormula(World w, int atoms) {
  Formula f = Formula::Top();
  for (int i = 0; i < atoms; ++i) {
    Formula lit = Formula::Atom(i);
    if (((w >> i) & 1U) == 0) lit = Formula::Neg(lit);
    f = i == 0 ? lit : Formula::And(f, lit);
  }
  return f;
}

Formula FromTable(Table table, int atoms) {
  Formula f = Formula::Bot();
  bool first = true;
  for (World w = 0; w < (1U << atoms); ++w) {
    if (((table >> w) & 1U) == 0) continue;
    f = first ? WorldFormula(w, atoms) : Formula::Or(f, WorldFormula(w, atoms));
    first = false;
  }
  return f;
}

Classical::Classical(int atoms) : atoms_(atoms) {
  if (atoms < 1 || atoms > 3) throw std::invalid_argument("oracle supports 1 to 3 atoms");
  const unsigned worlds = 1U << atoms;
  all_ = worlds == 32 ? ~Table{0} : (Table{1} << worlds) - 1;
  for (Table t = 0;; ++t) {
    props_.push_back(t);
    if (t == all_) break;
  }
}

Theory Classical::Cn(const std::vector<Table>& premises) const {
  Table worlds = all_;
  for (Table p : premises) worlds &= p;
  Theory out;
  for (Table q : props_) {
    if ((worlds & ~q) == 0) out.insert(q);
  }
  return out;
}

Table Classical::Worlds(const Theory& t) const {
  Table worlds = all_;
  for (Table p : t) worlds &= p;
  return worlds;
}

std::vector<Theory> Classical::Remainders(const Theory& k, Table p) const {
  // Every theory over a finite language is Cn of one proposition.
  std::set<Theory> candidates;
  for (Table q : props_) {
    Theory t = Cn({q});
    if (t.count(p) != 0) continue;
    if (!std::includes(k.begin(), k.end(), t.begin(), t.end())) continue;
    candidates.insert(std::move(t));
  }
  std::vector<Theory> out;
  for (const Theory& t : candidates) {
    const bool maximal = std::none_of(candidates.begin(), candidates.end(), [&](const Theory& u) {
      return u != t && std::includes(u.begin(), u.end(), t.begin(), t.end());
    });
    if (maximal) out.push_back(t);
  }
  return out;
}

Theory Classical::Contract(const Theory& k, Table p, const Rank& rank) const {
  std::vector<Theory> rem = Remainders(k, p);
  if (rem.empty()) return k;
  if (rank) {
    std::vector<std::vector<long>> keys;
    for (const Theory& t : rem) keys.push_back(rank(t));
    const std::vector<long> best = *std::max_element(keys.begin(), keys.end());
    std::vector<Theory> kept;
    for (std::size_t i = 0; i < rem.size(); ++i) {
      if (keys[i] == best) kept.push_back(rem[i]);
    }
    rem = std::move(kept);
  }
  Theory meet = rem.front();
  for (const Theory& t : rem) {
    Theory next;
    std::set_intersection(meet.begin(), meet.end(), t.begin(), t.end(),
                          std::inserter(next, next.end()));
    meet = std::move(next);
  }
  return meet;
}

Theory Classical::Revise(const Theory& k, Table p, const Rank& rank) const {
  const Table neg = all_ & ~p;
  Theory c = Contract(k, neg, rank);
  std::vector<Table> premises(c.begin(), c.end());
  premises.push_back(p);
  return Cn(premises);
}

std::vector<long> LevelKey(Table worlds, const std::vector<int>& levels, int classes) {
  std::vector<long> key(static_cast<std::size_t>(classes), 0);
  for (World w = 0; w < levels.size(); ++w) {
    if (((worlds >> w) & 1U) != 0) --key[static_cast<std::size_t>(classes - 1 - levels[w])];
  }
  return key;
}

}  // namespace oracle
