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

#include "latentbr/operators.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace latentbr {

WorkLimitExceeded::WorkLimitExceeded(std::size_t limit)
    : std::runtime_error("remainder computation exceeded the work limit of " +
                         std::to_string(limit) + " states") {}

// ---------------------------------------------------------------------------
// Selection

Selection Selection::All() { return Selection(); }

Selection Selection::Explicit(Chooser chooser, std::string description) {
  Selection s;
  s.kind_ = Kind::kExplicit;
  s.chooser_ = std::move(chooser);
  s.description_ = std::move(description);
  return s;
}

Selection Selection::PreOrder(RankFn rank, std::string description) {
  Selection s;
  s.kind_ = Kind::kPreOrder;
  s.rank_ = std::move(rank);
  s.description_ = std::move(description);
  return s;
}

Selection Selection::Prefer(std::vector<Formula> formulas, std::string description) {
  return PreOrder(
      [formulas = std::move(formulas)](const BeliefSet& bs) {
        std::int64_t first = -static_cast<std::int64_t>(formulas.size());
        std::int64_t count = 0;
        for (std::size_t i = formulas.size(); i-- > 0;) {
          if (bs.member(formulas[i])) {
            first = -static_cast<std::int64_t>(i);
            ++count;
          }
        }
        return std::vector<std::int64_t>{first, count};
      },
      std::move(description));
}

namespace {

std::uint64_t SplitMix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Selection Selection::Random(std::uint64_t seed, int classes) {
  if (classes < 1) throw std::invalid_argument("pre-order needs at least one class");
  // Each model gets a seeded level in [0, classes); a set ranks by how few
  // models it holds at each level, worst level first.
  return PreOrder(
      [seed, classes](const BeliefSet& bs) {
        std::vector<std::int64_t> key(static_cast<std::size_t>(classes), 0);
        bs.models().for_each([&](Model m) {
          const std::uint64_t level =
              SplitMix(SplitMix(seed) ^ static_cast<std::uint64_t>(m)) %
              static_cast<std::uint64_t>(classes);
          --key[static_cast<std::size_t>(classes - 1) - level];
        });
        return key;
      },
      "random(seed=" + std::to_string(seed) + ", classes=" +
          std::to_string(classes) + ")");
}

std::vector<BeliefSet> Selection::choose(const std::vector<BeliefSet>& delta) const {
  if (delta.empty()) return {};
  switch (kind_) {
    case Kind::kAll:
      return delta;
    case Kind::kExplicit: {
      std::vector<std::size_t> picked = chooser_(delta);
      std::sort(picked.begin(), picked.end());
      picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
      if (picked.empty() || picked.back() >= delta.size()) {
        throw std::invalid_argument("selection must pick a nonempty subset of the remainders");
      }
      std::vector<BeliefSet> out;
      for (std::size_t i : picked) out.push_back(delta[i]);
      return out;
    }
    case Kind::kPreOrder: {
      std::vector<std::vector<std::int64_t>> keys;
      keys.reserve(delta.size());
      for (const BeliefSet& bs : delta) keys.push_back(rank_(bs));
      const auto best = *std::max_element(keys.begin(), keys.end());
      std::vector<BeliefSet> out;
      for (std::size_t i = 0; i < delta.size(); ++i) {
        if (keys[i] == best) out.push_back(delta[i]);
      }
      return out;
    }
  }
  return delta;
}

std::vector<BeliefSet> Select(const Selection& sel,
                              const std::vector<BeliefSet>& delta,
                              const BeliefSet& fallback) {
  if (delta.empty()) return {fallback};
  return sel.choose(delta);
}

// ---------------------------------------------------------------------------
// Expansion

BeliefSet Expand(const BeliefSet& bs, const Package& pkg,
                 std::vector<Firing>* firings) {
  const Logic& logic = bs.logic();
  TripletSet store = bs.store();
  for (const BeliefTriplet& t : pkg.triplets) store.insert(logic, t);
  return BeliefSet::Close(bs.interp(), bs.models() & logic.models(pkg.formulas),
                          std::move(store), firings);
}

BeliefSet Expand(const BeliefSet& bs, const ExternalInfo& info,
                 std::vector<Firing>* firings) {
  return Expand(bs, Package{{info.essence}, info.attributes}, firings);
}

// ---------------------------------------------------------------------------
// Remainders

namespace {

struct RemainderProblem {
  std::vector<ModelSet> targets;  // non-tautological visible members of bs
  ModelSet recovery;              // models of the visible members of bs
  bool all_tautological = true;
};

RemainderProblem Prepare(const BeliefSet& bs, const std::vector<Formula>& visible) {
  const Logic& logic = bs.logic();
  RemainderProblem p{{}, logic.all(), true};
  for (const Formula& f : visible) {
    const ModelSet m = logic.models(f);
    if (!m.full()) p.all_tautological = false;
    if (!bs.member(m)) continue;
    p.recovery &= m;
    if (!m.full()) p.targets.push_back(m);
  }
  return p;
}

std::vector<BeliefSet> KeepRecoverable(const BeliefSet& bs,
                                       const std::vector<ModelSet>& minimal,
                                       const ModelSet& recovery) {
  std::vector<BeliefSet> out;
  for (const ModelSet& m : minimal) {
    if (BeliefSet::Close(bs.interp(), m & recovery, bs.store()) != bs) continue;
    out.push_back(BeliefSet::Close(bs.interp(), m, bs.store()));
  }
  std::sort(out.begin(), out.end(), [](const BeliefSet& a, const BeliefSet& b) {
    return a.models() < b.models();
  });
  return out;
}

std::uint64_t NextSameWeight(std::uint64_t mask) {
  const std::uint64_t c = mask & (~mask + 1);
  const std::uint64_t r = mask + c;
  return (((r ^ mask) >> 2) / c) | r;
}

}  // namespace

std::vector<BeliefSet> Remainders(const BeliefSet& bs,
                                  const std::vector<Formula>& visible,
                                  const Limits& limits) {
  const RemainderProblem p = Prepare(bs, visible);
  if (p.all_tautological) return {};

  const std::vector<Model> outside = bs.models().complement().models();
  const std::size_t k = outside.size();
  if (k >= 63 || (std::uint64_t{1} << k) > limits.max_states) {
    throw WorkLimitExceeded(limits.max_states);
  }

  // Each target must lose membership: the added models must include one of
  // its falsifiers.
  std::vector<std::uint64_t> falsifiers;
  for (const ModelSet& t : p.targets) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (!t.contains(outside[i])) mask |= std::uint64_t{1} << i;
    }
    falsifiers.push_back(mask);
  }

  std::vector<std::uint64_t> found;
  std::vector<ModelSet> minimal;
  const std::uint64_t end = std::uint64_t{1} << k;
  for (std::size_t weight = 0; weight <= k; ++weight) {
    std::uint64_t mask = (std::uint64_t{1} << weight) - 1;
    while (mask < end) {
      const bool dominated = std::any_of(found.begin(), found.end(), [&](std::uint64_t f) {
        return (mask & f) == f;
      });
      const bool hits = std::all_of(falsifiers.begin(), falsifiers.end(),
                                    [&](std::uint64_t f) { return (mask & f) != 0; });
      if (!dominated && hits) {
        ModelSet s = bs.models();
        for (std::size_t i = 0; i < k; ++i) {
          if ((mask >> i) & 1U) s.insert(outside[i]);
        }
        if (IsFixpoint(*bs.interp(), s, bs.store())) {
          found.push_back(mask);
          minimal.push_back(std::move(s));
        }
      }
      if (mask == 0) break;
      mask = NextSameWeight(mask);
    }
  }
  return KeepRecoverable(bs, minimal, p.recovery);
}

std::vector<BeliefSet> Remainders(const BeliefSet& bs, const ExternalInfo& info,
                                  const Limits& limits) {
  return Remainders(bs, Visible(bs, info), limits);
}

std::vector<BeliefSet> SearchRemainders(const BeliefSet& bs,
                                        const std::vector<Formula>& visible,
                                        const Limits& limits) {
  const RemainderProblem p = Prepare(bs, visible);
  if (p.all_tautological) return {};
  const Interpretation& interp = *bs.interp();

  std::deque<ModelSet> queue{bs.models()};
  std::unordered_set<ModelSet, ModelSetHash> seen{bs.models()};
  std::vector<ModelSet> found;
  std::size_t states = 0;

  auto branch = [&](const ModelSet& s, const ModelSet& additions) {
    additions.for_each([&](Model u) {
      ModelSet next = s;
      next.insert(u);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    });
  };

  while (!queue.empty()) {
    ModelSet s = std::move(queue.front());
    queue.pop_front();
    if (std::any_of(found.begin(), found.end(),
                    [&](const ModelSet& f) { return f.subset_of(s); })) {
      continue;
    }
    if (++states > limits.max_states) throw WorkLimitExceeded(limits.max_states);

    auto kept = std::find_if(p.targets.begin(), p.targets.end(),
                             [&](const ModelSet& t) { return s.subset_of(t); });
    if (kept != p.targets.end()) {
      branch(s, kept->complement());
      continue;
    }

    const TripletSet ts = TripletsFor(interp, s, bs.store());
    auto fired = std::find_if(ts.items().begin(), ts.items().end(),
                              [&](const TripletSet::Item& i) {
                                return s.subset_of(i.trigger) && !s.subset_of(i.revealed);
                              });
    if (fired != ts.items().end()) {
      // A stored triplet stops firing only once its subject or its trigger
      // loses membership.  A derived one may also vanish with the context,
      // so any added model can help.
      if (bs.store().contains(*fired)) {
        branch(s, (fired->subject & fired->trigger).complement() - s);
      } else {
        branch(s, s.complement());
      }
      continue;
    }
    found.push_back(std::move(s));
  }

  std::vector<ModelSet> minimal;
  for (const ModelSet& f : found) {
    const bool strict_superset = std::any_of(found.begin(), found.end(), [&](const ModelSet& g) {
      return g != f && g.subset_of(f);
    });
    if (!strict_superset) minimal.push_back(f);
  }
  return KeepRecoverable(bs, minimal, p.recovery);
}

// ---------------------------------------------------------------------------
// Contraction and revision

BeliefSet Meet(const std::vector<BeliefSet>& sets) {
  if (sets.empty()) throw std::invalid_argument("meet of no belief sets");
  ModelSet models = sets.front().models();
  for (const BeliefSet& bs : sets) models |= bs.models();
  return BeliefSet::Close(sets.front().interp(), std::move(models),
                          sets.front().store());
}

BeliefSet Contract(const BeliefSet& bs, const std::vector<Formula>& visible,
                   const Selection& sel, const Limits& limits) {
  return Meet(Select(sel, SearchRemainders(bs, visible, limits), bs));
}

BeliefSet Contract(const BeliefSet& bs, const ExternalInfo& info,
                   const Selection& sel, const Limits& limits) {
  return Contract(bs, Visible(bs, info), sel, limits);
}

BeliefSet Revise(const BeliefSet& bs, const Package& visible_pkg,
                 const Selection& sel, const Limits& limits,
                 std::vector<Firing>* firings) {
  const BeliefSet contracted =
      Contract(bs, VisibleNeg(visible_pkg.formulas), sel, limits);
  return Expand(contracted, visible_pkg, firings);
}

BeliefSet Revise(const BeliefSet& bs, const ExternalInfo& info,
                 const Selection& sel, const Limits& limits,
                 std::vector<Firing>* firings) {
  return Revise(bs, Package{Visible(bs, info), info.attributes}, sel, limits, firings);
}

std::vector<Formula> SubstituteConjunct(const std::vector<Formula>& visible,
                                        const Formula& conj, Side side) {
  if (conj.op() != Op::kAnd ||
      std::find(visible.begin(), visible.end(), conj) == visible.end()) {
    throw std::invalid_argument("conjunction does not occur in the visible set");
  }
  const Formula& part = side == Side::kLeft ? conj.lhs() : conj.rhs();
  std::vector<Formula> out = visible;
  std::replace(out.begin(), out.end(), conj, part);
  return out;
}

std::vector<Formula> SubstituteConjunct(const BeliefSet& bs,
                                        const ExternalInfo& info,
                                        const Formula& conj, Side side) {
  return SubstituteConjunct(Visible(bs, info), conj, side);
}

}  // namespace latentbr
