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

#include "latentbr/conformance.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

namespace latentbr {

// ---------------------------------------------------------------------------
// Generation

namespace {

class Gen {
 public:
  Gen(std::uint64_t seed, int atoms) : rng_(seed), atoms_(atoms) {}

  int Int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool Coin(double p) { return std::bernoulli_distribution(p)(rng_); }
  std::uint64_t Word() { return rng_(); }

  Formula Literal() {
    const Formula a = Formula::Atom(Int(0, atoms_ - 1));
    return Coin(0.5) ? a : Formula::Neg(a);
  }

  // depth() of the result is at most `depth`.
  Formula Random(int depth) {
    if (depth <= 0) return Formula::Atom(Int(0, atoms_ - 1));
    if (depth == 1 || Coin(0.3)) return Literal();
    switch (Int(0, 5)) {
      case 0:
      case 1:
        return Formula::And(Random(depth - 1), Random(depth - 1));
      case 2:
      case 3:
        return Formula::Or(Random(depth - 1), Random(depth - 1));
      case 4:
        return Formula::Neg(Random(depth - 1));
      default:
        return Formula::Implies(Random(depth - 2), Random(depth - 1));
    }
  }

  template <class T>
  const T& Pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(Int(0, static_cast<int>(v.size()) - 1))];
  }

 private:
  std::mt19937_64 rng_;
  int atoms_;
};

// Equivalent but structurally different.
Formula Rewrite(Gen& g, const Formula& f) {
  switch (g.Int(0, 3)) {
    case 0:
      return Formula::Or(f, Formula::And(f, g.Literal()));
    case 1:
      return Formula::And(f, Formula::Or(f, g.Literal()));
    case 2:
      return Formula::Neg(Formula::Neg(f));
    default:
      return Formula::And(Formula::Top(), f);
  }
}

std::optional<AssocPair> RandomPair(Gen& g, const Logic& logic, const Formula& subject,
                                    const std::vector<Formula>& trigger_pool, int depth) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    const Formula trigger = (!trigger_pool.empty() && g.Coin(0.6))
                                ? g.Pick(trigger_pool)
                                : g.Random(depth);
    const Formula revealed = g.Random(depth);
    if (!InExc(logic, subject, trigger) && !InExc(logic, subject, revealed)) {
      return AssocPair{trigger, revealed};
    }
  }
  return std::nullopt;
}

std::vector<BeliefTriplet> RandomAttributes(Gen& g, const Logic& logic,
                                            const Formula& subject,
                                            const std::vector<Formula>& trigger_pool,
                                            int max_count) {
  std::vector<BeliefTriplet> out;
  const int n = g.Int(0, max_count);
  for (int i = 0; i < n; ++i) {
    if (auto p = RandomPair(g, logic, subject, trigger_pool, 1)) {
      out.push_back(BeliefTriplet{subject, p->trigger, p->revealed});
    }
  }
  return out;
}

std::vector<std::string> AtomNames(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  return names;
}

}  // namespace

ScenarioInstance Generate(std::uint64_t seed, const Bounds& bounds) {
  const int n = std::clamp(bounds.atoms, 1, 6);
  Gen g(seed * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL, n);
  ScenarioInstance inst;
  inst.seed = seed;
  inst.bounds = bounds;
  inst.logic = MakeLogic(AtomNames(n));
  const Logic& logic = *inst.logic;
  const int depth = std::max(0, bounds.depth);

  std::vector<Interpretation::Entry> entries;
  const int n_entries = g.Coin(0.25) ? 0 : g.Int(1, std::max(1, bounds.assoc_entries));
  for (int i = 0; i < n_entries && bounds.assoc_entries > 0; ++i) {
    const Formula key = g.Literal();
    if (auto p = RandomPair(g, logic, key, {}, 1)) {
      entries.push_back(Interpretation::Entry{key, *p});
    }
  }
  inst.interp = MakeInterpretation(inst.logic, entries);

  // Prefer a consistent base; inconsistent sets make most checks trivial.
  for (int attempt = 0; attempt < 6; ++attempt) {
    inst.base.explicit_formulas.clear();
    const int n_base = g.Int(1, std::max(1, bounds.base_formulas));
    for (int i = 0; i < n_base; ++i) {
      inst.base.explicit_formulas.push_back(g.Random(g.Int(0, depth)));
    }
    if (logic.consistent(inst.base.explicit_formulas)) break;
  }
  const std::vector<Formula>& base = inst.base.explicit_formulas;
  std::vector<Formula> triggers = base;
  for (int i = 0; i < n; ++i) triggers.push_back(Formula::Atom(i));

  const int n_triplets = g.Int(0, 2);
  for (int i = 0; i < n_triplets; ++i) {
    const Formula subject = g.Pick(base);
    if (logic.tautology(subject) || logic.contradiction(subject)) continue;
    if (auto p = RandomPair(g, logic, subject, triggers, 1)) {
      inst.base.triplets.push_back(BeliefTriplet{subject, p->trigger, p->revealed});
    }
  }

  // Essence: a member about half of the time, often a conjunction.
  Formula essence;
  switch (g.Int(0, 5)) {
    case 0:
      essence = g.Pick(base);
      break;
    case 1:
      essence = Formula::Or(g.Pick(base), g.Random(1));
      break;
    case 2:
      essence = Formula::And(g.Pick(base), g.Random(1));
      break;
    case 3:
      essence = Formula::And(g.Random(1), g.Random(1));
      break;
    case 4:
      essence = Formula::And(Formula::Or(g.Pick(base), g.Literal()),
                             Formula::Or(g.Pick(base), g.Literal()));
      break;
    default:
      essence = g.Random(depth);
      break;
  }
  inst.info = ExternalInfo{"info", essence, RandomAttributes(g, logic, essence, triggers, 2)};

  if (g.Coin(0.85)) {
    ExternalInfo p{"paired", Rewrite(g, essence), {}};
    for (const BeliefTriplet& t : inst.info.attributes) {
      p.attributes.push_back(BeliefTriplet{p.essence, Rewrite(g, t.trigger), t.revealed});
    }
    inst.paired = std::move(p);
  } else {
    const Formula e = g.Random(depth);
    inst.paired = ExternalInfo{"paired", e, RandomAttributes(g, logic, e, triggers, 2)};
  }

  for (int i = 0; i < 3; ++i) inst.preorder_seeds.push_back(g.Word());
  return inst;
}

namespace {

void DescribeInfo(std::ostringstream& out, const std::string& label,
                  const ExternalInfo& info, const Logic& logic) {
  out << label << " " << logic.print(info.essence) << "\n";
  for (const BeliefTriplet& t : info.attributes) {
    out << "  attr (" << logic.print(t.trigger) << ", " << logic.print(t.revealed) << ")\n";
  }
}

}  // namespace

std::string Describe(const ScenarioInstance& inst) {
  const Logic& logic = *inst.logic;
  std::ostringstream out;
  out << "seed " << inst.seed << "\n";
  out << "atoms";
  for (const std::string& a : logic.universe().names()) out << " " << a;
  out << "\n";
  for (const Interpretation::Entry& e : inst.interp->entries()) {
    out << "assoc " << logic.print(e.literal) << ": (" << logic.print(e.pair.trigger)
        << ", " << logic.print(e.pair.revealed) << ")\n";
  }
  for (const Formula& f : inst.base.explicit_formulas) out << "base " << logic.print(f) << "\n";
  for (const BeliefTriplet& t : inst.base.triplets) {
    out << "base-triplet " << PrintTriplet(t, logic.universe()) << "\n";
  }
  DescribeInfo(out, "info", inst.info, logic);
  DescribeInfo(out, "paired", inst.paired, logic);
  return out.str();
}

// ---------------------------------------------------------------------------
// Report

Tally& ConformanceReport::Get(const std::string& name, bool conditional) {
  for (Tally& t : tallies_) {
    if (t.name == name) return t;
  }
  tallies_.push_back(Tally{name, conditional, 0, 0, 0, 0, {}});
  return tallies_.back();
}

const Tally* ConformanceReport::find(const std::string& name) const {
  for (const Tally& t : tallies_) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

void ConformanceReport::Record(const std::string& name, bool conditional, bool fired,
                               bool holds, std::uint64_t seed,
                               const std::string& selection, const std::string& detail) {
  Tally& t = Get(name, conditional);
  ++t.checked;
  if (!fired) return;
  ++t.fired;
  if (holds) {
    ++t.passed;
    return;
  }
  ++t.failed;
  if (t.witnesses.size() < kMaxWitnesses) t.witnesses.push_back(Witness{seed, selection, detail});
}

void ConformanceReport::RecordOverflow(std::uint64_t seed) { overflows_.push_back(seed); }

void ConformanceReport::Merge(const ConformanceReport& other) {
  instances_ += other.instances_;
  overflows_.insert(overflows_.end(), other.overflows_.begin(), other.overflows_.end());
  for (const Tally& o : other.tallies_) {
    Tally& t = Get(o.name, o.conditional);
    t.checked += o.checked;
    t.fired += o.fired;
    t.passed += o.passed;
    t.failed += o.failed;
    for (const Witness& w : o.witnesses) {
      if (t.witnesses.size() < kMaxWitnesses) t.witnesses.push_back(w);
    }
  }
}

bool ConformanceReport::all_passed() const {
  return std::all_of(tallies_.begin(), tallies_.end(),
                     [](const Tally& t) { return t.failed == 0; });
}

std::string ConformanceReport::Json(int indent) const {
  nlohmann::json postulates = nlohmann::json::array();
  for (const Tally& t : tallies_) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const Witness& w : t.witnesses) {
      witnesses.push_back({{"seed", w.seed}, {"selection", w.selection}, {"instance", w.detail}});
    }
    postulates.push_back({{"name", t.name},
                          {"conditional", t.conditional},
                          {"checked", t.checked},
                          {"fired", t.fired},
                          {"passed", t.passed},
                          {"failed", t.failed},
                          {"hit_rate", t.hit_rate()},
                          {"verdict", t.failed > 0 ? "fail" : (t.fired == 0 ? "not-applicable" : "pass")},
                          {"witnesses", std::move(witnesses)}});
  }
  nlohmann::json doc{{"schema", 1},
                     {"instances", instances_},
                     {"work_limit_overflows", overflows_},
                     {"all_passed", all_passed()},
                     {"postulates", std::move(postulates)}};
  return doc.dump(indent);
}

// ---------------------------------------------------------------------------
// Checks

namespace {

bool AllNonMembers(const BeliefSet& bs, const std::vector<Formula>& fs) {
  const Logic& logic = bs.logic();
  return std::all_of(fs.begin(), fs.end(), [&](const Formula& f) {
    return logic.tautology(f) || !bs.member(f);
  });
}

// Members of both and triplets of both, within `target`.
bool IntersectionWithin(const BeliefSet& a, const BeliefSet& b, const BeliefSet& target) {
  if (!target.models().subset_of(a.models() | b.models())) return false;
  for (const TripletSet::Item& i : a.triplets().items()) {
    if (b.triplets().contains(i) && !target.triplets().contains(i)) return false;
  }
  return true;
}

bool AssociationUpdated(const BeliefSet& bs) {
  return bs.triplets() == TripletsFor(*bs.interp(), bs.models(), bs.store());
}

class Checker {
 public:
  Checker(const ScenarioInstance& inst, const Limits& limits, ConformanceReport& report)
      : inst_(inst), limits_(limits), report_(report), logic_(*inst.logic) {}

  void Run() {
    const BeliefSet bs = BeliefSet::Close(inst_.interp, inst_.base);
    Adequate(bs, "all");
    const std::vector<Formula> v = Visible(bs, inst_.info);
    const std::vector<Formula> vneg = VisibleNeg(v);
    const Package revealed{v, inst_.info.attributes};

    const std::vector<BeliefSet> delta = Remainders(bs, v, limits_);
    const std::vector<BeliefSet> delta_neg = Remainders(bs, vneg, limits_);
    const BeliefSet expanded = Expand(bs, inst_.info);
    Adequate(expanded, "all");
    CheckExpansion(bs, expanded);

    std::vector<Selection> sels{Selection::All()};
    for (std::uint64_t s : inst_.preorder_seeds) sels.push_back(Selection::Random(s, 3));

    for (const Selection& sel : sels) {
      sel_ = sel.description();
      const BeliefSet c = Contract(bs, v, sel, limits_);
      const BeliefSet cneg = Contract(bs, vneg, sel, limits_);
      const BeliefSet r = Revise(bs, inst_.info, sel, limits_);
      Adequate(c, sel_);
      Adequate(cneg, sel_);
      Adequate(r, sel_);

      Rec("theorem.representation", false, true,
          c == Meet(Select(sel, delta, bs)));
      Rec("theorem.identity", false, true,
          r == Expand(Meet(Select(sel, delta_neg, bs)), revealed));

      CheckContraction(bs, v, c, sel);
      CheckRevision(bs, v, vneg, cneg, r, expanded, sel);
      if (sel.kind() == Selection::Kind::kPreOrder) {
        CheckSupplementary(bs, v, c, r, sel);
      }
    }
  }

 private:
  void Rec(const std::string& name, bool conditional, bool fired, bool holds) {
    report_.Record(name, conditional, fired, holds, inst_.seed, sel_,
                   holds || !fired ? std::string() : Describe(inst_));
  }

  void Adequate(const BeliefSet& bs, const std::string& sel) {
    sel_ = sel;
    Rec("observation.adequacy", false, true, bs.adequate());
  }

  void CheckExpansion(const BeliefSet& bs, const BeliefSet& expanded) {
    sel_ = "all";
    BeliefBase from_base = inst_.base;
    from_base.explicit_formulas.push_back(inst_.info.essence);
    from_base.triplets.insert(from_base.triplets.end(), inst_.info.attributes.begin(),
                              inst_.info.attributes.end());
    Rec("expansion.augmentation", false, true,
        expanded == BeliefSet::Close(inst_.interp, from_base) &&
            expanded.models().subset_of(bs.models()) && expanded.member(inst_.info.essence));
    Rec("expansion.association_update", false, true, AssociationUpdated(expanded));
  }

  void CheckContraction(const BeliefSet& bs, const std::vector<Formula>& v,
                        const BeliefSet& c, const Selection& sel) {
    Rec("contraction.closure", false, true, c.closed());

    const bool any_contingent = std::any_of(v.begin(), v.end(), [&](const Formula& f) {
      return !logic_.tautology(f);
    });
    Rec("contraction.success", true, any_contingent, AllNonMembers(c, v));
    Rec("contraction.inclusion", false, true, c.subset_of(bs));
    Rec("contraction.vacuity", true, AllNonMembers(bs, v), c == bs);

    const std::vector<Formula> v2 = Visible(bs, inst_.paired);
    const bool same_content = logic_.models(v) == logic_.models(v2);
    Rec("contraction.extensionality", true, same_content,
        !same_content || Contract(bs, v2, sel, limits_) == c);

    Rec("contraction.recovery", false, true, bs.subset_of(Expand(c, Package{v, {}})));
    Rec("contraction.association_update", false, true, AssociationUpdated(c));
  }

  void CheckRevision(const BeliefSet& bs, const std::vector<Formula>& v,
                     const std::vector<Formula>& vneg, const BeliefSet& cneg,
                     const BeliefSet& r, const BeliefSet& expanded, const Selection& sel) {
    Rec("revision.closure", false, true, r.closed());
    Rec("revision.success1", false, true,
        std::all_of(v.begin(), v.end(), [&](const Formula& f) { return r.member(f); }));

    // A latent trigger can make the result inconsistent, and then every
    // formula is a member.  The removal this postulate asks for is judged
    // on the contraction extended by the visible formulas alone.  With a
    // jointly inconsistent visible set Success 1 already forces every
    // formula in, so the postulate is only applicable when it is consistent.
    const ModelSet judged = r.consistent() ? r.models() : cneg.models() & logic_.models(v);
    bool removed = true;
    bool any_contingent = false;
    for (const Formula& x : vneg) {
      if (logic_.tautology(x)) continue;
      any_contingent = true;
      if (judged.subset_of(logic_.models(x))) removed = false;
    }
    const bool applicable = any_contingent && logic_.consistent(v);
    Rec("revision.success2", true, applicable, !applicable || removed);

    Rec("revision.inclusion", false, true, r.subset_of(expanded));
    const bool no_conflict = std::none_of(vneg.begin(), vneg.end(), [&](const Formula& x) {
      return bs.member(x);
    });
    Rec("revision.vacuity", true, no_conflict, !no_conflict || r == expanded);

    const BeliefSet own = BeliefSet::Close(
        inst_.interp, logic_.models(inst_.info.essence), MakeStore(logic_, inst_.info.attributes));
    const BeliefSet other = BeliefSet::Close(
        inst_.interp, logic_.models(inst_.paired.essence),
        MakeStore(logic_, inst_.paired.attributes));
    const bool same_info = own == other;
    Rec("revision.extensionality", true, same_info,
        !same_info || Revise(bs, inst_.paired, sel, limits_) == r);
    Rec("revision.association_update", false, true, AssociationUpdated(r));
  }

  void CheckSupplementary(const BeliefSet& bs, const std::vector<Formula>& v,
                          const BeliefSet& c, const BeliefSet& r, const Selection& sel) {
    std::vector<Formula> conjunctions;
    for (const Formula& f : v) {
      if (f.op() == Op::kAnd &&
          std::find(conjunctions.begin(), conjunctions.end(), f) == conjunctions.end()) {
        conjunctions.push_back(f);
      }
    }
    bool inclusion_fired = false, inclusion_holds = true;
    bool overlap_holds = true, super_holds = true;
    bool sub_fired = false, sub_holds = true;
    const auto& attrs = inst_.info.attributes;
    for (const Formula& conj : conjunctions) {
      const Formula& p1 = conj.lhs();
      const Formula& p2 = conj.rhs();
      const std::vector<Formula> v1 = SubstituteConjunct(v, conj, Side::kLeft);
      const std::vector<Formula> v2 = SubstituteConjunct(v, conj, Side::kRight);
      const BeliefSet c1 = Contract(bs, v1, sel, limits_);
      const BeliefSet c2 = Contract(bs, v2, sel, limits_);
      if (!c.member(p1)) {
        inclusion_fired = true;
        inclusion_holds = inclusion_holds && c.subset_of(c1);
      }
      overlap_holds = overlap_holds && IntersectionWithin(c1, c2, c);

      const BeliefSet r1 = Revise(bs, Package{v1, attrs}, sel, limits_);
      super_holds = super_holds && r.subset_of(Expand(r1, Package{{p2}, {}}));

      const BeliefSet r2 = Revise(bs, Package{v2, attrs}, sel, limits_);
      if (!r2.member(Negate(p1))) {
        sub_fired = true;
        sub_holds = sub_holds && Expand(r2, Package{{p1}, {}}).subset_of(r);
      }
    }
    const bool any = !conjunctions.empty();
    Rec("supplementary.conjunctive_inclusion", true, inclusion_fired, inclusion_holds);
    Rec("supplementary.conjunctive_overlap", true, any, overlap_holds);
    Rec("supplementary.super_expansion", true, any, super_holds);
    Rec("supplementary.sub_expansion", true, sub_fired, sub_holds);
  }

  const ScenarioInstance& inst_;
  const Limits& limits_;
  ConformanceReport& report_;
  const Logic& logic_;
  std::string sel_ = "all";
};

}  // namespace

ConformanceReport CheckAll(const ScenarioInstance& inst, const Limits& limits) {
  ConformanceReport report;
  report.CountInstance();
  ConformanceReport scratch;
  try {
    Checker(inst, limits, scratch).Run();
    report.Merge(scratch);
  } catch (const WorkLimitExceeded&) {
    report.RecordOverflow(inst.seed);
  }
  return report;
}

ConformanceReport CheckSeeds(std::uint64_t first, std::uint64_t count, const Bounds& bounds,
                             const Limits& limits) {
  ConformanceReport report;
  for (std::uint64_t s = first; s < first + count; ++s) {
    report.Merge(CheckAll(Generate(s, bounds), limits));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Observations

ScenarioInstance LatentConflictInstance() {
  ScenarioInstance inst;
  inst.logic = MakeLogic({"p0", "p1", "p2"});
  const Formula p0 = Formula::Atom(0), p1 = Formula::Atom(1), p2 = Formula::Atom(2);
  inst.interp = MakeInterpretation(inst.logic, {Interpretation::Entry{p0, AssocPair{p1, p2}}});
  inst.base.explicit_formulas = {p0, Formula::Neg(p2)};
  inst.base.triplets = {BeliefTriplet{p0, p1, p2}};
  inst.info = ExternalInfo{"info", p1, {}};
  inst.paired = inst.info;
  inst.bounds.atoms = 3;
  return inst;
}

bool ShowsNoGratuitousRecovery(const ScenarioInstance& inst, const Limits& limits) {
  const BeliefSet bs = BeliefSet::Close(inst.interp, inst.base);
  const BeliefSet c = Contract(bs, inst.info, Selection::All(), limits);
  return !bs.subset_of(Expand(c, inst.info));
}

bool ShowsNoLeviIdentity(const ScenarioInstance& inst, const Limits& limits) {
  const BeliefSet bs = BeliefSet::Close(inst.interp, inst.base);
  const Formula neg = Negate(inst.info.essence);
  const ExternalInfo neg_info{"neg", neg, Cond(bs.tuple(), neg)};
  const BeliefSet levi =
      Expand(Contract(bs, neg_info, Selection::All(), limits), inst.info);
  return Revise(bs, inst.info, Selection::All(), limits) != levi;
}

bool ShowsLatentInconsistency(const ScenarioInstance& inst, const Limits& limits) {
  const BeliefSet bs = BeliefSet::Close(inst.interp, inst.base);
  if (!bs.consistent()) return false;
  const std::vector<Formula> v = Visible(bs, inst.info);
  if (!inst.logic->consistent(v)) return false;
  return !Revise(bs, inst.info, Selection::All(), limits).consistent();
}

ObservationSearch FindObservationWitnesses(const Bounds& bounds, std::uint64_t budget,
                                           const Limits& limits) {
  ObservationSearch out;
  auto witness = [](const ScenarioInstance& inst, std::string detail) {
    return ObservationWitness{inst.seed, Describe(inst), std::move(detail)};
  };
  const ScenarioInstance known = LatentConflictInstance();
  if (ShowsLatentInconsistency(known, limits)) {
    out.latent_inconsistency = witness(known, "fixed instance");
  }
  for (std::uint64_t s = 0; s < budget; ++s) {
    if (out.no_gratuitous_recovery && out.no_levi_identity && out.latent_inconsistency) break;
    const ScenarioInstance inst = Generate(s, bounds);
    ++out.searched;
    try {
      if (!out.no_gratuitous_recovery && ShowsNoGratuitousRecovery(inst, limits)) {
        out.no_gratuitous_recovery = witness(inst, "B not included in (B - P) + P");
      }
      if (!out.no_levi_identity && ShowsNoLeviIdentity(inst, limits)) {
        out.no_levi_identity = witness(inst, "B * P differs from (B - ~P) + P");
      }
      if (!out.latent_inconsistency && ShowsLatentInconsistency(inst, limits)) {
        out.latent_inconsistency = witness(inst, "consistent inputs, inconsistent revision");
      }
    } catch (const WorkLimitExceeded&) {
      continue;
    }
  }
  return out;
}

std::string ObservationJson(const ObservationSearch& search, int indent) {
  auto one = [](const std::optional<ObservationWitness>& w) -> nlohmann::json {
    if (!w) return {{"found", false}};
    return {{"found", true}, {"seed", w->seed}, {"instance", w->instance}, {"detail", w->detail}};
  };
  nlohmann::json doc{{"schema", 1},
                     {"searched", search.searched},
                     {"no_gratuitous_recovery", one(search.no_gratuitous_recovery)},
                     {"no_levi_identity", one(search.no_levi_identity)},
                     {"latent_inconsistency", one(search.latent_inconsistency)}};
  return doc.dump(indent);
}

}  // namespace latentbr
