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

#include "latentbr/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

namespace latentbr {

ScenarioError::ScenarioError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

std::string ToString(EventOp op) {
  switch (op) {
    case EventOp::kExpand:
      return "expand";
    case EventOp::kContract:
      return "contract";
    case EventOp::kRevise:
      return "revise";
  }
  return "?";
}

const ExternalInfo& Scenario::item(const std::string& name) const {
  for (const ExternalInfo& info : items) {
    if (info.name == name) return info;
  }
  throw std::out_of_range("unknown item '" + name + "'");
}

namespace {

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

// Splits on commas that are not nested in parentheses.
std::vector<std::string> SplitTopLevel(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == ',' && depth == 0) {
      out.push_back(Trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(Trim(s.substr(start)));
  return out;
}

std::pair<std::string, std::string> SplitWord(std::string_view s) {
  const std::string t = Trim(s);
  const auto sp = t.find_first_of(" \t");
  if (sp == std::string::npos) return {t, ""};
  return {t.substr(0, sp), Trim(std::string_view(t).substr(sp + 1))};
}

class Parser {
 public:
  explicit Parser(int max_atoms) : max_atoms_(max_atoms) {}

  Scenario Parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_;
      std::string_view body = raw;
      if (const auto hash = body.find('#'); hash != std::string_view::npos) {
        body = body.substr(0, hash);
      }
      const std::string l = Trim(body);
      if (!l.empty()) Directive(l);
    }
    if (!logic_) throw ScenarioError(line_, "missing 'atoms' declaration");
    Scenario s;
    s.logic = logic_;
    s.interp = MakeInterpretation(logic_, entries_);
    for (const auto& v : ValidateInterpretation(*s.interp)) {
      throw ScenarioError(assoc_lines_.at(IndexOf(s.interp->entries(), v)),
                          "association pair for '" + logic_->print(v.literal) +
                              "' lies in its exclusion set");
    }
    s.items = std::move(items_);
    s.events = std::move(events_);
    if (basis_.empty()) {
      for (int i = 0; i < logic_->atoms(); ++i) basis_.push_back(Formula::Atom(i));
    }
    s.print_basis = std::move(basis_);
    return s;
  }

 private:
  static std::size_t IndexOf(const std::vector<Interpretation::Entry>& entries,
                             const InterpretationViolation& v) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i].literal == v.literal && entries[i].pair.trigger == v.pair.trigger &&
          entries[i].pair.revealed == v.pair.revealed) {
        return i;
      }
    }
    return 0;
  }

  [[noreturn]] void Fail(const std::string& message) const {
    throw ScenarioError(line_, message);
  }

  const Logic& RequireLogic() const {
    if (!logic_) Fail("'atoms' must come first");
    return *logic_;
  }

  Formula ParseFormula(const std::string& text) const {
    try {
      return RequireLogic().parse(text);
    } catch (const ParseError& e) {
      Fail("in formula '" + text + "' at offset " + std::to_string(e.offset()) +
           ": " + e.what());
    }
  }

  // "<head>: (<f>, <f>)"
  std::pair<std::string, AssocPair> ParseLink(const std::string& rest) const {
    const auto colon = rest.find(':');
    if (colon == std::string::npos) Fail("expected ':'");
    const std::string head = Trim(std::string_view(rest).substr(0, colon));
    const std::string pair = Trim(std::string_view(rest).substr(colon + 1));
    if (pair.size() < 2 || pair.front() != '(' || pair.back() != ')') {
      Fail("expected '(<formula>, <formula>)'");
    }
    const auto parts = SplitTopLevel(std::string_view(pair).substr(1, pair.size() - 2));
    if (parts.size() != 2) Fail("expected exactly two formulas in the pair");
    return {head, AssocPair{ParseFormula(parts[0]), ParseFormula(parts[1])}};
  }

  ExternalInfo* FindItem(const std::string& name) {
    for (ExternalInfo& info : items_) {
      if (info.name == name) return &info;
    }
    return nullptr;
  }

  void Directive(const std::string& l) {
    const auto [keyword, rest] = SplitWord(l);
    if (keyword == "atoms") {
      if (logic_) Fail("duplicate 'atoms' declaration");
      std::vector<std::string> names;
      std::istringstream words(rest);
      for (std::string w; words >> w;) names.push_back(w);
      try {
        logic_ = MakeLogic(std::move(names), max_atoms_);
      } catch (const std::exception& e) {
        Fail(e.what());
      }
    } else if (keyword == "assoc") {
      RequireLogic();
      auto [head, pair] = ParseLink(rest);
      const Formula literal = ParseFormula(head);
      if (!Nnf(literal).is_literal()) Fail("association key '" + head + "' is not a literal");
      entries_.push_back(Interpretation::Entry{literal, std::move(pair)});
      assoc_lines_.push_back(line_);
    } else if (keyword == "item") {
      const auto [name, tail] = SplitWord(rest);
      const auto [kw, formula] = SplitWord(tail);
      if (name.empty() || kw != "essence" || formula.empty()) {
        Fail("expected 'item <name> essence <formula>'");
      }
      if (FindItem(name) != nullptr) Fail("duplicate item '" + name + "'");
      items_.push_back(ExternalInfo{name, ParseFormula(formula), {}});
    } else if (keyword == "attr") {
      auto [name, pair] = ParseLink(rest);
      ExternalInfo* info = FindItem(name);
      if (info == nullptr) Fail("attribute for undeclared item '" + name + "'");
      const Logic& logic = RequireLogic();
      if (InExc(logic, info->essence, pair.trigger) ||
          InExc(logic, info->essence, pair.revealed)) {
        Fail("attribute of '" + name + "' lies in the exclusion set of its essence");
      }
      info->attributes.push_back(BeliefTriplet{info->essence, pair.trigger, pair.revealed});
    } else if (keyword == "event") {
      Event(rest);
    } else if (keyword == "print") {
      RequireLogic();
      std::vector<std::string> parts;
      if (rest.find(',') != std::string::npos) {
        parts = SplitTopLevel(rest);
      } else {
        std::istringstream words(rest);
        for (std::string w; words >> w;) parts.push_back(w);
      }
      for (const std::string& p : parts) {
        if (p.empty()) Fail("empty formula in print basis");
        basis_.push_back(ParseFormula(p));
      }
    } else {
      Fail("unknown directive '" + keyword + "'");
    }
  }

  void Event(const std::string& rest) {
    const auto [op_text, tail] = SplitWord(rest);
    const auto [name, sel_text] = SplitWord(tail);
    ScenarioEvent ev;
    ev.line = line_;
    if (op_text == "expand") {
      ev.op = EventOp::kExpand;
    } else if (op_text == "contract") {
      ev.op = EventOp::kContract;
    } else if (op_text == "revise") {
      ev.op = EventOp::kRevise;
    } else {
      Fail("unknown event operator '" + op_text + "'");
    }
    if (name.empty()) Fail("event without an item");
    if (FindItem(name) == nullptr) Fail("event refers to undeclared item '" + name + "'");
    ev.item = name;
    std::string spec = sel_text.empty() ? "all" : sel_text;
    if (spec.rfind("select", 0) == 0) spec = Trim(std::string_view(spec).substr(6));
    try {
      ev.selection = ParseSelection(spec, RequireLogic());
    } catch (const ParseError& e) {
      Fail("in selection at offset " + std::to_string(e.offset()) + ": " + e.what());
    } catch (const std::invalid_argument& e) {
      Fail(e.what());
    }
    ev.selection_text = spec;
    events_.push_back(std::move(ev));
  }

  int max_atoms_;
  int line_ = 0;
  LogicPtr logic_;
  std::vector<Interpretation::Entry> entries_;
  std::vector<int> assoc_lines_;
  std::vector<ExternalInfo> items_;
  std::vector<ScenarioEvent> events_;
  std::vector<Formula> basis_;
};

}  // namespace

Selection ParseSelection(const std::string& text, const Logic& logic) {
  const auto [kw, rest] = SplitWord(text);
  if (kw == "all" && rest.empty()) return Selection::All();
  if (kw == "prefer" && !rest.empty()) {
    std::vector<Formula> fs;
    for (const std::string& part : SplitTopLevel(rest)) fs.push_back(logic.parse(part));
    return Selection::Prefer(std::move(fs), "prefer " + rest);
  }
  throw std::invalid_argument("expected 'select all' or 'prefer <formula>, ...'");
}

Scenario ParseScenario(std::string_view text, int max_atoms) {
  return Parser(max_atoms).Parse(text);
}

Scenario LoadScenario(const std::string& path, int max_atoms) {
  std::ifstream in(path);
  if (!in) throw ScenarioError(0, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseScenario(ss.str(), max_atoms);
}

// ---------------------------------------------------------------------------
// Running

namespace {

BeliefSet Apply(const BeliefSet& bs, EventOp op, const ExternalInfo& info,
                const Selection& sel, const Limits& limits, TraceEvent& ev) {
  ev.newly_visible = Visible(bs, info);
  switch (op) {
    case EventOp::kExpand:
      return Expand(bs, info, &ev.triggered);
    case EventOp::kContract:
      return Contract(bs, info, sel, limits);
    case EventOp::kRevise:
      return Revise(bs, info, sel, limits, &ev.triggered);
  }
  return bs;
}

}  // namespace

RunResult Run(const Scenario& scenario, const Limits& limits,
              std::vector<TraceEvent>* partial) {
  BeliefSet bs = BeliefSet::Empty(scenario.interp);
  std::vector<TraceEvent> trace;
  for (std::size_t i = 0; i < scenario.events.size(); ++i) {
    const ScenarioEvent& e = scenario.events[i];
    TraceEvent ev;
    ev.step = static_cast<int>(i) + 1;
    ev.op = e.op;
    ev.info = e.item;
    ev.selection_text = e.selection_text;
    try {
      bs = Apply(bs, e.op, scenario.item(e.item), e.selection, limits, ev);
    } catch (const WorkLimitExceeded&) {
      if (partial != nullptr) *partial = trace;
      throw;
    }
    ev.consistent = bs.consistent();
    trace.push_back(std::move(ev));
  }
  return RunResult{bs, std::move(trace)};
}

BeliefSet Replay(const Scenario& scenario, const std::vector<TraceEvent>& trace,
                 const Limits& limits) {
  BeliefSet bs = BeliefSet::Empty(scenario.interp);
  for (const TraceEvent& t : trace) {
    TraceEvent scratch;
    bs = Apply(bs, t.op, scenario.item(t.info),
               ParseSelection(t.selection_text, *scenario.logic), limits, scratch);
  }
  return bs;
}

// ---------------------------------------------------------------------------
// Rendering

Snapshot TakeSnapshot(const BeliefSet& bs, const std::vector<Formula>& basis) {
  Snapshot s;
  s.consistent = bs.consistent();
  for (const Formula& f : basis) {
    if (bs.member(f)) s.members.push_back(f);
  }
  TripletPartition p = Partition(bs);
  s.triggered = std::move(p.triggered);
  s.latent = std::move(p.latent);
  return s;
}

namespace {

std::string JoinFormulas(const std::vector<Formula>& fs, const Universe& u) {
  std::string out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i > 0) out += ", ";
    out += Print(fs[i], u);
  }
  return out;
}

nlohmann::json FormulaList(const std::vector<Formula>& fs, const Universe& u) {
  nlohmann::json a = nlohmann::json::array();
  for (const Formula& f : fs) a.push_back(Print(f, u));
  return a;
}

nlohmann::json TripletList(const std::vector<BeliefTriplet>& ts, const Universe& u) {
  nlohmann::json a = nlohmann::json::array();
  for (const BeliefTriplet& t : ts) a.push_back(PrintTriplet(t, u));
  return a;
}

nlohmann::json SnapshotJson(const Snapshot& s, const Universe& u) {
  return nlohmann::json{{"consistent", s.consistent},
                        {"inconsistent", !s.consistent},
                        {"members", FormulaList(s.members, u)},
                        {"triggered", TripletList(s.triggered, u)},
                        {"latent", TripletList(s.latent, u)}};
}

}  // namespace

std::string SnapshotText(const Snapshot& snap, const Universe& u) {
  std::ostringstream out;
  out << "consistent: " << (snap.consistent ? "true" : "false") << "\n";
  out << "members: " << JoinFormulas(snap.members, u) << "\n";
  out << "triggered:\n";
  for (const BeliefTriplet& t : snap.triggered) out << "  " << PrintTriplet(t, u) << "\n";
  out << "latent:\n";
  for (const BeliefTriplet& t : snap.latent) out << "  " << PrintTriplet(t, u) << "\n";
  return out.str();
}

std::string TraceText(const std::vector<TraceEvent>& trace, const Universe& u) {
  std::ostringstream out;
  for (const TraceEvent& ev : trace) {
    out << "step " << ev.step << ": " << ToString(ev.op) << " " << ev.info;
    if (ev.op != EventOp::kExpand) out << " [select " << ev.selection_text << "]";
    out << "\n  visible: " << JoinFormulas(ev.newly_visible, u) << "\n";
    for (const Firing& f : ev.triggered) {
      out << "  fired " << PrintTriplet(f.item.triplet, u) << ": "
          << Print(f.item.triplet.trigger, u) << " -> "
          << Print(f.item.triplet.revealed, u) << " (round " << f.iteration << ")\n";
    }
    out << "  consistent: " << (ev.consistent ? "true" : "false") << "\n";
  }
  return out.str();
}

std::string RunJson(const Scenario& scenario, const RunResult& result, int indent) {
  const Universe& u = scenario.logic->universe();
  nlohmann::json steps = nlohmann::json::array();
  for (const TraceEvent& ev : result.trace) {
    nlohmann::json fired = nlohmann::json::array();
    for (const Firing& f : ev.triggered) {
      fired.push_back({{"round", f.iteration},
                       {"triplet", PrintTriplet(f.item.triplet, u)},
                       {"trigger", Print(f.item.triplet.trigger, u)},
                       {"revealed", Print(f.item.triplet.revealed, u)}});
    }
    steps.push_back({{"step", ev.step},
                     {"operator", ToString(ev.op)},
                     {"info", ev.info},
                     {"selection", ev.selection_text},
                     {"newly_visible", FormulaList(ev.newly_visible, u)},
                     {"triggered", std::move(fired)},
                     {"consistent", ev.consistent}});
  }
  nlohmann::json doc{
      {"schema", 1},
      {"atoms", u.names()},
      {"steps", std::move(steps)},
      {"final", SnapshotJson(TakeSnapshot(result.final_set, scenario.print_basis), u)}};
  return doc.dump(indent);
}

}  // namespace latentbr
