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

#include <gtest/gtest.h>

#include <string>

#include "latentbr/scenario.hpp"

namespace {

using namespace latentbr;

const std::string kDir = std::string(LATENTBR_SOURCE_DIR) + "/scenarios/";

int ErrorLine(const std::string& text) {
  try {
    ParseScenario(text);
  } catch (const ScenarioError& e) {
    return e.line();
  }
  return -1;
}

TEST(ScenarioParse, MinimalFile) {
  const Scenario s = ParseScenario(
      "# comment\n"
      "atoms a b c\n"
      "assoc a: (b, c | b)\n"
      "item one essence a & b\n"
      "attr one: (c, ~c)\n"
      "event expand one\n"
      "event revise one prefer a, b\n"
      "print a, b\n");
  EXPECT_EQ(s.logic->atoms(), 3);
  EXPECT_EQ(s.interp->entries().size(), 1u);
  ASSERT_EQ(s.items.size(), 1u);
  EXPECT_EQ(s.item("one").attributes.size(), 1u);
  ASSERT_EQ(s.events.size(), 2u);
  EXPECT_EQ(s.events[1].op, EventOp::kRevise);
  EXPECT_EQ(s.events[1].selection_text, "prefer a, b");
  EXPECT_EQ(s.print_basis.size(), 2u);
}

TEST(ScenarioParse, DefaultBasisIsAllAtoms) {
  const Scenario s = ParseScenario("atoms a b c\nitem x essence a\nevent expand x\n");
  EXPECT_EQ(s.print_basis.size(), 3u);
}

TEST(ScenarioParse, ErrorsReportLineNumbers) {
  EXPECT_EQ(ErrorLine("item x essence a\n"), 1);
  EXPECT_EQ(ErrorLine("atoms a\natoms b\n"), 2);
  EXPECT_EQ(ErrorLine("atoms a b\n\nitem x essence a &\n"), 3);
  EXPECT_EQ(ErrorLine("atoms a b\nassoc a & b: (a, b)\n"), 2);
  EXPECT_EQ(ErrorLine("atoms a b\nassoc a (a, b)\n"), 2);
  EXPECT_EQ(ErrorLine("atoms a b\nassoc a: (b)\n"), 2);
  EXPECT_EQ(ErrorLine("atoms a b\nitem x essence a\nitem x essence b\n"), 3);
  EXPECT_EQ(ErrorLine("atoms a b\nattr y: (a, b)\n"), 2);
  EXPECT_EQ(ErrorLine("atoms a b\nitem x essence a\nattr x: (a & b, b)\n"), 3);
  EXPECT_EQ(ErrorLine("atoms a b\nfrobnicate\n"), 2);
  EXPECT_EQ(ErrorLine("atoms a b\nitem x essence a\nevent squash x\n"), 3);
  EXPECT_EQ(ErrorLine("atoms a b\nevent expand ghost\n"), 2);
  EXPECT_EQ(ErrorLine("atoms a b\nitem x essence a\nevent revise x prefer a &\n"), 3);
  EXPECT_EQ(ErrorLine("atoms a b\nitem x essence c\n"), 2);
}

TEST(ScenarioParse, InvalidAssociationIsRejected) {
  // b | a lies in Exc(a).
  EXPECT_EQ(ErrorLine("atoms a b\n\nassoc a: (b | a, b)\n"), 3);
}

TEST(ScenarioParse, ErrorMessageNamesLine) {
  try {
    ParseScenario("atoms a\n\nbogus\n");
    FAIL();
  } catch (const ScenarioError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("line 3:", 0), 0u) << e.what();
  }
}

TEST(ScenarioParse, SelectionText) {
  auto logic = MakeLogic({"a", "b"});
  EXPECT_EQ(ParseSelection("all", *logic).kind(), Selection::Kind::kAll);
  EXPECT_EQ(ParseSelection("prefer a, a & b", *logic).kind(), Selection::Kind::kPreOrder);
  EXPECT_THROW(ParseSelection("sometimes", *logic), std::invalid_argument);
}

TEST(ScenarioRun, GameTrace) {
  const Scenario s = LoadScenario(kDir + "game.lbr");
  const RunResult r = latentbr::Run(s);
  ASSERT_EQ(r.trace.size(), 4u);
  EXPECT_TRUE(r.final_set.consistent());
  EXPECT_TRUE(r.final_set.member(s.logic->parse("p10")));
  const Snapshot snap = TakeSnapshot(r.final_set, s.print_basis);
  EXPECT_EQ(snap.members.size(), 10u);
  EXPECT_TRUE(snap.latent.empty());
  const std::string text = TraceText(r.trace, s.logic->universe());
  EXPECT_NE(text.find("(p4 & p5)(p3, p10)"), std::string::npos);
}

TEST(ScenarioRun, ReplayIsDeterministic) {
  for (const char* name : {"game.lbr", "dropped_key.lbr", "latent_conflict.lbr"}) {
    const Scenario s = LoadScenario(kDir + name);
    const RunResult a = latentbr::Run(s);
    const RunResult b = latentbr::Run(s);
    EXPECT_EQ(a.final_set, b.final_set) << name;
    EXPECT_EQ(Replay(s, a.trace), a.final_set) << name;
    EXPECT_EQ(RunJson(s, a), RunJson(s, b)) << name;
    EXPECT_EQ(TraceText(a.trace, s.logic->universe()), TraceText(b.trace, s.logic->universe()));
  }
}

TEST(ScenarioRun, JsonShape) {
  const Scenario s = LoadScenario(kDir + "latent_conflict.lbr");
  const std::string json = RunJson(s, latentbr::Run(s));
  EXPECT_NE(json.find("\"schema\": 1"), std::string::npos);
  EXPECT_NE(json.find("\"steps\""), std::string::npos);
  EXPECT_NE(json.find("\"final\""), std::string::npos);
}

TEST(ScenarioRun, WorkLimitKeepsCompletedSteps) {
  const Scenario s = LoadScenario(kDir + "dropped_key.lbr");
  Limits tiny;
  tiny.max_states = 1;
  std::vector<TraceEvent> partial;
  EXPECT_THROW(latentbr::Run(s, tiny, &partial), WorkLimitExceeded);
  EXPECT_EQ(partial.size(), 3u);
}

TEST(ScenarioRun, MissingFile) {
  EXPECT_THROW(LoadScenario(kDir + "no_such_file.lbr"), ScenarioError);
}

}  // namespace
