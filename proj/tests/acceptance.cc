// Copyright 2026 The ontoterm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <string>

#include "ontoterm/align.h"
#include "ontoterm/export.h"
#include "ontoterm/pipeline.h"
#include "ontoterm/projection.h"
#include "ontoterm/retrieval.h"
#include "properties.h"
#include "testing.h"

namespace ontoterm {
namespace {

using testing::CheckResult;

struct Outcome {
  bool pass = false;
  std::string detail;
};

const std::set<std::string> kFourHyponyms = {"relais électromagnétique", "relais de tension",
                                             "relais tout ou rien", "relais à seuil"};

std::string Join(const std::set<std::string> &items) {
  std::string out;
  for (const std::string &s : items) out += (out.empty() ? "" : ", ") + s;
  return "{" + out + "}";
}

Outcome LexicalStructure() {
  const testing::Desk &desk = testing::DeskFixture();
  auto start = std::chrono::steady_clock::now();
  std::vector<TermCandidate> candidates = RunExtract(desk.corpus, desk.lexicon, desk.patterns);
  std::vector<LexicalRelation> same_head = SameHeadHyponyms(candidates);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                  .count();
  std::set<std::string> hyponyms;
  for (const LexicalRelation &r : same_head) {
    if (r.target == "relais" && r.kind == RelationKind::kHyponymy) hyponyms.insert(r.source);
  }
  bool ok = hyponyms == kFourHyponyms && ms < 1000.0;
  return {ok, "hyponyms of relais " + Join(hyponyms) + " in " + std::to_string(ms) + " ms"};
}

Outcome ProjectedTaxonomy() {
  Taxonomy t = testing::DeskTaxonomy();
  std::vector<std::string> children = t.Children("relais");
  std::set<std::string> child_set(children.begin(), children.end());
  bool ok = child_set == kFourHyponyms && t.subsumption.size() == 4 &&
            t.Roots() == std::vector<std::string>{"relais"};
  return {ok, "children of <relais> " + Join(child_set) + ", " +
                  std::to_string(t.subsumption.size()) + " edges"};
}

Outcome FixtureConsistency() {
  const std::string &dsl = testing::DeskFixture().dsl;
  size_t base = CheckConsistency(ParseDsl(dsl)).size();
  int exact = 0;
  std::string misses;
  for (const auto &[rule, extra] : testing::RuleMutations()) {
    auto vs = CheckConsistency(ParseDsl(dsl + extra + "\n"));
    bool only = !vs.empty();
    for (const Violation &v : vs) only = only && v.rule == rule;
    if (only) {
      ++exact;
    } else {
      misses += " " + RuleName(rule);
    }
  }
  bool ok = base == 0 && exact == 7;
  return {ok, std::to_string(base) + " violations on the fixture, " + std::to_string(exact) +
                  "/7 rules isolated by mutation" + (misses.empty() ? "" : ", missed:" + misses)};
}

Outcome Ellipsis() {
  OkOntology o = ParseDsl(testing::DeskFixture().dsl);
  AlignmentResult a = AlignTerm("relais de tension", o);
  Taxonomy t = testing::DeskTaxonomy();
  DiscrepancyReport report = CompareStructures(t, o, AlignTaxonomy(t, Aligner(o)));
  std::map<std::string, Verdict> verdict;
  for (const DiscrepancyEntry &e : report.entries) verdict[e.term] = e.verdict;
  auto is = [&](const std::string &term, Verdict v) {
    auto it = verdict.find(term);
    return it != verdict.end() && it->second == v;
  };
  bool ok = a.kind == AlignKind::kEllipsis && a.concept_name == "relais à seuil de tension" &&
            is("relais de tension", Verdict::kParentElided) &&
            is("relais tout ou rien", Verdict::kAgree) && is("relais à seuil", Verdict::kAgree);
  return {ok, "«relais de tension» " + std::string(AlignKindName(a.kind)) + " -> <" +
                  a.concept_name.value_or("") + ">, verdict " +
                  std::string(VerdictName(verdict["relais de tension"]))};
}

Outcome RetrievalContrast() {
  const auto &r = testing::RetrievalFixture();
  ProjectedStructure projected(testing::DeskTaxonomy());
  OkStructure ok(ParseDsl(testing::DeskFixture().dsl));
  DocIndex pi = IndexCorpus(r.corpus, r.candidates, projected,
                            IdentityAlignment(projected.taxonomy()));
  DocIndex oi = IndexCorpus(r.corpus, r.candidates, ok, AlignCandidates(r.candidates, ok.aligner()));
  std::set<std::string> p = Query(pi, projected, "relais à seuil");
  std::set<std::string> o = Query(oi, ok, "relais à seuil");
  RecallComparison c = CompareRecall(pi, projected, oi, ok, "relais à seuil");
  bool pass = p == std::set<std::string>{"D2"} && o == std::set<std::string>{"D1", "D2"} &&
              c.symmetric_difference == std::set<std::string>{"D1"};
  return {pass, "projected " + Join(p) + ", ok " + Join(o) + ", difference " +
                    Join(c.symmetric_difference)};
}

std::string Describe(const std::string &name, const CheckResult &r) {
  std::string out = name + " " + std::to_string(r.cases - r.failures) + "/" +
                    std::to_string(r.cases);
  if (!r.first_failure.empty()) out += " (" + r.first_failure + ")";
  return out;
}

Outcome OracleEquivalence() {
  CheckResult closure = testing::ClosureOracle(601, 100, 100);
  CheckResult query = testing::QueryOracle(602, 25, 100);
  return {closure.ok() && query.ok() && closure.cases == 100,
          Describe("closure/subsumes", closure) + ", " + Describe("query", query)};
}

Outcome Properties() {
  constexpr int kCases = 1000;
  int ellipses = 0;
  std::vector<std::pair<std::string, CheckResult>> results = {
      {"synonymy", testing::SynonymySymmetry(701, kCases)},
      {"monotonicity", testing::ClosureMonotonicity(702, kCases)},
      {"similarity", testing::SimilaritySymmetry(703, kCases)},
      {"ellipsis-head", testing::EllipsisHeadMatch(704, kCases, &ellipses)},
      {"mangling", testing::ManglingInjectivity(705, kCases)},
      {"idempotence", testing::PipelineIdempotence(706, kCases)},
  };
  bool ok = ellipses > 0;
  std::string detail;
  for (const auto &[name, r] : results) {
    ok = ok && r.ok() && r.cases >= kCases;
    detail += (detail.empty() ? "" : ", ") + Describe(name, r);
  }
  return {ok, detail};
}

Outcome ExportChecks() {
  std::string owl = ToOwl(ParseDsl(testing::DeskFixture().dsl));
  bool axioms = owl.find("SubClassOf(:RelaisASeuilDeTension :RelaisASeuil)") != std::string::npos &&
                owl.find("DisjointClasses(:RelaisToutOuRien :RelaisASeuil)") != std::string::npos;
  CheckResult counts = testing::ExportAxiomCounts(801, 50);
  return {axioms && counts.ok() && counts.cases == 50,
          std::string("fixture axioms ") + (axioms ? "present" : "missing") + ", " +
              Describe("count formulas", counts)};
}

}  // namespace
}  // namespace ontoterm

int main() {
  using ontoterm::Outcome;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"lexical structure from the desk corpus", ontoterm::LexicalStructure},
      {"projected taxonomy", ontoterm::ProjectedTaxonomy},
      {"OK fixture consistency and rule mutations", ontoterm::FixtureConsistency},
      {"ellipsis alignment and verdicts", ontoterm::Ellipsis},
      {"retrieval contrast", ontoterm::RetrievalContrast},
      {"oracle equivalence", ontoterm::OracleEquivalence},
      {"property suites", ontoterm::Properties},
      {"export checks", ontoterm::ExportChecks},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
