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


#include <doctest.h>

#include "ontoterm/align.h"
#include "ontoterm/projection.h"
#include "testing.h"

namespace ontoterm {
namespace {

OkOntology Fixture() { return ParseDsl(testing::DeskFixture().dsl); }

using Bag = std::multiset<std::string>;

// The projected Fig. 3 taxonomy.
Taxonomy Fig3() {
  std::vector<Term> terms = {{"relais", "relais", Status::kValidated}};
  std::vector<LexicalRelation> rels;
  for (const char *t : {"relais électromagnétique", "relais de tension",
                        "relais tout ou rien", "relais à seuil"}) {
    terms.push_back({t, "relais", Status::kValidated});
    LexicalRelation r = MakeRelation(RelationKind::kHyponymy, t, "relais", Evidence::kSameHead);
    r.status = Status::kValidated;
    rels.push_back(r);
  }
  return Project(RestoreLexNet(terms, rels));
}

TEST_SUITE("align") {

TEST_CASE("normalize") {
  CHECK(NormalizeLabel("relais de tension") == Bag{"relais", "tension"});
  CHECK(NormalizeLabel("relais à seuil de tension") == Bag{"relais", "seuil", "tension"});
  CHECK(NormalizeLabel("relais tout ou rien") == Bag{"relais", "tout", "ou", "rien"});
  CHECK(NormalizeLabel("Relais  d'Arrêt") == Bag{"relais", "arrêt"});
  CHECK(NormalizeLabel("relais, à seuil.") == Bag{"relais", "seuil"});
  CHECK(NormalizeLabel("de la").empty());
  CHECK(ContentTokens("relais à seuil de tension") ==
        std::vector<std::string>{"relais", "seuil", "tension"});
}

TEST_CASE("normalize with lexicon and custom stopwords") {
  Lexicon lex = Lexicon::FromTsv("relais\trelais\tNOUN\nseuils\tseuil\tNOUN\n");
  NormalizeOptions options;
  options.lexicon = &lex;
  CHECK(NormalizeLabel("relais à seuils", options) == Bag{"relais", "seuil"});
  NormalizeOptions custom;
  custom.stopwords = ParseStopwords("# list\nou\n\nTout\n");
  CHECK(custom.stopwords == std::set<std::string>{"ou", "tout"});
  CHECK(NormalizeLabel("relais tout ou rien", custom) == Bag{"relais", "rien"});
}

TEST_CASE("align against the fixture") {
  OkOntology o = Fixture();
  AlignmentResult r = AlignTerm("relais de tension", o);
  CHECK(r.kind == AlignKind::kEllipsis);
  CHECK(r.concept_name == "relais à seuil de tension");

  r = AlignTerm("relais à seuil", o);
  CHECK(r.kind == AlignKind::kExact);
  CHECK(r.concept_name == "relais à seuil");

  r = AlignTerm("relais", o);
  CHECK(r.kind == AlignKind::kExact);
  CHECK(r.concept_name == "relais");

  r = AlignTerm("relais de fréquence", o);
  CHECK(r.kind == AlignKind::kUnmatched);
  CHECK_FALSE(r.concept_name.has_value());

  r = AlignTerm("Relais TOR", o);
  CHECK(r.kind == AlignKind::kDeclared);
  CHECK(r.concept_name == "relais tout ou rien");

  CHECK(AlignTerm("", o).kind == AlignKind::kUnmatched);
  CHECK(AlignTerm("de la", o).kind == AlignKind::kUnmatched);
}

TEST_CASE("ellipsis takes the deepest concept of one chain") {
  // «seuil» fits <relais à seuil> and <relais à seuil de tension>, one chain.
  OkOntology o = Fixture();
  AlignmentResult r = AlignTerm("seuil", o);
  CHECK(r.kind == AlignKind::kEllipsis);
  CHECK(r.concept_name == "relais à seuil de tension");
}

TEST_CASE("ellipsis across branches is ambiguous") {
  OkOntology o = ParseDsl(
      "axis a values x, y\naxis b values x, y\nconcept relais root\n"
      "concept <relais de tension maximale> genus relais diff a=x\n"
      "concept <relais de tension minimale> genus relais diff a=y\n");
  AlignmentResult r = AlignTerm("relais de tension", o);
  CHECK(r.kind == AlignKind::kAmbiguous);
  CHECK(r.candidates == std::vector<std::string>{"relais de tension maximale",
                                                 "relais de tension minimale"});
  CHECK_FALSE(r.concept_name.has_value());
}

TEST_CASE("identical bags on two concepts are ambiguous") {
  OkOntology o = ParseDsl(
      "axis a values x, y\nconcept relais root\n"
      "concept <relais de tension> genus relais diff a=x\n"
      "concept <tension du relais> genus relais diff a=y\n");
  CHECK(AlignTerm("relais à tension", o).kind == AlignKind::kAmbiguous);
}

TEST_CASE("head token must appear in the concept") {
  OkOntology o = Fixture();
  Aligner aligner(o);
  // With head «tension» the term still fits <relais à seuil de tension>.
  CHECK(aligner.Align("relais de tension", "tension").kind == AlignKind::kEllipsis);
  // A head absent from every wider concept blocks ellipsis.
  CHECK(aligner.Align("relais de tension", "fréquence").kind == AlignKind::kUnmatched);
}

TEST_CASE("alignment is deterministic") {
  OkOntology o = Fixture();
  Aligner aligner(o);
  for (const char *t : {"relais de tension", "seuil", "relais", "bobine", "relais TOR"}) {
    AlignmentResult a = aligner.Align(t), b = aligner.Align(t);
    CHECK(a.kind == b.kind);
    CHECK(a.concept_name == b.concept_name);
    CHECK(a.candidates == b.candidates);
  }
}

TEST_CASE("exact implies equal bags") {
  OkOntology o = Fixture();
  Aligner aligner(o);
  for (const OkConcept &c : o.concepts()) {
    AlignmentResult r = aligner.Align(c.name);
    CHECK(r.kind == AlignKind::kExact);
    CHECK(r.concept_name == c.name);
    CHECK(NormalizeLabel(*r.concept_name) == NormalizeLabel(c.name));
  }
}

TEST_CASE("compare structures on fig 3") {
  OkOntology o = Fixture();
  Taxonomy t = Fig3();
  Aligner aligner(o);
  DiscrepancyReport report = CompareStructures(t, o, AlignTaxonomy(t, aligner));
  std::map<std::string, Verdict> by_term;
  for (const DiscrepancyEntry &e : report.entries) by_term[e.term] = e.verdict;
  CHECK(by_term.at("relais de tension") == Verdict::kParentElided);
  CHECK(by_term.at("relais tout ou rien") == Verdict::kAgree);
  CHECK(by_term.at("relais à seuil") == Verdict::kAgree);
  CHECK(by_term.at("relais électromagnétique") == Verdict::kAgree);

  size_t total = 0;
  for (auto [verdict, n] : report.Counts()) total += n;
  CHECK(total == t.concepts.size() - t.Roots().size());
  CHECK(report.entries.size() == 4);

  for (const DiscrepancyEntry &e : report.entries) {
    if (e.term != "relais de tension") continue;
    CHECK(e.aligned_concept == "relais à seuil de tension");
    CHECK(e.parent_concept == "relais");
    CHECK(e.ok_parent_chain == std::vector<std::string>{"relais à seuil", "relais"});
  }
}

TEST_CASE("unmatched term is unaligned, misplaced term conflicts") {
  OkOntology o = Fixture();
  std::vector<Term> terms = {{"relais", "relais", Status::kValidated},
                             {"relais de fréquence", "relais", Status::kValidated},
                             {"relais à seuil", "relais", Status::kValidated},
                             {"relais tout ou rien", "relais", Status::kValidated}};
  auto rel = [](const char *a, const char *b) {
    LexicalRelation r = MakeRelation(RelationKind::kHyponymy, a, b, Evidence::kDeclared);
    r.status = Status::kValidated;
    return r;
  };
  Taxonomy t = Project(RestoreLexNet(
      terms, {rel("relais de fréquence", "relais"), rel("relais à seuil", "relais tout ou rien"),
              rel("relais tout ou rien", "relais")}));
  Aligner aligner(o);
  DiscrepancyReport report = CompareStructures(t, o, AlignTaxonomy(t, aligner));
  std::map<std::string, Verdict> by_term;
  for (const DiscrepancyEntry &e : report.entries) by_term[e.term] = e.verdict;
  CHECK(by_term.at("relais de fréquence") == Verdict::kUnaligned);
  CHECK(by_term.at("relais à seuil") == Verdict::kConflict);
  CHECK(by_term.at("relais tout ou rien") == Verdict::kAgree);
  CHECK(VerdictName(Verdict::kParentElided) == "PARENT_ELIDED");
}

TEST_CASE("several projected parents report the best verdict") {
  OkOntology o = Fixture();
  std::vector<Term> terms = {{"relais", "relais", Status::kValidated},
                             {"relais tout ou rien", "relais", Status::kValidated},
                             {"relais à seuil", "relais", Status::kValidated}};
  auto rel = [](const char *a, const char *b) {
    LexicalRelation r = MakeRelation(RelationKind::kHyponymy, a, b, Evidence::kDeclared);
    r.status = Status::kValidated;
    return r;
  };
  Taxonomy t = Project(RestoreLexNet(
      terms, {rel("relais à seuil", "relais tout ou rien"), rel("relais à seuil", "relais")}));
  DiscrepancyReport report = CompareStructures(t, o, AlignTaxonomy(t, Aligner(o)));
  for (const DiscrepancyEntry &e : report.entries) {
    if (e.term == "relais à seuil") {
      CHECK(e.verdict == Verdict::kAgree);
      CHECK(e.projected_parent == "relais");
    }
  }
}

}  // TEST_SUITE

}  // namespace
}  // namespace ontoterm
