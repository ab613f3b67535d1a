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

#include "ontoterm/pipeline.h"
#include "ontoterm/retrieval.h"
#include "testing.h"

namespace ontoterm {
namespace {

using Docs = std::set<std::string>;
using testing::ErrorOf;

OkOntology Fixture() { return ParseDsl(testing::DeskFixture().dsl); }

struct Setup {
  ProjectedStructure projected{testing::DeskTaxonomy()};
  OkStructure ok{Fixture()};
  DocIndex projected_index;
  DocIndex ok_index;

  explicit Setup(const Corpus &corpus, const std::vector<TermCandidate> &candidates) {
    projected_index = IndexCorpus(corpus, candidates, projected,
                                  IdentityAlignment(projected.taxonomy()));
    ok_index = IndexCorpus(corpus, candidates, ok, AlignCandidates(candidates, ok.aligner()));
  }
  Setup()
      : Setup(testing::RetrievalFixture().corpus, testing::RetrievalFixture().candidates) {}
};

TEST_SUITE("retrieval") {

TEST_CASE("indexing attaches documents to aligned concepts") {
  Setup s;
  CHECK(s.projected_index.structure == "projected");
  CHECK(s.ok_index.structure == "ok");
  CHECK(s.projected_index.documents == std::vector<std::string>{"D1", "D2"});
  CHECK(s.projected_index.DirectDocuments("relais de tension") == Docs{"D1"});
  CHECK(s.projected_index.DirectDocuments("relais à seuil") == Docs{"D2"});
  CHECK(s.ok_index.DirectDocuments("relais à seuil de tension") == Docs{"D1"});
  CHECK(s.ok_index.DirectDocuments("relais à seuil") == Docs{"D2"});
  CHECK(s.ok_index.annotations.contains(
      {"D1", "relais à seuil de tension", AnnotationSource::kTermOccurrence}));
  CHECK(s.projected_index.unaligned_only.empty());
}

TEST_CASE("document without known terms is listed, not annotated") {
  Corpus corpus = testing::RetrievalFixture().corpus;
  corpus.push_back({"D3", "La bobine chauffe."});
  auto candidates =
      RunExtract(corpus, testing::DeskFixture().lexicon, testing::DeskFixture().patterns);
  Setup s(corpus, candidates);
  CHECK(s.ok_index.unaligned_only == std::vector<std::string>{"D3"});
  CHECK(s.projected_index.unaligned_only == std::vector<std::string>{"D3"});
  for (const DocAnnotation &a : s.ok_index.annotations) CHECK(a.doc_id != "D3");
}

TEST_CASE("query: projected vs ok") {
  Setup s;
  CHECK(Query(s.projected_index, s.projected, "relais à seuil") == Docs{"D2"});
  CHECK(Query(s.ok_index, s.ok, "relais à seuil") == Docs{"D1", "D2"});
  CHECK(Query(s.projected_index, s.projected, "relais") == Docs{"D1", "D2"});
  CHECK(Query(s.ok_index, s.ok, "relais") == Docs{"D1", "D2"});
  CHECK(Query(s.ok_index, s.ok, "relais tout ou rien").empty());
  CHECK(ErrorOf([&] { Query(s.projected_index, s.projected, "relais à seuil de tension"); }) ==
        ErrorCode::kUnknownConcept);
}

TEST_CASE("compare recall") {
  Setup s;
  RecallComparison r =
      CompareRecall(s.projected_index, s.projected, s.ok_index, s.ok, "relais à seuil");
  CHECK(r.first.structure == "projected");
  CHECK(r.second.structure == "ok");
  CHECK(r.first.documents == Docs{"D2"});
  CHECK(r.second.documents == Docs{"D1", "D2"});
  CHECK(r.only_first.empty());
  CHECK(r.only_second == Docs{"D1"});
  CHECK(r.symmetric_difference == Docs{"D1"});
  REQUIRE(r.explanations.size() == 2);
  CHECK(r.explanations[0].doc_id == "D1");
  CHECK(r.explanations[0].matched_first.empty());
  CHECK(r.explanations[0].matched_second ==
        std::vector<std::string>{"relais à seuil de tension"});
  CHECK(r.explanations[1].matched_first == std::vector<std::string>{"relais à seuil"});
}

TEST_CASE("compare recall: identical structures") {
  Setup s;
  RecallComparison r =
      CompareRecall(s.ok_index, s.ok, s.ok_index, s.ok, "relais à seuil");
  CHECK(r.symmetric_difference.empty());
  RecallComparison p = CompareRecall(s.projected_index, s.projected, s.projected_index,
                                     s.projected, "relais");
  CHECK(p.symmetric_difference.empty());
}

TEST_CASE("compare recall: label missing from one structure") {
  Setup s;
  try {
    CompareRecall(s.projected_index, s.projected, s.ok_index, s.ok, "relais à seuil de tension");
    FAIL("expected E_UNRESOLVABLE");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kUnresolvable);
    CHECK(e.detail().find("projected") != std::string::npos);
  }
  CHECK(ErrorOf([&] {
          CompareRecall(s.ok_index, s.ok, s.projected_index, s.projected, "relais thermique");
        }) == ErrorCode::kUnresolvable);
}

TEST_CASE("ok structure resolves labels through alignment") {
  OkStructure ok(Fixture());
  CHECK(ok.Resolve("relais à seuil") == "relais à seuil");
  CHECK(ok.Resolve("relais de tension") == "relais à seuil de tension");
  CHECK(ok.Resolve("relais TOR") == "relais tout ou rien");
  CHECK(ok.Resolve("relais de fréquence") == std::nullopt);
}

TEST_CASE("manual annotation") {
  Setup s;
  AddManualAnnotation(s.ok_index, s.ok, "D9", "relais tout ou rien");
  CHECK(Query(s.ok_index, s.ok, "relais") == Docs{"D1", "D2", "D9"});
  CHECK(s.ok_index.documents == std::vector<std::string>{"D1", "D2", "D9"});
  CHECK(ErrorOf([&] { AddManualAnnotation(s.ok_index, s.ok, "D1", "relais thermique"); }) ==
        ErrorCode::kUnknownConcept);
}

TEST_CASE("ambiguous alignments contribute nothing") {
  OkStructure ok(ParseDsl(
      "axis a values x, y\nconcept relais root\n"
      "concept <relais de tension maximale> genus relais diff a=x\n"
      "concept <relais de tension minimale> genus relais diff a=y\n"));
  const auto &r = testing::RetrievalFixture();
  DocIndex index = IndexCorpus(r.corpus, r.candidates, ok, AlignCandidates(r.candidates, ok.aligner()));
  CHECK(std::find(index.ambiguous_terms.begin(), index.ambiguous_terms.end(),
                  "relais de tension") != index.ambiguous_terms.end());
  CHECK(index.DirectDocuments("relais de tension maximale").empty());
}

TEST_CASE("indexing is deterministic") {
  Setup a, b;
  CHECK(a.ok_index.annotations == b.ok_index.annotations);
  CHECK(a.projected_index.annotations == b.projected_index.annotations);
}

TEST_CASE("query matches a per-document scan") {
  testing::Rng rng(23);
  OkStructure ok(Fixture());
  ProjectedStructure projected(testing::DeskTaxonomy());
  const auto &desk = testing::DeskFixture();
  for (int round = 0; round < 10; ++round) {
    Corpus corpus = testing::RandomRelayCorpus(rng, rng.Uniform(1, 100));
    auto candidates = RunExtract(corpus, desk.lexicon, desk.patterns);
    for (const ConceptStructure *structure :
         {static_cast<const ConceptStructure *>(&ok), static_cast<const ConceptStructure *>(&projected)}) {
      auto alignment = structure == &ok ? AlignCandidates(candidates, ok.aligner())
                                        : IdentityAlignment(projected.taxonomy());
      DocIndex index = IndexCorpus(corpus, candidates, *structure, alignment);
      std::vector<std::string> keys;
      if (structure == &ok) {
        for (const OkConcept &c : ok.ontology().concepts()) keys.push_back(c.name);
      } else {
        for (const auto &[id, c] : projected.taxonomy().concepts) keys.push_back(id);
      }
      for (const std::string &key : keys) {
        std::set<std::string> closure = structure->Closure(key);
        Docs expected;
        for (const Document &doc : corpus) {
          // Scan the document's own term occurrences.
          for (const TermCandidate &c : candidates) {
            auto it = alignment.find(c.Label());
            if (it == alignment.end() || !it->second.concept_name) continue;
            if (it->second.kind == AlignKind::kAmbiguous) continue;
            if (!closure.contains(*it->second.concept_name)) continue;
            for (const Occurrence &o : c.occurrences) {
              if (o.doc_id == doc.id) expected.insert(doc.id);
            }
          }
        }
        REQUIRE(Query(index, *structure, key) == expected);
      }
    }
  }
}

}  // TEST_SUITE

}  // namespace
}  // namespace ontoterm
