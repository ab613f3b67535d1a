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

// Concept-indexed document retrieval. Documents are attached only to the
// concepts their terms align to; a query for a concept returns the documents
// of every concept it subsumes, resolved at query time.

#ifndef ONTOTERM_RETRIEVAL_H_
#define ONTOTERM_RETRIEVAL_H_

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ontoterm/align.h"
#include "ontoterm/corpus.h"
#include "ontoterm/okmodel.h"
#include "ontoterm/projection.h"

namespace ontoterm {

// Either a projected taxonomy or an expert ontology, seen as a set of concept
// keys with a subsumption closure.
class ConceptStructure {
 public:
  virtual ~ConceptStructure() = default;

  // "projected" or "ok".
  virtual std::string_view kind() const = 0;
  virtual bool Contains(std::string_view concept_key) const = 0;
  // Reflexive down-closure; throws E_UNKNOWN_CONCEPT.
  virtual std::set<std::string> Closure(std::string_view concept_key) const = 0;
  // Concept a user-facing label designates, if any.
  virtual std::optional<std::string> Resolve(std::string_view label) const = 0;
};

class ProjectedStructure : public ConceptStructure {
 public:
  explicit ProjectedStructure(Taxonomy taxonomy) : taxonomy_(std::move(taxonomy)) {}

  std::string_view kind() const override { return "projected"; }
  bool Contains(std::string_view concept_key) const override;
  std::set<std::string> Closure(std::string_view concept_key) const override;
  std::optional<std::string> Resolve(std::string_view label) const override;

  const Taxonomy &taxonomy() const { return taxonomy_; }

 private:
  Taxonomy taxonomy_;
};

class OkStructure : public ConceptStructure {
 public:
  explicit OkStructure(OkOntology ontology, NormalizeOptions options = {});
  OkStructure(const OkStructure &) = delete;
  OkStructure &operator=(const OkStructure &) = delete;

  std::string_view kind() const override { return "ok"; }
  bool Contains(std::string_view concept_key) const override;
  std::set<std::string> Closure(std::string_view concept_key) const override;
  // DECLARED, EXACT or ELLIPSIS alignment of the label.
  std::optional<std::string> Resolve(std::string_view label) const override;

  const OkOntology &ontology() const { return ontology_; }
  const Aligner &aligner() const { return aligner_; }

 private:
  OkOntology ontology_;
  Aligner aligner_;
};

enum class AnnotationSource { kTermOccurrence, kManual };

std::string_view AnnotationSourceName(AnnotationSource source);

struct DocAnnotation {
  std::string doc_id;
  std::string concept_key;
  AnnotationSource source = AnnotationSource::kTermOccurrence;

  auto operator<=>(const DocAnnotation &) const = default;
};

struct DocIndex {
  std::string structure;
  std::set<DocAnnotation> annotations;
  // Every indexed document id, sorted.
  std::vector<std::string> documents;
  // Documents left without annotation (E_UNALIGNED_ONLY, warning level).
  std::vector<std::string> unaligned_only;
  // Terms skipped because their alignment was AMBIGUOUS.
  std::vector<std::string> ambiguous_terms;

  // Documents annotated directly with the concept.
  std::set<std::string> DirectDocuments(std::string_view concept_key) const;
};

// Alignment of a taxonomy's own denoting terms onto itself (EXACT).
std::map<std::string, AlignmentResult> IdentityAlignment(const Taxonomy &taxonomy);

// Every occurrence of an aligned candidate term yields a TERM_OCCURRENCE
// annotation. Terms absent from `alignment`, unmatched, ambiguous, or aligned
// outside the structure contribute nothing.
DocIndex IndexCorpus(const Corpus &corpus, std::span<const TermCandidate> candidates,
                     const ConceptStructure &structure,
                     const std::map<std::string, AlignmentResult> &alignment);

// Adds (doc, concept, MANUAL); throws E_UNKNOWN_CONCEPT.
void AddManualAnnotation(DocIndex &index, const ConceptStructure &structure,
                         std::string doc_id, std::string concept_key);

// Union of the documents of every concept in the closure.
std::set<std::string> Query(const DocIndex &index, const ConceptStructure &structure,
                            std::string_view concept_key);

struct RecallSide {
  std::string structure;
  std::string concept_key;
  std::set<std::string> documents;
};

struct RecallExplanation {
  std::string doc_id;
  // Closure members through which the document matched on each side.
  std::vector<std::string> matched_first;
  std::vector<std::string> matched_second;
};

struct RecallComparison {
  std::string label;
  RecallSide first;
  RecallSide second;
  std::set<std::string> only_first;
  std::set<std::string> only_second;
  std::set<std::string> symmetric_difference;
  std::vector<RecallExplanation> explanations;
};

// Throws E_UNRESOLVABLE naming the structure the label is absent from.
RecallComparison CompareRecall(const DocIndex &index_a,
                               const ConceptStructure &structure_a,
                               const DocIndex &index_b,
                               const ConceptStructure &structure_b,
                               std::string_view concept_label);

}  // namespace ontoterm

#endif  // ONTOTERM_RETRIEVAL_H_
