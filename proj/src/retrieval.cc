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

#include "ontoterm/retrieval.h"

#include <algorithm>

#include "ontoterm/error.h"

namespace ontoterm {

bool ProjectedStructure::Contains(std::string_view concept_key) const {
  return taxonomy_.Contains(concept_key);
}

std::set<std::string> ProjectedStructure::Closure(std::string_view concept_key) const {
  return SubsumedClosure(taxonomy_, concept_key);
}

std::optional<std::string> ProjectedStructure::Resolve(std::string_view label) const {
  if (const Concept *c = taxonomy_.Resolve(label)) return c->id;
  return std::nullopt;
}

OkStructure::OkStructure(OkOntology ontology, NormalizeOptions options)
    : ontology_(std::move(ontology)), aligner_(ontology_, std::move(options)) {}

bool OkStructure::Contains(std::string_view concept_key) const {
  return ontology_.FindConcept(concept_key) != nullptr;
}

std::set<std::string> OkStructure::Closure(std::string_view concept_key) const {
  std::vector<std::string> d = Descendants(ontology_, concept_key);
  return {d.begin(), d.end()};
}

std::optional<std::string> OkStructure::Resolve(std::string_view label) const {
  if (ontology_.FindConcept(label) != nullptr) return std::string(label);
  AlignmentResult r = aligner_.Align(label);
  return r.concept_name;
}

std::string_view AnnotationSourceName(AnnotationSource source) {
  return source == AnnotationSource::kManual ? "MANUAL" : "TERM_OCCURRENCE";
}

std::set<std::string> DocIndex::DirectDocuments(std::string_view concept_key) const {
  std::set<std::string> out;
  for (const DocAnnotation &a : annotations) {
    if (a.concept_key == concept_key) out.insert(a.doc_id);
  }
  return out;
}

std::map<std::string, AlignmentResult> IdentityAlignment(const Taxonomy &taxonomy) {
  std::map<std::string, AlignmentResult> out;
  for (const auto &[id, c] : taxonomy.concepts) {
    for (const std::string &term : c.denoting_terms) {
      AlignmentResult r;
      r.term = term;
      r.kind = AlignKind::kExact;
      r.concept_name = id;
      out.emplace(term, std::move(r));
    }
  }
  return out;
}

DocIndex IndexCorpus(const Corpus &corpus, std::span<const TermCandidate> candidates,
                     const ConceptStructure &structure,
                     const std::map<std::string, AlignmentResult> &alignment) {
  DocIndex index;
  index.structure = std::string(structure.kind());
  for (const Document &doc : corpus) index.documents.push_back(doc.id);
  std::sort(index.documents.begin(), index.documents.end());

  std::set<std::string> ambiguous;
  for (const TermCandidate &candidate : candidates) {
    auto it = alignment.find(candidate.Label());
    if (it == alignment.end()) continue;
    const AlignmentResult &r = it->second;
    if (r.kind == AlignKind::kAmbiguous) {
      ambiguous.insert(r.term);
      continue;
    }
    if (!r.concept_name || !structure.Contains(*r.concept_name)) continue;
    for (const Occurrence &occ : candidate.occurrences) {
      index.annotations.insert({occ.doc_id, *r.concept_name,
                                AnnotationSource::kTermOccurrence});
    }
  }
  index.ambiguous_terms.assign(ambiguous.begin(), ambiguous.end());

  std::set<std::string> annotated;
  for (const DocAnnotation &a : index.annotations) annotated.insert(a.doc_id);
  for (const std::string &doc : index.documents) {
    if (!annotated.contains(doc)) index.unaligned_only.push_back(doc);
  }
  return index;
}

void AddManualAnnotation(DocIndex &index, const ConceptStructure &structure,
                         std::string doc_id, std::string concept_key) {
  if (!structure.Contains(concept_key)) {
    throw Error(ErrorCode::kUnknownConcept, "no concept '" + concept_key + "' in the " +
                                                std::string(structure.kind()) +
                                                " structure");
  }
  if (std::find(index.documents.begin(), index.documents.end(), doc_id) ==
      index.documents.end()) {
    index.documents.insert(
        std::upper_bound(index.documents.begin(), index.documents.end(), doc_id), doc_id);
  }
  std::erase(index.unaligned_only, doc_id);
  index.annotations.insert({std::move(doc_id), std::move(concept_key),
                            AnnotationSource::kManual});
}

std::set<std::string> Query(const DocIndex &index, const ConceptStructure &structure,
                            std::string_view concept_key) {
  std::set<std::string> closure = structure.Closure(concept_key);
  std::set<std::string> out;
  for (const DocAnnotation &a : index.annotations) {
    if (closure.contains(a.concept_key)) out.insert(a.doc_id);
  }
  return out;
}

RecallComparison CompareRecall(const DocIndex &index_a,
                               const ConceptStructure &structure_a,
                               const DocIndex &index_b,
                               const ConceptStructure &structure_b,
                               std::string_view concept_label) {
  auto resolve = [&](const ConceptStructure &s) {
    std::optional<std::string> key = s.Resolve(concept_label);
    if (!key) {
      throw Error(ErrorCode::kUnresolvable,
                  "\"" + std::string(concept_label) + "\" does not resolve in the " +
                      std::string(s.kind()) + " structure");
    }
    return *key;
  };
  RecallComparison out;
  out.label = std::string(concept_label);
  out.first = {std::string(structure_a.kind()), resolve(structure_a), {}};
  out.second = {std::string(structure_b.kind()), resolve(structure_b), {}};

  std::set<std::string> closure_a = structure_a.Closure(out.first.concept_key);
  std::set<std::string> closure_b = structure_b.Closure(out.second.concept_key);
  std::map<std::string, std::set<std::string>> via_a, via_b;
  for (const DocAnnotation &a : index_a.annotations) {
    if (closure_a.contains(a.concept_key)) via_a[a.doc_id].insert(a.concept_key);
  }
  for (const DocAnnotation &a : index_b.annotations) {
    if (closure_b.contains(a.concept_key)) via_b[a.doc_id].insert(a.concept_key);
  }
  for (const auto &[doc, unused] : via_a) out.first.documents.insert(doc);
  for (const auto &[doc, unused] : via_b) out.second.documents.insert(doc);

  std::set_difference(out.first.documents.begin(), out.first.documents.end(),
                      out.second.documents.begin(), out.second.documents.end(),
                      std::inserter(out.only_first, out.only_first.end()));
  std::set_difference(out.second.documents.begin(), out.second.documents.end(),
                      out.first.documents.begin(), out.first.documents.end(),
                      std::inserter(out.only_second, out.only_second.end()));
  std::set_union(out.only_first.begin(), out.only_first.end(), out.only_second.begin(),
                 out.only_second.end(),
                 std::inserter(out.symmetric_difference, out.symmetric_difference.end()));

  std::set<std::string> all = out.first.documents;
  all.insert(out.second.documents.begin(), out.second.documents.end());
  for (const std::string &doc : all) {
    RecallExplanation e;
    e.doc_id = doc;
    if (auto it = via_a.find(doc); it != via_a.end()) {
      e.matched_first.assign(it->second.begin(), it->second.end());
    }
    if (auto it = via_b.find(doc); it != via_b.end()) {
      e.matched_second.assign(it->second.begin(), it->second.end());
    }
    out.explanations.push_back(std::move(e));
  }
  return out;
}

}  // namespace ontoterm
