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

// Term-to-concept alignment with detection of elliptical terms, and the
// structural diff between a projected taxonomy and an expert ontology.

#ifndef ONTOTERM_ALIGN_H_
#define ONTOTERM_ALIGN_H_

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ontoterm/corpus.h"
#include "ontoterm/okmodel.h"
#include "ontoterm/projection.h"

namespace ontoterm {

// {de, du, des, d, à, au, aux, la, le, les, l, un, une}
std::set<std::string> DefaultStopwords();

// One word per line, '#' comments.
std::set<std::string> ParseStopwords(std::string_view content);

struct NormalizeOptions {
  std::set<std::string> stopwords = DefaultStopwords();
  // When set, tokens the lexicon covers are compared by lemma.
  const Lexicon *lexicon = nullptr;
};

// Content tokens of a label in order: NFC, lowercased, elisions split,
// punctuation and stopwords dropped.
std::vector<std::string> ContentTokens(std::string_view label,
                                       const NormalizeOptions &options = {});

// The same tokens as a multiset.
std::multiset<std::string> NormalizeLabel(std::string_view label,
                                          const NormalizeOptions &options = {});

enum class AlignKind { kExact, kDeclared, kEllipsis, kAmbiguous, kUnmatched };

std::string_view AlignKindName(AlignKind kind);
std::optional<AlignKind> ParseAlignKind(std::string_view name);

struct AlignmentResult {
  std::string term;
  std::optional<std::string> concept_name;
  AlignKind kind = AlignKind::kUnmatched;
  std::vector<std::string> candidates;
};

// Resolution order: DECLARED (denotation map), EXACT (equal token bags, one
// concept), ELLIPSIS (term bag a strict sub-bag of the concept's and the
// term's head token present; several candidates resolve to the deepest when
// they lie on one genus chain), otherwise AMBIGUOUS or UNMATCHED.
class Aligner {
 public:
  Aligner(const OkOntology &ontology, NormalizeOptions options = {});

  // `head` defaults to the term's first content token.
  AlignmentResult Align(std::string_view term,
                        std::optional<std::string_view> head = std::nullopt) const;

  const NormalizeOptions &options() const { return options_; }

 private:
  const OkOntology *ontology_;
  NormalizeOptions options_;
  std::vector<std::pair<std::string, std::multiset<std::string>>> concept_bags_;
};

AlignmentResult AlignTerm(std::string_view term, const OkOntology &ontology,
                          const NormalizeOptions &options = {});

// Alignment of every denoting term of the taxonomy, keyed by term.
std::map<std::string, AlignmentResult> AlignTaxonomy(const Taxonomy &taxonomy,
                                                     const Aligner &aligner);

enum class Verdict { kAgree, kParentElided, kConflict, kUnaligned };

std::string_view VerdictName(Verdict verdict);

struct DiscrepancyEntry {
  std::string term;
  std::optional<std::string> aligned_concept;
  std::string projected_parent;
  std::optional<std::string> parent_concept;
  std::vector<std::string> ok_parent_chain;
  Verdict verdict = Verdict::kUnaligned;
};

struct DiscrepancyReport {
  std::vector<DiscrepancyEntry> entries;

  std::map<Verdict, size_t> Counts() const;
};

// One entry per projected concept that has a parent. A concept with several
// projected parents reports its best verdict (AGREE > PARENT_ELIDED >
// CONFLICT > UNALIGNED); ties go to the smallest parent id.
DiscrepancyReport CompareStructures(
    const Taxonomy &taxonomy, const OkOntology &ontology,
    const std::map<std::string, AlignmentResult> &alignments);

}  // namespace ontoterm

#endif  // ONTOTERM_ALIGN_H_
