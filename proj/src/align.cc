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

#include "ontoterm/align.h"

#include <algorithm>
#include <sstream>

#include "ontoterm/text.h"

namespace ontoterm {

std::set<std::string> DefaultStopwords() {
  return {"de", "du", "des", "d", "à", "au", "aux", "la", "le", "les", "l", "un", "une"};
}

std::set<std::string> ParseStopwords(std::string_view content) {
  std::set<std::string> out;
  std::istringstream in{std::string(content)};
  std::string line;
  while (std::getline(in, line)) {
    std::string word = text::Trim(line);
    if (word.empty() || word[0] == '#') continue;
    out.insert(text::Lower(text::Nfc(word)));
  }
  return out;
}

std::vector<std::string> ContentTokens(std::string_view label,
                                       const NormalizeOptions &options) {
  static const Lexicon kEmpty;
  const Lexicon &lexicon = options.lexicon != nullptr ? *options.lexicon : kEmpty;
  std::vector<std::string> out;
  for (const AnnotatedToken &token : Annotate({"", std::string(label)}, lexicon)) {
    auto cps = text::Decode(token.surface);
    if (cps.empty() || !text::IsWordChar(cps.front().value)) continue;
    for (std::string &word : text::SplitWhitespace(text::Lower(text::Nfc(token.lemma)))) {
      if (!options.stopwords.contains(word)) out.push_back(std::move(word));
    }
  }
  return out;
}

std::multiset<std::string> NormalizeLabel(std::string_view label,
                                          const NormalizeOptions &options) {
  std::vector<std::string> tokens = ContentTokens(label, options);
  return {tokens.begin(), tokens.end()};
}

std::string_view AlignKindName(AlignKind kind) {
  switch (kind) {
    case AlignKind::kExact: return "EXACT";
    case AlignKind::kDeclared: return "DECLARED";
    case AlignKind::kEllipsis: return "ELLIPSIS";
    case AlignKind::kAmbiguous: return "AMBIGUOUS";
    case AlignKind::kUnmatched: return "UNMATCHED";
  }
  return "UNMATCHED";
}

std::optional<AlignKind> ParseAlignKind(std::string_view name) {
  for (AlignKind k : {AlignKind::kExact, AlignKind::kDeclared, AlignKind::kEllipsis,
                      AlignKind::kAmbiguous, AlignKind::kUnmatched}) {
    if (AlignKindName(k) == name) return k;
  }
  return std::nullopt;
}

Aligner::Aligner(const OkOntology &ontology, NormalizeOptions options)
    : ontology_(&ontology), options_(std::move(options)) {
  for (const OkConcept &c : ontology.concepts()) {
    concept_bags_.emplace_back(c.name, NormalizeLabel(c.name, options_));
  }
}

AlignmentResult Aligner::Align(std::string_view term,
                               std::optional<std::string_view> head) const {
  AlignmentResult result;
  result.term = std::string(term);

  if (const Denotation *d = ontology_->FindDenotation(term)) {
    result.kind = AlignKind::kDeclared;
    result.concept_name = d->concept_name;
    return result;
  }

  std::multiset<std::string> bag = NormalizeLabel(term, options_);
  if (bag.empty()) return result;

  std::vector<std::string> exact;
  for (const auto &[name, concept_bag] : concept_bags_) {
    if (concept_bag == bag) exact.push_back(name);
  }
  if (exact.size() == 1) {
    result.kind = AlignKind::kExact;
    result.concept_name = exact.front();
    return result;
  }
  if (exact.size() > 1) {
    result.kind = AlignKind::kAmbiguous;
    result.candidates = std::move(exact);
    std::sort(result.candidates.begin(), result.candidates.end());
    return result;
  }

  std::string head_token;
  if (head) {
    std::vector<std::string> h = ContentTokens(*head, options_);
    if (!h.empty()) head_token = h.front();
  }
  if (head_token.empty()) head_token = ContentTokens(term, options_).front();

  std::vector<std::string> wider;
  for (const auto &[name, concept_bag] : concept_bags_) {
    if (concept_bag.size() <= bag.size()) continue;
    if (!concept_bag.contains(head_token)) continue;
    if (std::includes(concept_bag.begin(), concept_bag.end(), bag.begin(), bag.end())) {
      wider.push_back(name);
    }
  }
  if (wider.empty()) return result;

  auto depth = [&](const std::string &name) { return ontology_->GenusChain(name).size(); };
  const std::string deepest = *std::max_element(
      wider.begin(), wider.end(), [&](const std::string &a, const std::string &b) {
        return depth(a) < depth(b) || (depth(a) == depth(b) && a > b);
      });
  bool one_chain = std::all_of(wider.begin(), wider.end(), [&](const std::string &c) {
    return Subsumes(*ontology_, c, deepest);
  });
  if (one_chain) {
    result.kind = AlignKind::kEllipsis;
    result.concept_name = deepest;
  } else {
    result.kind = AlignKind::kAmbiguous;
    result.candidates = std::move(wider);
    std::sort(result.candidates.begin(), result.candidates.end());
  }
  return result;
}

AlignmentResult AlignTerm(std::string_view term, const OkOntology &ontology,
                          const NormalizeOptions &options) {
  return Aligner(ontology, options).Align(term);
}

std::map<std::string, AlignmentResult> AlignTaxonomy(const Taxonomy &taxonomy,
                                                     const Aligner &aligner) {
  std::map<std::string, AlignmentResult> out;
  for (const auto &[id, c] : taxonomy.concepts) {
    for (const std::string &term : c.denoting_terms) {
      out.emplace(term, aligner.Align(term));
    }
  }
  return out;
}

std::string_view VerdictName(Verdict verdict) {
  switch (verdict) {
    case Verdict::kAgree: return "AGREE";
    case Verdict::kParentElided: return "PARENT_ELIDED";
    case Verdict::kConflict: return "CONFLICT";
    case Verdict::kUnaligned: return "UNALIGNED";
  }
  return "UNALIGNED";
}

std::map<Verdict, size_t> DiscrepancyReport::Counts() const {
  std::map<Verdict, size_t> counts{{Verdict::kAgree, 0},
                                   {Verdict::kParentElided, 0},
                                   {Verdict::kConflict, 0},
                                   {Verdict::kUnaligned, 0}};
  for (const DiscrepancyEntry &e : entries) ++counts[e.verdict];
  return counts;
}

namespace {

struct ConceptAlignment {
  std::string term;
  std::optional<std::string> ok_concept;
};

// First denoting term that resolves to a concept, else the first term.
ConceptAlignment AlignmentOf(const Concept &c,
                             const std::map<std::string, AlignmentResult> &alignments) {
  for (const std::string &term : c.denoting_terms) {
    auto it = alignments.find(term);
    if (it != alignments.end() && it->second.concept_name) {
      return {term, it->second.concept_name};
    }
  }
  return {c.denoting_terms.empty() ? c.label : c.denoting_terms.front(), std::nullopt};
}

}  // namespace

DiscrepancyReport CompareStructures(
    const Taxonomy &taxonomy, const OkOntology &ontology,
    const std::map<std::string, AlignmentResult> &alignments) {
  DiscrepancyReport report;
  for (const auto &[id, c] : taxonomy.concepts) {
    std::vector<std::string> parents = taxonomy.Parents(id);
    if (parents.empty()) continue;
    std::sort(parents.begin(), parents.end());

    ConceptAlignment self = AlignmentOf(c, alignments);
    std::vector<std::string> chain;
    if (self.ok_concept && ontology.FindConcept(*self.ok_concept) != nullptr) {
      chain = ontology.GenusChain(*self.ok_concept);
    }

    DiscrepancyEntry best;
    bool have_best = false;
    for (const std::string &parent_id : parents) {
      const Concept &parent = taxonomy.concepts.at(parent_id);
      ConceptAlignment up = AlignmentOf(parent, alignments);
      DiscrepancyEntry entry;
      entry.term = self.term;
      entry.aligned_concept = self.ok_concept;
      entry.projected_parent = parent.label;
      entry.parent_concept = up.ok_concept;
      entry.ok_parent_chain = chain;
      if (!self.ok_concept || !up.ok_concept) {
        entry.verdict = Verdict::kUnaligned;
      } else if (!chain.empty() && chain.front() == *up.ok_concept) {
        entry.verdict = Verdict::kAgree;
      } else if (std::find(chain.begin(), chain.end(), *up.ok_concept) != chain.end()) {
        entry.verdict = Verdict::kParentElided;
      } else {
        entry.verdict = Verdict::kConflict;
      }
      if (!have_best || entry.verdict < best.verdict) {
        best = std::move(entry);
        have_best = true;
      }
    }
    report.entries.push_back(std::move(best));
  }
  return report;
}

}  // namespace ontoterm
