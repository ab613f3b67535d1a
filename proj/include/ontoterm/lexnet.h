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

// Lexical network: terms linked by hyponymy, synonymy and meronymy, each
// relation carrying the evidence that produced it and an expert status.

#ifndef ONTOTERM_LEXNET_H_
#define ONTOTERM_LEXNET_H_

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ontoterm/corpus.h"

namespace ontoterm {

enum class Status { kCandidate, kValidated, kRejected };
enum class RelationKind { kHyponymy, kSynonymy, kMeronymy };

// Declared in increasing strength.
enum class Evidence { kSameHead, kCopulaPattern, kDeclared };

std::string_view StatusName(Status status);
std::string_view RelationKindName(RelationKind kind);
std::string_view EvidenceName(Evidence evidence);
std::optional<Status> ParseStatus(std::string_view name);
std::optional<RelationKind> ParseRelationKind(std::string_view name);
std::optional<Evidence> ParseEvidence(std::string_view name);

struct Term {
  std::string label;
  std::string head;
  Status status = Status::kCandidate;
};

struct RelationKey {
  RelationKind kind;
  std::string source;
  std::string target;

  auto operator<=>(const RelationKey &) const = default;
};

struct LexicalRelation {
  RelationKind kind = RelationKind::kHyponymy;
  std::string source;
  std::string target;
  // Strongest evidence; every tag seen is kept in `evidences`.
  Evidence evidence = Evidence::kSameHead;
  std::set<Evidence> evidences;
  Status status = Status::kCandidate;

  RelationKey key() const { return {kind, source, target}; }
};

LexicalRelation MakeRelation(RelationKind kind, std::string source,
                             std::string target, Evidence evidence);

class LexNet {
 public:
  LexNet() = default;

  const std::map<std::string, Term> &terms() const { return terms_; }
  const std::map<RelationKey, LexicalRelation> &relations() const {
    return relations_;
  }

  const Term *FindTerm(std::string_view label) const;
  const LexicalRelation *FindRelation(const RelationKey &key) const;

  // Relations of one kind, in key order.
  std::vector<LexicalRelation> RelationsOfKind(RelationKind kind) const;

 private:
  friend LexNet BuildNetwork(std::span<const Term>,
                             std::span<const LexicalRelation>,
                             std::span<const std::pair<std::string, std::string>>);
  friend LexNet ApplyValidation(const LexNet &, std::string_view);
  friend LexNet RestoreLexNet(std::vector<Term>, std::vector<LexicalRelation>);

  void Merge(LexicalRelation relation);

  std::map<std::string, Term> terms_;
  std::map<RelationKey, LexicalRelation> relations_;
};

// One CANDIDATE term per extracted candidate.
std::vector<Term> TermsFromCandidates(std::span<const TermCandidate> candidates);

// HYPONYMY(t1 -> t2, SAME_HEAD) whenever t2's full label equals t1's head and
// t1 has more lemmas than t2. Only single-head hypernyms are ever reached.
std::vector<LexicalRelation> SameHeadHyponyms(
    std::span<const TermCandidate> candidates);

// Matches DET? A ("est"|"sont") DET? B over token lemmas, A and B being the
// longest known terms adjacent to the copula. Self-loops are dropped.
std::vector<LexicalRelation> CopulaRelations(
    std::span<const std::vector<AnnotatedToken>> documents,
    const std::set<std::string> &known_terms);

// Deduplicates relations, merges evidence, stores synonymy symmetrically and
// adds each declared synonym pair with DECLARED evidence. Throws
// E_UNKNOWN_TERM for an endpoint missing from `terms`.
LexNet BuildNetwork(
    std::span<const Term> terms, std::span<const LexicalRelation> relations,
    std::span<const std::pair<std::string, std::string>> synonym_declarations);

// Rebuilds a network from serialized parts, checking every invariant.
LexNet RestoreLexNet(std::vector<Term> terms,
                     std::vector<LexicalRelation> relations);

// Expert declarations file:
//   synonym "<a>" "<b>"
//   meronym "<part>" "<whole>"
//   hyponym "<specific>" "<general>"
struct Declarations {
  std::vector<std::pair<std::string, std::string>> synonyms;
  std::vector<LexicalRelation> relations;
};
Declarations ParseDeclarations(std::string_view content);

// Decisions file, one per line:
//   validate|reject term "<label>"
//   validate|reject relation <kind> "<src>" "<dst>"
// Validating a relation also validates its CANDIDATE endpoints; rejecting a
// term rejects every incident relation. Synonymy decisions apply to both
// directions. Throws E_UNKNOWN_REF, E_SYNTAX, or E_CYCLE if the validated
// hyponymy graph would become cyclic.
LexNet ApplyValidation(const LexNet &lexnet, std::string_view decisions);

// Labels along a cycle of VALIDATED hyponymy edges, if any.
std::optional<std::vector<std::string>> FindValidatedCycle(const LexNet &lexnet);

// Pairs of terms with hyponymy asserted in both directions ("A est B" and
// "B est A"), left for the expert to settle.
std::vector<std::pair<std::string, std::string>> FindContradictions(
    const LexNet &lexnet);

}  // namespace ontoterm

#endif  // ONTOTERM_LEXNET_H_
