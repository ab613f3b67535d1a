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

#include "ontoterm/lexnet.h"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "ontoterm/error.h"
#include "ontoterm/text.h"

namespace ontoterm {
namespace {

// Longest window tried when spotting a known term next to a copula.
constexpr size_t kMaxTermTokens = 8;

std::string Quoted(std::string_view s) { return "\"" + std::string(s) + "\""; }

void RequireTerm(const std::map<std::string, Term> &terms,
                 const std::string &label) {
  if (!terms.contains(label)) {
    throw Error(ErrorCode::kUnknownTerm,
                "relation endpoint " + Quoted(label) + " is not a term");
  }
}

}  // namespace

std::string_view StatusName(Status status) {
  switch (status) {
    case Status::kCandidate: return "CANDIDATE";
    case Status::kValidated: return "VALIDATED";
    case Status::kRejected: return "REJECTED";
  }
  return "CANDIDATE";
}

std::string_view RelationKindName(RelationKind kind) {
  switch (kind) {
    case RelationKind::kHyponymy: return "HYPONYMY";
    case RelationKind::kSynonymy: return "SYNONYMY";
    case RelationKind::kMeronymy: return "MERONYMY";
  }
  return "HYPONYMY";
}

std::string_view EvidenceName(Evidence evidence) {
  switch (evidence) {
    case Evidence::kSameHead: return "SAME_HEAD";
    case Evidence::kCopulaPattern: return "COPULA_PATTERN";
    case Evidence::kDeclared: return "DECLARED";
  }
  return "SAME_HEAD";
}

namespace {

std::string Upper(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::optional<Status> ParseStatus(std::string_view name) {
  std::string n = Upper(name);
  if (n == "CANDIDATE") return Status::kCandidate;
  if (n == "VALIDATED") return Status::kValidated;
  if (n == "REJECTED") return Status::kRejected;
  return std::nullopt;
}

std::optional<RelationKind> ParseRelationKind(std::string_view name) {
  std::string n = Upper(name);
  if (n == "HYPONYMY") return RelationKind::kHyponymy;
  if (n == "SYNONYMY") return RelationKind::kSynonymy;
  if (n == "MERONYMY") return RelationKind::kMeronymy;
  return std::nullopt;
}

std::optional<Evidence> ParseEvidence(std::string_view name) {
  std::string n = Upper(name);
  if (n == "SAME_HEAD") return Evidence::kSameHead;
  if (n == "COPULA_PATTERN") return Evidence::kCopulaPattern;
  if (n == "DECLARED") return Evidence::kDeclared;
  return std::nullopt;
}

LexicalRelation MakeRelation(RelationKind kind, std::string source,
                             std::string target, Evidence evidence) {
  LexicalRelation r;
  r.kind = kind;
  r.source = std::move(source);
  r.target = std::move(target);
  r.evidence = evidence;
  r.evidences = {evidence};
  return r;
}

const Term *LexNet::FindTerm(std::string_view label) const {
  auto it = terms_.find(std::string(label));
  return it == terms_.end() ? nullptr : &it->second;
}

const LexicalRelation *LexNet::FindRelation(const RelationKey &key) const {
  auto it = relations_.find(key);
  return it == relations_.end() ? nullptr : &it->second;
}

std::vector<LexicalRelation> LexNet::RelationsOfKind(RelationKind kind) const {
  std::vector<LexicalRelation> out;
  for (const auto &[key, r] : relations_) {
    if (key.kind == kind) out.push_back(r);
  }
  return out;
}

void LexNet::Merge(LexicalRelation relation) {
  if (relation.evidences.empty()) relation.evidences = {relation.evidence};
  auto [it, inserted] = relations_.try_emplace(relation.key(), relation);
  if (!inserted) {
    LexicalRelation &existing = it->second;
    existing.evidences.insert(relation.evidences.begin(),
                              relation.evidences.end());
    existing.evidence = *existing.evidences.rbegin();
  }
}

std::vector<Term> TermsFromCandidates(std::span<const TermCandidate> candidates) {
  std::vector<Term> terms;
  terms.reserve(candidates.size());
  for (const TermCandidate &c : candidates) {
    terms.push_back({c.Label(), c.head_lemma, Status::kCandidate});
  }
  return terms;
}

std::vector<LexicalRelation> SameHeadHyponyms(
    std::span<const TermCandidate> candidates) {
  std::unordered_map<std::string, size_t> length_by_label;
  for (const TermCandidate &c : candidates) {
    length_by_label.emplace(c.Label(), c.lemmas.size());
  }
  std::map<RelationKey, LexicalRelation> edges;
  for (const TermCandidate &c : candidates) {
    auto it = length_by_label.find(c.head_lemma);
    if (it == length_by_label.end() || c.lemmas.size() <= it->second) continue;
    LexicalRelation r = MakeRelation(RelationKind::kHyponymy, c.Label(),
                                     c.head_lemma, Evidence::kSameHead);
    edges.emplace(r.key(), std::move(r));
  }
  std::vector<LexicalRelation> out;
  for (auto &[key, r] : edges) out.push_back(std::move(r));
  return out;
}

std::vector<LexicalRelation> CopulaRelations(
    std::span<const std::vector<AnnotatedToken>> documents,
    const std::set<std::string> &known_terms) {
  std::map<RelationKey, LexicalRelation> found;
  for (const std::vector<AnnotatedToken> &tokens : documents) {
    for (size_t i = 1; i + 1 < tokens.size(); ++i) {
      std::string copula = text::Lower(tokens[i].surface);
      if (copula != "est" && copula != "sont") continue;

      // Longest known term ending right before the copula.
      std::optional<std::string> subject;
      size_t lowest = i > kMaxTermTokens ? i - kMaxTermTokens : 0;
      std::vector<std::string> window;
      for (size_t j = i; j-- > lowest;) {
        window.insert(window.begin(), tokens[j].lemma);
        std::string label = text::Join(window, " ");
        if (known_terms.contains(label)) subject = label;
      }
      if (!subject) continue;

      size_t start = i + 1;
      if (tokens[start].pos == Pos::kDet && start + 1 < tokens.size()) ++start;
      std::optional<std::string> object;
      window.clear();
      for (size_t k = start; k < tokens.size() && k < start + kMaxTermTokens; ++k) {
        window.push_back(tokens[k].lemma);
        std::string label = text::Join(window, " ");
        if (known_terms.contains(label)) object = label;
      }
      if (!object || *object == *subject) continue;
      LexicalRelation r = MakeRelation(RelationKind::kHyponymy, *subject,
                                       *object, Evidence::kCopulaPattern);
      found.emplace(r.key(), std::move(r));
    }
  }
  std::vector<LexicalRelation> out;
  for (auto &[key, r] : found) out.push_back(std::move(r));
  return out;
}

LexNet BuildNetwork(
    std::span<const Term> terms, std::span<const LexicalRelation> relations,
    std::span<const std::pair<std::string, std::string>> synonym_declarations) {
  LexNet net;
  for (const Term &t : terms) net.terms_.emplace(t.label, t);
  for (const LexicalRelation &r : relations) {
    RequireTerm(net.terms_, r.source);
    RequireTerm(net.terms_, r.target);
    if (r.source == r.target) continue;
    net.Merge(r);
    if (r.kind == RelationKind::kSynonymy) {
      LexicalRelation reverse = r;
      std::swap(reverse.source, reverse.target);
      net.Merge(std::move(reverse));
    }
  }
  for (const auto &[a, b] : synonym_declarations) {
    RequireTerm(net.terms_, a);
    RequireTerm(net.terms_, b);
    if (a == b) continue;
    net.Merge(MakeRelation(RelationKind::kSynonymy, a, b, Evidence::kDeclared));
    net.Merge(MakeRelation(RelationKind::kSynonymy, b, a, Evidence::kDeclared));
  }
  return net;
}

LexNet RestoreLexNet(std::vector<Term> terms,
                     std::vector<LexicalRelation> relations) {
  LexNet net;
  for (Term &t : terms) {
    std::string label = t.label;
    net.terms_.emplace(std::move(label), std::move(t));
  }
  for (LexicalRelation &r : relations) {
    RequireTerm(net.terms_, r.source);
    RequireTerm(net.terms_, r.target);
    if (r.source == r.target) continue;
    net.Merge(r);
  }
  // Mirror any synonymy edge stored one-way.
  for (const LexicalRelation &r : net.RelationsOfKind(RelationKind::kSynonymy)) {
    LexicalRelation reverse = r;
    std::swap(reverse.source, reverse.target);
    net.relations_.try_emplace(reverse.key(), reverse);
  }
  for (auto &[key, r] : net.relations_) {
    if (net.terms_.at(r.source).status == Status::kRejected ||
        net.terms_.at(r.target).status == Status::kRejected) {
      r.status = Status::kRejected;
    }
  }
  return net;
}

Declarations ParseDeclarations(std::string_view content) {
  Declarations out;
  std::istringstream in{std::string(content)};
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string trimmed = text::Trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    auto words = text::SplitArgs(trimmed);
    if (!words || words->size() != 3) {
      throw Error(ErrorCode::kSyntax,
                  "declarations line " + std::to_string(line_number) +
                      ": expected <synonym|meronym|hyponym> \"<a>\" \"<b>\"");
    }
    const std::string &verb = (*words)[0];
    std::string a = text::Nfc((*words)[1]);
    std::string b = text::Nfc((*words)[2]);
    if (verb == "synonym") {
      out.synonyms.emplace_back(std::move(a), std::move(b));
    } else if (verb == "meronym") {
      out.relations.push_back(MakeRelation(RelationKind::kMeronymy, std::move(a),
                                           std::move(b), Evidence::kDeclared));
    } else if (verb == "hyponym") {
      out.relations.push_back(MakeRelation(RelationKind::kHyponymy, std::move(a),
                                           std::move(b), Evidence::kDeclared));
    } else {
      throw Error(ErrorCode::kSyntax, "declarations line " +
                                          std::to_string(line_number) +
                                          ": unknown declaration '" + verb + "'");
    }
  }
  return out;
}

LexNet ApplyValidation(const LexNet &lexnet, std::string_view decisions) {
  LexNet net = lexnet;
  std::istringstream in{std::string(decisions)};
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string trimmed = text::Trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    const std::string where = "decisions line " + std::to_string(line_number);
    auto words = text::SplitArgs(trimmed);
    if (!words || words->size() < 3) {
      throw Error(ErrorCode::kSyntax, where + ": malformed decision");
    }
    const std::string &verb = (*words)[0];
    if (verb != "validate" && verb != "reject") {
      throw Error(ErrorCode::kSyntax, where + ": expected validate or reject");
    }
    const Status status = verb == "validate" ? Status::kValidated : Status::kRejected;
    const std::string &target = (*words)[1];

    if (target == "term" && words->size() == 3) {
      std::string label = text::Nfc((*words)[2]);
      auto it = net.terms_.find(label);
      if (it == net.terms_.end()) {
        throw Error(ErrorCode::kUnknownRef, where + ": no term " + Quoted(label));
      }
      it->second.status = status;
    } else if (target == "relation" && words->size() == 5) {
      std::optional<RelationKind> kind = ParseRelationKind((*words)[2]);
      if (!kind) {
        throw Error(ErrorCode::kSyntax,
                    where + ": unknown relation kind '" + (*words)[2] + "'");
      }
      RelationKey key{*kind, text::Nfc((*words)[3]), text::Nfc((*words)[4])};
      auto it = net.relations_.find(key);
      if (it == net.relations_.end()) {
        throw Error(ErrorCode::kUnknownRef,
                    where + ": no " + std::string(RelationKindName(*kind)) +
                        " relation " + Quoted(key.source) + " -> " +
                        Quoted(key.target));
      }
      it->second.status = status;
      if (*kind == RelationKind::kSynonymy) {
        auto reverse = net.relations_.find({*kind, key.target, key.source});
        if (reverse != net.relations_.end()) reverse->second.status = status;
      }
      if (status == Status::kValidated) {
        for (const std::string *label : {&key.source, &key.target}) {
          Term &term = net.terms_.at(*label);
          if (term.status == Status::kCandidate) term.status = Status::kValidated;
        }
      }
    } else {
      throw Error(ErrorCode::kSyntax, where + ": malformed decision");
    }
  }

  for (auto &[key, r] : net.relations_) {
    if (net.terms_.at(r.source).status == Status::kRejected ||
        net.terms_.at(r.target).status == Status::kRejected) {
      r.status = Status::kRejected;
    }
  }
  if (auto cycle = FindValidatedCycle(net)) {
    throw Error(ErrorCode::kCycle,
                "validated hyponymy cycle: " + text::Join(*cycle, " -> "));
  }
  return net;
}

std::optional<std::vector<std::string>> FindValidatedCycle(const LexNet &lexnet) {
  std::map<std::string, std::vector<std::string>> adjacency;
  for (const auto &[key, r] : lexnet.relations()) {
    if (key.kind == RelationKind::kHyponymy && r.status == Status::kValidated) {
      adjacency[key.source].push_back(key.target);
    }
  }
  enum Color { kWhite, kGrey, kBlack };
  std::map<std::string, Color> color;
  std::vector<std::string> path;

  // Iterative DFS; the frame keeps the next neighbor index to visit.
  for (const auto &[start, unused] : adjacency) {
    if (color[start] != kWhite) continue;
    std::vector<std::pair<std::string, size_t>> stack{{start, 0}};
    color[start] = kGrey;
    path.push_back(start);
    while (!stack.empty()) {
      auto &[node, next] = stack.back();
      const auto &out = adjacency[node];
      if (next < out.size()) {
        const std::string neighbor = out[next++];
        if (color[neighbor] == kGrey) {
          auto from = std::find(path.begin(), path.end(), neighbor);
          std::vector<std::string> cycle(from, path.end());
          cycle.push_back(neighbor);
          return cycle;
        }
        if (color[neighbor] == kWhite) {
          color[neighbor] = kGrey;
          path.push_back(neighbor);
          stack.emplace_back(neighbor, 0);
        }
      } else {
        color[node] = kBlack;
        path.pop_back();
        stack.pop_back();
      }
    }
  }
  return std::nullopt;
}

std::vector<std::pair<std::string, std::string>> FindContradictions(
    const LexNet &lexnet) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto &[key, r] : lexnet.relations()) {
    if (key.kind != RelationKind::kHyponymy || r.status == Status::kRejected) continue;
    if (key.source >= key.target) continue;
    const LexicalRelation *reverse =
        lexnet.FindRelation({RelationKind::kHyponymy, key.target, key.source});
    if (reverse != nullptr && reverse->status != Status::kRejected) {
      out.emplace_back(key.source, key.target);
    }
  }
  return out;
}

}  // namespace ontoterm
