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

#include "ontoterm/serialize.h"

#include "ontoterm/error.h"

namespace ontoterm {

namespace {

template <typename T, typename Parse>
T ParseEnum(const Json &j, Parse parse, std::string_view what) {
  auto v = parse(j.get<std::string>());
  if (!v) throw Error(ErrorCode::kSyntax, "bad " + std::string(what) + ": " + j.dump());
  return *v;
}

// Wraps nlohmann's type errors into E_SYNTAX.
template <typename F>
auto Guard(std::string_view what, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kSyntax, "malformed " + std::string(what) + ": " + e.what());
  }
}

Json Optional(const std::optional<std::string> &v) {
  return v ? Json(*v) : Json(nullptr);
}

Json Strings(const std::vector<std::string> &v) { return Json(v); }

Json Diffs(const std::vector<Differentia> &diffs) {
  Json out = Json::array();
  for (const Differentia &d : diffs) out.push_back({{"axis", d.axis}, {"value", d.value}});
  return out;
}

}  // namespace

std::string Dump(const Json &json) { return json.dump(2) + "\n"; }

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw Error(ErrorCode::kSyntax, std::string("invalid JSON: ") + e.what());
  }
}

Json CandidatesToJson(const std::vector<TermCandidate> &candidates) {
  Json out = Json::array();
  for (const TermCandidate &c : candidates) {
    Json occ = Json::array();
    for (const Occurrence &o : c.occurrences) {
      occ.push_back({{"doc_id", o.doc_id}, {"offset", o.offset}, {"end", o.end}});
    }
    out.push_back({{"lemmas", c.lemmas},
                   {"pattern_id", c.pattern_id},
                   {"head", c.head_lemma},
                   {"frequency", c.frequency},
                   {"occurrences", occ}});
  }
  return out;
}

std::vector<TermCandidate> CandidatesFromJson(const Json &json) {
  return Guard("candidates", [&] {
    std::vector<TermCandidate> out;
    for (const Json &j : json) {
      TermCandidate c;
      c.lemmas = j.at("lemmas").get<std::vector<std::string>>();
      c.pattern_id = j.at("pattern_id").get<std::string>();
      c.head_lemma = j.at("head").get<std::string>();
      c.frequency = j.at("frequency").get<size_t>();
      for (const Json &o : j.at("occurrences")) {
        c.occurrences.push_back({o.at("doc_id").get<std::string>(),
                                 o.at("offset").get<size_t>(), o.at("end").get<size_t>()});
      }
      out.push_back(std::move(c));
    }
    return out;
  });
}

Json LexNetToJson(const LexNet &lexnet) {
  Json terms = Json::array();
  for (const auto &[label, t] : lexnet.terms()) {
    terms.push_back({{"label", t.label}, {"head", t.head}, {"status", StatusName(t.status)}});
  }
  Json relations = Json::array();
  for (const auto &[key, r] : lexnet.relations()) {
    Json evidences = Json::array();
    for (Evidence e : r.evidences) evidences.push_back(EvidenceName(e));
    relations.push_back({{"kind", RelationKindName(r.kind)},
                         {"source", r.source},
                         {"target", r.target},
                         {"evidence", EvidenceName(r.evidence)},
                         {"evidences", evidences},
                         {"status", StatusName(r.status)}});
  }
  return {{"terms", terms}, {"relations", relations}};
}

LexNet LexNetFromJson(const Json &json) {
  auto [terms, relations] = Guard("network", [&] {
    std::vector<Term> terms;
    for (const Json &j : json.at("terms")) {
      terms.push_back({j.at("label").get<std::string>(), j.at("head").get<std::string>(),
                       ParseEnum<Status>(j.at("status"), ParseStatus, "status")});
    }
    std::vector<LexicalRelation> relations;
    for (const Json &j : json.at("relations")) {
      LexicalRelation r;
      r.kind = ParseEnum<RelationKind>(j.at("kind"), ParseRelationKind, "relation kind");
      r.source = j.at("source").get<std::string>();
      r.target = j.at("target").get<std::string>();
      r.evidence = ParseEnum<Evidence>(j.at("evidence"), ParseEvidence, "evidence");
      for (const Json &e : j.at("evidences")) {
        r.evidences.insert(ParseEnum<Evidence>(e, ParseEvidence, "evidence"));
      }
      r.status = ParseEnum<Status>(j.at("status"), ParseStatus, "status");
      relations.push_back(std::move(r));
    }
    return std::pair{std::move(terms), std::move(relations)};
  });
  return RestoreLexNet(std::move(terms), std::move(relations));
}

Json TaxonomyToJson(const Taxonomy &taxonomy) {
  Json concepts = Json::array();
  for (const auto &[id, c] : taxonomy.concepts) {
    concepts.push_back({{"id", c.id}, {"label", c.label}, {"terms", c.denoting_terms}});
  }
  Json edges = Json::array();
  for (const auto &[child, parent] : taxonomy.subsumption) {
    edges.push_back({{"child", child}, {"parent", parent}});
  }
  return {{"concepts", concepts}, {"subsumption", edges}};
}

Taxonomy TaxonomyFromJson(const Json &json) {
  Taxonomy t = Guard("taxonomy", [&] {
    Taxonomy t;
    for (const Json &j : json.at("concepts")) {
      Concept c{j.at("id").get<std::string>(), j.at("label").get<std::string>(),
                j.at("terms").get<std::vector<std::string>>()};
      t.concepts.emplace(c.id, std::move(c));
    }
    for (const Json &j : json.at("subsumption")) {
      t.subsumption.emplace(j.at("child").get<std::string>(),
                            j.at("parent").get<std::string>());
    }
    return t;
  });
  for (const auto &[child, parent] : t.subsumption) {
    if (!t.Contains(child) || !t.Contains(parent)) {
      throw Error(ErrorCode::kSyntax, "edge " + child + " -> " + parent +
                                          " references an undeclared concept");
    }
  }
  return t;
}

Json ViolationsToJson(const std::vector<Violation> &violations) {
  Json out = Json::array();
  for (const Violation &v : violations) {
    out.push_back({{"rule", RuleName(v.rule)}, {"message", v.message}, {"subjects", v.subjects}});
  }
  return out;
}

Json AlignmentResultToJson(const AlignmentResult &r) {
  return {{"term", r.term},
          {"concept", Optional(r.concept_name)},
          {"kind", AlignKindName(r.kind)},
          {"candidates", r.candidates}};
}

Json AlignmentsToJson(const std::map<std::string, AlignmentResult> &alignments) {
  Json out = Json::array();
  for (const auto &[term, r] : alignments) out.push_back(AlignmentResultToJson(r));
  return out;
}

std::map<std::string, AlignmentResult> AlignmentsFromJson(const Json &json) {
  return Guard("alignment", [&] {
    const Json &items = json.is_object() ? json.at("alignments") : json;
    std::map<std::string, AlignmentResult> out;
    for (const Json &j : items) {
      AlignmentResult r;
      r.term = j.at("term").get<std::string>();
      if (!j.at("concept").is_null()) r.concept_name = j.at("concept").get<std::string>();
      r.kind = ParseEnum<AlignKind>(j.at("kind"), ParseAlignKind, "alignment kind");
      r.candidates = j.at("candidates").get<std::vector<std::string>>();
      out.emplace(r.term, std::move(r));
    }
    return out;
  });
}

Json DiscrepancyToJson(const DiscrepancyReport &report) {
  Json entries = Json::array();
  for (const DiscrepancyEntry &e : report.entries) {
    entries.push_back({{"term", e.term},
                       {"aligned_concept", Optional(e.aligned_concept)},
                       {"projected_parent", e.projected_parent},
                       {"parent_concept", Optional(e.parent_concept)},
                       {"ok_parent_chain", e.ok_parent_chain},
                       {"verdict", VerdictName(e.verdict)}});
  }
  Json counts = Json::object();
  for (const auto &[v, n] : report.Counts()) counts[std::string(VerdictName(v))] = n;
  return {{"entries", entries}, {"counts", counts}};
}

Json DocIndexToJson(const DocIndex &index) {
  Json annotations = Json::array();
  for (const DocAnnotation &a : index.annotations) {
    annotations.push_back({{"doc_id", a.doc_id},
                           {"concept", a.concept_key},
                           {"source", AnnotationSourceName(a.source)}});
  }
  return {{"structure", index.structure},
          {"documents", index.documents},
          {"annotations", annotations},
          {"unaligned_only", index.unaligned_only},
          {"ambiguous_terms", index.ambiguous_terms}};
}

DocIndex DocIndexFromJson(const Json &json) {
  return Guard("index", [&] {
    DocIndex index;
    index.structure = json.at("structure").get<std::string>();
    index.documents = json.at("documents").get<std::vector<std::string>>();
    for (const Json &j : json.at("annotations")) {
      std::string source = j.at("source").get<std::string>();
      if (source != "MANUAL" && source != "TERM_OCCURRENCE") {
        throw Error(ErrorCode::kSyntax, "bad annotation source: " + source);
      }
      index.annotations.insert(
          {j.at("doc_id").get<std::string>(), j.at("concept").get<std::string>(),
           source == "MANUAL" ? AnnotationSource::kManual
                              : AnnotationSource::kTermOccurrence});
    }
    index.unaligned_only = json.at("unaligned_only").get<std::vector<std::string>>();
    index.ambiguous_terms = json.at("ambiguous_terms").get<std::vector<std::string>>();
    return index;
  });
}

Json RecallToJson(const RecallComparison &c) {
  auto side = [](const RecallSide &s) {
    return Json{{"structure", s.structure}, {"concept", s.concept_key}, {"documents", s.documents}};
  };
  Json explanations = Json::array();
  for (const RecallExplanation &e : c.explanations) {
    explanations.push_back({{"doc_id", e.doc_id},
                            {"matched_first", e.matched_first},
                            {"matched_second", e.matched_second}});
  }
  return {{"label", c.label},
          {"first", side(c.first)},
          {"second", side(c.second)},
          {"only_first", c.only_first},
          {"only_second", c.only_second},
          {"symmetric_difference", c.symmetric_difference},
          {"explanations", explanations}};
}

Json SimilarityToJson(const Similarity &s) {
  return {{"lca", s.lca},
          {"shared", Diffs(s.shared)},
          {"distinguishing_first", Diffs(s.distinguishing_first)},
          {"distinguishing_second", Diffs(s.distinguishing_second)}};
}

Json ClassificationToJson(const Classification &c) {
  return {{"classes", Strings(c.classes)}, {"sets", Strings(c.sets)}};
}

}  // namespace ontoterm
