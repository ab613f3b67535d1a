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

#include "ontoterm/export.h"

#include <algorithm>
#include <set>

#include "ontoterm/error.h"
#include "ontoterm/text.h"

namespace ontoterm {

std::string MangleLabel(std::string_view label) {
  std::string plain = text::ToAscii(text::Nfc(label));
  std::string out;
  std::string word;
  auto flush = [&] {
    if (!word.empty()) out += text::Capitalize(word);
    word.clear();
  };
  for (const text::CodePoint &cp : text::Decode(plain)) {
    if (text::IsAlnum(cp.value)) {
      word += cp.utf8;
    } else {
      flush();
    }
  }
  flush();
  if (out.empty() || (out[0] >= '0' && out[0] <= '9')) out.insert(0, "C");
  return out;
}

const std::string &NameMangler::Name(const std::string &label) {
  auto it = by_label_.find(label);
  if (it != by_label_.end()) return it->second;
  std::string base = MangleLabel(label);
  std::string name = base;
  for (int n = 2; by_name_.contains(name); ++n) name = base + "_" + std::to_string(n);
  by_name_.emplace(name, label);
  return by_label_.emplace(label, name).first->second;
}

std::optional<std::string> NameMangler::Label(std::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

NameMangler ConceptNames(const OkOntology &ontology) {
  NameMangler mangler;
  for (const std::string &c : ontology.PreOrder()) mangler.Name(c);
  return mangler;
}

namespace {

void RequireConsistent(const OkOntology &ontology) {
  std::vector<Violation> violations = CheckConsistency(ontology);
  if (violations.empty()) return;
  std::string msg = "refusing to export an inconsistent ontology:";
  for (const Violation &v : violations) msg += "\n  " + RuleName(v.rule) + " " + v.message;
  throw Error(ErrorCode::kInconsistent, msg);
}

// Children of `parent` grouped by differentia axis, groups of two or more,
// each in declaration order.
std::vector<std::vector<std::string>> SiblingGroups(const OkOntology &ontology,
                                                    const std::string &parent) {
  std::map<std::string, std::vector<std::string>> by_axis;
  for (const std::string &child : ontology.Children(parent)) {
    const OkConcept &c = ontology.GetConcept(child);
    if (c.differentia) by_axis[c.differentia->axis].push_back(child);
  }
  std::vector<std::vector<std::string>> out;
  for (auto &[axis, group] : by_axis) {
    if (group.size() >= 2) out.push_back(std::move(group));
  }
  return out;
}

std::string Literal(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string LowerFirst(std::string s) {
  if (!s.empty() && s[0] >= 'A' && s[0] <= 'Z') s[0] = static_cast<char>(s[0] - 'A' + 'a');
  return s;
}

std::string Range(const AttributeDef &a) {
  switch (a.kind) {
    case ValueKind::kNumber: return "xsd:decimal";
    case ValueKind::kString: return "xsd:string";
    case ValueKind::kEnum: {
      std::string out = "DataOneOf(";
      for (size_t i = 0; i < a.enum_values.size(); ++i) {
        if (i > 0) out += ' ';
        out += Literal(a.enum_values[i]);
      }
      return out + ")";
    }
  }
  return "xsd:string";
}

std::string OntologyIri(std::string_view prefix) {
  std::string iri(prefix);
  while (!iri.empty() && (iri.back() == '#' || iri.back() == '/')) iri.pop_back();
  return iri;
}

}  // namespace

std::string ToOwl(const OkOntology &ontology, std::string_view iri_prefix) {
  RequireConsistent(ontology);
  NameMangler names = ConceptNames(ontology);
  std::vector<std::string> order = ontology.PreOrder();
  auto cls = [&](const std::string &c) { return ":" + names.Name(c); };

  std::string out;
  out += "Prefix(:=<" + std::string(iri_prefix) + ">)\n";
  out += "Prefix(owl:=<http://www.w3.org/2002/07/owl#>)\n";
  out += "Prefix(rdf:=<http://www.w3.org/1999/02/22-rdf-syntax-ns#>)\n";
  out += "Prefix(rdfs:=<http://www.w3.org/2000/01/rdf-schema#>)\n";
  out += "Prefix(xsd:=<http://www.w3.org/2001/XMLSchema#>)\n\n";
  out += "Ontology(<" + OntologyIri(iri_prefix) + ">\n";
  if (!ontology.name().empty()) {
    out += "  Annotation(rdfs:label " + Literal(ontology.name()) + ")\n";
  }
  out += "  Declaration(AnnotationProperty(:differentia))\n";
  for (const std::string &c : order) out += "  Declaration(Class(" + cls(c) + "))\n";
  for (const std::string &c : order) {
    out += "  AnnotationAssertion(rdfs:label " + cls(c) + " " + Literal(c) + "@fr)\n";
  }
  for (const std::string &c : order) {
    const OkConcept &concept_def = ontology.GetConcept(c);
    if (concept_def.differentia) {
      out += "  AnnotationAssertion(:differentia " + cls(c) + " " +
             Literal(concept_def.differentia->ToString()) + ")\n";
    }
  }

  std::vector<std::string> subclass;
  std::vector<std::string> disjoint;
  for (const std::string &c : order) {
    const OkConcept &concept_def = ontology.GetConcept(c);
    if (concept_def.genus) {
      subclass.push_back("SubClassOf(" + cls(c) + " " + cls(*concept_def.genus) + ")");
    }
    for (const auto &group : SiblingGroups(ontology, c)) {
      std::string axiom = "DisjointClasses(";
      for (size_t i = 0; i < group.size(); ++i) {
        if (i > 0) axiom += ' ';
        axiom += cls(group[i]);
      }
      disjoint.push_back(axiom + ")");
    }
  }
  std::sort(subclass.begin(), subclass.end());
  std::sort(disjoint.begin(), disjoint.end());
  for (const std::string &a : subclass) out += "  " + a + "\n";
  for (const std::string &a : disjoint) out += "  " + a + "\n";

  // One data property per attribute name; several declaring concepts give a
  // union domain.
  std::map<std::string, std::vector<std::string>> domains;
  std::map<std::string, std::set<std::string>> ranges;
  for (const std::string &c : order) {
    for (const AttributeDef &a : ontology.GetConcept(c).attributes) {
      domains[a.name].push_back(cls(c));
      ranges[a.name].insert(Range(a));
    }
  }
  NameMangler property_names;
  for (const auto &[attr, domain] : domains) {
    std::string p = ":" + LowerFirst(property_names.Name(attr));
    out += "  Declaration(DataProperty(" + p + "))\n";
    out += "  AnnotationAssertion(rdfs:label " + p + " " + Literal(attr) + ")\n";
    std::string d = domain.front();
    if (domain.size() > 1) {
      d = "ObjectUnionOf(";
      for (size_t i = 0; i < domain.size(); ++i) d += (i > 0 ? " " : "") + domain[i];
      d += ")";
    }
    out += "  DataPropertyDomain(" + p + " " + d + ")\n";
    const std::set<std::string> &r = ranges[attr];
    std::string range = *r.begin();
    if (r.size() > 1) {
      range = "DataUnionOf(";
      bool first = true;
      for (const std::string &x : r) {
        range += (first ? "" : " ") + x;
        first = false;
      }
      range += ")";
    }
    out += "  DataPropertyRange(" + p + " " + range + ")\n";
  }
  out += ")\n";
  return out;
}

std::vector<std::string> KifSentences(const OkOntology &ontology) {
  RequireConsistent(ontology);
  NameMangler names = ConceptNames(ontology);
  std::vector<std::string> order = ontology.PreOrder();
  std::vector<std::string> out;
  for (const std::string &c : order) {
    const OkConcept &concept_def = ontology.GetConcept(c);
    if (!concept_def.genus) continue;
    out.push_back("(forall (?x) (=> (" + names.Name(c) + " ?x) (" +
                  names.Name(*concept_def.genus) + " ?x)))");
  }
  for (const std::string &c : order) {
    for (const auto &group : SiblingGroups(ontology, c)) {
      for (size_t i = 0; i < group.size(); ++i) {
        for (size_t j = i + 1; j < group.size(); ++j) {
          out.push_back("(forall (?x) (not (and (" + names.Name(group[i]) + " ?x) (" +
                        names.Name(group[j]) + " ?x))))");
        }
      }
    }
  }
  return out;
}

std::string ToKif(const OkOntology &ontology) {
  std::string out;
  for (const std::string &s : KifSentences(ontology)) out += s + "\n";
  return out;
}

}  // namespace ontoterm
