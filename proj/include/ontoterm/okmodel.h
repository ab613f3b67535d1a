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

// Ontologies by specific differentiation.
//
// Every concept but the root is defined by a genus (its parent) and exactly
// one differentia, a value on a declared axis. Axes are closed, mutually
// exclusive value sets; siblings differentiated on the same axis must take
// distinct values, and an axis may be used at most once along any path from
// the root. Concepts therefore form a strict Porphyry tree. Attributes are
// grafted onto the tree for describing instances; classes and sets group
// instances by a predicate over their state, classes within one concept's
// extension, sets across concepts.
//
// Construction (ParseDsl, DefineConcept) only resolves names. Structural
// rules are reported by CheckConsistency as data.

#ifndef ONTOTERM_OKMODEL_H_
#define ONTOTERM_OKMODEL_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ontoterm/error.h"

namespace ontoterm {

struct Axis {
  std::string name;
  std::vector<std::string> values;
};

struct Differentia {
  std::string axis;
  std::string value;

  std::string ToString() const { return axis + "=" + value; }
  bool operator==(const Differentia &) const = default;
};

enum class ValueKind { kNumber, kString, kEnum };

struct AttributeDef {
  std::string name;
  ValueKind kind = ValueKind::kString;
  std::vector<std::string> enum_values;
};

using Value = std::variant<double, std::string>;

enum class CompareOp { kEq, kNe, kLt, kLe, kGt, kGe };

std::string_view CompareOpSymbol(CompareOp op);

struct Comparison {
  std::string attribute;
  CompareOp op = CompareOp::kEq;
  Value literal;
};

struct ClassDef {
  std::string name;
  std::string base_concept;
  std::vector<Comparison> predicate;
};

struct SetDef {
  std::string name;
  std::vector<Comparison> predicate;
};

struct ObjectInstance {
  std::string id;
  std::string concept_name;
  std::map<std::string, Value> state;
};

struct OkConcept {
  std::string name;
  std::optional<std::string> genus;
  std::optional<Differentia> differentia;
  std::vector<AttributeDef> attributes;

  bool is_root() const { return !genus.has_value(); }
};

struct Denotation {
  std::string term;
  std::string concept_name;
};

class OkOntology {
 public:
  OkOntology() = default;

  const std::string &name() const { return name_; }
  const std::vector<Axis> &axes() const { return axes_; }
  // Declaration order.
  const std::vector<OkConcept> &concepts() const { return concepts_; }
  const std::vector<ClassDef> &class_defs() const { return class_defs_; }
  const std::vector<SetDef> &set_defs() const { return set_defs_; }
  // Keyed by the normalized term (see text::NormalizeKey).
  const std::map<std::string, Denotation> &denotation() const {
    return denotation_;
  }

  const OkConcept *FindConcept(std::string_view name) const;
  const Axis *FindAxis(std::string_view name) const;
  const Denotation *FindDenotation(std::string_view term) const;

  // Throws E_UNKNOWN_CONCEPT.
  const OkConcept &GetConcept(std::string_view name) const;

  // Root concept, if exactly one exists.
  const OkConcept *Root() const;

  // Children in declaration order.
  std::vector<std::string> Children(std::string_view name) const;

  // Genus chain g1 (parent) ... gk (root), stopping early on a cycle.
  std::vector<std::string> GenusChain(std::string_view name) const;

  // Differentiae from the root down to `name`.
  std::vector<Differentia> DifferentiaPath(std::string_view name) const;

  // Attributes declared on the concept or any ancestor.
  std::vector<AttributeDef> VisibleAttributes(std::string_view name) const;

  // Root first, children in declaration order. Unreachable concepts (only
  // present in inconsistent ontologies) are appended in declaration order.
  std::vector<std::string> PreOrder() const;

 private:
  friend class OkBuilder;

  std::string name_;
  std::vector<Axis> axes_;
  std::vector<OkConcept> concepts_;
  std::map<std::string, size_t> concept_index_;
  std::vector<ClassDef> class_defs_;
  std::vector<SetDef> set_defs_;
  std::map<std::string, Denotation> denotation_;
};

struct DslDiagnostic {
  int line = 0;
  ErrorCode code = ErrorCode::kSyntax;
  std::string message;
};

// Raised by ParseDsl with every diagnostic found; code() is the first one's.
class DslError : public Error {
 public:
  explicit DslError(std::vector<DslDiagnostic> diagnostics);
  const std::vector<DslDiagnostic> &diagnostics() const { return diagnostics_; }

 private:
  std::vector<DslDiagnostic> diagnostics_;
};

// Line-oriented DSL, '#' comments. Concept and class names are bare words,
// "quoted" or <angle bracketed>:
//   ontology "<name>"
//   axis <id> values <v1>, <v2>[, ...]
//   concept <Id> root
//   concept <Id> genus <ParentId> diff <axis>=<value>
//   attribute <id> on <ConceptId> type number|string|enum(<v1>,...)
//   class <Id> over <ConceptId> where <attr> <op> <literal> [and ...]
//   set <Id> where <attr> <op> <literal> [and ...]
//   term "<surface label>" denotes <ConceptId>
// "compound" (concept composé) is reserved and rejected with E_UNSUPPORTED.
OkOntology ParseDsl(std::string_view source);

// Canonical DSL rendering; ParseDsl(ToDsl(o)) reproduces o.
std::string ToDsl(const OkOntology &ontology);

// Returns a new ontology with the concept appended under `genus`. Throws
// E_UNKNOWN_GENUS, E_UNKNOWN_AXIS, E_BAD_VALUE or E_DUP_NAME.
OkOntology DefineConcept(const OkOntology &ontology, std::string_view name,
                         std::string_view genus, const Differentia &differentia);

enum class Rule {
  kTreeShape = 1,         // R1: single root, tree, no cycles
  kSingleDifferentia,     // R2
  kSiblingDistinct,       // R3
  kAxisOncePerPath,       // R4
  kNoShadowing,           // R5
  kVisibleClassAttrs,     // R6
  kDenotationTargets,     // R7
};

std::string RuleName(Rule rule);  // "R1" ... "R7"

struct Violation {
  Rule rule;
  std::string message;
  std::vector<std::string> subjects;
};

std::vector<Violation> CheckConsistency(const OkOntology &ontology);

// True iff `general` lies on `specific`'s genus chain, or equals it.
// Throws E_UNKNOWN_CONCEPT.
bool Subsumes(const OkOntology &ontology, std::string_view general,
              std::string_view specific);

// Every concept subsumed by `name`, itself included.
std::vector<std::string> Descendants(const OkOntology &ontology,
                                     std::string_view name);

struct Similarity {
  std::string lca;
  std::vector<Differentia> shared;
  std::vector<Differentia> distinguishing_first;
  std::vector<Differentia> distinguishing_second;
};

Similarity ComputeSimilarity(const OkOntology &ontology, std::string_view first,
                             std::string_view second);

struct Classification {
  std::vector<std::string> classes;
  std::vector<std::string> sets;
};

// Classes whose base concept subsumes the instance's concept and whose
// predicate holds; sets whose predicate holds whatever the concept. A
// comparison on an attribute missing from the state is false. Throws
// E_UNKNOWN_CONCEPT, E_UNKNOWN_ATTRIBUTE or E_TYPE on ill-formed instances.
Classification ClassifyObject(const OkOntology &ontology,
                              const ObjectInstance &instance);

}  // namespace ontoterm

#endif  // ONTOTERM_OKMODEL_H_
