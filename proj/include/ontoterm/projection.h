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
// Projection of a validated lexical network onto a candidate conceptual
// structure: one concept per validated term (synonyms collapsed), one
// subsumption edge per validated hyponymy edge.

#ifndef ONTOTERM_PROJECTION_H_
#define ONTOTERM_PROJECTION_H_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ontoterm/lexnet.h"

namespace ontoterm {

// NFC, lowercase, whitespace collapsed. Shared join key across modules.
std::string ConceptId(std::string_view label);

struct Concept {
  std::string id;
  std::string label;
  std::vector<std::string> denoting_terms;
};

struct Taxonomy {
  std::map<std::string, Concept> concepts;
  // (child id, parent id)
  std::set<std::pair<std::string, std::string>> subsumption;

  bool Contains(std::string_view id) const;
  std::vector<std::string> Roots() const;
  std::vector<std::string> Parents(std::string_view id) const;
  std::vector<std::string> Children(std::string_view id) const;

  // Concept whose id or denoting terms match the label, if any.
  const Concept *Resolve(std::string_view label) const;
};

// Throws E_CYCLE naming the cycle if the validated hyponymy graph (after
// synonym collapse) is not acyclic.
Taxonomy Project(const LexNet &lexnet);

// Reflexive-transitive down-closure. Throws E_UNKNOWN_CONCEPT.
std::set<std::string> SubsumedClosure(const Taxonomy &taxonomy,
                                      std::string_view concept_id);

// Graphviz rendering, edges drawn from parent to child.
std::string ToDot(const Taxonomy &taxonomy);

}  // namespace ontoterm

#endif  // ONTOTERM_PROJECTION_H_
