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

// OWL 2 Functional Syntax and KIF writers for consistent OK ontologies.

#ifndef ONTOTERM_EXPORT_H_
#define ONTOTERM_EXPORT_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontoterm/okmodel.h"

namespace ontoterm {

// "relais à seuil de tension" -> "RelaisASeuilDeTension". The label is
// transliterated to ASCII and every alphanumeric run is capitalized. Never
// empty; a leading digit gets a "C" prefix.
std::string MangleLabel(std::string_view label);

// Injective naming: a label whose mangled form is taken gets "_2", "_3"...
// Mangled forms contain no '_', so suffixed names cannot collide.
class NameMangler {
 public:
  const std::string &Name(const std::string &label);
  std::optional<std::string> Label(std::string_view name) const;

 private:
  std::map<std::string, std::string> by_label_;
  std::map<std::string, std::string, std::less<>> by_name_;
};

// Concept names in pre-order.
NameMangler ConceptNames(const OkOntology &ontology);

inline constexpr std::string_view kDefaultIri = "http://example.org/ontoterm#";

// Throws E_INCONSISTENT listing the violations.
std::string ToOwl(const OkOntology &ontology, std::string_view iri_prefix = kDefaultIri);

std::vector<std::string> KifSentences(const OkOntology &ontology);

// KifSentences, one per line.
std::string ToKif(const OkOntology &ontology);

}  // namespace ontoterm

#endif  // ONTOTERM_EXPORT_H_
