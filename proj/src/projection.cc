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

#include "ontoterm/projection.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "ontoterm/error.h"
#include "ontoterm/text.h"

namespace ontoterm {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  size_t Find(size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void Union(size_t a, size_t b) {
    a = Find(a);
    b = Find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<size_t> parent_;
};

std::optional<std::vector<std::string>> FindCycle(const Taxonomy &taxonomy) {
  std::map<std::string, std::vector<std::string>> up;
  for (const auto &[child, parent] : taxonomy.subsumption) up[child].push_back(parent);
  std::map<std::string, int> state;  // 0 new, 1 on stack, 2 done
  std::vector<std::string> path;
  std::optional<std::vector<std::string>> cycle;

  auto visit = [&](auto &&self, const std::string &node) -> bool {
    state[node] = 1;
    path.push_back(node);
    for (const std::string &next : up[node]) {
      if (state[next] == 1) {
        auto from = std::find(path.begin(), path.end(), next);
        cycle = std::vector<std::string>(from, path.end());
        cycle->push_back(next);
        return true;
      }
      if (state[next] == 0 && self(self, next)) return true;
    }
    path.pop_back();
    state[node] = 2;
    return false;
  };
  for (const auto &[id, unused] : taxonomy.concepts) {
    if (state[id] == 0 && visit(visit, id)) break;
  }
  return cycle;
}

}  // namespace

std::string ConceptId(std::string_view label) { return text::NormalizeKey(label); }

bool Taxonomy::Contains(std::string_view id) const {
  return concepts.contains(std::string(id));
}

std::vector<std::string> Taxonomy::Roots() const {
  std::set<std::string> with_parent;
  for (const auto &[child, parent] : subsumption) with_parent.insert(child);
  std::vector<std::string> roots;
  for (const auto &[id, c] : concepts) {
    if (!with_parent.contains(id)) roots.push_back(id);
  }
  return roots;
}

std::vector<std::string> Taxonomy::Parents(std::string_view id) const {
  std::vector<std::string> out;
  for (const auto &[child, parent] : subsumption) {
    if (child == id) out.push_back(parent);
  }
  return out;
}

std::vector<std::string> Taxonomy::Children(std::string_view id) const {
  std::vector<std::string> out;
  for (const auto &[child, parent] : subsumption) {
    if (parent == id) out.push_back(child);
  }
  return out;
}

const Concept *Taxonomy::Resolve(std::string_view label) const {
  std::string key = ConceptId(label);
  if (auto it = concepts.find(key); it != concepts.end()) return &it->second;
  for (const auto &[id, c] : concepts) {
    for (const std::string &term : c.denoting_terms) {
      if (ConceptId(term) == key) return &c;
    }
  }
  return nullptr;
}

Taxonomy Project(const LexNet &lexnet) {
  std::vector<std::string> labels;
  std::map<std::string, size_t> index;
  for (const auto &[label, term] : lexnet.terms()) {
    if (term.status != Status::kValidated) continue;
    index[label] = labels.size();
    labels.push_back(label);
  }

  // Synonyms, and labels sharing a normalized id, become one concept.
  DisjointSets groups(labels.size());
  std::map<std::string, size_t> first_with_id;
  for (size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = first_with_id.emplace(ConceptId(labels[i]), i);
    if (!inserted) groups.Union(i, it->second);
  }
  for (const auto &[key, r] : lexnet.relations()) {
    if (key.kind != RelationKind::kSynonymy || r.status != Status::kValidated) continue;
    auto a = index.find(key.source);
    auto b = index.find(key.target);
    if (a != index.end() && b != index.end()) groups.Union(a->second, b->second);
  }

  // Labels are iterated in sorted order, so the representative of a group is
  // its smallest label.
  Taxonomy taxonomy;
  std::vector<std::string> concept_of(labels.size());
  for (size_t i = 0; i < labels.size(); ++i) {
    size_t root = groups.Find(i);
    std::string id = ConceptId(labels[root]);
    concept_of[i] = id;
    Concept &c = taxonomy.concepts[id];
    if (c.id.empty()) {
      c.id = id;
      c.label = labels[root];
    }
    c.denoting_terms.push_back(labels[i]);
  }

  for (const auto &[key, r] : lexnet.relations()) {
    if (key.kind != RelationKind::kHyponymy || r.status != Status::kValidated) continue;
    auto child = index.find(key.source);
    auto parent = index.find(key.target);
    if (child == index.end() || parent == index.end()) continue;
    const std::string &c = concept_of[child->second];
    const std::string &p = concept_of[parent->second];
    if (c == p) {
      throw Error(ErrorCode::kCycle, "hyponymy between synonyms " +
                                         key.source + " and " + key.target);
    }
    taxonomy.subsumption.emplace(c, p);
  }

  if (auto cycle = FindCycle(taxonomy)) {
    std::vector<std::string> names;
    for (const std::string &id : *cycle) names.push_back(taxonomy.concepts.at(id).label);
    throw Error(ErrorCode::kCycle, "subsumption cycle: " + text::Join(names, " -> "));
  }
  return taxonomy;
}

std::set<std::string> SubsumedClosure(const Taxonomy &taxonomy,
                                      std::string_view concept_id) {
  if (!taxonomy.Contains(concept_id)) {
    throw Error(ErrorCode::kUnknownConcept,
                "no concept '" + std::string(concept_id) + "'");
  }
  std::map<std::string, std::vector<std::string>> down;
  for (const auto &[child, parent] : taxonomy.subsumption) down[parent].push_back(child);
  std::set<std::string> seen{std::string(concept_id)};
  std::deque<std::string> queue{std::string(concept_id)};
  while (!queue.empty()) {
    std::string node = std::move(queue.front());
    queue.pop_front();
    for (const std::string &child : down[node]) {
      if (seen.insert(child).second) queue.push_back(child);
    }
  }
  return seen;
}

std::string ToDot(const Taxonomy &taxonomy) {
  auto quote = [](std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "digraph taxonomy {\n  rankdir=TB;\n  node [shape=box];\n";
  for (const auto &[id, c] : taxonomy.concepts) {
    out << "  " << quote(id) << " [label=" << quote("<" + c.label + ">") << "];\n";
  }
  for (const auto &[child, parent] : taxonomy.subsumption) {
    out << "  " << quote(parent) << " -> " << quote(child) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace ontoterm
