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


#include "properties.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "ontoterm/align.h"
#include "ontoterm/export.h"
#include "ontoterm/pipeline.h"
#include "ontoterm/projection.h"
#include "ontoterm/retrieval.h"
#include "ontoterm/text.h"
#include "testing.h"

namespace ontoterm::testing {
namespace {

bool IsSubset(const std::set<std::string> &a, const std::set<std::string> &b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

size_t CountPrefixedLines(const std::string &text, std::string_view prefix) {
  size_t n = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string_view v = line;
    v.remove_prefix(std::min(v.find_first_not_of(' '), v.size()));
    if (v.substr(0, prefix.size()) == prefix) ++n;
  }
  return n;
}

std::string CheckSymmetric(const LexNet &net) {
  for (const auto &[key, r] : net.relations()) {
    if (key.kind != RelationKind::kSynonymy) continue;
    const LexicalRelation *reverse =
        net.FindRelation({RelationKind::kSynonymy, key.target, key.source});
    if (reverse == nullptr) return "missing reverse of " + key.source + " ~ " + key.target;
    if (reverse->status != r.status) return "status differs on " + key.source + " ~ " + key.target;
  }
  return {};
}

}  // namespace

CheckResult SynonymySymmetry(uint64_t seed, int cases) {
  Rng rng(seed);
  CheckResult result;
  const std::vector<RelationKind> kinds = {RelationKind::kHyponymy, RelationKind::kSynonymy,
                                           RelationKind::kMeronymy};
  for (int i = 0; i < cases; ++i, ++result.cases) {
    int n = rng.Uniform(2, 10);
    std::vector<Term> terms;
    for (int t = 0; t < n; ++t) terms.push_back({NodeName(t), NodeName(t), Status::kCandidate});
    auto pick_pair = [&] {
      int a = rng.Uniform(0, n - 1);
      int b = (a + rng.Uniform(1, n - 1)) % n;
      return std::pair{NodeName(a), NodeName(b)};
    };
    std::vector<LexicalRelation> relations;
    for (int r = rng.Uniform(0, 15); r > 0; --r) {
      auto [a, b] = pick_pair();
      relations.push_back(MakeRelation(rng.Pick(kinds), a, b, Evidence::kSameHead));
    }
    std::vector<std::pair<std::string, std::string>> declared;
    for (int s = rng.Uniform(0, 3); s > 0; --s) declared.push_back(pick_pair());

    std::string what;
    LexNet built = BuildNetwork(terms, relations, declared);
    if (std::string e = CheckSymmetric(built); !e.empty()) what = "build: " + e;

    // Restore from one direction only.
    std::vector<LexicalRelation> one_way;
    for (const auto &[key, r] : built.relations()) {
      if (key.kind == RelationKind::kSynonymy && key.source > key.target && rng.Chance(0.5)) continue;
      one_way.push_back(r);
    }
    LexNet restored = RestoreLexNet(terms, one_way);
    if (std::string e = CheckSymmetric(restored); what.empty() && !e.empty()) what = "restore: " + e;

    std::string decisions;
    for (const auto &[key, r] : built.relations()) {
      if (key.kind == RelationKind::kSynonymy && rng.Chance(0.4)) {
        decisions += std::string(rng.Chance(0.5) ? "validate" : "reject") + " relation SYNONYMY " +
                     key.source + " " + key.target + "\n";
      }
    }
    if (rng.Chance(0.3)) decisions += "reject term " + NodeName(rng.Uniform(0, n - 1)) + "\n";
    LexNet validated = ApplyValidation(built, decisions);
    if (std::string e = CheckSymmetric(validated); what.empty() && !e.empty()) {
      what = "validate: " + e;
    }
    if (!what.empty()) result.Fail("case " + std::to_string(i) + ": " + what);
  }
  return result;
}

CheckResult ClosureMonotonicity(uint64_t seed, int cases) {
  Rng rng(seed);
  CheckResult result;
  for (int i = 0; i < cases; ++i, ++result.cases) {
    std::string what;
    Graph g = RandomDag(rng, rng.Uniform(1, 30), rng.Uniform(5, 30) / 100.0);
    ProjectedStructure projected(Project(GraphToLexNet(g)));
    DocIndex projected_index;
    for (int d = rng.Uniform(0, 20); d > 0; --d) {
      AddManualAnnotation(projected_index, projected, "d" + std::to_string(rng.Uniform(0, 9)),
                          NodeName(rng.Uniform(0, g.n - 1)));
    }
    for (int c = 0; c < g.n && what.empty(); ++c) {
      std::set<std::string> closure = projected.Closure(NodeName(c));
      std::set<std::string> docs = Query(projected_index, projected, NodeName(c));
      for (const std::string &sub : closure) {
        if (!IsSubset(projected.Closure(sub), closure)) {
          what = "closure of " + sub + " escapes closure of " + NodeName(c);
        } else if (!IsSubset(Query(projected_index, projected, sub), docs)) {
          what = "query of " + sub + " escapes query of " + NodeName(c);
        }
        if (!what.empty()) break;
      }
    }

    RandomOk r = RandomOntology(rng, rng.Uniform(1, 20));
    OkStructure ok(ParseDsl(r.dsl));
    DocIndex ok_index;
    for (int d = rng.Uniform(0, 20); d > 0; --d) {
      AddManualAnnotation(ok_index, ok, "d" + std::to_string(rng.Uniform(0, 9)),
                          rng.Pick(r.names));
    }
    for (const std::string &name : r.names) {
      if (!what.empty()) break;
      std::set<std::string> closure = ok.Closure(name);
      std::set<std::string> docs = Query(ok_index, ok, name);
      for (const std::string &sub : closure) {
        if (!IsSubset(ok.Closure(sub), closure) || !IsSubset(Query(ok_index, ok, sub), docs)) {
          what = "ok structure: " + sub + " under " + name;
          break;
        }
      }
    }
    if (!what.empty()) result.Fail("case " + std::to_string(i) + ": " + what);
  }
  return result;
}

CheckResult SimilaritySymmetry(uint64_t seed, int cases) {
  Rng rng(seed);
  CheckResult result;
  std::optional<OkOntology> ontology;
  RandomOk r;
  for (int i = 0; i < cases; ++i, ++result.cases) {
    if (i % 10 == 0) {
      r = RandomOntology(rng, rng.Uniform(1, 25));
      ontology = ParseDsl(r.dsl);
    }
    const std::string &a = rng.Pick(r.names);
    const std::string &b = rng.Pick(r.names);
    Similarity ab = ComputeSimilarity(*ontology, a, b);
    Similarity ba = ComputeSimilarity(*ontology, b, a);
    std::vector<Differentia> path_a = ab.shared, path_b = ab.shared;
    path_a.insert(path_a.end(), ab.distinguishing_first.begin(), ab.distinguishing_first.end());
    path_b.insert(path_b.end(), ab.distinguishing_second.begin(), ab.distinguishing_second.end());
    std::string what;
    if (ab.lca != ba.lca || ab.shared != ba.shared) {
      what = "lca or shared differ";
    } else if (ab.distinguishing_first != ba.distinguishing_second ||
               ab.distinguishing_second != ba.distinguishing_first) {
      what = "distinguishing lists not swapped";
    } else if (path_a != ontology->DifferentiaPath(a) || path_b != ontology->DifferentiaPath(b)) {
      what = "path reconstruction";
    } else if (!Subsumes(*ontology, ab.lca, a) || !Subsumes(*ontology, ab.lca, b)) {
      what = "lca does not subsume";
    }
    if (!what.empty()) result.Fail("case " + std::to_string(i) + " (" + a + ", " + b + "): " + what);
  }
  return result;
}

CheckResult EllipsisHeadMatch(uint64_t seed, int cases, int *ellipses) {
  Rng rng(seed);
  CheckResult result;
  int hits = 0;
  static const std::vector<std::string> kExtra = {"relais", "tension", "seuil", "de", "courant",
                                                  "fréquence", "à", "statique"};
  std::optional<OkOntology> ontology;
  std::optional<Aligner> aligner;
  RandomOk r;
  for (int i = 0; i < cases; ++i, ++result.cases) {
    if (i % 20 == 0) {
      r = RandomOntology(rng, rng.Uniform(2, 20), /*nested_labels=*/true);
      aligner.reset();
      ontology = ParseDsl(r.dsl);
      aligner.emplace(*ontology);
    }
    std::vector<std::string> words = text::SplitWhitespace(rng.Pick(r.names));
    std::vector<std::string> kept;
    for (const std::string &w : words) {
      if (rng.Chance(0.6)) kept.push_back(w);
    }
    if (rng.Chance(0.2)) kept.push_back(rng.Pick(kExtra));
    if (rng.Chance(0.3)) rng.Shuffle(kept);
    if (kept.empty()) kept.push_back(rng.Pick(words));
    std::string term = text::Join(kept, " ");
    std::optional<std::string> head;
    if (rng.Chance(0.5)) head = rng.Pick(kept);

    AlignmentResult a = head ? aligner->Align(term, *head) : aligner->Align(term);
    if (a.kind != AlignKind::kEllipsis) continue;
    ++hits;
    std::vector<std::string> head_tokens;
    if (head) head_tokens = ContentTokens(*head);
    if (head_tokens.empty()) head_tokens = ContentTokens(term);
    std::multiset<std::string> concept_bag = NormalizeLabel(*a.concept_name);
    std::multiset<std::string> term_bag = NormalizeLabel(term);
    if (!concept_bag.contains(head_tokens.front())) {
      result.Fail("\"" + term + "\" -> <" + *a.concept_name + "> lacks head " +
                  head_tokens.front());
    } else if (!std::includes(concept_bag.begin(), concept_bag.end(), term_bag.begin(),
                              term_bag.end())) {
      result.Fail("\"" + term + "\" -> <" + *a.concept_name + "> is not a sub-bag");
    }
  }
  if (ellipses != nullptr) *ellipses = hits;
  return result;
}

CheckResult ManglingInjectivity(uint64_t seed, int cases) {
  Rng rng(seed);
  CheckResult result;
  for (int i = 0; i < cases; ++i, ++result.cases) {
    NameMangler mangler;
    std::map<std::string, std::string> label_of;
    for (int k = rng.Uniform(1, 30); k > 0; --k) {
      std::string label = RandomLabel(rng);
      std::string name = mangler.Name(label);
      bool legal = !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
               c == '_';
      });
      auto [it, inserted] = label_of.emplace(name, label);
      if (!legal) {
        result.Fail("illegal name " + name);
      } else if (!inserted && it->second != label) {
        result.Fail("\"" + label + "\" and \"" + it->second + "\" both named " + name);
      } else if (mangler.Label(name) != label) {
        result.Fail(name + " does not map back to \"" + label + "\"");
      }
    }
  }
  return result;
}

CheckResult PipelineIdempotence(uint64_t seed, int cases) {
  Rng rng(seed);
  CheckResult result;
  const Desk &desk = DeskFixture();
  const PipelineInputs base = DeskInputs();
  for (int i = 0; i < cases; ++i, ++result.cases) {
    PipelineInputs in = base;
    in.corpus = RandomRelayCorpus(rng, rng.Uniform(1, 6));
    LexNet net = RunNet(in.corpus, desk.lexicon, RunExtract(in.corpus, desk.lexicon, desk.patterns),
                        {});
    in.decisions.clear();
    for (const LexicalRelation &r : net.RelationsOfKind(RelationKind::kHyponymy)) {
      if (rng.Chance(0.8)) {
        in.decisions += "validate relation HYPONYMY \"" + r.source + "\" \"" + r.target + "\"\n";
      }
    }
    if (rng.Chance(0.5)) in.dsl = RandomOntology(rng, rng.Uniform(1, 12), true, 0.3).dsl;
    in.export_format = rng.Chance(0.5) ? "owl" : "kif";

    PipelineResult first = EvaluatePipeline(in);
    PipelineResult second = EvaluatePipeline(in);
    std::map<std::string, StageRecord> previous;
    for (const StageRecord &s : first.stages) previous[s.name] = s;
    PipelineResult cached = EvaluatePipeline(in, previous, [&](const std::string &file) {
      auto it = first.artifacts.find(file);
      return it == first.artifacts.end() ? std::nullopt : std::optional<std::string>(it->second);
    });

    std::string what;
    if (first.exit_code != 0) {
      what = "exit code " + std::to_string(first.exit_code);
    } else if (first.artifacts != second.artifacts || first.artifacts != cached.artifacts) {
      what = "artifacts differ between runs";
    } else if (ManifestJson(in, first) != ManifestJson(in, second)) {
      what = "manifests differ";
    } else {
      for (const StageRecord &s : cached.stages) {
        if (!s.cached) what = "stage " + s.name + " recomputed on an unchanged rerun";
      }
    }
    if (!what.empty()) result.Fail("case " + std::to_string(i) + ": " + what);
  }
  return result;
}

CheckResult ClosureOracle(uint64_t seed, int graphs, int max_nodes) {
  Rng rng(seed);
  CheckResult result;
  for (int i = 0; i < graphs; ++i, ++result.cases) {
    int n = rng.Uniform(1, max_nodes);
    Graph g = i % 2 ? RandomTree(rng, n) : RandomDag(rng, n, rng.Uniform(1, 15) / 100.0);
    Taxonomy t = Project(GraphToLexNet(g));
    for (int c = 0; c < n; ++c) {
      std::set<std::string> expected;
      for (int d : BruteDescendants(g, c)) expected.insert(NodeName(d));
      if (SubsumedClosure(t, NodeName(c)) != expected) {
        result.Fail("graph " + std::to_string(i) + ": closure of " + NodeName(c));
        break;
      }
    }

    RandomOk r = RandomOntology(rng, n);
    OkOntology o = ParseDsl(r.dsl);
    size_t size = r.names.size();
    bool bad = false;
    for (size_t a = 0; a < size && !bad; ++a) {
      std::set<size_t> ancestors;
      for (int x = static_cast<int>(a); x >= 0; x = r.parent[static_cast<size_t>(x)]) {
        ancestors.insert(static_cast<size_t>(x));
      }
      for (size_t b = 0; b < size; ++b) {
        if (Subsumes(o, r.names[b], r.names[a]) != ancestors.contains(b)) {
          result.Fail("tree " + std::to_string(i) + ": subsumes(" + r.names[b] + ", " +
                      r.names[a] + ")");
          bad = true;
          break;
        }
      }
    }
  }
  return result;
}

CheckResult QueryOracle(uint64_t seed, int corpora, int max_documents) {
  Rng rng(seed);
  CheckResult result;
  const Desk &desk = DeskFixture();
  OkStructure ok(ParseDsl(desk.dsl));
  ProjectedStructure projected(DeskTaxonomy());
  std::vector<std::string> ok_keys, projected_keys;
  for (const OkConcept &c : ok.ontology().concepts()) ok_keys.push_back(c.name);
  for (const auto &[id, c] : projected.taxonomy().concepts) projected_keys.push_back(id);

  // Concept a single label lands on, looked up without the index's tables.
  auto ok_concept = [&](const TermCandidate &c) -> std::optional<std::string> {
    AlignmentResult a = ok.aligner().Align(c.Label(), c.head_lemma);
    if (a.kind == AlignKind::kAmbiguous) return std::nullopt;
    return a.concept_name;
  };
  auto projected_concept = [&](const TermCandidate &c) -> std::optional<std::string> {
    for (const auto &[id, concept_def] : projected.taxonomy().concepts) {
      const auto &terms = concept_def.denoting_terms;
      if (std::find(terms.begin(), terms.end(), c.Label()) != terms.end()) return id;
    }
    return std::nullopt;
  };

  for (int i = 0; i < corpora; ++i, ++result.cases) {
    Corpus corpus = RandomRelayCorpus(rng, rng.Uniform(1, max_documents));
    auto candidates = RunExtract(corpus, desk.lexicon, desk.patterns);
    DocIndex ok_index =
        IndexCorpus(corpus, candidates, ok, AlignCandidates(candidates, ok.aligner()));
    DocIndex projected_index = IndexCorpus(corpus, candidates, projected,
                                           IdentityAlignment(projected.taxonomy()));

    // Concepts each document mentions, from that document alone.
    std::map<std::string, std::set<std::string>> ok_mentions, projected_mentions;
    for (const Document &doc : corpus) {
      Corpus single{doc};
      for (const TermCandidate &c : RunExtract(single, desk.lexicon, desk.patterns)) {
        if (auto k = ok_concept(c)) ok_mentions[doc.id].insert(*k);
        if (auto k = projected_concept(c)) projected_mentions[doc.id].insert(*k);
      }
    }
    auto scan = [&](const std::map<std::string, std::set<std::string>> &mentions,
                    const std::set<std::string> &closure) {
      std::set<std::string> out;
      for (const auto &[doc, concepts] : mentions) {
        for (const std::string &c : concepts) {
          if (closure.contains(c)) out.insert(doc);
        }
      }
      return out;
    };
    for (const std::string &key : ok_keys) {
      if (Query(ok_index, ok, key) != scan(ok_mentions, ok.Closure(key))) {
        result.Fail("corpus " + std::to_string(i) + ": ok query <" + key + ">");
        break;
      }
    }
    for (const std::string &key : projected_keys) {
      if (Query(projected_index, projected, key) !=
          scan(projected_mentions, projected.Closure(key))) {
        result.Fail("corpus " + std::to_string(i) + ": projected query <" + key + ">");
        break;
      }
    }
  }
  return result;
}

CheckResult ExportAxiomCounts(uint64_t seed, int ontologies) {
  Rng rng(seed);
  CheckResult result;
  for (int i = 0; i < ontologies; ++i, ++result.cases) {
    RandomOk r = RandomOntology(rng, rng.Uniform(1, 40), rng.Chance(0.5), 0.3);
    OkOntology o = ParseDsl(r.dsl);
    std::map<std::pair<int, std::string>, size_t> groups;
    for (size_t c = 1; c < r.names.size(); ++c) ++groups[{r.parent[c], r.diffs[c].axis}];
    size_t non_root = r.names.size() - 1;
    size_t disjoint_groups = 0, sibling_pairs = 0;
    for (const auto &[key, k] : groups) {
      if (k >= 2) ++disjoint_groups;
      sibling_pairs += k * (k - 1) / 2;
    }
    std::string owl = ToOwl(o);
    size_t subclass = CountPrefixedLines(owl, "SubClassOf(");
    size_t disjoint = CountPrefixedLines(owl, "DisjointClasses(");
    size_t kif = KifSentences(o).size();
    if (subclass != non_root || disjoint != disjoint_groups || kif != non_root + sibling_pairs) {
      result.Fail("ontology " + std::to_string(i) + ": SubClassOf " + std::to_string(subclass) +
                  "/" + std::to_string(non_root) + ", DisjointClasses " +
                  std::to_string(disjoint) + "/" + std::to_string(disjoint_groups) + ", KIF " +
                  std::to_string(kif) + "/" + std::to_string(non_root + sibling_pairs));
    }
  }
  return result;
}

}  // namespace ontoterm::testing
