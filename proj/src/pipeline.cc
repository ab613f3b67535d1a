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


#include "ontoterm/pipeline.h"

#include <sstream>

#include "ontoterm/error.h"
#include "ontoterm/export.h"
#include "ontoterm/io.h"
#include "ontoterm/serialize.h"
#include "ontoterm/text.h"

namespace ontoterm {

std::vector<TermCandidate> RunExtract(const Corpus &corpus, const Lexicon &lexicon,
                                      std::vector<PatternDef> patterns) {
  return ExtractFromCorpus(corpus, lexicon, patterns);
}

LexNet RunNet(const Corpus &corpus, const Lexicon &lexicon,
              const std::vector<TermCandidate> &candidates,
              const Declarations &declarations) {
  std::vector<Term> terms = TermsFromCandidates(candidates);
  std::vector<LexicalRelation> relations = SameHeadHyponyms(candidates);

  std::vector<std::vector<AnnotatedToken>> docs;
  for (const Document &doc : corpus) docs.push_back(Annotate(doc, lexicon));
  std::set<std::string> known;
  for (const TermCandidate &c : candidates) known.insert(c.Label());
  for (LexicalRelation &r : CopulaRelations(docs, known)) relations.push_back(std::move(r));

  for (const LexicalRelation &r : declarations.relations) relations.push_back(r);
  return BuildNetwork(terms, relations, declarations.synonyms);
}

std::map<std::string, AlignmentResult> AlignCandidates(
    const std::vector<TermCandidate> &candidates, const Aligner &aligner) {
  std::map<std::string, AlignmentResult> out;
  for (const TermCandidate &c : candidates) {
    out.emplace(c.Label(), aligner.Align(c.Label(), c.head_lemma));
  }
  return out;
}

Config ParseConfig(std::string_view content, const std::filesystem::path &base) {
  std::map<std::string, std::string> values;
  std::istringstream in{std::string(content)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string trimmed = text::Trim(line);
    if (trimmed.empty() || trimmed[0] == '#' || trimmed[0] == '[') continue;
    size_t eq = trimmed.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kConfig, "line " + std::to_string(line_no) + ": expected key = value");
    }
    std::string key = text::Trim(trimmed.substr(0, eq));
    std::string value = text::Trim(trimmed.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"') {
      size_t close = value.find('"', 1);
      if (close == std::string::npos) {
        throw Error(ErrorCode::kConfig, "line " + std::to_string(line_no) + ": unterminated string");
      }
      value = value.substr(1, close - 1);
    } else if (size_t hash = value.find('#'); hash != std::string::npos) {
      value = text::Trim(value.substr(0, hash));
    }
    values[key] = value;
  }

  auto path = [&](const std::string &v) {
    std::filesystem::path p(v);
    return p.is_absolute() || base.empty() ? p : base / p;
  };
  auto take = [&](const char *key) -> std::optional<std::string> {
    auto it = values.find(key);
    if (it == values.end()) return std::nullopt;
    std::string v = it->second;
    values.erase(it);
    return v;
  };
  auto require = [&](const char *key) {
    std::optional<std::string> v = take(key);
    if (!v || v->empty()) throw Error(ErrorCode::kConfig, "missing key: " + std::string(key));
    return path(*v);
  };

  Config config;
  config.corpus = require("corpus");
  config.lexicon = require("lexicon");
  config.patterns = require("patterns");
  config.dsl = require("dsl");
  config.decisions = require("decisions");
  config.stopwords = require("stopwords");
  config.output = require("output");
  if (auto v = take("declarations")) config.declarations = path(*v);
  if (auto v = take("export_format")) config.export_format = *v;
  if (auto v = take("iri")) config.iri = *v;
  if (config.export_format != "owl" && config.export_format != "kif") {
    throw Error(ErrorCode::kConfig, "export_format must be owl or kif");
  }
  if (!values.empty()) {
    throw Error(ErrorCode::kConfig, "unknown key: " + values.begin()->first);
  }
  return config;
}

Config LoadConfig(const std::filesystem::path &path) {
  std::string content;
  try {
    content = ReadFile(path);
  } catch (const Error &e) {
    throw Error(ErrorCode::kConfig, e.detail());
  }
  return ParseConfig(content, path.parent_path());
}

PipelineInputs ReadInputs(const Config &config) {
  PipelineInputs in;
  in.corpus = LoadCorpus(config.corpus);
  in.lexicon = ReadFile(config.lexicon);
  in.patterns = ReadFile(config.patterns);
  in.dsl = ReadFile(config.dsl);
  in.decisions = ReadFile(config.decisions);
  in.stopwords = ReadFile(config.stopwords);
  if (config.declarations) in.declarations = ReadFile(*config.declarations);
  in.export_format = config.export_format;
  in.iri = config.iri;
  return in;
}

namespace {

std::string CorpusHash(const Corpus &corpus) {
  std::string blob;
  for (const Document &d : corpus) {
    blob += d.id + '\0' + std::to_string(d.text.size()) + '\0' + d.text;
  }
  return Sha256Hex(blob);
}

NormalizeOptions AlignOptions(const PipelineInputs &in, const Lexicon &lexicon) {
  NormalizeOptions options;
  options.stopwords = ParseStopwords(in.stopwords);
  options.lexicon = &lexicon;
  return options;
}

}  // namespace

PipelineResult EvaluatePipeline(
    const PipelineInputs &in, const std::map<std::string, StageRecord> &previous,
    const std::function<std::optional<std::string>(const std::string &)> &load) {
  const std::string h_corpus = CorpusHash(in.corpus);
  const std::string h_lexicon = Sha256Hex(in.lexicon);
  const std::string h_patterns = Sha256Hex(in.patterns);
  const std::string h_dsl = Sha256Hex(in.dsl);
  const std::string h_decisions = Sha256Hex(in.decisions);
  const std::string h_stopwords = Sha256Hex(in.stopwords);
  const std::string h_declarations = Sha256Hex(in.declarations);
  const std::string export_file =
      in.export_format == "kif" ? "ontology.kif" : "ontology.owl";

  PipelineResult result;
  // Output hashes of completed stages, used as inputs downstream.
  std::map<std::string, std::string> out_hash;
  Lexicon lexicon;
  bool lexicon_ready = false;
  auto get_lexicon = [&]() -> const Lexicon & {
    if (!lexicon_ready) lexicon = Lexicon::FromTsv(in.lexicon);
    lexicon_ready = true;
    return lexicon;
  };

  struct Stage {
    const char *name;
    std::string artifact;
    std::vector<std::string> deps;
    std::function<std::string()> compute;
  };
  auto artifact_of = [&](const std::string &file) { return ParseJson(result.artifacts.at(file)); };

  std::vector<Stage> stages;
  stages.push_back({"extract", "candidates.json", {h_corpus, h_lexicon, h_patterns}, [&] {
    return Dump(CandidatesToJson(
        RunExtract(in.corpus, get_lexicon(), ParsePatterns(in.patterns))));
  }});
  stages.push_back({"net", "lexnet.json", {h_corpus, h_lexicon, h_declarations, "@extract"}, [&] {
    auto candidates = CandidatesFromJson(artifact_of("candidates.json"));
    return Dump(LexNetToJson(
        RunNet(in.corpus, get_lexicon(), candidates, ParseDeclarations(in.declarations))));
  }});
  stages.push_back({"validate", "validated.json", {h_decisions, "@net"}, [&] {
    return Dump(LexNetToJson(
        ApplyValidation(LexNetFromJson(artifact_of("lexnet.json")), in.decisions)));
  }});
  stages.push_back({"project", "taxonomy.json", {"@validate"}, [&] {
    return Dump(TaxonomyToJson(Project(LexNetFromJson(artifact_of("validated.json")))));
  }});
  stages.push_back({"ok-check", "ok_check.json", {h_dsl}, [&] {
    OkOntology ontology = ParseDsl(in.dsl);
    std::vector<Violation> violations = CheckConsistency(ontology);
    return Dump({{"ontology", ontology.name()},
                 {"concepts", ontology.concepts().size()},
                 {"consistent", violations.empty()},
                 {"violations", ViolationsToJson(violations)}});
  }});
  stages.push_back({"align", "alignment.json",
                    {h_dsl, h_stopwords, h_lexicon, "@project"}, [&] {
    OkOntology ontology = ParseDsl(in.dsl);
    Taxonomy taxonomy = TaxonomyFromJson(artifact_of("taxonomy.json"));
    Aligner aligner(ontology, AlignOptions(in, get_lexicon()));
    auto alignments = AlignTaxonomy(taxonomy, aligner);
    return Dump({{"alignments", AlignmentsToJson(alignments)},
                 {"discrepancies",
                  DiscrepancyToJson(CompareStructures(taxonomy, ontology, alignments))}});
  }});
  stages.push_back({"index", "index.json",
                    {h_corpus, h_dsl, h_stopwords, h_lexicon, "@extract", "@project"}, [&] {
    auto candidates = CandidatesFromJson(artifact_of("candidates.json"));
    ProjectedStructure projected(TaxonomyFromJson(artifact_of("taxonomy.json")));
    OkStructure ok(ParseDsl(in.dsl), AlignOptions(in, get_lexicon()));
    DocIndex a = IndexCorpus(in.corpus, candidates, projected,
                             IdentityAlignment(projected.taxonomy()));
    DocIndex b = IndexCorpus(in.corpus, candidates, ok,
                             AlignCandidates(candidates, ok.aligner()));
    return Dump({{"projected", DocIndexToJson(a)}, {"ok", DocIndexToJson(b)}});
  }});
  stages.push_back({"export", export_file, {h_dsl, in.export_format, in.iri}, [&] {
    OkOntology ontology = ParseDsl(in.dsl);
    if (in.export_format == "kif") return ToKif(ontology);
    return ToOwl(ontology, in.iri.empty() ? kDefaultIri : std::string_view(in.iri));
  }});

  bool stopped = false;
  for (Stage &stage : stages) {
    StageRecord record;
    record.name = stage.name;
    record.artifact = stage.artifact;
    if (stopped) {
      result.stages.push_back(std::move(record));
      continue;
    }
    std::vector<std::string> parts;
    for (const std::string &d : stage.deps) {
      parts.push_back(d.starts_with("@") ? out_hash.at(d.substr(1)) : d);
    }
    std::string blob = std::string(kVersion) + '\0' + stage.name + '\0' + stage.artifact;
    for (const std::string &p : parts) blob += '\0' + p;
    record.input_hash = Sha256Hex(blob);

    std::optional<std::string> content;
    auto prev = previous.find(stage.name);
    if (prev != previous.end() && prev->second.input_hash == record.input_hash &&
        prev->second.status == "ok" && load) {
      content = load(stage.artifact);
      if (content && Sha256Hex(*content) != prev->second.output_hash) content.reset();
      record.cached = content.has_value();
    }
    if (!content) {
      try {
        content = stage.compute();
      } catch (const Error &e) {
        record.status = "failed";
        record.message = e.what();
        result.exit_code = 2;
        stopped = true;
        result.stages.push_back(std::move(record));
        continue;
      }
    }
    record.output_hash = Sha256Hex(*content);
    record.status = "ok";
    out_hash[stage.name] = record.output_hash;
    result.artifacts[stage.artifact] = *content;

    if (record.name == "ok-check" && !ParseJson(*content).at("consistent").get<bool>()) {
      record.status = "violations";
      record.message = "ontology has consistency violations";
      result.exit_code = 3;
      stopped = true;
    }
    result.stages.push_back(std::move(record));
  }
  return result;
}

std::string ManifestJson(const PipelineInputs &in, const PipelineResult &result) {
  Json stages = Json::array();
  for (const StageRecord &s : result.stages) {
    Json j = {{"name", s.name},
              {"artifact", s.artifact},
              {"status", s.status},
              {"cached", s.cached},
              {"input_hash", s.input_hash},
              {"output_sha256", s.output_hash}};
    if (!s.message.empty()) j["message"] = s.message;
    stages.push_back(std::move(j));
  }
  Json documents = Json::object();
  for (const Document &d : in.corpus) documents[d.id] = Sha256Hex(d.text);
  return Dump({{"tool", "ontoterm"},
               {"version", kVersion},
               {"inputs",
                {{"corpus", documents},
                 {"lexicon", Sha256Hex(in.lexicon)},
                 {"patterns", Sha256Hex(in.patterns)},
                 {"dsl", Sha256Hex(in.dsl)},
                 {"decisions", Sha256Hex(in.decisions)},
                 {"stopwords", Sha256Hex(in.stopwords)},
                 {"declarations", Sha256Hex(in.declarations)},
                 {"export_format", in.export_format},
                 {"iri", in.iri}}},
               {"stages", stages},
               {"exit_code", result.exit_code}});
}

PipelineResult RunPipeline(const Config &config) {
  PipelineInputs inputs = ReadInputs(config);
  namespace fs = std::filesystem;

  std::map<std::string, StageRecord> previous;
  fs::path manifest_path = config.output / "manifest.json";
  if (fs::exists(manifest_path)) {
    try {
      Json m = ParseJson(ReadFile(manifest_path));
      for (const Json &s : m.at("stages")) {
        StageRecord r;
        r.name = s.at("name").get<std::string>();
        r.artifact = s.at("artifact").get<std::string>();
        r.status = s.at("status").get<std::string>();
        r.input_hash = s.at("input_hash").get<std::string>();
        r.output_hash = s.at("output_sha256").get<std::string>();
        previous[r.name] = r;
      }
    } catch (const std::exception &) {
      previous.clear();  // Unreadable manifest: recompute everything.
    }
  }
  auto load = [&](const std::string &artifact) -> std::optional<std::string> {
    fs::path p = config.output / artifact;
    if (!fs::exists(p)) return std::nullopt;
    return ReadFile(p);
  };

  PipelineResult result = EvaluatePipeline(inputs, previous, load);
  for (const StageRecord &s : result.stages) {
    if (s.status == "not_run" || s.status == "failed") continue;
    if (!s.cached) WriteFile(config.output / s.artifact, result.artifacts.at(s.artifact));
  }
  WriteFile(manifest_path, ManifestJson(inputs, result));
  return result;
}

}  // namespace ontoterm
