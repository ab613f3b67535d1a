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

// Stage functions shared by the CLI and the end-to-end pipeline, plus the
// hash-cached runner that writes every artifact and a manifest.

#ifndef ONTOTERM_PIPELINE_H_
#define ONTOTERM_PIPELINE_H_

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontoterm/align.h"
#include "ontoterm/corpus.h"
#include "ontoterm/lexnet.h"
#include "ontoterm/okmodel.h"
#include "ontoterm/projection.h"
#include "ontoterm/retrieval.h"

namespace ontoterm {

inline constexpr std::string_view kVersion = "0.1.0";

// Candidate extraction; the bare-noun pattern is added when absent.
std::vector<TermCandidate> RunExtract(const Corpus &corpus, const Lexicon &lexicon,
                                      std::vector<PatternDef> patterns);

// Same-head hyponymy, copula relations and declarations merged into one
// network.
LexNet RunNet(const Corpus &corpus, const Lexicon &lexicon,
              const std::vector<TermCandidate> &candidates,
              const Declarations &declarations);

// Alignment of every candidate label (head lemma as head) onto the ontology.
std::map<std::string, AlignmentResult> AlignCandidates(
    const std::vector<TermCandidate> &candidates, const Aligner &aligner);

struct Config {
  std::filesystem::path corpus;
  std::filesystem::path lexicon;
  std::filesystem::path patterns;
  std::filesystem::path dsl;
  std::filesystem::path decisions;
  std::filesystem::path stopwords;
  std::filesystem::path output;
  std::optional<std::filesystem::path> declarations;
  std::string export_format = "owl";
  std::string iri;
};

// key = "value" lines, '#' comments. Relative paths resolve against `base`.
// Throws E_CONFIG naming the missing or unknown key.
Config ParseConfig(std::string_view content, const std::filesystem::path &base = {});
Config LoadConfig(const std::filesystem::path &path);

// Raw stage inputs, already read from disk.
struct PipelineInputs {
  Corpus corpus;
  std::string lexicon;
  std::string patterns;
  std::string dsl;
  std::string decisions;
  std::string stopwords;
  std::string declarations;
  std::string export_format = "owl";
  std::string iri;
};

PipelineInputs ReadInputs(const Config &config);

struct StageRecord {
  std::string name;
  std::string artifact;
  std::string input_hash;
  std::string output_hash;
  bool cached = false;
  // "ok", "failed", "violations" or "not_run".
  std::string status = "not_run";
  std::string message;
};

struct PipelineResult {
  int exit_code = 0;
  std::vector<StageRecord> stages;
  // Artifact file name -> content, for every stage that produced output.
  std::map<std::string, std::string> artifacts;
};

// Evaluates the stages in order. `previous` maps a stage name to its earlier
// record; a stage whose input hash matches and whose artifact content is
// supplied by `load` is not recomputed. Exit codes: 0, 2 on a stage error,
// 3 when the ontology has consistency violations.
PipelineResult EvaluatePipeline(
    const PipelineInputs &inputs, const std::map<std::string, StageRecord> &previous = {},
    const std::function<std::optional<std::string>(const std::string &)> &load = {});

// Reads the config's inputs, evaluates against the manifest already in the
// output directory, and writes artifacts plus manifest.json.
PipelineResult RunPipeline(const Config &config);

std::string ManifestJson(const PipelineInputs &inputs, const PipelineResult &result);

}  // namespace ontoterm

#endif  // ONTOTERM_PIPELINE_H_
