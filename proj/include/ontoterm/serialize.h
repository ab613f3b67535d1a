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

// JSON forms of the stage artifacts. Readers throw E_SYNTAX on malformed
// input.

#ifndef ONTOTERM_SERIALIZE_H_
#define ONTOTERM_SERIALIZE_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ontoterm/align.h"
#include "ontoterm/corpus.h"
#include "ontoterm/lexnet.h"
#include "ontoterm/okmodel.h"
#include "ontoterm/projection.h"
#include "ontoterm/retrieval.h"

namespace ontoterm {

using Json = nlohmann::json;

// Two-space indented, trailing newline.
std::string Dump(const Json &json);
Json ParseJson(std::string_view text);

Json CandidatesToJson(const std::vector<TermCandidate> &candidates);
std::vector<TermCandidate> CandidatesFromJson(const Json &json);

Json LexNetToJson(const LexNet &lexnet);
LexNet LexNetFromJson(const Json &json);

Json TaxonomyToJson(const Taxonomy &taxonomy);
Taxonomy TaxonomyFromJson(const Json &json);

Json ViolationsToJson(const std::vector<Violation> &violations);

Json AlignmentResultToJson(const AlignmentResult &result);
Json AlignmentsToJson(const std::map<std::string, AlignmentResult> &alignments);
std::map<std::string, AlignmentResult> AlignmentsFromJson(const Json &json);

Json DiscrepancyToJson(const DiscrepancyReport &report);

Json DocIndexToJson(const DocIndex &index);
DocIndex DocIndexFromJson(const Json &json);

Json RecallToJson(const RecallComparison &comparison);

Json SimilarityToJson(const Similarity &similarity);
Json ClassificationToJson(const Classification &classification);

}  // namespace ontoterm

#endif  // ONTOTERM_SERIALIZE_H_
