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


// Python bindings. Structured results cross the boundary as JSON text; the
// pure-Python wrapper in the ontoterm package decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>

#include "ontoterm/align.h"
#include "ontoterm/corpus.h"
#include "ontoterm/error.h"
#include "ontoterm/export.h"
#include "ontoterm/lexnet.h"
#include "ontoterm/okmodel.h"
#include "ontoterm/pipeline.h"
#include "ontoterm/projection.h"
#include "ontoterm/retrieval.h"
#include "ontoterm/serialize.h"

namespace py = pybind11;

namespace ontoterm {
namespace {

Corpus ToCorpus(const std::map<std::string, std::string> &documents) {
  Corpus corpus;
  for (const auto &[id, text] : documents) corpus.push_back({id, text});
  return corpus;
}

NormalizeOptions Options(const std::optional<std::string> &stopwords,
                         const Lexicon *lexicon) {
  NormalizeOptions options;
  if (stopwords) options.stopwords = ParseStopwords(*stopwords);
  options.lexicon = lexicon;
  return options;
}

std::string Extract(const std::map<std::string, std::string> &documents,
                    const std::string &lexicon, const std::string &patterns) {
  return Dump(CandidatesToJson(
      RunExtract(ToCorpus(documents), Lexicon::FromTsv(lexicon), ParsePatterns(patterns))));
}

std::string Network(const std::map<std::string, std::string> &documents,
                    const std::string &lexicon, const std::string &candidates,
                    const std::string &declarations) {
  return Dump(LexNetToJson(RunNet(ToCorpus(documents), Lexicon::FromTsv(lexicon),
                                  CandidatesFromJson(ParseJson(candidates)),
                                  ParseDeclarations(declarations))));
}

std::string Validate(const std::string &lexnet, const std::string &decisions) {
  return Dump(LexNetToJson(ApplyValidation(LexNetFromJson(ParseJson(lexnet)), decisions)));
}

std::string ProjectJson(const std::string &lexnet) {
  return Dump(TaxonomyToJson(Project(LexNetFromJson(ParseJson(lexnet)))));
}

std::string Check(const std::string &dsl) {
  return Dump(ViolationsToJson(CheckConsistency(ParseDsl(dsl))));
}

std::string AlignOne(const std::string &term, const std::string &dsl,
                     const std::optional<std::string> &stopwords,
                     const std::string &lexicon_tsv) {
  OkOntology ontology = ParseDsl(dsl);
  Lexicon lexicon = Lexicon::FromTsv(lexicon_tsv);
  return Dump(AlignmentResultToJson(
      Aligner(ontology, Options(stopwords, &lexicon)).Align(term)));
}

std::string Compare(const std::string &taxonomy_json, const std::string &dsl,
                    const std::optional<std::string> &stopwords,
                    const std::string &lexicon_tsv) {
  OkOntology ontology = ParseDsl(dsl);
  Lexicon lexicon = Lexicon::FromTsv(lexicon_tsv);
  Taxonomy taxonomy = TaxonomyFromJson(ParseJson(taxonomy_json));
  auto alignments = AlignTaxonomy(taxonomy, Aligner(ontology, Options(stopwords, &lexicon)));
  return Dump({{"alignments", AlignmentsToJson(alignments)},
               {"discrepancies",
                DiscrepancyToJson(CompareStructures(taxonomy, ontology, alignments))}});
}

// Retrieval over both structures in one call: index the documents under the
// projected taxonomy and the ontology, then compare one label.
std::string Recall(const std::map<std::string, std::string> &documents,
                   const std::string &candidates_json, const std::string &taxonomy_json,
                   const std::string &dsl, const std::string &label,
                   const std::optional<std::string> &stopwords,
                   const std::string &lexicon_tsv) {
  Corpus corpus = ToCorpus(documents);
  Lexicon lexicon = Lexicon::FromTsv(lexicon_tsv);
  auto candidates = CandidatesFromJson(ParseJson(candidates_json));
  ProjectedStructure projected(TaxonomyFromJson(ParseJson(taxonomy_json)));
  OkStructure ok(ParseDsl(dsl), Options(stopwords, &lexicon));
  DocIndex a = IndexCorpus(corpus, candidates, projected, IdentityAlignment(projected.taxonomy()));
  DocIndex b = IndexCorpus(corpus, candidates, ok, AlignCandidates(candidates, ok.aligner()));
  return Dump({{"projected_index", DocIndexToJson(a)},
               {"ok_index", DocIndexToJson(b)},
               {"comparison", RecallToJson(CompareRecall(a, projected, b, ok, label))}});
}

}  // namespace
}  // namespace ontoterm

PYBIND11_MODULE(_ontoterm, m) {
  using namespace ontoterm;
  m.doc() = "Native core of the ontoterm package";
  m.attr("__version__") = std::string(kVersion);

  static py::exception<Error> error(m, "OntotermError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error &e) {
      py::object args = py::make_tuple(std::string(ErrorCodeName(e.code())), e.detail());
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  m.def("extract", &Extract, py::arg("documents"), py::arg("lexicon"), py::arg("patterns"));
  m.def("build_network", &Network, py::arg("documents"), py::arg("lexicon"),
        py::arg("candidates"), py::arg("declarations") = "");
  m.def("apply_validation", &Validate, py::arg("lexnet"), py::arg("decisions"));
  m.def("project", &ProjectJson, py::arg("lexnet"));
  m.def("check_consistency", &Check, py::arg("dsl"));
  m.def("align_term", &AlignOne, py::arg("term"), py::arg("dsl"),
        py::arg("stopwords") = std::nullopt, py::arg("lexicon") = "");
  m.def("compare_structures", &Compare, py::arg("taxonomy"), py::arg("dsl"),
        py::arg("stopwords") = std::nullopt, py::arg("lexicon") = "");
  m.def("compare_recall", &Recall, py::arg("documents"), py::arg("candidates"),
        py::arg("taxonomy"), py::arg("dsl"), py::arg("label"),
        py::arg("stopwords") = std::nullopt, py::arg("lexicon") = "");
  m.def("to_owl", [](const std::string &dsl, const std::string &iri) {
    return ToOwl(ParseDsl(dsl), iri);
  }, py::arg("dsl"), py::arg("iri") = std::string(kDefaultIri));
  m.def("to_kif", [](const std::string &dsl) { return ToKif(ParseDsl(dsl)); },
        py::arg("dsl"));
  m.def("mangle_label", &MangleLabel, py::arg("label"));
  m.def("run_pipeline", [](const std::string &config) {
    return RunPipeline(LoadConfig(config)).exit_code;
  }, py::arg("config"));
}
