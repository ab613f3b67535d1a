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

// ontoterm: command-line front end. Each subcommand reads the previous
// stage's JSON and writes its own; `run` chains all of them.
//
// Exit codes: 0 ok, 1 usage or configuration error, 2 stage failure,
// 3 consistency violations.

#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ontoterm/align.h"
#include "ontoterm/corpus.h"
#include "ontoterm/error.h"
#include "ontoterm/export.h"
#include "ontoterm/io.h"
#include "ontoterm/lexnet.h"
#include "ontoterm/okmodel.h"
#include "ontoterm/pipeline.h"
#include "ontoterm/projection.h"
#include "ontoterm/retrieval.h"
#include "ontoterm/serialize.h"

namespace ontoterm {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitStage = 2;
constexpr int kExitViolations = 3;

bool UseColor() {
  return std::getenv("ONTOTERM_NO_COLOR") == nullptr && isatty(STDOUT_FILENO) != 0;
}

std::string Paint(const std::string &s, const char *code) {
  if (!UseColor()) return s;
  return std::string("\033[") + code + "m" + s + "\033[0m";
}

std::string VerdictColor(std::string_view verdict) {
  if (verdict == "AGREE") return Paint(std::string(verdict), "32");
  if (verdict == "PARENT_ELIDED") return Paint(std::string(verdict), "33");
  if (verdict == "CONFLICT") return Paint(std::string(verdict), "31");
  return std::string(verdict);
}

// Column widths are measured in code points so accented labels line up.
size_t Width(const std::string &s) {
  size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  // ANSI escapes do not take room.
  for (size_t i = s.find('\033'); i != std::string::npos; i = s.find('\033', i + 1)) {
    size_t m = s.find('m', i);
    if (m != std::string::npos) n -= m - i + 1;
  }
  return n;
}

void PrintTable(const std::vector<std::string> &header,
                const std::vector<std::vector<std::string>> &rows) {
  std::vector<size_t> widths(header.size());
  for (size_t i = 0; i < header.size(); ++i) widths[i] = Width(header[i]);
  for (const auto &row : rows) {
    for (size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], Width(row[i]));
  }
  auto line = [&](const std::vector<std::string> &cells) {
    std::string out;
    for (size_t i = 0; i < cells.size(); ++i) {
      out += cells[i];
      if (i + 1 < cells.size()) out += std::string(widths[i] - Width(cells[i]) + 2, ' ');
    }
    std::cout << out << "\n";
  };
  std::vector<std::string> bold;
  for (const std::string &h : header) bold.push_back(Paint(h, "1"));
  line(bold);
  for (const auto &row : rows) line(row);
}

std::string JoinSet(const auto &items) {
  std::string out;
  for (const auto &s : items) out += (out.empty() ? "" : ", ") + std::string(s);
  return out.empty() ? "-" : out;
}

void Emit(const std::string &content, const std::string &out_path) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    WriteFile(out_path, content);
  }
}

Json ReadJson(const std::string &path) { return ParseJson(ReadFile(path)); }

// An index file is either one DocIndex or the pipeline's {projected, ok}.
DocIndex ReadIndex(const std::string &path, std::string_view structure) {
  Json j = ReadJson(path);
  if (j.contains("annotations")) {
    DocIndex index = DocIndexFromJson(j);
    if (index.structure != structure) {
      throw Error(ErrorCode::kConfig, path + " indexes the " + index.structure +
                                          " structure, not " + std::string(structure));
    }
    return index;
  }
  if (!j.contains(structure)) {
    throw Error(ErrorCode::kSyntax, path + " has no " + std::string(structure) + " index");
  }
  return DocIndexFromJson(j.at(std::string(structure)));
}

NormalizeOptions Options(const std::string &stopwords, const Lexicon *lexicon) {
  NormalizeOptions options;
  if (!stopwords.empty()) options.stopwords = ParseStopwords(ReadFile(stopwords));
  options.lexicon = lexicon;
  return options;
}

struct Args {
  std::string format = "json";
  std::string out;
  std::string corpus, lexicon, patterns, candidates, declarations, lexnet, decisions;
  std::string dsl, taxonomy, stopwords, term, structure, index, concept_label;
  std::string projected_index, ok_index, export_format = "owl", iri, config;
  bool dot = false;
};

void AddFormat(CLI::App *cmd, Args &a) {
  cmd->add_option("--format", a.format, "Report format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
}

int DoExtract(const Args &a) {
  Corpus corpus = LoadCorpus(a.corpus);
  auto candidates =
      RunExtract(corpus, Lexicon::Load(a.lexicon), LoadPatterns(a.patterns));
  if (a.format == "table") {
    std::vector<std::vector<std::string>> rows;
    for (const TermCandidate &c : candidates) {
      rows.push_back({c.Label(), c.pattern_id, c.head_lemma, std::to_string(c.frequency)});
    }
    PrintTable({"term", "pattern", "head", "freq"}, rows);
    if (!a.out.empty()) WriteFile(a.out, Dump(CandidatesToJson(candidates)));
    return kExitOk;
  }
  Emit(Dump(CandidatesToJson(candidates)), a.out);
  return kExitOk;
}

void PrintNet(const LexNet &net) {
  std::vector<std::vector<std::string>> rows;
  for (const auto &[key, r] : net.relations()) {
    rows.push_back({std::string(RelationKindName(r.kind)), r.source, r.target,
                    std::string(EvidenceName(r.evidence)), std::string(StatusName(r.status))});
  }
  PrintTable({"kind", "source", "target", "evidence", "status"}, rows);
}

int DoNet(const Args &a) {
  Corpus corpus = LoadCorpus(a.corpus);
  auto candidates = CandidatesFromJson(ReadJson(a.candidates));
  Declarations decl;
  if (!a.declarations.empty()) decl = ParseDeclarations(ReadFile(a.declarations));
  LexNet net = RunNet(corpus, Lexicon::Load(a.lexicon), candidates, decl);
  if (a.format == "table") PrintNet(net);
  if (a.format == "json" || !a.out.empty()) Emit(Dump(LexNetToJson(net)), a.out);
  return kExitOk;
}

int DoValidate(const Args &a) {
  LexNet net = ApplyValidation(LexNetFromJson(ReadJson(a.lexnet)), ReadFile(a.decisions));
  if (a.format == "table") PrintNet(net);
  if (a.format == "json" || !a.out.empty()) Emit(Dump(LexNetToJson(net)), a.out);
  return kExitOk;
}

int DoProject(const Args &a) {
  Taxonomy taxonomy = Project(LexNetFromJson(ReadJson(a.lexnet)));
  if (a.dot) {
    Emit(ToDot(taxonomy), a.out);
    return kExitOk;
  }
  if (a.format == "table") {
    std::vector<std::vector<std::string>> rows;
    for (const auto &[id, c] : taxonomy.concepts) {
      rows.push_back({"<" + c.label + ">", JoinSet(taxonomy.Parents(id)),
                      JoinSet(c.denoting_terms)});
    }
    PrintTable({"concept", "parents", "terms"}, rows);
  }
  if (a.format == "json" || !a.out.empty()) Emit(Dump(TaxonomyToJson(taxonomy)), a.out);
  return kExitOk;
}

int DoOkCheck(const Args &a) {
  OkOntology ontology = ParseDsl(ReadFile(a.dsl));
  std::vector<Violation> violations = CheckConsistency(ontology);
  if (a.format == "table") {
    if (violations.empty()) {
      std::cout << Paint("consistent", "32") << ": " << ontology.concepts().size()
                << " concepts\n";
    } else {
      std::vector<std::vector<std::string>> rows;
      for (const Violation &v : violations) {
        rows.push_back({Paint(RuleName(v.rule), "31"), v.message});
      }
      PrintTable({"rule", "message"}, rows);
    }
  } else {
    Emit(Dump({{"ontology", ontology.name()},
               {"concepts", ontology.concepts().size()},
               {"consistent", violations.empty()},
               {"violations", ViolationsToJson(violations)}}),
         a.out);
  }
  return violations.empty() ? kExitOk : kExitViolations;
}

int DoAlign(const Args &a) {
  OkOntology ontology = ParseDsl(ReadFile(a.dsl));
  std::optional<Lexicon> lexicon;
  if (!a.lexicon.empty()) lexicon = Lexicon::Load(a.lexicon);
  Aligner aligner(ontology, Options(a.stopwords, lexicon ? &*lexicon : nullptr));

  if (!a.term.empty()) {
    AlignmentResult r = aligner.Align(a.term);
    if (a.format == "table") {
      PrintTable({"term", "kind", "concept", "candidates"},
                 {{r.term, std::string(AlignKindName(r.kind)), r.concept_name.value_or("-"),
                   JoinSet(r.candidates)}});
    } else {
      Emit(Dump(AlignmentResultToJson(r)), a.out);
    }
    return kExitOk;
  }
  if (a.taxonomy.empty()) throw CLI::RequiredError("--term or --taxonomy");
  Taxonomy taxonomy = TaxonomyFromJson(ReadJson(a.taxonomy));
  auto alignments = AlignTaxonomy(taxonomy, aligner);
  DiscrepancyReport report = CompareStructures(taxonomy, ontology, alignments);
  if (a.format == "table") {
    std::vector<std::vector<std::string>> rows;
    for (const auto &[term, r] : alignments) {
      rows.push_back({term, std::string(AlignKindName(r.kind)), r.concept_name.value_or("-")});
    }
    PrintTable({"term", "kind", "concept"}, rows);
    std::cout << "\n";
    rows.clear();
    for (const DiscrepancyEntry &e : report.entries) {
      rows.push_back({e.term, e.projected_parent, e.aligned_concept.value_or("-"),
                      JoinSet(e.ok_parent_chain), VerdictColor(VerdictName(e.verdict))});
    }
    PrintTable({"term", "projected parent", "concept", "ok chain", "verdict"}, rows);
  } else {
    Emit(Dump({{"alignments", AlignmentsToJson(alignments)},
               {"discrepancies", DiscrepancyToJson(report)}}),
         a.out);
  }
  return kExitOk;
}

// The structure named by --structure, built from --taxonomy or --dsl.
std::unique_ptr<ConceptStructure> LoadStructure(const Args &a, const std::string &which,
                                                const Lexicon *lexicon) {
  if (which == "projected") {
    if (a.taxonomy.empty()) throw CLI::RequiredError("--taxonomy");
    return std::make_unique<ProjectedStructure>(TaxonomyFromJson(ReadJson(a.taxonomy)));
  }
  if (a.dsl.empty()) throw CLI::RequiredError("--dsl");
  return std::make_unique<OkStructure>(ParseDsl(ReadFile(a.dsl)),
                                       Options(a.stopwords, lexicon));
}

int DoIndex(const Args &a) {
  Corpus corpus = LoadCorpus(a.corpus);
  Lexicon lexicon = a.lexicon.empty() ? Lexicon() : Lexicon::Load(a.lexicon);
  auto candidates = CandidatesFromJson(ReadJson(a.candidates));
  auto structure = LoadStructure(a, a.structure, &lexicon);
  std::map<std::string, AlignmentResult> alignment;
  if (auto *p = dynamic_cast<ProjectedStructure *>(structure.get())) {
    alignment = IdentityAlignment(p->taxonomy());
  } else {
    alignment = AlignCandidates(candidates, static_cast<OkStructure &>(*structure).aligner());
  }
  DocIndex index = IndexCorpus(corpus, candidates, *structure, alignment);
  for (const std::string &doc : index.unaligned_only) {
    std::cerr << "warning: E_UNALIGNED_ONLY: " << doc << " has no annotation\n";
  }
  if (a.format == "table") {
    std::vector<std::vector<std::string>> rows;
    for (const DocAnnotation &d : index.annotations) {
      rows.push_back({d.doc_id, d.concept_key, std::string(AnnotationSourceName(d.source))});
    }
    PrintTable({"document", "concept", "source"}, rows);
  }
  if (a.format == "json" || !a.out.empty()) Emit(Dump(DocIndexToJson(index)), a.out);
  return kExitOk;
}

int DoQuery(const Args &a) {
  Lexicon lexicon = a.lexicon.empty() ? Lexicon() : Lexicon::Load(a.lexicon);
  auto structure = LoadStructure(a, a.structure, &lexicon);
  std::optional<std::string> key = structure->Resolve(a.concept_label);
  if (!key) {
    throw Error(ErrorCode::kUnknownConcept, "\"" + a.concept_label + "\" names no concept of the " +
                                                a.structure + " structure");
  }
  DocIndex index = ReadIndex(a.index, a.structure);
  std::set<std::string> docs = Query(index, *structure, *key);
  if (a.format == "table") {
    std::cout << Paint("<" + *key + ">", "1") << " (" << a.structure << "): " << JoinSet(docs)
              << "\n";
  } else {
    Emit(Dump({{"structure", a.structure},
               {"concept", *key},
               {"closure", structure->Closure(*key)},
               {"documents", docs}}),
         a.out);
  }
  return kExitOk;
}

int DoCompareRecall(const Args &a) {
  Lexicon lexicon = a.lexicon.empty() ? Lexicon() : Lexicon::Load(a.lexicon);
  auto projected = LoadStructure(a, "projected", &lexicon);
  auto ok = LoadStructure(a, "ok", &lexicon);
  DocIndex index_a = ReadIndex(a.projected_index, "projected");
  DocIndex index_b = ReadIndex(a.ok_index.empty() ? a.projected_index : a.ok_index, "ok");
  RecallComparison c = CompareRecall(index_a, *projected, index_b, *ok, a.concept_label);
  if (a.format == "table") {
    std::vector<std::vector<std::string>> rows;
    for (const RecallExplanation &e : c.explanations) {
      std::string left = e.matched_first.empty() ? "-" : "<" + JoinSet(e.matched_first) + ">";
      std::string right =
          e.matched_second.empty() ? "-" : "<" + JoinSet(e.matched_second) + ">";
      std::string doc = c.symmetric_difference.contains(e.doc_id)
                            ? Paint(e.doc_id, "33") : e.doc_id;
      rows.push_back({doc, left, right});
    }
    PrintTable({"document", "projected <" + c.first.concept_key + ">",
                "ok <" + c.second.concept_key + ">"},
               rows);
    std::cout << "difference: {" << JoinSet(c.symmetric_difference) << "}\n";
  } else {
    Emit(Dump(RecallToJson(c)), a.out);
  }
  return kExitOk;
}

int DoExport(const Args &a) {
  OkOntology ontology = ParseDsl(ReadFile(a.dsl));
  std::string content =
      a.export_format == "kif"
          ? ToKif(ontology)
          : ToOwl(ontology, a.iri.empty() ? kDefaultIri : std::string_view(a.iri));
  Emit(content, a.out);
  return kExitOk;
}

int DoRun(const Args &a) {
  Config config = LoadConfig(a.config);
  PipelineResult result = RunPipeline(config);
  if (a.format == "table") {
    std::vector<std::vector<std::string>> rows;
    for (const StageRecord &s : result.stages) {
      std::string status = s.status;
      if (status == "ok") status = Paint(s.cached ? "cached" : "ok", "32");
      if (status == "failed" || status == "violations") status = Paint(status, "31");
      rows.push_back({s.name, s.artifact, status, s.message});
    }
    PrintTable({"stage", "artifact", "status", "message"}, rows);
  } else {
    std::cout << ReadFile(config.output / "manifest.json");
  }
  for (const StageRecord &s : result.stages) {
    if (s.status == "failed") std::cerr << "error: " << s.name << ": " << s.message << "\n";
  }
  return result.exit_code;
}

int ExitCodeFor(const Error &e) {
  switch (e.code()) {
    case ErrorCode::kConfig: return kExitUsage;
    case ErrorCode::kInconsistent: return kExitViolations;
    default: return kExitStage;
  }
}

}  // namespace
}  // namespace ontoterm

int main(int argc, char **argv) {
  using namespace ontoterm;
  CLI::App app{"Build, check and compare ontologies learned from text", "ontoterm"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Args a;

  auto *extract = app.add_subcommand("extract", "Extract candidate terms from a corpus");
  extract->add_option("--corpus", a.corpus, "Directory of *.txt documents")->required();
  extract->add_option("--lexicon", a.lexicon, "surface/lemma/POS TSV")->required();
  extract->add_option("--patterns", a.patterns, "Pattern file")->required();

  auto *net = app.add_subcommand("net", "Build the lexical network from candidates");
  net->add_option("--candidates", a.candidates)->required();
  net->add_option("--corpus", a.corpus)->required();
  net->add_option("--lexicon", a.lexicon)->required();
  net->add_option("--declarations", a.declarations, "Expert relation declarations");

  auto *validate = app.add_subcommand("validate", "Apply expert decisions to a network");
  validate->add_option("--lexnet", a.lexnet)->required();
  validate->add_option("--decisions", a.decisions)->required();

  auto *project = app.add_subcommand("project", "Project a validated network to a taxonomy");
  project->add_option("--lexnet", a.lexnet, "Validated network")->required();
  project->add_flag("--dot", a.dot, "Emit Graphviz DOT");

  auto *ok_check = app.add_subcommand("ok-check", "Check an ontology for consistency");
  ok_check->add_option("--dsl", a.dsl)->required();

  auto *align = app.add_subcommand("align", "Align terms to ontology concepts");
  align->add_option("--dsl", a.dsl)->required();
  auto *term_opt = align->add_option("--term", a.term, "Align a single term");
  align->add_option("--taxonomy", a.taxonomy, "Align and compare a projected taxonomy")
      ->excludes(term_opt);
  align->add_option("--stopwords", a.stopwords);
  align->add_option("--lexicon", a.lexicon);

  auto *index = app.add_subcommand("index", "Index a corpus on a concept structure");
  index->add_option("--corpus", a.corpus)->required();
  index->add_option("--candidates", a.candidates)->required();
  index->add_option("--structure", a.structure)
      ->required()
      ->check(CLI::IsMember({"projected", "ok"}));
  index->add_option("--taxonomy", a.taxonomy);
  index->add_option("--dsl", a.dsl);
  index->add_option("--stopwords", a.stopwords);
  index->add_option("--lexicon", a.lexicon);

  auto *query = app.add_subcommand("query", "Documents of a concept and its subsumees");
  query->add_option("--index", a.index)->required();
  query->add_option("--structure", a.structure)
      ->required()
      ->check(CLI::IsMember({"projected", "ok"}));
  query->add_option("--concept", a.concept_label)->required();
  query->add_option("--taxonomy", a.taxonomy);
  query->add_option("--dsl", a.dsl);
  query->add_option("--stopwords", a.stopwords);
  query->add_option("--lexicon", a.lexicon);

  auto *compare = app.add_subcommand("compare-recall",
                                     "Compare a query under both structures");
  compare->add_option("--projected-index", a.projected_index)->required();
  compare->add_option("--ok-index", a.ok_index, "Defaults to --projected-index");
  compare->add_option("--taxonomy", a.taxonomy)->required();
  compare->add_option("--dsl", a.dsl)->required();
  compare->add_option("--concept", a.concept_label)->required();
  compare->add_option("--stopwords", a.stopwords);
  compare->add_option("--lexicon", a.lexicon);

  auto *exp = app.add_subcommand("export", "Write the ontology as OWL or KIF");
  exp->add_option("--dsl", a.dsl)->required();
  exp->add_option("--format", a.export_format)
      ->check(CLI::IsMember({"owl", "kif"}))
      ->capture_default_str();
  exp->add_option("--iri", a.iri, "OWL prefix IRI");

  auto *run = app.add_subcommand("run", "Run every stage from a config file");
  run->add_option("--config", a.config)->required();

  for (CLI::App *cmd : {extract, net, validate, project, ok_check, align, index, query,
                        compare, run}) {
    AddFormat(cmd, a);
  }
  for (CLI::App *cmd : {extract, net, validate, project, ok_check, align, index, query,
                        compare, exp}) {
    cmd->add_option("--out", a.out, "Output file (default stdout)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*extract) return DoExtract(a);
    if (*net) return DoNet(a);
    if (*validate) return DoValidate(a);
    if (*project) return DoProject(a);
    if (*ok_check) return DoOkCheck(a);
    if (*align) return DoAlign(a);
    if (*index) return DoIndex(a);
    if (*query) return DoQuery(a);
    if (*compare) return DoCompareRecall(a);
    if (*exp) return DoExport(a);
    if (*run) return DoRun(a);
  } catch (const CLI::ParseError &e) {
    std::cerr << "error: missing " << e.what() << "\n";
    return kExitUsage;
  } catch (const DslError &e) {
    for (const DslDiagnostic &d : e.diagnostics()) {
      std::cerr << "line " << d.line << ": " << ErrorCodeName(d.code) << ": " << d.message
                << "\n";
    }
    return kExitStage;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCodeFor(e);
  }
  return kExitUsage;
}
