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

// Corpus ingestion, dictionary-driven lemmatization and POS-pattern term
// candidate extraction.

#ifndef ONTOTERM_CORPUS_H_
#define ONTOTERM_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ontoterm {

enum class Pos { kNoun, kAdj, kPrep, kDet, kVerb, kOther };

std::string_view PosName(Pos pos);

// Accepts the full names (NOUN, ADJ, ...) and the one-letter forms used in
// pattern ids (N, A, P, D, V). Case-insensitive.
std::optional<Pos> ParsePos(std::string_view name);

struct Document {
  std::string id;
  std::string text;
};

using Corpus = std::vector<Document>;

// Reads every *.txt file of a directory. Document ids are file stems, sorted.
Corpus LoadCorpus(const std::filesystem::path &directory);

struct LexiconEntry {
  std::string surface;
  std::string lemma;
  Pos pos = Pos::kOther;
};

// Surface -> (lemma, POS) dictionary. Lookup is case-insensitive. A surface
// may span several words ("tout ou rien"); the annotator then merges the
// matching token run into a single token.
class Lexicon {
 public:
  Lexicon() = default;

  // Later entries for the same surface replace earlier ones.
  void Add(LexiconEntry entry);

  const LexiconEntry *Find(std::string_view surface) const;

  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  size_t max_words() const { return max_words_; }

  // TSV: surface<TAB>lemma<TAB>pos, '#' comments and blank lines ignored.
  static Lexicon FromTsv(std::string_view content);
  static Lexicon Load(const std::filesystem::path &path);

 private:
  std::unordered_map<std::string, LexiconEntry> entries_;
  size_t max_words_ = 1;
};

struct AnnotatedToken {
  std::string surface;
  std::string lemma;
  Pos pos = Pos::kOther;
  std::string doc_id;
  // Code point offsets into the document text; end is exclusive.
  size_t offset = 0;
  size_t end = 0;
};

// Splits on whitespace and punctuation, keeps hyphenated compounds whole and
// splits elided articles ("l'", "d'") from their host word. Punctuation marks
// are kept as OTHER tokens so that patterns never match across them.
std::vector<AnnotatedToken> Annotate(const Document &document,
                                     const Lexicon &lexicon);

enum class HeadPosition { kFirstNoun, kLastNoun };

struct PatternDef {
  std::string id;
  std::vector<Pos> sequence;
  HeadPosition head = HeadPosition::kFirstNoun;
};

// Throws E_BAD_PATTERN unless the sequence is non-empty and has a NOUN.
void ValidatePattern(const PatternDef &pattern);

// One pattern per line: "id: POS POS ... [head=first|last]".
std::vector<PatternDef> ParsePatterns(std::string_view content);
std::vector<PatternDef> LoadPatterns(const std::filesystem::path &path);

// The single-noun pattern "N" that makes bare hypernym heads into terms.
PatternDef BareNounPattern();

struct Occurrence {
  std::string doc_id;
  size_t offset = 0;
  size_t end = 0;

  auto operator<=>(const Occurrence &) const = default;
};

struct TermCandidate {
  std::vector<std::string> lemmas;
  std::string pattern_id;
  std::string head_lemma;
  size_t frequency = 0;
  std::vector<Occurrence> occurrences;

  // Lemmas joined by single spaces.
  std::string Label() const;
};

// Leftmost-longest scan per document. At each token the longest matching
// pattern wins (ties go to the earlier pattern); the scan resumes after the
// match, so matches never overlap. BareNounPattern() is added when no pattern
// is exactly [NOUN]. Candidates are merged by lemma sequence and returned
// sorted by it.
std::vector<TermCandidate> ExtractCandidates(
    std::span<const AnnotatedToken> tokens,
    std::span<const PatternDef> patterns);

// Annotates every document and extracts over the whole corpus.
std::vector<TermCandidate> ExtractFromCorpus(const Corpus &corpus,
                                             const Lexicon &lexicon,
                                             std::span<const PatternDef> patterns);

}  // namespace ontoterm

#endif  // ONTOTERM_CORPUS_H_
