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

#include "ontoterm/corpus.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "ontoterm/error.h"
#include "ontoterm/io.h"
#include "ontoterm/text.h"

namespace ontoterm {
namespace {

// Case-insensitive lexicon key; typographic apostrophes fold to '.
std::string LexiconKey(std::string_view surface) {
  std::string key;
  for (const text::CodePoint &cp : text::Decode(text::NormalizeKey(surface))) {
    key += text::IsApostrophe(cp.value) ? std::string("'") : cp.utf8;
  }
  return key;
}

struct RawToken {
  std::string surface;
  size_t offset;
  size_t end;
  bool word;
};

std::vector<RawToken> Tokenize(std::string_view input) {
  const std::vector<text::CodePoint> cps = text::Decode(input);
  const size_t n = cps.size();
  std::vector<RawToken> tokens;
  auto emit = [&](size_t begin, size_t end, bool word) {
    std::string surface;
    for (size_t k = begin; k < end; ++k) surface += cps[k].utf8;
    tokens.push_back({std::move(surface), begin, end, word});
  };
  size_t i = 0;
  while (i < n) {
    char32_t c = cps[i].value;
    if (text::IsSpace(c)) {
      ++i;
      continue;
    }
    if (!text::IsWordChar(c)) {
      emit(i, i + 1, false);
      ++i;
      continue;
    }
    size_t start = i;
    size_t j = i;
    for (;;) {
      while (j < n && text::IsWordChar(cps[j].value)) ++j;
      bool joiner_follows = j + 1 < n && text::IsWordChar(cps[j + 1].value);
      if (j < n && joiner_follows && text::IsHyphen(cps[j].value)) {
        ++j;
        continue;
      }
      if (j < n && joiner_follows && text::IsApostrophe(cps[j].value)) {
        // Elision: "l'arrêt" -> "l'" + "arrêt".
        emit(start, j + 1, true);
        start = ++j;
        continue;
      }
      break;
    }
    emit(start, j, true);
    i = j;
  }
  return tokens;
}

std::string DefaultLemma(std::string_view surface) {
  std::string lemma = text::Lower(text::Nfc(surface));
  auto cps = text::Decode(lemma);
  if (!cps.empty() && text::IsApostrophe(cps.back().value)) {
    lemma.resize(lemma.size() - cps.back().utf8.size());
  }
  return lemma;
}

bool EndsWithApostrophe(std::string_view surface) {
  auto cps = text::Decode(surface);
  return !cps.empty() && text::IsApostrophe(cps.back().value);
}

}  // namespace

std::string_view PosName(Pos pos) {
  switch (pos) {
    case Pos::kNoun: return "NOUN";
    case Pos::kAdj: return "ADJ";
    case Pos::kPrep: return "PREP";
    case Pos::kDet: return "DET";
    case Pos::kVerb: return "VERB";
    case Pos::kOther: return "OTHER";
  }
  return "OTHER";
}

std::optional<Pos> ParsePos(std::string_view name) {
  std::string upper;
  for (char c : name) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (upper == "NOUN" || upper == "N") return Pos::kNoun;
  if (upper == "ADJ" || upper == "A") return Pos::kAdj;
  if (upper == "PREP" || upper == "P") return Pos::kPrep;
  if (upper == "DET" || upper == "D") return Pos::kDet;
  if (upper == "VERB" || upper == "V") return Pos::kVerb;
  if (upper == "OTHER") return Pos::kOther;
  return std::nullopt;
}

Corpus LoadCorpus(const std::filesystem::path &directory) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(directory, ec)) {
    throw Error(ErrorCode::kNoCorpus,
                "not a directory: " + directory.string());
  }
  std::vector<fs::path> files;
  for (const auto &entry : fs::directory_iterator(directory)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  Corpus corpus;
  for (const fs::path &file : files) {
    std::string content = ReadFile(file);
    if (!text::IsValidUtf8(content)) {
      throw Error(ErrorCode::kEncoding,
                  "file is not valid UTF-8: " + file.filename().string());
    }
    if (content.rfind("\xEF\xBB\xBF", 0) == 0) content.erase(0, 3);
    if (text::Trim(content).empty()) continue;
    corpus.push_back({file.stem().string(), std::move(content)});
  }
  if (corpus.empty()) {
    throw Error(ErrorCode::kNoCorpus,
                "no non-empty *.txt document in " + directory.string());
  }
  return corpus;
}

void Lexicon::Add(LexiconEntry entry) {
  std::string key = LexiconKey(entry.surface);
  size_t words = text::SplitWhitespace(key).size();
  max_words_ = std::max(max_words_, words);
  entries_[key] = std::move(entry);
}

const LexiconEntry *Lexicon::Find(std::string_view surface) const {
  auto it = entries_.find(LexiconKey(surface));
  return it == entries_.end() ? nullptr : &it->second;
}

Lexicon Lexicon::FromTsv(std::string_view content) {
  Lexicon lexicon;
  std::istringstream in{std::string(content)};
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed = text::Trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    std::vector<std::string> columns;
    std::stringstream row(line);
    std::string column;
    while (std::getline(row, column, '\t')) columns.push_back(text::Trim(column));
    if (columns.size() != 3 || columns[0].empty()) {
      throw Error(ErrorCode::kSyntax, "lexicon line " +
                                          std::to_string(line_number) +
                                          ": expected surface<TAB>lemma<TAB>pos");
    }
    std::optional<Pos> pos = ParsePos(columns[2]);
    if (!pos) {
      throw Error(ErrorCode::kSyntax, "lexicon line " +
                                          std::to_string(line_number) +
                                          ": unknown POS '" + columns[2] + "'");
    }
    std::string lemma = columns[1].empty() ? DefaultLemma(columns[0])
                                           : text::Nfc(columns[1]);
    lexicon.Add({columns[0], lemma, *pos});
  }
  return lexicon;
}

Lexicon Lexicon::Load(const std::filesystem::path &path) {
  return FromTsv(ReadFile(path));
}

std::vector<AnnotatedToken> Annotate(const Document &document,
                                     const Lexicon &lexicon) {
  std::vector<RawToken> raw = Tokenize(document.text);
  std::vector<AnnotatedToken> tokens;
  tokens.reserve(raw.size());
  size_t i = 0;
  while (i < raw.size()) {
    size_t span = 1;
    const LexiconEntry *entry = nullptr;
    std::string surface = raw[i].surface;
    for (size_t k = std::min(lexicon.max_words(), raw.size() - i); k >= 2; --k) {
      bool all_words = true;
      std::vector<std::string> parts;
      for (size_t m = i; m < i + k; ++m) {
        all_words = all_words && raw[m].word;
        parts.push_back(raw[m].surface);
      }
      if (!all_words) continue;
      std::string joined = text::Join(parts, " ");
      if (const LexiconEntry *found = lexicon.Find(joined)) {
        entry = found;
        span = k;
        surface = std::move(joined);
        break;
      }
    }
    if (entry == nullptr && raw[i].word) {
      entry = lexicon.Find(surface);
      if (entry == nullptr && EndsWithApostrophe(surface)) {
        entry = lexicon.Find(DefaultLemma(surface));
      }
    }

    AnnotatedToken token;
    token.doc_id = document.id;
    token.offset = raw[i].offset;
    token.end = raw[i + span - 1].end;
    if (entry != nullptr) {
      token.lemma = entry->lemma;
      token.pos = entry->pos;
    } else {
      token.lemma = raw[i].word ? DefaultLemma(surface) : surface;
      token.pos = Pos::kOther;
    }
    token.surface = std::move(surface);
    tokens.push_back(std::move(token));
    i += span;
  }
  return tokens;
}

void ValidatePattern(const PatternDef &pattern) {
  if (pattern.sequence.empty()) {
    throw Error(ErrorCode::kBadPattern,
                "pattern '" + pattern.id + "' has an empty sequence");
  }
  if (std::find(pattern.sequence.begin(), pattern.sequence.end(),
                Pos::kNoun) == pattern.sequence.end()) {
    throw Error(ErrorCode::kBadPattern,
                "pattern '" + pattern.id + "' contains no NOUN");
  }
}

std::vector<PatternDef> ParsePatterns(std::string_view content) {
  std::vector<PatternDef> patterns;
  std::istringstream in{std::string(content)};
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string trimmed = text::Trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    size_t colon = trimmed.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorCode::kSyntax, "patterns line " +
                                          std::to_string(line_number) +
                                          ": expected 'id: POS ...'");
    }
    PatternDef pattern;
    pattern.id = text::Trim(trimmed.substr(0, colon));
    for (const std::string &word :
         text::SplitWhitespace(trimmed.substr(colon + 1))) {
      if (word == "head=first") {
        pattern.head = HeadPosition::kFirstNoun;
      } else if (word == "head=last") {
        pattern.head = HeadPosition::kLastNoun;
      } else if (std::optional<Pos> pos = ParsePos(word)) {
        pattern.sequence.push_back(*pos);
      } else {
        throw Error(ErrorCode::kBadPattern, "patterns line " +
                                                std::to_string(line_number) +
                                                ": unknown token '" + word + "'");
      }
    }
    if (pattern.id.empty()) {
      throw Error(ErrorCode::kSyntax, "patterns line " +
                                          std::to_string(line_number) +
                                          ": missing pattern id");
    }
    ValidatePattern(pattern);
    patterns.push_back(std::move(pattern));
  }
  return patterns;
}

std::vector<PatternDef> LoadPatterns(const std::filesystem::path &path) {
  return ParsePatterns(ReadFile(path));
}

PatternDef BareNounPattern() {
  return {"N", {Pos::kNoun}, HeadPosition::kFirstNoun};
}

std::string TermCandidate::Label() const { return text::Join(lemmas, " "); }

std::vector<TermCandidate> ExtractCandidates(
    std::span<const AnnotatedToken> tokens,
    std::span<const PatternDef> patterns) {
  std::vector<PatternDef> active(patterns.begin(), patterns.end());
  for (const PatternDef &p : active) ValidatePattern(p);
  bool has_bare_noun = std::any_of(active.begin(), active.end(), [](const PatternDef &p) {
    return p.sequence == std::vector<Pos>{Pos::kNoun};
  });
  if (!has_bare_noun) active.push_back(BareNounPattern());

  std::map<std::vector<std::string>, TermCandidate> merged;
  size_t doc_begin = 0;
  while (doc_begin < tokens.size()) {
    size_t doc_end = doc_begin;
    while (doc_end < tokens.size() &&
           tokens[doc_end].doc_id == tokens[doc_begin].doc_id) {
      ++doc_end;
    }
    size_t i = doc_begin;
    while (i < doc_end) {
      const PatternDef *best = nullptr;
      for (const PatternDef &p : active) {
        size_t len = p.sequence.size();
        if (i + len > doc_end) continue;
        if (best != nullptr && len <= best->sequence.size()) continue;
        bool match = true;
        for (size_t k = 0; k < len && match; ++k) {
          match = tokens[i + k].pos == p.sequence[k];
        }
        if (match) best = &p;
      }
      if (best == nullptr) {
        ++i;
        continue;
      }
      const size_t len = best->sequence.size();
      std::vector<std::string> lemmas;
      for (size_t k = 0; k < len; ++k) lemmas.push_back(tokens[i + k].lemma);
      size_t head = 0;
      for (size_t k = 0; k < len; ++k) {
        if (best->sequence[k] != Pos::kNoun) continue;
        head = k;
        if (best->head == HeadPosition::kFirstNoun) break;
      }
      TermCandidate &candidate = merged[lemmas];
      if (candidate.frequency == 0) {
        candidate.lemmas = lemmas;
        candidate.pattern_id = best->id;
        candidate.head_lemma = tokens[i + head].lemma;
      }
      ++candidate.frequency;
      candidate.occurrences.push_back(
          {tokens[i].doc_id, tokens[i].offset, tokens[i + len - 1].end});
      i += len;
    }
    doc_begin = doc_end;
  }

  std::vector<TermCandidate> out;
  out.reserve(merged.size());
  for (auto &[key, candidate] : merged) {
    std::sort(candidate.occurrences.begin(), candidate.occurrences.end());
    out.push_back(std::move(candidate));
  }
  return out;
}

std::vector<TermCandidate> ExtractFromCorpus(const Corpus &corpus,
                                             const Lexicon &lexicon,
                                             std::span<const PatternDef> patterns) {
  std::vector<AnnotatedToken> all;
  for (const Document &doc : corpus) {
    std::vector<AnnotatedToken> tokens = Annotate(doc, lexicon);
    all.insert(all.end(), std::make_move_iterator(tokens.begin()),
               std::make_move_iterator(tokens.end()));
  }
  return ExtractCandidates(all, patterns);
}

}  // namespace ontoterm
