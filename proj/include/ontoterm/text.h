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

// Small UTF-8 helpers on top of ICU. Everything takes and returns UTF-8.

#ifndef ONTOTERM_TEXT_H_
#define ONTOTERM_TEXT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ontoterm::text {

bool IsValidUtf8(std::string_view s);

std::string Nfc(std::string_view s);
std::string Lower(std::string_view s);

// Removes combining marks after canonical decomposition ("à" -> "a").
std::string StripAccents(std::string_view s);

// Transliterates to ASCII ("Ωœ" -> "Ooe"); characters with no ASCII
// rendering are dropped.
std::string ToAscii(std::string_view s);

// Uppercases the first code point only.
std::string Capitalize(std::string_view s);

// NFC, lowercase, runs of whitespace collapsed to one space, trimmed.
std::string NormalizeKey(std::string_view s);

std::string Trim(std::string_view s);

std::vector<std::string> SplitWhitespace(std::string_view s);

std::string Join(const std::vector<std::string> &parts, std::string_view sep);

// Splits a line into whitespace-separated words; a double-quoted run is one
// word with the quotes removed. Returns nullopt on an unterminated quote.
std::optional<std::vector<std::string>> SplitArgs(std::string_view line);

// One decoded code point and its UTF-8 bytes.
struct CodePoint {
  char32_t value;
  std::string utf8;
};

// Decodes a valid UTF-8 string into code points.
std::vector<CodePoint> Decode(std::string_view s);

bool IsAlnum(char32_t c);
// Letters, digits and combining marks.
bool IsWordChar(char32_t c);
bool IsSpace(char32_t c);
bool IsApostrophe(char32_t c);
bool IsHyphen(char32_t c);

}  // namespace ontoterm::text

#endif  // ONTOTERM_TEXT_H_
