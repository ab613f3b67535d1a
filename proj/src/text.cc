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

#include "ontoterm/text.h"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/translit.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <cctype>
#include <memory>
#include <stdexcept>

namespace ontoterm::text {
namespace {

const icu::Normalizer2 &NfcInstance() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2 *n = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFC unavailable");
  return *n;
}

const icu::Normalizer2 &NfdInstance() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2 *n = icu::Normalizer2::getNFDInstance(status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFD unavailable");
  return *n;
}

std::string ToUtf8(const icu::UnicodeString &u) {
  std::string out;
  u.toUTF8String(out);
  return out;
}

icu::UnicodeString FromUtf8(std::string_view s) {
  return icu::UnicodeString::fromUTF8(
      icu::StringPiece(s.data(), static_cast<int32_t>(s.size())));
}

}  // namespace

bool IsValidUtf8(std::string_view s) {
  int32_t i = 0;
  const auto n = static_cast<int32_t>(s.size());
  const auto *p = reinterpret_cast<const uint8_t *>(s.data());
  while (i < n) {
    UChar32 c;
    U8_NEXT(p, i, n, c);
    if (c < 0) return false;
  }
  return true;
}

std::string Nfc(std::string_view s) {
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString out = NfcInstance().normalize(FromUtf8(s), status);
  if (U_FAILURE(status)) return std::string(s);
  return ToUtf8(out);
}

std::string Lower(std::string_view s) {
  icu::UnicodeString u = FromUtf8(s);
  u.toLower(icu::Locale::getRoot());
  return ToUtf8(u);
}

std::string ToAscii(std::string_view s) {
  // Transliterators are not thread-safe; one per thread.
  thread_local std::unique_ptr<icu::Transliterator> to_ascii = [] {
    UErrorCode status = U_ZERO_ERROR;
    std::unique_ptr<icu::Transliterator> t(icu::Transliterator::createInstance(
        "Any-Latin; Latin-ASCII; [^\\u0000-\\u007F] Remove", UTRANS_FORWARD, status));
    if (U_FAILURE(status)) throw std::runtime_error("ICU transliterator unavailable");
    return t;
  }();
  icu::UnicodeString u = FromUtf8(s);
  to_ascii->transliterate(u);
  return ToUtf8(u);
}

std::string StripAccents(std::string_view s) {
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString decomposed = NfdInstance().normalize(FromUtf8(s), status);
  if (U_FAILURE(status)) return std::string(s);
  icu::UnicodeString kept;
  for (int32_t i = 0; i < decomposed.length();) {
    UChar32 c = decomposed.char32At(i);
    if (u_charType(c) != U_NON_SPACING_MARK) kept.append(c);
    i += U16_LENGTH(c);
  }
  return Nfc(ToUtf8(kept));
}

std::string Capitalize(std::string_view s) {
  auto cps = Decode(s);
  if (cps.empty()) return {};
  icu::UnicodeString head;
  head.append(static_cast<UChar32>(cps[0].value));
  head.toUpper(icu::Locale::getRoot());
  std::string out = ToUtf8(head);
  for (size_t i = 1; i < cps.size(); ++i) out += cps[i].utf8;
  return out;
}

std::string NormalizeKey(std::string_view s) {
  return Join(SplitWhitespace(Lower(Nfc(s))), " ");
}

std::string Trim(std::string_view s) {
  auto words = Decode(s);
  size_t begin = 0, end = words.size();
  while (begin < end && IsSpace(words[begin].value)) ++begin;
  while (end > begin && IsSpace(words[end - 1].value)) --end;
  std::string out;
  for (size_t i = begin; i < end; ++i) out += words[i].utf8;
  return out;
}

std::vector<std::string> SplitWhitespace(std::string_view s) {
  std::vector<std::string> out;
  std::string current;
  for (const CodePoint &cp : Decode(s)) {
    if (IsSpace(cp.value)) {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current += cp.utf8;
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

std::optional<std::vector<std::string>> SplitArgs(std::string_view line) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < line.size()) {
    unsigned char c = static_cast<unsigned char>(line[i]);
    if (std::isspace(c)) {
      ++i;
    } else if (c == '"') {
      size_t close = line.find('"', i + 1);
      if (close == std::string_view::npos) return std::nullopt;
      out.emplace_back(line.substr(i + 1, close - i - 1));
      i = close + 1;
    } else {
      size_t end = i;
      while (end < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[end])) &&
             line[end] != '"') {
        ++end;
      }
      out.emplace_back(line.substr(i, end - i));
      i = end;
    }
  }
  return out;
}

std::string Join(const std::vector<std::string> &parts, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<CodePoint> Decode(std::string_view s) {
  std::vector<CodePoint> out;
  out.reserve(s.size());
  int32_t i = 0;
  const auto n = static_cast<int32_t>(s.size());
  const auto *p = reinterpret_cast<const uint8_t *>(s.data());
  while (i < n) {
    int32_t start = i;
    UChar32 c;
    U8_NEXT(p, i, n, c);
    if (c < 0) c = 0xFFFD;
    out.push_back({static_cast<char32_t>(c),
                   std::string(s.substr(start, i - start))});
  }
  return out;
}

bool IsAlnum(char32_t c) { return u_isalnum(static_cast<UChar32>(c)); }

bool IsWordChar(char32_t c) {
  if (u_isalnum(static_cast<UChar32>(c))) return true;
  int8_t type = u_charType(static_cast<UChar32>(c));
  return type == U_NON_SPACING_MARK || type == U_COMBINING_SPACING_MARK;
}

bool IsSpace(char32_t c) { return u_isUWhiteSpace(static_cast<UChar32>(c)); }

bool IsApostrophe(char32_t c) {
  return c == U'\'' || c == U'’' || c == U'ʼ';
}

bool IsHyphen(char32_t c) { return c == U'-' || c == U'‐'; }

}  // namespace ontoterm::text
