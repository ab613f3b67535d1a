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

#include "ontoterm/okmodel.h"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <set>
#include <sstream>

#include "ontoterm/text.h"

namespace ontoterm {

// Write access to OkOntology for the parser and DefineConcept.
class OkBuilder {
 public:
  static void SetName(OkOntology &o, std::string name) { o.name_ = std::move(name); }
  static void AddAxis(OkOntology &o, Axis axis) { o.axes_.push_back(std::move(axis)); }
  static void AddConcept(OkOntology &o, OkConcept c) {
    o.concept_index_[c.name] = o.concepts_.size();
    o.concepts_.push_back(std::move(c));
  }
  static OkConcept &MutableConcept(OkOntology &o, const std::string &name) {
    return o.concepts_[o.concept_index_.at(name)];
  }
  static void AddClass(OkOntology &o, ClassDef c) { o.class_defs_.push_back(std::move(c)); }
  static void AddSet(OkOntology &o, SetDef s) { o.set_defs_.push_back(std::move(s)); }
  static void AddDenotation(OkOntology &o, Denotation d) {
    std::string key = text::NormalizeKey(d.term);
    o.denotation_.emplace(std::move(key), std::move(d));
  }
};

std::string_view CompareOpSymbol(CompareOp op) {
  switch (op) {
    case CompareOp::kEq: return "=";
    case CompareOp::kNe: return "!=";
    case CompareOp::kLt: return "<";
    case CompareOp::kLe: return "<=";
    case CompareOp::kGt: return ">";
    case CompareOp::kGe: return ">=";
  }
  return "=";
}

const OkConcept *OkOntology::FindConcept(std::string_view name) const {
  auto it = concept_index_.find(std::string(name));
  return it == concept_index_.end() ? nullptr : &concepts_[it->second];
}

const Axis *OkOntology::FindAxis(std::string_view name) const {
  for (const Axis &axis : axes_) {
    if (axis.name == name) return &axis;
  }
  return nullptr;
}

const Denotation *OkOntology::FindDenotation(std::string_view term) const {
  auto it = denotation_.find(text::NormalizeKey(term));
  return it == denotation_.end() ? nullptr : &it->second;
}

const OkConcept &OkOntology::GetConcept(std::string_view name) const {
  const OkConcept *c = FindConcept(name);
  if (c == nullptr) {
    throw Error(ErrorCode::kUnknownConcept, "no concept <" + std::string(name) + ">");
  }
  return *c;
}

const OkConcept *OkOntology::Root() const {
  const OkConcept *root = nullptr;
  for (const OkConcept &c : concepts_) {
    if (!c.is_root()) continue;
    if (root != nullptr) return nullptr;
    root = &c;
  }
  return root;
}

std::vector<std::string> OkOntology::Children(std::string_view name) const {
  std::vector<std::string> out;
  for (const OkConcept &c : concepts_) {
    if (c.genus && *c.genus == name) out.push_back(c.name);
  }
  return out;
}

std::vector<std::string> OkOntology::GenusChain(std::string_view name) const {
  std::vector<std::string> chain;
  std::set<std::string> seen{std::string(name)};
  const OkConcept *c = FindConcept(name);
  while (c != nullptr && c->genus) {
    if (!seen.insert(*c->genus).second) break;
    chain.push_back(*c->genus);
    c = FindConcept(*c->genus);
  }
  return chain;
}

std::vector<Differentia> OkOntology::DifferentiaPath(std::string_view name) const {
  std::vector<std::string> path = GenusChain(name);
  std::reverse(path.begin(), path.end());
  path.emplace_back(name);
  std::vector<Differentia> out;
  for (const std::string &n : path) {
    const OkConcept *c = FindConcept(n);
    if (c != nullptr && c->differentia) out.push_back(*c->differentia);
  }
  return out;
}

std::vector<AttributeDef> OkOntology::VisibleAttributes(std::string_view name) const {
  std::vector<std::string> path = GenusChain(name);
  std::reverse(path.begin(), path.end());
  path.emplace_back(name);
  std::vector<AttributeDef> out;
  for (const std::string &n : path) {
    if (const OkConcept *c = FindConcept(n)) {
      out.insert(out.end(), c->attributes.begin(), c->attributes.end());
    }
  }
  return out;
}

std::vector<std::string> OkOntology::PreOrder() const {
  std::vector<std::string> out;
  std::set<std::string> seen;
  auto visit = [&](auto &&self, const std::string &name) -> void {
    if (!seen.insert(name).second) return;
    out.push_back(name);
    for (const std::string &child : Children(name)) self(self, child);
  };
  for (const OkConcept &c : concepts_) {
    if (c.is_root()) visit(visit, c.name);
  }
  for (const OkConcept &c : concepts_) {
    if (!seen.contains(c.name)) visit(visit, c.name);
  }
  return out;
}

// --- DSL ------------------------------------------------------------------

namespace {

enum class TokKind { kWord, kQuoted, kAngle, kPunct, kOp };

struct Tok {
  TokKind kind;
  std::string text;
};

struct ParseFailure {
  ErrorCode code;
  std::string message;
};

std::vector<Tok> LexLine(std::string_view line) {
  std::vector<Tok> toks;
  const std::vector<text::CodePoint> cps = text::Decode(line);
  auto is_break = [](char32_t c) {
    return text::IsSpace(c) || c == U',' || c == U'(' || c == U')' ||
           c == U'=' || c == U'"' || c == U'<' || c == U'>' || c == U'!' ||
           c == U'≠' || c == U'≤' || c == U'≥';
  };
  auto slice = [&](size_t a, size_t b) {
    std::string s;
    for (size_t k = a; k < b; ++k) s += cps[k].utf8;
    return s;
  };
  size_t i = 0;
  const size_t n = cps.size();
  while (i < n) {
    char32_t c = cps[i].value;
    if (text::IsSpace(c)) {
      ++i;
    } else if (c == U'#') {
      break;
    } else if (c == U'"') {
      size_t j = i + 1;
      while (j < n && cps[j].value != U'"') ++j;
      if (j >= n) throw ParseFailure{ErrorCode::kSyntax, "unterminated string"};
      toks.push_back({TokKind::kQuoted, slice(i + 1, j)});
      i = j + 1;
    } else if (c == U'<' && i + 1 < n && cps[i + 1].value != U'=' &&
               !text::IsSpace(cps[i + 1].value)) {
      size_t j = i + 1;
      while (j < n && cps[j].value != U'>') ++j;
      if (j >= n) {
        toks.push_back({TokKind::kOp, "<"});
        ++i;
        continue;
      }
      toks.push_back({TokKind::kAngle, text::Trim(slice(i + 1, j))});
      i = j + 1;
    } else if (c == U'<' || c == U'>' || c == U'!') {
      if (i + 1 < n && cps[i + 1].value == U'=') {
        toks.push_back({TokKind::kOp, slice(i, i + 2)});
        i += 2;
      } else if (c == U'!') {
        throw ParseFailure{ErrorCode::kSyntax, "stray '!'"};
      } else {
        toks.push_back({TokKind::kOp, slice(i, i + 1)});
        ++i;
      }
    } else if (c == U'≠' || c == U'≤' || c == U'≥') {
      toks.push_back({TokKind::kOp, slice(i, i + 1)});
      ++i;
    } else if (c == U',' || c == U'(' || c == U')' || c == U'=') {
      toks.push_back({TokKind::kPunct, slice(i, i + 1)});
      ++i;
    } else {
      size_t j = i;
      while (j < n && !is_break(cps[j].value)) ++j;
      toks.push_back({TokKind::kWord, slice(i, j)});
      i = j;
    }
  }
  return toks;
}

class LineCursor {
 public:
  explicit LineCursor(std::vector<Tok> toks) : toks_(std::move(toks)) {}

  bool AtEnd() const { return pos_ >= toks_.size(); }
  const Tok *Peek() const { return AtEnd() ? nullptr : &toks_[pos_]; }

  bool TryKeyword(std::string_view word) {
    if (!AtEnd() && toks_[pos_].kind == TokKind::kWord && toks_[pos_].text == word) {
      ++pos_;
      return true;
    }
    return false;
  }
  void Keyword(std::string_view word) {
    if (!TryKeyword(word)) Fail("expected '" + std::string(word) + "'");
  }
  bool TryPunct(std::string_view p) {
    if (!AtEnd() && toks_[pos_].kind == TokKind::kPunct && toks_[pos_].text == p) {
      ++pos_;
      return true;
    }
    return false;
  }
  void Punct(std::string_view p) {
    if (!TryPunct(p)) Fail("expected '" + std::string(p) + "'");
  }
  // Bare word, "quoted" or <angle> name.
  std::string Name(std::string_view what) {
    if (AtEnd()) Fail("expected " + std::string(what));
    const Tok &t = toks_[pos_];
    if (t.kind != TokKind::kWord && t.kind != TokKind::kQuoted &&
        t.kind != TokKind::kAngle) {
      Fail("expected " + std::string(what));
    }
    ++pos_;
    if (t.text.empty()) Fail("empty " + std::string(what));
    return text::Nfc(t.text);
  }
  std::string Word(std::string_view what) {
    if (AtEnd() || toks_[pos_].kind != TokKind::kWord) Fail("expected " + std::string(what));
    return text::Nfc(toks_[pos_++].text);
  }
  CompareOp Op() {
    if (AtEnd()) Fail("expected comparison operator");
    const Tok &t = toks_[pos_];
    std::string_view s = t.text;
    CompareOp op;
    if (s == "=") op = CompareOp::kEq;
    else if (s == "!=" || s == "≠") op = CompareOp::kNe;
    else if (s == "<") op = CompareOp::kLt;
    else if (s == "<=" || s == "≤") op = CompareOp::kLe;
    else if (s == ">") op = CompareOp::kGt;
    else if (s == ">=" || s == "≥") op = CompareOp::kGe;
    else Fail("expected comparison operator");
    if (t.kind != TokKind::kOp && t.kind != TokKind::kPunct) Fail("expected comparison operator");
    ++pos_;
    return op;
  }
  Value Literal() {
    if (AtEnd()) Fail("expected literal");
    const Tok &t = toks_[pos_++];
    if (t.kind == TokKind::kQuoted) return text::Nfc(t.text);
    if (t.kind != TokKind::kWord) Fail("expected literal");
    double number = 0;
    const char *begin = t.text.data();
    const char *end = begin + t.text.size();
    auto [ptr, ec] = std::from_chars(begin, end, number);
    if (ec == std::errc() && ptr == end) return number;
    return text::Nfc(t.text);
  }
  void End() {
    if (!AtEnd()) Fail("unexpected '" + toks_[pos_].text + "'");
  }
  [[noreturn]] static void Fail(std::string message) {
    throw ParseFailure{ErrorCode::kSyntax, std::move(message)};
  }

 private:
  std::vector<Tok> toks_;
  size_t pos_ = 0;
};

std::vector<Comparison> ParsePredicate(LineCursor &cur) {
  std::vector<Comparison> out;
  do {
    Comparison cmp;
    cmp.attribute = cur.Word("attribute name");
    cmp.op = cur.Op();
    cmp.literal = cur.Literal();
    out.push_back(std::move(cmp));
  } while (cur.TryKeyword("and"));
  cur.End();
  return out;
}

// Raw concept line, resolved after every line is read.
struct ConceptDecl {
  int line;
  std::string name;
  std::optional<std::string> genus;
  std::optional<Differentia> differentia;
};

struct AttributeDecl {
  int line;
  std::string concept_name;
  AttributeDef def;
};

struct ClassDecl {
  int line;
  ClassDef def;
};

}  // namespace

DslError::DslError(std::vector<DslDiagnostic> diagnostics)
    : Error(diagnostics.empty() ? ErrorCode::kSyntax : diagnostics.front().code,
            [&] {
              std::string msg;
              for (const DslDiagnostic &d : diagnostics) {
                if (!msg.empty()) msg += "; ";
                msg += "line " + std::to_string(d.line) + ": " +
                       std::string(ErrorCodeName(d.code)) + " " + d.message;
              }
              return msg;
            }()),
      diagnostics_(std::move(diagnostics)) {}

OkOntology ParseDsl(std::string_view source) {
  std::vector<DslDiagnostic> diagnostics;
  OkOntology ontology;
  std::vector<ConceptDecl> concept_decls;
  std::vector<AttributeDecl> attribute_decls;
  std::vector<ClassDecl> class_decls;
  std::set<std::string> axis_names;
  std::set<std::string> predicate_names;

  std::istringstream in{std::string(source)};
  std::string raw;
  int line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    try {
      if (!text::IsValidUtf8(raw)) LineCursor::Fail("invalid UTF-8");
      std::vector<Tok> toks = LexLine(raw);
      if (toks.empty()) continue;
      LineCursor cur(std::move(toks));
      if (cur.TryKeyword("ontology")) {
        OkBuilder::SetName(ontology, cur.Name("ontology name"));
        cur.End();
      } else if (cur.TryKeyword("axis")) {
        Axis axis;
        axis.name = cur.Word("axis name");
        cur.Keyword("values");
        do {
          axis.values.push_back(cur.Name("axis value"));
        } while (cur.TryPunct(","));
        cur.End();
        if (axis.values.size() < 2) LineCursor::Fail("axis needs at least two values");
        std::set<std::string> distinct(axis.values.begin(), axis.values.end());
        if (distinct.size() != axis.values.size()) {
          throw ParseFailure{ErrorCode::kDupName,
                             "repeated value on axis " + axis.name};
        }
        if (!axis_names.insert(axis.name).second) {
          throw ParseFailure{ErrorCode::kDupName, "axis " + axis.name};
        }
        OkBuilder::AddAxis(ontology, std::move(axis));
      } else if (cur.TryKeyword("compound")) {
        throw ParseFailure{ErrorCode::kUnsupported,
                           "compound concepts are not supported"};
      } else if (cur.TryKeyword("concept")) {
        if (cur.TryKeyword("compound") || cur.TryKeyword("composé")) {
          throw ParseFailure{ErrorCode::kUnsupported,
                             "compound concepts are not supported"};
        }
        ConceptDecl decl{line_number, cur.Name("concept name"), {}, {}};
        if (cur.TryKeyword("compound") || cur.TryKeyword("composé")) {
          throw ParseFailure{ErrorCode::kUnsupported,
                             "compound concepts are not supported"};
        }
        if (cur.TryKeyword("root")) {
          cur.End();
        } else {
          cur.Keyword("genus");
          decl.genus = cur.Name("genus");
          if (cur.TryPunct(",") || cur.TryKeyword("genus")) {
            throw ParseFailure{ErrorCode::kMultipleGenus,
                               "<" + decl.name + "> declares several genera"};
          }
          if (cur.TryKeyword("diff")) {
            Differentia d;
            d.axis = cur.Word("axis");
            cur.Punct("=");
            d.value = cur.Name("axis value");
            decl.differentia = std::move(d);
          }
          cur.End();
        }
        concept_decls.push_back(std::move(decl));
      } else if (cur.TryKeyword("attribute")) {
        AttributeDecl decl;
        decl.line = line_number;
        decl.def.name = cur.Word("attribute name");
        cur.Keyword("on");
        decl.concept_name = cur.Name("concept");
        cur.Keyword("type");
        if (cur.TryKeyword("number")) {
          decl.def.kind = ValueKind::kNumber;
        } else if (cur.TryKeyword("string")) {
          decl.def.kind = ValueKind::kString;
        } else if (cur.TryKeyword("enum")) {
          decl.def.kind = ValueKind::kEnum;
          cur.Punct("(");
          do {
            decl.def.enum_values.push_back(cur.Name("enum value"));
          } while (cur.TryPunct(","));
          cur.Punct(")");
        } else {
          LineCursor::Fail("expected number, string or enum(...)");
        }
        cur.End();
        attribute_decls.push_back(std::move(decl));
      } else if (cur.TryKeyword("class")) {
        ClassDecl decl;
        decl.line = line_number;
        decl.def.name = cur.Name("class name");
        cur.Keyword("over");
        decl.def.base_concept = cur.Name("concept");
        cur.Keyword("where");
        decl.def.predicate = ParsePredicate(cur);
        if (!predicate_names.insert(decl.def.name).second) {
          throw ParseFailure{ErrorCode::kDupName, "class or set " + decl.def.name};
        }
        class_decls.push_back(std::move(decl));
      } else if (cur.TryKeyword("set")) {
        SetDef def;
        def.name = cur.Name("set name");
        cur.Keyword("where");
        def.predicate = ParsePredicate(cur);
        if (!predicate_names.insert(def.name).second) {
          throw ParseFailure{ErrorCode::kDupName, "class or set " + def.name};
        }
        OkBuilder::AddSet(ontology, std::move(def));
      } else if (cur.TryKeyword("term")) {
        const Tok *t = cur.Peek();
        if (t == nullptr || t->kind != TokKind::kQuoted) {
          LineCursor::Fail("expected quoted term");
        }
        std::string term = cur.Name("term");
        cur.Keyword("denotes");
        std::string target = cur.Name("concept");
        cur.End();
        if (ontology.FindDenotation(term) != nullptr) {
          throw ParseFailure{ErrorCode::kDupName, "term \"" + term + "\""};
        }
        OkBuilder::AddDenotation(ontology, {term, target});
      } else {
        LineCursor::Fail("unknown statement '" + cur.Peek()->text + "'");
      }
    } catch (const ParseFailure &failure) {
      diagnostics.push_back({line_number, failure.code, failure.message});
    }
  }

  // Resolution: names may be used before they are declared.
  std::map<std::string, const ConceptDecl *> by_name;
  bool has_root = false;
  for (const ConceptDecl &decl : concept_decls) {
    auto [it, inserted] = by_name.emplace(decl.name, &decl);
    if (!inserted) {
      bool other_genus = it->second->genus != decl.genus;
      diagnostics.push_back(
          {decl.line, other_genus ? ErrorCode::kMultipleGenus : ErrorCode::kDupName,
           "<" + decl.name + "> already declared on line " +
               std::to_string(it->second->line)});
      continue;
    }
    has_root = has_root || !decl.genus;
  }
  for (const ConceptDecl &decl : concept_decls) {
    if (by_name.at(decl.name) != &decl) continue;
    if (decl.genus && !by_name.contains(*decl.genus)) {
      diagnostics.push_back({decl.line, ErrorCode::kUnknownGenus,
                             "<" + *decl.genus + "> is not declared"});
      continue;
    }
    if (decl.differentia) {
      const Axis *axis = ontology.FindAxis(decl.differentia->axis);
      if (axis == nullptr) {
        diagnostics.push_back({decl.line, ErrorCode::kUnknownAxis,
                               "axis " + decl.differentia->axis});
        continue;
      }
      if (std::find(axis->values.begin(), axis->values.end(),
                    decl.differentia->value) == axis->values.end()) {
        diagnostics.push_back({decl.line, ErrorCode::kBadValue,
                               decl.differentia->value + " is not a value of axis " +
                                   axis->name});
        continue;
      }
    }
    OkBuilder::AddConcept(ontology, {decl.name, decl.genus, decl.differentia, {}});
  }
  for (AttributeDecl &decl : attribute_decls) {
    if (ontology.FindConcept(decl.concept_name) == nullptr) {
      diagnostics.push_back({decl.line, ErrorCode::kUnknownConcept,
                             "<" + decl.concept_name + "> is not declared"});
      continue;
    }
    OkConcept &c = OkBuilder::MutableConcept(ontology, decl.concept_name);
    bool duplicate = std::any_of(c.attributes.begin(), c.attributes.end(),
                                 [&](const AttributeDef &a) { return a.name == decl.def.name; });
    if (duplicate) {
      diagnostics.push_back({decl.line, ErrorCode::kDupName,
                             "attribute " + decl.def.name + " on <" + c.name + ">"});
      continue;
    }
    c.attributes.push_back(std::move(decl.def));
  }
  for (ClassDecl &decl : class_decls) {
    if (ontology.FindConcept(decl.def.base_concept) == nullptr) {
      diagnostics.push_back({decl.line, ErrorCode::kUnknownConcept,
                             "<" + decl.def.base_concept + "> is not declared"});
      continue;
    }
    OkBuilder::AddClass(ontology, std::move(decl.def));
  }
  if (!has_root) {
    diagnostics.push_back({std::max(line_number, 1), ErrorCode::kSyntax,
                           "no root concept"});
  }
  if (!diagnostics.empty()) {
    std::stable_sort(diagnostics.begin(), diagnostics.end(),
                     [](const DslDiagnostic &a, const DslDiagnostic &b) {
                       return a.line < b.line;
                     });
    throw DslError(std::move(diagnostics));
  }
  return ontology;
}

namespace {

std::string FormatLiteral(const Value &v) {
  if (const double *d = std::get_if<double>(&v)) {
    std::ostringstream out;
    out << std::setprecision(17) << *d;
    return out.str();
  }
  return "\"" + std::get<std::string>(v) + "\"";
}

std::string FormatPredicate(const std::vector<Comparison> &predicate) {
  std::string out;
  for (size_t i = 0; i < predicate.size(); ++i) {
    if (i > 0) out += " and ";
    out += predicate[i].attribute + " " +
           std::string(CompareOpSymbol(predicate[i].op)) + " " +
           FormatLiteral(predicate[i].literal);
  }
  return out;
}

}  // namespace

std::string ToDsl(const OkOntology &o) {
  std::ostringstream out;
  if (!o.name().empty()) out << "ontology \"" << o.name() << "\"\n";
  for (const Axis &axis : o.axes()) {
    out << "axis " << axis.name << " values ";
    for (size_t i = 0; i < axis.values.size(); ++i) {
      out << (i ? ", " : "") << "<" << axis.values[i] << ">";
    }
    out << "\n";
  }
  for (const OkConcept &c : o.concepts()) {
    out << "concept <" << c.name << ">";
    if (!c.genus) {
      out << " root\n";
      continue;
    }
    out << " genus <" << *c.genus << ">";
    if (c.differentia) {
      out << " diff " << c.differentia->axis << "=<" << c.differentia->value << ">";
    }
    out << "\n";
  }
  for (const OkConcept &c : o.concepts()) {
    for (const AttributeDef &a : c.attributes) {
      out << "attribute " << a.name << " on <" << c.name << "> type ";
      switch (a.kind) {
        case ValueKind::kNumber: out << "number"; break;
        case ValueKind::kString: out << "string"; break;
        case ValueKind::kEnum:
          out << "enum(";
          for (size_t i = 0; i < a.enum_values.size(); ++i) {
            out << (i ? ", " : "") << "<" << a.enum_values[i] << ">";
          }
          out << ")";
          break;
      }
      out << "\n";
    }
  }
  for (const ClassDef &k : o.class_defs()) {
    out << "class <" << k.name << "> over <" << k.base_concept << "> where "
        << FormatPredicate(k.predicate) << "\n";
  }
  for (const SetDef &s : o.set_defs()) {
    out << "set <" << s.name << "> where " << FormatPredicate(s.predicate) << "\n";
  }
  for (const auto &[key, d] : o.denotation()) {
    out << "term \"" << d.term << "\" denotes <" << d.concept_name << ">\n";
  }
  return out.str();
}

OkOntology DefineConcept(const OkOntology &ontology, std::string_view name,
                         std::string_view genus, const Differentia &differentia) {
  if (ontology.FindConcept(name) != nullptr) {
    throw Error(ErrorCode::kDupName, "<" + std::string(name) + "> already exists");
  }
  if (ontology.FindConcept(genus) == nullptr) {
    throw Error(ErrorCode::kUnknownGenus, "<" + std::string(genus) + "> is not declared");
  }
  const Axis *axis = ontology.FindAxis(differentia.axis);
  if (axis == nullptr) {
    throw Error(ErrorCode::kUnknownAxis, "axis " + differentia.axis);
  }
  if (std::find(axis->values.begin(), axis->values.end(), differentia.value) ==
      axis->values.end()) {
    throw Error(ErrorCode::kBadValue,
                differentia.value + " is not a value of axis " + axis->name);
  }
  OkOntology next = ontology;
  OkBuilder::AddConcept(next, {std::string(name), std::string(genus), differentia, {}});
  return next;
}

// --- Consistency ------------------------------------------------------------

std::string RuleName(Rule rule) { return "R" + std::to_string(static_cast<int>(rule)); }

namespace {

bool LiteralFits(const AttributeDef &attr, const Comparison &cmp) {
  bool ordering = cmp.op != CompareOp::kEq && cmp.op != CompareOp::kNe;
  switch (attr.kind) {
    case ValueKind::kNumber:
      return std::holds_alternative<double>(cmp.literal);
    case ValueKind::kString:
      return std::holds_alternative<std::string>(cmp.literal) && !ordering;
    case ValueKind::kEnum: {
      const std::string *s = std::get_if<std::string>(&cmp.literal);
      return s != nullptr && !ordering &&
             std::find(attr.enum_values.begin(), attr.enum_values.end(), *s) !=
                 attr.enum_values.end();
    }
  }
  return false;
}

}  // namespace

std::vector<Violation> CheckConsistency(const OkOntology &o) {
  std::vector<Violation> out;
  auto report = [&](Rule rule, std::string message, std::vector<std::string> subjects) {
    out.push_back({rule, std::move(message), std::move(subjects)});
  };

  // R1
  std::vector<std::string> roots;
  for (const OkConcept &c : o.concepts()) {
    if (c.is_root()) roots.push_back(c.name);
  }
  if (roots.size() != 1) {
    report(Rule::kTreeShape,
           "expected exactly one root, found " + std::to_string(roots.size()), roots);
  }
  std::set<std::set<std::string>> cycles;
  for (const OkConcept &c : o.concepts()) {
    std::vector<std::string> path{c.name};
    const OkConcept *cur = &c;
    while (cur != nullptr && cur->genus) {
      auto hit = std::find(path.begin(), path.end(), *cur->genus);
      if (hit != path.end()) {
        std::set<std::string> members(hit, path.end());
        if (cycles.insert(members).second) {
          report(Rule::kTreeShape, "genus cycle",
                 std::vector<std::string>(members.begin(), members.end()));
        }
        break;
      }
      path.push_back(*cur->genus);
      cur = o.FindConcept(*cur->genus);
    }
  }

  // R2
  for (const OkConcept &c : o.concepts()) {
    if (!c.is_root() && !c.differentia) {
      report(Rule::kSingleDifferentia, "<" + c.name + "> has no differentia", {c.name});
    }
  }

  // R3
  std::map<std::pair<std::string, std::string>,
           std::map<std::string, std::vector<std::string>>> groups;
  for (const OkConcept &c : o.concepts()) {
    if (c.genus && c.differentia) {
      groups[{*c.genus, c.differentia->axis}][c.differentia->value].push_back(c.name);
    }
  }
  for (const auto &[key, by_value] : groups) {
    for (const auto &[value, names] : by_value) {
      if (names.size() < 2) continue;
      report(Rule::kSiblingDistinct,
             "children of <" + key.first + "> share " + key.second + "=" + value,
             names);
    }
  }

  // R4
  for (const OkConcept &c : o.concepts()) {
    if (!c.differentia) continue;
    for (const std::string &ancestor : o.GenusChain(c.name)) {
      const OkConcept *a = o.FindConcept(ancestor);
      if (a != nullptr && a->differentia && a->differentia->axis == c.differentia->axis) {
        report(Rule::kAxisOncePerPath,
               "axis " + c.differentia->axis + " used by <" + c.name +
                   "> and its ancestor <" + ancestor + ">",
               {c.name, ancestor});
        break;
      }
    }
  }

  // R5
  for (const OkConcept &c : o.concepts()) {
    std::set<std::string> own;
    for (const AttributeDef &attr : c.attributes) {
      if (!own.insert(attr.name).second) {
        report(Rule::kNoShadowing, "attribute " + attr.name + " declared twice on <" +
                                       c.name + ">", {c.name});
      }
    }
    for (const std::string &ancestor : o.GenusChain(c.name)) {
      const OkConcept *a = o.FindConcept(ancestor);
      if (a == nullptr) continue;
      for (const AttributeDef &attr : a->attributes) {
        if (own.contains(attr.name)) {
          report(Rule::kNoShadowing,
                 "attribute " + attr.name + " on <" + c.name +
                     "> shadows the one on <" + ancestor + ">",
                 {c.name, ancestor});
        }
      }
    }
  }

  // R6
  std::map<std::string, std::vector<AttributeDef>> declared_anywhere;
  for (const OkConcept &c : o.concepts()) {
    for (const AttributeDef &a : c.attributes) declared_anywhere[a.name].push_back(a);
  }
  for (const ClassDef &k : o.class_defs()) {
    if (o.FindConcept(k.base_concept) == nullptr) {
      report(Rule::kVisibleClassAttrs,
             "class " + k.name + " is over unknown <" + k.base_concept + ">", {k.name});
      continue;
    }
    std::vector<AttributeDef> visible = o.VisibleAttributes(k.base_concept);
    for (const Comparison &cmp : k.predicate) {
      auto it = std::find_if(visible.begin(), visible.end(),
                             [&](const AttributeDef &a) { return a.name == cmp.attribute; });
      if (it == visible.end()) {
        report(Rule::kVisibleClassAttrs,
               "class " + k.name + ": attribute " + cmp.attribute +
                   " is not visible at <" + k.base_concept + ">",
               {k.name, cmp.attribute});
      } else if (!LiteralFits(*it, cmp)) {
        report(Rule::kVisibleClassAttrs,
               "class " + k.name + ": comparison on " + cmp.attribute +
                   " does not fit its type",
               {k.name, cmp.attribute});
      }
    }
  }
  for (const SetDef &s : o.set_defs()) {
    if (s.predicate.empty()) {
      report(Rule::kVisibleClassAttrs, "set " + s.name + " has an empty predicate", {s.name});
    }
    for (const Comparison &cmp : s.predicate) {
      if (!declared_anywhere.contains(cmp.attribute)) {
        report(Rule::kVisibleClassAttrs,
               "set " + s.name + ": attribute " + cmp.attribute + " is never declared",
               {s.name, cmp.attribute});
      }
    }
  }

  // R7
  for (const auto &[key, d] : o.denotation()) {
    if (o.FindConcept(d.concept_name) == nullptr) {
      report(Rule::kDenotationTargets,
             "term \"" + d.term + "\" denotes unknown <" + d.concept_name + ">",
             {d.term, d.concept_name});
    }
  }
  return out;
}

// --- Queries ----------------------------------------------------------------

bool Subsumes(const OkOntology &o, std::string_view general, std::string_view specific) {
  o.GetConcept(general);
  o.GetConcept(specific);
  if (general == specific) return true;
  for (const std::string &g : o.GenusChain(specific)) {
    if (g == general) return true;
  }
  return false;
}

std::vector<std::string> Descendants(const OkOntology &o, std::string_view name) {
  o.GetConcept(name);
  std::vector<std::string> out;
  for (const OkConcept &c : o.concepts()) {
    if (Subsumes(o, name, c.name)) out.push_back(c.name);
  }
  return out;
}

Similarity ComputeSimilarity(const OkOntology &o, std::string_view first,
                             std::string_view second) {
  o.GetConcept(first);
  o.GetConcept(second);
  auto root_path = [&](std::string_view name) {
    std::vector<std::string> path = o.GenusChain(name);
    std::reverse(path.begin(), path.end());
    path.emplace_back(name);
    return path;
  };
  std::vector<std::string> a = root_path(first);
  std::vector<std::string> b = root_path(second);
  size_t common = 0;
  while (common < a.size() && common < b.size() && a[common] == b[common]) ++common;
  if (common == 0) {
    throw Error(ErrorCode::kInconsistent, "<" + std::string(first) + "> and <" +
                                              std::string(second) +
                                              "> have no common ancestor");
  }
  auto diffs = [&](const std::vector<std::string> &path, size_t from, size_t to) {
    std::vector<Differentia> out;
    for (size_t i = from; i < to; ++i) {
      const OkConcept &c = o.GetConcept(path[i]);
      if (c.differentia) out.push_back(*c.differentia);
    }
    return out;
  };
  Similarity s;
  s.lca = a[common - 1];
  s.shared = diffs(a, 0, common);
  s.distinguishing_first = diffs(a, common, a.size());
  s.distinguishing_second = diffs(b, common, b.size());
  return s;
}

namespace {

bool Holds(const Comparison &cmp, const std::map<std::string, Value> &state) {
  auto it = state.find(cmp.attribute);
  if (it == state.end()) return false;
  const Value &value = it->second;
  if (value.index() != cmp.literal.index()) return false;
  if (const double *v = std::get_if<double>(&value)) {
    double l = std::get<double>(cmp.literal);
    switch (cmp.op) {
      case CompareOp::kEq: return *v == l;
      case CompareOp::kNe: return *v != l;
      case CompareOp::kLt: return *v < l;
      case CompareOp::kLe: return *v <= l;
      case CompareOp::kGt: return *v > l;
      case CompareOp::kGe: return *v >= l;
    }
    return false;
  }
  const std::string &v = std::get<std::string>(value);
  const std::string &l = std::get<std::string>(cmp.literal);
  switch (cmp.op) {
    case CompareOp::kEq: return v == l;
    case CompareOp::kNe: return v != l;
    default: return false;
  }
}

bool HoldsAll(const std::vector<Comparison> &predicate,
              const std::map<std::string, Value> &state) {
  return std::all_of(predicate.begin(), predicate.end(),
                     [&](const Comparison &c) { return Holds(c, state); });
}

}  // namespace

Classification ClassifyObject(const OkOntology &o, const ObjectInstance &instance) {
  o.GetConcept(instance.concept_name);
  std::vector<AttributeDef> visible = o.VisibleAttributes(instance.concept_name);
  for (const auto &[name, value] : instance.state) {
    auto it = std::find_if(visible.begin(), visible.end(),
                           [&](const AttributeDef &a) { return a.name == name; });
    if (it == visible.end()) {
      throw Error(ErrorCode::kUnknownAttribute,
                  "object " + instance.id + ": attribute " + name +
                      " is not visible at <" + instance.concept_name + ">");
    }
    const std::string *s = std::get_if<std::string>(&value);
    bool ok = false;
    switch (it->kind) {
      case ValueKind::kNumber: ok = std::holds_alternative<double>(value); break;
      case ValueKind::kString: ok = s != nullptr; break;
      case ValueKind::kEnum:
        ok = s != nullptr && std::find(it->enum_values.begin(), it->enum_values.end(),
                                       *s) != it->enum_values.end();
        break;
    }
    if (!ok) {
      throw Error(ErrorCode::kType,
                  "object " + instance.id + ": bad value for attribute " + name);
    }
  }

  Classification out;
  for (const ClassDef &k : o.class_defs()) {
    if (o.FindConcept(k.base_concept) == nullptr) continue;
    if (Subsumes(o, k.base_concept, instance.concept_name) &&
        HoldsAll(k.predicate, instance.state)) {
      out.classes.push_back(k.name);
    }
  }
  for (const SetDef &s : o.set_defs()) {
    if (!s.predicate.empty() && HoldsAll(s.predicate, instance.state)) {
      out.sets.push_back(s.name);
    }
  }
  return out;
}

}  // namespace ontoterm
