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

#ifndef ONTOTERM_ERROR_H_
#define ONTOTERM_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace ontoterm {

enum class ErrorCode {
  kNoCorpus,
  kEncoding,
  kBadPattern,
  kUnknownTerm,
  kUnknownRef,
  kCycle,
  kUnknownConcept,
  kSyntax,
  kDupName,
  kUnknownGenus,
  kUnknownAxis,
  kBadValue,
  kMultipleGenus,
  kUnsupported,
  kType,
  kUnknownAttribute,
  kUnresolvable,
  kInconsistent,
  kConfig,
  kIo,
};

// Stable wire name of an error code, e.g. "E_NO_CORPUS".
std::string_view ErrorCodeName(ErrorCode code);

// All failures raised by the library carry one of the codes above. The
// message never repeats the code name; what() is "<CODE>: <message>".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message);

  ErrorCode code() const { return code_; }
  const std::string &detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace ontoterm

#endif  // ONTOTERM_ERROR_H_
