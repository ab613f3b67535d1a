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

#include "ontoterm/error.h"

namespace ontoterm {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNoCorpus: return "E_NO_CORPUS";
    case ErrorCode::kEncoding: return "E_ENCODING";
    case ErrorCode::kBadPattern: return "E_BAD_PATTERN";
    case ErrorCode::kUnknownTerm: return "E_UNKNOWN_TERM";
    case ErrorCode::kUnknownRef: return "E_UNKNOWN_REF";
    case ErrorCode::kCycle: return "E_CYCLE";
    case ErrorCode::kUnknownConcept: return "E_UNKNOWN_CONCEPT";
    case ErrorCode::kSyntax: return "E_SYNTAX";
    case ErrorCode::kDupName: return "E_DUP_NAME";
    case ErrorCode::kUnknownGenus: return "E_UNKNOWN_GENUS";
    case ErrorCode::kUnknownAxis: return "E_UNKNOWN_AXIS";
    case ErrorCode::kBadValue: return "E_BAD_VALUE";
    case ErrorCode::kMultipleGenus: return "E_MULTIPLE_GENUS";
    case ErrorCode::kUnsupported: return "E_UNSUPPORTED";
    case ErrorCode::kType: return "E_TYPE";
    case ErrorCode::kUnknownAttribute: return "E_UNKNOWN_ATTRIBUTE";
    case ErrorCode::kUnresolvable: return "E_UNRESOLVABLE";
    case ErrorCode::kInconsistent: return "E_INCONSISTENT";
    case ErrorCode::kConfig: return "E_CONFIG";
    case ErrorCode::kIo: return "E_IO";
  }
  return "E_UNKNOWN";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code),
      detail_(message) {}

}  // namespace ontoterm
