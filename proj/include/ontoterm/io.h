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

#ifndef ONTOTERM_IO_H_
#define ONTOTERM_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

namespace ontoterm {

// Whole-file read/write. Failures raise E_IO naming the path.
std::string ReadFile(const std::filesystem::path &path);
void WriteFile(const std::filesystem::path &path, std::string_view content);

// Lowercase hex SHA-256 digest.
std::string Sha256Hex(std::string_view data);

}  // namespace ontoterm

#endif  // ONTOTERM_IO_H_
