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


#include <doctest.h>

#include "ontoterm/io.h"
#include "ontoterm/text.h"

namespace ontoterm::text {
namespace {

TEST_SUITE("text") {

TEST_CASE("normalization") {
  // "é" decomposed vs precomposed.
  CHECK(Nfc("e\xCC\x81") == "\xC3\xA9");
  CHECK(Lower("Relais À Seuil") == "relais à seuil");
  CHECK(StripAccents("relais à seuil électromagnétique") == "relais a seuil electromagnetique");
  CHECK(Capitalize("électrique") == "Électrique");
  CHECK(NormalizeKey("  Relais   de\tTension ") == "relais de tension");
}

TEST_CASE("utf8 validation") {
  CHECK(IsValidUtf8("relais à seuil"));
  CHECK_FALSE(IsValidUtf8("rel\xE0is"));
  CHECK_FALSE(IsValidUtf8("\xC3"));
}

TEST_CASE("split args") {
  auto words = SplitArgs(R"(validate relation HYPONYMY "relais à seuil" "relais")");
  REQUIRE(words);
  CHECK(*words == std::vector<std::string>{"validate", "relation", "HYPONYMY",
                                           "relais à seuil", "relais"});
  CHECK_FALSE(SplitArgs(R"(validate term "open)"));
}

TEST_CASE("character classes") {
  CHECK(IsApostrophe(U'\''));
  CHECK(IsApostrophe(U'’'));
  CHECK(IsWordChar(U'é'));
  CHECK_FALSE(IsWordChar(U','));
  CHECK(IsHyphen(U'-'));
  auto cps = Decode("aé€");
  REQUIRE(cps.size() == 3);
  CHECK(cps[1].value == U'é');
  CHECK(cps[2].utf8 == "€");
}

TEST_CASE("sha256") {
  // FIPS 180-2 test vector.
  CHECK(Sha256Hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

}  // TEST_SUITE

}  // namespace
}  // namespace ontoterm::text
