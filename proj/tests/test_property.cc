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

#include "properties.h"

namespace ontoterm::testing {
namespace {

constexpr int kCases = 1000;

void Expect(const CheckResult &r) {
  INFO(r.first_failure);
  CHECK(r.cases >= kCases);
  CHECK(r.failures == 0);
}

TEST_SUITE("property") {

TEST_CASE("synonymy is symmetric") { Expect(SynonymySymmetry(101, kCases)); }

TEST_CASE("closure and query are monotone") { Expect(ClosureMonotonicity(102, kCases)); }

TEST_CASE("similarity is symmetric and rebuilds paths") {
  Expect(SimilaritySymmetry(103, kCases));
}

TEST_CASE("ellipsis needs the head token") {
  int ellipses = 0;
  Expect(EllipsisHeadMatch(104, kCases, &ellipses));
  // The generator must actually exercise the rule.
  CHECK(ellipses >= 50);
}

TEST_CASE("name mangling is injective") { Expect(ManglingInjectivity(105, kCases)); }

TEST_CASE("pipeline reruns are byte-identical") { Expect(PipelineIdempotence(106, kCases)); }

}  // TEST_SUITE

}  // namespace
}  // namespace ontoterm::testing
