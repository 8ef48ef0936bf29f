// Copyright 2026 the ncsurf authors
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

#include <sstream>

#include <json.hpp>

#include "ncsurf/scenario.hpp"

using namespace ncsurf;

namespace {

struct run_outcome {
  int code;
  std::string out;
  std::string err;
};

run_outcome run(std::string_view text, run_options options = {}) {
  std::ostringstream out, err;
  int code = run_scenario_text(text, options, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("a round trip scenario returns to the starting descriptor") {
  auto r = run(R"(
# blow a point up and contract the exceptional line again
algebra 9*[M:0] unknown
report
blowup [P:0]
blowdown last
report
)");
  CHECK(r.code == kExitOk);
  // the final report shows the original twist again
  size_t first = r.out.find("9*[M:0]");
  REQUIRE(first != std::string::npos);
  CHECK(r.out.find("9*[M:0]", first + 1) != std::string::npos);
  CHECK(r.out.find("8*") == std::string::npos);
}

TEST_CASE("blowing up a degree-3 algebra fails with exit code 3") {
  auto r = run(R"(
algebra 3*[M:0]
blowup [P:0]
)");
  CHECK(r.code == kExitPrecondition);
  CHECK(r.err.find("degree >= 4") != std::string::npos);
}

TEST_CASE("parse errors exit with code 2") {
  CHECK(run("algebra what-is-this").code == kExitParse);
  CHECK(run("frobnicate").code == kExitParse);
  CHECK(run("algebra 9*[M:0]\nblowup").code == kExitParse);
}

TEST_CASE("blowdown without justification fails and names the condition") {
  auto r = run(R"(
algebra 6*[M:0]
line bare [P:0]
blowdown bare
)");
  CHECK(r.code == kExitPrecondition);
  CHECK(r.err.find("hilb End(J) = hilb R") != std::string::npos);
}

TEST_CASE("declared facts unlock a blowdown") {
  auto r = run(R"(
algebra 6*[M:0]
line bare [P:0]
facts add bare end-series-matches-ring true
blowdown bare
report
)");
  CHECK(r.code == kExitOk);
  // the contraction adds the point one translation step back
  CHECK(r.out.find("6*[M:0] + [P:-1]") != std::string::npos);
}

TEST_CASE("intersect emits the ledger and the central endomorphism ring") {
  auto r = run(R"(
algebra 6*[M:0]
line a [P:0]
line b [P:2]
intersect a a
intersect a b
intersect b a
)");
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("End(L)") != std::string::npos);
  CHECK(r.out.find("s^-1 / (1-s)") != std::string::npos);
  // the backwards pair has a negative offset and an empty Hom ledger
  CHECK(r.out.find("\"offset\":-2") != std::string::npos);
}

TEST_CASE("an oracle-bound scenario accepts the curve literal") {
  auto r = run(R"(
curve Q: a=0 b=-2; t=(3,5)
bind P (3,5)
algebra 5*[P:0]
report
)");
  CHECK(r.code == kExitOk);

  // a torsion translation point is refused
  auto bad = run(R"(
curve Q: a=0 b=4; t=(0,2)
)");
  CHECK(bad.code == kExitPrecondition);
  CHECK(bad.err.find("torsion") != std::string::npos);
}

TEST_CASE("structured output is schema-clean json lines") {
  run_options options;
  options.structured = true;
  auto r = run(R"(
algebra 9*[M:0] smooth
blowup [P:0] pdim=finite
report
)",
               options);
  CHECK(r.code == kExitOk);
  std::istringstream lines(r.out);
  std::string line;
  int records = 0;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    auto record = nlohmann::json::parse(line);
    REQUIRE(record.is_object());
    CHECK(record.size() == 4);
    CHECK(record["step"].is_string());
    CHECK(record["anchor"].is_string());
    CHECK(record["provenance"].is_string());
    CHECK_FALSE(record["value"].is_null());
    ++records;
  }
  CHECK(records > 3);
}

TEST_CASE("scenario output is deterministic") {
  const std::string text = R"(
algebra 9*[M:0] smooth
blowup [P:0] pdim=finite
blowup [P:0]
report
blowdown last
report
)";
  auto a = run(text);
  auto b = run(text);
  CHECK(a.code == b.code);
  CHECK(a.out == b.out);
}

TEST_CASE("the built-in pathology scenario") {
  run_options options;
  std::ostringstream out, err;
  int code = run_builtin_pathology(options, out, err);
  CHECK(code == kExitOk);
  std::string text = out.str();
  CHECK(text.find("[9,8,7]") != std::string::npos);
  CHECK(text.find("not-smooth") != std::string::npos);
  CHECK(text.find("undefined") != std::string::npos);

  run_options structured;
  structured.structured = true;
  std::ostringstream jout, jerr;
  CHECK(run_builtin_pathology(structured, jout, jerr) == kExitOk);
  std::istringstream lines(jout.str());
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    auto record = nlohmann::json::parse(line);
    CHECK(record.size() == 4);
  }
}

TEST_CASE("tilde extensions from series literals") {
  auto r = run(R"(
algebra 7*[M:0]
tilde (1 + 5*s + s^2) / (1-s)^3 ; s / (1-s)
)");
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("\"ext1\":\"s / (1-s)^2\"") != std::string::npos);

  // a negative multiplicity series is a precondition failure
  auto bad = run(R"(
algebra 7*[M:0]
tilde 1 / (1-s) ; -s
)");
  CHECK(bad.code == kExitPrecondition);
}

TEST_CASE("pair facts feed the pair inference") {
  auto r = run(R"(
algebra 6*[M:0]
line a [P:0]
line b [Q:4]
facts add pair:a,b ext1-ideal-pair-zero true
infer a b
)");
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("intersection-zero") != std::string::npos);
  CHECK(r.out.find("hom-ideal-pair-gap-single") != std::string::npos);
}

TEST_CASE("hostile scenario lines fail cleanly") {
  const char* cases[] = {
      "algebra",
      "algebra 9*[M:0] sorta-smooth",
      "blowup [P:0]",
      "curve X: a=1 b=2; t=(1,1)",
      "curve Q: a=0 b=-2; t=(1,1)",
      "bind P (3,5)",
      "relate A B x",
      "algebra 9*[M:0]\nline l [P:0] middle",
      "algebra 9*[M:0]\nfacts add l end-series-matches-ring true",
      "algebra 9*[M:0]\nfacts add algebra not-a-predicate true",
      "algebra 9*[M:0]\nintersect a b",
      "algebra 9*[M:0]\nblowdown last",
      "algebra 9*[M:0]\ntilde 1 / (1-s)",
      "algebra 9*[M:0]\nalgebra 9*[M:0]",
  };
  for (const char* text : cases) {
    CAPTURE(text);
    auto r = run(text);
    CHECK(r.code != kExitOk);
    CHECK((r.code == kExitParse || r.code == kExitPrecondition));
  }
}

TEST_CASE("a derived contradiction exits with code 4") {
  auto r = run(R"(
algebra 6*[M:0]
line a [P:0]
facts add a self-intersection-minus-one true
facts add a nonsplit-self-extension true
infer a
)");
  CHECK(r.code == kExitInconsistent);
  CHECK(r.out.find("contradiction") != std::string::npos);
}

TEST_CASE("prime-field curve literals work behind the guard") {
  auto r = run(R"(
curve F1000003: a=0 b=5; t=(1,586770)
bind A (1,586770)
bind B (490815,181610)
algebra 4*[A:0] + [B:0]
report
)");
  CHECK(r.code == kExitOk);

  // a small field has only torsion points, so the guard refuses
  auto bad = run(R"(
curve F11: a=0 b=8; t=(2,4)
)");
  CHECK(bad.code == kExitPrecondition);
}

TEST_CASE("declared smoothness plus exceptional provenance infers minus one") {
  auto r = run(R"(
algebra 9*[M:0] smooth
blowup [P:0] pdim=finite
infer last
)");
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("self-intersection-minus-one") != std::string::npos);
}
