/* Copyright 2026 The dhseq Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dhseq/cli.hpp"
#include "dhseq/serialize.hpp"

using namespace dhseq;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("generate") {
  CHECK(run({"generate", "--p", "3", "--n", "2", "--format", "bits"}).out == "101001101\n");
  CHECK(run({"generate", "--p", "3", "--n", "2", "--format", "hex"}).out == "165\n");
  CHECK(run({"generate", "--p", "3", "--n", "2", "--complement"}).out == "010110010\n");
  const auto j = parse(run({"generate", "--p", "5", "--n", "1", "--format", "json"}));
  CHECK(j["bits"] == "10110");
  CHECK(j["g"] == 2);
  CHECK(run({"generate", "--p", "3", "--n", "2", "--format", "xml"}).code == kExitInvalidInput);
}

TEST_CASE("classes") {
  const auto j = parse(run({"classes", "--p", "3", "--n", "2"}));
  CHECK(j["classes"]["D0"] == nlohmann::json::array({1, 4, 7}));
  CHECK(j["classes"]["D1"] == nlohmann::json::array({2, 5, 8}));
  CHECK(j["classes"]["R"] == nlohmann::json::array({0, 3, 6}));
  CHECK(j["C1"] == nlohmann::json::array({0, 2, 5, 6, 8}));
}

TEST_CASE("complexity") {
  const Run r = run({"complexity", "--p", "5", "--n", "1"});
  CHECK(r.code == kExitOk);
  const auto j = parse(r);
  CHECK(j["phi2"] == 4);
  CHECK(j["S2"] == "13");
  CHECK(j["gcd"] == "1");
  const auto k = parse(run({"complexity", "--p", "3", "--n", "2"}));
  CHECK(k["gcd"] == "7");
  CHECK(k["maximal"] == false);
}

TEST_CASE("det") {
  const auto j = parse(run({"det", "--p", "3", "--n", "2", "--method", "both"}));
  CHECK(j["det_closed"] == "35");
  CHECK(j["det_resultant"] == "35");
  CHECK(j["match"] == true);
  const auto c = parse(run({"det", "--p", "7", "--n", "3", "--method", "closed"}));
  CHECK(c["det_resultant"].is_null());
  CHECK(run({"det", "--p", "3", "--n", "5", "--method", "resultant"}).code == kExitInvalidInput);
  CHECK(run({"det", "--p", "3", "--n", "5", "--method", "resultant", "--resultant-cap", "300"}).code ==
        kExitOk);
}

TEST_CASE("verify") {
  const Run r = run({"verify", "--p", "3", "--n", "2", "--suite", "all"});
  CHECK(r.code == kExitOk);
  const auto j = parse(r);
  CHECK(j["passed"] == true);
  REQUIRE(j["suites"].size() == 4);
  for (const auto& suite : j["suites"])
    for (const auto& check : suite["checks"]) CHECK(check["status"] != "fail");
  CHECK(run({"verify", "--p", "7", "--n", "2", "--suite", "gauss"}).code == kExitOk);
  CHECK(run({"verify", "--p", "3", "--n", "2", "--suite", "nope"}).code == kExitInvalidInput);
}

TEST_CASE("invalid parameters exit 2") {
  CHECK(run({"verify", "--p", "2", "--n", "1"}).code == kExitInvalidInput);
  CHECK(run({"verify", "--p", "15", "--n", "1"}).code == kExitInvalidInput);
  CHECK(run({"verify", "--p", "3", "--n", "8"}).code == kExitInvalidInput);
  CHECK(run({"verify", "--p", "3", "--n", "2", "--g", "4"}).code == kExitInvalidInput);
  CHECK(run({"verify", "--p", "3", "--n", "2", "--fcsr-cap", "0"}).code == kExitInvalidInput);
  CHECK(run({"verify", "--p", "3"}).code == kExitInvalidInput);
  CHECK(run({}).code == kExitInvalidInput);
  CHECK(run({"sweep", "--p", "9"}).code == kExitInvalidInput);
}

TEST_CASE("sweep") {
  const Run r = run({"sweep", "--p", "3", "5", "--n-max", "2", "--format", "csv"});
  CHECK(r.code == kExitOk);
  CHECK(r.out ==
        "p,n,N,S2,gcd,phi2,bound,bound_ok,det_match,gauss_ok,fcsr_match,lemmas_ok,maximal\n"
        "3,1,3,5,1,2,1,true,pass,pass,pass,pass,true\n"
        "3,2,9,357,7,6,5,true,pass,pass,pass,pass,false\n"
        "5,1,5,13,1,4,3,true,pass,pass,pass,pass,true\n"
        "5,2,25,13022605,1,24,19,true,pass,pass,pass,pass,true\n");

  const Run capped = run({"sweep", "--p", "3", "--format", "json", "--fcsr-cap", "10"});
  const auto j = parse(capped);
  for (const auto& row : j["rows"]) {
    if (row["N"].get<int>() > 10) CHECK(row["fcsr_match"] == "skipped");
  }

  SUBCASE("deterministic output across worker counts") {
    const Run one = run({"sweep", "--p-max", "7", "--format", "json"});
    const Run three = run({"sweep", "--p-max", "7", "--format", "json", "--jobs", "3"});
    CHECK(one.out == three.out);
  }
  SUBCASE("--out writes a file") {
    const std::string path = "dhseq_cli_test_out.csv";
    CHECK(run({"sweep", "--p", "3", "--n-max", "1", "--out", path}).out.empty());
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header.rfind("p,n,N,S2", 0) == 0);
    std::remove(path.c_str());
  }
}
