// Copyright 2026 The symext Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs the installed command-line binary and checks outputs and exit codes.

#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>

#include <json.hpp>

#include "symext/state_io.hpp"
#include "symext/statezoo.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SYMEXT_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe) != nullptr) r.out += buf.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("symext_cli_" + name)).string();
}

}  // namespace

TEST_CASE("state then check-ext") {
  const auto path = temp_path("w.json");
  REQUIRE(run("state werner --d 2 --alpha -0.9 -o " + path).code == 0);
  const auto r = run("check-ext " + path + " --k 1");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("feasible") == false);
  CHECK(j.at("method") == "SDP");
  const auto a = nlohmann::json::parse(run("check-ext " + path + " --method analytic").out);
  CHECK(a.at("feasible") == false);
}

TEST_CASE("state files round-trip bit exactly") {
  const auto path = temp_path("lock.json");
  REQUIRE(run("state locking --d 2 -o " + path).code == 0);
  const auto back = symext::io::read_state(path);
  const auto direct = symext::zoo::locking_state(2);
  CHECK((back.matrix().array() == direct.matrix().array()).all());
  CHECK(back.profile() == direct.profile());
  for (const char* fam : {"upsilon-n --n 2", "upsilon-eps --d 2 --eps 0.1", "max-entangled --d 3",
                          "decohered-locking --d 2", "private --seed 4", "w --n 3", "ghz --n 3"}) {
    CHECK(run(std::string("state ") + fam).code == 0);
  }
  CHECK(run("state private").code == 2);
  CHECK(run("state nosuch").code == 2);
}

TEST_CASE("key bound") {
  const auto zero = nlohmann::json::parse(run("key-bound --eps 0 --da 2").out);
  CHECK(zero.at("bound").get<double>() == doctest::Approx(0.0).scale(1.0));
  const auto kb = nlohmann::json::parse(run("key-bound --eps 0.1 --da 2").out);
  CHECK(kb.at("bound").get<double>() == doctest::Approx(2.675982).epsilon(1e-6));
  const auto path = temp_path("ueps.json");
  REQUIRE(run("state upsilon-eps --d 2 --eps 0.1 -o " + path).code == 0);
  const auto piped = run("key-bound --state " + path);
  REQUIRE(piped.code == 0);
  CHECK(nlohmann::json::parse(piped.out).at("bound").get<double>() <= 2.6760);
  CHECK(run("key-bound").code == 2);
}

TEST_CASE("werner scan CSV") {
  const auto r = run("werner-scan --d 2 --alpha-min -1 --alpha-max 0 --step 0.01");
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "alpha,separable,npt,extendible,margin,coherent_info");
  double ext_flip = 0.0;
  double coh_flip = 0.0;
  int prev_ext = -1;
  int prev_coh = -1;
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    double alpha = 0.0;
    int sep = 0;
    int npt = 0;
    int ext = 0;
    double margin = 0.0;
    double coh = 0.0;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%d,%d,%d,%lf,%lf", &alpha, &sep, &npt, &ext, &margin, &coh) == 6);
    const int pos = coh > 0.0;
    if (prev_ext >= 0 && ext != prev_ext) ext_flip = alpha;
    if (prev_coh >= 0 && pos != prev_coh) coh_flip = alpha;
    prev_ext = ext;
    prev_coh = pos;
  }
  CHECK(rows == 101);
  CHECK(ext_flip == doctest::Approx(-0.80).epsilon(0.02));
  CHECK(coh_flip == doctest::Approx(-0.855).epsilon(0.005));
}

TEST_CASE("bsa, distance and locking demo emit JSON") {
  const auto path = temp_path("bell.json");
  REQUIRE(run("state max-entangled --d 2 -o " + path).code == 0);
  const auto b = nlohmann::json::parse(run("bsa " + path).out);
  CHECK(b.at("lambda_max").get<double>() <= 1e-6);
  CHECK(b.at("ess").get<double>() == doctest::Approx(1.0).epsilon(1e-6));
  const auto d = nlohmann::json::parse(run("distance-se " + path).out);
  CHECK(d.at("epsilon").get<double>() > 0.1);
  const auto l = nlohmann::json::parse(run("locking-demo --d 2").out);
  CHECK(l.at("pre").at("feasible") == false);
  CHECK(l.at("post").at("feasible") == true);
}

TEST_CASE("distill search requires a seed and is reproducible") {
  CHECK(run("distill-search --werner-alpha -0.82 --trials 10").code == 2);
  const auto a = run("distill-search --werner-alpha -0.82 --trials 50 --seed 5 --mode proj2");
  const auto b = run("distill-search --werner-alpha -0.82 --trials 50 --seed 5 --mode proj2 --threads 1");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run("distill-search --werner-alpha -0.82 --trials 5 --seed 5 --mode other").code == 2);
}

TEST_CASE("exit codes") {
  CHECK(run("frobnicate").code == 64);
  CHECK(run("check-ext /nonexistent/state.json").code == 2);
  const auto bad = temp_path("bad.json");
  {
    FILE* f = std::fopen(bad.c_str(), "w");
    REQUIRE(f != nullptr);
    std::fputs("{\"re\": [[1, 0], [0, 1]], \"dims\": [2], \"party\": [\"A\"]}", f);
    std::fclose(f);
  }
  CHECK(run("check-ext " + bad).code == 2);
  CHECK(run("check-ext " + bad + " --k 0").code == 2);
  const auto big = temp_path("big.json");
  REQUIRE(run("state werner --d 3 --alpha 0 -o " + big).code == 0);
  CHECK(run("check-ext " + big + " --k 3").code == 2);
  // One interior-point iteration cannot converge.
  const auto w = temp_path("w2.json");
  REQUIRE(run("state werner --d 2 --alpha -0.5 -o " + w).code == 0);
  CHECK(run("check-ext " + w + " --max-iter 1").code == 3);
  CHECK(run("--help").code == 0);
}
