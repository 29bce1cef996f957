/*
   Copyright 2026 The gwalg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "gwalg/cli.hpp"

using namespace gwalg;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) { return (std::filesystem::temp_directory_path() / name).string(); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("json schema") {
    Run r = run({"gldim", "--a", "z*(z-3)", "--json"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["command"] == "gldim");
    CHECK(j["inputs"]["a"] == "z^2 - 3*z");
    CHECK(j["result"]["value"] == 2);
    CHECK(j["result"]["evidence"]["congruent_pair"] == 3);
    CHECK(json::parse(run({"gldim", "--a", "z^2", "--json"}).out)["result"]["value"] == "inf");
  }

  TEST_CASE("text output") {
    Run r = run({"fixed-ring", "--a", "z", "--order", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("h_2(z) = z^2 + z") != std::string::npos);
  }

  TEST_CASE("exit codes") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({}).code == 2);
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({"gldim"}).code == 2);
    CHECK(run({"charp-check", "--a", "z", "--prime", "4"}).code == 1);
    CHECK(run({"order", "--a", "z^3 - z^2 + 5", "--g", "omega"}).code == 1);
  }

  TEST_CASE("parse errors report the flag and span") {
    Run r = run({"mul", "--a", "z", "--lhs", "x + q", "--rhs", "y", "--json"});
    CHECK(r.code == 2);
    json j = json::parse(r.out);
    CHECK(j["error"]["kind"] == "ParseError");
    CHECK(j["error"]["flag"] == "--lhs");
    CHECK(j["error"]["span"] == json::array({4, 5}));
    Run t = run({"mul", "--a", "z", "--lhs", "x + q", "--rhs", "y"});
    CHECK(t.err.find("      ^") != std::string::npos);
  }

  TEST_CASE("config files supply flags and inline flags win") {
    std::string path = temp_path("gwalg_cli_test.ini");
    {
      std::ofstream f(path);
      f << "a = \"z^2\"\njson = true\n";
    }
    json j = json::parse(run({"gldim", "--config", path}).out);
    CHECK(j["result"]["value"] == "inf");
    json k = json::parse(run({"gldim", "--config", path, "--a", "z"}).out);
    CHECK(k["result"]["value"] == 1);
    std::remove(path.c_str());
  }

  TEST_CASE("verify accepts its own certificate and rejects a tampered one") {
    Run r = run({"auslander-witness", "--a", "z*(z-3)", "--g", "theta(zeta(3))", "--json"});
    REQUIRE(r.code == 0);
    std::string path = temp_path("gwalg_cert_test.json");
    {
      std::ofstream f(path);
      f << r.out;
    }
    Run v = run({"auslander-witness", "--verify", path, "--json"});
    CHECK(v.code == 0);
    CHECK(json::parse(v.out)["result"]["valid"] == true);
    json doc = json::parse(r.out);
    doc["result"]["certificate"]["findim_basis"].erase(0);
    {
      std::ofstream f(path);
      f << doc.dump(2);
    }
    Run bad = run({"auslander-witness", "--verify", path, "--json"});
    CHECK(bad.code == 1);
    CHECK(json::parse(bad.out)["result"]["valid"] == false);
    std::remove(path.c_str());
  }

  TEST_CASE("every command is listed") { CHECK(cli_commands().size() == 18); }
}
