// Copyright 2026 The Sarrus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(SARRUS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, {}};
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path write_temp(const std::string& name, const std::string& text) {
  const auto p = fs::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p;
}

TEST(Cli, DetWithSums) {
  const auto m = write_temp("sarrus_cli_m4.csv", "2,3,4,-1\n1,-2,0,5\n5,2,2,-3\n8,1,1,1\n");
  const auto r = run("det --builtin 4 --sums --matrix " + m.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "140\npositive 551\nnegative 411\n");
  for (const char* method : {"leibniz", "cofactor", "bareiss"}) {
    EXPECT_EQ(run(std::string("det --method ") + method + " --matrix " + m.string()).out, "140\n");
  }
}

TEST(Cli, DetRationalJson) {
  const auto m = write_temp("sarrus_cli_q.json", R"([["1/2", 0], [0, 2]])");
  EXPECT_EQ(run("det --matrix " + m.string()).out, "1\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("det").code, 1);
  const auto bad = write_temp("sarrus_cli_bad.csv", "1,2,3\n4,5,6\n");
  EXPECT_EQ(run("det --matrix " + bad.string()).code, 2);
  EXPECT_EQ(run("generate --n 2").code, 3);
  EXPECT_EQ(run("generate --n 4 --max-blocks 0").code, 1);
}

TEST(Cli, ExportValidateRoundTrip) {
  const auto path = fs::temp_directory_path() / "sarrus_cli_s5.json";
  EXPECT_EQ(run("export-builtin --n 5 --out " + path.string()).code, 0);
  const auto r = run("validate --scheme " + path.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"valid\": true"), std::string::npos);
}

TEST(Cli, ValidateReportsBrokenScheme) {
  const auto path = write_temp("sarrus_cli_broken.json",
                               R"({"n": 4, "strips": [{"columns": [1,2,3,4,1,2,3], "starts": [1,2,3,4]}]})");
  EXPECT_EQ(run("validate --scheme " + path.string()).code, 2);
}

TEST(Cli, GenerateIsDeterministic) {
  const auto a = run("generate --n 5 --seed 9 --verify 50");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, run("generate --n 5 --seed 9").out);
}

TEST(Cli, Pattern) {
  const auto r = run("pattern --n 6");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("4k+2"), std::string::npos);
}

TEST(Cli, RenderAndBench) {
  const auto svg = run("render --builtin 4");
  EXPECT_EQ(svg.code, 0);
  EXPECT_NE(svg.out.find("<svg"), std::string::npos);
  EXPECT_EQ(svg.out, run("render --builtin 4").out);
  const auto b = run("bench --methods scheme,leibniz --sizes 4 --runs 2");
  EXPECT_EQ(b.code, 0);
  EXPECT_NE(b.out.find("\"terms\":24"), std::string::npos);
}

}  // namespace
