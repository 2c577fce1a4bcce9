// Copyright 2026 The ortega authors
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
//
// Drives the built binary end to end: output shapes, exit codes, and
// byte-level determinism.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "ortega/corpus_data.hpp"

namespace {

struct CmdResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr interleaved
};

CmdResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const char* bin = std::getenv("ORTEGA_BIN");
  REQUIRE(bin != nullptr);
  std::string cmd = env_prefix + std::string(bin) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CmdResult result;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) result.output.append(buf, got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::size_t count_lines(const std::string& s, const std::string& prefix = "") {
  std::size_t n = 0, pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find('\n', pos);
    if (end == std::string::npos) end = s.size();
    if (prefix.empty() || s.compare(pos, prefix.size(), prefix) == 0) ++n;
    pos = end + 1;
  }
  return n;
}

}  // namespace

TEST_CASE("approx of a perfect square prints the exact root") {
  CmdResult r = run_cli("approx 9 --seeds heron");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "exact: 3\n");
  CHECK(run_cli("approx 16/9").output == "exact: 1+1/3\n");
}

TEST_CASE("approx reproduces the 80 table up to the published value") {
  CmdResult r = run_cli("approx 80 --seeds heron --stop target 8+17/18");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("1\t8+16/17\t9\t1\n2\t8+16/17\t8+17/18\t1/324\n") == 0);
  CHECK(r.output.find("optimal upper: yes") != std::string::npos);

  // the seed upper 9 is itself optimal (81 - 80 = 1), so the optimal stop
  // ends on row 1
  r = run_cli("approx 80 --seeds heron --stop optimal");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.output) == 1 + 4);  // one row + four summary lines
  CHECK(r.output.find("1\t8+16/17\t9\t1\n") == 0);
}

TEST_CASE("approx with default heron seeds and optimal stop") {
  CmdResult r = run_cli("approx 128");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("8\t11+21/67\t11+16/51\t1/2601\n") != std::string::npos);
  CHECK(r.output.find("termination: optimal-upper at row 8") != std::string::npos);
}

TEST_CASE("approx with scaled seeds keeps raw fractions") {
  CmdResult r = run_cli("approx 2000 --seeds scaled 100 5 --policy raw --stop optimal");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("48\t44+44/61\t44+2079/2882\t89/68644\n") != std::string::npos);
  CHECK(r.output.find("81\t44+10824/15005\t44+165055/228811\t1/432681601\n") !=
        std::string::npos);
  CHECK(r.output.find("final: lower 44+10824/15005, upper 44+165055/228811") !=
        std::string::npos);

  // identical invocations produce identical bytes
  CmdResult again = run_cli("approx 2000 --seeds scaled 100 5 --policy raw --stop optimal");
  CHECK(again.output == r.output);
}

TEST_CASE("approx csv format") {
  CmdResult r = run_cli("approx 80 --stop target 8+17/18 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("index,lower,upper,upper_error\n1,8+16/17,9,1\n") == 0);
  CHECK(r.output.find("# final:") != std::string::npos);
}

TEST_CASE("approx error paths") {
  CHECK(run_cli("approx 128 --seeds custom 12 13").exit_code == 1);
  CHECK(run_cli("approx wat").exit_code == 1);
  CHECK(run_cli("approx -- -4").exit_code == 1);
  CHECK(run_cli("approx 1/2 --seeds heron").exit_code == 1);   // a = 0
  CHECK(run_cli("approx 2000 --seeds scaled 100 7").exit_code == 1);  // wrong c,m
  CHECK(run_cli("approx 128 --bogus-flag").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("custom seeds and row stop") {
  CmdResult r = run_cli("approx 6 --seeds custom 2 3 --stop rows 4");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.output) == 4 + 4);
  CHECK(r.output.find("termination: row-limit at row 4") != std::string::npos);
}

TEST_CASE("verify runs clean on the embedded corpus") {
  CmdResult r = run_cli("verify");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("0 mismatches") != std::string::npos);
  CHECK(r.output.find("2 known errata") != std::string::npos);

  r = run_cli("verify --only section2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("64 checks") != std::string::npos);

  r = run_cli("verify --format csv --only chuquet");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("status,location,expected,computed") == 0);
  CHECK(r.output.find("known-erratum,\"chuquet n=12 error\"") != std::string::npos);
}

TEST_CASE("verify against an external corpus file") {
  namespace fs = std::filesystem;
  fs::path good = fs::temp_directory_path() / "ortega_cli_corpus_good.txt";
  fs::path bad = fs::temp_directory_path() / "ortega_cli_corpus_bad.txt";
  {
    std::ofstream out(good, std::ios::binary);
    out << ortega::kCorpusText;
  }
  {
    std::string text{ortega::kCorpusText};
    std::size_t pos = text.find("-1/2601");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 7, "-1/2602");
    std::ofstream out(bad, std::ios::binary);
    out << text;
  }

  CHECK(run_cli("verify --corpus " + good.string()).exit_code == 0);

  CmdResult r = run_cli("verify --corpus " + bad.string());
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("MISMATCH") != std::string::npos);

  CHECK(run_cli("verify --corpus /nonexistent/corpus.txt").exit_code == 3);

  // CORPUS_PATH is honored when no flag is given
  CHECK(run_cli("verify", "CORPUS_PATH=" + bad.string() + " ").exit_code == 1);
  CHECK(run_cli("verify", "CORPUS_PATH=" + good.string() + " ").exit_code == 0);

  fs::remove(good);
  fs::remove(bad);
}

TEST_CASE("pell command") {
  CmdResult r = run_cli("pell 128");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("fundamental: p=577 q=51") != std::string::npos);
  CHECK(r.output.find("optimal upper: 577/51 = 11+16/51, error 1/2601") !=
        std::string::npos);
  CHECK(r.output.find("optimal lower: none") != std::string::npos);

  r = run_cli("pell 2");
  CHECK(r.output.find("optimal upper: 3/2 = 1+1/2, error 1/4") != std::string::npos);
  CHECK(r.output.find("optimal lower: 1/1 = 1, error 1/1") != std::string::npos);

  CHECK(run_cli("pell 25").exit_code == 1);
  CHECK(run_cli("pell 5/2").exit_code == 1);
  CHECK(run_cli("pell 1").exit_code == 1);
}

TEST_CASE("chuquet command") {
  CmdResult r = run_cli("chuquet");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.output) == 12);
  CHECK(r.output.find("2\t1+169/408\t1/166464\tupper\n") == 0);
  CHECK(r.output.find("10\t3+228/1405\t-1/1974025\tlower") != std::string::npos);

  r = run_cli("chuquet --verify");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("2 known errata") != std::string::npos);
}

TEST_CASE("scale-derive pipeline") {
  CmdResult r = run_cli("scale-derive");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("chuquet sqrt(5) upper: 1525/682") != std::string::npos);
  CHECK(r.output.find("lower = c / upper = 44+44/61") != std::string::npos);
  CHECK(r.output.find("upper = 44+11/15") != std::string::npos);
  CHECK(r.output.find("keep-raw refine: 81 rows") != std::string::npos);
  CHECK(r.output.find("final upper: 44+165055/228811 = 44+15005/20801, error "
                      "1/432681601") != std::string::npos);

  r = run_cli("scale-derive --trace");
  CHECK(r.output.find("48\t44+44/61\t44+2079/2882\t89/68644\n") != std::string::npos);
}
