// Copyright 2026 The dp2 Authors
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

#include "dp2/verdict.h"
#include "dp2/dp2.h"

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>

#include "json.hpp"

namespace {

using nlohmann::json;

struct Ctx {
  Ctx() { EXPECT_EQ(dp2_context_create(DP2_TEST_CACHE, 0, 1, &ctx), DP2_OK); }
  ~Ctx() { dp2_context_destroy(ctx); }
  dp2_context* ctx = nullptr;
};

std::string Take(char* s) {
  std::string out = s ? s : "";
  dp2_string_free(s);
  return out;
}

std::string ReadData(const std::string& name) {
  std::ifstream in(std::string(DP2_TEST_DATA) + "/" + name);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

TEST(CApiTest, TableFromCache) {
  Ctx c;
  int loaded = -1;
  ASSERT_EQ(dp2_load_table(c.ctx, &loaded), DP2_OK) << dp2_last_error(c.ctx);
  EXPECT_EQ(loaded, 1);
  char* out = nullptr;
  ASSERT_EQ(dp2_table(c.ctx, "csv", &out), DP2_OK);
  const std::string csv = Take(out);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 61);
  ASSERT_EQ(dp2_table(c.ctx, "json", &out), DP2_OK);
  const json j = json::parse(Take(out));
  EXPECT_EQ(j["classes"].size(), 60u);
  EXPECT_EQ(j["classes"][59]["geiser"], 32);
  EXPECT_EQ(dp2_table(c.ctx, "xml", &out), DP2_ERR_INVALID_ARGUMENT);
  EXPECT_NE(std::string(dp2_last_error(c.ctx)), "");
}

TEST(CApiTest, Classify) {
  Ctx c;
  int64_t m[64] = {};
  for (int i = 0; i < 8; ++i) m[i * 8 + i] = 1;
  int id = 0;
  ASSERT_EQ(dp2_classify(c.ctx, m, &id), DP2_OK);
  EXPECT_EQ(id, 1);
  m[0] = 2;
  EXPECT_EQ(dp2_classify(c.ctx, m, &id), DP2_ERR_NOT_AN_ISOMETRY);
}

TEST(CApiTest, Zeta) {
  Ctx c;
  char* out = nullptr;
  ASSERT_EQ(dp2_zeta(c.ctx, 31, 5, 2, &out), DP2_OK);
  EXPECT_EQ(json::parse(Take(out))["N"][0], 6);
  ASSERT_EQ(dp2_zeta(c.ctx, 49, 2, 1, &out), DP2_OK);
  const json j = json::parse(Take(out));
  EXPECT_EQ(j["N"][0], -7);
  EXPECT_EQ(j["negative_at"], 1);
  EXPECT_EQ(dp2_zeta(c.ctx, 49, 6, 1, &out), DP2_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(dp2_zeta(c.ctx, 70, 5, 1, &out), DP2_ERR_INVALID_ARGUMENT);
}

TEST(CApiTest, SearchAndVerify) {
  Ctx c;
  dp2_search_outcome o;
  char* out = nullptr;
  ASSERT_EQ(dp2_search(c.ctx, "1x7", 9, 0, &o, &out), DP2_OK);
  EXPECT_EQ(o, DP2_SEARCH_FOUND);
  const std::string witness = Take(out);
  int ok = 0;
  ASSERT_EQ(dp2_verify_witness(c.ctx, witness.c_str(), &ok, &out), DP2_OK);
  Take(out);
  EXPECT_EQ(ok, 1);
  json broken = json::parse(witness);
  broken["points"][6]["orbit"][0] = broken["points"][5]["orbit"][0];
  ASSERT_EQ(dp2_verify_witness(c.ctx, broken.dump().c_str(), &ok, &out), DP2_OK);
  Take(out);
  EXPECT_EQ(ok, 0);
  EXPECT_EQ(dp2_verify_witness(c.ctx, "{", &ok, &out), DP2_ERR_PARSE);
  ASSERT_EQ(dp2_search(c.ctx, "1x7", 8, 0, &o, &out), DP2_OK);
  EXPECT_EQ(o, DP2_SEARCH_EXHAUSTED);
  EXPECT_EQ(json::parse(Take(out))["status"], "exhausted");
  ASSERT_EQ(dp2_search(c.ctx, "1x7", 8, 2, &o, &out), DP2_OK);
  Take(out);
  EXPECT_EQ(o, DP2_SEARCH_BUDGET_EXCEEDED);
  EXPECT_EQ(dp2_search(c.ctx, "1x", 8, 0, &o, &out), DP2_ERR_PARSE);
}

TEST(CApiTest, EquationsAndVerdicts) {
  Ctx c;
  char* out = nullptr;
  const std::string cubic = ReadData("f2cubic.txt");
  ASSERT_EQ(dp2_verify_cubic(c.ctx, cubic.c_str(), 2, 1, &out), DP2_OK);
  const json j = json::parse(Take(out));
  EXPECT_EQ(j["num_points"], 1);
  EXPECT_EQ(j["points"][0]["point"], "(0:0:0:1)");
  EXPECT_EQ(j["points"][0]["eckardt"], true);
  EXPECT_EQ(dp2_verify_cubic(c.ctx, cubic.c_str(), 4, 1, &out), DP2_ERR_INVALID_ARGUMENT);
  const std::string quartic = ReadData("f3quartic.txt");
  ASSERT_EQ(dp2_singularity(c.ctx, quartic.c_str(), 3, 1, "1:1:0", &out), DP2_OK);
  const json s = json::parse(Take(out));
  EXPECT_EQ(s["singular"], true);
  EXPECT_EQ(s["node"], false);
  EXPECT_EQ(dp2_singularity(c.ctx, quartic.c_str(), 3, 1, "1:1", &out), DP2_ERR_INVALID_ARGUMENT);

  const auto dir = std::filesystem::temp_directory_path() / "dp2_capi_witnesses";
  std::filesystem::remove_all(dir);
  ASSERT_EQ(dp2_verdicts(c.ctx, 9, "json", dir.c_str(), &out), DP2_OK) << dp2_last_error(c.ctx);
  const json v = json::parse(Take(out));
  ASSERT_EQ(v.size(), 18u);
  for (const auto& row : v) {
    if (row["source"] != "ComputedWitness") continue;
    ASSERT_TRUE(row.contains("witness_path"));
    EXPECT_TRUE(std::filesystem::exists(row["witness_path"].get<std::string>()));
  }
  std::filesystem::remove_all(dir);
  EXPECT_EQ(dp2_verdicts(c.ctx, 32, "json", nullptr, &out), DP2_ERR_UNSUPPORTED);
}

TEST(CApiTest, NullArguments) {
  EXPECT_EQ(dp2_context_create(nullptr, 0, 1, nullptr), DP2_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(dp2_table(nullptr, "csv", nullptr), DP2_ERR_INVALID_ARGUMENT);
  Ctx c;
  EXPECT_EQ(dp2_table(c.ctx, nullptr, nullptr), DP2_ERR_INVALID_ARGUMENT);
  EXPECT_STREQ(dp2_status_name(DP2_ERR_CONSISTENCY), "consistency failure");
  EXPECT_STREQ(dp2_status_name(DP2_OK), "ok");
  EXPECT_NE(std::string(dp2_version()), "");
}

// ---- command line ----------------------------------------------------------

struct CliRun {
  int code;
  std::string out;
};

CliRun Cli(const std::string& args) {
  const std::string cmd = std::string(DP2_CLI) + " --cache-dir " + DP2_TEST_CACHE + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe.release());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

TEST(CliTest, Table) {
  const CliRun r = Cli("table --format csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 61);
  EXPECT_NE(r.out.find("\n39,A6,7,"), std::string::npos);
  EXPECT_NE(r.out.find("\n60,E7(a4),6,"), std::string::npos);
}

TEST(CliTest, Zeta) {
  EXPECT_EQ(json::parse(Cli("zeta --class 31 --q 5 --dmax 2").out)["N"][0], 6);
  EXPECT_EQ(json::parse(Cli("zeta --class 1 --q 3 --dmax 1").out)["N"][0], 34);
  const json j = json::parse(Cli("zeta --class 49 --q 2 --dmax 1").out);
  EXPECT_EQ(j["N"][0], -7);
  EXPECT_EQ(j["negative_at"], 1);
  EXPECT_EQ(Cli("zeta --class 49 --q 10").code, 1);
}

TEST(CliTest, SearchExitCodes) {
  const CliRun found = Cli("search --pattern 1x7 --q 9");
  EXPECT_EQ(found.code, 0);
  EXPECT_EQ(json::parse(found.out)["points"].size(), 7u);
  EXPECT_EQ(Cli("search --pattern 1x7 --q 9").out, found.out);  // deterministic
  EXPECT_EQ(Cli("search --pattern 1x7 --q 8").code, 2);
  EXPECT_EQ(Cli("search --pattern 1y7 --q 8").code, 1);
  const auto path = std::filesystem::temp_directory_path() / "dp2_cli_w.json";
  EXPECT_EQ(Cli("search --pattern 7 --q 4 --out " + path.string()).code, 0);
  const CliRun v = Cli("verify-witness --file " + path.string());
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out.rfind("verified", 0), 0u);
  std::filesystem::remove(path);
}

TEST(CliTest, Equations) {
  const std::string data = DP2_TEST_DATA;
  const CliRun r = Cli("verify-cubic --file " + data + "/f2cubic.txt --p 2 --m 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "points: 1; (0:0:0:1) Eckardt: yes\n");
  const CliRun f3 = Cli("verify-cubic --file " + data + "/f3cubic.txt --p 3");
  EXPECT_EQ(f3.out.rfind("points: 4; (0:0:1:0) Eckardt: no;", 0), 0u);
  const CliRun s = Cli("singularity --file " + data + "/f3quartic.txt --p 3 --point 1:1:0");
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("not a node"), std::string::npos);
  EXPECT_EQ(Cli("verify-cubic --file /nonexistent --p 2").code, 1);
}

TEST(CliTest, Verdict) {
  const auto dir = std::filesystem::temp_directory_path() / "dp2_cli_verdict";
  std::filesystem::remove_all(dir);
  const CliRun r = Cli("verdict --q 3 --format csv --witness-dir " + dir.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\n35,3,OpenInPaper,Theorem,"), std::string::npos);
  EXPECT_NE(r.out.find("\n49,3,NotExists,ComputedExhaustion,1,"), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(dir / "type57_q3.json"));
  EXPECT_EQ(Cli("verdict --q 3 --format csv --witness-dir " + dir.string()).out, r.out);
  std::filesystem::remove_all(dir);
  EXPECT_EQ(Cli("verdict --q 32").code, 1);
}

}  // namespace
