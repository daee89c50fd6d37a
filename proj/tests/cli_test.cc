// Copyright 2026 The Authors.
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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "bmpart/serialize.h"

namespace bmpart::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunCli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("bmpart_cli_test_" +
            std::string(::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const {
    return (dir_ / name).string();
  }
  std::string Write(const std::string& name, const std::string& content) {
    std::ofstream(Path(name)) << content;
    return Path(name);
  }
  static std::string Read(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    std::ostringstream s;
    s << file.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(RunCli({}).code, kExitUsage);
  EXPECT_EQ(RunCli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"cover"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"cover", "--d", "0"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"cover", "--d", "3", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"verify", Path("missing.json")}).code, kExitUsage);
  EXPECT_EQ(RunCli({"--help"}).code, kExitOk);
}

TEST_F(CliTest, VerifyValidAndInvalid) {
  const std::string good = Write("good.json", R"({"d":2,"parts":[[1,3],[2]]})");
  EXPECT_EQ(RunCli({"verify", good}).code, kExitOk);

  const std::string bad = Write("bad.json", R"({"d":3,"parts":[[1],[2],[3]]})");
  const Result r = RunCli({"--out", Path("cert.json"), "verify", bad});
  EXPECT_EQ(r.code, kExitFailed);
  EXPECT_NE(r.out.find("INVALID"), std::string::npos);
  const Json cert = Json::parse(Read(Path("cert.json")));
  EXPECT_FALSE(cert["valid"].get<bool>());
  EXPECT_EQ(cert["witness"].size(), 3u);
  EXPECT_TRUE(fs::exists(Path("cert.json.manifest.json")));

  const std::string malformed = Write("m.json", "{\"d\": 2, \"parts\": [");
  EXPECT_EQ(RunCli({"verify", malformed}).code, kExitUsage);
  const std::string dup = Write("dup.json", R"({"d":2,"parts":[[1],[1]]})");
  EXPECT_EQ(RunCli({"verify", dup}).code, kExitUsage);
}

TEST_F(CliTest, VerifyGeneratorsAndGuard) {
  EXPECT_EQ(RunCli({"verify", "--gen", "leading-bit", "--d", "10"}).code,
            kExitOk);
  EXPECT_EQ(RunCli({"--seed", "3", "verify", "--gen", "gl-image", "--d", "8"})
                .code,
            kExitOk);
  EXPECT_EQ(RunCli({"verify", "--gen", "leading-bit", "--d", "21"}).code,
            kExitGuard);
  EXPECT_EQ(RunCli({"--seed", "1", "verify", "--gen", "leading-bit", "--d",
                    "21", "--trials", "50"})
                .code,
            kExitOk);
  EXPECT_EQ(RunCli({"verify", "--gen", "leading-bit", "--d", "4", "--exact",
                    "--trials", "5"})
                .code,
            kExitUsage);
}

TEST_F(CliTest, AnalyzeLeadingBit16) {
  const Result r = RunCli({"--out", Path("a.json"), "analyze", "--gen",
                           "leading-bit", "--d", "16"});
  EXPECT_EQ(r.code, kExitOk);
  const Json j = Json::parse(Read(Path("a.json")));
  EXPECT_EQ(j["heavy_parts"]["removals"], 1);
  EXPECT_EQ(j["heavy_parts"]["removed"], Json::array({15}));
  EXPECT_TRUE(j["holds"].get<bool>());
}

TEST_F(CliTest, AnalyzeRefusesInvalidWithoutForce) {
  const std::string bad = Write("bad.json", R"({"d":3,"parts":[[1],[2],[3]]})");
  EXPECT_EQ(RunCli({"analyze", bad}).code, kExitFailed);
  const Result forced = RunCli({"analyze", bad, "--force"});
  EXPECT_EQ(forced.code, kExitFailed);
  EXPECT_NE(forced.err.find("NOT valid"), std::string::npos);
}

TEST_F(CliTest, CoverAndRefutation) {
  const Result r = RunCli({"--out", Path("c.json"), "cover", "--d", "3"});
  EXPECT_EQ(r.code, kExitOk);
  const Json j = Json::parse(Read(Path("c.json")));
  EXPECT_EQ(j["cover"]["covering_number"], 3);

  EXPECT_EQ(RunCli({"--out", Path("r.csv"), "--format", "csv", "cover", "--d",
                    "17", "--refute", "--gl-images", "1"})
                .code,
            kExitOk);
  const std::string csv = Read(Path("r.csv"));
  EXPECT_EQ(csv.rfind("d,max_part,k,2k,bound,verdict\n", 0), 0u);
  EXPECT_NE(csv.find("17,65536,7711,15422,16383.875,violated"),
            std::string::npos);
  EXPECT_EQ(RunCli({"--out", Path("x.csv"), "--format", "csv", "cover", "--d",
                    "3"})
                .code,
            kExitUsage);
}

TEST_F(CliTest, SimulateIsDeterministic) {
  const std::string config = Write(
      "config.json",
      R"({"d":8,"trials":300,"fraction":0.5,"mapping":"gl-image"})");
  for (const char* run : {"1", "2"}) {
    EXPECT_EQ(RunCli({"--seed", "11", "--out", Path(std::string("s") + run +
                                                    ".json"),
                      "simulate", config, "--per-trial",
                      Path(std::string("s") + run + ".csv")})
                  .code,
              kExitOk);
  }
  EXPECT_EQ(RunCli({"--seed", "11", "--jobs", "3", "--out", Path("s3.json"),
                    "simulate", config, "--per-trial", Path("s3.csv")})
                .code,
            kExitOk);
  const std::string json = Read(Path("s1.json"));
  const std::string csv = Read(Path("s1.csv"));
  EXPECT_FALSE(json.empty());
  EXPECT_EQ(json, Read(Path("s2.json")));
  EXPECT_EQ(json, Read(Path("s3.json")));
  EXPECT_EQ(csv, Read(Path("s2.csv")));
  EXPECT_EQ(csv, Read(Path("s3.csv")));
  const Json manifest = Json::parse(Read(Path("s1.json.manifest.json")));
  EXPECT_EQ(manifest["seed"], 11);
  EXPECT_EQ(manifest["command"], "simulate");
}

TEST_F(CliTest, SimulateOverridesAndErrors) {
  const std::string config =
      Write("config.json", R"({"d":6,"trials":50,"seed":4})");
  const Result r = RunCli({"--out", Path("o.json"), "simulate", config,
                           "--algorithm", "trivial-greedy", "--d", "5"});
  EXPECT_EQ(r.code, kExitOk);
  const Json j = Json::parse(Read(Path("o.json")));
  EXPECT_EQ(j["d"], 5);
  EXPECT_EQ(j["ratio"], 1.0);
  EXPECT_EQ(j["seed"], 4);

  EXPECT_EQ(RunCli({"simulate", config, "--trials", "0"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"simulate", config, "--sample-size", "1000"}).code,
            kExitUsage);
  EXPECT_EQ(RunCli({"simulate", config, "--mapping", "nope"}).code,
            kExitUsage);
  const std::string both = Write(
      "both.json", R"({"d":6,"trials":5,"sample_size":3,"fraction":0.5})");
  EXPECT_EQ(RunCli({"simulate", both}).code, kExitUsage);
}

TEST_F(CliTest, Selftest) {
  const Result r = RunCli({"--seed", "5", "selftest"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

}  // namespace
}  // namespace bmpart::cli
