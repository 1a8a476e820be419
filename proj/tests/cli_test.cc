// cli_test.cc
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
//
// Copyright 2026 The ensdec Authors.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <unistd.h>

#include "ensdec/commands.h"
#include "ensdec/config.h"
#include "ensdec/errors.h"
#include "ensdec/random.h"

namespace ensdec {
namespace {

namespace fs = std::filesystem;

const fs::path kChain = fs::path(ENSDEC_TEST_DATA_DIR) / "chain";

class ScratchDir {
 public:
  ScratchDir() {
    const auto *info = ::testing::UnitTest::GetInstance()->current_test_info();
    path_ = fs::temp_directory_path() /
            ("ensdec_" + std::string(info->name()) + "_" + std::to_string(::getpid()));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~ScratchDir() { fs::remove_all(path_); }
  const fs::path &path() const { return path_; }
  fs::path write(const std::string &name, const std::string &content) const {
    const fs::path p = path_ / name;
    fs::create_directories(p.parent_path());
    std::ofstream(p) << content;
    return p;
  }

 private:
  fs::path path_;
};

std::string slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<fs::path> files_under(const fs::path &root) {
  std::vector<fs::path> files;
  for (const auto &e : fs::recursive_directory_iterator(root))
    if (e.is_regular_file()) files.push_back(fs::relative(e.path(), root));
  std::sort(files.begin(), files.end());
  return files;
}

TEST(CliGoldenTest, ChainRunMatchesGoldenFiles) {
  ScratchDir dir;
  const CliRun run = cli({"decode", "--config", (kChain / "decode.conf").string(),
                          "--output_dir", dir.path().string()});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  const fs::path golden = kChain / "golden";
  ASSERT_EQ(files_under(dir.path()), files_under(golden));
  for (const auto &f : files_under(golden))
    EXPECT_EQ(slurp(dir.path() / f), slurp(golden / f)) << f;
}

TEST(CliGoldenTest, ParallelRunIsByteIdentical) {
  ScratchDir dir;
  const std::string conf = (kChain / "decode.conf").string();
  ASSERT_EQ(cli({"decode", "--config", conf, "--output_dir", (dir.path() / "a").string()}).code, 0);
  ASSERT_EQ(cli({"decode", "--config", conf, "--jobs", "3", "--output_dir",
                 (dir.path() / "b").string()}).code, 0);
  for (const auto &f : files_under(dir.path() / "a"))
    EXPECT_EQ(slurp(dir.path() / "a" / f), slurp(dir.path() / "b" / f)) << f;
}

TEST(CliGoldenTest, RangeSelectsSentences) {
  ScratchDir dir;
  const CliRun run = cli({"decode", "--config", (kChain / "decode.conf").string(),
                          "--range", "2:2", "--outputs", "nbest", "--output_dir",
                          dir.path().string()});
  ASSERT_EQ(run.code, 0) << run.err;
  EXPECT_EQ(slurp(dir.path() / "out.nbest"),
            "1 ||| hello ||| fst= 0.700000 lm= 1.200000 ||| 1.900000\n"
            "1 ||| world hello ||| fst= 0.650000 lm= 2.403973 ||| 3.053973\n");
}

TEST(CliGoldenTest, AnalyzeWritesOneRowPerStrategy) {
  ScratchDir dir;
  const CliRun run = cli({"analyze", "--config", (kChain / "decode.conf").string(),
                          "--output_dir", dir.path().string()});
  ASSERT_EQ(run.code, 0) << run.err;
  const std::string report = slurp(dir.path() / "analyze.tsv");
  EXPECT_EQ(report, run.out);
  EXPECT_EQ(std::count(report.begin(), report.end(), '\n'), 6);
  EXPECT_NE(report.find("\ngreedy\t"), std::string::npos);
  EXPECT_NE(report.find("\nexhaustive\t"), std::string::npos);
}

RunConfig config_from(const std::string &file, const std::vector<std::string> &flags) {
  std::istringstream in(file);
  return build_config(merge_config(parse_config_file(in), parse_flags(flags)));
}

const std::string kMinimal = "src_test = s.txt\npredictors = wc\n";

TEST(ConfigTest, FlagOverridesFile) {
  EXPECT_EQ(config_from(kMinimal + "beam = 4\n", {"--beam", "20"}).beam, 20u);
  EXPECT_EQ(config_from(kMinimal + "beam = 4\n", {}).beam, 4u);
  EXPECT_EQ(config_from(kMinimal + "beam = 4\n", {"--beam=7"}).beam, 7u);
}

TEST(ConfigTest, PrecedenceOnRandomAssignments) {
  Rng rng(107);
  for (int trial = 0; trial < 200; ++trial) {
    std::string file = kMinimal;
    std::vector<std::string> flags;
    std::size_t expect_beam = 4, expect_nbest = 0;
    int expect_order = 4;
    if (rng.bernoulli(0.5)) {
      expect_beam = rng.range(1, 50);
      file += "beam = " + std::to_string(expect_beam) + "\n";
    }
    if (rng.bernoulli(0.5)) {
      expect_beam = rng.range(1, 50);
      flags.insert(flags.end(), {"--beam", std::to_string(expect_beam)});
    }
    if (rng.bernoulli(0.5)) {
      expect_nbest = rng.range(0, 9);
      file += "nbest_size = " + std::to_string(expect_nbest) + "\n";
    }
    if (rng.bernoulli(0.5)) {
      expect_order = static_cast<int>(rng.range(1, 5));
      flags.push_back("--ngram_order=" + std::to_string(expect_order));
    }
    const RunConfig c = config_from(file, flags);
    EXPECT_EQ(c.beam, expect_beam);
    EXPECT_EQ(c.nbest_size, expect_nbest);
    EXPECT_EQ(c.ngram_order, expect_order);
  }
}

TEST(ConfigTest, IndexedKeysPerKind) {
  const RunConfig c = config_from(
      "src_test = s.txt\npredictors = lm,fst,lm\nlm_path1 = a.arpa\n"
      "lm_path2 = b.arpa\nfst_path = x.fst\nlm_floor = 9\nlm_floor2 = 5\n",
      {});
  ASSERT_EQ(c.predictors.size(), 3u);
  EXPECT_EQ(c.predictors[0].name, "lm1");
  EXPECT_EQ(c.predictors[0].path, "a.arpa");
  EXPECT_EQ(c.predictors[0].floor_cost, 9.0);
  EXPECT_EQ(c.predictors[1].name, "fst");
  EXPECT_EQ(c.predictors[2].name, "lm2");
  EXPECT_EQ(c.predictors[2].path, "b.arpa");
  EXPECT_EQ(c.predictors[2].floor_cost, 5.0);
  EXPECT_EQ(c.predictor_weights, (std::vector<double>{1.0, 1.0, 1.0}));
}

TEST(ConfigTest, FilePathsResolveAgainstConfigDirectory) {
  std::istringstream in(kMinimal);
  const RunConfig c = build_config(parse_config_file(in, "/data/run"));
  EXPECT_EQ(fs::path(c.src_test), fs::path("/data/run/s.txt"));
}

TEST(ConfigTest, AllProblemsAreReportedTogether) {
  try {
    config_from("predictors = lm\ndecoder = beem\nbeam = 0\n", {});
    FAIL() << "expected a configuration error";
  } catch (const ConfigError &e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("decoder"), std::string::npos);
    EXPECT_NE(msg.find("beam"), std::string::npos);
    EXPECT_NE(msg.find("src_test"), std::string::npos);
    EXPECT_NE(msg.find("lm_path"), std::string::npos);
  }
}

class CliExitCodeTest : public ::testing::Test {
 protected:
  CliRun run(const std::string &conf, std::vector<std::string> extra = {}) {
    const fs::path p = dir_.write("run.conf", conf);
    std::vector<std::string> args{"decode", "--config", p.string(), "--output_dir",
                                  (dir_.path() / "out").string()};
    args.insert(args.end(), extra.begin(), extra.end());
    return cli(args);
  }
  ScratchDir dir_;
};

TEST_F(CliExitCodeTest, MisspelledDecoderIsConfigError) {
  dir_.write("s.txt", "3\n");
  EXPECT_EQ(run("src_test = s.txt\npredictors = wc\ndecoder = beem\n").code, kExitConfig);
}

TEST_F(CliExitCodeTest, MissingSourceIsConfigError) {
  EXPECT_EQ(run("predictors = wc\n").code, kExitConfig);
}

TEST_F(CliExitCodeTest, WeightCountMismatchIsConfigError) {
  dir_.write("s.txt", "3\n");
  const CliRun r = run("src_test = s.txt\npredictors = wc\npredictor_weights = 1,2\n");
  EXPECT_EQ(r.code, kExitConfig);
  EXPECT_NE(r.err.find("predictor_weights"), std::string::npos);
}

TEST_F(CliExitCodeTest, DfsWithNgramPredictorIsConfigError) {
  dir_.write("s.txt", "3\n");
  const CliRun r = run("src_test = s.txt\npredictors = ngram\nngram_path = missing.ngram\n"
                       "decoder = dfs\n");
  // Refused before the missing resource is even looked at.
  EXPECT_EQ(r.code, kExitConfig);
}

TEST_F(CliExitCodeTest, UnknownFlagIsConfigError) {
  dir_.write("s.txt", "3\n");
  EXPECT_EQ(run("src_test = s.txt\npredictors = wc\n", {"--bogus", "1"}).code, kExitConfig);
}

TEST_F(CliExitCodeTest, EmptyCorpusIsDataError) {
  dir_.write("s.txt", "");
  EXPECT_EQ(run("src_test = s.txt\npredictors = wc\n").code, kExitData);
}

TEST_F(CliExitCodeTest, MissingResourceIsDataError) {
  dir_.write("s.txt", "3\n");
  EXPECT_EQ(run("src_test = s.txt\npredictors = fst\nfst_path = nope/%d.fst\n").code, kExitData);
}

TEST_F(CliExitCodeTest, MalformedArpaIsDataErrorWithLine) {
  dir_.write("s.txt", "3\n");
  dir_.write("bad.arpa", "\\data\\\nngram 1=1\n\n\\1-grams:\nx 3\n\\end\\\n");
  const CliRun r = run("src_test = s.txt\npredictors = lm\nlm_path = bad.arpa\n");
  EXPECT_EQ(r.code, kExitData);
  EXPECT_NE(r.err.find(":5:"), std::string::npos) << r.err;
}

TEST_F(CliExitCodeTest, HelpSucceeds) {
  const CliRun r = cli({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("predictor_weights"), std::string::npos);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitConfig);
}

}  // namespace
}  // namespace ensdec
