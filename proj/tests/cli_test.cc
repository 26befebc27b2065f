#include "mustshe/cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "test_util.h"

namespace mustshe {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return testing::source_path("tests/fixtures/" + name); }
std::string data(const std::string& name) { return testing::source_path("data/" + name); }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("mustshe-cli-" + std::to_string(::getpid()) + "-" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    auto p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

TEST_F(CliTest, HelpAndUsageErrors) {
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
  EXPECT_NE(run({"--help"}).out.find("eval"), std::string::npos);
  EXPECT_EQ(run({"eval", "--help"}).code, cli::kOk);
  EXPECT_EQ(run({}).code, cli::kUsageError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsageError);
  EXPECT_EQ(run({"eval", "--corpus", fixture("four_cells.en-it.tsv")}).code, cli::kUsageError);
  EXPECT_EQ(run({"eval", "--corpus", "x", "--hyp", "y", "--bogus"}).code, cli::kUsageError);
  EXPECT_EQ(run({"eval", "--corpus", fixture("four_cells.en-it.tsv"), "--hyp",
                 fixture("four_cells.en-it.hyp-correct.txt"), "--format", "html"})
                .code,
            cli::kUsageError);
  EXPECT_EQ(run({"balance", "--candidates", "x", "--quota", "lots"}).code, cli::kUsageError);
}

TEST_F(CliTest, MissingFileIsIoError) {
  auto r = run({"validate", "--corpus", path("nope.tsv")});
  EXPECT_EQ(r.code, cli::kIoError);
  EXPECT_FALSE(r.err.empty());
}

TEST_F(CliTest, ValidateExitCodes) {
  EXPECT_EQ(run({"validate", "--corpus", fixture("four_cells.en-it.tsv")}).code, cli::kOk);
  auto bad = run({"validate", "--corpus", fixture("four_cells.en-it.invalid.tsv"), "--format", "tsv"});
  EXPECT_EQ(bad.code, cli::kValidationFailure);
  EXPECT_NE(bad.out.find("it-0002"), std::string::npos);
  EXPECT_EQ(run({"validate", "--corpus", write("broken.tsv", "ID\tTALK\nx\ty\n")}).code, cli::kValidationFailure);
}

TEST_F(CliTest, EvalWritesReport) {
  auto r = run({"eval", "--corpus", fixture("four_cells.en-it.tsv"), "--hyp",
                fixture("four_cells.en-it.hyp-correct.txt")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_TRUE(r.out.starts_with("# Gender translation evaluation"));
  EXPECT_NE(r.out.find("| All | 100.0 | 0.0 | 100.0 |"), std::string::npos);
}

TEST_F(CliTest, EvalAlignmentAndValidationFailures) {
  auto misaligned = run({"eval", "--corpus", fixture("four_cells.en-it.tsv"), "--hyp",
                         fixture("four_cells.en-it.hyp-short.txt")});
  EXPECT_EQ(misaligned.code, cli::kValidationFailure);
  EXPECT_NE(misaligned.err.find("3 lines but corpus has 4 records"), std::string::npos);
  EXPECT_TRUE(misaligned.out.empty());

  std::vector<std::string> invalid = {"eval", "--corpus", fixture("four_cells.en-it.invalid.tsv"), "--hyp",
                                      fixture("four_cells.en-it.hyp-correct.txt"), "--format", "tsv"};
  EXPECT_EQ(run(invalid).code, cli::kValidationFailure);
  invalid.push_back("--force");
  auto forced = run(invalid);
  EXPECT_EQ(forced.code, cli::kOk);
  EXPECT_NE(forced.out.find("Overall/All\taccuracy\t100.0000\t0.0000\t100.0000\t3\t11\n"), std::string::npos);
}

TEST_F(CliTest, OutputIsByteIdenticalAcrossRunsAndSinks) {
  for (const std::string fmt : {"md", "tsv", "json"}) {
    std::vector<std::string> args = {"eval", "--corpus", fixture("four_cells.en-it.tsv"), "--hyp",
                                     fixture("four_cells.en-it.hyp-wrong.txt"), "--format", fmt};
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    args.insert(args.end(), {"-o", path("report." + fmt)});
    EXPECT_EQ(run(args).code, cli::kOk);
    EXPECT_EQ(slurp(path("report." + fmt)), a.out);
  }
}

TEST_F(CliTest, StatsWithCommonSubset) {
  auto r = run({"stats", "--corpus", fixture("four_cells.en-it.tsv"), "--common-with",
                fixture("four_cells.en-fr.tsv"), "--format", "tsv"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("common_subset\t3\n"), std::string::npos);
}

TEST_F(CliTest, StatsThroughColumnMapping) {
  std::string official = write("official.tsv",
                               "ID\tLANG\tTALK\tSRC\tREF\tWRONG-REF\tSPEAKER\tCATEGORY\tTEXT-CATEGORY\tGENDERTERMS\n"
                               "it-0001\tit\t1\tI was born.\tSono nata.\tSono nato.\tShe\t1F\tx\tnata;nato\n"
                               "it-0002\tit\t2\tHe is tired.\tÈ stanco.\tÈ stanca.\tHe\t2M\tx\tstanco;stanca\n");
  auto r = run({"stats", "--corpus", official, "--mapping", data("mappings/must-she-v1.json"), "--format", "tsv"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.out, run({"stats", "--corpus", official, "--mapping", data("mappings/must-she-v1.json"), "--format",
                        "tsv"}).out);
  EXPECT_EQ(run({"stats", "--corpus", official}).code, cli::kValidationFailure);
}

TEST_F(CliTest, MineBalanceSwapPipeline) {
  std::string pairs = write("pairs.tsv",
                            "TALK\tSRC\tTGT\n"
                            "t1\tI was born and brought up in Mumbai.\tSono nata e cresciuta a Mumbai.\n"
                            "t2\tHe was very tired.\tEra molto stanco.\n"
                            "t3\tNothing to see.\tNiente da vedere.\n");
  std::string speakers = write("speakers.tsv", "TALK\tSPEAKER\nt1\tF\nt2\tM\n");
  auto mined = run({"mine", "--pairs", pairs, "--rules", data("rules/en-it.tsv"), "--occupations",
                    data("wordlists/occupations.en.txt"), "--adj-f", data("wordlists/adjectives.it.f.txt"), "--adj-m",
                    data("wordlists/adjectives.it.m.txt"), "--speakers", speakers, "-o", path("cands.tsv")});
  ASSERT_EQ(mined.code, cli::kOk) << mined.err;

  auto bal1 = run({"balance", "--candidates", path("cands.tsv"), "--quota", "1", "--seed", "3"});
  auto bal2 = run({"balance", "--candidates", path("cands.tsv"), "--quota", "1", "--seed", "3"});
  ASSERT_EQ(bal1.code, cli::kOk) << bal1.err;
  EXPECT_EQ(bal1.out, bal2.out);
  EXPECT_NE(bal1.err.find("shortfall"), std::string::npos);

  auto swapped = run({"swap", "--lang", "it", "--lexicon", data("lexicon/it.tsv"), "--input", path("cands.tsv")});
  ASSERT_EQ(swapped.code, cli::kOk) << swapped.err;
  EXPECT_NE(swapped.out.find("Sono nato e cresciuto a Mumbai."), std::string::npos);
}

TEST_F(CliTest, SwapSingleToken) {
  auto ok = run({"swap", "--lang", "it", "--lexicon", data("lexicon/it.tsv"), "--token", "nata"});
  EXPECT_EQ(ok.code, cli::kOk);
  EXPECT_EQ(ok.out, "nato\n");
  EXPECT_EQ(run({"swap", "--lang", "it", "--lexicon", data("lexicon/it.tsv"), "--token", "xyzq"}).code,
            cli::kValidationFailure);
  EXPECT_EQ(run({"swap", "--lang", "it", "--lexicon", data("lexicon/it.tsv"), "--token", "a", "--input", "b"}).code,
            cli::kUsageError);
}

}  // namespace
}  // namespace mustshe
