#include "mustshe/validate.h"

#include <gtest/gtest.h>

#include <algorithm>

#include "test_util.h"

namespace mustshe {
namespace {

TripletRecord good() {
  return {"it-1", "t1", "I was born and brought up in Mumbai.", "Sono nata e cresciuta a Mumbai.",
          "Sono nato e cresciuto a Mumbai.", SpeakerGender::kFemale, GenderForm::kFeminine, Category::kCat1,
          {{"nata", "nato"}, {"cresciuta", "cresciuto"}}};
}

bool has_kind(const std::vector<ValidationIssue>& issues, IssueKind kind, Severity sev = Severity::kError) {
  return std::any_of(issues.begin(), issues.end(),
                     [&](const ValidationIssue& i) { return i.kind == kind && i.severity == sev; });
}

TEST(Validate, FixturesAreClean) {
  for (const char* path : {"tests/fixtures/four_cells.en-it.tsv", "tests/fixtures/four_cells.en-fr.tsv"}) {
    auto issues = validate(parse_corpus(testing::read_text(path), "x"));
    EXPECT_TRUE(issues.empty()) << path << ": " << (issues.empty() ? "" : issues[0].message);
  }
}

TEST(Validate, RandomCorporaAreClean) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    testing::RandomCorpus gen(seed);
    EXPECT_FALSE(has_errors(validate(gen.corpus(20))));
  }
}

TEST(Validate, TermMissingFromReference) {
  auto r = good();
  r.terms.push_back({"stanca", "stanco"});
  EXPECT_TRUE(has_kind(validate_record(r), IssueKind::kTermNotInRef));
}

TEST(Validate, TermCountedAsMultiset) {
  auto r = good();
  r.terms.push_back({"nata", "nato"});
  EXPECT_TRUE(has_kind(validate_record(r), IssueKind::kTermNotInRef));
}

TEST(Validate, ReferenceLengthMismatch) {
  auto r = good();
  r.ref_wrong = "Sono nato e cresciuto a Mumbai , India .";
  EXPECT_TRUE(has_kind(validate_record(r), IssueKind::kRefLengthMismatch));
}

TEST(Validate, DifferenceOutsideTerms) {
  auto r = good();
  r.ref_wrong = "Sono nato e cresciuto a Roma.";
  EXPECT_TRUE(has_kind(validate_record(r), IssueKind::kDiffOutsideTerms));
}

TEST(Validate, TermPairWithoutDifference) {
  auto r = good();
  r.ref_correct = "Sono nata e nato a Mumbai.";
  r.ref_wrong = "Sono nato e nata a Mumbai.";
  r.terms = {{"nata", "nato"}};
  auto issues = validate_record(r);
  EXPECT_TRUE(has_kind(issues, IssueKind::kDiffOutsideTerms));
  EXPECT_TRUE(has_kind(issues, IssueKind::kTermNotInRef, Severity::kWarning));
}

TEST(Validate, IdenticalPairIgnoresCase) {
  auto r = good();
  r.terms[0] = {"Nata", "nata"};
  EXPECT_TRUE(has_kind(validate_record(r), IssueKind::kIdenticalPair));
}

TEST(Validate, DuplicateId) {
  Corpus c{"en-it", {good(), good()}};
  EXPECT_TRUE(has_kind(validate(c), IssueKind::kDuplicateId));
}

TEST(Validate, BadFields) {
  auto r = good();
  r.source = "";
  EXPECT_TRUE(has_kind(validate_record(r), IssueKind::kBadField));
  r = good();
  r.terms.clear();
  EXPECT_TRUE(has_kind(validate_record(r), IssueKind::kBadField));
  r = good();
  r.terms[0].correct_form = "nata e";
  EXPECT_TRUE(has_kind(validate_record(r), IssueKind::kBadField));
}

TEST(Validate, ParseNotesBecomeHeaderWarnings) {
  Corpus c{"en-it", {good()}};
  auto issues = validate(c, {{1, "ignored unknown column 'X'"}});
  ASSERT_EQ(issues.size(), 1u);
  EXPECT_EQ(issues[0].record_id, kHeaderRecordId);
  EXPECT_EQ(issues[0].severity, Severity::kWarning);
  EXPECT_FALSE(has_errors(issues));
}

TEST(Validate, InvalidFixtureIsCaught) {
  auto issues = validate(parse_corpus(testing::read_text("tests/fixtures/four_cells.en-it.invalid.tsv"), "en-it"));
  EXPECT_TRUE(has_errors(issues));
  for (const auto& i : issues) EXPECT_EQ(i.record_id, "it-0002");
}

}  // namespace
}  // namespace mustshe
