#include "mustshe/accuracy.h"

#include <gtest/gtest.h>

#include <random>

#include "oracle/bleu_oracle.h"

namespace mustshe {
namespace {

TEST(Accuracy, AllTermsFound) {
  std::vector<std::string> terms = {"nata", "cresciuta"};
  auto a = term_accuracy(tokenize("Sono nata e cresciuta a Mumbai."), terms);
  EXPECT_EQ(a.matched, 2);
  EXPECT_EQ(a.total, 2);
  EXPECT_DOUBLE_EQ(*a.value(), 1.0);
}

TEST(Accuracy, HypothesisRepeatsDoNotInflate) {
  std::vector<std::string> terms = {"una"};
  auto a = term_accuracy({"una", "una", "una"}, terms);
  EXPECT_EQ(a.matched, 1);
  EXPECT_EQ(a.total, 1);
}

TEST(Accuracy, RepeatedTermNeedsRepeatedHit) {
  std::vector<std::string> terms = {"buona", "buona"};
  auto a = term_accuracy({"buona", "cena"}, terms);
  EXPECT_EQ(a.matched, 1);
  EXPECT_EQ(a.total, 2);
}

TEST(Accuracy, CaseInsensitive) {
  std::vector<std::string> terms = {"Nata"};
  EXPECT_EQ(term_accuracy({"NATA"}, terms).matched, 1);
}

TEST(Accuracy, NoTermsHasNoValue) {
  auto a = term_accuracy({"x"}, {});
  EXPECT_EQ(a.total, 0);
  EXPECT_FALSE(a.value().has_value());
}

TEST(Accuracy, AggregatesMicro) {
  AccuracyScore a{1, 2};
  a += AccuracyScore{3, 3};
  EXPECT_DOUBLE_EQ(*a.value(), 4.0 / 5.0);
}

TEST(AccuracyProperty, EqualsMultisetIntersection) {
  std::mt19937_64 rng(21);
  const std::vector<std::string> pool = {"a", "b", "c", "d"};
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<std::string> terms, hyp;
    for (std::size_t i = rng() % 6; i > 0; --i) terms.push_back(pool[rng() % pool.size()]);
    for (std::size_t i = rng() % 8; i > 0; --i) hyp.push_back(pool[rng() % pool.size()]);
    auto a = term_accuracy(hyp, terms);
    EXPECT_EQ(a.matched, static_cast<std::int64_t>(oracle::multiset_intersection(terms, hyp)));
    EXPECT_EQ(a.total, static_cast<std::int64_t>(terms.size()));
    EXPECT_LE(a.matched, a.total);
  }
}

}  // namespace
}  // namespace mustshe
