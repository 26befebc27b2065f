#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>

#include "mustshe/tokenizer.h"

namespace mustshe {

inline constexpr int kBleuOrder = 4;

/// N-gram multiset. Keys are the n tokens joined by a single space, which is
/// unambiguous because tokens never contain whitespace.
using NgramCounts = std::unordered_map<std::string, std::int64_t>;

/// Every contiguous window of `n` tokens with multiplicity. Throws std::invalid_argument for n < 1.
NgramCounts ngram_counts(const TokenSequence& tokens, int n);

enum class BleuDegeneracy {
  kNone,
  kEmptyHypotheses,   // c == 0
  kZeroDenominator,   // no hypothesis n-grams for some order
  kZeroPrecision,     // some order has no clipped match
};

std::string to_string(BleuDegeneracy d);

/// Sufficient statistics of corpus BLEU. Additive over segments.
struct BleuStats {
  std::array<std::int64_t, kBleuOrder> matches{};
  std::array<std::int64_t, kBleuOrder> totals{};
  std::int64_t hyp_length = 0;
  std::int64_t ref_length = 0;

  BleuStats& operator+=(const BleuStats& other);
};

BleuStats segment_bleu_stats(const TokenSequence& hypothesis, const TokenSequence& reference);

struct BleuScore {
  double score = 0.0;                          // [0, 100]
  std::array<double, kBleuOrder> precisions{};  // modified n-gram precisions p1..p4
  double brevity_penalty = 1.0;
  std::int64_t hyp_length = 0;
  std::int64_t ref_length = 0;
  BleuDegeneracy degeneracy = BleuDegeneracy::kNone;

  bool degenerate() const { return degeneracy != BleuDegeneracy::kNone; }
};

/// Case-sensitive, unsmoothed BLEU-4 from accumulated statistics.
BleuScore bleu_from_stats(const BleuStats& stats);

/// Corpus-level BLEU-4, single reference per segment. Throws std::invalid_argument
/// when the lists differ in length or are empty.
BleuScore corpus_bleu(std::span<const TokenSequence> hypotheses,
                      std::span<const TokenSequence> references);

}  // namespace mustshe
