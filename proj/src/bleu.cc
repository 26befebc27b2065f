#include "mustshe/bleu.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mustshe {

NgramCounts ngram_counts(const TokenSequence& tokens, int n) {
  if (n < 1) throw std::invalid_argument("ngram order must be >= 1");
  NgramCounts counts;
  const auto order = static_cast<std::size_t>(n);
  if (tokens.size() < order) return counts;
  for (std::size_t i = 0; i + order <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (std::size_t k = 1; k < order; ++k) {
      key += ' ';
      key += tokens[i + k];
    }
    ++counts[key];
  }
  return counts;
}

std::string to_string(BleuDegeneracy d) {
  switch (d) {
    case BleuDegeneracy::kNone: return "none";
    case BleuDegeneracy::kEmptyHypotheses: return "empty-hypotheses";
    case BleuDegeneracy::kZeroDenominator: return "zero-denominator";
    case BleuDegeneracy::kZeroPrecision: return "zero-precision";
  }
  return "unknown";
}

BleuStats& BleuStats::operator+=(const BleuStats& other) {
  for (int n = 0; n < kBleuOrder; ++n) {
    matches[n] += other.matches[n];
    totals[n] += other.totals[n];
  }
  hyp_length += other.hyp_length;
  ref_length += other.ref_length;
  return *this;
}

BleuStats segment_bleu_stats(const TokenSequence& hypothesis, const TokenSequence& reference) {
  BleuStats s;
  s.hyp_length = static_cast<std::int64_t>(hypothesis.size());
  s.ref_length = static_cast<std::int64_t>(reference.size());
  for (int n = 1; n <= kBleuOrder; ++n) {
    const NgramCounts hyp = ngram_counts(hypothesis, n);
    const NgramCounts ref = ngram_counts(reference, n);
    std::int64_t matched = 0, total = 0;
    for (const auto& [gram, count] : hyp) {
      total += count;
      auto it = ref.find(gram);
      if (it != ref.end()) matched += std::min(count, it->second);
    }
    s.matches[n - 1] = matched;
    s.totals[n - 1] = total;
  }
  return s;
}

BleuScore bleu_from_stats(const BleuStats& stats) {
  BleuScore out;
  out.hyp_length = stats.hyp_length;
  out.ref_length = stats.ref_length;
  for (int n = 0; n < kBleuOrder; ++n)
    out.precisions[n] = stats.totals[n] > 0 ? static_cast<double>(stats.matches[n]) / static_cast<double>(stats.totals[n]) : 0.0;

  if (stats.hyp_length == 0) {
    // BP is undefined for c = 0; it stays at 1 and the score at 0.
    out.degeneracy = BleuDegeneracy::kEmptyHypotheses;
    return out;
  }
  const double c = static_cast<double>(stats.hyp_length);
  const double r = static_cast<double>(stats.ref_length);
  out.brevity_penalty = c > r ? 1.0 : std::exp(1.0 - r / c);

  double log_sum = 0.0;
  for (int n = 0; n < kBleuOrder; ++n) {
    if (stats.totals[n] == 0) {
      out.degeneracy = BleuDegeneracy::kZeroDenominator;
      return out;
    }
    if (stats.matches[n] == 0) {
      out.degeneracy = BleuDegeneracy::kZeroPrecision;
      return out;
    }
    log_sum += std::log(out.precisions[n]);
  }
  out.score = 100.0 * out.brevity_penalty * std::exp(log_sum / kBleuOrder);
  return out;
}

BleuScore corpus_bleu(std::span<const TokenSequence> hypotheses, std::span<const TokenSequence> references) {
  if (hypotheses.size() != references.size())
    throw std::invalid_argument("corpus_bleu: " + std::to_string(hypotheses.size()) + " hypotheses vs " +
                                std::to_string(references.size()) + " references");
  if (hypotheses.empty()) throw std::invalid_argument("corpus_bleu: no segments");
  BleuStats total;
  for (std::size_t i = 0; i < hypotheses.size(); ++i) total += segment_bleu_stats(hypotheses[i], references[i]);
  return bleu_from_stats(total);
}

}  // namespace mustshe
