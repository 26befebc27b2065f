#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mustshe/bleu.h"
#include "mustshe/corpus.h"
#include "mustshe/tokenizer.h"

namespace mustshe {

/// System output, one line per corpus record, strictly positional.
struct Hypotheses {
  std::vector<std::string> lines;

  /// Splits on LF. A single trailing newline does not create an extra line; a
  /// CR before the LF is dropped.
  static Hypotheses from_text(std::string_view text);
};

/// A metric on the correct and wrong references. diff == correct - wrong.
struct MetricTriplet {
  double correct = 0.0;
  double wrong = 0.0;
  double diff = 0.0;

  static MetricTriplet make(double correct, double wrong) { return {correct, wrong, correct - wrong}; }
};

struct BleuTriplet {
  MetricTriplet metric;
  BleuScore correct_detail;
  BleuScore wrong_detail;
};

struct AccuracyTriplet {
  MetricTriplet metric;  // fractions in [0, 1]
  std::int64_t matched_correct = 0;
  std::int64_t matched_wrong = 0;
  std::int64_t total = 0;
};

/// Both functions throw EmptyViewError on an empty view and AlignmentError when
/// the hypotheses do not cover the view's underlying corpus.
BleuTriplet bleu_triplet(const CorpusView& view, const Hypotheses& hyps);
AccuracyTriplet accuracy_triplet(const CorpusView& view, const Hypotheses& hyps);

enum class Split { kOverall, kCat1, kCat2 };
enum class FormColumn { kAll, kFeminine, kMasculine };

inline constexpr std::array<Split, 3> kSplits = {Split::kOverall, Split::kCat1, Split::kCat2};
inline constexpr std::array<FormColumn, 3> kFormColumns = {FormColumn::kAll, FormColumn::kFeminine,
                                                          FormColumn::kMasculine};

std::string_view display_name(Split s);
std::string_view display_name(FormColumn f);
Selector selector_for(Split s, FormColumn f);

struct ReportCell {
  std::int64_t n_records = 0;
  std::int64_t n_terms = 0;
  BleuTriplet bleu;
  AccuracyTriplet accuracy;
};

struct EvalReport {
  std::string corpus_id;
  std::string hypotheses_id;
  // cells[split][form]; nullopt when the view is empty.
  std::array<std::array<std::optional<ReportCell>, 3>, 3> cells;

  const std::optional<ReportCell>& cell(Split s, FormColumn f) const {
    return cells[static_cast<int>(s)][static_cast<int>(f)];
  }
};

/// Fills all nine cells. Throws AlignmentError when |hyps| != |corpus|.
EvalReport evaluate(const Corpus& corpus, const Hypotheses& hyps, std::string corpus_id = {},
                    std::string hypotheses_id = {});

}  // namespace mustshe
