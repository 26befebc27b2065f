#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "mustshe/tokenizer.h"

namespace mustshe {

struct AccuracyScore {
  std::int64_t matched = 0;
  std::int64_t total = 0;

  /// matched / total, or nullopt when total == 0.
  std::optional<double> value() const;
  AccuracyScore& operator+=(const AccuracyScore& other);
};

/// Clipped gender-term matching: each annotated term can be matched at most as
/// many times as it is listed. Both sides are case-folded.
AccuracyScore term_accuracy(const TokenSequence& hypothesis, std::span<const std::string> terms);

}  // namespace mustshe
