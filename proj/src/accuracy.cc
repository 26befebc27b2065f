#include "mustshe/accuracy.h"

#include <algorithm>
#include <map>

#include "mustshe/unicode.h"

namespace mustshe {

std::optional<double> AccuracyScore::value() const {
  if (total == 0) return std::nullopt;
  return static_cast<double>(matched) / static_cast<double>(total);
}

AccuracyScore& AccuracyScore::operator+=(const AccuracyScore& other) {
  matched += other.matched;
  total += other.total;
  return *this;
}

AccuracyScore term_accuracy(const TokenSequence& hypothesis, std::span<const std::string> terms) {
  std::map<std::string, std::int64_t> wanted;
  for (const auto& t : terms) ++wanted[unicode::fold_case(t)];
  std::map<std::string, std::int64_t> produced;
  for (const auto& tok : hypothesis) {
    std::string folded = unicode::fold_case(tok);
    if (wanted.contains(folded)) ++produced[folded];
  }
  AccuracyScore score;
  score.total = static_cast<std::int64_t>(terms.size());
  for (const auto& [term, count] : wanted) {
    auto it = produced.find(term);
    if (it != produced.end()) score.matched += std::min(count, it->second);
  }
  return score;
}

}  // namespace mustshe
