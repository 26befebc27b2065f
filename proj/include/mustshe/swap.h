#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mustshe/corpus.h"
#include "mustshe/errors.h"

namespace mustshe {

struct SuffixRule {
  std::string masculine_suffix;
  std::string feminine_suffix;
  int priority = 0;  // higher wins
};

/// Per-language gender-swap knowledge: irregular word pairs plus suffix rules.
class SwapLexicon {
 public:
  /// Registers masc <-> fem in both directions. Throws Error if either form is
  /// already paired with a different word, or if the forms are equal.
  void add_exception(const std::string& language, const std::string& masculine,
                     const std::string& feminine);
  /// Throws Error on a duplicate priority, a repeated suffix pair, or an empty suffix.
  void add_suffix_rule(const std::string& language, SuffixRule rule);

  const std::map<std::string, std::string>* exceptions(const std::string& language) const;
  /// Sorted by descending priority.
  const std::vector<SuffixRule>* suffix_rules(const std::string& language) const;
  std::vector<std::string> languages() const;

  /// Rows `LANG MASC FEM` are exceptions, rows `LANG MASC-SUFFIX FEM-SUFFIX PRIORITY`
  /// suffix rules. '#' comments and blank lines are skipped.
  static SwapLexicon parse(std::string_view tsv_text);

 private:
  // Keys are case-folded.
  std::map<std::string, std::map<std::string, std::string>> exceptions_;
  std::map<std::string, std::vector<SuffixRule>> suffix_rules_;
};

/// Swaps a single token to its opposite gender form. The exception lexicon wins;
/// otherwise the highest-priority matching suffix rule applies, longest suffix
/// first on ties. A suffix swap is accepted only if swapping the result maps back
/// to the input. Throws NoRuleError when nothing applies.
std::string swap_token(std::string_view token, const std::string& language,
                       const SwapLexicon& lexicon);

struct SwapResult {
  std::string wrong_reference;
  std::vector<GenderTermPair> pairs;  // in reference order
};

/// Failure of swap_terms; lists every term that could not be handled.
class SwapTermsError : public Error {
 public:
  SwapTermsError(std::vector<std::string> missing, std::vector<std::string> no_rule);
  const std::vector<std::string>& missing_terms() const { return missing_; }
  const std::vector<std::string>& no_rule_terms() const { return no_rule_; }

 private:
  std::vector<std::string> missing_;
  std::vector<std::string> no_rule_;
};

/// Replaces the leftmost occurrences of each term token (as many as listed) with
/// their swapped form. Everything else in the NFC-normalized reference is kept
/// byte for byte.
SwapResult swap_terms(std::string_view reference, const std::vector<std::string>& term_tokens,
                      const std::string& language, const SwapLexicon& lexicon);

}  // namespace mustshe
