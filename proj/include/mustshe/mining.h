#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mustshe/corpus.h"

namespace mustshe {

/// A gender-agreement rule expressed as a pair of regular expressions. Patterns
/// may reference word lists through {OCC}, {ADJ_F} and {ADJ_M}. The target
/// pattern's capturing groups mark the gender-marked spans.
struct MiningRule {
  std::string id;
  std::string language_pair;
  Category category = Category::kCat1;
  GenderForm form = GenderForm::kFeminine;
  std::string source_pattern;
  std::string target_pattern;
};

struct WordLists {
  std::vector<std::string> occupations;   // source language nouns
  std::vector<std::string> adjectives_f;  // target feminine adjectives
  std::vector<std::string> adjectives_m;  // target masculine adjectives
};

class RegexMatcher;

struct CompiledRule {
  MiningRule rule;
  std::string expanded_source;
  std::string expanded_target;
  std::shared_ptr<const RegexMatcher> source;
  std::shared_ptr<const RegexMatcher> target;
};

/// Rules sorted by id, ready for mining. Immutable and shareable across threads.
struct CompiledPatternSet {
  std::vector<CompiledRule> rules;
};

/// Half-open code point range [begin, end) into the target sentence.
using Span = std::pair<std::size_t, std::size_t>;

struct Candidate {
  std::string id;  // <talk>-<pair index>-<rule id>
  std::size_t pair_index = 0;
  std::string talk;
  std::string source;
  std::string target;
  std::string rule_id;
  Category category = Category::kCat1;
  GenderForm form = GenderForm::kFeminine;
  std::vector<Span> matched_spans;
  std::optional<SpeakerGender> speaker;
  // Filled by the swap step; empty straight out of the miner.
  std::string wrong_target;
  std::vector<GenderTermPair> terms;

  /// Target text covered by each span.
  std::vector<std::string> span_texts() const;
};

struct SentencePair {
  std::string talk;
  std::string source;
  std::string target;
};

/// Expands placeholders and compiles every rule. Throws PatternError naming the
/// rule for unknown placeholders, empty expansions, invalid regular expressions,
/// or a target pattern without a capturing group. Throws Error on duplicate ids.
CompiledPatternSet compile_patterns(const std::vector<MiningRule>& rules, const WordLists& lists);

/// Placeholder expansion only; exposed for tests and diagnostics.
std::string expand_placeholders(const MiningRule& rule, std::string_view pattern,
                                const WordLists& lists);

/// One Candidate per (pair, rule) where both patterns match, ordered by pair
/// index then rule id. Speakers are attached by talk when `speakers` is given.
std::vector<Candidate> mine(const std::vector<SentencePair>& pairs, const CompiledPatternSet& patterns,
                            const std::map<std::string, SpeakerGender>* speakers = nullptr);

/// True if `candidate` is reproduced by running `rule` alone on its pair.
bool rematches(const Candidate& candidate, const CompiledRule& rule);

// File formats.

/// Header `RULE-ID LANG-PAIR CATEGORY FORM SRC-PATTERN TGT-PATTERN`; '#' lines are comments.
std::vector<MiningRule> parse_rules(std::string_view tsv_text);
/// One entry per line; blank lines and '#' comments skipped.
std::vector<std::string> parse_word_list(std::string_view text);
/// Header `TALK SRC TGT`.
std::vector<SentencePair> parse_sentence_pairs(std::string_view tsv_text);
/// Header `TALK SPEAKER`, SPEAKER in {F, M}.
std::map<std::string, SpeakerGender> parse_speakers(std::string_view tsv_text);

/// Corpus columns followed by RULE-ID and SPAN (`begin-end` pairs joined by ';').
std::string serialize_candidates(const std::vector<Candidate>& candidates);
std::vector<Candidate> parse_candidates(std::string_view tsv_text);

}  // namespace mustshe
