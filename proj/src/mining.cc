#include "mustshe/mining.h"

#include <unicode/regex.h>
#include <unicode/unistr.h>

#include <algorithm>
#include <set>

#include "mustshe/corpus_io.h"
#include "mustshe/errors.h"
#include "mustshe/tokenizer.h"
#include "mustshe/tsv.h"
#include "mustshe/unicode.h"

namespace mustshe {

class RegexMatcher {
 public:
  explicit RegexMatcher(const std::string& pattern) {
    UParseError parse_error{};
    UErrorCode status = U_ZERO_ERROR;
    pattern_.reset(icu::RegexPattern::compile(icu::UnicodeString::fromUTF8(pattern), 0, parse_error, status));
    if (U_FAILURE(status)) {
      throw std::invalid_argument(std::string(u_errorName(status)) + " at offset " +
                                  std::to_string(parse_error.offset));
    }
  }

  int group_count() const {
    UErrorCode status = U_ZERO_ERROR;
    std::unique_ptr<icu::RegexMatcher> m(pattern_->matcher(status));
    return U_FAILURE(status) ? 0 : m->groupCount();
  }

  bool search(std::string_view text) const {
    UErrorCode status = U_ZERO_ERROR;
    icu::UnicodeString input = icu::UnicodeString::fromUTF8(icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
    std::unique_ptr<icu::RegexMatcher> m(pattern_->matcher(input, status));
    return U_SUCCESS(status) && m->find();
  }

  /// Code point spans of every participating, non-empty capture group across all matches.
  std::vector<Span> capture_spans(std::string_view text) const {
    UErrorCode status = U_ZERO_ERROR;
    icu::UnicodeString input = icu::UnicodeString::fromUTF8(icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
    std::unique_ptr<icu::RegexMatcher> m(pattern_->matcher(input, status));
    std::vector<Span> spans;
    if (U_FAILURE(status)) return spans;
    while (m->find()) {
      for (int g = 1; g <= m->groupCount(); ++g) {
        int32_t b = m->start(g, status), e = m->end(g, status);
        if (U_FAILURE(status) || b < 0 || e <= b) continue;
        spans.emplace_back(static_cast<std::size_t>(input.countChar32(0, b)),
                           static_cast<std::size_t>(input.countChar32(0, e)));
      }
    }
    return spans;
  }

 private:
  std::unique_ptr<icu::RegexPattern> pattern_;
};

namespace {

std::string escape_literal(const std::string& word) {
  static const std::string special = R"(\^$.|?*+()[]{}/-)";
  std::string out;
  for (char c : word) {
    if (special.find(c) != std::string::npos) out += '\\';
    out += c;
  }
  return out;
}

const std::vector<std::string>* list_for(const std::string& name, const WordLists& lists) {
  if (name == "OCC") return &lists.occupations;
  if (name == "ADJ_F") return &lists.adjectives_f;
  if (name == "ADJ_M") return &lists.adjectives_m;
  return nullptr;
}

std::string alternation(const MiningRule& rule, const std::string& name, const std::vector<std::string>& words) {
  std::vector<std::string> entries;
  for (const auto& w : words) {
    std::string t = tsv::trim(w);
    if (t.empty()) continue;
    for (std::size_t pos = 0; pos < t.size();)
      if (unicode::is_space(unicode::next_code_point(t, pos)))
        throw PatternError(rule.id, "word list entry '" + t + "' for {" + name + "} is not a single word");
    entries.push_back(std::move(t));
  }
  if (entries.empty()) throw PatternError(rule.id, "placeholder {" + name + "} expands to an empty word list");
  // Longest first so that a word is never shadowed by one of its prefixes.
  std::sort(entries.begin(), entries.end(), [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
  std::string out = "\\b(?:";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += '|';
    out += escape_literal(entries[i]);
  }
  return out + ")\\b";
}

bool is_identifier_start(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; }
bool is_identifier_char(char c) { return is_identifier_start(c) || (c >= '0' && c <= '9'); }

}  // namespace

std::string expand_placeholders(const MiningRule& rule, std::string_view pattern, const WordLists& lists) {
  std::string out;
  for (std::size_t i = 0; i < pattern.size();) {
    char c = pattern[i];
    if (c == '\\' && i + 1 < pattern.size()) {
      char next = pattern[i + 1];
      // \p{..}, \P{..}, \N{..}, \x{..} carry braces that are not placeholders.
      if ((next == 'p' || next == 'P' || next == 'N' || next == 'x') && i + 2 < pattern.size() && pattern[i + 2] == '{') {
        std::size_t close = pattern.find('}', i + 2);
        if (close == std::string_view::npos) close = pattern.size() - 1;
        out.append(pattern.substr(i, close - i + 1));
        i = close + 1;
      } else {
        out.append(pattern.substr(i, 2));
        i += 2;
      }
      continue;
    }
    if (c == '{' && i + 1 < pattern.size() && is_identifier_start(pattern[i + 1])) {
      std::size_t j = i + 1;
      while (j < pattern.size() && is_identifier_char(pattern[j])) ++j;
      if (j < pattern.size() && pattern[j] == '}') {
        std::string name(pattern.substr(i + 1, j - i - 1));
        const auto* words = list_for(name, lists);
        if (!words) throw PatternError(rule.id, "unknown placeholder {" + name + "}");
        out += alternation(rule, name, *words);
        i = j + 1;
        continue;
      }
    }
    out += c;
    ++i;
  }
  return out;
}

CompiledPatternSet compile_patterns(const std::vector<MiningRule>& rules, const WordLists& lists) {
  CompiledPatternSet set;
  std::set<std::string> ids;
  for (const auto& rule : rules) {
    if (rule.id.empty()) throw Error("mining rule with empty id");
    if (!ids.insert(rule.id).second) throw Error("duplicate mining rule id " + rule.id);
    CompiledRule compiled{rule, expand_placeholders(rule, rule.source_pattern, lists),
                          expand_placeholders(rule, rule.target_pattern, lists), nullptr, nullptr};
    try {
      compiled.source = std::make_shared<const RegexMatcher>(compiled.expanded_source);
    } catch (const std::invalid_argument& e) {
      throw PatternError(rule.id, std::string("source pattern does not compile: ") + e.what());
    }
    try {
      compiled.target = std::make_shared<const RegexMatcher>(compiled.expanded_target);
    } catch (const std::invalid_argument& e) {
      throw PatternError(rule.id, std::string("target pattern does not compile: ") + e.what());
    }
    if (compiled.target->group_count() < 1)
      throw PatternError(rule.id, "target pattern needs a capturing group marking the gender-marked span");
    set.rules.push_back(std::move(compiled));
  }
  std::sort(set.rules.begin(), set.rules.end(),
            [](const CompiledRule& a, const CompiledRule& b) { return a.rule.id < b.rule.id; });
  return set;
}

namespace {

std::string substring_by_code_points(const std::string& text, Span span) {
  std::size_t cp = 0, pos = 0, begin = std::string::npos;
  while (pos <= text.size()) {
    if (cp == span.first) begin = pos;
    if (cp == span.second) return text.substr(begin, pos - begin);
    if (pos == text.size()) break;
    unicode::next_code_point(text, pos);
    ++cp;
  }
  return {};
}

/// Sorted, non-overlapping spans that each cover at least one token.
std::vector<Span> clean_spans(const std::string& target, std::vector<Span> spans) {
  std::sort(spans.begin(), spans.end(), [](const Span& a, const Span& b) {
    return a.first != b.first ? a.first < b.first : a.second > b.second;
  });
  std::vector<Span> out;
  for (const auto& s : spans) {
    if (!out.empty() && s.first < out.back().second) continue;
    if (tokenize(substring_by_code_points(target, s)).empty()) continue;
    out.push_back(s);
  }
  return out;
}

std::optional<std::vector<Span>> apply_rule(const CompiledRule& rule, const std::string& source,
                                            const std::string& target) {
  if (!rule.source->search(source)) return std::nullopt;
  if (!rule.target->search(target)) return std::nullopt;
  auto spans = clean_spans(target, rule.target->capture_spans(target));
  if (spans.empty()) return std::nullopt;
  return spans;
}

}  // namespace

std::vector<std::string> Candidate::span_texts() const {
  std::vector<std::string> out;
  for (const auto& s : matched_spans) out.push_back(substring_by_code_points(target, s));
  return out;
}

std::vector<Candidate> mine(const std::vector<SentencePair>& pairs, const CompiledPatternSet& patterns,
                            const std::map<std::string, SpeakerGender>* speakers) {
  std::vector<Candidate> out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const SentencePair& p = pairs[i];
    for (const auto& rule : patterns.rules) {
      auto spans = apply_rule(rule, p.source, p.target);
      if (!spans) continue;
      Candidate c;
      c.id = (p.talk.empty() ? std::string("pair") : p.talk) + "-" + std::to_string(i) + "-" + rule.rule.id;
      c.pair_index = i;
      c.talk = p.talk;
      c.source = p.source;
      c.target = p.target;
      c.rule_id = rule.rule.id;
      c.category = rule.rule.category;
      c.form = rule.rule.form;
      c.matched_spans = std::move(*spans);
      if (speakers) {
        auto it = speakers->find(p.talk);
        if (it != speakers->end()) c.speaker = it->second;
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

bool rematches(const Candidate& candidate, const CompiledRule& rule) {
  if (candidate.rule_id != rule.rule.id || candidate.category != rule.rule.category ||
      candidate.form != rule.rule.form)
    return false;
  auto spans = apply_rule(rule, candidate.source, candidate.target);
  return spans && *spans == candidate.matched_spans;
}

namespace {

struct HeaderIndex {
  std::map<std::string, std::size_t> pos;
  std::size_t width = 0;

  HeaderIndex(std::string_view line, const std::vector<std::string>& required, std::size_t line_no) {
    auto fields = tsv::split(line, "\t");
    width = fields.size();
    for (std::size_t i = 0; i < fields.size(); ++i) pos.emplace(tsv::trim(fields[i]), i);
    for (const auto& r : required)
      if (!pos.contains(r)) throw ParseError("header is missing column " + r, line_no);
  }
  const std::string& get(const std::vector<std::string>& row, const std::string& name) const {
    return row[pos.at(name)];
  }
};

/// Non-comment, non-blank lines with their 1-based numbers.
std::vector<std::pair<std::size_t, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  auto ls = tsv::lines(unicode::strip_bom(text));
  for (std::size_t i = 0; i < ls.size(); ++i)
    if (!tsv::is_comment_or_blank(ls[i])) out.emplace_back(i + 1, ls[i]);
  return out;
}

std::vector<std::string> row_fields(std::string_view line, std::size_t width, std::size_t line_no) {
  auto fields = tsv::split(line, "\t");
  if (fields.size() != width)
    throw ParseError("expected " + std::to_string(width) + " fields, found " + std::to_string(fields.size()), line_no);
  return fields;
}

}  // namespace

std::vector<MiningRule> parse_rules(std::string_view tsv_text) {
  auto ls = content_lines(tsv_text);
  if (ls.empty()) throw ParseError("empty rules file");
  const std::vector<std::string> cols = {"RULE-ID", "LANG-PAIR", "CATEGORY", "FORM", "SRC-PATTERN", "TGT-PATTERN"};
  HeaderIndex h(ls[0].second, cols, ls[0].first);
  std::vector<MiningRule> rules;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    auto row = row_fields(ls[i].second, h.width, ls[i].first);
    MiningRule r;
    r.id = tsv::trim(h.get(row, "RULE-ID"));
    r.language_pair = tsv::trim(h.get(row, "LANG-PAIR"));
    auto c = category_from_code(tsv::trim(h.get(row, "CATEGORY")));
    auto f = form_from_code(tsv::trim(h.get(row, "FORM")));
    if (!c) throw ParseError("CATEGORY must be 1 or 2", ls[i].first);
    if (!f) throw ParseError("FORM must be F or M", ls[i].first);
    r.category = *c;
    r.form = *f;
    r.source_pattern = h.get(row, "SRC-PATTERN");
    r.target_pattern = h.get(row, "TGT-PATTERN");
    rules.push_back(std::move(r));
  }
  return rules;
}

std::vector<std::string> parse_word_list(std::string_view text) {
  std::vector<std::string> words;
  for (const auto& [line_no, line] : content_lines(text)) words.push_back(tsv::trim(line));
  return words;
}

std::vector<SentencePair> parse_sentence_pairs(std::string_view tsv_text) {
  auto ls = tsv::lines(unicode::strip_bom(tsv_text));
  if (ls.empty() || ls[0].empty()) throw ParseError("empty sentence-pair file");
  HeaderIndex h(ls[0], {"TALK", "SRC", "TGT"}, 1);
  std::vector<SentencePair> pairs;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    if (ls[i].empty()) continue;
    auto row = row_fields(ls[i], h.width, i + 1);
    pairs.push_back({h.get(row, "TALK"), h.get(row, "SRC"), h.get(row, "TGT")});
  }
  return pairs;
}

std::map<std::string, SpeakerGender> parse_speakers(std::string_view tsv_text) {
  auto ls = content_lines(tsv_text);
  if (ls.empty()) throw ParseError("empty speaker file");
  HeaderIndex h(ls[0].second, {"TALK", "SPEAKER"}, ls[0].first);
  std::map<std::string, SpeakerGender> out;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    auto row = row_fields(ls[i].second, h.width, ls[i].first);
    auto s = speaker_from_code(tsv::trim(h.get(row, "SPEAKER")));
    if (!s) throw ParseError("SPEAKER must be F or M", ls[i].first);
    std::string talk = tsv::trim(h.get(row, "TALK"));
    auto [it, inserted] = out.emplace(talk, *s);
    if (!inserted && it->second != *s) throw ParseError("conflicting speaker gender for talk " + talk, ls[i].first);
  }
  return out;
}

std::string serialize_candidates(const std::vector<Candidate>& candidates) {
  std::vector<std::string> header = kCorpusColumns;
  header.push_back("RULE-ID");
  header.push_back("SPAN");
  std::string out = tsv::join(header, "\t") + "\n";
  for (const auto& c : candidates) {
    std::string spans;
    for (std::size_t i = 0; i < c.matched_spans.size(); ++i) {
      if (i) spans += ';';
      spans += std::to_string(c.matched_spans[i].first) + "-" + std::to_string(c.matched_spans[i].second);
    }
    for (const std::string* f : {&c.id, &c.talk, &c.source, &c.target, &c.wrong_target})
      if (f->find_first_of("\t\n\r") != std::string::npos)
        throw Error("candidate " + c.id + " has a field with a tab or line break");
    out += tsv::join({c.id, c.talk, c.source, c.target, c.wrong_target,
                      c.speaker ? std::string(to_code(*c.speaker)) : std::string(), std::string(to_code(c.form)),
                      std::string(to_code(c.category)), format_terms(c.terms), c.rule_id, spans},
                     "\t");
    out += '\n';
  }
  return out;
}

std::vector<Candidate> parse_candidates(std::string_view tsv_text) {
  auto ls = tsv::lines(unicode::strip_bom(tsv_text));
  if (ls.empty() || ls[0].empty()) throw ParseError("empty candidates file");
  std::vector<std::string> required = kCorpusColumns;
  required.push_back("RULE-ID");
  required.push_back("SPAN");
  HeaderIndex h(ls[0], required, 1);
  std::vector<Candidate> out;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    if (ls[i].empty()) continue;
    const std::size_t line_no = i + 1;
    auto row = row_fields(ls[i], h.width, line_no);
    Candidate c;
    c.id = h.get(row, "ID");
    c.pair_index = out.size();
    c.talk = h.get(row, "TALK");
    c.source = h.get(row, "SRC");
    c.target = h.get(row, "REF-C");
    c.wrong_target = h.get(row, "REF-W");
    c.rule_id = h.get(row, "RULE-ID");
    const std::string& speaker = h.get(row, "SPEAKER");
    if (!speaker.empty()) {
      c.speaker = speaker_from_code(speaker);
      if (!c.speaker) throw ParseError("SPEAKER must be F, M or empty", line_no);
    }
    auto f = form_from_code(h.get(row, "FORM"));
    auto cat = category_from_code(h.get(row, "CATEGORY"));
    if (!f) throw ParseError("FORM must be F or M", line_no);
    if (!cat) throw ParseError("CATEGORY must be 1 or 2", line_no);
    c.form = *f;
    c.category = *cat;
    const std::string& terms = h.get(row, "TERMS");
    if (!terms.empty()) {
      for (const auto& piece : tsv::split(terms, ";")) {
        auto forms = tsv::split(piece, ":");
        if (forms.size() != 2 || forms[0].empty() || forms[1].empty())
          throw ParseError("bad TERMS entry '" + piece + "'", line_no);
        c.terms.push_back({forms[0], forms[1]});
      }
    }
    const std::string& spans = h.get(row, "SPAN");
    if (!spans.empty()) {
      for (const auto& piece : tsv::split(spans, ";")) {
        auto ends = tsv::split(piece, "-");
        try {
          if (ends.size() != 2) throw std::invalid_argument("shape");
          std::size_t used_b = 0, used_e = 0;
          unsigned long b = std::stoul(ends[0], &used_b), e = std::stoul(ends[1], &used_e);
          if (used_b != ends[0].size() || used_e != ends[1].size() || e <= b) throw std::invalid_argument("range");
          c.matched_spans.emplace_back(b, e);
        } catch (const std::exception&) {
          throw ParseError("bad SPAN entry '" + piece + "'", line_no);
        }
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace mustshe
