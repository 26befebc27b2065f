#include "mustshe/swap.h"

#include <algorithm>
#include <optional>

#include "mustshe/tokenizer.h"
#include "mustshe/tsv.h"
#include "mustshe/unicode.h"

namespace mustshe {

void SwapLexicon::add_exception(const std::string& language, const std::string& masculine, const std::string& feminine) {
  const std::string m = unicode::fold_case(masculine), f = unicode::fold_case(feminine);
  if (m.empty() || f.empty()) throw Error("empty exception form for language " + language);
  if (m == f) throw Error("exception pair " + masculine + "/" + feminine + " has identical forms");
  auto& table = exceptions_[language];
  for (const auto& [key, value] : {std::pair{m, feminine}, std::pair{f, masculine}}) {
    auto it = table.find(key);
    if (it != table.end() && unicode::fold_case(it->second) != unicode::fold_case(value))
      throw Error("'" + key + "' is already paired with '" + it->second + "' in language " + language);
    table[key] = value;
  }
}

void SwapLexicon::add_suffix_rule(const std::string& language, SuffixRule rule) {
  rule.masculine_suffix = unicode::fold_case(rule.masculine_suffix);
  rule.feminine_suffix = unicode::fold_case(rule.feminine_suffix);
  if (rule.masculine_suffix.empty() || rule.feminine_suffix.empty())
    throw Error("empty suffix in rule for language " + language);
  if (rule.masculine_suffix == rule.feminine_suffix)
    throw Error("suffix rule -" + rule.masculine_suffix + " maps to itself");
  auto& rules = suffix_rules_[language];
  for (const auto& r : rules) {
    if (r.priority == rule.priority)
      throw Error("duplicate suffix rule priority " + std::to_string(rule.priority) + " for language " + language);
    if (r.masculine_suffix == rule.masculine_suffix && r.feminine_suffix == rule.feminine_suffix)
      throw Error("duplicate suffix rule -" + rule.masculine_suffix + "/-" + rule.feminine_suffix);
  }
  rules.push_back(std::move(rule));
  std::sort(rules.begin(), rules.end(), [](const SuffixRule& a, const SuffixRule& b) { return a.priority > b.priority; });
}

const std::map<std::string, std::string>* SwapLexicon::exceptions(const std::string& language) const {
  auto it = exceptions_.find(language);
  return it == exceptions_.end() ? nullptr : &it->second;
}

const std::vector<SuffixRule>* SwapLexicon::suffix_rules(const std::string& language) const {
  auto it = suffix_rules_.find(language);
  return it == suffix_rules_.end() ? nullptr : &it->second;
}

std::vector<std::string> SwapLexicon::languages() const {
  std::vector<std::string> out;
  for (const auto& [l, _] : exceptions_) out.push_back(l);
  for (const auto& [l, _] : suffix_rules_)
    if (!exceptions_.contains(l)) out.push_back(l);
  std::sort(out.begin(), out.end());
  return out;
}

SwapLexicon SwapLexicon::parse(std::string_view tsv_text) {
  SwapLexicon lex;
  auto lines = tsv::lines(unicode::strip_bom(tsv_text));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    if (tsv::is_comment_or_blank(lines[i])) continue;
    auto f = tsv::split(lines[i], "\t");
    for (auto& x : f) x = tsv::trim(x);
    if (f[0] == "LANG") continue;  // optional header
    try {
      if (f.size() == 3) {
        lex.add_exception(f[0], unicode::nfc(f[1]), unicode::nfc(f[2]));
      } else if (f.size() == 4) {
        std::size_t used = 0;
        int priority = std::stoi(f[3], &used);
        if (used != f[3].size()) throw std::invalid_argument("priority");
        lex.add_suffix_rule(f[0], {unicode::nfc(f[1]), unicode::nfc(f[2]), priority});
      } else {
        throw ParseError("expected 3 (exception) or 4 (suffix rule) fields, found " + std::to_string(f.size()),
                         line_no);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), line_no);
    } catch (const std::exception&) {
      throw ParseError("suffix rule priority must be an integer", line_no);
    }
  }
  return lex;
}

namespace {

/// Drops the last `n` code points.
std::string drop_code_points(std::string_view s, std::size_t n) {
  std::vector<std::size_t> starts;
  for (std::size_t pos = 0; pos < s.size();) {
    starts.push_back(pos);
    unicode::next_code_point(s, pos);
  }
  if (n >= starts.size()) return {};
  return std::string(s.substr(0, starts[starts.size() - n]));
}

std::string take_last_code_points(std::string_view s, std::size_t n) {
  std::string head = drop_code_points(s, n);
  return std::string(s.substr(head.size()));
}

bool all_upper(std::string_view s) {
  bool any = false;
  for (std::size_t pos = 0; pos < s.size();) {
    char32_t c = unicode::next_code_point(s, pos);
    if (!unicode::is_letter(c)) continue;
    if (!unicode::is_upper(c)) return false;
    any = true;
  }
  return any;
}

bool first_letter_upper(std::string_view s) {
  for (std::size_t pos = 0; pos < s.size();) {
    char32_t c = unicode::next_code_point(s, pos);
    if (unicode::is_letter(c)) return unicode::is_upper(c);
  }
  return false;
}

std::string apply_case_pattern(std::string_view model, const std::string& word) {
  if (all_upper(model) && unicode::code_point_count(model) > 1) return unicode::to_upper(word);
  if (first_letter_upper(model)) {
    std::size_t pos = 0;
    char32_t first = unicode::next_code_point(word, pos);
    std::string head;
    unicode::append_code_point(head, first);
    return unicode::to_upper(head) + word.substr(pos);
  }
  return word;
}

std::optional<std::string> raw_swap(std::string_view token, const std::string& language, const SwapLexicon& lexicon) {
  const std::string folded = unicode::fold_case(token);
  if (const auto* table = lexicon.exceptions(language)) {
    auto it = table->find(folded);
    if (it != table->end()) return apply_case_pattern(token, it->second);
  }
  const auto* rules = lexicon.suffix_rules(language);
  if (!rules) return std::nullopt;
  const std::size_t token_len = unicode::code_point_count(folded);

  const SuffixRule* best = nullptr;
  bool best_to_feminine = false;
  std::size_t best_len = 0;
  for (const auto& rule : *rules) {
    if (best && rule.priority < best->priority) break;
    for (bool to_feminine : {true, false}) {
      const std::string& from = to_feminine ? rule.masculine_suffix : rule.feminine_suffix;
      const std::size_t len = unicode::code_point_count(from);
      // The stem must keep at least one code point.
      if (len >= token_len || !folded.ends_with(from)) continue;
      if (!best || len > best_len) {
        best = &rule;
        best_to_feminine = to_feminine;
        best_len = len;
      }
    }
  }
  if (!best) return std::nullopt;
  const std::string& replacement = best_to_feminine ? best->feminine_suffix : best->masculine_suffix;
  const std::string replaced = take_last_code_points(token, best_len);
  const std::string stem = drop_code_points(token, best_len);
  return stem + (all_upper(replaced) ? unicode::to_upper(replacement) : replacement);
}

}  // namespace

std::string swap_token(std::string_view token, const std::string& language, const SwapLexicon& lexicon) {
  auto swapped = raw_swap(token, language, lexicon);
  if (!swapped) throw NoRuleError(std::string(token));
  // Only reversible swaps are trusted; anything else needs a human.
  auto back = raw_swap(*swapped, language, lexicon);
  if (!back || *back != token) throw NoRuleError(std::string(token));
  return *swapped;
}

namespace {

std::string describe(const std::vector<std::string>& missing, const std::vector<std::string>& no_rule) {
  std::string msg = "cannot swap reference:";
  if (!missing.empty()) msg += " terms not found in reference [" + tsv::join(missing, ", ") + "]";
  if (!no_rule.empty()) msg += " no swap rule for [" + tsv::join(no_rule, ", ") + "]";
  return msg;
}

}  // namespace

SwapTermsError::SwapTermsError(std::vector<std::string> missing, std::vector<std::string> no_rule)
    : Error(describe(missing, no_rule)), missing_(std::move(missing)), no_rule_(std::move(no_rule)) {}

SwapResult swap_terms(std::string_view reference, const std::vector<std::string>& term_tokens,
                      const std::string& language, const SwapLexicon& lexicon) {
  std::string normalized;
  const auto tokens = tokenize_spans(reference, normalized);

  std::map<std::string, int> remaining;
  std::vector<std::string> order;  // first-seen order, for error messages
  for (const auto& term : term_tokens) {
    const auto toks = tokenize(term);
    if (toks.size() != 1) throw Error("term '" + term + "' is not a single token");
    std::string key = unicode::fold_case(toks[0]);
    if (remaining[key]++ == 0) order.push_back(key);
  }

  std::vector<std::size_t> targets;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto it = remaining.find(unicode::fold_case(tokens[i].text));
    if (it != remaining.end() && it->second > 0) {
      --it->second;
      targets.push_back(i);
    }
  }

  std::vector<std::string> missing, no_rule;
  for (const auto& key : order)
    if (remaining[key] > 0) missing.push_back(key);

  SwapResult result;
  std::vector<std::string> swapped(targets.size());
  for (std::size_t k = 0; k < targets.size(); ++k) {
    try {
      swapped[k] = swap_token(tokens[targets[k]].text, language, lexicon);
    } catch (const NoRuleError& e) {
      no_rule.push_back(e.token());
    }
  }
  if (!missing.empty() || !no_rule.empty()) throw SwapTermsError(std::move(missing), std::move(no_rule));

  std::size_t cursor = 0;
  for (std::size_t k = 0; k < targets.size(); ++k) {
    const TokenSpan& t = tokens[targets[k]];
    result.wrong_reference.append(normalized, cursor, t.begin - cursor);
    result.wrong_reference += swapped[k];
    cursor = t.end;
    result.pairs.push_back({t.text, swapped[k]});
  }
  result.wrong_reference.append(normalized, cursor, std::string::npos);
  return result;
}

}  // namespace mustshe
