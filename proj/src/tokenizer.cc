#include "mustshe/tokenizer.h"

#include "mustshe/unicode.h"

namespace mustshe {

namespace {

bool is_standalone_punct(char32_t c) {
  switch (c) {
    case U'.': case U',': case U';': case U':': case U'!': case U'?': case U'"':
    case U'(': case U')': case U'[': case U']': case U'«': case U'»': case U'…': case U'—':
      return true;
    default:
      return false;
  }
}

bool is_apostrophe(char32_t c) { return c == U'\'' || c == U'’'; }

struct CodePoint {
  char32_t value;
  std::size_t begin;
  std::size_t end;
};

std::vector<CodePoint> decode(std::string_view s) {
  std::vector<CodePoint> out;
  for (std::size_t pos = 0; pos < s.size();) {
    std::size_t begin = pos;
    char32_t c = unicode::next_code_point(s, pos);
    out.push_back({c, begin, pos});
  }
  return out;
}

}  // namespace

std::vector<TokenSpan> tokenize_spans(std::string_view text, std::string& normalized) {
  normalized = unicode::nfc(text);
  const std::string_view s = normalized;
  const std::vector<CodePoint> cps = decode(s);

  std::vector<TokenSpan> tokens;
  std::size_t tok_begin = 0, tok_end = 0;
  bool open = false;
  char32_t last = 0;

  auto flush = [&] {
    if (open) tokens.push_back({std::string(s.substr(tok_begin, tok_end - tok_begin)), tok_begin, tok_end});
    open = false;
  };
  auto extend = [&](const CodePoint& cp) {
    if (!open) {
      tok_begin = cp.begin;
      open = true;
    }
    tok_end = cp.end;
    last = cp.value;
  };
  auto emit_alone = [&](const CodePoint& cp) {
    flush();
    tokens.push_back({std::string(s.substr(cp.begin, cp.end - cp.begin)), cp.begin, cp.end});
  };

  for (std::size_t i = 0; i < cps.size(); ++i) {
    const CodePoint& cp = cps[i];
    if (unicode::is_space(cp.value)) {
      flush();
    } else if (is_standalone_punct(cp.value)) {
      emit_alone(cp);
    } else if (cp.value == U'-') {
      bool inner = i > 0 && i + 1 < cps.size() && unicode::is_alnum(cps[i - 1].value) &&
                   unicode::is_alnum(cps[i + 1].value);
      if (inner)
        extend(cp);
      else
        emit_alone(cp);
    } else if (is_apostrophe(cp.value)) {
      bool elision = open && unicode::is_letter(last);
      extend(cp);
      if (elision) flush();
    } else {
      extend(cp);
    }
  }
  flush();
  return tokens;
}

TokenSequence tokenize(std::string_view text) {
  std::string normalized;
  TokenSequence out;
  for (auto& span : tokenize_spans(text, normalized)) out.push_back(std::move(span.text));
  return out;
}

std::string join_tokens(const TokenSequence& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += tokens[i];
  }
  return out;
}

}  // namespace mustshe
