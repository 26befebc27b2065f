#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mustshe {

/// Ordered list of non-empty, whitespace-free tokens. May be empty.
using TokenSequence = std::vector<std::string>;

/// A token and its byte range in the NFC-normalized input.
struct TokenSpan {
  std::string text;
  std::size_t begin = 0;
  std::size_t end = 0;
};

// Canonical tokenization:
//   1. NFC normalization
//   2. whitespace runs collapse, leading/trailing trimmed
//   3. . , ; : ! ? " ( ) [ ] « » … — are standalone tokens
//   4. an apostrophe (' or ’) right after a letter closes the token and stays on it: l'une -> l' une
//   5. a hyphen between two alphanumerics stays inside the token; any other hyphen is standalone
//   6. split on spaces
TokenSequence tokenize(std::string_view text);

/// Same tokens as tokenize(); offsets refer to `normalized`, which receives nfc(text).
std::vector<TokenSpan> tokenize_spans(std::string_view text, std::string& normalized);

std::string join_tokens(const TokenSequence& tokens);

}  // namespace mustshe
