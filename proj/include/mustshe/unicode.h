#pragma once

#include <cstddef>
#include <string>
#include <string_view>

// Thin UTF-8 wrappers over ICU. All functions are locale-independent.
namespace mustshe::unicode {

/// Canonical composition (NFC). Invalid UTF-8 sequences become U+FFFD.
std::string nfc(std::string_view text);

/// Unicode simple case folding applied code point by code point.
std::string fold_case(std::string_view text);

std::string to_upper(std::string_view text);

/// Strips a leading UTF-8 byte-order mark if present.
std::string_view strip_bom(std::string_view text);

/// Decodes the code point starting at `pos` and advances `pos` past it.
char32_t next_code_point(std::string_view text, std::size_t& pos);

void append_code_point(std::string& out, char32_t cp);

std::size_t code_point_count(std::string_view text);

bool is_letter(char32_t cp);
bool is_alnum(char32_t cp);
bool is_space(char32_t cp);
bool is_upper(char32_t cp);
bool has_letter(std::string_view text);

}  // namespace mustshe::unicode
