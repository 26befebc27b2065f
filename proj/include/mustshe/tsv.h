#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mustshe::tsv {

/// Splits on `delim`, keeping empty fields.
std::vector<std::string> split(std::string_view text, std::string_view delim);

/// Splits into lines on LF, dropping a trailing CR on each and the empty
/// remainder after a final newline.
std::vector<std::string_view> lines(std::string_view text);

std::string join(const std::vector<std::string>& fields, std::string_view delim);

bool is_comment_or_blank(std::string_view line);

std::string trim(std::string_view s);

}  // namespace mustshe::tsv
