#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mustshe/corpus.h"

namespace mustshe {

/// Canonical column names, in canonical order.
inline const std::vector<std::string> kCorpusColumns = {
    "ID", "TALK", "SRC", "REF-C", "REF-W", "SPEAKER", "FORM", "CATEGORY", "TERMS"};

/// Adapts a foreign header (e.g. an official release) to the canonical schema at load time.
///
/// `columns` maps a canonical column name to the header name used by the file.
/// Several canonical columns may read the same file column. `values` rewrites raw
/// cell values per canonical column before decoding (e.g. CATEGORY "1F" -> "1").
/// TERMS cells are split on `pair_separator` into pairs, and each pair on
/// `form_separator` into correct and wrong forms.
struct ColumnMapping {
  std::map<std::string, std::string> columns;
  std::map<std::string, std::map<std::string, std::string>> values;
  std::string pair_separator = ";";
  std::string form_separator = ":";

  static ColumnMapping canonical();
  /// Reads the JSON mapping document described in the README. Throws ParseError.
  static ColumnMapping from_json(std::string_view json_text);
};

/// Non-fatal observations made while parsing (unknown columns).
struct ParseNote {
  std::size_t line = 0;
  std::string message;
};

/// Parses corpus TSV. Throws ParseError on empty input, a header lacking a
/// required column, a row with the wrong field count, or an undecodable value.
Corpus parse_corpus(std::string_view tsv_text, const std::string& language_pair,
                    const ColumnMapping& mapping = ColumnMapping::canonical(),
                    std::vector<ParseNote>* notes = nullptr);

/// Writes canonical TSV. Throws Error if a field cannot be represented
/// (tab/newline in any field, or a delimiter inside a term form).
std::string serialize_corpus(const Corpus& corpus);

std::string format_terms(const std::vector<GenderTermPair>& terms);

}  // namespace mustshe
