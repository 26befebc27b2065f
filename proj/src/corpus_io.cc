#include "mustshe/corpus_io.h"

#include <json.hpp>

#include <set>

#include "mustshe/errors.h"
#include "mustshe/tsv.h"
#include "mustshe/unicode.h"

namespace mustshe {

ColumnMapping ColumnMapping::canonical() {
  ColumnMapping m;
  for (const auto& c : kCorpusColumns) m.columns[c] = c;
  return m;
}

ColumnMapping ColumnMapping::from_json(std::string_view json_text) {
  ColumnMapping m = canonical();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("column mapping: ") + e.what());
  }
  try {
    if (doc.contains("columns")) {
      for (auto& [canon, file_name] : doc.at("columns").items()) {
        if (std::find(kCorpusColumns.begin(), kCorpusColumns.end(), canon) == kCorpusColumns.end())
          throw ParseError("column mapping: unknown canonical column '" + canon + "'");
        m.columns[canon] = file_name.get<std::string>();
      }
    }
    if (doc.contains("values")) {
      for (auto& [canon, table] : doc.at("values").items()) {
        for (auto& [from, to] : table.items()) m.values[canon][from] = to.get<std::string>();
      }
    }
    if (doc.contains("terms")) {
      const auto& t = doc.at("terms");
      if (t.contains("pair_separator")) m.pair_separator = t.at("pair_separator").get<std::string>();
      if (t.contains("form_separator")) m.form_separator = t.at("form_separator").get<std::string>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("column mapping: ") + e.what());
  }
  if (m.pair_separator.empty() || m.form_separator.empty() || m.pair_separator == m.form_separator)
    throw ParseError("column mapping: term separators must be non-empty and distinct");
  return m;
}

namespace {

std::vector<GenderTermPair> parse_terms(const std::string& cell, const ColumnMapping& mapping, std::size_t line) {
  std::vector<GenderTermPair> terms;
  if (tsv::trim(cell).empty()) return terms;
  for (const auto& piece : tsv::split(cell, mapping.pair_separator)) {
    if (tsv::trim(piece).empty()) continue;
    auto forms = tsv::split(piece, mapping.form_separator);
    if (forms.size() != 2)
      throw ParseError("TERMS entry '" + piece + "' is not a correct" + mapping.form_separator + "wrong pair", line);
    GenderTermPair pair{tsv::trim(forms[0]), tsv::trim(forms[1])};
    if (pair.correct_form.empty() || pair.wrong_form.empty())
      throw ParseError("TERMS entry '" + piece + "' has an empty form", line);
    terms.push_back(std::move(pair));
  }
  return terms;
}

}  // namespace

Corpus parse_corpus(std::string_view tsv_text, const std::string& language_pair, const ColumnMapping& mapping,
                    std::vector<ParseNote>* notes) {
  const auto lines = tsv::lines(unicode::strip_bom(tsv_text));
  std::size_t first = 0;
  while (first < lines.size() && lines[first].empty()) ++first;
  if (first == lines.size()) throw ParseError("empty corpus file");

  const std::size_t header_line = first + 1;
  const auto header = tsv::split(lines[first], "\t");
  std::map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < header.size(); ++i) position.emplace(tsv::trim(header[i]), i);

  std::map<std::string, std::size_t> column_index;
  std::set<std::size_t> used;
  for (const auto& canon : kCorpusColumns) {
    auto m = mapping.columns.find(canon);
    const std::string& file_name = m == mapping.columns.end() ? canon : m->second;
    auto it = position.find(file_name);
    if (it == position.end()) {
      std::string what = "header is missing column " + canon;
      if (file_name != canon) what += " (mapped to '" + file_name + "')";
      throw ParseError(what, header_line);
    }
    column_index[canon] = it->second;
    used.insert(it->second);
  }
  if (notes) {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (!used.contains(i)) notes->push_back({header_line, "ignored unknown column '" + header[i] + "'"});
  }

  auto value_of = [&](const std::vector<std::string>& fields, const std::string& canon) {
    const std::string& raw = fields[column_index.at(canon)];
    auto table = mapping.values.find(canon);
    if (table != mapping.values.end()) {
      auto v = table->second.find(raw);
      if (v != table->second.end()) return v->second;
    }
    return raw;
  };

  Corpus corpus{language_pair, {}};
  for (std::size_t li = first + 1; li < lines.size(); ++li) {
    const std::size_t line_no = li + 1;
    if (lines[li].empty()) continue;
    auto fields = tsv::split(lines[li], "\t");
    if (fields.size() != header.size())
      throw ParseError("expected " + std::to_string(header.size()) + " fields, found " + std::to_string(fields.size()),
                       line_no);
    TripletRecord r;
    r.id = value_of(fields, "ID");
    r.talk = value_of(fields, "TALK");
    r.source = value_of(fields, "SRC");
    r.ref_correct = value_of(fields, "REF-C");
    r.ref_wrong = value_of(fields, "REF-W");
    const std::string speaker = value_of(fields, "SPEAKER");
    const std::string form = value_of(fields, "FORM");
    const std::string category = value_of(fields, "CATEGORY");
    auto s = speaker_from_code(speaker);
    if (!s) throw ParseError("SPEAKER must be F or M, got '" + speaker + "'", line_no);
    auto f = form_from_code(form);
    if (!f) throw ParseError("FORM must be F or M, got '" + form + "'", line_no);
    auto c = category_from_code(category);
    if (!c) throw ParseError("CATEGORY must be 1 or 2, got '" + category + "'", line_no);
    r.speaker = *s;
    r.form = *f;
    r.category = *c;
    r.terms = parse_terms(value_of(fields, "TERMS"), mapping, line_no);
    corpus.records.push_back(std::move(r));
  }
  if (corpus.records.empty()) throw ParseError("corpus has a header but no records", header_line);
  return corpus;
}

std::string format_terms(const std::vector<GenderTermPair>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += ';';
    out += terms[i].correct_form;
    out += ':';
    out += terms[i].wrong_form;
  }
  return out;
}

namespace {

void check_plain(const std::string& value, const std::string& what) {
  if (value.find_first_of("\t\n\r") != std::string::npos)
    throw Error(what + " contains a tab or line break and cannot be written as TSV");
}

}  // namespace

std::string serialize_corpus(const Corpus& corpus) {
  std::string out = tsv::join(kCorpusColumns, "\t") + "\n";
  for (const auto& r : corpus.records) {
    for (const auto* field : {&r.id, &r.talk, &r.source, &r.ref_correct, &r.ref_wrong})
      check_plain(*field, "record " + r.id);
    for (const auto& t : r.terms) {
      for (const auto* form : {&t.correct_form, &t.wrong_form}) {
        check_plain(*form, "record " + r.id);
        if (form->empty() || form->find_first_of(";:") != std::string::npos)
          throw Error("record " + r.id + ": term form '" + *form + "' is empty or contains ';' or ':'");
      }
    }
    out += tsv::join({r.id, r.talk, r.source, r.ref_correct, r.ref_wrong, std::string(to_code(r.speaker)),
                      std::string(to_code(r.form)), std::string(to_code(r.category)), format_terms(r.terms)},
                     "\t");
    out += '\n';
  }
  return out;
}

}  // namespace mustshe
