#include "mustshe/report.h"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace mustshe {

ReportFormat parse_report_format(std::string_view name) {
  if (name == "md" || name == "markdown") return ReportFormat::kMarkdown;
  if (name == "tsv") return ReportFormat::kTsv;
  if (name == "json" || name == "structured") return ReportFormat::kJson;
  throw UsageError("unknown report format '" + std::string(name) + "' (expected md, tsv or json)");
}

namespace {

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string s = buf;
  // "-0.0" reads as a sign where there is none.
  if (s.starts_with('-') && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

void markdown_table(std::ostringstream& out, const EvalReport& report, Split split, bool bleu) {
  out << "| | Correct | Wrong | Diff |\n|---|---:|---:|---:|\n";
  for (FormColumn f : kFormColumns) {
    out << "| " << display_name(f) << " | ";
    const auto& cell = report.cell(split, f);
    if (!cell) {
      out << kAbsentCell << " | " << kAbsentCell << " | " << kAbsentCell << " |\n";
      continue;
    }
    const MetricTriplet m = bleu ? cell->bleu.metric : cell->accuracy.metric;
    const double scale = bleu ? 1.0 : 100.0;
    out << fixed(m.correct * scale, 1) << " | " << fixed(m.wrong * scale, 1) << " | " << fixed(m.diff * scale, 1)
        << " |\n";
  }
}

std::string render_markdown(const EvalReport& report) {
  std::ostringstream out;
  out << "# Gender translation evaluation\n\n";
  out << "- Corpus: " << (report.corpus_id.empty() ? "(unnamed)" : report.corpus_id) << "\n";
  out << "- Hypotheses: " << (report.hypotheses_id.empty() ? "(unnamed)" : report.hypotheses_id) << "\n";
  for (Split s : kSplits) {
    out << "\n## " << display_name(s) << "\n\n### BLEU\n\n";
    markdown_table(out, report, s, true);
    out << "\n### Accuracy (%)\n\n";
    markdown_table(out, report, s, false);
    out << "\n### Size\n\n| | Records | Terms |\n|---|---:|---:|\n";
    for (FormColumn f : kFormColumns) {
      const auto& cell = report.cell(s, f);
      out << "| " << display_name(f) << " | ";
      if (cell)
        out << cell->n_records << " | " << cell->n_terms << " |\n";
      else
        out << kAbsentCell << " | " << kAbsentCell << " |\n";
    }
    std::string flagged;
    for (FormColumn f : kFormColumns) {
      const auto& cell = report.cell(s, f);
      if (!cell) continue;
      for (const BleuScore* b : {&cell->bleu.correct_detail, &cell->bleu.wrong_detail})
        if (b->degenerate()) {
          flagged += std::string(flagged.empty() ? "" : ", ") + std::string(display_name(f)) + " (" +
                     to_string(b->degeneracy) + ")";
          break;
        }
    }
    if (!flagged.empty()) out << "\nDegenerate BLEU (score forced to 0): " << flagged << "\n";
  }
  return out.str();
}

std::string render_tsv(const EvalReport& report) {
  std::ostringstream out;
  out << "split\tmetric\tcorrect\twrong\tdiff\tn_records\tn_terms\n";
  for (Split s : kSplits) {
    for (FormColumn f : kFormColumns) {
      const auto& cell = report.cell(s, f);
      for (bool bleu : {true, false}) {
        out << display_name(s) << "/" << display_name(f) << "\t" << (bleu ? "bleu" : "accuracy") << "\t";
        if (!cell) {
          out << kAbsentCell << "\t" << kAbsentCell << "\t" << kAbsentCell << "\t0\t0\n";
          continue;
        }
        const MetricTriplet m = bleu ? cell->bleu.metric : cell->accuracy.metric;
        const double scale = bleu ? 1.0 : 100.0;
        out << fixed(m.correct * scale, 4) << "\t" << fixed(m.wrong * scale, 4) << "\t" << fixed(m.diff * scale, 4)
            << "\t" << cell->n_records << "\t" << cell->n_terms << "\n";
      }
    }
  }
  return out.str();
}

using nlohmann::json;

json bleu_detail_json(const BleuScore& b) {
  return json{{"score", b.score},
              {"precisions", b.precisions},
              {"brevity_penalty", b.brevity_penalty},
              {"hyp_length", b.hyp_length},
              {"ref_length", b.ref_length},
              {"degeneracy", to_string(b.degeneracy)}};
}

BleuDegeneracy degeneracy_from_string(const std::string& s) {
  for (auto d : {BleuDegeneracy::kNone, BleuDegeneracy::kEmptyHypotheses, BleuDegeneracy::kZeroDenominator,
                 BleuDegeneracy::kZeroPrecision})
    if (to_string(d) == s) return d;
  throw ParseError("unknown BLEU degeneracy '" + s + "'");
}

BleuScore bleu_detail_from_json(const json& j) {
  BleuScore b;
  b.score = j.at("score").get<double>();
  b.precisions = j.at("precisions").get<std::array<double, kBleuOrder>>();
  b.brevity_penalty = j.at("brevity_penalty").get<double>();
  b.hyp_length = j.at("hyp_length").get<std::int64_t>();
  b.ref_length = j.at("ref_length").get<std::int64_t>();
  b.degeneracy = degeneracy_from_string(j.at("degeneracy").get<std::string>());
  return b;
}

json triplet_json(const MetricTriplet& m) { return json{{"correct", m.correct}, {"wrong", m.wrong}, {"diff", m.diff}}; }

MetricTriplet triplet_from_json(const json& j) {
  return {j.at("correct").get<double>(), j.at("wrong").get<double>(), j.at("diff").get<double>()};
}

std::string render_json(const EvalReport& report) {
  json cells = json::array();
  for (Split s : kSplits) {
    for (FormColumn f : kFormColumns) {
      const auto& cell = report.cell(s, f);
      json c{{"split", display_name(s)}, {"form", display_name(f)}, {"present", cell.has_value()}};
      if (cell) {
        c["n_records"] = cell->n_records;
        c["n_terms"] = cell->n_terms;
        json bleu = triplet_json(cell->bleu.metric);
        bleu["correct_detail"] = bleu_detail_json(cell->bleu.correct_detail);
        bleu["wrong_detail"] = bleu_detail_json(cell->bleu.wrong_detail);
        c["bleu"] = std::move(bleu);
        json acc = triplet_json(cell->accuracy.metric);
        acc["matched_correct"] = cell->accuracy.matched_correct;
        acc["matched_wrong"] = cell->accuracy.matched_wrong;
        acc["total"] = cell->accuracy.total;
        c["accuracy"] = std::move(acc);
      }
      cells.push_back(std::move(c));
    }
  }
  json doc{{"corpus", report.corpus_id}, {"hypotheses", report.hypotheses_id}, {"cells", std::move(cells)}};
  return doc.dump(2) + "\n";
}

}  // namespace

std::string render_report(const EvalReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::kMarkdown: return render_markdown(report);
    case ReportFormat::kTsv: return render_tsv(report);
    case ReportFormat::kJson: return render_json(report);
  }
  throw UsageError("unknown report format");
}

EvalReport report_from_json(std::string_view json_text) {
  EvalReport report;
  try {
    const json doc = json::parse(json_text);
    report.corpus_id = doc.at("corpus").get<std::string>();
    report.hypotheses_id = doc.at("hypotheses").get<std::string>();
    for (const auto& c : doc.at("cells")) {
      int si = -1, fi = -1;
      for (Split s : kSplits)
        if (display_name(s) == c.at("split").get<std::string>()) si = static_cast<int>(s);
      for (FormColumn f : kFormColumns)
        if (display_name(f) == c.at("form").get<std::string>()) fi = static_cast<int>(f);
      if (si < 0 || fi < 0) throw ParseError("unknown report cell " + c.at("split").dump() + "/" + c.at("form").dump());
      if (!c.at("present").get<bool>()) continue;
      ReportCell cell;
      cell.n_records = c.at("n_records").get<std::int64_t>();
      cell.n_terms = c.at("n_terms").get<std::int64_t>();
      const auto& b = c.at("bleu");
      cell.bleu.metric = triplet_from_json(b);
      cell.bleu.correct_detail = bleu_detail_from_json(b.at("correct_detail"));
      cell.bleu.wrong_detail = bleu_detail_from_json(b.at("wrong_detail"));
      const auto& a = c.at("accuracy");
      cell.accuracy.metric = triplet_from_json(a);
      cell.accuracy.matched_correct = a.at("matched_correct").get<std::int64_t>();
      cell.accuracy.matched_wrong = a.at("matched_wrong").get<std::int64_t>();
      cell.accuracy.total = a.at("total").get<std::int64_t>();
      report.cells[si][fi] = std::move(cell);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("report JSON: ") + e.what());
  }
  return report;
}

}  // namespace mustshe
