#include "mustshe/cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <unistd.h>

#include "mustshe/balance.h"
#include "mustshe/corpus_io.h"
#include "mustshe/corpus_stats.h"
#include "mustshe/errors.h"
#include "mustshe/evaluator.h"
#include "mustshe/mining.h"
#include "mustshe/report.h"
#include "mustshe/swap.h"
#include "mustshe/tokenizer.h"
#include "mustshe/validate.h"

namespace mustshe::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return buf.str();
}

/// Writes the whole result at once; files go through a temporary and a rename.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    out.flush();
    return;
  }
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot write '" + path + "'");
    f << text;
    f.close();
    if (!f) {
      std::remove(tmp.c_str());
      throw IoError("error writing '" + path + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::remove(tmp.c_str());
    throw IoError("cannot move output into place at '" + path + "': " + ec.message());
  }
}

struct CorpusInput {
  std::string path;
  std::string language_pair;
  std::string mapping_path;
};

/// Raw corpus and mapping text; every subcommand reads all inputs before parsing any.
struct CorpusText {
  std::string corpus;
  std::string mapping;
};

CorpusText read_corpus(const CorpusInput& in) {
  return {read_file(in.path), in.mapping_path.empty() ? std::string() : read_file(in.mapping_path)};
}

Corpus load_corpus(const CorpusInput& in, const CorpusText& text, std::vector<ParseNote>* notes) {
  ColumnMapping mapping = ColumnMapping::canonical();
  if (!in.mapping_path.empty()) mapping = ColumnMapping::from_json(text.mapping);
  return parse_corpus(text.corpus, in.language_pair, mapping, notes);
}

std::string render_issues(const std::vector<ValidationIssue>& issues, const std::string& format) {
  std::ostringstream out;
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& i : issues)
      arr.push_back({{"record_id", i.record_id},
                     {"severity", to_string(i.severity)},
                     {"kind", to_string(i.kind)},
                     {"message", i.message}});
    return arr.dump(2) + "\n";
  }
  if (format == "tsv") out << "record_id\tseverity\tkind\tmessage\n";
  for (const auto& i : issues) {
    if (format == "tsv")
      out << i.record_id << '\t' << to_string(i.severity) << '\t' << to_string(i.kind) << '\t' << i.message << '\n';
    else
      out << to_string(i.severity) << " [" << i.record_id << "] " << to_string(i.kind) << ": " << i.message << '\n';
  }
  return out.str();
}

std::size_t count_errors(const std::vector<ValidationIssue>& issues) {
  std::size_t n = 0;
  for (const auto& i : issues) n += i.severity == Severity::kError;
  return n;
}

void add_corpus_options(CLI::App* cmd, CorpusInput& in) {
  cmd->add_option("--corpus", in.path, "Corpus TSV file")->required();
  cmd->add_option("--lang-pair", in.language_pair, "Language pair label, e.g. en-it");
  cmd->add_option("--mapping", in.mapping_path, "JSON column mapping for non-canonical headers");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gender-bias evaluation and test-set construction toolkit for (speech) translation", "mustshe"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  std::string output;
  std::string format;

  // validate
  CorpusInput v_in;
  std::string v_format = "text";
  auto* validate_cmd = app.add_subcommand("validate", "Check every record invariant of a corpus");
  add_corpus_options(validate_cmd, v_in);
  validate_cmd->add_option("--format", v_format, "text, tsv or json")->check(CLI::IsMember({"text", "tsv", "json"}));
  validate_cmd->add_option("-o,--output", output, "Output file (default: standard output)");

  // stats
  CorpusInput s_in;
  CorpusInput s_other;
  std::string s_format = "md";
  auto* stats_cmd = app.add_subcommand("stats", "Count records per category, form and speaker");
  add_corpus_options(stats_cmd, s_in);
  stats_cmd->add_option("--format", s_format, "md, tsv or json")->check(CLI::IsMember({"md", "tsv", "json"}));
  stats_cmd->add_option("--common-with", s_other.path, "Second corpus; also report the common subset size");
  stats_cmd->add_option("--common-mapping", s_other.mapping_path, "Column mapping for --common-with");
  stats_cmd->add_option("-o,--output", output, "Output file (default: standard output)");

  // eval
  CorpusInput e_in;
  std::string hyp_path;
  std::string e_format = "md";
  bool force = false;
  auto* eval_cmd = app.add_subcommand("eval", "Score hypotheses against correct and wrong references");
  add_corpus_options(eval_cmd, e_in);
  eval_cmd->add_option("--hyp", hyp_path, "Hypothesis file, one line per corpus record")->required();
  eval_cmd->add_option("--format", e_format, "md, tsv or json")->check(CLI::IsMember({"md", "markdown", "tsv", "json", "structured"}));
  eval_cmd->add_flag("--force", force, "Evaluate despite validation errors, excluding offending records");
  eval_cmd->add_option("-o,--output", output, "Output file (default: standard output)");

  // mine
  std::string pairs_path, rules_path, occ_path, adjf_path, adjm_path, speakers_path, m_lang;
  auto* mine_cmd = app.add_subcommand("mine", "Extract candidate segments with gender-agreement patterns");
  mine_cmd->add_option("--pairs", pairs_path, "Parallel TSV with header TALK SRC TGT")->required();
  mine_cmd->add_option("--rules", rules_path, "Rules TSV")->required();
  mine_cmd->add_option("--lang-pair", m_lang, "Only use rules for this language pair");
  mine_cmd->add_option("--occupations", occ_path, "Word list for {OCC}");
  mine_cmd->add_option("--adj-f", adjf_path, "Word list for {ADJ_F}");
  mine_cmd->add_option("--adj-m", adjm_path, "Word list for {ADJ_M}");
  mine_cmd->add_option("--speakers", speakers_path, "TSV with header TALK SPEAKER");
  mine_cmd->add_option("-o,--output", output, "Output file (default: standard output)");

  // balance
  std::string cand_path, quota_spec;
  std::uint64_t seed = 1;
  auto* balance_cmd = app.add_subcommand("balance", "Sample candidates to per-cell quotas");
  balance_cmd->add_option("--candidates", cand_path, "Candidates TSV")->required();
  balance_cmd->add_option("--quota", quota_spec, "N for every cell, or 1F=N,1M=N,2F=N,2M=N")->required();
  balance_cmd->add_option("--seed", seed, "Sampling seed")->capture_default_str();
  balance_cmd->add_option("-o,--output", output, "Output file (default: standard output)");

  // swap
  std::string w_lang, lexicon_path, token, input_path, review_path;
  auto* swap_cmd = app.add_subcommand("swap", "Generate wrong references by gender swapping");
  swap_cmd->add_option("--lang", w_lang, "Target language code, e.g. it or fr")->required();
  swap_cmd->add_option("--lexicon", lexicon_path, "Lexicon TSV")->required();
  auto* token_opt = swap_cmd->add_option("--token", token, "Swap a single token");
  auto* input_opt = swap_cmd->add_option("--input", input_path, "Candidates TSV whose spans are swapped");
  token_opt->excludes(input_opt);
  swap_cmd->add_option("--review", review_path, "Write candidates that need manual review here");
  swap_cmd->add_option("-o,--output", output, "Output file (default: standard output)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help(app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name());
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (*validate_cmd) {
      std::vector<ParseNote> notes;
      const Corpus corpus = load_corpus(v_in, read_corpus(v_in), &notes);
      const auto issues = validate(corpus, notes);
      emit(render_issues(issues, v_format), output, out);
      const auto errors = count_errors(issues);
      err << corpus.records.size() << " records, " << errors << " errors, " << issues.size() - errors << " warnings\n";
      return errors ? kValidationFailure : kOk;
    }

    if (*stats_cmd) {
      const CorpusText main_text = read_corpus(s_in);
      const std::optional<CorpusText> other_text =
          s_other.path.empty() ? std::nullopt : std::optional<CorpusText>(read_corpus(s_other));
      const Corpus corpus = load_corpus(s_in, main_text, nullptr);
      const auto issues = validate(corpus);
      if (auto n = count_errors(issues)) err << "warning: corpus has " << n << " validation errors\n";
      const CorpusStats st = stats(corpus);
      std::optional<std::size_t> common;
      if (!s_other.path.empty()) common = common_subset(corpus, load_corpus(s_other, *other_text, nullptr)).size();
      std::string text;
      if (s_format == "json") {
        nlohmann::json doc;
        doc["corpus"] = s_in.path;
        for (Category c : {Category::kCat1, Category::kCat2})
          for (GenderForm f : {GenderForm::kFeminine, GenderForm::kMasculine})
            doc["counts"][std::string(display_name(c))][std::string(display_name(f))] = st.count(c, f);
        doc["speakers"] = {{"F", st.speakers(SpeakerGender::kFemale)}, {"M", st.speakers(SpeakerGender::kMale)}};
        doc["total_records"] = st.total_records;
        doc["total_term_tokens"] = st.total_term_tokens;
        if (common) doc["common_subset"] = *common;
        text = doc.dump(2) + "\n";
      } else if (s_format == "tsv") {
        text = render_stats_tsv(st);
        if (common) text += "common_subset\t" + std::to_string(*common) + "\n";
      } else {
        text = render_stats_markdown(st, s_in.path);
        if (common) text += "Common subset with " + s_other.path + ": " + std::to_string(*common) + " records\n";
      }
      emit(text, output, out);
      return kOk;
    }

    if (*eval_cmd) {
      const ReportFormat fmt = parse_report_format(e_format);
      std::vector<ParseNote> notes;
      const CorpusText corpus_text = read_corpus(e_in);
      Hypotheses hyps = Hypotheses::from_text(read_file(hyp_path));
      Corpus corpus = load_corpus(e_in, corpus_text, &notes);
      if (hyps.lines.size() != corpus.records.size())
        throw AlignmentError(corpus.records.size(), hyps.lines.size());
      const auto issues = validate(corpus, notes);
      if (has_errors(issues)) {
        err << render_issues(issues, "text");
        if (!force) {
          err << "error: corpus has " << count_errors(issues) << " validation errors; use --force to exclude them\n";
          return kValidationFailure;
        }
        std::set<std::string> bad;
        for (const auto& i : issues)
          if (i.severity == Severity::kError) bad.insert(i.record_id);
        Corpus kept{corpus.language_pair, {}};
        Hypotheses kept_hyps;
        for (std::size_t i = 0; i < corpus.records.size(); ++i) {
          if (bad.contains(corpus.records[i].id)) continue;
          kept.records.push_back(corpus.records[i]);
          kept_hyps.lines.push_back(hyps.lines[i]);
        }
        err << "excluded " << corpus.records.size() - kept.records.size() << " records with validation errors\n";
        if (kept.records.empty()) {
          err << "error: no records left to evaluate\n";
          return kValidationFailure;
        }
        corpus = std::move(kept);
        hyps = std::move(kept_hyps);
      }
      const EvalReport report = evaluate(corpus, hyps, e_in.path, hyp_path);
      emit(render_report(report, fmt), output, out);
      return kOk;
    }

    if (*mine_cmd) {
      // Read every input before parsing any, so a missing file is always an I/O error.
      const std::string rules_text = read_file(rules_path);
      const std::string pairs_text = read_file(pairs_path);
      const std::string occ_text = occ_path.empty() ? std::string() : read_file(occ_path);
      const std::string adjf_text = adjf_path.empty() ? std::string() : read_file(adjf_path);
      const std::string adjm_text = adjm_path.empty() ? std::string() : read_file(adjm_path);
      const std::string speakers_text = speakers_path.empty() ? std::string() : read_file(speakers_path);

      auto rules = parse_rules(rules_text);
      if (!m_lang.empty())
        std::erase_if(rules, [&](const MiningRule& r) { return r.language_pair != m_lang; });
      if (rules.empty()) throw UsageError("no mining rules" + (m_lang.empty() ? std::string() : " for " + m_lang));
      WordLists lists;
      lists.occupations = parse_word_list(occ_text);
      lists.adjectives_f = parse_word_list(adjf_text);
      lists.adjectives_m = parse_word_list(adjm_text);
      const auto patterns = compile_patterns(rules, lists);
      const auto pairs = parse_sentence_pairs(pairs_text);
      std::map<std::string, SpeakerGender> speakers;
      if (!speakers_path.empty()) speakers = parse_speakers(speakers_text);
      const auto candidates = mine(pairs, patterns, speakers_path.empty() ? nullptr : &speakers);
      emit(serialize_candidates(candidates), output, out);
      err << candidates.size() << " candidates from " << pairs.size() << " sentence pairs\n";
      return kOk;
    }

    if (*balance_cmd) {
      const Quota quota = Quota::parse(quota_spec);
      const auto candidates = parse_candidates(read_file(cand_path));
      const auto result = balance_sample(candidates, quota, seed);
      emit(serialize_candidates(result.selected), output, out);
      for (const auto& s : result.shortfalls)
        err << "shortfall: " << display_name(s.category) << "/" << display_name(s.form) << " quota " << s.quota
            << ", available " << s.available << "\n";
      err << result.selected.size() << " candidates selected\n";
      return kOk;
    }

    if (*swap_cmd) {
      if (!*token_opt && !*input_opt) throw UsageError("swap needs --token or --input");
      const std::string lexicon_text = read_file(lexicon_path);
      const std::string input_text = *input_opt ? read_file(input_path) : std::string();
      const SwapLexicon lexicon = SwapLexicon::parse(lexicon_text);
      if (*token_opt) {
        try {
          emit(swap_token(token, w_lang, lexicon) + "\n", output, out);
          return kOk;
        } catch (const NoRuleError& e) {
          err << "review: " << e.what() << "\n";
          return kValidationFailure;
        }
      }
      auto candidates = parse_candidates(input_text);
      std::vector<Candidate> done, review;
      for (auto& c : candidates) {
        std::vector<std::string> terms;
        if (!c.matched_spans.empty()) {
          for (const auto& text : c.span_texts())
            for (auto& t : tokenize(text)) terms.push_back(std::move(t));
        } else {
          for (const auto& t : c.terms) terms.push_back(t.correct_form);
        }
        try {
          if (terms.empty()) throw Error("candidate has neither spans nor terms");
          SwapResult r = swap_terms(c.target, terms, w_lang, lexicon);
          c.wrong_target = std::move(r.wrong_reference);
          c.terms = std::move(r.pairs);
          done.push_back(std::move(c));
        } catch (const Error& e) {
          err << "review [" << c.id << "]: " << e.what() << "\n";
          review.push_back(std::move(c));
        }
      }
      if (!review.empty() && review_path.empty()) {
        err << "error: " << review.size() << " candidates need manual review; pass --review FILE to write them\n";
        return kValidationFailure;
      }
      if (!review_path.empty()) emit(serialize_candidates(review), review_path, out);
      emit(serialize_candidates(done), output, out);
      err << done.size() << " swapped, " << review.size() << " routed to review\n";
      return kOk;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kValidationFailure;
  }
  return kUsageError;
}

}  // namespace mustshe::cli
