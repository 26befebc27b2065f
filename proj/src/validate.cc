#include "mustshe/validate.h"

#include <map>
#include <set>

#include "mustshe/tokenizer.h"
#include "mustshe/tsv.h"
#include "mustshe/unicode.h"

namespace mustshe {

std::string_view to_string(Severity s) { return s == Severity::kError ? "error" : "warning"; }

std::string_view to_string(IssueKind k) {
  switch (k) {
    case IssueKind::kTermNotInRef: return "TermNotInRef";
    case IssueKind::kRefLengthMismatch: return "RefLengthMismatch";
    case IssueKind::kDiffOutsideTerms: return "DiffOutsideTerms";
    case IssueKind::kIdenticalPair: return "IdenticalPair";
    case IssueKind::kDuplicateId: return "DuplicateId";
    case IssueKind::kBadField: return "BadField";
  }
  return "Unknown";
}

namespace {

using FoldedPair = std::pair<std::string, std::string>;

std::map<std::string, int> folded_counts(const TokenSequence& tokens) {
  std::map<std::string, int> counts;
  for (const auto& t : tokens) ++counts[unicode::fold_case(t)];
  return counts;
}

}  // namespace

std::vector<ValidationIssue> validate_record(const TripletRecord& r) {
  std::vector<ValidationIssue> issues;
  auto report = [&](Severity sev, IssueKind kind, std::string msg) {
    issues.push_back({r.id, sev, kind, std::move(msg)});
  };

  if (r.id.empty()) report(Severity::kError, IssueKind::kBadField, "empty ID");
  const std::pair<const char*, const std::string*> text_fields[] = {
      {"ID", &r.id}, {"TALK", &r.talk}, {"SRC", &r.source}, {"REF-C", &r.ref_correct}, {"REF-W", &r.ref_wrong}};
  for (const auto& [name, value] : text_fields)
    if (value->find_first_of("\t\n\r") != std::string::npos)
      report(Severity::kError, IssueKind::kBadField, std::string(name) + " contains a tab or line break");
  for (const auto& [name, value] : {text_fields[2], text_fields[3], text_fields[4]})
    if (tsv::trim(*value).empty()) report(Severity::kError, IssueKind::kBadField, std::string(name) + " is empty");
  if (r.terms.empty()) report(Severity::kError, IssueKind::kBadField, "no annotated gender terms");

  // Term forms must be single canonical tokens without TERMS delimiters.
  bool terms_well_formed = true;
  for (const auto& t : r.terms) {
    for (const std::string* form : {&t.correct_form, &t.wrong_form}) {
      TokenSequence toks = tokenize(*form);
      if (form->find_first_of(";:\t\n\r") != std::string::npos || toks.size() != 1 || toks[0] != *form) {
        report(Severity::kError, IssueKind::kBadField, "term form '" + *form + "' is not a single token");
        terms_well_formed = false;
      }
    }
  }

  std::vector<FoldedPair> pairs;
  for (const auto& t : r.terms) {
    FoldedPair p{unicode::fold_case(t.correct_form), unicode::fold_case(t.wrong_form)};
    if (p.first == p.second)
      report(Severity::kError, IssueKind::kIdenticalPair,
             "term pair " + t.correct_form + ":" + t.wrong_form + " has identical forms");
    else
      pairs.push_back(std::move(p));
  }
  if (!terms_well_formed) return issues;

  const TokenSequence correct = tokenize(r.ref_correct);
  const TokenSequence wrong = tokenize(r.ref_wrong);
  const auto correct_counts = folded_counts(correct);
  const auto wrong_counts = folded_counts(wrong);

  std::map<std::string, int> need_correct, need_wrong;
  for (const auto& t : r.terms) {
    ++need_correct[unicode::fold_case(t.correct_form)];
    ++need_wrong[unicode::fold_case(t.wrong_form)];
  }
  auto check_presence = [&](const std::map<std::string, int>& need, const std::map<std::string, int>& have,
                            const char* ref_name) {
    for (const auto& [form, n] : need) {
      auto it = have.find(form);
      int found = it == have.end() ? 0 : it->second;
      if (found < n)
        report(Severity::kError, IssueKind::kTermNotInRef,
               "'" + form + "' annotated " + std::to_string(n) + "x but found " + std::to_string(found) + "x in " +
                   ref_name);
    }
  };
  check_presence(need_correct, correct_counts, "REF-C");
  check_presence(need_wrong, wrong_counts, "REF-W");

  for (const auto& [c, w] : pairs) {
    if (correct_counts.contains(c) && correct_counts.contains(w) && wrong_counts.contains(c) &&
        wrong_counts.contains(w))
      report(Severity::kWarning, IssueKind::kTermNotInRef,
             "both forms of " + c + ":" + w + " occur in both references");
  }

  if (correct.size() != wrong.size()) {
    report(Severity::kError, IssueKind::kRefLengthMismatch,
           "REF-C has " + std::to_string(correct.size()) + " tokens, REF-W has " + std::to_string(wrong.size()));
    return issues;
  }

  std::map<FoldedPair, int> unexplained;
  for (const auto& p : pairs) ++unexplained[p];
  for (std::size_t i = 0; i < correct.size(); ++i) {
    if (correct[i] == wrong[i]) continue;
    FoldedPair diff{unicode::fold_case(correct[i]), unicode::fold_case(wrong[i])};
    auto it = unexplained.find(diff);
    if (it != unexplained.end() && it->second > 0) {
      --it->second;
    } else {
      report(Severity::kError, IssueKind::kDiffOutsideTerms,
             "token " + std::to_string(i + 1) + " differs (" + correct[i] + " / " + wrong[i] +
                 ") but is not an annotated term pair");
    }
  }
  for (const auto& [p, left] : unexplained)
    if (left > 0)
      report(Severity::kError, IssueKind::kDiffOutsideTerms,
             "term pair " + p.first + ":" + p.second + " has no matching swapped position (" + std::to_string(left) +
                 " unmatched)");
  return issues;
}

std::vector<ValidationIssue> validate(const Corpus& corpus) { return validate(corpus, {}); }

std::vector<ValidationIssue> validate(const Corpus& corpus, const std::vector<ParseNote>& notes) {
  std::vector<ValidationIssue> issues;
  for (const auto& n : notes)
    issues.push_back({std::string(kHeaderRecordId), Severity::kWarning, IssueKind::kBadField, n.message});
  if (corpus.records.empty())
    issues.push_back({std::string(kHeaderRecordId), Severity::kError, IssueKind::kBadField, "corpus has no records"});
  std::set<std::string> seen;
  for (const auto& r : corpus.records) {
    if (!seen.insert(r.id).second)
      issues.push_back({r.id, Severity::kError, IssueKind::kDuplicateId, "duplicate record id"});
    auto rec = validate_record(r);
    issues.insert(issues.end(), std::make_move_iterator(rec.begin()), std::make_move_iterator(rec.end()));
  }
  return issues;
}

bool has_errors(const std::vector<ValidationIssue>& issues) {
  for (const auto& i : issues)
    if (i.severity == Severity::kError) return true;
  return false;
}

}  // namespace mustshe
