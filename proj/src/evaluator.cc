#include "mustshe/evaluator.h"

#include "mustshe/accuracy.h"
#include "mustshe/errors.h"
#include "mustshe/tsv.h"

namespace mustshe {

Hypotheses Hypotheses::from_text(std::string_view text) {
  Hypotheses h;
  for (auto line : tsv::lines(text)) h.lines.emplace_back(line);
  return h;
}

namespace {

void check_view(const CorpusView& view, const Hypotheses& hyps) {
  if (hyps.lines.size() != view.corpus().records.size())
    throw AlignmentError(view.corpus().records.size(), hyps.lines.size());
  if (view.empty()) throw EmptyViewError("cannot score an empty set of records");
}

}  // namespace

BleuTriplet bleu_triplet(const CorpusView& view, const Hypotheses& hyps) {
  check_view(view, hyps);
  BleuStats correct, wrong;
  for (std::size_t i = 0; i < view.size(); ++i) {
    const TripletRecord& r = view[i];
    const TokenSequence hyp = tokenize(hyps.lines[view.indices()[i]]);
    correct += segment_bleu_stats(hyp, tokenize(r.ref_correct));
    wrong += segment_bleu_stats(hyp, tokenize(r.ref_wrong));
  }
  BleuTriplet out;
  out.correct_detail = bleu_from_stats(correct);
  out.wrong_detail = bleu_from_stats(wrong);
  out.metric = MetricTriplet::make(out.correct_detail.score, out.wrong_detail.score);
  return out;
}

AccuracyTriplet accuracy_triplet(const CorpusView& view, const Hypotheses& hyps) {
  check_view(view, hyps);
  AccuracyScore correct, wrong;
  for (std::size_t i = 0; i < view.size(); ++i) {
    const TripletRecord& r = view[i];
    const TokenSequence hyp = tokenize(hyps.lines[view.indices()[i]]);
    correct += term_accuracy(hyp, r.correct_forms());
    wrong += term_accuracy(hyp, r.wrong_forms());
  }
  AccuracyTriplet out;
  out.matched_correct = correct.matched;
  out.matched_wrong = wrong.matched;
  out.total = correct.total;
  // A view whose records carry no terms has no defined accuracy; report 0 rather than NaN.
  out.metric = MetricTriplet::make(correct.value().value_or(0.0), wrong.value().value_or(0.0));
  return out;
}

std::string_view display_name(Split s) {
  switch (s) {
    case Split::kOverall: return "Overall";
    case Split::kCat1: return "Cat1";
    case Split::kCat2: return "Cat2";
  }
  return "";
}

std::string_view display_name(FormColumn f) {
  switch (f) {
    case FormColumn::kAll: return "All";
    case FormColumn::kFeminine: return "Feminine";
    case FormColumn::kMasculine: return "Masculine";
  }
  return "";
}

Selector selector_for(Split s, FormColumn f) {
  Selector sel;
  if (s == Split::kCat1) sel.category = Category::kCat1;
  if (s == Split::kCat2) sel.category = Category::kCat2;
  if (f == FormColumn::kFeminine) sel.form = GenderForm::kFeminine;
  if (f == FormColumn::kMasculine) sel.form = GenderForm::kMasculine;
  return sel;
}

EvalReport evaluate(const Corpus& corpus, const Hypotheses& hyps, std::string corpus_id, std::string hypotheses_id) {
  if (hyps.lines.size() != corpus.records.size()) throw AlignmentError(corpus.records.size(), hyps.lines.size());
  EvalReport report;
  report.corpus_id = std::move(corpus_id);
  report.hypotheses_id = std::move(hypotheses_id);
  const CorpusView all(corpus);
  for (Split s : kSplits) {
    for (FormColumn f : kFormColumns) {
      const CorpusView view = filter(all, selector_for(s, f));
      if (view.empty()) continue;
      ReportCell cell;
      cell.n_records = static_cast<std::int64_t>(view.size());
      for (std::size_t i = 0; i < view.size(); ++i) cell.n_terms += static_cast<std::int64_t>(view[i].terms.size());
      cell.bleu = bleu_triplet(view, hyps);
      cell.accuracy = accuracy_triplet(view, hyps);
      report.cells[static_cast<int>(s)][static_cast<int>(f)] = std::move(cell);
    }
  }
  return report;
}

}  // namespace mustshe
