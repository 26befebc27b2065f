#include "mustshe/corpus.h"

namespace mustshe {

std::string_view to_code(Category c) { return c == Category::kCat1 ? "1" : "2"; }
std::string_view to_code(GenderForm f) { return f == GenderForm::kFeminine ? "F" : "M"; }
std::string_view to_code(SpeakerGender s) { return s == SpeakerGender::kFemale ? "F" : "M"; }

std::optional<Category> category_from_code(std::string_view code) {
  if (code == "1") return Category::kCat1;
  if (code == "2") return Category::kCat2;
  return std::nullopt;
}

std::optional<GenderForm> form_from_code(std::string_view code) {
  if (code == "F") return GenderForm::kFeminine;
  if (code == "M") return GenderForm::kMasculine;
  return std::nullopt;
}

std::optional<SpeakerGender> speaker_from_code(std::string_view code) {
  if (code == "F") return SpeakerGender::kFemale;
  if (code == "M") return SpeakerGender::kMale;
  return std::nullopt;
}

std::string_view display_name(Category c) { return c == Category::kCat1 ? "Cat1" : "Cat2"; }
std::string_view display_name(GenderForm f) { return f == GenderForm::kFeminine ? "Feminine" : "Masculine"; }

std::vector<std::string> TripletRecord::correct_forms() const {
  std::vector<std::string> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(t.correct_form);
  return out;
}

std::vector<std::string> TripletRecord::wrong_forms() const {
  std::vector<std::string> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(t.wrong_form);
  return out;
}

CorpusView::CorpusView(const Corpus& corpus) : corpus_(&corpus) {
  indices_.reserve(corpus.records.size());
  for (std::size_t i = 0; i < corpus.records.size(); ++i) indices_.push_back(i);
}

CorpusView::CorpusView(const Corpus& corpus, std::vector<std::size_t> indices)
    : corpus_(&corpus), indices_(std::move(indices)) {}

Corpus CorpusView::to_corpus() const {
  Corpus out{corpus_->language_pair, {}};
  out.records.reserve(indices_.size());
  for (std::size_t i : indices_) out.records.push_back(corpus_->records[i]);
  return out;
}

bool Selector::matches(const TripletRecord& r) const {
  return (!category || *category == r.category) && (!form || *form == r.form) &&
         (!speaker || *speaker == r.speaker);
}

CorpusView filter(const CorpusView& view, const RecordPredicate& pred) {
  std::vector<std::size_t> kept;
  for (std::size_t i : view.indices())
    if (pred(view.corpus().records[i])) kept.push_back(i);
  return CorpusView(view.corpus(), std::move(kept));
}

CorpusView filter(const CorpusView& view, const Selector& selector) {
  return filter(view, [&](const TripletRecord& r) { return selector.matches(r); });
}

CorpusView filter(const Corpus& corpus, const Selector& selector) { return filter(CorpusView(corpus), selector); }

}  // namespace mustshe
