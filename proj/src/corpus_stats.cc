#include "mustshe/corpus_stats.h"

#include <map>
#include <sstream>

#include "mustshe/errors.h"
#include "mustshe/unicode.h"

namespace mustshe {

CorpusStats& CorpusStats::operator+=(const CorpusStats& other) {
  for (int c = 0; c < 2; ++c)
    for (int f = 0; f < 2; ++f) counts[c][f] += other.counts[c][f];
  for (int s = 0; s < 2; ++s) speaker_counts[s] += other.speaker_counts[s];
  total_records += other.total_records;
  total_term_tokens += other.total_term_tokens;
  return *this;
}

CorpusStats operator+(CorpusStats a, const CorpusStats& b) { return a += b; }

CorpusStats stats(const CorpusView& view) {
  CorpusStats s;
  for (std::size_t i = 0; i < view.size(); ++i) {
    const TripletRecord& r = view[i];
    ++s.counts[static_cast<int>(r.category)][static_cast<int>(r.form)];
    ++s.speaker_counts[static_cast<int>(r.speaker)];
    ++s.total_records;
    s.total_term_tokens += static_cast<std::int64_t>(r.terms.size());
  }
  return s;
}

CorpusStats stats(const Corpus& corpus) { return stats(CorpusView(corpus)); }

std::string render_stats_markdown(const CorpusStats& s, const std::string& title) {
  auto F = GenderForm::kFeminine;
  auto M = GenderForm::kMasculine;
  std::ostringstream out;
  if (!title.empty()) out << "## " << title << "\n\n";
  out << "| | Fem | Masc | Tot. |\n|---|---:|---:|---:|\n";
  for (Category c : {Category::kCat1, Category::kCat2})
    out << "| " << display_name(c) << " | " << s.count(c, F) << " | " << s.count(c, M) << " | "
        << s.count(c, F) + s.count(c, M) << " |\n";
  const auto fem = s.count(Category::kCat1, F) + s.count(Category::kCat2, F);
  const auto masc = s.count(Category::kCat1, M) + s.count(Category::kCat2, M);
  out << "| Tot. | " << fem << " | " << masc << " | " << s.total_records << " |\n\n";
  out << "Records: " << s.total_records << " (" << s.total_term_tokens << " gender-marked words)\n";
  out << "Speakers: " << s.speakers(SpeakerGender::kFemale) << " female / " << s.speakers(SpeakerGender::kMale)
      << " male\n";
  return out.str();
}

std::string render_stats_tsv(const CorpusStats& s) {
  std::ostringstream out;
  out << "key\tvalue\n";
  for (Category c : {Category::kCat1, Category::kCat2})
    for (GenderForm f : {GenderForm::kFeminine, GenderForm::kMasculine})
      out << display_name(c) << "/" << display_name(f) << "\t" << s.count(c, f) << "\n";
  out << "speaker/F\t" << s.speakers(SpeakerGender::kFemale) << "\n";
  out << "speaker/M\t" << s.speakers(SpeakerGender::kMale) << "\n";
  out << "total_records\t" << s.total_records << "\n";
  out << "total_term_tokens\t" << s.total_term_tokens << "\n";
  return out.str();
}

std::string alignment_key(const TripletRecord& r) {
  std::string src;
  bool pending_space = false;
  for (std::size_t pos = 0; pos < r.source.size();) {
    std::size_t begin = pos;
    char32_t c = unicode::next_code_point(r.source, pos);
    if (unicode::is_space(c)) {
      pending_space = !src.empty();
      continue;
    }
    if (pending_space) src += ' ';
    pending_space = false;
    src.append(r.source, begin, pos - begin);
  }
  return r.talk + '\t' + unicode::nfc(src);
}

namespace {

std::map<std::string, const TripletRecord*> index_by_key(const Corpus& c, const char* which) {
  std::map<std::string, const TripletRecord*> index;
  for (const auto& r : c.records) {
    auto key = alignment_key(r);
    if (!index.emplace(key, &r).second) {
      std::string shown = key;
      shown[shown.find('\t')] = '/';
      throw Error(std::string("duplicate alignment key in corpus ") + which + ": " + shown);
    }
  }
  return index;
}

}  // namespace

std::vector<RecordPair> common_subset(const Corpus& a, const Corpus& b) {
  index_by_key(a, "A");
  const auto in_b = index_by_key(b, "B");
  std::vector<RecordPair> pairs;
  for (const auto& r : a.records) {
    auto it = in_b.find(alignment_key(r));
    if (it != in_b.end()) pairs.push_back({&r, it->second});
  }
  return pairs;
}

}  // namespace mustshe
