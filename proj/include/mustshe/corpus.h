#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mustshe {

/// Where the information that disambiguates gender lives.
enum class Category {
  kCat1,  // speaker's own gender (audio)
  kCat2,  // utterance content
};

enum class GenderForm { kFeminine, kMasculine };

enum class SpeakerGender { kFemale, kMale };

// Canonical TSV codes: Category "1"/"2", GenderForm "F"/"M", SpeakerGender "F"/"M".
std::string_view to_code(Category c);
std::string_view to_code(GenderForm f);
std::string_view to_code(SpeakerGender s);
std::optional<Category> category_from_code(std::string_view code);
std::optional<GenderForm> form_from_code(std::string_view code);
std::optional<SpeakerGender> speaker_from_code(std::string_view code);

std::string_view display_name(Category c);
std::string_view display_name(GenderForm f);

struct GenderTermPair {
  std::string correct_form;
  std::string wrong_form;

  bool operator==(const GenderTermPair&) const = default;
};

/// One annotated segment: source, correct reference, wrong reference and metadata.
struct TripletRecord {
  std::string id;
  std::string talk;
  std::string source;
  std::string ref_correct;
  std::string ref_wrong;
  SpeakerGender speaker = SpeakerGender::kFemale;
  GenderForm form = GenderForm::kFeminine;
  Category category = Category::kCat1;
  std::vector<GenderTermPair> terms;  // multiset; order preserved

  std::vector<std::string> correct_forms() const;
  std::vector<std::string> wrong_forms() const;

  bool operator==(const TripletRecord&) const = default;
};

struct Corpus {
  std::string language_pair;
  std::vector<TripletRecord> records;

  bool operator==(const Corpus&) const = default;
};

/// Order-preserving subset of a corpus, by index. The corpus must outlive the view.
class CorpusView {
 public:
  explicit CorpusView(const Corpus& corpus);
  CorpusView(const Corpus& corpus, std::vector<std::size_t> indices);

  const Corpus& corpus() const { return *corpus_; }
  const std::vector<std::size_t>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  const TripletRecord& operator[](std::size_t i) const { return corpus_->records[indices_[i]]; }

  /// Materializes the view as a standalone corpus.
  Corpus to_corpus() const;

 private:
  const Corpus* corpus_;
  std::vector<std::size_t> indices_;
};

/// Conjunction of optional metadata constraints; an empty selector matches everything.
struct Selector {
  std::optional<Category> category;
  std::optional<GenderForm> form;
  std::optional<SpeakerGender> speaker;

  bool matches(const TripletRecord& r) const;
};

using RecordPredicate = std::function<bool(const TripletRecord&)>;

CorpusView filter(const CorpusView& view, const RecordPredicate& pred);
CorpusView filter(const CorpusView& view, const Selector& selector);
CorpusView filter(const Corpus& corpus, const Selector& selector);

}  // namespace mustshe
