#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mustshe/corpus.h"

namespace mustshe {

struct CorpusStats {
  // counts[category][form], indexed by the enum values.
  std::array<std::array<std::int64_t, 2>, 2> counts{};
  std::array<std::int64_t, 2> speaker_counts{};
  std::int64_t total_records = 0;
  std::int64_t total_term_tokens = 0;

  std::int64_t count(Category c, GenderForm f) const {
    return counts[static_cast<int>(c)][static_cast<int>(f)];
  }
  std::int64_t speakers(SpeakerGender s) const { return speaker_counts[static_cast<int>(s)]; }

  CorpusStats& operator+=(const CorpusStats& other);
  bool operator==(const CorpusStats&) const = default;
};

CorpusStats operator+(CorpusStats a, const CorpusStats& b);

CorpusStats stats(const CorpusView& view);
CorpusStats stats(const Corpus& corpus);

/// Table with Fem/Masc/Total columns and Cat1/Cat2/Total rows.
std::string render_stats_markdown(const CorpusStats& s, const std::string& title);
std::string render_stats_tsv(const CorpusStats& s);

/// Whitespace-normalized (talk, source) key used to align corpora across language pairs.
std::string alignment_key(const TripletRecord& r);

struct RecordPair {
  const TripletRecord* a;
  const TripletRecord* b;
};

/// Records present in both corpora, in `a`'s order. Throws Error naming the
/// key when a key occurs twice within one corpus.
std::vector<RecordPair> common_subset(const Corpus& a, const Corpus& b);

}  // namespace mustshe
