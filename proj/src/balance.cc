#include "mustshe/balance.h"

#include <algorithm>
#include <limits>
#include <random>
#include <tuple>

#include "mustshe/errors.h"
#include "mustshe/tsv.h"

namespace mustshe {

Quota Quota::uniform(std::int64_t n) {
  Quota q;
  for (auto& row : q.cells) row.fill(n);
  return q;
}

Quota Quota::parse(const std::string& spec) {
  auto parse_count = [&](const std::string& s) {
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty() || v < 0) throw UsageError("bad quota value '" + s + "' in '" + spec + "'");
    return static_cast<std::int64_t>(v);
  };
  if (spec.find('=') == std::string::npos) return uniform(parse_count(tsv::trim(spec)));
  Quota q;
  bool seen[2][2] = {};
  for (const auto& item : tsv::split(spec, ",")) {
    auto kv = tsv::split(item, "=");
    std::string cell = kv.size() == 2 ? tsv::trim(kv[0]) : "";
    if (cell.size() != 2) throw UsageError("bad quota entry '" + item + "' (expected e.g. 1F=40)");
    auto c = category_from_code(cell.substr(0, 1));
    auto f = form_from_code(cell.substr(1, 1));
    if (!c || !f) throw UsageError("bad quota cell '" + cell + "' (expected 1F, 1M, 2F or 2M)");
    int ci = static_cast<int>(*c), fi = static_cast<int>(*f);
    if (seen[ci][fi]) throw UsageError("quota cell " + cell + " given twice");
    seen[ci][fi] = true;
    q.cells[ci][fi] = parse_count(tsv::trim(kv[1]));
  }
  return q;
}

namespace {

auto sort_key(const Candidate& c) {
  return std::tie(c.source, c.target, c.talk, c.rule_id, c.id, c.matched_spans);
}

/// Uniform integer in [0, bound) from raw engine output, by rejection. Unlike
/// std::uniform_int_distribution this is identical across standard libraries.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

BalanceResult balance_sample(const std::vector<Candidate>& candidates, const Quota& quota, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BalanceResult result;
  for (Category cat : {Category::kCat1, Category::kCat2}) {
    for (GenderForm form : {GenderForm::kFeminine, GenderForm::kMasculine}) {
      std::vector<const Candidate*> pool;
      for (const auto& c : candidates)
        if (c.category == cat && c.form == form) pool.push_back(&c);
      std::sort(pool.begin(), pool.end(), [](const Candidate* a, const Candidate* b) { return sort_key(*a) < sort_key(*b); });
      // Several rules can fire on one sentence pair; it enters a cell once.
      pool.erase(std::unique(pool.begin(), pool.end(),
                             [](const Candidate* a, const Candidate* b) {
                               return a->source == b->source && a->target == b->target && a->talk == b->talk;
                             }),
                 pool.end());

      const auto want = quota.at(cat, form);
      const auto available = static_cast<std::int64_t>(pool.size());
      const auto take = std::min(want, available);
      if (available < want) result.shortfalls.push_back({cat, form, want, available});

      // Partial Fisher-Yates: the first `take` slots become the sample.
      for (std::int64_t i = 0; i < take; ++i) {
        auto j = static_cast<std::size_t>(i) + bounded(rng, static_cast<std::uint64_t>(available - i));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
      }
      std::vector<const Candidate*> chosen(pool.begin(), pool.begin() + take);
      std::sort(chosen.begin(), chosen.end(), [](const Candidate* a, const Candidate* b) { return sort_key(*a) < sort_key(*b); });
      for (const auto* c : chosen) result.selected.push_back(*c);
    }
  }
  return result;
}

}  // namespace mustshe
