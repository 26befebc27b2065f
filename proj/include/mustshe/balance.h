#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mustshe/mining.h"

namespace mustshe {

/// Per-cell quotas indexed [category][form].
struct Quota {
  std::array<std::array<std::int64_t, 2>, 2> cells{};

  static Quota uniform(std::int64_t n);
  /// "40" for every cell, or a list like "1F=40,1M=40,2F=30,2M=30". Throws UsageError.
  static Quota parse(const std::string& spec);
  std::int64_t at(Category c, GenderForm f) const {
    return cells[static_cast<int>(c)][static_cast<int>(f)];
  }
};

struct Shortfall {
  Category category;
  GenderForm form;
  std::int64_t quota;
  std::int64_t available;
};

struct BalanceResult {
  std::vector<Candidate> selected;  // grouped by cell (1F, 1M, 2F, 2M), sorted by key within
  std::vector<Shortfall> shortfalls;
};

/// Seeded uniform sampling without replacement, min(quota, available) per cell.
/// Candidates are sorted by content before sampling, so the selection does not
/// depend on input order.
BalanceResult balance_sample(const std::vector<Candidate>& candidates, const Quota& quota,
                             std::uint64_t seed);

}  // namespace mustshe
