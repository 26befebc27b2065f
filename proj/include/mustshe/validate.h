#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mustshe/corpus.h"
#include "mustshe/corpus_io.h"

namespace mustshe {

enum class Severity { kError, kWarning };

enum class IssueKind {
  kTermNotInRef,
  kRefLengthMismatch,
  kDiffOutsideTerms,
  kIdenticalPair,
  kDuplicateId,
  kBadField,
};

std::string_view to_string(Severity s);
std::string_view to_string(IssueKind k);

/// Record id used for issues about the file header rather than a record.
inline constexpr std::string_view kHeaderRecordId = "<header>";

struct ValidationIssue {
  std::string record_id;
  Severity severity = Severity::kError;
  IssueKind kind = IssueKind::kBadField;
  std::string message;
};

std::vector<ValidationIssue> validate_record(const TripletRecord& record);

/// Checks every record invariant. Empty result iff the corpus is fully consistent.
std::vector<ValidationIssue> validate(const Corpus& corpus);

/// Adds parser notes (e.g. ignored columns) as header warnings.
std::vector<ValidationIssue> validate(const Corpus& corpus, const std::vector<ParseNote>& notes);

bool has_errors(const std::vector<ValidationIssue>& issues);

}  // namespace mustshe
