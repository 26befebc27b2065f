#pragma once

#include <string>
#include <string_view>

#include "mustshe/errors.h"
#include "mustshe/evaluator.h"

namespace mustshe {

enum class ReportFormat { kMarkdown, kTsv, kJson };

/// Accepts "md"/"markdown", "tsv", "json"/"structured". Throws UsageError otherwise.
ReportFormat parse_report_format(std::string_view name);

/// Marker printed for cells whose view is empty.
inline constexpr std::string_view kAbsentCell = "–";

std::string render_report(const EvalReport& report, ReportFormat format);

/// Inverse of the JSON rendering. Throws ParseError.
EvalReport report_from_json(std::string_view json_text);

}  // namespace mustshe
