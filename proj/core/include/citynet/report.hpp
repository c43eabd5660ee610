#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "citynet/metrics.hpp"
#include "citynet/pipeline.hpp"

namespace citynet {

/// text: aligned human-readable tables, reals rounded for display.
/// csv: machine-readable, full double precision (shortest round-trip form).
enum class OutputFormat { text, csv };

std::string_view to_string(OutputFormat format);
OutputFormat parse_format(std::string_view text);  // throws ValidationError

/// Shortest decimal string that parses back to exactly this double.
std::string format_full(double value);
std::string format_fixed(double value, int decimals);

/// Six summary rows. Text uses the display names and rounds the ratio to 2
/// decimals, path length and transitivity to 3; csv uses `metric,value` with
/// snake_case names and full precision.
void write_stats(std::ostream& out, const NetworkStats& stats, OutputFormat format);

/// Per-node overlap dump in node-id order. csv schema: `node,value,defined`,
/// the value field left empty when the score is undefined.
void write_scores(std::ostream& out, const std::vector<OverlapScore>& scores,
                  const NodeRegistry& registry, OutputFormat format);

enum class ReportSection { stable, changing, joint };

/// One ranking table as csv with header `rank,city,overlap,dc_rank,dc_delta`.
/// rank is the row position: most stable first for the stable table,
/// most changing first for the changing and joint tables.
void write_report_section_csv(std::ostream& out, const RankingReport& report,
                              const NodeRegistry& registry, ReportSection section);

/// Full report: three aligned tables in text mode; in csv mode the three
/// sections concatenated, each preceded by a `# stable` / `# changing` /
/// `# joint` marker line.
void write_report(std::ostream& out, const RankingReport& report,
                  const NodeRegistry& registry, OutputFormat format);

}  // namespace citynet
