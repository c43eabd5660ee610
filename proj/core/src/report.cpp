#include "citynet/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <ostream>

#include "citynet/errors.hpp"

namespace citynet {

namespace {

constexpr std::string_view kRankingHeader = "rank,city,overlap,dc_rank,dc_delta";

struct TableRow {
  std::size_t rank;
  const JointRow* row;
};

/// Rows of one section, in presentation order. The stable table reads the
/// canonical ascending-overlap joint order backwards.
std::vector<TableRow> section_rows(const RankingReport& report, ReportSection section) {
  std::vector<TableRow> rows;
  const auto& joint = report.joint;
  switch (section) {
    case ReportSection::stable:
      rows.reserve(report.effective_top_n);
      for (std::size_t i = 0; i < report.effective_top_n; ++i)
        rows.push_back(TableRow{i + 1, &joint[joint.size() - 1 - i]});
      break;
    case ReportSection::changing:
      rows.reserve(report.effective_top_n);
      for (std::size_t i = 0; i < report.effective_top_n; ++i)
        rows.push_back(TableRow{i + 1, &joint[i]});
      break;
    case ReportSection::joint:
      rows.reserve(joint.size());
      for (std::size_t i = 0; i < joint.size(); ++i)
        rows.push_back(TableRow{i + 1, &joint[i]});
      break;
  }
  return rows;
}

std::string_view section_name(ReportSection section) {
  switch (section) {
    case ReportSection::stable: return "stable";
    case ReportSection::changing: return "changing";
    default: return "joint";
  }
}

std::string_view section_title(ReportSection section) {
  switch (section) {
    case ReportSection::stable:
      return "Stable cities (highest topological overlap)";
    case ReportSection::changing:
      return "Changing cities (lowest topological overlap)";
    default:
      return "Joint comparison (most changing first)";
  }
}

void write_text_table(std::ostream& out, const RankingReport& report,
                      const NodeRegistry& registry, ReportSection section) {
  const std::vector<TableRow> rows = section_rows(report, section);

  const std::array<std::string, 5> headers = {"Rank", "City", "Overlap", "DC-Rank",
                                              "DC-Delta"};
  std::vector<std::array<std::string, 5>> cells;
  cells.reserve(rows.size());
  for (const TableRow& r : rows)
    cells.push_back({std::to_string(r.rank), registry.label_of(r.row->node),
                     format_fixed(r.row->overlap, 3), std::to_string(r.row->dc_rank),
                     std::to_string(r.row->dc_delta)});

  std::array<std::size_t, 5> width{};
  for (std::size_t c = 0; c < 5; ++c) width[c] = headers[c].size();
  for (const auto& row : cells)
    for (std::size_t c = 0; c < 5; ++c) width[c] = std::max(width[c], row[c].size());

  auto write_row = [&](const std::array<std::string, 5>& row) {
    for (std::size_t c = 0; c < 5; ++c) {
      if (c) out << "  ";
      const std::size_t pad = width[c] - row[c].size();
      if (c == 1) {  // city column is left-aligned
        out << row[c];
        if (c + 1 < 5) out << std::string(pad, ' ');
      } else {
        out << std::string(pad, ' ') << row[c];
      }
    }
    out << '\n';
  };

  out << section_title(section) << '\n';
  write_row(headers);
  for (const auto& row : cells) write_row(row);
}

}  // namespace

std::string_view to_string(OutputFormat format) {
  return format == OutputFormat::text ? "text" : "csv";
}

OutputFormat parse_format(std::string_view text) {
  if (text == "text") return OutputFormat::text;
  if (text == "csv") return OutputFormat::csv;
  throw ValidationError("unknown format '" + std::string(text) + "', expected text|csv");
}

std::string format_full(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, end);
}

std::string format_fixed(double value, int decimals) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
  return buffer;
}

void write_stats(std::ostream& out, const NetworkStats& stats, OutputFormat format) {
  if (format == OutputFormat::text) {
    out << "Nodes," << stats.node_count << '\n';
    out << "Edges," << stats.edge_count << '\n';
    out << "Edge-Node Ratio," << format_fixed(stats.edge_node_ratio, 2) << '\n';
    out << "Highest Degree," << stats.highest_degree << '\n';
    out << "Average Path Length," << format_fixed(stats.average_path_length, 3) << '\n';
    out << "Transitivity," << format_fixed(stats.transitivity, 3) << '\n';
    return;
  }
  out << "metric,value\n";
  out << "nodes," << stats.node_count << '\n';
  out << "edges," << stats.edge_count << '\n';
  out << "edge_node_ratio," << format_full(stats.edge_node_ratio) << '\n';
  out << "highest_degree," << stats.highest_degree << '\n';
  out << "average_path_length," << format_full(stats.average_path_length) << '\n';
  out << "transitivity," << format_full(stats.transitivity) << '\n';
}

void write_scores(std::ostream& out, const std::vector<OverlapScore>& scores,
                  const NodeRegistry& registry, OutputFormat format) {
  if (format == OutputFormat::csv) {
    out << "node,value,defined\n";
    for (const OverlapScore& s : scores) {
      out << registry.label_of(s.node) << ',';
      if (s.defined) out << format_full(s.value);
      out << ',' << (s.defined ? "true" : "false") << '\n';
    }
    return;
  }
  std::size_t width = 4;  // "City"
  for (const OverlapScore& s : scores)
    width = std::max(width, registry.label_of(s.node).size());
  out << "City" << std::string(width - 4, ' ') << "  Overlap\n";
  for (const OverlapScore& s : scores) {
    const std::string& label = registry.label_of(s.node);
    out << label << std::string(width - label.size(), ' ') << "  "
        << (s.defined ? format_fixed(s.value, 3) : "undefined") << '\n';
  }
}

void write_report_section_csv(std::ostream& out, const RankingReport& report,
                              const NodeRegistry& registry, ReportSection section) {
  out << kRankingHeader << '\n';
  for (const TableRow& r : section_rows(report, section))
    out << r.rank << ',' << registry.label_of(r.row->node) << ','
        << format_full(r.row->overlap) << ',' << r.row->dc_rank << ','
        << r.row->dc_delta << '\n';
}

void write_report(std::ostream& out, const RankingReport& report,
                  const NodeRegistry& registry, OutputFormat format) {
  constexpr std::array<ReportSection, 3> sections = {
      ReportSection::stable, ReportSection::changing, ReportSection::joint};
  bool first = true;
  for (ReportSection section : sections) {
    if (!first) out << '\n';
    first = false;
    if (format == OutputFormat::text) {
      write_text_table(out, report, registry, section);
    } else {
      out << "# " << section_name(section) << '\n';
      write_report_section_csv(out, report, registry, section);
    }
  }
}

}  // namespace citynet
