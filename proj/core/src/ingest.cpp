#include "citynet/ingest.hpp"

#include <array>
#include <fstream>
#include <istream>

#include "citynet/errors.hpp"

namespace citynet {

namespace {

constexpr std::string_view kHeader =
    "group_id,owner_firm_id,owned_firm_id,owner_city,owned_city";

bool split5(const std::string& line, std::array<std::string, 5>& out) {
  std::size_t start = 0;
  for (int field = 0; field < 4; ++field) {
    const auto comma = line.find(',', start);
    if (comma == std::string::npos) return false;
    out[field] = std::string(NodeRegistry::trim(
        std::string_view(line).substr(start, comma - start)));
    start = comma + 1;
  }
  if (line.find(',', start) != std::string::npos) return false;
  out[4] = std::string(NodeRegistry::trim(std::string_view(line).substr(start)));
  return true;
}

}  // namespace

OwnershipParse parse_ownership_file(std::istream& in) {
  OwnershipParse result;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header_seen) {
      if (NodeRegistry::trim(line) != kHeader)
        throw IoError("missing or wrong header, expected '" + std::string(kHeader) + "'");
      header_seen = true;
      continue;
    }
    std::array<std::string, 5> fields;
    if (!split5(line, fields)) {
      result.issues.push_back({line_no, "expected 5 comma-separated fields"});
      continue;
    }
    bool empty_field = false;
    for (const std::string& f : fields) empty_field |= f.empty();
    if (empty_field) {
      result.issues.push_back({line_no, "empty field"});
      continue;
    }
    if (fields[1] == fields[2]) {
      result.issues.push_back({line_no, "owner and owned firm are the same: " + fields[1]});
      continue;
    }
    result.records.push_back(OwnershipRecord{std::move(fields[0]), std::move(fields[1]),
                                             std::move(fields[2]), std::move(fields[3]),
                                             std::move(fields[4])});
  }
  if (!header_seen)
    throw IoError("missing or wrong header, expected '" + std::string(kHeader) + "'");
  return result;
}

OwnershipParse parse_ownership_path(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open ownership file: " + path.string());
  try {
    return parse_ownership_file(in);
  } catch (const IoError& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

CityAggregation aggregate_city_graph(const std::vector<OwnershipRecord>& records,
                                     std::string label,
                                     std::shared_ptr<NodeRegistry> registry) {
  SnapshotBuilder builder(std::move(label), std::move(registry));
  std::uint64_t dropped = 0;
  for (const OwnershipRecord& record : records) {
    const NodeId owner = builder.add_node(record.owner_city);
    const NodeId owned = builder.add_node(record.owned_city);
    if (owner == owned) {
      ++dropped;  // intra-city tie; the city still counts as present
      continue;
    }
    builder.upsert_edge(owner, owned, 1);
  }
  return CityAggregation{builder.freeze(), dropped};
}

}  // namespace citynet
