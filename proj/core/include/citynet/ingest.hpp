#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "citynet/graph.hpp"

namespace citynet {

/// One financial tie: the owner firm holds a share in the owned firm's
/// capital. Each firm sits in a city; group_id is carried but has no role
/// in aggregation.
struct OwnershipRecord {
  std::string group_id;
  std::string owner_firm_id;
  std::string owned_firm_id;
  std::string owner_city;
  std::string owned_city;
};

struct RowIssue {
  std::size_t line = 0;  // 1-based line number in the source stream
  std::string message;
};

struct OwnershipParse {
  std::vector<OwnershipRecord> records;
  std::vector<RowIssue> issues;  // malformed rows, skipped but reported
};

/// Parses `group_id,owner_firm_id,owned_firm_id,owner_city,owned_city` rows.
/// A wrong or missing header raises IoError; bad rows are collected in
/// `issues` and parsing continues.
OwnershipParse parse_ownership_file(std::istream& in);
OwnershipParse parse_ownership_path(const std::filesystem::path& path);

struct CityAggregation {
  Snapshot snapshot;
  std::uint64_t dropped_self_loops = 0;  // records whose firms share one city
};

/// Builds the city graph: one directed edge owner_city -> owned_city per
/// record, tie counts summed per ordered city pair. Records with both firms
/// in the same city produce no edge but still register the city, so node
/// counts reflect data presence.
CityAggregation aggregate_city_graph(const std::vector<OwnershipRecord>& records,
                                     std::string label,
                                     std::shared_ptr<NodeRegistry> registry = nullptr);

}  // namespace citynet
