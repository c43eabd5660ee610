#pragma once

#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "citynet/graph.hpp"

namespace citynet::testing {

using LabeledEdge = std::tuple<std::string, std::string, Weight>;

/// Snapshot from labeled edges plus optional isolated members.
inline Snapshot make_snapshot(std::shared_ptr<NodeRegistry> registry, std::string label,
                              const std::vector<LabeledEdge>& edges,
                              const std::vector<std::string>& isolated = {}) {
  SnapshotBuilder builder(std::move(label), std::move(registry));
  for (const std::string& node : isolated) builder.add_node(node);
  for (const auto& [src, dst, w] : edges) builder.upsert_edge(src, dst, w);
  return builder.freeze();
}

}  // namespace citynet::testing
