#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace citynet {

using NodeId = std::uint32_t;
using Weight = std::uint64_t;

/// Bijective city-label <-> dense-id map, shared by the snapshots that are
/// compared against each other. Labels are whitespace-trimmed; registration
/// is idempotent.
class NodeRegistry {
 public:
  NodeId register_node(std::string_view label);

  bool contains(std::string_view label) const;
  NodeId id_of(std::string_view label) const;  // throws LookupError if unknown
  const std::string& label_of(NodeId node) const;
  std::size_t size() const { return labels_.size(); }

  static std::string_view trim(std::string_view text);

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> ids_;
};

/// One adjacency entry: neighbor plus the aggregated tie count.
struct Edge {
  NodeId node = 0;
  Weight weight = 0;
};

/// An edge spelled out with both endpoints, as stored in edge-list files.
struct EdgeRecord {
  NodeId src = 0;
  NodeId dst = 0;
  Weight weight = 0;
};

class Snapshot;

/// Mutable accumulator for one time point. Single-writer; freeze() produces
/// the immutable Snapshot all metric code operates on.
class SnapshotBuilder {
 public:
  SnapshotBuilder(std::string label, std::shared_ptr<NodeRegistry> registry = nullptr);

  NodeRegistry& registry() { return *registry_; }
  std::shared_ptr<NodeRegistry> registry_ptr() const { return registry_; }

  /// Registers the label (idempotent) and marks the node present in this
  /// snapshot even if it never gains an edge.
  NodeId add_node(std::string_view label);
  void add_node(NodeId node);

  /// Adds delta ties to the directed edge src -> dst, creating it if absent.
  /// Self-loops are rejected; both endpoints become members.
  void upsert_edge(NodeId src, NodeId dst, Weight delta = 1);
  void upsert_edge(std::string_view src, std::string_view dst, Weight delta = 1);

  /// Builds the immutable snapshot and resets this builder.
  Snapshot freeze();

 private:
  void check_registered(NodeId node) const;
  void mark_member(NodeId node);

  std::string label_;
  std::shared_ptr<NodeRegistry> registry_;
  std::unordered_map<std::uint64_t, Weight> weights_;  // (src<<32|dst) -> weight
  std::vector<std::uint8_t> member_;
};

/// Immutable weighted directed simple graph of cities at one time point.
/// No self-loops, at most one edge per ordered pair, every weight >= 1.
/// Shareable across threads once frozen.
class Snapshot {
 public:
  Snapshot() = default;

  const std::string& time_label() const { return label_; }
  const NodeRegistry& registry() const { return *registry_; }
  std::shared_ptr<const NodeRegistry> registry_ptr() const { return registry_; }

  /// Number of cities present in this snapshot (isolated members included).
  std::size_t node_count() const { return member_count_; }
  std::size_t edge_count() const { return edge_count_; }
  Weight total_weight() const { return total_weight_; }

  bool is_member(NodeId node) const;

  /// Out-edges sorted by neighbor id; empty for nodes absent here.
  std::span<const Edge> out_edges(NodeId node) const;
  std::span<const Edge> in_edges(NodeId node) const;

  Weight out_strength(NodeId node) const;
  Weight in_strength(NodeId node) const;
  std::size_t out_degree(NodeId node) const { return out_edges(node).size(); }
  std::size_t in_degree(NodeId node) const { return in_edges(node).size(); }

  /// Member ids in ascending order.
  std::vector<NodeId> members() const;

  /// All edges sorted by (src, dst).
  std::vector<EdgeRecord> edges() const;

 private:
  friend class SnapshotBuilder;
  void check_registered(NodeId node) const;

  std::string label_;
  std::shared_ptr<const NodeRegistry> registry_;
  std::size_t frozen_nodes_ = 0;  // registry size at freeze time
  std::size_t member_count_ = 0;
  std::size_t edge_count_ = 0;
  Weight total_weight_ = 0;
  std::vector<std::uint8_t> member_;
  std::vector<std::size_t> out_offsets_;
  std::vector<std::size_t> in_offsets_;
  std::vector<Edge> out_edges_;
  std::vector<Edge> in_edges_;
  std::vector<Weight> out_strength_;
  std::vector<Weight> in_strength_;
};

/// Value equality by labels: same time label, same member cities, same
/// weighted edges. Registries may assign different ids on each side.
bool same_graph(const Snapshot& a, const Snapshot& b);

}  // namespace citynet
