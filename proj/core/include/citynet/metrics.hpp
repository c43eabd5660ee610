#pragma once

#include <string_view>
#include <vector>

#include "citynet/graph.hpp"

namespace citynet {

/// binary treats every link as 1; weighted uses the aggregated tie counts.
enum class Mode { binary, weighted };

/// Which adjacency entries count as a node's links. `both` folds the two
/// directions together: link weights toward the same neighbor are summed
/// (for binary measures the directions are OR-ed).
enum class Direction { out, in, both };

std::string_view to_string(Mode mode);
std::string_view to_string(Direction direction);
Mode parse_mode(std::string_view text);            // throws ValidationError
Direction parse_direction(std::string_view text);  // throws ValidationError

/// Topological overlap of one node's link set between two snapshots:
///
///   value = sum_j a1[j] * a2[j] / sqrt(sum_j a1[j] * sum_k a2[k])
///
/// where a1, a2 are the node's adjacency rows (binary or weighted, restricted
/// to `direction`) in the earlier and later snapshot. The score is only
/// defined when both row sums are positive; `defined` is false otherwise and
/// `value` must be ignored. Binary scores lie in [0, 1], 1 meaning the link
/// set was fully retained and nothing was added; weighted scores can exceed 1.
struct OverlapScore {
  NodeId node = 0;
  double value = 0.0;
  Mode mode = Mode::weighted;
  Direction direction = Direction::out;
  bool defined = false;
};

/// Whole-graph summary, computed on a frozen snapshot.
struct NetworkStats {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  double edge_node_ratio = 0.0;   // edge_count / node_count, full precision
  std::size_t highest_degree = 0; // max binary total degree (in + out)
  double average_path_length = 0.0;
  double transitivity = 0.0;
};

/// Degree centrality for every registered node, indexed by node id.
/// binary counts distinct neighbors, weighted sums tie counts (strength);
/// Direction::both is the total, in + out. Isolated nodes get 0.
std::vector<double> degree_centrality(const Snapshot& snapshot, Mode mode,
                                      Direction direction);

/// Overlap for a single node. The snapshots must share one registry.
OverlapScore topological_overlap(const Snapshot& earlier, const Snapshot& later,
                                 NodeId node, Mode mode = Mode::weighted,
                                 Direction direction = Direction::out);

/// Overlap for every registered node, in ascending node-id order. Nodes
/// without links in either snapshot come back flagged undefined, never as 0.
std::vector<OverlapScore> topological_overlap_all(const Snapshot& earlier,
                                                  const Snapshot& later,
                                                  Mode mode = Mode::weighted,
                                                  Direction direction = Direction::out);

/// Global clustering coefficient of the undirected unweighted projection:
/// 3 * triangles / paths of length 2. Zero when no such path exists.
double transitivity(const Snapshot& snapshot);

/// Mean shortest-path distance over ordered node pairs inside the largest
/// connected component of the undirected unweighted projection. Zero when
/// fewer than two nodes are connected. Ties between equally large components
/// go to the one containing the smallest node id.
double average_path_length(const Snapshot& snapshot);

NetworkStats network_stats(const Snapshot& snapshot);

}  // namespace citynet
