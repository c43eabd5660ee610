#include "citynet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include "citynet/errors.hpp"

namespace citynet {

namespace {

void require_shared_registry(const Snapshot& a, const Snapshot& b) {
  if (&a.registry() != &b.registry())
    throw ValidationError("snapshots must share one node registry");
}

/// Adjacency row of `node` restricted to a direction, sorted by neighbor id.
/// `both` merges the out and in rows, summing weights on common neighbors.
std::vector<Edge> adjacency_row(const Snapshot& s, NodeId node, Direction direction) {
  switch (direction) {
    case Direction::out: {
      const auto row = s.out_edges(node);
      return {row.begin(), row.end()};
    }
    case Direction::in: {
      const auto row = s.in_edges(node);
      return {row.begin(), row.end()};
    }
    case Direction::both:
      break;
  }
  const auto a = s.out_edges(node);
  const auto b = s.in_edges(node);
  std::vector<Edge> merged;
  merged.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].node < b[j].node)) {
      merged.push_back(a[i++]);
    } else if (i == a.size() || b[j].node < a[i].node) {
      merged.push_back(b[j++]);
    } else {
      merged.push_back(Edge{a[i].node, a[i].weight + b[j].weight});
      ++i;
      ++j;
    }
  }
  return merged;
}

/// Distinct-neighbor lists of the undirected unweighted projection, indexed
/// by node id and sorted ascending.
std::vector<std::vector<NodeId>> undirected_adjacency(const Snapshot& s) {
  const std::size_t n = s.registry().size();
  std::vector<std::vector<NodeId>> adj(n);
  for (NodeId v = 0; v < n; ++v) {
    const auto out = s.out_edges(v);
    const auto in = s.in_edges(v);
    auto& row = adj[v];
    row.reserve(out.size() + in.size());
    std::size_t i = 0, j = 0;
    while (i < out.size() || j < in.size()) {
      NodeId next;
      if (j == in.size() || (i < out.size() && out[i].node < in[j].node)) {
        next = out[i++].node;
      } else if (i == out.size() || in[j].node < out[i].node) {
        next = in[j++].node;
      } else {
        next = out[i++].node;
        ++j;
      }
      row.push_back(next);
    }
  }
  return adj;
}

std::size_t sorted_intersection_size(const std::vector<NodeId>& a,
                                     const std::vector<NodeId>& b) {
  std::size_t i = 0, j = 0, count = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (b[j] < a[i]) ++j;
    else { ++count; ++i; ++j; }
  }
  return count;
}

}  // namespace

std::string_view to_string(Mode mode) {
  return mode == Mode::binary ? "binary" : "weighted";
}

std::string_view to_string(Direction direction) {
  switch (direction) {
    case Direction::out: return "out";
    case Direction::in: return "in";
    default: return "both";
  }
}

Mode parse_mode(std::string_view text) {
  if (text == "binary") return Mode::binary;
  if (text == "weighted") return Mode::weighted;
  throw ValidationError("unknown mode '" + std::string(text) + "', expected binary|weighted");
}

Direction parse_direction(std::string_view text) {
  if (text == "out") return Direction::out;
  if (text == "in") return Direction::in;
  if (text == "both") return Direction::both;
  throw ValidationError("unknown direction '" + std::string(text) +
                        "', expected out|in|both");
}

std::vector<double> degree_centrality(const Snapshot& snapshot, Mode mode,
                                      Direction direction) {
  const std::size_t n = snapshot.registry().size();
  std::vector<double> values(n, 0.0);
  for (NodeId v = 0; v < n; ++v) {
    double out_part, in_part;
    if (mode == Mode::binary) {
      out_part = static_cast<double>(snapshot.out_degree(v));
      in_part = static_cast<double>(snapshot.in_degree(v));
    } else {
      out_part = static_cast<double>(snapshot.out_strength(v));
      in_part = static_cast<double>(snapshot.in_strength(v));
    }
    switch (direction) {
      case Direction::out: values[v] = out_part; break;
      case Direction::in: values[v] = in_part; break;
      case Direction::both: values[v] = out_part + in_part; break;
    }
  }
  return values;
}

OverlapScore topological_overlap(const Snapshot& earlier, const Snapshot& later,
                                 NodeId node, Mode mode, Direction direction) {
  require_shared_registry(earlier, later);
  const std::vector<Edge> row1 = adjacency_row(earlier, node, direction);
  const std::vector<Edge> row2 = adjacency_row(later, node, direction);

  OverlapScore score;
  score.node = node;
  score.mode = mode;
  score.direction = direction;

  double sum1 = 0.0, sum2 = 0.0, product_sum = 0.0;
  if (mode == Mode::binary) {
    sum1 = static_cast<double>(row1.size());
    sum2 = static_cast<double>(row2.size());
  } else {
    for (const Edge& e : row1) sum1 += static_cast<double>(e.weight);
    for (const Edge& e : row2) sum2 += static_cast<double>(e.weight);
  }
  if (sum1 <= 0.0 || sum2 <= 0.0) return score;  // undefined, value absent

  std::size_t i = 0, j = 0;
  while (i < row1.size() && j < row2.size()) {
    if (row1[i].node < row2[j].node) {
      ++i;
    } else if (row2[j].node < row1[i].node) {
      ++j;
    } else {
      product_sum += mode == Mode::binary
                         ? 1.0
                         : static_cast<double>(row1[i].weight) *
                               static_cast<double>(row2[j].weight);
      ++i;
      ++j;
    }
  }

  score.defined = true;
  score.value = product_sum / std::sqrt(sum1 * sum2);
  return score;
}

std::vector<OverlapScore> topological_overlap_all(const Snapshot& earlier,
                                                  const Snapshot& later, Mode mode,
                                                  Direction direction) {
  require_shared_registry(earlier, later);
  const std::size_t n = earlier.registry().size();
  std::vector<OverlapScore> scores;
  scores.reserve(n);
  for (NodeId v = 0; v < n; ++v)
    scores.push_back(topological_overlap(earlier, later, v, mode, direction));
  return scores;
}

double transitivity(const Snapshot& snapshot) {
  const auto adj = undirected_adjacency(snapshot);

  unsigned long long paths2 = 0;
  for (const auto& row : adj) {
    const unsigned long long d = row.size();
    if (d >= 2) paths2 += d * (d - 1) / 2;
  }
  if (paths2 == 0) return 0.0;

  // Each triangle is seen once per participating edge, i.e. three times.
  unsigned long long closed = 0;
  for (NodeId u = 0; u < adj.size(); ++u)
    for (NodeId v : adj[u])
      if (v > u) closed += sorted_intersection_size(adj[u], adj[v]);

  return static_cast<double>(closed) / static_cast<double>(paths2);
}

double average_path_length(const Snapshot& snapshot) {
  const auto adj = undirected_adjacency(snapshot);
  const std::vector<NodeId> members = snapshot.members();
  if (members.size() < 2) return 0.0;

  // Largest connected component; first one found wins ties, and members are
  // scanned in ascending id order.
  const std::size_t n = adj.size();
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<NodeId> best, current, queue;
  for (NodeId start : members) {
    if (seen[start]) continue;
    current.clear();
    queue.clear();
    queue.push_back(start);
    seen[start] = 1;
    while (!queue.empty()) {
      const NodeId u = queue.back();
      queue.pop_back();
      current.push_back(u);
      for (NodeId w : adj[u]) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    if (current.size() > best.size()) best = current;
  }
  if (best.size() < 2) return 0.0;

  std::sort(best.begin(), best.end());
  std::vector<std::int64_t> dist(n, -1);
  unsigned long long total = 0;
  for (NodeId source : best) {
    for (NodeId v : best) dist[v] = -1;
    dist[source] = 0;
    std::queue<NodeId> bfs;
    bfs.push(source);
    while (!bfs.empty()) {
      const NodeId u = bfs.front();
      bfs.pop();
      for (NodeId w : adj[u]) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          bfs.push(w);
        }
      }
    }
    for (NodeId v : best)
      if (v != source) total += static_cast<unsigned long long>(dist[v]);
  }
  const double ordered_pairs =
      static_cast<double>(best.size()) * static_cast<double>(best.size() - 1);
  return static_cast<double>(total) / ordered_pairs;
}

NetworkStats network_stats(const Snapshot& snapshot) {
  NetworkStats stats;
  stats.node_count = snapshot.node_count();
  stats.edge_count = snapshot.edge_count();
  stats.edge_node_ratio =
      stats.node_count == 0
          ? 0.0
          : static_cast<double>(stats.edge_count) / static_cast<double>(stats.node_count);
  const std::size_t n = snapshot.registry().size();
  for (NodeId v = 0; v < n; ++v)
    stats.highest_degree =
        std::max(stats.highest_degree, snapshot.out_degree(v) + snapshot.in_degree(v));
  stats.average_path_length = average_path_length(snapshot);
  stats.transitivity = transitivity(snapshot);
  return stats;
}

}  // namespace citynet
