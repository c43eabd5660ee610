#include "citynet/synth.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "citynet/errors.hpp"

namespace citynet {

namespace {

// Ordered non-diagonal pair codes: code = src * (n-1) + dst', where dst'
// skips the diagonal entry.
std::pair<NodeId, NodeId> decode_pair(std::uint64_t code, std::uint64_t n) {
  const auto src = static_cast<NodeId>(code / (n - 1));
  const auto rest = static_cast<NodeId>(code % (n - 1));
  const NodeId dst = rest + (rest >= src ? 1 : 0);
  return {src, dst};
}

std::string node_label(std::uint32_t index, int width) {
  std::string digits = std::to_string(index);
  std::string label = "n";
  label.append(static_cast<std::size_t>(width) - digits.size(), '0');
  label += digits;
  return label;
}

}  // namespace

SnapshotPair generate_pair(const SynthConfig& config) {
  if (config.node_count == 0) throw ValidationError("node_count must be positive");
  if (config.max_weight == 0) throw ValidationError("max_weight must be positive");
  if (config.retain_probability < 0.0 || config.retain_probability > 1.0)
    throw ValidationError("retain_probability must lie in [0, 1]");

  const std::uint64_t n = config.node_count;
  const std::uint64_t pair_space = n * (n - 1);
  if (config.edge_count > pair_space)
    throw ValidationError("edge_count exceeds the number of ordered node pairs");
  if (config.new_edge_count > pair_space - config.edge_count)
    throw ValidationError("new_edge_count exceeds the remaining free node pairs");

  Rng rng(config.seed);

  int width = 1;
  for (std::uint32_t v = config.node_count - 1; v >= 10; v /= 10) ++width;

  auto registry = std::make_shared<NodeRegistry>();
  SnapshotBuilder earlier("t0", registry);
  SnapshotBuilder later("t1", registry);
  for (std::uint32_t v = 0; v < config.node_count; ++v) {
    const NodeId id = earlier.add_node(node_label(v, width));
    later.add_node(id);
  }

  // Floyd subset sampling: uniform edge_count-subset of the pair space.
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(config.edge_count * 2 + 16);
  for (std::uint64_t j = pair_space - config.edge_count; j < pair_space; ++j) {
    const std::uint64_t t = rng.below(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::uint64_t> codes(chosen.begin(), chosen.end());
  std::sort(codes.begin(), codes.end());

  std::vector<Weight> weights(codes.size());
  for (std::size_t i = 0; i < codes.size(); ++i)
    weights[i] = 1 + rng.below(config.max_weight);

  for (std::size_t i = 0; i < codes.size(); ++i) {
    const auto [src, dst] = decode_pair(codes[i], n);
    earlier.upsert_edge(src, dst, weights[i]);
  }

  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (rng.unit() < config.retain_probability) {
      const auto [src, dst] = decode_pair(codes[i], n);
      later.upsert_edge(src, dst, weights[i]);
    }
  }

  std::unordered_set<std::uint64_t> used = chosen;
  std::uint64_t added = 0;
  while (added < config.new_edge_count) {
    const std::uint64_t code = rng.below(pair_space);
    if (!used.insert(code).second) continue;
    const auto [src, dst] = decode_pair(code, n);
    later.upsert_edge(src, dst, 1 + rng.below(config.max_weight));
    ++added;
  }

  SnapshotPair pair;
  pair.registry = registry;
  pair.earlier = earlier.freeze();
  pair.later = later.freeze();
  return pair;
}

}  // namespace citynet
