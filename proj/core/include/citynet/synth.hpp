#pragma once

#include <cstdint>
#include <memory>
#include <random>

#include "citynet/graph.hpp"

namespace citynet {

/// Deterministic random source. std::mt19937_64 has a fully specified output
/// sequence, and the two derived draws below are pinned here so that a seed
/// produces the same snapshot pair on every platform and compiler:
///   below(b): unbiased rejection sampling — draw 64-bit words, discard
///             values under 2^64 mod b, return word mod b.
///   unit():   top 53 bits of one word scaled by 2^-53, uniform in [0, 1).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = engine_();
      if (x >= threshold) return x % bound;
    }
  }

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

struct SynthConfig {
  std::uint32_t node_count = 0;
  std::uint64_t edge_count = 0;
  double retain_probability = 1.0;
  std::uint64_t new_edge_count = 0;
  Weight max_weight = 1;
  std::uint64_t seed = 0;
};

struct SnapshotPair {
  std::shared_ptr<NodeRegistry> registry;
  Snapshot earlier;
  Snapshot later;
};

/// Generates two snapshots over the same cities (labels "n0", "n1", ...,
/// zero-padded to a fixed width). The earlier snapshot holds exactly
/// edge_count directed edges with weights uniform in [1, max_weight]; the
/// later one keeps each edge independently with retain_probability (same
/// weight) and gains new_edge_count fresh edges absent from the earlier
/// snapshot. Fully reproducible from config.seed; the draw order is pinned:
///   1. earlier edges: Floyd subset sampling over ordered non-diagonal pairs,
///      one below(j+1) per step, then weights for the pairs sorted ascending;
///   2. retention: one unit() per earlier edge in that sorted order;
///   3. new edges: repeated below(pair_space) until an unused pair is found,
///      its weight drawn immediately after acceptance.
SnapshotPair generate_pair(const SynthConfig& config);

}  // namespace citynet
