#include "citynet/pipeline.hpp"

#include <algorithm>
#include <cassert>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "citynet/errors.hpp"

namespace citynet {

namespace {

void require_shared_registry(const Snapshot& a, const Snapshot& b) {
  if (&a.registry() != &b.registry())
    throw ValidationError("snapshots must share one node registry");
}

/// Positive link total under the chosen direction in both snapshots; exactly
/// the condition for the node's overlap to be defined.
bool overlap_defined_for(const Snapshot& earlier, const Snapshot& later, NodeId node,
                         Direction direction) {
  auto row_sum = [&](const Snapshot& s) -> Weight {
    switch (direction) {
      case Direction::out: return s.out_strength(node);
      case Direction::in: return s.in_strength(node);
      default: return s.out_strength(node) + s.in_strength(node);
    }
  };
  return row_sum(earlier) > 0 && row_sum(later) > 0;
}

}  // namespace

std::string_view to_string(DcSource source) {
  switch (source) {
    case DcSource::earlier: return "earlier";
    case DcSource::later: return "later";
    default: return "max";
  }
}

DcSource parse_dc_source(std::string_view text) {
  if (text == "earlier") return DcSource::earlier;
  if (text == "later") return DcSource::later;
  if (text == "max") return DcSource::max;
  throw ValidationError("unknown dc-source '" + std::string(text) +
                        "', expected earlier|later|max");
}

std::vector<NodeId> shortlist(const Snapshot& earlier, const Snapshot& later,
                              std::size_t k, DcSource dc_source, Direction direction) {
  require_shared_registry(earlier, later);
  if (k == 0) throw ValidationError("shortlist size must be positive");

  const NodeRegistry& reg = earlier.registry();
  const std::size_t n = reg.size();

  auto total_strength = [](const Snapshot& s, NodeId v) -> Weight {
    return s.out_strength(v) + s.in_strength(v);
  };

  std::vector<std::pair<Weight, NodeId>> ranked;  // (centrality, node)
  ranked.reserve(n);
  for (NodeId v = 0; v < n; ++v) {
    if (!overlap_defined_for(earlier, later, v, direction)) continue;
    Weight dc = 0;
    switch (dc_source) {
      case DcSource::earlier: dc = total_strength(earlier, v); break;
      case DcSource::later: dc = total_strength(later, v); break;
      case DcSource::max:
        dc = std::max(total_strength(earlier, v), total_strength(later, v));
        break;
    }
    ranked.emplace_back(dc, v);
  }

  std::sort(ranked.begin(), ranked.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return reg.label_of(a.second) < reg.label_of(b.second);
  });

  if (ranked.size() > k) ranked.resize(k);
  std::vector<NodeId> result;
  result.reserve(ranked.size());
  for (const auto& [dc, v] : ranked) result.push_back(v);
  return result;
}

std::vector<DcChange> dc_change_ranking(const Snapshot& earlier, const Snapshot& later) {
  require_shared_registry(earlier, later);
  const NodeRegistry& reg = earlier.registry();
  const std::size_t n = reg.size();

  std::vector<DcChange> changes;
  changes.reserve(n);
  for (NodeId v = 0; v < n; ++v) {
    const auto before =
        static_cast<std::int64_t>(earlier.out_strength(v) + earlier.in_strength(v));
    const auto after =
        static_cast<std::int64_t>(later.out_strength(v) + later.in_strength(v));
    changes.push_back(DcChange{v, after - before});
  }
  std::sort(changes.begin(), changes.end(), [&](const DcChange& a, const DcChange& b) {
    const std::uint64_t ma = a.delta < 0 ? -a.delta : a.delta;
    const std::uint64_t mb = b.delta < 0 ? -b.delta : b.delta;
    if (ma != mb) return ma > mb;
    return reg.label_of(a.node) < reg.label_of(b.node);
  });
  return changes;
}

RankingReport rank_stability(const Snapshot& earlier, const Snapshot& later,
                             const RankingParams& params) {
  if (params.top_n > params.shortlist_size)
    throw ValidationError("top_n must not exceed the shortlist size");

  RankingReport report;
  report.params = params;
  report.shortlist =
      shortlist(earlier, later, params.shortlist_size, params.dc_source, params.direction);

  const NodeRegistry& reg = earlier.registry();

  std::vector<JointRow> rows;
  rows.reserve(report.shortlist.size());
  for (NodeId v : report.shortlist) {
    const OverlapScore score =
        topological_overlap(earlier, later, v, params.mode, params.direction);
    assert(score.defined);  // shortlist eligibility guarantees this
    rows.push_back(JointRow{v, score.value, 0, 0, 0});
  }

  // Canonical ordering: ascending overlap, ties by label. The changing list
  // is its head, the stable list its tail reversed.
  std::sort(rows.begin(), rows.end(), [&](const JointRow& a, const JointRow& b) {
    if (a.overlap != b.overlap) return a.overlap < b.overlap;
    return reg.label_of(a.node) < reg.label_of(b.node);
  });
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].to_rank = i + 1;

  std::unordered_set<NodeId> in_shortlist;
  in_shortlist.reserve(report.shortlist.size());
  for (NodeId v : report.shortlist) in_shortlist.insert(v);
  std::size_t next_dc_rank = 1;
  std::unordered_map<NodeId, std::pair<std::size_t, std::int64_t>> dc_info;
  dc_info.reserve(report.shortlist.size());
  for (const DcChange& change : dc_change_ranking(earlier, later)) {
    if (!in_shortlist.count(change.node)) continue;
    dc_info.emplace(change.node, std::make_pair(next_dc_rank++, change.delta));
  }
  for (JointRow& row : rows) {
    const auto& [rank, delta] = dc_info.at(row.node);
    row.dc_rank = rank;
    row.dc_delta = delta;
  }

  report.effective_top_n = std::min(params.top_n, rows.size());
  const std::size_t n_eff = report.effective_top_n;
  report.changing.reserve(n_eff);
  for (std::size_t i = 0; i < n_eff; ++i)
    report.changing.push_back(RankedNode{rows[i].node, rows[i].overlap});
  report.stable.reserve(n_eff);
  for (std::size_t i = 0; i < n_eff; ++i) {
    const JointRow& row = rows[rows.size() - 1 - i];
    report.stable.push_back(RankedNode{row.node, row.overlap});
  }
  report.joint = std::move(rows);
  return report;
}

std::vector<JointRow> joint_comparison(const Snapshot& earlier, const Snapshot& later,
                                       const RankingParams& params) {
  return rank_stability(earlier, later, params).joint;
}

}  // namespace citynet
