#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "citynet/metrics.hpp"

namespace citynet {

/// Which snapshot supplies the centrality used for shortlisting: the earlier
/// one, the later one, or the per-node maximum of the two.
enum class DcSource { earlier, later, max };

std::string_view to_string(DcSource source);
DcSource parse_dc_source(std::string_view text);  // throws ValidationError

struct RankingParams {
  std::size_t shortlist_size = 250;
  std::size_t top_n = 25;
  Mode mode = Mode::weighted;
  Direction direction = Direction::out;
  DcSource dc_source = DcSource::earlier;
};

/// Top-k nodes by weighted total degree centrality, descending, ties broken
/// by label. Nodes whose overlap would be undefined — no links in one of the
/// snapshots under `direction` — are excluded before ranking, so a city that
/// drops its single link cannot crowd out genuinely changing cities.
std::vector<NodeId> shortlist(const Snapshot& earlier, const Snapshot& later,
                              std::size_t k, DcSource dc_source = DcSource::earlier,
                              Direction direction = Direction::out);

struct DcChange {
  NodeId node = 0;
  std::int64_t delta = 0;  // later minus earlier weighted total degree
};

/// All registered nodes ordered by descending |delta|, ties broken by label.
std::vector<DcChange> dc_change_ranking(const Snapshot& earlier, const Snapshot& later);

struct RankedNode {
  NodeId node = 0;
  double overlap = 0.0;
};

/// One shortlisted node with its ranks: to_rank orders by ascending overlap
/// (1 = most changing), dc_rank by descending |centrality change| within the
/// shortlist (1 = largest change).
struct JointRow {
  NodeId node = 0;
  double overlap = 0.0;
  std::size_t to_rank = 0;
  std::size_t dc_rank = 0;
  std::int64_t dc_delta = 0;
};

struct RankingReport {
  RankingParams params;
  std::size_t effective_top_n = 0;  // top_n clamped to the shortlist size
  std::vector<NodeId> shortlist;    // descending centrality
  std::vector<RankedNode> stable;   // descending overlap
  std::vector<RankedNode> changing; // ascending overlap
  std::vector<JointRow> joint;      // ascending to_rank, whole shortlist
};

/// Shortlists, scores every shortlisted node, and splits off the top_n most
/// stable and most changing ends. The two lists are opposite ends of one
/// canonical ordering (ascending overlap, ties by label, stable side read
/// backwards), so they cannot intersect while 2 * top_n <= shortlist size.
RankingReport rank_stability(const Snapshot& earlier, const Snapshot& later,
                             const RankingParams& params = {});

/// Just the joint table of rank_stability.
std::vector<JointRow> joint_comparison(const Snapshot& earlier, const Snapshot& later,
                                       const RankingParams& params = {});

}  // namespace citynet
