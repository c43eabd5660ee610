// citynet command line: build, inspect and compare weighted directed city
// networks from firm-ownership data or edge lists.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "citynet/edgelist.hpp"
#include "citynet/errors.hpp"
#include "citynet/ingest.hpp"
#include "citynet/metrics.hpp"
#include "citynet/pipeline.hpp"
#include "citynet/report.hpp"
#include "citynet/synth.hpp"

namespace {

using namespace citynet;

bool has_links(const Snapshot& snapshot, NodeId node, Direction direction) {
  switch (direction) {
    case Direction::out: return snapshot.out_strength(node) > 0;
    case Direction::in: return snapshot.in_strength(node) > 0;
    default: return snapshot.out_strength(node) + snapshot.in_strength(node) > 0;
  }
}

void write_output(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + out_path);
  out << content;
  out.flush();
  if (!out) throw IoError("failed writing: " + out_path);
}

struct IngestOptions {
  std::string firms_path;
  std::string label;
  std::string out_path;
};

int run_ingest(const IngestOptions& opt) {
  std::cerr << "[citynet] ingest firms=" << opt.firms_path << " label=" << opt.label
            << " out=" << opt.out_path << "\n";
  const OwnershipParse parsed = parse_ownership_path(opt.firms_path);
  for (const RowIssue& issue : parsed.issues)
    std::cerr << opt.firms_path << ":" << issue.line << ": skipped row: "
              << issue.message << "\n";
  const CityAggregation result = aggregate_city_graph(parsed.records, opt.label);
  write_edge_list_file(opt.out_path, result.snapshot);
  std::cerr << "[citynet] " << parsed.records.size() << " records ("
            << parsed.issues.size() << " rows skipped), "
            << result.snapshot.node_count() << " cities, "
            << result.snapshot.edge_count() << " edges, "
            << result.dropped_self_loops << " intra-city ties dropped\n";
  return 0;
}

struct StatsOptions {
  std::string input;
  std::string format = "text";
  std::string out_path;
};

int run_stats(const StatsOptions& opt) {
  const OutputFormat format = parse_format(opt.format);
  std::cerr << "[citynet] stats input=" << opt.input << " format=" << opt.format << "\n";
  const Snapshot snapshot = read_edge_list_file(opt.input);
  const NetworkStats stats = network_stats(snapshot);
  std::ostringstream body;
  write_stats(body, stats, format);
  write_output(body.str(), opt.out_path);
  return 0;
}

struct OverlapOptions {
  std::string from_path;
  std::string to_path;
  std::string node;
  std::string mode = "weighted";
  std::string direction = "out";
  std::string format = "text";
  std::string out_path;
};

int run_overlap(const OverlapOptions& opt) {
  const Mode mode = parse_mode(opt.mode);
  const Direction direction = parse_direction(opt.direction);
  const OutputFormat format = parse_format(opt.format);
  std::cerr << "[citynet] overlap from=" << opt.from_path << " to=" << opt.to_path
            << " mode=" << opt.mode << " direction=" << opt.direction
            << " format=" << opt.format;
  if (!opt.node.empty()) std::cerr << " node=" << opt.node;
  std::cerr << "\n";

  auto registry = std::make_shared<NodeRegistry>();
  const Snapshot earlier = read_edge_list_file(opt.from_path, registry);
  const Snapshot later = read_edge_list_file(opt.to_path, registry);

  std::ostringstream body;
  if (!opt.node.empty()) {
    const NodeId node = registry->id_of(opt.node);
    const OverlapScore score = topological_overlap(earlier, later, node, mode, direction);
    if (format == OutputFormat::csv) {
      write_scores(body, {score}, *registry, format);
    } else if (score.defined) {
      body << registry->label_of(node) << ": " << format_fixed(score.value, 3) << "\n";
    } else {
      const bool no_earlier = !has_links(earlier, node, direction);
      const bool no_later = !has_links(later, node, direction);
      body << registry->label_of(node) << ": undefined (no links in "
           << (no_earlier && no_later ? "either" : no_earlier ? "earlier" : "later")
           << " snapshot)\n";
    }
  } else {
    const std::vector<OverlapScore> scores =
        topological_overlap_all(earlier, later, mode, direction);
    write_scores(body, scores, *registry, format);
  }
  write_output(body.str(), opt.out_path);
  return 0;
}

struct RankOptions {
  std::string from_path;
  std::string to_path;
  std::size_t shortlist_size = 250;
  std::size_t top_n = 25;
  std::string mode = "weighted";
  std::string direction = "out";
  std::string dc_source = "earlier";
  std::string format = "text";
  std::string out_path;
};

int run_rank(const RankOptions& opt) {
  RankingParams params;
  params.shortlist_size = opt.shortlist_size;
  params.top_n = opt.top_n;
  params.mode = parse_mode(opt.mode);
  params.direction = parse_direction(opt.direction);
  params.dc_source = parse_dc_source(opt.dc_source);
  const OutputFormat format = parse_format(opt.format);

  std::cerr << "[citynet] rank from=" << opt.from_path << " to=" << opt.to_path
            << " mode=" << opt.mode << " direction=" << opt.direction
            << " shortlist=" << opt.shortlist_size << " top=" << opt.top_n
            << " dc-source=" << opt.dc_source << " format=" << opt.format << "\n";

  auto registry = std::make_shared<NodeRegistry>();
  const Snapshot earlier = read_edge_list_file(opt.from_path, registry);
  const Snapshot later = read_edge_list_file(opt.to_path, registry);

  const RankingReport report = rank_stability(earlier, later, params);
  if (report.effective_top_n < params.top_n)
    std::cerr << "[citynet] warning: only " << report.shortlist.size()
              << " cities are rankable, top clamped to " << report.effective_top_n
              << "\n";

  std::ostringstream body;
  write_report(body, report, *registry, format);
  write_output(body.str(), opt.out_path);
  return 0;
}

struct SynthOptions {
  std::uint32_t nodes = 0;
  std::uint64_t edges = 0;
  double retain = 1.0;
  std::uint64_t new_edges = 0;
  std::uint64_t max_weight = 1;
  std::uint64_t seed = 0;
  std::string out_prefix;
};

int run_synth(const SynthOptions& opt) {
  std::cerr << "[citynet] synth nodes=" << opt.nodes << " edges=" << opt.edges
            << " retain=" << format_full(opt.retain) << " new=" << opt.new_edges
            << " max-weight=" << opt.max_weight << " seed=" << opt.seed
            << " out-prefix=" << opt.out_prefix << "\n";
  SynthConfig config;
  config.node_count = opt.nodes;
  config.edge_count = opt.edges;
  config.retain_probability = opt.retain;
  config.new_edge_count = opt.new_edges;
  config.max_weight = opt.max_weight;
  config.seed = opt.seed;
  const SnapshotPair pair = generate_pair(config);
  write_edge_list_file(opt.out_prefix + "_t0", pair.earlier);
  write_edge_list_file(opt.out_prefix + "_t1", pair.later);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"citynet: weighted directed city networks from firm ownership data,\n"
               "snapshot statistics, topological overlap and stability rankings"};
  app.require_subcommand(1);

  IngestOptions ingest_opt;
  CLI::App* ingest_cmd =
      app.add_subcommand("ingest", "aggregate firm-ownership records into a city edge list");
  ingest_cmd->add_option("--firms", ingest_opt.firms_path, "ownership csv file")->required();
  ingest_cmd->add_option("--label", ingest_opt.label, "time label, e.g. 2010")->required();
  ingest_cmd->add_option("--out", ingest_opt.out_path, "edge-list output path")->required();

  StatsOptions stats_opt;
  CLI::App* stats_cmd = app.add_subcommand("stats", "summary metrics of one snapshot");
  stats_cmd->add_option("input", stats_opt.input, "edge-list file")->required();
  stats_cmd->add_option("--format", stats_opt.format, "text|csv");
  stats_cmd->add_option("--out", stats_opt.out_path, "write to file instead of stdout");

  OverlapOptions overlap_opt;
  CLI::App* overlap_cmd =
      app.add_subcommand("overlap", "topological overlap between two snapshots");
  overlap_cmd->add_option("--from", overlap_opt.from_path, "earlier edge list")->required();
  overlap_cmd->add_option("--to", overlap_opt.to_path, "later edge list")->required();
  overlap_cmd->add_option("--node", overlap_opt.node, "single city (default: all)");
  overlap_cmd->add_option("--mode", overlap_opt.mode, "binary|weighted");
  overlap_cmd->add_option("--direction", overlap_opt.direction, "out|in|both");
  overlap_cmd->add_option("--format", overlap_opt.format, "text|csv");
  overlap_cmd->add_option("--out", overlap_opt.out_path, "write to file instead of stdout");

  RankOptions rank_opt;
  CLI::App* rank_cmd =
      app.add_subcommand("rank", "stable/changing city rankings with joint table");
  rank_cmd->add_option("--from", rank_opt.from_path, "earlier edge list")->required();
  rank_cmd->add_option("--to", rank_opt.to_path, "later edge list")->required();
  rank_cmd->add_option("--shortlist", rank_opt.shortlist_size, "shortlist size k");
  rank_cmd->add_option("--top", rank_opt.top_n, "rows per stable/changing table");
  rank_cmd->add_option("--mode", rank_opt.mode, "binary|weighted");
  rank_cmd->add_option("--direction", rank_opt.direction, "out|in|both");
  rank_cmd->add_option("--dc-source", rank_opt.dc_source, "earlier|later|max");
  rank_cmd->add_option("--format", rank_opt.format, "text|csv");
  rank_cmd->add_option("--out", rank_opt.out_path, "write to file instead of stdout");

  SynthOptions synth_opt;
  CLI::App* synth_cmd =
      app.add_subcommand("synth", "seeded random snapshot pair with controlled retention");
  synth_cmd->add_option("--nodes", synth_opt.nodes, "number of cities")->required();
  synth_cmd->add_option("--edges", synth_opt.edges, "edges in the earlier snapshot")->required();
  synth_cmd->add_option("--retain", synth_opt.retain, "per-edge retention probability");
  synth_cmd->add_option("--new", synth_opt.new_edges, "fresh edges in the later snapshot");
  synth_cmd->add_option("--max-weight", synth_opt.max_weight, "weights drawn from [1, W]");
  synth_cmd->add_option("--seed", synth_opt.seed, "generator seed");
  synth_cmd->add_option("--out-prefix", synth_opt.out_prefix,
                        "writes <prefix>_t0 and <prefix>_t1")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*ingest_cmd) return run_ingest(ingest_opt);
    if (*stats_cmd) return run_stats(stats_opt);
    if (*overlap_cmd) return run_overlap(overlap_opt);
    if (*rank_cmd) return run_rank(rank_opt);
    if (*synth_cmd) return run_synth(synth_opt);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
