#pragma once

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <string>

#include "citynet/graph.hpp"

namespace citynet {

/// Edge-list format: UTF-8, comma-separated, header line `src,dst,weight`,
/// one directed edge per line, weight a positive integer. Lines beginning
/// with `#` are comments. The writer emits two comment directives the reader
/// understands, so write-then-read reproduces a snapshot exactly:
///   # label,<time tag>      snapshot time label
///   # node,<city>           city present in the snapshot without any edge
/// Plain comments and blank lines are skipped.

/// Reads edges into a snapshot backed by `registry` (created when null).
/// `fallback_label` is used when the stream carries no `# label` directive.
Snapshot read_edge_list(std::istream& in, std::shared_ptr<NodeRegistry> registry,
                        std::string fallback_label = "");

/// File variant; the fallback label defaults to the file stem.
Snapshot read_edge_list_file(const std::filesystem::path& path,
                             std::shared_ptr<NodeRegistry> registry = nullptr);

/// Writes edges sorted by (src label, dst label), so equal snapshots always
/// serialize to identical bytes. Labels holding ',', CR/LF, or a leading '#'
/// cannot be represented and are rejected.
void write_edge_list(std::ostream& out, const Snapshot& snapshot);
void write_edge_list_file(const std::filesystem::path& path, const Snapshot& snapshot);

}  // namespace citynet
