#include "citynet/edgelist.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <tuple>
#include <vector>

#include "citynet/errors.hpp"

namespace citynet {

namespace {

constexpr std::string_view kHeader = "src,dst,weight";
constexpr std::string_view kLabelDirective = "# label,";
constexpr std::string_view kNodeDirective = "# node,";

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

Weight parse_weight(std::string_view text, std::size_t line_no) {
  text = NodeRegistry::trim(text);
  Weight value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0)
    throw IoError("line " + std::to_string(line_no) +
                  ": weight must be a positive integer, got '" + std::string(text) + "'");
  return value;
}

void check_label_writable(const std::string& label) {
  if (label.find(',') != std::string::npos ||
      label.find('\n') != std::string::npos ||
      label.find('\r') != std::string::npos || label.front() == '#')
    throw ValidationError("label cannot be written to an edge list: " + label);
}

}  // namespace

Snapshot read_edge_list(std::istream& in, std::shared_ptr<NodeRegistry> registry,
                        std::string fallback_label) {
  if (!registry) registry = std::make_shared<NodeRegistry>();

  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::string label = std::move(fallback_label);
  std::vector<std::string> isolated;
  std::vector<std::tuple<std::string, std::string, Weight>> edges;

  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(std::move(line));
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (line.rfind(kLabelDirective, 0) == 0) {
        label = line.substr(kLabelDirective.size());
      } else if (line.rfind(kNodeDirective, 0) == 0) {
        isolated.push_back(line.substr(kNodeDirective.size()));
      }
      continue;
    }
    if (!header_seen) {
      if (NodeRegistry::trim(line) != kHeader)
        throw IoError("line " + std::to_string(line_no) +
                      ": expected header '" + std::string(kHeader) + "'");
      header_seen = true;
      continue;
    }
    const auto first = line.find(',');
    const auto second = first == std::string::npos ? std::string::npos
                                                   : line.find(',', first + 1);
    if (first == std::string::npos || second == std::string::npos ||
        line.find(',', second + 1) != std::string::npos)
      throw IoError("line " + std::to_string(line_no) +
                    ": expected 'src,dst,weight', got '" + line + "'");
    std::string src(NodeRegistry::trim(std::string_view(line).substr(0, first)));
    std::string dst(NodeRegistry::trim(
        std::string_view(line).substr(first + 1, second - first - 1)));
    const Weight w = parse_weight(std::string_view(line).substr(second + 1), line_no);
    if (src.empty() || dst.empty())
      throw IoError("line " + std::to_string(line_no) + ": empty city label");
    if (src == dst)
      throw IoError("line " + std::to_string(line_no) + ": self-loop on '" + src + "'");
    edges.emplace_back(std::move(src), std::move(dst), w);
  }
  if (!header_seen)
    throw IoError("missing header '" + std::string(kHeader) + "'");

  SnapshotBuilder builder(std::move(label), registry);
  for (const std::string& node : isolated) builder.add_node(node);
  for (const auto& [src, dst, w] : edges) builder.upsert_edge(src, dst, w);
  return builder.freeze();
}

Snapshot read_edge_list_file(const std::filesystem::path& path,
                             std::shared_ptr<NodeRegistry> registry) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open edge list: " + path.string());
  try {
    return read_edge_list(in, std::move(registry), path.stem().string());
  } catch (const IoError& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

void write_edge_list(std::ostream& out, const Snapshot& snapshot) {
  const NodeRegistry& reg = snapshot.registry();

  std::vector<std::tuple<std::string, std::string, Weight>> rows;
  rows.reserve(snapshot.edge_count());
  std::vector<std::uint8_t> has_edge(reg.size(), 0);
  for (const EdgeRecord& e : snapshot.edges()) {
    rows.emplace_back(reg.label_of(e.src), reg.label_of(e.dst), e.weight);
    has_edge[e.src] = has_edge[e.dst] = 1;
  }
  std::sort(rows.begin(), rows.end());

  std::vector<std::string> isolated;
  for (NodeId v : snapshot.members())
    if (!has_edge[v]) isolated.push_back(reg.label_of(v));
  std::sort(isolated.begin(), isolated.end());

  for (const auto& [src, dst, w] : rows) {
    check_label_writable(src);
    check_label_writable(dst);
  }
  for (const std::string& label : isolated) check_label_writable(label);

  out << kHeader << '\n';
  if (!snapshot.time_label().empty())
    out << kLabelDirective << snapshot.time_label() << '\n';
  for (const std::string& label : isolated) out << kNodeDirective << label << '\n';
  for (const auto& [src, dst, w] : rows) out << src << ',' << dst << ',' << w << '\n';
}

void write_edge_list_file(const std::filesystem::path& path, const Snapshot& snapshot) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  write_edge_list(out, snapshot);
  out.flush();
  if (!out) throw IoError("failed writing edge list: " + path.string());
}

}  // namespace citynet
