#include "citynet/graph.hpp"

#include <algorithm>
#include <tuple>

#include "citynet/errors.hpp"

namespace citynet {

namespace {

constexpr std::uint64_t pack(NodeId src, NodeId dst) {
  return (static_cast<std::uint64_t>(src) << 32) | dst;
}

}  // namespace

std::string_view NodeRegistry::trim(std::string_view text) {
  constexpr std::string_view ws = " \t\r\n\f\v";
  const auto begin = text.find_first_not_of(ws);
  if (begin == std::string_view::npos) return {};
  const auto end = text.find_last_not_of(ws);
  return text.substr(begin, end - begin + 1);
}

NodeId NodeRegistry::register_node(std::string_view label) {
  std::string key(trim(label));
  if (key.empty()) throw ValidationError("node label is empty");
  auto it = ids_.find(key);
  if (it != ids_.end()) return it->second;
  const NodeId id = static_cast<NodeId>(labels_.size());
  labels_.push_back(key);
  ids_.emplace(std::move(key), id);
  return id;
}

bool NodeRegistry::contains(std::string_view label) const {
  return ids_.find(std::string(trim(label))) != ids_.end();
}

NodeId NodeRegistry::id_of(std::string_view label) const {
  auto it = ids_.find(std::string(trim(label)));
  if (it == ids_.end())
    throw LookupError("unknown city: " + std::string(trim(label)));
  return it->second;
}

const std::string& NodeRegistry::label_of(NodeId node) const {
  if (node >= labels_.size())
    throw LookupError("unregistered node id " + std::to_string(node));
  return labels_[node];
}

SnapshotBuilder::SnapshotBuilder(std::string label, std::shared_ptr<NodeRegistry> registry)
    : label_(std::move(label)), registry_(std::move(registry)) {
  if (!registry_) registry_ = std::make_shared<NodeRegistry>();
}

void SnapshotBuilder::check_registered(NodeId node) const {
  if (node >= registry_->size())
    throw LookupError("unregistered node id " + std::to_string(node));
}

void SnapshotBuilder::mark_member(NodeId node) {
  if (member_.size() <= node) member_.resize(node + 1, 0);
  member_[node] = 1;
}

NodeId SnapshotBuilder::add_node(std::string_view label) {
  const NodeId id = registry_->register_node(label);
  mark_member(id);
  return id;
}

void SnapshotBuilder::add_node(NodeId node) {
  check_registered(node);
  mark_member(node);
}

void SnapshotBuilder::upsert_edge(NodeId src, NodeId dst, Weight delta) {
  check_registered(src);
  check_registered(dst);
  if (src == dst)
    throw ValidationError("self-loop rejected for city: " + registry_->label_of(src));
  if (delta == 0) throw ValidationError("edge weight delta must be >= 1");
  weights_[pack(src, dst)] += delta;
  mark_member(src);
  mark_member(dst);
}

void SnapshotBuilder::upsert_edge(std::string_view src, std::string_view dst, Weight delta) {
  const NodeId s = registry_->register_node(src);
  const NodeId d = registry_->register_node(dst);
  upsert_edge(s, d, delta);
}

Snapshot SnapshotBuilder::freeze() {
  Snapshot snap;
  snap.label_ = std::move(label_);
  snap.registry_ = registry_;

  const std::size_t n = registry_->size();
  snap.frozen_nodes_ = n;
  snap.member_.assign(n, 0);
  for (std::size_t i = 0; i < member_.size(); ++i) snap.member_[i] = member_[i];
  snap.member_count_ = static_cast<std::size_t>(
      std::count(snap.member_.begin(), snap.member_.end(), 1));

  std::vector<std::pair<std::uint64_t, Weight>> sorted(weights_.begin(), weights_.end());
  std::sort(sorted.begin(), sorted.end());

  snap.edge_count_ = sorted.size();
  snap.out_offsets_.assign(n + 1, 0);
  snap.in_offsets_.assign(n + 1, 0);
  snap.out_strength_.assign(n, 0);
  snap.in_strength_.assign(n, 0);

  for (const auto& [key, w] : sorted) {
    const NodeId src = static_cast<NodeId>(key >> 32);
    const NodeId dst = static_cast<NodeId>(key & 0xffffffffu);
    snap.out_offsets_[src + 1]++;
    snap.in_offsets_[dst + 1]++;
    snap.out_strength_[src] += w;
    snap.in_strength_[dst] += w;
    snap.total_weight_ += w;
  }
  for (std::size_t i = 0; i < n; ++i) {
    snap.out_offsets_[i + 1] += snap.out_offsets_[i];
    snap.in_offsets_[i + 1] += snap.in_offsets_[i];
  }

  snap.out_edges_.resize(sorted.size());
  snap.in_edges_.resize(sorted.size());
  std::vector<std::size_t> out_fill(snap.out_offsets_.begin(), snap.out_offsets_.end() - 1);
  std::vector<std::size_t> in_fill(snap.in_offsets_.begin(), snap.in_offsets_.end() - 1);
  for (const auto& [key, w] : sorted) {
    const NodeId src = static_cast<NodeId>(key >> 32);
    const NodeId dst = static_cast<NodeId>(key & 0xffffffffu);
    snap.out_edges_[out_fill[src]++] = Edge{dst, w};
    snap.in_edges_[in_fill[dst]++] = Edge{src, w};
  }
  // out lists are dst-sorted already; in lists need src order per dst.
  // Filling from the (src,dst)-sorted list visits each dst's sources in
  // ascending order, so both sides come out sorted.

  weights_.clear();
  member_.clear();
  label_.clear();
  return snap;
}

void Snapshot::check_registered(NodeId node) const {
  if (!registry_ || node >= registry_->size())
    throw LookupError("unregistered node id " + std::to_string(node));
}

bool Snapshot::is_member(NodeId node) const {
  check_registered(node);
  return node < frozen_nodes_ && member_[node] != 0;
}

std::span<const Edge> Snapshot::out_edges(NodeId node) const {
  check_registered(node);
  if (node >= frozen_nodes_) return {};
  return std::span<const Edge>(out_edges_)
      .subspan(out_offsets_[node], out_offsets_[node + 1] - out_offsets_[node]);
}

std::span<const Edge> Snapshot::in_edges(NodeId node) const {
  check_registered(node);
  if (node >= frozen_nodes_) return {};
  return std::span<const Edge>(in_edges_)
      .subspan(in_offsets_[node], in_offsets_[node + 1] - in_offsets_[node]);
}

Weight Snapshot::out_strength(NodeId node) const {
  check_registered(node);
  return node < frozen_nodes_ ? out_strength_[node] : 0;
}

Weight Snapshot::in_strength(NodeId node) const {
  check_registered(node);
  return node < frozen_nodes_ ? in_strength_[node] : 0;
}

std::vector<NodeId> Snapshot::members() const {
  std::vector<NodeId> out;
  out.reserve(member_count_);
  for (std::size_t i = 0; i < frozen_nodes_; ++i)
    if (member_[i]) out.push_back(static_cast<NodeId>(i));
  return out;
}

std::vector<EdgeRecord> Snapshot::edges() const {
  std::vector<EdgeRecord> out;
  out.reserve(edge_count_);
  for (std::size_t src = 0; src < frozen_nodes_; ++src)
    for (std::size_t k = out_offsets_[src]; k < out_offsets_[src + 1]; ++k)
      out.push_back(EdgeRecord{static_cast<NodeId>(src), out_edges_[k].node,
                               out_edges_[k].weight});
  return out;
}

bool same_graph(const Snapshot& a, const Snapshot& b) {
  if (a.time_label() != b.time_label()) return false;
  if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count() ||
      a.total_weight() != b.total_weight())
    return false;

  auto member_labels = [](const Snapshot& s) {
    std::vector<std::string> out;
    for (NodeId v : s.members()) out.push_back(s.registry().label_of(v));
    std::sort(out.begin(), out.end());
    return out;
  };
  if (member_labels(a) != member_labels(b)) return false;

  auto edge_labels = [](const Snapshot& s) {
    std::vector<std::tuple<std::string, std::string, Weight>> out;
    for (const EdgeRecord& e : s.edges())
      out.emplace_back(s.registry().label_of(e.src), s.registry().label_of(e.dst),
                       e.weight);
    std::sort(out.begin(), out.end());
    return out;
  };
  return edge_labels(a) == edge_labels(b);
}

}  // namespace citynet
