#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "citynet/errors.hpp"
#include "citynet/graph.hpp"
#include "helpers.hpp"

using namespace citynet;
using citynet::testing::make_snapshot;

TEST_CASE("registry registration is idempotent") {
  NodeRegistry reg;
  const NodeId a = reg.register_node("Paris");
  const NodeId b = reg.register_node("Paris");
  CHECK(a == b);
  CHECK(reg.size() == 1);
}

TEST_CASE("registry assigns dense ids in registration order") {
  NodeRegistry reg;
  CHECK(reg.register_node("Paris") == 0);
  CHECK(reg.register_node("Tokyo") == 1);
  CHECK(reg.label_of(0) == "Paris");
  CHECK(reg.label_of(1) == "Tokyo");
}

TEST_CASE("registry trims labels before matching") {
  NodeRegistry reg;
  const NodeId a = reg.register_node("Paris");
  CHECK(reg.register_node("  Paris  ") == a);
  CHECK(reg.register_node("\tParis\r\n") == a);
  CHECK(reg.size() == 1);
}

TEST_CASE("registry rejects empty labels") {
  NodeRegistry reg;
  CHECK_THROWS_AS(reg.register_node(""), ValidationError);
  CHECK_THROWS_AS(reg.register_node("   "), ValidationError);
}

TEST_CASE("registry lookups on unknown entries raise lookup errors") {
  NodeRegistry reg;
  reg.register_node("Paris");
  CHECK_THROWS_AS(reg.id_of("Berlin"), LookupError);
  CHECK_THROWS_AS(reg.label_of(5), LookupError);
  CHECK(reg.contains("Paris"));
  CHECK_FALSE(reg.contains("Berlin"));
}

TEST_CASE("upsert aggregates weights additively") {
  SnapshotBuilder b("t");
  const NodeId a = b.add_node("A");
  const NodeId c = b.add_node("B");
  b.upsert_edge(a, c, 1);
  b.upsert_edge(a, c, 1);
  const Snapshot s = b.freeze();
  REQUIRE(s.out_edges(a).size() == 1);
  CHECK(s.out_edges(a)[0].weight == 2);
  CHECK(s.edge_count() == 1);
}

TEST_CASE("opposite directions stay distinct edges") {
  SnapshotBuilder b("t");
  const NodeId a = b.add_node("A");
  const NodeId c = b.add_node("B");
  b.upsert_edge(a, c, 1);
  b.upsert_edge(c, a, 1);
  const Snapshot s = b.freeze();
  CHECK(s.edge_count() == 2);
  REQUIRE(s.out_edges(a).size() == 1);
  REQUIRE(s.out_edges(c).size() == 1);
  CHECK(s.out_edges(a)[0].weight == 1);
  CHECK(s.out_edges(c)[0].weight == 1);
}

TEST_CASE("self-loops and zero deltas are rejected") {
  SnapshotBuilder b("t");
  const NodeId a = b.add_node("A");
  const NodeId c = b.add_node("B");
  CHECK_THROWS_AS(b.upsert_edge(a, a, 1), ValidationError);
  CHECK_THROWS_AS(b.upsert_edge(a, c, 0), ValidationError);
}

TEST_CASE("adjacency readback returns sorted neighbor lists") {
  auto reg = std::make_shared<NodeRegistry>();
  const Snapshot s = make_snapshot(reg, "t", {{"i", "k", 3}, {"i", "j", 2}});
  const NodeId i = reg->id_of("i");
  const auto row = s.out_edges(i);
  REQUIRE(row.size() == 2);
  CHECK(row[0].node == reg->id_of("k"));  // k registered before j above
  CHECK(row[0].weight == 3);
  CHECK(row[1].node == reg->id_of("j"));
  CHECK(row[1].weight == 2);
  CHECK(std::is_sorted(row.begin(), row.end(),
                       [](const Edge& a, const Edge& b) { return a.node < b.node; }));
}

TEST_CASE("isolated nodes have empty adjacency and count as members") {
  auto reg = std::make_shared<NodeRegistry>();
  const Snapshot s = make_snapshot(reg, "t", {{"A", "B", 1}}, {"Lonely"});
  const NodeId lonely = reg->id_of("Lonely");
  CHECK(s.out_edges(lonely).empty());
  CHECK(s.in_edges(lonely).empty());
  CHECK(s.is_member(lonely));
  CHECK(s.node_count() == 3);
}

TEST_CASE("in-adjacency mirrors upserts") {
  auto reg = std::make_shared<NodeRegistry>();
  const Snapshot s = make_snapshot(reg, "t", {{"A", "B", 1}});
  const auto row = s.in_edges(reg->id_of("B"));
  REQUIRE(row.size() == 1);
  CHECK(row[0].node == reg->id_of("A"));
  CHECK(row[0].weight == 1);
}

TEST_CASE("queries for unregistered ids raise lookup errors") {
  auto reg = std::make_shared<NodeRegistry>();
  const Snapshot s = make_snapshot(reg, "t", {{"A", "B", 1}});
  CHECK_THROWS_AS(s.out_edges(99), LookupError);
  CHECK_THROWS_AS(s.in_strength(99), LookupError);
}

TEST_CASE("nodes registered after freeze read as absent, not as errors") {
  auto reg = std::make_shared<NodeRegistry>();
  const Snapshot s = make_snapshot(reg, "t", {{"A", "B", 1}});
  const NodeId late = reg->register_node("Late");
  CHECK(s.out_edges(late).empty());
  CHECK(s.out_strength(late) == 0);
  CHECK_FALSE(s.is_member(late));
}

TEST_CASE("strength totals balance across directions") {
  std::mt19937_64 gen(7);
  for (int round = 0; round < 20; ++round) {
    SnapshotBuilder b("t");
    std::vector<NodeId> nodes;
    for (int v = 0; v < 12; ++v) nodes.push_back(b.add_node("v" + std::to_string(v)));
    for (int e = 0; e < 40; ++e) {
      const NodeId s = nodes[gen() % nodes.size()];
      const NodeId d = nodes[gen() % nodes.size()];
      if (s == d) continue;
      b.upsert_edge(s, d, 1 + gen() % 5);
    }
    const Snapshot snap = b.freeze();
    Weight out_total = 0, in_total = 0;
    for (NodeId v : nodes) {
      out_total += snap.out_strength(v);
      in_total += snap.in_strength(v);
    }
    CHECK(out_total == snap.total_weight());
    CHECK(in_total == snap.total_weight());
  }
}

TEST_CASE("edge insertion order never changes the frozen graph") {
  std::vector<testing::LabeledEdge> edges = {
      {"A", "B", 2}, {"B", "C", 1}, {"C", "A", 4}, {"A", "C", 1}, {"D", "A", 3}};
  auto reg1 = std::make_shared<NodeRegistry>();
  const Snapshot forward = make_snapshot(reg1, "t", edges);

  std::mt19937_64 gen(99);
  for (int round = 0; round < 10; ++round) {
    std::shuffle(edges.begin(), edges.end(), gen);
    auto reg2 = std::make_shared<NodeRegistry>();
    const Snapshot shuffled = make_snapshot(reg2, "t", edges);
    CHECK(same_graph(forward, shuffled));
  }
}

TEST_CASE("same_graph distinguishes weights, labels and members") {
  auto r1 = std::make_shared<NodeRegistry>();
  auto r2 = std::make_shared<NodeRegistry>();
  const Snapshot base = make_snapshot(r1, "t", {{"A", "B", 2}});
  CHECK_FALSE(same_graph(base, make_snapshot(r2, "t", {{"A", "B", 3}})));
  auto r3 = std::make_shared<NodeRegistry>();
  CHECK_FALSE(same_graph(base, make_snapshot(r3, "t", {{"B", "A", 2}})));
  auto r4 = std::make_shared<NodeRegistry>();
  CHECK_FALSE(same_graph(base, make_snapshot(r4, "t", {{"A", "B", 2}}, {"C"})));
  auto r5 = std::make_shared<NodeRegistry>();
  CHECK_FALSE(same_graph(base, make_snapshot(r5, "u", {{"A", "B", 2}})));
}

TEST_CASE("counts are tracked exactly") {
  auto reg = std::make_shared<NodeRegistry>();
  const Snapshot s =
      make_snapshot(reg, "t", {{"A", "B", 2}, {"B", "A", 1}, {"A", "C", 5}});
  CHECK(s.node_count() == 3);
  CHECK(s.edge_count() == 3);
  CHECK(s.total_weight() == 8);
  const auto members = s.members();
  CHECK(members.size() == 3);
  CHECK(std::is_sorted(members.begin(), members.end()));
}
