// Copyright 2026 The Winograph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "winograph/graph.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"

using namespace winograph;

TEST_CASE("lift sentence validates with ten instance nodes") {
  auto r = validate_sentence_graph(fixtures::lift_sentence_edges());
  REQUIRE(r.ok());
  CHECK(r->instance_nodes().size() == 10);
  CHECK(r->class_nodes().size() == 7);  // person, can, not, lift, be, so, weak

  // Partition: instance and class nodes split the node set exactly.
  std::set<NodeId> all(r->graph().nodes().begin(), r->graph().nodes().end());
  std::set<NodeId> split;
  split.insert(r->instance_nodes().begin(), r->instance_nodes().end());
  split.insert(r->class_nodes().begin(), r->class_nodes().end());
  CHECK(all == split);
  CHECK(r->instance_nodes().size() + r->class_nodes().size() == all.size());

  CHECK(*r->class_of("man_2") == "person");
  CHECK(*r->class_of("weak_12") == "weak");
  CHECK(!r->class_of("person").has_value());
}

TEST_CASE("minimal graph: one instance_of edge") {
  LabeledGraph g;
  g.add_node("a_1");
  g.add_node("person");
  g.add_edge("a_1", "instance_of", "person");
  auto r = validate_sentence_graph(g);
  REQUIRE(r.ok());
  CHECK(r->instance_nodes() == std::vector<NodeId>{"a_1"});
  CHECK(r->class_nodes() == std::vector<NodeId>{"person"});
}

TEST_CASE("two classes on one node are rejected") {
  LabeledGraph g;
  for (const char* n : {"x_1", "person", "animal"}) g.add_node(n);
  g.add_edge("x_1", "instance_of", "person");
  g.add_edge("x_1", "instance_of", "animal");
  auto r = validate_sentence_graph(g);
  REQUIRE(!r.ok());
  CHECK(r.diagnostics.contains(diag::kMultipleClassMembership));
}

TEST_CASE("cycles are rejected") {
  LabeledGraph g;
  for (const char* n : {"a_1", "b_2", "t"}) g.add_node(n);
  g.add_edge("a_1", "instance_of", "t");
  g.add_edge("b_2", "instance_of", "t");
  g.add_edge("a_1", "r1", "b_2");
  g.add_edge("b_2", "r2", "a_1");
  auto r = validate_sentence_graph(g);
  REQUIRE(!r.ok());
  CHECK(r.diagnostics.contains(diag::kCycleDetected));
}

TEST_CASE("is_same_as is reserved in sentence graphs") {
  LabeledGraph g = fixtures::lift_sentence_edges();
  g.add_edge("man_2", "is_same_as", "son_7");
  auto r = validate_sentence_graph(g);
  REQUIRE(!r.ok());
  CHECK(r.diagnostics.contains(diag::kReservedLabelMisuse));
}

TEST_CASE("orphan and unclassed nodes are rejected") {
  LabeledGraph g;
  g.add_node("lonely_1");
  auto r = validate_sentence_graph(g);
  REQUIRE(!r.ok());
  CHECK(r.diagnostics.contains(diag::kOrphanNode));

  LabeledGraph h;
  for (const char* n : {"a_1", "b_2", "t"}) h.add_node(n);
  h.add_edge("a_1", "instance_of", "t");
  h.add_edge("a_1", "r1", "b_2");  // b_2 has no class
  auto r2 = validate_sentence_graph(h);
  REQUIRE(!r2.ok());
  CHECK(r2.diagnostics.contains(diag::kMissingClassMembership));
}

TEST_CASE("dangling edges and bad identifiers are reported") {
  LabeledGraph g;
  g.add_node("a_1");
  g.add_node("t");
  g.add_edge("a_1", "instance_of", "t");
  g.add_edge("a_1", "r1", "ghost_9");  // endpoint never added as a node
  auto r = validate_sentence_graph(g);
  REQUIRE(!r.ok());
  CHECK(r.diagnostics.contains(diag::kDanglingEdge));

  LabeledGraph h;
  h.add_node("bad id");
  h.add_node("t");
  h.add_edge("bad id", "instance_of", "t");
  auto r2 = validate_sentence_graph(h);
  REQUIRE(!r2.ok());
  CHECK(r2.diagnostics.contains(diag::kBadIdentifier));
}

TEST_CASE("a node cannot be instance and class at once") {
  LabeledGraph g;
  for (const char* n : {"a_1", "b_2", "t"}) g.add_node(n);
  g.add_edge("a_1", "instance_of", "b_2");
  g.add_edge("b_2", "instance_of", "t");
  auto r = validate_sentence_graph(g);
  REQUIRE(!r.ok());
  CHECK(r.diagnostics.contains(diag::kInstanceClassOverlap));
}

TEST_CASE("non-instance_of edge may not touch a class node") {
  LabeledGraph g;
  for (const char* n : {"a_1", "b_2", "t"}) g.add_node(n);
  g.add_edge("a_1", "instance_of", "t");
  g.add_edge("b_2", "instance_of", "t");
  g.add_edge("a_1", "r1", "t");
  auto r = validate_sentence_graph(g);
  REQUIRE(!r.ok());
  CHECK(r.diagnostics.contains(diag::kEdgeOnClassNode));
}

TEST_CASE("lift knowledge graph validates with its coreference pair") {
  auto r = validate_knowledge_graph(fixtures::lift_knowledge_edges());
  REQUIRE(r.ok());
  CHECK(r->instance_nodes().size() == 8);
  REQUIRE(r->same_as_pairs().size() == 1);
  CHECK(r->same_as_pairs()[0] ==
        std::pair<NodeId, NodeId>{"person1_1", "person2_7"});
  CHECK(r->same_as("person2_7", "person1_1"));
  CHECK(!r->same_as("person1_1", "someone_5"));
}

TEST_CASE("knowledge graph same-as violations") {
  SUBCASE("one direction missing") {
    LabeledGraph g = fixtures::lift_knowledge_edges();
    LabeledGraph h;
    for (const auto& n : g.nodes()) h.add_node(n);
    for (const auto& e : g.edges())
      if (!(e.source == "person2_7" && e.label == "is_same_as"))
        h.add_edge(e);
    auto r = validate_knowledge_graph(h);
    REQUIRE(!r.ok());
    CHECK(r.diagnostics.contains(diag::kAsymmetricSameAs));
  }
  SUBCASE("no pair at all") {
    LabeledGraph g = fixtures::lift_knowledge_edges();
    LabeledGraph h;
    for (const auto& n : g.nodes()) h.add_node(n);
    for (const auto& e : g.edges())
      if (e.label != "is_same_as") h.add_edge(e);
    auto r = validate_knowledge_graph(h);
    REQUIRE(!r.ok());
    CHECK(r.diagnostics.contains(diag::kMissingSameAs));
  }
  SUBCASE("pair endpoint on a class node") {
    LabeledGraph g = fixtures::lift_knowledge_edges();
    g.add_edge("person1_1", "is_same_as", "person");
    g.add_edge("person", "is_same_as", "person1_1");
    auto r = validate_knowledge_graph(g);
    REQUIRE(!r.ok());
    CHECK(r.diagnostics.contains(diag::kSameAsOnClassNode));
  }
  SUBCASE("self loop") {
    LabeledGraph g = fixtures::lift_knowledge_edges();
    g.add_edge("person1_1", "is_same_as", "person1_1");
    auto r = validate_knowledge_graph(g);
    REQUIRE(!r.ok());
    CHECK(r.diagnostics.contains(diag::kSelfSameAs));
  }
}

TEST_CASE("knowledge acyclicity ignores the same-as two-cycle only") {
  LabeledGraph g = fixtures::lift_knowledge_edges();
  g.add_edge("person1_1", "r9", "is_8");  // is_8 already reaches person2_7
  g.add_edge("person2_7", "r9", "person1_1");
  auto r = validate_knowledge_graph(g);
  REQUIRE(!r.ok());
  CHECK(r.diagnostics.contains(diag::kCycleDetected));
}

TEST_CASE("checked class lookup produces typed errors") {
  auto s = fixtures::lift_sentence();
  auto ok = class_of_checked(s, "man_2");
  REQUIRE(ok.ok());
  CHECK(*ok == "person");

  auto not_instance = class_of_checked(s, "person");
  REQUIRE(!not_instance.ok());
  CHECK(not_instance.diagnostics.contains(diag::kNotAnInstanceNode));

  auto unknown = class_of_checked(s, "nobody_99");
  REQUIRE(!unknown.ok());
  CHECK(unknown.diagnostics.contains(diag::kUnknownNode));
}

TEST_CASE("entity class vocabulary is exactly the twenty classes") {
  CHECK(entity_classes().size() == 20);
  CHECK(is_entity_class("person"));
  CHECK(is_entity_class("time"));
  CHECK(!is_entity_class("weak"));
  std::set<std::string> unique(entity_classes().begin(),
                               entity_classes().end());
  CHECK(unique.size() == 20);
}

TEST_CASE("duplicate edges collapse silently") {
  LabeledGraph g;
  g.add_node("a_1");
  g.add_node("t");
  g.add_edge("a_1", "instance_of", "t");
  g.add_edge("a_1", "instance_of", "t");
  CHECK(g.edges().size() == 1);
  CHECK(validate_sentence_graph(g).ok());
}
