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

#ifndef WINOGRAPH_GRAPH_HPP_
#define WINOGRAPH_GRAPH_HPP_

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "winograph/diagnostics.hpp"

namespace winograph {

// Node and edge identifiers are case-sensitive exact strings over
// [A-Za-z0-9_]; no normalization is applied anywhere.
using NodeId = std::string;
using EdgeLabel = std::string;

inline constexpr std::string_view kInstanceOf = "instance_of";
inline constexpr std::string_view kIsSameAs = "is_same_as";

bool is_valid_identifier(std::string_view text);

// Instance node ids conventionally carry a trailing `_<index>` position
// suffix (e.g. `man_2`). Only enforced by loaders in strict mode.
bool has_word_index_suffix(std::string_view text);

struct Edge {
  NodeId source;
  EdgeLabel label;
  NodeId target;

  auto operator<=>(const Edge&) const = default;
};

// A directed graph with labeled edges, set semantics on both nodes and
// edges. Duplicate insertions are silently collapsed.
class LabeledGraph {
 public:
  LabeledGraph() = default;

  static LabeledGraph from_edges(std::vector<Edge> edges);

  void add_node(NodeId node);
  void add_edge(Edge edge);  // does not implicitly add endpoints
  void add_edge(NodeId source, EdgeLabel label, NodeId target) {
    add_edge({std::move(source), std::move(label), std::move(target)});
  }

  bool has_node(const NodeId& node) const;
  bool has_edge(const Edge& edge) const;

  const std::vector<NodeId>& nodes() const { return nodes_; }  // sorted
  const std::vector<Edge>& edges() const { return edges_; }    // sorted

  bool operator==(const LabeledGraph&) const = default;

 private:
  std::vector<NodeId> nodes_;
  std::vector<Edge> edges_;
};

// The 20 entity classes nouns and pronouns map to. All other class names
// are open-ended lemma classes.
const std::vector<std::string>& entity_classes();
bool is_entity_class(std::string_view name);

// A validated sentence representation: instance nodes (one per content
// token) partitioned from class nodes, every instance node carrying exactly
// one `instance_of` edge, all other edges connecting instance nodes, and
// the whole graph acyclic.
class SentenceGraph {
 public:
  const LabeledGraph& graph() const { return graph_; }
  const std::vector<NodeId>& instance_nodes() const { return instance_nodes_; }
  const std::vector<NodeId>& class_nodes() const { return class_nodes_; }

  bool is_instance_node(const NodeId& node) const;
  // Class of an instance node; nullopt for class nodes and unknown ids.
  std::optional<NodeId> class_of(const NodeId& node) const;

  bool operator==(const SentenceGraph&) const = default;

 private:
  friend Result<SentenceGraph> validate_sentence_graph(const LabeledGraph&);

  LabeledGraph graph_;
  std::vector<NodeId> instance_nodes_;
  std::vector<NodeId> class_nodes_;
  std::map<NodeId, NodeId> class_by_instance_;
};

// A sentence-shaped graph plus at least one symmetric `is_same_as` pair
// between instance nodes. The pair is the only permitted cycle.
class KnowledgeGraph {
 public:
  const LabeledGraph& graph() const { return graph_; }  // includes same-as
  const std::vector<NodeId>& instance_nodes() const { return instance_nodes_; }
  const std::vector<NodeId>& class_nodes() const { return class_nodes_; }
  // Unordered pairs, stored with first < second, sorted.
  const std::vector<std::pair<NodeId, NodeId>>& same_as_pairs() const {
    return same_as_pairs_;
  }

  bool is_instance_node(const NodeId& node) const;
  std::optional<NodeId> class_of(const NodeId& node) const;
  // True when {a, b} is declared coreferent, in either order.
  bool same_as(const NodeId& a, const NodeId& b) const;

  bool operator==(const KnowledgeGraph&) const = default;

 private:
  friend Result<KnowledgeGraph> validate_knowledge_graph(const LabeledGraph&);

  LabeledGraph graph_;
  std::vector<NodeId> instance_nodes_;
  std::vector<NodeId> class_nodes_;
  std::map<NodeId, NodeId> class_by_instance_;
  std::vector<std::pair<NodeId, NodeId>> same_as_pairs_;
};

struct WSCProblem {
  SentenceGraph sentence;
  NodeId pronoun;
  NodeId answer_choice_1;
  NodeId answer_choice_2;
  std::string label;
};

// Classifies every node as instance or class and checks all structural
// invariants. On failure the diagnostics name each offending node or edge.
Result<SentenceGraph> validate_sentence_graph(const LabeledGraph& g);

// As validate_sentence_graph on the non-same-as remainder, plus symmetry
// and endpoint checks for the `is_same_as` edges.
Result<KnowledgeGraph> validate_knowledge_graph(const LabeledGraph& g);

// Checked class lookup with typed diagnostics (UnknownNode /
// NotAnInstanceNode); the member class_of() is the plain accessor.
Result<NodeId> class_of_checked(const SentenceGraph& g, const NodeId& node);
Result<NodeId> class_of_checked(const KnowledgeGraph& g, const NodeId& node);

}  // namespace winograph

#endif  // WINOGRAPH_GRAPH_HPP_
