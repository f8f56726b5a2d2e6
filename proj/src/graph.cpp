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

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace winograph {

bool is_valid_identifier(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      return false;
  }
  return true;
}

bool has_word_index_suffix(std::string_view text) {
  auto pos = text.rfind('_');
  if (pos == std::string_view::npos || pos == 0 || pos + 1 == text.size())
    return false;
  for (std::size_t i = pos + 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

LabeledGraph LabeledGraph::from_edges(std::vector<Edge> edges) {
  LabeledGraph g;
  for (auto& e : edges) {
    g.add_node(e.source);
    g.add_node(e.target);
    g.add_edge(std::move(e));
  }
  return g;
}

void LabeledGraph::add_node(NodeId node) {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), node);
  if (it == nodes_.end() || *it != node) nodes_.insert(it, std::move(node));
}

void LabeledGraph::add_edge(Edge edge) {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), edge);
  if (it == edges_.end() || *it != edge) edges_.insert(it, std::move(edge));
}

bool LabeledGraph::has_node(const NodeId& node) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), node);
}

bool LabeledGraph::has_edge(const Edge& edge) const {
  return std::binary_search(edges_.begin(), edges_.end(), edge);
}

const std::vector<std::string>& entity_classes() {
  static const std::vector<std::string> kClasses = {
      "object",        "person",  "group",    "location", "quantity",
      "shape",         "animal",  "plant",    "cognition", "communication",
      "event",         "feeling", "act",      "motive",    "phenomenon",
      "possession",    "process", "relation", "state",     "time"};
  return kClasses;
}

bool is_entity_class(std::string_view name) {
  const auto& classes = entity_classes();
  return std::find(classes.begin(), classes.end(), name) != classes.end();
}

namespace {

std::string edge_text(const Edge& e) {
  return e.source + " -" + e.label + "-> " + e.target;
}

struct Classification {
  std::vector<NodeId> instance_nodes;
  std::vector<NodeId> class_nodes;
  std::map<NodeId, NodeId> class_by_instance;
};

// Classifies nodes of a graph whose edge set contains no `is_same_as`
// edges, collecting every invariant violation it can find.
Classification classify(const LabeledGraph& g, DiagnosticList& diags) {
  Classification out;

  for (const auto& n : g.nodes()) {
    if (!is_valid_identifier(n))
      diags.error(diag::kBadIdentifier, "node id has illegal characters", n);
  }
  for (const auto& e : g.edges()) {
    if (!is_valid_identifier(e.label))
      diags.error(diag::kBadIdentifier, "edge label has illegal characters",
                  edge_text(e));
    if (!g.has_node(e.source) || !g.has_node(e.target))
      diags.error(diag::kDanglingEdge, "edge endpoint is not a graph node",
                  edge_text(e));
  }

  // Outgoing instance_of targets per node.
  std::map<NodeId, std::vector<NodeId>> class_targets_of;
  std::set<NodeId> class_targets;
  std::set<NodeId> touched;  // nodes with any incident edge
  for (const auto& e : g.edges()) {
    touched.insert(e.source);
    touched.insert(e.target);
    if (e.label == kInstanceOf) {
      class_targets_of[e.source].push_back(e.target);
      class_targets.insert(e.target);
    }
  }

  std::set<NodeId> instances;
  for (const auto& [node, targets] : class_targets_of) {
    instances.insert(node);
    if (targets.size() > 1)
      diags.error(diag::kMultipleClassMembership,
                  "instance node has more than one class", node);
  }

  for (const auto& n : instances) {
    if (class_targets.count(n))
      diags.error(diag::kInstanceClassOverlap,
                  "node is both an instance node and a class node", n);
  }

  for (const auto& n : g.nodes()) {
    if (instances.count(n) || class_targets.count(n)) continue;
    if (!touched.count(n))
      diags.error(diag::kOrphanNode, "node has no incident edge", n);
    else
      diags.error(diag::kMissingClassMembership,
                  "node participates in edges but has no instance_of edge", n);
  }

  for (const auto& e : g.edges()) {
    if (e.label == kInstanceOf) continue;
    for (const auto& end : {e.source, e.target}) {
      if (class_targets.count(end) && !instances.count(end))
        diags.error(diag::kEdgeOnClassNode,
                    "non-instance_of edge touches a class node",
                    edge_text(e));
    }
  }

  // Cycle check over the full edge set (class nodes are sinks, so any
  // cycle lives among instance nodes).
  {
    std::map<NodeId, int> indegree;
    std::map<NodeId, std::vector<NodeId>> succ;
    for (const auto& n : g.nodes()) indegree[n] = 0;
    for (const auto& e : g.edges()) {
      succ[e.source].push_back(e.target);
      ++indegree[e.target];
    }
    std::vector<NodeId> queue;
    for (const auto& [n, d] : indegree)
      if (d == 0) queue.push_back(n);
    std::size_t removed = 0;
    while (!queue.empty()) {
      NodeId n = queue.back();
      queue.pop_back();
      ++removed;
      for (const auto& m : succ[n])
        if (--indegree[m] == 0) queue.push_back(m);
    }
    if (removed < g.nodes().size()) {
      std::ostringstream cycle;
      bool first = true;
      for (const auto& [n, d] : indegree) {
        if (d > 0) {
          if (!first) cycle << ", ";
          cycle << n;
          first = false;
        }
      }
      diags.error(diag::kCycleDetected, "graph contains a cycle",
                  cycle.str());
    }
  }

  out.instance_nodes.assign(instances.begin(), instances.end());
  out.class_nodes.assign(class_targets.begin(), class_targets.end());
  for (const auto& [node, targets] : class_targets_of) {
    if (!targets.empty()) out.class_by_instance[node] = targets.front();
  }
  return out;
}

}  // namespace

Result<SentenceGraph> validate_sentence_graph(const LabeledGraph& g) {
  DiagnosticList diags;
  for (const auto& e : g.edges()) {
    if (e.label == kIsSameAs)
      diags.error(diag::kReservedLabelMisuse,
                  "is_same_as is reserved for knowledge graphs",
                  edge_text(e));
  }
  Classification cls = classify(g, diags);
  if (diags.has_errors()) return Result<SentenceGraph>::failure(diags);

  SentenceGraph s;
  s.graph_ = g;
  s.instance_nodes_ = std::move(cls.instance_nodes);
  s.class_nodes_ = std::move(cls.class_nodes);
  s.class_by_instance_ = std::move(cls.class_by_instance);
  return Result<SentenceGraph>::success(std::move(s), std::move(diags));
}

Result<KnowledgeGraph> validate_knowledge_graph(const LabeledGraph& g) {
  DiagnosticList diags;

  std::set<std::pair<NodeId, NodeId>> same_as_edges;
  LabeledGraph remainder;
  for (const auto& n : g.nodes()) remainder.add_node(n);
  for (const auto& e : g.edges()) {
    if (e.label == kIsSameAs)
      same_as_edges.insert({e.source, e.target});
    else
      remainder.add_edge(e);
  }

  if (same_as_edges.empty())
    diags.error(diag::kMissingSameAs,
                "knowledge graph declares no is_same_as pair");

  std::set<std::pair<NodeId, NodeId>> pairs;
  for (const auto& [x, y] : same_as_edges) {
    if (x == y) {
      diags.error(diag::kSelfSameAs, "is_same_as edge loops on one node", x);
      continue;
    }
    if (!same_as_edges.count({y, x})) {
      diags.error(diag::kAsymmetricSameAs,
                  "is_same_as edge lacks its reverse direction",
                  x + " -> " + y);
      continue;
    }
    pairs.insert({std::min(x, y), std::max(x, y)});
  }

  Classification cls = classify(remainder, diags);

  std::set<NodeId> instances(cls.instance_nodes.begin(),
                             cls.instance_nodes.end());
  std::set<NodeId> class_nodes(cls.class_nodes.begin(),
                               cls.class_nodes.end());
  for (const auto& [x, y] : pairs) {
    for (const auto& end : {x, y}) {
      if (class_nodes.count(end))
        diags.error(diag::kSameAsOnClassNode,
                    "is_same_as endpoint is a class node", end);
      else if (instances.count(end)) {
        auto cls_it = cls.class_by_instance.find(end);
        if (cls_it != cls.class_by_instance.end() &&
            !is_entity_class(cls_it->second))
          diags.warning(diag::kClassOutsideEntityVocabulary,
                        "coreference endpoint class '" + cls_it->second +
                            "' is not one of the 20 entity classes",
                        end);
      }
    }
  }

  if (diags.has_errors()) return Result<KnowledgeGraph>::failure(diags);

  KnowledgeGraph k;
  k.graph_ = g;
  k.instance_nodes_ = std::move(cls.instance_nodes);
  k.class_nodes_ = std::move(cls.class_nodes);
  k.class_by_instance_ = std::move(cls.class_by_instance);
  k.same_as_pairs_.assign(pairs.begin(), pairs.end());
  return Result<KnowledgeGraph>::success(std::move(k), std::move(diags));
}

bool SentenceGraph::is_instance_node(const NodeId& node) const {
  return std::binary_search(instance_nodes_.begin(), instance_nodes_.end(),
                            node);
}

std::optional<NodeId> SentenceGraph::class_of(const NodeId& node) const {
  auto it = class_by_instance_.find(node);
  if (it == class_by_instance_.end()) return std::nullopt;
  return it->second;
}

bool KnowledgeGraph::is_instance_node(const NodeId& node) const {
  return std::binary_search(instance_nodes_.begin(), instance_nodes_.end(),
                            node);
}

std::optional<NodeId> KnowledgeGraph::class_of(const NodeId& node) const {
  auto it = class_by_instance_.find(node);
  if (it == class_by_instance_.end()) return std::nullopt;
  return it->second;
}

bool KnowledgeGraph::same_as(const NodeId& a, const NodeId& b) const {
  std::pair<NodeId, NodeId> key{std::min(a, b), std::max(a, b)};
  return std::binary_search(same_as_pairs_.begin(), same_as_pairs_.end(), key);
}

namespace {

template <typename G>
Result<NodeId> class_of_impl(const G& g, const NodeId& node) {
  if (!g.graph().has_node(node)) {
    DiagnosticList d;
    d.error(diag::kUnknownNode, "node is not in the graph", node);
    return Result<NodeId>::failure(std::move(d));
  }
  auto cls = g.class_of(node);
  if (!cls) {
    DiagnosticList d;
    d.error(diag::kNotAnInstanceNode, "class nodes have no class", node);
    return Result<NodeId>::failure(std::move(d));
  }
  return Result<NodeId>::success(*cls);
}

}  // namespace

Result<NodeId> class_of_checked(const SentenceGraph& g, const NodeId& node) {
  return class_of_impl(g, node);
}

Result<NodeId> class_of_checked(const KnowledgeGraph& g, const NodeId& node) {
  return class_of_impl(g, node);
}

}  // namespace winograph
