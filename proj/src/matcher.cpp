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

#include "winograph/matcher.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace winograph {

namespace {

CoreGraph extract_core(const LabeledGraph& g, CoreGraph::Origin origin) {
  // Core nodes are derived from non-instance_of edges, so instance nodes
  // incident to no such edge stay out of the core.
  std::set<NodeId> nodes;
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (e.label == kInstanceOf) continue;
    nodes.insert(e.source);
    nodes.insert(e.target);
    if (origin == CoreGraph::Origin::Knowledge && e.label == kIsSameAs)
      continue;  // endpoints stay, the edge itself does not
    edges.push_back(e);
  }
  CoreGraph core;
  core.nodes.assign(nodes.begin(), nodes.end());
  std::sort(edges.begin(), edges.end());
  core.edges = std::move(edges);
  core.origin = origin;
  return core;
}

}  // namespace

CoreGraph extract_sentence_core(const SentenceGraph& s) {
  return extract_core(s.graph(), CoreGraph::Origin::Sentence);
}

CoreGraph extract_knowledge_core(const KnowledgeGraph& k) {
  return extract_core(k.graph(), CoreGraph::Origin::Knowledge);
}

const NodeId* Mapping::image(const NodeId& sentence_node) const {
  auto it = std::lower_bound(
      pairs.begin(), pairs.end(), sentence_node,
      [](const auto& pair, const NodeId& n) { return pair.first < n; });
  if (it == pairs.end() || it->first != sentence_node) return nullptr;
  return &it->second;
}

const NodeId* Mapping::preimage(const NodeId& knowledge_node) const {
  for (const auto& [s, k] : pairs)
    if (k == knowledge_node) return &s;
  return nullptr;
}

std::string_view policy_mode_name(PolicyMode mode) {
  switch (mode) {
    case PolicyMode::ClassOnly:
      return "class_only";
    case PolicyMode::ClassOrSynonym:
      return "class_or_synonym";
    case PolicyMode::ClassOrSynonymOrSimilar:
      return "class_or_synonym_or_similar";
  }
  return "";
}

std::optional<PolicyMode> policy_mode_from_name(std::string_view name) {
  if (name == "class_only") return PolicyMode::ClassOnly;
  if (name == "class_or_synonym") return PolicyMode::ClassOrSynonym;
  if (name == "class_or_synonym_or_similar")
    return PolicyMode::ClassOrSynonymOrSimilar;
  return std::nullopt;
}

bool node_compatible(const CompatibilityPolicy& policy,
                     const SentenceGraph& s, const KnowledgeGraph& k,
                     const NodeId& x, const NodeId& y) {
  auto cx = s.class_of(x);
  auto cy = k.class_of(y);
  if (cx && cy && *cx == *cy) return true;

  auto listed = [&](const std::vector<std::pair<NodeId, NodeId>>& pairs) {
    return std::find(pairs.begin(), pairs.end(),
                     std::pair<NodeId, NodeId>{x, y}) != pairs.end();
  };
  if (policy.mode != PolicyMode::ClassOnly && listed(policy.synonyms))
    return true;
  if (policy.mode == PolicyMode::ClassOrSynonymOrSimilar &&
      listed(policy.similar))
    return true;
  return false;
}

namespace {

// Backtracking state over interned node/label indices.
class Search {
 public:
  Search(const CoreGraph& s_core, const CoreGraph& k_core,
         const CompatibilityFn& compatible, const SearchBudget& budget)
      : s_core_(s_core), k_core_(k_core), budget_(budget) {
    deadline_ = std::chrono::steady_clock::now() + budget.time_limit;

    std::map<std::string, int> labels;
    auto intern = [&labels](const std::string& l) {
      return labels.emplace(l, static_cast<int>(labels.size())).first->second;
    };

    for (const auto& n : s_core.nodes) s_index_.emplace(n, s_index_.size());
    for (const auto& n : k_core.nodes) k_index_.emplace(n, k_index_.size());

    for (const auto& e : s_core.edges)
      s_edges_.insert(pack(s_index_.at(e.source), intern(e.label),
                           s_index_.at(e.target)));

    k_adjacency_.resize(k_core.nodes.size());
    degree_.assign(k_core.nodes.size(), 0);
    for (const auto& e : k_core.edges) {
      int src = static_cast<int>(k_index_.at(e.source));
      int tgt = static_cast<int>(k_index_.at(e.target));
      int label = intern(e.label);
      k_adjacency_[src].push_back({tgt, label, true});
      k_adjacency_[tgt].push_back({src, label, false});
      ++degree_[src];
      ++degree_[tgt];
    }

    // Knowledge nodes in descending degree order; candidate lists in
    // ascending sentence-node order. Both orders are fixed so identical
    // inputs always walk the identical tree.
    order_.resize(k_core.nodes.size());
    for (std::size_t i = 0; i < order_.size(); ++i)
      order_[i] = static_cast<int>(i);
    std::stable_sort(order_.begin(), order_.end(), [this](int a, int b) {
      return degree_[a] > degree_[b];
    });

    candidates_.resize(k_core.nodes.size());
    for (std::size_t y = 0; y < k_core.nodes.size(); ++y) {
      for (std::size_t x = 0; x < s_core.nodes.size(); ++x) {
        if (compatible(s_core.nodes[x], k_core.nodes[y]))
          candidates_[y].push_back(static_cast<int>(x));
      }
    }

    assigned_.assign(k_core.nodes.size(), -1);
    used_.assign(s_core.nodes.size(), false);
  }

  EnumerationResult run() {
    EnumerationResult out;
    descend(0, out);
    if (truncated_) {
      out.exhaustiveness = Exhaustiveness::Truncated;
      out.truncated_by = truncated_by_;
    }
    std::sort(out.mappings.begin(), out.mappings.end());
    return out;
  }

 private:
  struct Arc {
    int other;
    int label;
    bool outgoing;
  };

  static std::uint64_t pack(std::size_t a, std::size_t b, std::size_t c) {
    return (static_cast<std::uint64_t>(a) << 42) |
           (static_cast<std::uint64_t>(b) << 21) |
           static_cast<std::uint64_t>(c);
  }

  bool budget_hit(const EnumerationResult& out) {
    if (out.mappings.size() >= budget_.max_mappings) {
      truncated_ = true;
      truncated_by_ = "max_mappings";
      return true;
    }
    if (++steps_ % 4096 == 0 &&
        std::chrono::steady_clock::now() >= deadline_) {
      truncated_ = true;
      truncated_by_ = "time_limit";
      return true;
    }
    return false;
  }

  // Returns false when the search must stop.
  bool descend(std::size_t depth, EnumerationResult& out) {
    if (budget_hit(out)) return false;
    if (depth == order_.size()) {
      out.mappings.push_back(current_mapping());
      return true;
    }
    int y = order_[depth];
    for (int x : candidates_[y]) {
      if (used_[x]) continue;
      if (!edges_consistent(y, x)) continue;
      assigned_[y] = x;
      used_[x] = true;
      bool keep_going = descend(depth + 1, out);
      assigned_[y] = -1;
      used_[x] = false;
      if (!keep_going) return false;
    }
    return true;
  }

  // Every knowledge edge between y and an already-assigned node must have
  // its image present in the sentence core.
  bool edges_consistent(int y, int x) const {
    for (const auto& arc : k_adjacency_[y]) {
      int other = assigned_[arc.other];
      if (other < 0) continue;
      std::uint64_t key = arc.outgoing ? pack(x, arc.label, other)
                                       : pack(other, arc.label, x);
      if (!s_edges_.count(key)) return false;
    }
    return true;
  }

  Mapping current_mapping() const {
    Mapping m;
    m.pairs.reserve(assigned_.size());
    for (std::size_t y = 0; y < assigned_.size(); ++y)
      m.pairs.emplace_back(s_core_.nodes[assigned_[y]], k_core_.nodes[y]);
    std::sort(m.pairs.begin(), m.pairs.end());
    return m;
  }

  const CoreGraph& s_core_;
  const CoreGraph& k_core_;
  SearchBudget budget_;
  std::chrono::steady_clock::time_point deadline_;

  std::map<NodeId, std::size_t> s_index_;
  std::map<NodeId, std::size_t> k_index_;
  std::set<std::uint64_t> s_edges_;
  std::vector<std::vector<Arc>> k_adjacency_;
  std::vector<int> degree_;
  std::vector<int> order_;
  std::vector<std::vector<int>> candidates_;

  std::vector<int> assigned_;
  std::vector<bool> used_;
  std::uint64_t steps_ = 0;
  bool truncated_ = false;
  std::string truncated_by_;
};

}  // namespace

Result<EnumerationResult> enumerate_isomorphisms(
    const CoreGraph& sentence_core, const CoreGraph& knowledge_core,
    const CompatibilityFn& compatible, const SearchBudget& budget) {
  if (knowledge_core.nodes.empty()) {
    DiagnosticList diags;
    diags.error(diag::kNoKnowledgeCore,
                "knowledge core has no nodes to match");
    return Result<EnumerationResult>::failure(std::move(diags));
  }

  if (sentence_core.nodes.size() > budget.node_cap ||
      knowledge_core.nodes.size() > budget.node_cap) {
    EnumerationResult out;
    out.exhaustiveness = Exhaustiveness::Truncated;
    out.truncated_by = "node_cap";
    return Result<EnumerationResult>::success(std::move(out));
  }

  // More knowledge nodes than sentence nodes can never satisfy totality
  // plus injectivity; report the exhaustive empty result directly.
  if (knowledge_core.nodes.size() > sentence_core.nodes.size())
    return Result<EnumerationResult>::success(EnumerationResult{});

  Search search(sentence_core, knowledge_core, compatible, budget);
  return Result<EnumerationResult>::success(search.run());
}

}  // namespace winograph
