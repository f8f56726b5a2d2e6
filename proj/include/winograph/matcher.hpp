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

#ifndef WINOGRAPH_MATCHER_HPP_
#define WINOGRAPH_MATCHER_HPP_

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "winograph/diagnostics.hpp"
#include "winograph/graph.hpp"

namespace winograph {

// The instance-level skeleton a match runs over: no class nodes, no
// `instance_of` edges, and (for knowledge) no `is_same_as` edges. Core
// nodes are exactly the endpoints of the surviving edge set — for the
// knowledge side that includes `is_same_as` endpoints, whose edges are
// dropped but whose nodes remain and must still be matched.
struct CoreGraph {
  enum class Origin { Sentence, Knowledge };

  std::vector<NodeId> nodes;  // sorted
  std::vector<Edge> edges;    // sorted
  Origin origin = Origin::Sentence;
};

CoreGraph extract_sentence_core(const SentenceGraph& s);
CoreGraph extract_knowledge_core(const KnowledgeGraph& k);

// One graph-subgraph isomorphism: an injective correspondence from
// sentence core nodes to knowledge core nodes that covers every knowledge
// core node and preserves every knowledge core edge (extra sentence edges
// are permitted).
struct Mapping {
  // (sentence node, knowledge node), sorted by sentence node.
  std::vector<std::pair<NodeId, NodeId>> pairs;

  const NodeId* image(const NodeId& sentence_node) const;
  const NodeId* preimage(const NodeId& knowledge_node) const;

  auto operator<=>(const Mapping&) const = default;
};

enum class PolicyMode { ClassOnly, ClassOrSynonym, ClassOrSynonymOrSimilar };

std::string_view policy_mode_name(PolicyMode mode);
std::optional<PolicyMode> policy_mode_from_name(std::string_view name);

// Pluggable node-pair admissibility: class equality, optionally extended
// by synonym or similarity pairs. Pairs are ordered (sentence node,
// knowledge node); no symmetry is assumed.
struct CompatibilityPolicy {
  PolicyMode mode = PolicyMode::ClassOnly;
  std::vector<std::pair<NodeId, NodeId>> synonyms;
  std::vector<std::pair<NodeId, NodeId>> similar;
};

bool node_compatible(const CompatibilityPolicy& policy,
                     const SentenceGraph& s, const KnowledgeGraph& k,
                     const NodeId& x, const NodeId& y);

// Guards for the exponential search. Exceeding a bound is not an error;
// it truncates the enumeration and flags the result.
struct SearchBudget {
  std::size_t max_mappings = 10000;
  std::chrono::milliseconds time_limit{10000};
  std::size_t node_cap = 64;  // per core graph
};

enum class Exhaustiveness { Complete, Truncated };

struct EnumerationResult {
  std::vector<Mapping> mappings;  // lexicographic by sorted pair list
  Exhaustiveness exhaustiveness = Exhaustiveness::Complete;
  std::string truncated_by;  // "max_mappings" | "time_limit" | "node_cap"
};

using CompatibilityFn =
    std::function<bool(const NodeId& sentence_node,
                       const NodeId& knowledge_node)>;

// Enumerates every mapping that is injective both ways, total on the
// knowledge core, compatible on every pair, and edge-preserving. Output
// order is deterministic. Fails only when the knowledge core has no nodes.
Result<EnumerationResult> enumerate_isomorphisms(
    const CoreGraph& sentence_core, const CoreGraph& knowledge_core,
    const CompatibilityFn& compatible, const SearchBudget& budget = {});

}  // namespace winograph

#endif  // WINOGRAPH_MATCHER_HPP_
