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

#ifndef WINOGRAPH_TESTS_FIXTURES_HPP_
#define WINOGRAPH_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "winograph/facts.hpp"
#include "winograph/graph.hpp"
#include "winograph/matcher.hpp"
#include "winograph/oracle.hpp"

namespace fixtures {

using namespace winograph;

// "The man could not lift his son because he was so weak."
inline LabeledGraph lift_sentence_edges() {
  LabeledGraph g;
  auto cls = [&](const char* n, const char* c) {
    g.add_node(n);
    g.add_node(c);
    g.add_edge(n, "instance_of", c);
  };
  cls("man_2", "person");
  cls("could_3", "can");
  cls("not_4", "not");
  cls("lift_5", "lift");
  cls("his_6", "person");
  cls("son_7", "person");
  cls("he_9", "person");
  cls("was_10", "be");
  cls("so_11", "so");
  cls("weak_12", "weak");
  g.add_edge("lift_5", "agent", "man_2");
  g.add_edge("lift_5", "recipient", "son_7");
  g.add_edge("lift_5", "modal", "could_3");
  g.add_edge("lift_5", "negation", "not_4");
  g.add_edge("lift_5", "caused_by", "was_10");
  g.add_edge("was_10", "agent", "he_9");
  g.add_edge("was_10", "trait", "weak_12");
  g.add_edge("weak_12", "intensity", "so_11");
  g.add_edge("son_7", "related_to", "his_6");
  return g;
}

// "person1 can not lift someone because person2 is weak",
// person1_1 is same as person2_7.
inline LabeledGraph lift_knowledge_edges() {
  LabeledGraph g;
  auto cls = [&](const char* n, const char* c) {
    g.add_node(n);
    g.add_node(c);
    g.add_edge(n, "instance_of", c);
  };
  cls("person1_1", "person");
  cls("can_2", "can");
  cls("not_3", "not");
  cls("lifts_4", "lift");
  cls("someone_5", "person");
  cls("person2_7", "person");
  cls("is_8", "be");
  cls("weak_9", "weak");
  g.add_edge("lifts_4", "agent", "person1_1");
  g.add_edge("lifts_4", "recipient", "someone_5");
  g.add_edge("lifts_4", "modal", "can_2");
  g.add_edge("lifts_4", "negation", "not_3");
  g.add_edge("lifts_4", "caused_by", "is_8");
  g.add_edge("is_8", "agent", "person2_7");
  g.add_edge("is_8", "trait", "weak_9");
  g.add_edge("person1_1", "is_same_as", "person2_7");
  g.add_edge("person2_7", "is_same_as", "person1_1");
  return g;
}

inline SentenceGraph lift_sentence() {
  auto r = validate_sentence_graph(lift_sentence_edges());
  if (!r.ok()) throw std::logic_error(r.diagnostics.to_string());
  return *r;
}

inline KnowledgeGraph lift_knowledge() {
  auto r = validate_knowledge_graph(lift_knowledge_edges());
  if (!r.ok()) throw std::logic_error(r.diagnostics.to_string());
  return *r;
}

inline ProblemBundle lift_bundle() {
  ProblemBundle b;
  b.problem = {lift_sentence(), "he_9", "man_2", "son_7", "lift-weak"};
  b.knowledge = lift_knowledge();
  return b;
}

// The single expected correspondence for the lift problem.
inline std::vector<std::pair<NodeId, NodeId>> lift_expected_pairs() {
  return {{"could_3", "can_2"},  {"he_9", "person2_7"},
          {"lift_5", "lifts_4"}, {"man_2", "person1_1"},
          {"not_4", "not_3"},    {"son_7", "someone_5"},
          {"was_10", "is_8"},    {"weak_12", "weak_9"}};
}

// Deterministic parameter mix for the seeded random suites; every spec is
// within the generator's (and the oracles') bounds.
inline oracle::RandomInstanceSpec spec_for_seed(std::uint64_t seed) {
  oracle::RandomInstanceSpec spec;
  spec.sentence_nodes = 4 + (seed * 2654435761ULL) % 7;  // 4..10
  spec.knowledge_nodes = 2 + (seed * 40503ULL) % 5;      // 2..6
  if (spec.knowledge_nodes > spec.sentence_nodes)
    spec.knowledge_nodes = spec.sentence_nodes;
  spec.edge_density = 0.15 + 0.08 * ((seed * 97ULL) % 8);
  spec.label_alphabet_size = 1 + seed % 3;
  spec.class_alphabet_size = 2 + (seed / 3) % 4;
  spec.seed = seed;
  return spec;
}

// Budget large enough that in-bounds random instances always enumerate
// completely (an injective 10-choose-6 placement space tops out at 151200).
inline SearchBudget exhaustive_budget() {
  SearchBudget b;
  b.max_mappings = 500000;
  b.time_limit = std::chrono::milliseconds(60000);
  return b;
}

// Re-verifies the four mapping conditions from scratch, independently of
// both the matcher and the brute-force enumerator.
inline bool mapping_is_valid(const CoreGraph& s_core, const CoreGraph& k_core,
                             const CompatibilityFn& compatible,
                             const Mapping& m) {
  std::set<NodeId> s_seen, k_seen;
  for (const auto& [x, y] : m.pairs) {
    if (!std::binary_search(s_core.nodes.begin(), s_core.nodes.end(), x))
      return false;
    if (!std::binary_search(k_core.nodes.begin(), k_core.nodes.end(), y))
      return false;
    if (!s_seen.insert(x).second || !k_seen.insert(y).second) return false;
    if (!compatible(x, y)) return false;
  }
  if (k_seen.size() != k_core.nodes.size()) return false;
  for (const auto& e : k_core.edges) {
    const NodeId* x = m.preimage(e.source);
    const NodeId* y = m.preimage(e.target);
    if (!x || !y) return false;
    Edge image{*x, e.label, *y};
    if (!std::binary_search(s_core.edges.begin(), s_core.edges.end(), image))
      return false;
  }
  return true;
}

}  // namespace fixtures

#endif  // WINOGRAPH_TESTS_FIXTURES_HPP_
