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

#include "winograph/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace winograph::oracle {

namespace {

Diagnostic too_large(std::size_t s_nodes, std::size_t k_nodes) {
  return {diag::kInstanceTooLarge, Severity::Error,
          "instance exceeds oracle bounds (sentence core " +
              std::to_string(s_nodes) + " > " +
              std::to_string(kMaxSentenceCoreNodes) + " or knowledge core " +
              std::to_string(k_nodes) + " > " +
              std::to_string(kMaxKnowledgeCoreNodes) + ")",
          "", 0, 0};
}

bool within_bounds(std::size_t s_nodes, std::size_t k_nodes) {
  return s_nodes <= kMaxSentenceCoreNodes && k_nodes <= kMaxKnowledgeCoreNodes;
}

// instance_of targets read straight off the raw edge list.
std::map<NodeId, NodeId> class_map_of(const LabeledGraph& g) {
  std::map<NodeId, NodeId> classes;
  for (const auto& e : g.edges())
    if (e.label == kInstanceOf) classes[e.source] = e.target;
  return classes;
}

}  // namespace

Result<std::vector<Mapping>> brute_force_enumerate(
    const CoreGraph& sentence_core, const CoreGraph& knowledge_core,
    const CompatibilityFn& compatible) {
  if (!within_bounds(sentence_core.nodes.size(), knowledge_core.nodes.size()))
    return Result<std::vector<Mapping>>::failure(
        too_large(sentence_core.nodes.size(), knowledge_core.nodes.size()));

  const auto& s_nodes = sentence_core.nodes;
  const auto& k_nodes = knowledge_core.nodes;

  std::vector<Mapping> found;
  std::vector<int> placement(k_nodes.size(), -1);
  std::vector<bool> used(s_nodes.size(), false);

  // All checks happen at the leaves: this enumerator must not share the
  // matcher's pruning structure.
  auto leaf_is_valid = [&]() {
    for (std::size_t i = 0; i < k_nodes.size(); ++i)
      if (!compatible(s_nodes[placement[i]], k_nodes[i])) return false;
    for (const auto& e : knowledge_core.edges) {
      auto k_pos = [&](const NodeId& n) {
        return std::lower_bound(k_nodes.begin(), k_nodes.end(), n) -
               k_nodes.begin();
      };
      Edge image{s_nodes[placement[k_pos(e.source)]], e.label,
                 s_nodes[placement[k_pos(e.target)]]};
      if (!std::binary_search(sentence_core.edges.begin(),
                              sentence_core.edges.end(), image))
        return false;
    }
    return true;
  };

  auto place = [&](auto&& self, std::size_t i) -> void {
    if (i == k_nodes.size()) {
      if (leaf_is_valid()) {
        Mapping m;
        for (std::size_t j = 0; j < k_nodes.size(); ++j)
          m.pairs.emplace_back(s_nodes[placement[j]], k_nodes[j]);
        std::sort(m.pairs.begin(), m.pairs.end());
        found.push_back(std::move(m));
      }
      return;
    }
    for (std::size_t x = 0; x < s_nodes.size(); ++x) {
      if (used[x]) continue;
      used[x] = true;
      placement[i] = static_cast<int>(x);
      self(self, i + 1);
      used[x] = false;
      placement[i] = -1;
    }
  };
  place(place, 0);

  std::sort(found.begin(), found.end());
  return Result<std::vector<Mapping>>::success(std::move(found));
}

Result<Verdict> answer_by_definition(const WSCProblem& problem,
                                     const KnowledgeGraph& knowledge) {
  CoreGraph s_core = extract_sentence_core(problem.sentence);
  CoreGraph k_core = extract_knowledge_core(knowledge);

  auto sentence_classes = class_map_of(problem.sentence.graph());
  auto knowledge_classes = class_map_of(knowledge.graph());
  auto same_class = [&](const NodeId& x, const NodeId& y) {
    auto cx = sentence_classes.find(x);
    auto cy = knowledge_classes.find(y);
    return cx != sentence_classes.end() && cy != knowledge_classes.end() &&
           cx->second == cy->second;
  };

  auto mappings = brute_force_enumerate(s_core, k_core, same_class);
  if (!mappings.ok())
    return Result<Verdict>::failure(mappings.diagnostics);

  std::set<std::pair<NodeId, NodeId>> same_as_edges;
  for (const auto& e : knowledge.graph().edges())
    if (e.label == kIsSameAs) same_as_edges.insert({e.source, e.target});
  auto coreferent = [&](const NodeId& a, const NodeId& b) {
    return same_as_edges.count({a, b}) || same_as_edges.count({b, a});
  };

  bool a1_elected = false;
  bool a2_elected = false;
  for (const Mapping& m : *mappings) {
    const NodeId* pronoun_image = m.image(problem.pronoun);
    if (!pronoun_image) continue;
    // Nodes that provide the resolution for the pronoun under this mapping.
    std::vector<NodeId> providers;
    for (const auto& [x, y] : m.pairs)
      if (coreferent(y, *pronoun_image)) providers.push_back(x);
    if (providers.size() != 1) continue;
    if (providers.front() == problem.answer_choice_1) a1_elected = true;
    if (providers.front() == problem.answer_choice_2) a2_elected = true;
  }

  Verdict v;
  if (mappings->empty()) {
    v.reason = Reason::NoMappings;
  } else if (a1_elected && a2_elected) {
    v.reason = Reason::ConflictingCandidates;
  } else if (a1_elected || a2_elected) {
    v.outcome = Outcome::Answer;
    v.answer_node =
        a1_elected ? problem.answer_choice_1 : problem.answer_choice_2;
    v.reason = Reason::Unanimous;
  } else {
    v.reason = Reason::NoCandidates;
  }
  return Result<Verdict>::success(std::move(v));
}

Result<Verdict> answer_by_rules(const ProblemBundle& bundle,
                                PolicyMode mode) {
  const auto& has_s = bundle.problem.sentence.graph().edges();
  const auto& has_k = bundle.knowledge.graph().edges();

  // Core node/edge relations exactly as the rules derive them: nodes from
  // every non-instance_of edge, knowledge edges additionally dropping
  // is_same_as.
  std::set<NodeId> s_node_set, k_node_set;
  std::set<Edge> s_edge_set;
  std::vector<Edge> k_edge_list;
  for (const auto& e : has_s) {
    if (e.label == kInstanceOf) continue;
    s_node_set.insert(e.source);
    s_node_set.insert(e.target);
    s_edge_set.insert(e);
  }
  for (const auto& e : has_k) {
    if (e.label == kInstanceOf) continue;
    k_node_set.insert(e.source);
    k_node_set.insert(e.target);
    if (e.label != kIsSameAs) k_edge_list.push_back(e);
  }

  if (!within_bounds(s_node_set.size(), k_node_set.size()))
    return Result<Verdict>::failure(
        too_large(s_node_set.size(), k_node_set.size()));

  std::vector<NodeId> s_nodes(s_node_set.begin(), s_node_set.end());
  std::vector<NodeId> k_nodes(k_node_set.begin(), k_node_set.end());

  auto sentence_classes = class_map_of(bundle.problem.sentence.graph());
  auto knowledge_classes = class_map_of(bundle.knowledge.graph());
  std::set<std::pair<NodeId, NodeId>> synonym_set(bundle.synonyms.begin(),
                                                  bundle.synonyms.end());
  std::set<std::pair<NodeId, NodeId>> similar_set(bundle.similar.begin(),
                                                  bundle.similar.end());

  auto admissible = [&](const NodeId& x, const NodeId& y) {
    auto cx = sentence_classes.find(x);
    auto cy = knowledge_classes.find(y);
    if (cx != sentence_classes.end() && cy != knowledge_classes.end() &&
        cx->second == cy->second)
      return true;
    if (mode != PolicyMode::ClassOnly && synonym_set.count({x, y}))
      return true;
    if (mode == PolicyMode::ClassOrSynonymOrSimilar &&
        similar_set.count({x, y}))
      return true;
    return false;
  };

  std::set<std::pair<NodeId, NodeId>> same_as_facts;
  for (const auto& e : has_k)
    if (e.label == kIsSameAs) same_as_facts.insert({e.source, e.target});

  const NodeId& pronoun = bundle.problem.pronoun;
  const NodeId& a1 = bundle.problem.answer_choice_1;
  const NodeId& a2 = bundle.problem.answer_choice_2;

  std::size_t model_count = 0;
  std::vector<NodeId> answer_atoms;

  // One candidate model: an injective partial function from sentence core
  // nodes to knowledge core nodes, represented positionally.
  std::vector<int> match_of(s_nodes.size(), -1);
  std::vector<bool> k_used(k_nodes.size(), false);

  auto evaluate_model = [&]() {
    // Totality over the knowledge core.
    for (bool used : k_used)
      if (!used) return;
    // Pair admissibility.
    for (std::size_t x = 0; x < s_nodes.size(); ++x)
      if (match_of[x] >= 0 && !admissible(s_nodes[x], k_nodes[match_of[x]]))
        return;
    // Edge preservation: every knowledge core edge must appear, with the
    // same label, between the preimages in the sentence core.
    std::map<NodeId, NodeId> inverse;
    for (std::size_t x = 0; x < s_nodes.size(); ++x)
      if (match_of[x] >= 0) inverse[k_nodes[match_of[x]]] = s_nodes[x];
    for (const auto& e : k_edge_list) {
      Edge image{inverse.at(e.source), e.label, inverse.at(e.target)};
      if (!s_edge_set.count(image)) return;
    }
    ++model_count;

    auto matched_to = [&](const NodeId& s) -> const NodeId* {
      auto it = std::lower_bound(s_nodes.begin(), s_nodes.end(), s);
      if (it == s_nodes.end() || *it != s) return nullptr;
      int k = match_of[it - s_nodes.begin()];
      return k >= 0 ? &k_nodes[k] : nullptr;
    };

    const NodeId* n1 = matched_to(pronoun);
    if (!n1) return;  // no answer atom can derive without the pronoun match

    auto invalid_for = [&](const NodeId& choice) {
      for (std::size_t x = 0; x < s_nodes.size(); ++x) {
        if (match_of[x] < 0 || s_nodes[x] == choice) continue;
        const NodeId& n2 = k_nodes[match_of[x]];
        if (n2 != *n1 && same_as_facts.count({*n1, n2})) return true;
      }
      return false;
    };
    auto derives = [&](const NodeId& choice) {
      const NodeId* n2 = matched_to(choice);
      return n2 && same_as_facts.count({*n1, *n2}) && !invalid_for(choice);
    };

    bool ans1 = derives(a1);
    bool ans2 = derives(a2);
    if (ans1 && ans2) return;  // two distinct answers kill the model
    if (ans1) answer_atoms.push_back(a1);
    if (ans2) answer_atoms.push_back(a2);
  };

  auto enumerate = [&](auto&& self, std::size_t x) -> void {
    if (x == s_nodes.size()) {
      evaluate_model();
      return;
    }
    self(self, x + 1);  // s_nodes[x] stays unmatched
    for (std::size_t k = 0; k < k_nodes.size(); ++k) {
      if (k_used[k]) continue;
      k_used[k] = true;
      match_of[x] = static_cast<int>(k);
      self(self, x + 1);
      match_of[x] = -1;
      k_used[k] = false;
    }
  };
  enumerate(enumerate, 0);

  Verdict v;
  if (answer_atoms.empty()) {
    v.reason = model_count == 0 ? Reason::NoMappings : Reason::NoCandidates;
  } else if (std::all_of(
                 answer_atoms.begin(), answer_atoms.end(),
                 [&](const NodeId& n) { return n == answer_atoms.front(); })) {
    v.outcome = Outcome::Answer;
    v.answer_node = answer_atoms.front();
    v.reason = Reason::Unanimous;
  } else {
    v.reason = Reason::ConflictingCandidates;
  }
  return Result<Verdict>::success(std::move(v));
}

namespace {

// Deterministic, platform-independent generator (splitmix64).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0, n).
  std::size_t bounded(std::size_t n) { return next() % n; }
  // Uniform in [0, 1).
  double fraction() { return (next() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[bounded(i)]);
  }

 private:
  std::uint64_t state_;
};

}  // namespace

ProblemBundle generate_instance(const RandomInstanceSpec& spec) {
  if (spec.sentence_nodes < 3 || spec.sentence_nodes > 10)
    throw std::invalid_argument("sentence_nodes must be in [3, 10]");
  if (spec.knowledge_nodes < 2 || spec.knowledge_nodes > 6 ||
      spec.knowledge_nodes > spec.sentence_nodes)
    throw std::invalid_argument(
        "knowledge_nodes must be in [2, min(6, sentence_nodes)]");
  if (spec.edge_density < 0.0 || spec.edge_density > 1.0)
    throw std::invalid_argument("edge_density must be in [0, 1]");
  if (spec.label_alphabet_size < 1 || spec.class_alphabet_size < 1)
    throw std::invalid_argument("alphabet sizes must be >= 1");

  Rng rng(spec.seed);
  const std::size_t n = spec.sentence_nodes;
  const std::size_t k = spec.knowledge_nodes;

  std::vector<std::string> labels, classes;
  for (std::size_t i = 1; i <= spec.label_alphabet_size; ++i)
    labels.push_back("r" + std::to_string(i));
  for (std::size_t i = 1; i <= spec.class_alphabet_size; ++i)
    classes.push_back("c" + std::to_string(i));

  std::vector<NodeId> s_ids(n);
  std::vector<std::string> s_class(n);
  for (std::size_t i = 0; i < n; ++i) {
    s_ids[i] = "w" + std::to_string(i + 1) + "_" + std::to_string(i + 1);
    s_class[i] = classes[rng.bounded(classes.size())];
  }

  // Sentence edges respect index order, which keeps the graph acyclic.
  struct RawEdge {
    std::size_t from, to;
    std::string label;
  };
  std::vector<RawEdge> s_edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.fraction() < spec.edge_density)
        s_edges.push_back({i, j, labels[rng.bounded(labels.size())]});
    }
  }

  LabeledGraph sentence_graph;
  for (std::size_t i = 0; i < n; ++i) {
    sentence_graph.add_node(s_ids[i]);
    sentence_graph.add_node(s_class[i]);
    sentence_graph.add_edge(s_ids[i], std::string(kInstanceOf), s_class[i]);
  }
  for (const auto& e : s_edges)
    sentence_graph.add_edge(s_ids[e.from], e.label, s_ids[e.to]);

  std::vector<std::size_t> role_pick(n);
  for (std::size_t i = 0; i < n; ++i) role_pick[i] = i;
  rng.shuffle(role_pick);
  NodeId pronoun = s_ids[role_pick[0]];
  NodeId choice1 = s_ids[role_pick[1]];
  NodeId choice2 = s_ids[role_pick[2]];

  // Knowledge: subsample k sentence nodes (order-preserving, so inherited
  // edges stay acyclic), rename, perturb classes and edges slightly.
  std::vector<std::size_t> subset_pick(n);
  for (std::size_t i = 0; i < n; ++i) subset_pick[i] = i;
  rng.shuffle(subset_pick);
  std::vector<std::size_t> chosen(subset_pick.begin(),
                                  subset_pick.begin() + k);
  std::sort(chosen.begin(), chosen.end());

  std::vector<NodeId> k_ids(k);
  std::vector<std::string> k_class(k);
  std::map<std::size_t, std::size_t> position_of;  // sentence idx -> k idx
  for (std::size_t i = 0; i < k; ++i) {
    k_ids[i] = "k" + std::to_string(i + 1) + "_" + std::to_string(i + 1);
    position_of[chosen[i]] = i;
    k_class[i] =
        rng.fraction() < 0.15 ? classes[rng.bounded(classes.size())]
                              : s_class[chosen[i]];
  }

  std::vector<RawEdge> k_edges;
  for (const auto& e : s_edges) {
    auto from = position_of.find(e.from);
    auto to = position_of.find(e.to);
    if (from == position_of.end() || to == position_of.end()) continue;
    if (rng.fraction() < 0.85)
      k_edges.push_back({from->second, to->second, e.label});
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (rng.fraction() < spec.edge_density * 0.15)
        k_edges.push_back({i, j, labels[rng.bounded(labels.size())]});
    }
  }

  std::vector<std::size_t> pair_pick(k);
  for (std::size_t i = 0; i < k; ++i) pair_pick[i] = i;
  rng.shuffle(pair_pick);

  LabeledGraph knowledge_graph;
  for (std::size_t i = 0; i < k; ++i) {
    knowledge_graph.add_node(k_ids[i]);
    knowledge_graph.add_node(k_class[i]);
    knowledge_graph.add_edge(k_ids[i], std::string(kInstanceOf), k_class[i]);
  }
  for (const auto& e : k_edges)
    knowledge_graph.add_edge(k_ids[e.from], e.label, k_ids[e.to]);
  knowledge_graph.add_edge(k_ids[pair_pick[0]], std::string(kIsSameAs),
                           k_ids[pair_pick[1]]);
  knowledge_graph.add_edge(k_ids[pair_pick[1]], std::string(kIsSameAs),
                           k_ids[pair_pick[0]]);

  auto sentence = validate_sentence_graph(sentence_graph);
  auto knowledge = validate_knowledge_graph(knowledge_graph);
  if (!sentence.ok() || !knowledge.ok())
    throw std::logic_error("generated instance failed validation:\n" +
                           sentence.diagnostics.to_string() +
                           knowledge.diagnostics.to_string());

  ProblemBundle bundle;
  bundle.problem = {std::move(*sentence.value), pronoun, choice1, choice2,
                    "seed_" + std::to_string(spec.seed)};
  bundle.knowledge = std::move(*knowledge.value);
  return bundle;
}

std::vector<Fact> bundle_to_facts(const ProblemBundle& bundle) {
  std::vector<Fact> facts;
  for (const auto& e : bundle.problem.sentence.graph().edges())
    facts.push_back({Predicate::HasS, {e.source, e.label, e.target}});
  for (const auto& e : bundle.knowledge.graph().edges())
    facts.push_back({Predicate::HasK, {e.source, e.label, e.target}});
  facts.push_back({Predicate::Pronoun, {bundle.problem.pronoun}});
  facts.push_back({Predicate::AnsCh1, {bundle.problem.answer_choice_1}});
  facts.push_back({Predicate::AnsCh2, {bundle.problem.answer_choice_2}});
  for (const auto& [s, k] : bundle.synonyms)
    facts.push_back({Predicate::Synonyms, {s, k}});
  for (const auto& [s, k] : bundle.similar)
    facts.push_back({Predicate::Similar, {s, k}});
  return facts;
}

}  // namespace winograph::oracle
