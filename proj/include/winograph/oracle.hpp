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

#ifndef WINOGRAPH_ORACLE_HPP_
#define WINOGRAPH_ORACLE_HPP_

#include <cstdint>
#include <vector>

#include "winograph/diagnostics.hpp"
#include "winograph/facts.hpp"
#include "winograph/matcher.hpp"
#include "winograph/resolver.hpp"

// Reference implementations for equivalence testing. Everything here is
// deliberately naive — plain exhaustive enumeration with checks applied at
// the leaves — and must stay structurally independent of the search and
// derivation paths it cross-checks.
namespace winograph::oracle {

// Hard size guards; enumeration is factorial in these.
inline constexpr std::size_t kMaxKnowledgeCoreNodes = 8;
inline constexpr std::size_t kMaxSentenceCoreNodes = 12;

// Enumerates every injective total placement of knowledge core nodes onto
// sentence core nodes and filters by compatibility and edge preservation.
// Output is in the matcher's canonical order.
Result<std::vector<Mapping>> brute_force_enumerate(
    const CoreGraph& sentence_core, const CoreGraph& knowledge_core,
    const CompatibilityFn& compatible);

// Direct evaluation of the answer's graph-theoretic definition: for every
// brute-forced mapping, collect the nodes whose image corefers with the
// pronoun's image; a choice wins a mapping when it is that mapping's sole
// such node, and wins outright when no mapping elects the other choice.
// Class compatibility only (no synonym/similar extension).
Result<Verdict> answer_by_definition(const WSCProblem& problem,
                                     const KnowledgeGraph& knowledge);

// Literal generate-and-filter evaluation of the declarative rule encoding:
// every injective partial match relation is generated, the totality /
// admissibility / edge-preservation constraints are applied, per-model
// answer atoms are derived with their blocking guards, models deriving two
// distinct answers are discarded, and the surviving atoms are aggregated.
Result<Verdict> answer_by_rules(
    const ProblemBundle& bundle,
    PolicyMode mode = PolicyMode::ClassOrSynonymOrSimilar);

struct RandomInstanceSpec {
  std::size_t sentence_nodes = 6;       // in [3, 10]
  std::size_t knowledge_nodes = 4;      // in [2, min(6, sentence_nodes)]
  double edge_density = 0.4;            // in [0, 1]
  std::size_t label_alphabet_size = 2;  // >= 1
  std::size_t class_alphabet_size = 3;  // >= 1
  std::uint64_t seed = 0;
};

// Deterministic-from-seed bundle: a random sentence DAG, a knowledge graph
// subsampled (and lightly perturbed) from it, one same-as pair, and three
// distinct pronoun/answer-choice nodes. Always passes validation; throws
// std::invalid_argument on an out-of-bounds spec.
ProblemBundle generate_instance(const RandomInstanceSpec& spec);

// The bundle's content as loadable facts (canonical input to
// serialize_fact_file and load_problem_bundle).
std::vector<Fact> bundle_to_facts(const ProblemBundle& bundle);

}  // namespace winograph::oracle

#endif  // WINOGRAPH_ORACLE_HPP_
