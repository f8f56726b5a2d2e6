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

#ifndef WINOGRAPH_RESOLVER_HPP_
#define WINOGRAPH_RESOLVER_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "winograph/facts.hpp"
#include "winograph/graph.hpp"
#include "winograph/matcher.hpp"

namespace winograph {

enum class Choice { A1, A2 };

// One per-mapping answer. The witness records which knowledge nodes
// licensed it: the pronoun's image and the choice's image, joined by an
// is_same_as pair.
struct CandidateAnswer {
  std::size_t mapping_index = 0;
  Choice choice = Choice::A1;
  NodeId node;
  std::pair<NodeId, NodeId> witness;  // (pronoun image, choice image)

  bool operator==(const CandidateAnswer&) const = default;
};

enum class Outcome { Answer, NoAnswer };

enum class Reason {
  Unanimous,
  NoMappings,
  NoCandidates,
  ConflictingCandidates,
  TruncatedSearch,
};

std::string_view reason_name(Reason r);

struct Verdict {
  Outcome outcome = Outcome::NoAnswer;
  std::optional<NodeId> answer_node;  // set iff outcome == Answer
  Reason reason = Reason::NoCandidates;
  std::vector<CandidateAnswer> candidates;

  bool operator==(const Verdict&) const = default;
};

struct SolveConfig {
  CompatibilityPolicy policy;
  SearchBudget budget;
  // A truncated enumeration cannot certify that one choice is the only
  // answer, so by default it yields no answer.
  bool treat_truncated_as_no_answer = true;
};

// Extracts the answer a single mapping supports, if any.
//
// Let n1 be the knowledge node paired with the pronoun. A choice
// qualifies when its own image is an is_same_as partner of n1 and no
// other node claims any partner of n1. At most one candidate survives; a
// mapping where both choices would qualify yields none.
std::optional<CandidateAnswer> derive_candidate(const WSCProblem& problem,
                                                const KnowledgeGraph& knowledge,
                                                const Mapping& mapping,
                                                std::size_t mapping_index = 0);

// Final decision over all per-mapping candidates: an answer only when the
// candidates are nonempty and unanimous (and the search was exhaustive,
// unless configured otherwise). Mappings that yielded no candidate are
// ignored.
Verdict aggregate(std::vector<CandidateAnswer> candidates,
                  Exhaustiveness exhaustiveness, const SolveConfig& config,
                  std::size_t mapping_count);

struct CoreSizes {
  std::size_t sentence_nodes = 0;
  std::size_t sentence_edges = 0;
  std::size_t knowledge_nodes = 0;
  std::size_t knowledge_edges = 0;
};

struct AnswerReport {
  std::string problem_label;
  Verdict verdict;
  std::size_t mapping_count = 0;
  CoreSizes core_sizes;
  Exhaustiveness exhaustiveness = Exhaustiveness::Complete;
  std::string truncated_by;
  double elapsed_ms = 0.0;
};

// Full pipeline: core extraction, isomorphism enumeration, per-mapping
// candidate derivation, aggregation. The bundle's synonym/similar pairs
// are merged into the configured policy's pairs.
AnswerReport solve(const ProblemBundle& bundle, const SolveConfig& config);

// Deterministic JSON document (stable key order, sorted lists). Timing
// fields sit under a "timing" key and are omitted when stable is set.
std::string report_to_json(const AnswerReport& report, bool stable = false);
std::string report_to_text(const AnswerReport& report, bool stable = false);

}  // namespace winograph

#endif  // WINOGRAPH_RESOLVER_HPP_
