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

#include "winograph/resolver.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include <json.hpp>

namespace winograph {

std::string_view reason_name(Reason r) {
  switch (r) {
    case Reason::Unanimous:
      return "unanimous";
    case Reason::NoMappings:
      return "no_mappings";
    case Reason::NoCandidates:
      return "no_candidates";
    case Reason::ConflictingCandidates:
      return "conflicting_candidates";
    case Reason::TruncatedSearch:
      return "truncated_search";
  }
  return "";
}

std::optional<CandidateAnswer> derive_candidate(const WSCProblem& problem,
                                                const KnowledgeGraph& knowledge,
                                                const Mapping& mapping,
                                                std::size_t mapping_index) {
  const NodeId* pronoun_image = mapping.image(problem.pronoun);
  if (!pronoun_image) return std::nullopt;

  // Both is_same_as directions exist in a validated knowledge graph, so
  // same_as() covers the either-direction reading.
  auto claims_partner = [&](const NodeId* img) {
    return img != nullptr && knowledge.same_as(*pronoun_image, *img);
  };
  auto blocked_for = [&](const NodeId& choice) {
    for (const auto& [x, y] : mapping.pairs) {
      if (x != choice && knowledge.same_as(*pronoun_image, y)) return true;
    }
    return false;
  };

  const NodeId* image1 = mapping.image(problem.answer_choice_1);
  const NodeId* image2 = mapping.image(problem.answer_choice_2);
  bool qualifies1 = claims_partner(image1) &&
                    !blocked_for(problem.answer_choice_1);
  bool qualifies2 = claims_partner(image2) &&
                    !blocked_for(problem.answer_choice_2);

  // Unreachable when the choices are distinct (each would block the
  // other), but a both-qualify mapping must never emit two answers.
  if (qualifies1 && qualifies2) return std::nullopt;

  if (qualifies1)
    return CandidateAnswer{mapping_index, Choice::A1, problem.answer_choice_1,
                           {*pronoun_image, *image1}};
  if (qualifies2)
    return CandidateAnswer{mapping_index, Choice::A2, problem.answer_choice_2,
                           {*pronoun_image, *image2}};
  return std::nullopt;
}

Verdict aggregate(std::vector<CandidateAnswer> candidates,
                  Exhaustiveness exhaustiveness, const SolveConfig& config,
                  std::size_t mapping_count) {
  Verdict v;
  v.candidates = std::move(candidates);

  if (exhaustiveness == Exhaustiveness::Truncated &&
      config.treat_truncated_as_no_answer) {
    v.outcome = Outcome::NoAnswer;
    v.reason = Reason::TruncatedSearch;
    return v;
  }
  if (v.candidates.empty()) {
    v.outcome = Outcome::NoAnswer;
    v.reason =
        mapping_count == 0 ? Reason::NoMappings : Reason::NoCandidates;
    return v;
  }
  const NodeId& first = v.candidates.front().node;
  bool unanimous = std::all_of(
      v.candidates.begin(), v.candidates.end(),
      [&](const CandidateAnswer& c) { return c.node == first; });
  if (unanimous) {
    v.outcome = Outcome::Answer;
    v.answer_node = first;
    v.reason = Reason::Unanimous;
  } else {
    v.outcome = Outcome::NoAnswer;
    v.reason = Reason::ConflictingCandidates;
  }
  return v;
}

AnswerReport solve(const ProblemBundle& bundle, const SolveConfig& config) {
  auto start = std::chrono::steady_clock::now();

  AnswerReport report;
  report.problem_label = bundle.problem.label;

  CoreGraph s_core = extract_sentence_core(bundle.problem.sentence);
  CoreGraph k_core = extract_knowledge_core(bundle.knowledge);
  report.core_sizes = {s_core.nodes.size(), s_core.edges.size(),
                       k_core.nodes.size(), k_core.edges.size()};

  CompatibilityPolicy policy = config.policy;
  policy.synonyms.insert(policy.synonyms.end(), bundle.synonyms.begin(),
                         bundle.synonyms.end());
  policy.similar.insert(policy.similar.end(), bundle.similar.begin(),
                        bundle.similar.end());

  const SentenceGraph& sentence = bundle.problem.sentence;
  const KnowledgeGraph& knowledge = bundle.knowledge;
  auto compatible = [&](const NodeId& x, const NodeId& y) {
    return node_compatible(policy, sentence, knowledge, x, y);
  };

  auto enumeration =
      enumerate_isomorphisms(s_core, k_core, compatible, config.budget);
  // A validated knowledge graph always has same-as endpoints in its core,
  // so enumeration cannot fail here; guard anyway.
  EnumerationResult result =
      enumeration.ok() ? std::move(*enumeration.value) : EnumerationResult{};

  std::vector<CandidateAnswer> candidates;
  for (std::size_t i = 0; i < result.mappings.size(); ++i) {
    if (auto c = derive_candidate(bundle.problem, knowledge,
                                  result.mappings[i], i))
      candidates.push_back(std::move(*c));
  }

  report.mapping_count = result.mappings.size();
  report.exhaustiveness = result.exhaustiveness;
  report.truncated_by = result.truncated_by;
  report.verdict = aggregate(std::move(candidates), result.exhaustiveness,
                             config, result.mappings.size());

  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

namespace {

nlohmann::ordered_json report_json_value(const AnswerReport& r, bool stable) {
  nlohmann::ordered_json j;
  j["problem_label"] = r.problem_label;
  j["outcome"] =
      r.verdict.outcome == Outcome::Answer ? "answer" : "no_answer";
  j["reason"] = reason_name(r.verdict.reason);
  if (r.verdict.answer_node) j["answer_node"] = *r.verdict.answer_node;
  j["mappings"] = r.mapping_count;
  auto candidates = nlohmann::ordered_json::array();
  for (const auto& c : r.verdict.candidates) {
    nlohmann::ordered_json cj;
    cj["mapping_index"] = c.mapping_index;
    cj["choice"] = c.choice == Choice::A1 ? "A1" : "A2";
    cj["node"] = c.node;
    cj["witness"] = {{"pronoun_image", c.witness.first},
                     {"choice_image", c.witness.second}};
    candidates.push_back(std::move(cj));
  }
  j["candidates"] = std::move(candidates);
  j["core_sizes"] = {{"sentence_nodes", r.core_sizes.sentence_nodes},
                     {"sentence_edges", r.core_sizes.sentence_edges},
                     {"knowledge_nodes", r.core_sizes.knowledge_nodes},
                     {"knowledge_edges", r.core_sizes.knowledge_edges}};
  j["exhaustive"] = r.exhaustiveness == Exhaustiveness::Complete
                        ? "complete"
                        : "truncated";
  if (!r.truncated_by.empty()) j["truncated_by"] = r.truncated_by;
  if (!stable) j["timing"] = {{"elapsed_ms", r.elapsed_ms}};
  return j;
}

}  // namespace

std::string report_to_json(const AnswerReport& report, bool stable) {
  return report_json_value(report, stable).dump(2) + "\n";
}

std::string report_to_text(const AnswerReport& report, bool stable) {
  std::ostringstream os;
  os << "problem: " << report.problem_label << "\n";
  if (report.verdict.outcome == Outcome::Answer)
    os << "answer: " << *report.verdict.answer_node << "\n";
  else
    os << "answer: none (" << reason_name(report.verdict.reason) << ")\n";
  os << "mappings: " << report.mapping_count << " ("
     << (report.exhaustiveness == Exhaustiveness::Complete ? "complete"
                                                           : "truncated")
     << (report.truncated_by.empty() ? "" : ": " + report.truncated_by)
     << ")\n";
  for (const auto& c : report.verdict.candidates) {
    os << "  candidate #" << c.mapping_index << ": "
       << (c.choice == Choice::A1 ? "A1" : "A2") << " " << c.node << " via ("
       << c.witness.first << ", " << c.witness.second << ")\n";
  }
  os << "cores: sentence " << report.core_sizes.sentence_nodes << " nodes / "
     << report.core_sizes.sentence_edges << " edges, knowledge "
     << report.core_sizes.knowledge_nodes << " nodes / "
     << report.core_sizes.knowledge_edges << " edges\n";
  if (!stable) os << "elapsed_ms: " << report.elapsed_ms << "\n";
  return os.str();
}

}  // namespace winograph
