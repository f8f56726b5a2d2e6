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

#ifndef WINOGRAPH_FACTS_HPP_
#define WINOGRAPH_FACTS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "winograph/diagnostics.hpp"
#include "winograph/graph.hpp"

namespace winograph {

// Fact-file format, one fact per line:
//
//     has_s("man_2","instance_of","person").
//     pronoun("he_9").        % comments run to end of line
//
// Arguments are always double-quoted identifiers over [A-Za-z0-9_].
// Blank lines are ignored; CRLF input is tolerated, output is LF.
//
// Enumerators are ordered alphabetically by predicate name so that the
// default ordering matches canonical serialization order.
enum class Predicate {
  AnsCh1,    // ans_ch1/1   second... first answer choice
  AnsCh2,    // ans_ch2/1
  Expected,  // expected/1  harness metadata: the gold answer
  HasK,      // has_k/3     knowledge-graph edge
  HasS,      // has_s/3     sentence-graph edge
  Pronoun,   // pronoun/1
  Similar,   // similar/2   (sentence node, knowledge node)
  Synonyms,  // synonyms/2  (sentence node, knowledge node)
};

std::string_view predicate_name(Predicate p);
std::optional<Predicate> predicate_from_name(std::string_view name);
std::size_t predicate_arity(Predicate p);

struct Fact {
  Predicate predicate;
  std::vector<std::string> args;

  auto operator<=>(const Fact&) const = default;
};

// Parses a whole fact file. Diagnostics carry 1-based line and column; an
// error on one line never suppresses diagnostics on other lines.
Result<std::vector<Fact>> parse_fact_file(std::string_view text);

// Canonical form: facts sorted by (predicate, args), duplicates removed,
// one per line, trailing newline. parse(serialize(F)) == F as a set.
std::string serialize_fact_file(std::vector<Fact> facts);

struct LoadOptions {
  // Require instance node ids to end in `_<index>`.
  bool strict_word_index = false;
};

// One solvable unit: the problem, exactly one knowledge graph, and any
// synonym/similar pairs supplied alongside.
struct ProblemBundle {
  WSCProblem problem;
  KnowledgeGraph knowledge;
  std::vector<std::pair<NodeId, NodeId>> synonyms;  // (sentence, knowledge)
  std::vector<std::pair<NodeId, NodeId>> similar;   // (sentence, knowledge)
  std::vector<std::string> source_paths;
};

// Assembles and cross-validates a bundle. Facts may be spread across the
// three lists in any way; predicates disambiguate. Warnings are attached
// for entity-class vocabulary violations and for knowledge class names
// that never occur in the sentence graph.
Result<ProblemBundle> load_problem_bundle(
    const std::vector<Fact>& problem_facts,
    const std::vector<Fact>& knowledge_facts,
    const std::vector<Fact>& aux_facts, std::string label = "",
    const LoadOptions& options = {});

// Turns a sentence-shaped graph into a knowledge graph by adding the two
// directed is_same_as edges between x and y.
Result<KnowledgeGraph> add_same_as_pair(const SentenceGraph& g,
                                        const NodeId& x, const NodeId& y);

}  // namespace winograph

#endif  // WINOGRAPH_FACTS_HPP_
