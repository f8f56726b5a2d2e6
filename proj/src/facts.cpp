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

#include "winograph/facts.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace winograph {

namespace {

struct PredicateInfo {
  Predicate predicate;
  std::string_view name;
  std::size_t arity;
};

constexpr PredicateInfo kPredicates[] = {
    {Predicate::AnsCh1, "ans_ch1", 1},  {Predicate::AnsCh2, "ans_ch2", 1},
    {Predicate::Expected, "expected", 1}, {Predicate::HasK, "has_k", 3},
    {Predicate::HasS, "has_s", 3},      {Predicate::Pronoun, "pronoun", 1},
    {Predicate::Similar, "similar", 2}, {Predicate::Synonyms, "synonyms", 2},
};

}  // namespace

std::string_view predicate_name(Predicate p) {
  for (const auto& info : kPredicates)
    if (info.predicate == p) return info.name;
  return "";
}

std::optional<Predicate> predicate_from_name(std::string_view name) {
  for (const auto& info : kPredicates)
    if (info.name == name) return info.predicate;
  return std::nullopt;
}

std::size_t predicate_arity(Predicate p) {
  for (const auto& info : kPredicates)
    if (info.predicate == p) return info.arity;
  return 0;
}

namespace {

class LineParser {
 public:
  LineParser(std::string_view line, int line_no, DiagnosticList& diags)
      : line_(line), line_no_(line_no), diags_(diags) {}

  // Returns the parsed fact, or nullopt for blank/comment/broken lines.
  std::optional<Fact> run() {
    skip_ws();
    if (done()) return std::nullopt;

    int pred_col = col();
    std::string name = take_identifier();
    if (name.empty()) {
      error(diag::kSyntaxError, "expected a predicate name", col());
      return std::nullopt;
    }
    auto pred = predicate_from_name(name);
    if (!pred) {
      error(diag::kUnknownPredicate, "unknown predicate '" + name + "'",
            pred_col);
      return std::nullopt;
    }

    skip_ws();
    if (!expect('(')) return std::nullopt;

    std::vector<std::string> args;
    while (true) {
      skip_ws();
      auto arg = take_quoted_arg();
      if (!arg) return std::nullopt;
      args.push_back(std::move(*arg));
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() == ')') {
        ++pos_;
        break;
      }
      error(diag::kSyntaxError, "expected ',' or ')'", col());
      return std::nullopt;
    }

    skip_ws();
    if (!expect('.')) return std::nullopt;
    skip_ws();
    if (!done()) {
      error(diag::kSyntaxError, "trailing characters after fact", col());
      return std::nullopt;
    }

    if (args.size() != predicate_arity(*pred)) {
      error(diag::kArityMismatch,
            "predicate '" + name + "' takes " +
                std::to_string(predicate_arity(*pred)) + " argument(s), got " +
                std::to_string(args.size()),
            pred_col);
      return std::nullopt;
    }
    return Fact{*pred, std::move(args)};
  }

 private:
  bool done() const { return pos_ >= line_.size() || line_[pos_] == '%'; }
  char peek() const { return pos_ < line_.size() ? line_[pos_] : '\0'; }
  int col() const { return static_cast<int>(pos_) + 1; }

  void skip_ws() {
    while (pos_ < line_.size() &&
           std::isspace(static_cast<unsigned char>(line_[pos_])))
      ++pos_;
  }

  bool expect(char c) {
    if (peek() != c) {
      error(diag::kSyntaxError, std::string("expected '") + c + "'", col());
      return false;
    }
    ++pos_;
    return true;
  }

  std::string take_identifier() {
    std::size_t start = pos_;
    while (pos_ < line_.size() &&
           (std::isalnum(static_cast<unsigned char>(line_[pos_])) ||
            line_[pos_] == '_'))
      ++pos_;
    return std::string(line_.substr(start, pos_ - start));
  }

  std::optional<std::string> take_quoted_arg() {
    int start_col = col();
    if (peek() != '"') {
      error(diag::kSyntaxError, "expected a quoted argument", start_col);
      return std::nullopt;
    }
    ++pos_;
    std::size_t start = pos_;
    while (pos_ < line_.size() && line_[pos_] != '"') ++pos_;
    if (pos_ >= line_.size()) {
      error(diag::kSyntaxError, "unterminated string", start_col);
      return std::nullopt;
    }
    std::string text(line_.substr(start, pos_ - start));
    ++pos_;  // closing quote
    if (!is_valid_identifier(text)) {
      error(diag::kBadIdentifier,
            "argument must be a nonempty [A-Za-z0-9_] identifier", start_col);
      return std::nullopt;
    }
    return text;
  }

  void error(std::string code, std::string message, int column) {
    diags_.add({std::move(code), Severity::Error, std::move(message),
                std::string(line_), line_no_, column});
  }

  std::string_view line_;
  std::size_t pos_ = 0;
  int line_no_;
  DiagnosticList& diags_;
};

}  // namespace

Result<std::vector<Fact>> parse_fact_file(std::string_view text) {
  DiagnosticList diags;
  std::vector<Fact> facts;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = (eol == std::string_view::npos)
                                ? text.substr(pos)
                                : text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;

    if (auto fact = LineParser(line, line_no, diags).run())
      facts.push_back(std::move(*fact));

    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }

  if (diags.has_errors())
    return Result<std::vector<Fact>>::failure(std::move(diags));
  return Result<std::vector<Fact>>::success(std::move(facts),
                                            std::move(diags));
}

std::string serialize_fact_file(std::vector<Fact> facts) {
  std::sort(facts.begin(), facts.end());
  facts.erase(std::unique(facts.begin(), facts.end()), facts.end());

  std::string out;
  for (const auto& f : facts) {
    out += predicate_name(f.predicate);
    out += '(';
    for (std::size_t i = 0; i < f.args.size(); ++i) {
      if (i > 0) out += ',';
      out += '"';
      out += f.args[i];
      out += '"';
    }
    out += ").\n";
  }
  return out;
}

namespace {

// Collects the unique argument of a unary predicate, reporting missing and
// conflicting declarations.
std::optional<NodeId> unique_unary(const std::set<NodeId>& values,
                                   std::string_view what,
                                   const char* missing_code,
                                   const char* duplicate_code,
                                   DiagnosticList& diags) {
  if (values.empty()) {
    diags.error(missing_code, std::string("no ") + std::string(what) +
                                  " fact in the bundle");
    return std::nullopt;
  }
  if (values.size() > 1) {
    std::string all;
    for (const auto& v : values) {
      if (!all.empty()) all += ", ";
      all += v;
    }
    diags.error(duplicate_code,
                std::string(what) + " declared more than once", all);
    return std::nullopt;
  }
  return *values.begin();
}

}  // namespace

Result<ProblemBundle> load_problem_bundle(
    const std::vector<Fact>& problem_facts,
    const std::vector<Fact>& knowledge_facts,
    const std::vector<Fact>& aux_facts, std::string label,
    const LoadOptions& options) {
  DiagnosticList diags;

  LabeledGraph sentence_edges;
  LabeledGraph knowledge_edges;
  std::set<NodeId> pronouns, choice1, choice2;
  std::vector<std::pair<NodeId, NodeId>> synonyms, similar;

  auto route = [&](const std::vector<Fact>& facts) {
    for (const auto& f : facts) {
      switch (f.predicate) {
        case Predicate::HasS:
          sentence_edges.add_node(f.args[0]);
          sentence_edges.add_node(f.args[2]);
          sentence_edges.add_edge(f.args[0], f.args[1], f.args[2]);
          break;
        case Predicate::HasK:
          knowledge_edges.add_node(f.args[0]);
          knowledge_edges.add_node(f.args[2]);
          knowledge_edges.add_edge(f.args[0], f.args[1], f.args[2]);
          break;
        case Predicate::Pronoun:
          pronouns.insert(f.args[0]);
          break;
        case Predicate::AnsCh1:
          choice1.insert(f.args[0]);
          break;
        case Predicate::AnsCh2:
          choice2.insert(f.args[0]);
          break;
        case Predicate::Synonyms:
          synonyms.emplace_back(f.args[0], f.args[1]);
          break;
        case Predicate::Similar:
          similar.emplace_back(f.args[0], f.args[1]);
          break;
        case Predicate::Expected:
          break;  // harness metadata, not part of the bundle
      }
    }
  };
  route(problem_facts);
  route(knowledge_facts);
  route(aux_facts);

  auto sentence = validate_sentence_graph(sentence_edges);
  diags.append(sentence.diagnostics);
  auto knowledge = validate_knowledge_graph(knowledge_edges);
  diags.append(knowledge.diagnostics);

  auto pronoun = unique_unary(pronouns, "pronoun", diag::kMissingPronoun,
                              diag::kDuplicatePronoun, diags);
  auto a1 = unique_unary(choice1, "ans_ch1", diag::kMissingAnswerChoice,
                         diag::kDuplicateAnswerChoice, diags);
  auto a2 = unique_unary(choice2, "ans_ch2", diag::kMissingAnswerChoice,
                         diag::kDuplicateAnswerChoice, diags);

  if (pronoun && a1 && a2) {
    if (*pronoun == *a1 || *pronoun == *a2 || *a1 == *a2)
      diags.error(diag::kAnswerChoicesNotDistinct,
                  "pronoun and answer choices must be three distinct nodes",
                  *pronoun + ", " + *a1 + ", " + *a2);
  }

  if (sentence.ok()) {
    if (pronoun && !sentence->is_instance_node(*pronoun))
      diags.error(diag::kPronounNotInGraph,
                  "pronoun is not a sentence instance node", *pronoun);
    for (const auto& choice : {a1, a2}) {
      if (choice && !sentence->is_instance_node(*choice))
        diags.error(diag::kAnswerChoiceNotInGraph,
                    "answer choice is not a sentence instance node", *choice);
    }
  }

  if (sentence.ok() && knowledge.ok()) {
    auto check_pairs = [&](const std::vector<std::pair<NodeId, NodeId>>& ps,
                           std::string_view what) {
      for (const auto& [s, k] : ps) {
        if (!sentence->is_instance_node(s))
          diags.error(diag::kAuxPairEndpointUnknown,
                      std::string(what) +
                          " pair: first element is not a sentence instance "
                          "node",
                      s);
        if (!knowledge->is_instance_node(k))
          diags.error(diag::kAuxPairEndpointUnknown,
                      std::string(what) +
                          " pair: second element is not a knowledge instance "
                          "node",
                      k);
      }
    };
    check_pairs(synonyms, "synonyms");
    check_pairs(similar, "similar");
  }

  if (options.strict_word_index) {
    auto check_suffix = [&](const std::vector<NodeId>& nodes) {
      for (const auto& n : nodes)
        if (!has_word_index_suffix(n))
          diags.error(diag::kWordIndexConvention,
                      "instance node id lacks a `_<index>` suffix", n);
    };
    if (sentence.ok()) check_suffix(sentence->instance_nodes());
    if (knowledge.ok()) check_suffix(knowledge->instance_nodes());
  }

  // Vocabulary warnings: the pronoun and answer choices are known
  // noun/pronoun tokens, so their classes should be entity classes.
  if (sentence.ok()) {
    for (const auto& node : {pronoun, a1, a2}) {
      if (!node) continue;
      auto cls = sentence->class_of(*node);
      if (cls && !is_entity_class(*cls))
        diags.warning(diag::kClassOutsideEntityVocabulary,
                      "class '" + *cls +
                          "' of noun/pronoun token is not one of the 20 "
                          "entity classes",
                      *node);
    }
  }
  if (sentence.ok() && knowledge.ok()) {
    std::set<NodeId> sentence_classes(sentence->class_nodes().begin(),
                                      sentence->class_nodes().end());
    for (const auto& c : knowledge->class_nodes()) {
      if (!sentence_classes.count(c))
        diags.warning(diag::kUnsharedKnowledgeClass,
                      "knowledge class never occurs in the sentence graph",
                      c);
    }
  }

  if (diags.has_errors() || !sentence.ok() || !knowledge.ok())
    return Result<ProblemBundle>::failure(std::move(diags));

  ProblemBundle bundle;
  bundle.problem = {std::move(*sentence.value), *pronoun, *a1, *a2,
                    std::move(label)};
  bundle.knowledge = std::move(*knowledge.value);
  std::sort(synonyms.begin(), synonyms.end());
  synonyms.erase(std::unique(synonyms.begin(), synonyms.end()),
                 synonyms.end());
  std::sort(similar.begin(), similar.end());
  similar.erase(std::unique(similar.begin(), similar.end()), similar.end());
  bundle.synonyms = std::move(synonyms);
  bundle.similar = std::move(similar);
  return Result<ProblemBundle>::success(std::move(bundle), std::move(diags));
}

Result<KnowledgeGraph> add_same_as_pair(const SentenceGraph& g,
                                        const NodeId& x, const NodeId& y) {
  DiagnosticList diags;
  if (x == y) {
    diags.error(diag::kSelfSameAs, "a node cannot corefer with itself", x);
    return Result<KnowledgeGraph>::failure(std::move(diags));
  }
  for (const auto& n : {x, y}) {
    if (!g.graph().has_node(n))
      diags.error(diag::kUnknownNode, "node is not in the graph", n);
    else if (!g.is_instance_node(n))
      diags.error(diag::kNotAnInstanceNode,
                  "is_same_as endpoints must be instance nodes", n);
  }
  if (diags.has_errors())
    return Result<KnowledgeGraph>::failure(std::move(diags));

  LabeledGraph extended = g.graph();
  extended.add_edge(x, std::string(kIsSameAs), y);
  extended.add_edge(y, std::string(kIsSameAs), x);
  return validate_knowledge_graph(extended);
}

}  // namespace winograph
