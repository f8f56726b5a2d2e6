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

#include "winograph/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include <json.hpp>

#include "winograph/matcher.hpp"
#include "winograph/oracle.hpp"

namespace winograph {

Result<std::string> read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    DiagnosticList diags;
    diags.error(diag::kIoError, "cannot open file", path.string());
    return Result<std::string>::failure(std::move(diags));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return Result<std::string>::success(buffer.str());
}

namespace {

// Parses one fact file, prefixing diagnostics with the file name.
Result<std::vector<Fact>> parse_file(const std::filesystem::path& path,
                                     DiagnosticList& diags) {
  auto text = read_text_file(path);
  if (!text.ok()) {
    diags.append(text.diagnostics);
    return Result<std::vector<Fact>>::failure(text.diagnostics);
  }
  auto facts = parse_fact_file(*text);
  for (const auto& d : facts.diagnostics) {
    Diagnostic copy = d;
    copy.message = path.filename().string() + ": " + copy.message;
    diags.add(copy);
  }
  return facts;
}

}  // namespace

Result<BundleDir> load_bundle_dir(const std::filesystem::path& dir,
                                  const LoadOptions& options) {
  DiagnosticList diags;

  // Exactly one knowledge file; several would mean several pieces of
  // knowledge, which a bundle cannot express.
  std::vector<std::string> knowledge_files;
  if (std::filesystem::is_directory(dir)) {
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      const std::string name = entry.path().filename().string();
      if (name.rfind("knowledge", 0) == 0 && name.ends_with(".facts"))
        knowledge_files.push_back(name);
    }
  } else {
    diags.error(diag::kIoError, "not a directory", dir.string());
    return Result<BundleDir>::failure(std::move(diags));
  }
  std::sort(knowledge_files.begin(), knowledge_files.end());
  if (knowledge_files.size() > 1) {
    std::string all;
    for (const auto& f : knowledge_files) {
      if (!all.empty()) all += ", ";
      all += f;
    }
    diags.error(diag::kMultipleKnowledgeGraphs,
                "bundle supplies more than one knowledge graph", all);
    return Result<BundleDir>::failure(std::move(diags));
  }

  auto problem_facts = parse_file(dir / "problem.facts", diags);
  auto knowledge_facts = parse_file(dir / "knowledge.facts", diags);

  std::vector<Fact> aux_facts;
  if (std::filesystem::exists(dir / "aux.facts")) {
    auto parsed = parse_file(dir / "aux.facts", diags);
    if (parsed.ok()) aux_facts = std::move(*parsed.value);
  }

  std::optional<NodeId> expected;
  if (std::filesystem::exists(dir / "meta.facts")) {
    auto parsed = parse_file(dir / "meta.facts", diags);
    if (parsed.ok()) {
      std::set<NodeId> values;
      for (const auto& f : *parsed.value)
        if (f.predicate == Predicate::Expected) values.insert(f.args[0]);
      if (values.size() > 1)
        diags.error(diag::kDuplicateExpected,
                    "meta.facts declares more than one expected answer");
      else if (values.size() == 1)
        expected = *values.begin();
    }
  }

  if (!problem_facts.ok() || !knowledge_facts.ok() || diags.has_errors())
    return Result<BundleDir>::failure(std::move(diags));

  auto bundle =
      load_problem_bundle(*problem_facts, *knowledge_facts, aux_facts,
                          dir.filename().string(), options);
  diags.append(bundle.diagnostics);
  if (!bundle.ok()) return Result<BundleDir>::failure(std::move(diags));

  BundleDir out;
  out.bundle = std::move(*bundle.value);
  out.bundle.source_paths = {(dir / "problem.facts").string(),
                             (dir / "knowledge.facts").string()};
  out.expected = std::move(expected);
  return Result<BundleDir>::success(std::move(out), std::move(diags));
}

DiagnosticList validate_fact_collection(const std::vector<Fact>& facts,
                                        const LoadOptions& options) {
  DiagnosticList diags;

  LabeledGraph sentence_edges, knowledge_edges;
  std::set<NodeId> pronouns, choice1, choice2;
  bool has_sentence = false, has_knowledge = false;
  for (const auto& f : facts) {
    switch (f.predicate) {
      case Predicate::HasS:
        has_sentence = true;
        sentence_edges.add_node(f.args[0]);
        sentence_edges.add_node(f.args[2]);
        sentence_edges.add_edge(f.args[0], f.args[1], f.args[2]);
        break;
      case Predicate::HasK:
        has_knowledge = true;
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
      default:
        break;
    }
  }

  auto check_strict = [&](const std::vector<NodeId>& nodes) {
    if (!options.strict_word_index) return;
    for (const auto& n : nodes)
      if (!has_word_index_suffix(n))
        diags.error(diag::kWordIndexConvention,
                    "instance node id lacks a `_<index>` suffix", n);
  };

  if (has_sentence) {
    auto sentence = validate_sentence_graph(sentence_edges);
    diags.append(sentence.diagnostics);
    if (sentence.ok()) {
      check_strict(sentence->instance_nodes());
      if (pronouns.size() > 1)
        diags.error(diag::kDuplicatePronoun, "pronoun declared more than once");
      for (const auto& p : pronouns)
        if (!sentence->is_instance_node(p))
          diags.error(diag::kPronounNotInGraph,
                      "pronoun is not a sentence instance node", p);
      for (const auto* choices : {&choice1, &choice2})
        for (const auto& c : *choices)
          if (!sentence->is_instance_node(c))
            diags.error(diag::kAnswerChoiceNotInGraph,
                        "answer choice is not a sentence instance node", c);
      std::set<NodeId> nouns;
      nouns.insert(pronouns.begin(), pronouns.end());
      nouns.insert(choice1.begin(), choice1.end());
      nouns.insert(choice2.begin(), choice2.end());
      for (const auto& n : nouns) {
        auto cls = sentence->class_of(n);
        if (cls && !is_entity_class(*cls))
          diags.warning(diag::kClassOutsideEntityVocabulary,
                        "class '" + *cls +
                            "' of noun/pronoun token is not one of the 20 "
                            "entity classes",
                        n);
      }
    }
  }
  if (has_knowledge) {
    auto knowledge = validate_knowledge_graph(knowledge_edges);
    diags.append(knowledge.diagnostics);
    if (knowledge.ok()) check_strict(knowledge->instance_nodes());
  }
  return diags;
}

namespace {

std::string verdict_summary(const Verdict& v) {
  if (v.outcome == Outcome::Answer) return "answer " + *v.answer_node;
  return std::string("no_answer (") + std::string(reason_name(v.reason)) +
         ")";
}

// Cross-checks one solved bundle against the rule-level oracle.
std::string oracle_status(const ProblemBundle& bundle,
                          const AnswerReport& report,
                          const CorpusOptions& options) {
  CoreGraph s_core = extract_sentence_core(bundle.problem.sentence);
  CoreGraph k_core = extract_knowledge_core(bundle.knowledge);
  if (s_core.nodes.size() > oracle::kMaxSentenceCoreNodes ||
      k_core.nodes.size() > oracle::kMaxKnowledgeCoreNodes)
    return "skipped: exceeds oracle bounds";

  auto reference = oracle::answer_by_rules(bundle, options.solve.policy.mode);
  if (!reference.ok()) return "skipped: " + reference.diagnostics.to_string();

  const Verdict& ours = report.verdict;
  const Verdict& theirs = *reference;
  if (ours.outcome == theirs.outcome && ours.answer_node == theirs.answer_node &&
      ours.reason == theirs.reason)
    return "agrees";
  return "disagrees: solver " + verdict_summary(ours) + ", rules " +
         verdict_summary(theirs);
}

}  // namespace

CorpusResult run_corpus(const std::filesystem::path& dir,
                        const CorpusOptions& options) {
  CorpusResult result;

  std::vector<std::filesystem::path> problem_dirs;
  if (std::filesystem::is_directory(dir)) {
    for (const auto& entry : std::filesystem::directory_iterator(dir))
      if (entry.is_directory()) problem_dirs.push_back(entry.path());
  }
  std::sort(problem_dirs.begin(), problem_dirs.end());

  for (const auto& problem_dir : problem_dirs) {
    CorpusRow row;
    row.label = problem_dir.filename().string();

    auto loaded = load_bundle_dir(problem_dir, options.load);
    if (!loaded.ok()) {
      row.error = true;
      row.diagnostics = loaded.diagnostics;
      result.rows.push_back(std::move(row));
      continue;
    }

    row.expected = loaded->expected;
    AnswerReport report = solve(loaded->bundle, options.solve);
    if (row.expected) {
      row.correct = report.verdict.outcome == Outcome::Answer &&
                    *report.verdict.answer_node == *row.expected;
    }
    if (options.check_oracle) {
      row.oracle = oracle_status(loaded->bundle, report, options);
      if (row.oracle.rfind("disagrees", 0) == 0)
        ++result.oracle_disagreements;
    }
    row.report = std::move(report);
    result.rows.push_back(std::move(row));
  }

  CorpusTotals& totals = result.totals;
  totals.total = result.rows.size();
  for (const auto& row : result.rows) {
    if (row.error) {
      ++totals.errors;
      continue;
    }
    bool answered = row.report->verdict.outcome == Outcome::Answer;
    if (answered) ++totals.answered;
    if (row.expected && answered) {
      ++totals.scored;
      if (row.correct.value_or(false)) ++totals.correct;
    }
  }
  if (totals.total > 0)
    totals.coverage = static_cast<double>(totals.answered) /
                      static_cast<double>(totals.total);
  if (totals.scored > 0)
    totals.accuracy = static_cast<double>(totals.correct) /
                      static_cast<double>(totals.scored);
  return result;
}

std::string corpus_to_json(const CorpusResult& result, bool stable) {
  nlohmann::ordered_json j;
  auto problems = nlohmann::ordered_json::array();
  for (const auto& row : result.rows) {
    nlohmann::ordered_json r;
    r["label"] = row.label;
    if (row.error) {
      r["error"] = true;
      auto diags = nlohmann::ordered_json::array();
      for (const auto& d : row.diagnostics) {
        diags.push_back({{"code", d.code},
                         {"severity", d.severity == Severity::Error
                                          ? "error"
                                          : "warning"},
                         {"message", d.message},
                         {"subject", d.subject},
                         {"line", d.line},
                         {"column", d.column}});
      }
      r["diagnostics"] = std::move(diags);
    } else {
      const AnswerReport& report = *row.report;
      r["error"] = false;
      r["outcome"] = report.verdict.outcome == Outcome::Answer ? "answer"
                                                               : "no_answer";
      r["reason"] = reason_name(report.verdict.reason);
      if (report.verdict.answer_node)
        r["answer_node"] = *report.verdict.answer_node;
      if (row.expected) r["expected"] = *row.expected;
      if (row.correct) r["correct"] = *row.correct;
      r["mappings"] = report.mapping_count;
      r["exhaustive"] = report.exhaustiveness == Exhaustiveness::Complete
                            ? "complete"
                            : "truncated";
      if (!row.oracle.empty()) r["oracle"] = row.oracle;
      if (!stable) r["timing"] = {{"elapsed_ms", report.elapsed_ms}};
    }
    problems.push_back(std::move(r));
  }
  j["problems"] = std::move(problems);
  j["totals"] = {
      {"total", result.totals.total},
      {"answered", result.totals.answered},
      {"correct", result.totals.correct},
      {"errors", result.totals.errors},
      {"accuracy", result.totals.accuracy
                       ? nlohmann::ordered_json(*result.totals.accuracy)
                       : nlohmann::ordered_json(nullptr)},
      {"coverage", result.totals.coverage
                       ? nlohmann::ordered_json(*result.totals.coverage)
                       : nlohmann::ordered_json(nullptr)},
  };
  if (result.oracle_disagreements > 0)
    j["oracle_disagreements"] = result.oracle_disagreements;
  return j.dump(2) + "\n";
}

std::string corpus_to_table(const CorpusResult& result, bool stable) {
  std::ostringstream os;
  std::size_t label_width = 7, verdict_width = 9, expected_width = 8;
  for (const auto& row : result.rows) {
    label_width = std::max(label_width, row.label.size());
    if (row.expected)
      expected_width = std::max(expected_width, row.expected->size());
    if (row.report && row.report->verdict.answer_node)
      verdict_width =
          std::max(verdict_width, row.report->verdict.answer_node->size());
  }

  os << std::left << std::setw(static_cast<int>(label_width) + 2) << "problem"
     << std::setw(static_cast<int>(verdict_width) + 2) << "verdict"
     << std::setw(static_cast<int>(expected_width) + 2) << "expected"
     << std::setw(9) << "correct";
  if (!stable) os << std::right << std::setw(10) << "ms";
  os << "\n";

  for (const auto& row : result.rows) {
    os << std::left << std::setw(static_cast<int>(label_width) + 2)
       << row.label;
    if (row.error) {
      os << std::setw(static_cast<int>(verdict_width) + 2) << "error"
         << std::setw(static_cast<int>(expected_width) + 2) << "-"
         << std::setw(9) << "-";
      if (!stable) os << std::right << std::setw(10) << "-";
      os << "\n";
      continue;
    }
    const AnswerReport& report = *row.report;
    std::string verdict = report.verdict.outcome == Outcome::Answer
                              ? *report.verdict.answer_node
                              : "no_answer";
    os << std::setw(static_cast<int>(verdict_width) + 2) << verdict
       << std::setw(static_cast<int>(expected_width) + 2)
       << (row.expected ? *row.expected : "-") << std::setw(9)
       << (row.correct ? (*row.correct ? "yes" : "NO") : "-");
    if (!stable) {
      os << std::right << std::setw(10) << std::fixed << std::setprecision(2)
         << report.elapsed_ms;
      os.unsetf(std::ios::fixed);
      os << std::setprecision(6);
    }
    os << "\n";
    if (!row.oracle.empty() && row.oracle != "agrees")
      os << "  oracle: " << row.oracle << "\n";
  }

  os << "totals: " << result.totals.answered << "/" << result.totals.total
     << " answered";
  if (result.totals.coverage)
    os << ", coverage " << *result.totals.coverage;
  if (result.totals.accuracy)
    os << ", accuracy " << *result.totals.accuracy << " (" << result.totals.correct
       << "/" << result.totals.scored << ")";
  if (result.totals.errors > 0) os << ", errors " << result.totals.errors;
  if (result.oracle_disagreements > 0)
    os << ", oracle disagreements " << result.oracle_disagreements;
  os << "\n";
  return os.str();
}

}  // namespace winograph
