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

#include <algorithm>
#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "winograph/corpus.hpp"
#include "winograph/facts.hpp"
#include "winograph/matcher.hpp"
#include "winograph/oracle.hpp"
#include "winograph/resolver.hpp"

namespace {

using namespace winograph;

struct CommonFlags {
  std::string policy = "class_or_synonym_or_similar";
  std::string format = "text";
  bool stable = false;
  std::size_t max_mappings = SearchBudget{}.max_mappings;
  double time_limit_secs = 10.0;
  bool strict = false;
};

void add_policy_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--policy", flags.policy, "Node compatibility policy")
      ->check(CLI::IsMember({"class_only", "class_or_synonym",
                             "class_or_synonym_or_similar"}));
  cmd->add_option("--max-mappings", flags.max_mappings,
                  "Stop after this many mappings (search is then truncated)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--time-limit", flags.time_limit_secs,
                  "Search time limit in seconds")
      ->check(CLI::PositiveNumber);
}

SolveConfig make_config(const CommonFlags& flags) {
  SolveConfig config;
  config.policy.mode = *policy_mode_from_name(flags.policy);
  config.budget.max_mappings = flags.max_mappings;
  config.budget.time_limit = std::chrono::milliseconds(
      static_cast<long long>(flags.time_limit_secs * 1000.0));
  return config;
}

void print_diagnostics(const DiagnosticList& diags) {
  std::cerr << diags.to_string();
}

int cmd_solve(const std::string& problem_path,
              const std::string& knowledge_path, const std::string& aux_path,
              const CommonFlags& flags) {
  DiagnosticList diags;

  auto problem_text = read_text_file(problem_path);
  auto knowledge_text = read_text_file(knowledge_path);
  diags.append(problem_text.diagnostics);
  diags.append(knowledge_text.diagnostics);
  if (!problem_text.ok() || !knowledge_text.ok()) {
    print_diagnostics(diags);
    return 1;
  }

  auto problem_facts = parse_fact_file(*problem_text);
  auto knowledge_facts = parse_fact_file(*knowledge_text);
  diags.append(problem_facts.diagnostics);
  diags.append(knowledge_facts.diagnostics);

  std::vector<Fact> aux_facts;
  if (!aux_path.empty()) {
    auto aux_text = read_text_file(aux_path);
    diags.append(aux_text.diagnostics);
    if (aux_text.ok()) {
      auto parsed = parse_fact_file(*aux_text);
      diags.append(parsed.diagnostics);
      if (parsed.ok()) aux_facts = std::move(*parsed.value);
    }
  }
  if (diags.has_errors()) {
    print_diagnostics(diags);
    return 1;
  }

  std::string label =
      std::filesystem::path(problem_path).parent_path().filename().string();
  if (label.empty())
    label = std::filesystem::path(problem_path).stem().string();

  LoadOptions load_options;
  load_options.strict_word_index = flags.strict;
  auto bundle = load_problem_bundle(*problem_facts, *knowledge_facts,
                                    aux_facts, label, load_options);
  if (!bundle.ok()) {
    print_diagnostics(bundle.diagnostics);
    return 1;
  }

  AnswerReport report = solve(*bundle, make_config(flags));
  if (flags.format == "json")
    std::cout << report_to_json(report, flags.stable);
  else
    std::cout << report_to_text(report, flags.stable);
  return report.verdict.outcome == Outcome::Answer ? 0 : 2;
}

int cmd_corpus(const std::string& dir, bool check_oracle,
               const CommonFlags& flags) {
  if (!std::filesystem::is_directory(dir)) {
    std::cerr << "error [IoError] not a directory: " << dir << "\n";
    return 1;
  }
  CorpusOptions options;
  options.solve = make_config(flags);
  options.load.strict_word_index = flags.strict;
  options.check_oracle = check_oracle;

  CorpusResult result = run_corpus(dir, options);
  if (flags.format == "json")
    std::cout << corpus_to_json(result, flags.stable);
  else
    std::cout << corpus_to_table(result, flags.stable);
  return result.oracle_disagreements > 0 ? 1 : 0;
}

int cmd_bench(std::size_t min_nodes, std::size_t max_nodes, double density,
              std::size_t seeds, std::size_t repetitions,
              std::uint64_t base_seed) {
  nlohmann::ordered_json out;
  auto sizes = nlohmann::ordered_json::array();

  min_nodes = std::max<std::size_t>(min_nodes, 3);
  max_nodes = std::min<std::size_t>(max_nodes, 10);

  for (std::size_t n = min_nodes; n <= max_nodes && repetitions > 0; ++n) {
    oracle::RandomInstanceSpec spec;
    spec.sentence_nodes = n;
    spec.knowledge_nodes = std::min<std::size_t>(6, n - 1);
    spec.edge_density = density;

    std::vector<double> times;
    for (std::size_t s = 0; s < seeds; ++s) {
      spec.seed = base_seed + 7919 * n + s;
      ProblemBundle bundle = oracle::generate_instance(spec);
      CoreGraph s_core = extract_sentence_core(bundle.problem.sentence);
      CoreGraph k_core = extract_knowledge_core(bundle.knowledge);
      CompatibilityPolicy policy;
      const SentenceGraph& sentence = bundle.problem.sentence;
      const KnowledgeGraph& knowledge = bundle.knowledge;
      auto compatible = [&](const NodeId& x, const NodeId& y) {
        return node_compatible(policy, sentence, knowledge, x, y);
      };
      for (std::size_t rep = 0; rep < repetitions; ++rep) {
        auto start = std::chrono::steady_clock::now();
        auto enumeration =
            enumerate_isomorphisms(s_core, k_core, compatible, {});
        (void)enumeration;
        times.push_back(std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count());
      }
    }
    if (times.empty()) continue;
    std::sort(times.begin(), times.end());
    double median = times.size() % 2 == 1
                        ? times[times.size() / 2]
                        : 0.5 * (times[times.size() / 2 - 1] +
                                 times[times.size() / 2]);
    sizes.push_back({{"sentence_nodes", n},
                     {"knowledge_nodes", spec.knowledge_nodes},
                     {"samples", times.size()},
                     {"min_ms", times.front()},
                     {"median_ms", median},
                     {"max_ms", times.back()}});
  }
  out["sizes"] = std::move(sizes);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_validate(const std::string& path, bool allow_warnings,
                 const CommonFlags& flags) {
  auto text = read_text_file(path);
  if (!text.ok()) {
    print_diagnostics(text.diagnostics);
    return 1;
  }
  auto facts = parse_fact_file(*text);
  DiagnosticList diags = facts.diagnostics;
  if (facts.ok()) {
    LoadOptions options;
    options.strict_word_index = flags.strict;
    diags.append(validate_fact_collection(*facts, options));
  }
  if (diags.empty()) {
    std::cout << "OK\n";
    return 0;
  }
  std::cout << diags.to_string();
  if (diags.has_errors()) return 1;
  return allow_warnings ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "winograph — Winograd-schema pronoun resolution by class-constrained "
      "graph-subgraph isomorphism over sentence and knowledge graphs"};
  app.require_subcommand(1);

  CommonFlags flags;

  // solve
  std::string problem_path, knowledge_path, aux_path;
  auto* solve_cmd = app.add_subcommand(
      "solve", "Solve one problem against one knowledge graph");
  solve_cmd->add_option("problem", problem_path, "problem.facts path")
      ->required();
  solve_cmd->add_option("knowledge", knowledge_path, "knowledge.facts path")
      ->required();
  solve_cmd->add_option("--aux", aux_path,
                        "aux.facts path with synonyms/similar pairs");
  solve_cmd->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  solve_cmd->add_flag("--stable", flags.stable, "Omit timing fields");
  solve_cmd->add_flag("--strict", flags.strict,
                      "Enforce the `_<index>` id convention");
  add_policy_flags(solve_cmd, flags);

  // corpus
  std::string corpus_dir;
  bool check_oracle = false;
  auto* corpus_cmd = app.add_subcommand(
      "corpus", "Solve and score every bundle in a corpus directory");
  corpus_cmd->add_option("dir", corpus_dir, "corpus directory")->required();
  corpus_cmd->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  corpus_cmd->add_flag("--stable", flags.stable, "Omit timing fields");
  corpus_cmd->add_flag("--strict", flags.strict,
                       "Enforce the `_<index>` id convention");
  corpus_cmd->add_flag("--check-oracle", check_oracle,
                       "Cross-check every in-bounds problem against the "
                       "rule-level oracle; exit nonzero on disagreement");
  add_policy_flags(corpus_cmd, flags);

  // bench
  std::size_t min_nodes = 4, max_nodes = 10, seeds = 20, repetitions = 3;
  double density = 0.4;
  std::uint64_t base_seed = 0;
  auto* bench_cmd = app.add_subcommand(
      "bench", "Time the isomorphism search on seeded random instances");
  bench_cmd->add_option("--min-nodes", min_nodes, "Smallest sentence size");
  bench_cmd->add_option("--max-nodes", max_nodes, "Largest sentence size");
  bench_cmd->add_option("--density", density, "Edge density in [0,1]");
  bench_cmd->add_option("--seeds", seeds, "Instances per size");
  bench_cmd->add_option("--reps", repetitions, "Repetitions per instance");
  bench_cmd->add_option("--seed", base_seed, "Base seed");

  // validate
  std::string validate_path;
  bool allow_warnings = true;
  auto* validate_cmd =
      app.add_subcommand("validate", "Parse and validate one fact file");
  validate_cmd->add_option("path", validate_path, "fact file path")
      ->required();
  validate_cmd->add_flag("--allow-warnings,!--no-allow-warnings",
                         allow_warnings,
                         "Exit 0 even when warnings are present (default)");
  validate_cmd->add_flag("--strict", flags.strict,
                         "Enforce the `_<index>` id convention");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (solve_cmd->parsed())
    return cmd_solve(problem_path, knowledge_path, aux_path, flags);
  if (corpus_cmd->parsed()) return cmd_corpus(corpus_dir, check_oracle, flags);
  if (bench_cmd->parsed())
    return cmd_bench(min_nodes, max_nodes, density, seeds, repetitions,
                     base_seed);
  if (validate_cmd->parsed())
    return cmd_validate(validate_path, allow_warnings, flags);
  return 1;
}
