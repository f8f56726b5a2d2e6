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

// End-to-end acceptance suite. Runs one check per shipped guarantee and
// prints a PASS/FAIL line for each; exits nonzero if any fail.
//
//   usage: winograph_acceptance <path-to-winograph-cli> <path-to-corpus>

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "winograph/corpus.hpp"
#include "winograph/matcher.hpp"
#include "winograph/oracle.hpp"
#include "winograph/resolver.hpp"

using namespace winograph;

namespace {

struct Suite {
  int failures = 0;

  void report(const std::string& name, bool ok, const std::string& detail) {
    if (ok) {
      std::cout << "PASS: " << name << (detail.empty() ? "" : " — " + detail)
                << "\n";
    } else {
      std::cout << "FAIL: " << name << (detail.empty() ? "" : " — " + detail)
                << "\n";
      ++failures;
    }
  }
};

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

oracle::RandomInstanceSpec spec_for_seed(std::uint64_t seed) {
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

SolveConfig exhaustive_config(PolicyMode mode = PolicyMode::ClassOnly) {
  SolveConfig config;
  config.policy.mode = mode;
  config.budget.max_mappings = 500000;
  config.budget.time_limit = std::chrono::milliseconds(60000);
  return config;
}

bool verdicts_agree(const Verdict& a, const Verdict& b) {
  return a.outcome == b.outcome && a.answer_node == b.answer_node &&
         a.reason == b.reason;
}

std::string verdict_text(const Verdict& v) {
  if (v.outcome == Outcome::Answer) return "answer " + *v.answer_node;
  return "no_answer(" + std::string(reason_name(v.reason)) + ")";
}

ProblemBundle load_corpus_bundle(const std::filesystem::path& corpus,
                                 const std::string& name) {
  auto loaded = load_bundle_dir(corpus / name);
  if (!loaded.ok())
    throw std::runtime_error("cannot load corpus bundle " + name + ":\n" +
                             loaded.diagnostics.to_string());
  return loaded->bundle;
}

// Injectively renames every knowledge instance node (class nodes keep
// their shared vocabulary); aux pairs follow along.
ProblemBundle rename_knowledge_nodes(const ProblemBundle& bundle) {
  std::map<NodeId, NodeId> renamed;
  for (const auto& n : bundle.knowledge.instance_nodes())
    renamed[n] = "rn_" + n;
  auto apply = [&renamed](const NodeId& n) {
    auto it = renamed.find(n);
    return it == renamed.end() ? n : it->second;
  };
  LabeledGraph g;
  for (const auto& n : bundle.knowledge.graph().nodes()) g.add_node(apply(n));
  for (const auto& e : bundle.knowledge.graph().edges())
    g.add_edge(apply(e.source), e.label, apply(e.target));
  auto k = validate_knowledge_graph(g);
  if (!k.ok())
    throw std::runtime_error("renaming broke the knowledge graph:\n" +
                             k.diagnostics.to_string());
  ProblemBundle out = bundle;
  out.knowledge = *k;
  for (auto& [s, kn] : out.synonyms) kn = apply(kn);
  for (auto& [s, kn] : out.similar) kn = apply(kn);
  return out;
}

std::pair<int, std::string> run_command(const std::string& command) {
  std::array<char, 4096> buffer;
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    output.append(buffer.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

void check_golden_lift(Suite& suite, const std::filesystem::path& corpus) {
  auto start = std::chrono::steady_clock::now();
  auto bundle = load_corpus_bundle(corpus, "lift-weak");

  CoreGraph s_core = extract_sentence_core(bundle.problem.sentence);
  CoreGraph k_core = extract_knowledge_core(bundle.knowledge);
  const auto& s = bundle.problem.sentence;
  const auto& k = bundle.knowledge;
  auto compat = [&](const NodeId& x, const NodeId& y) {
    return node_compatible({}, s, k, x, y);
  };
  auto enumeration = enumerate_isomorphisms(s_core, k_core, compat, {});

  std::vector<std::pair<NodeId, NodeId>> expected = {
      {"could_3", "can_2"},  {"he_9", "person2_7"}, {"lift_5", "lifts_4"},
      {"man_2", "person1_1"}, {"not_4", "not_3"},    {"son_7", "someone_5"},
      {"was_10", "is_8"},    {"weak_12", "weak_9"}};

  AnswerReport report = solve(bundle, exhaustive_config());
  double elapsed = ms_since(start);

  bool ok = enumeration.ok() && enumeration->mappings.size() == 1 &&
            enumeration->mappings[0].pairs == expected &&
            report.verdict.outcome == Outcome::Answer &&
            *report.verdict.answer_node == "man_2" && elapsed < 1000.0;
  std::ostringstream detail;
  detail << "mappings="
         << (enumeration.ok() ? enumeration->mappings.size() : 0)
         << ", verdict=" << verdict_text(report.verdict) << ", "
         << elapsed << " ms";
  suite.report("golden lift/weak: unique expected mapping, answer man_2, <1s",
               ok, detail.str());
}

void check_synonym_extension(Suite& suite,
                             const std::filesystem::path& corpus) {
  auto bundle = load_corpus_bundle(corpus, "lift-frail-synonym");
  AnswerReport strict = solve(bundle, exhaustive_config(PolicyMode::ClassOnly));
  AnswerReport extended =
      solve(bundle, exhaustive_config(PolicyMode::ClassOrSynonym));
  bool ok = strict.verdict.outcome == Outcome::NoAnswer &&
            extended.verdict.outcome == Outcome::Answer &&
            *extended.verdict.answer_node == "man_2";
  suite.report("synonym extension: NoAnswer under class_only, man_2 under "
               "class_or_synonym",
               ok,
               "class_only=" + verdict_text(strict.verdict) +
                   ", class_or_synonym=" + verdict_text(extended.verdict));
}

void check_search_completeness(Suite& suite) {
  auto start = std::chrono::steady_clock::now();
  std::size_t instances = 0, agreements = 0;
  std::string first_failure;
  for (std::uint64_t seed = 1000; seed < 1500; ++seed) {
    auto bundle = oracle::generate_instance(spec_for_seed(seed));
    const auto& s = bundle.problem.sentence;
    const auto& k = bundle.knowledge;
    CoreGraph s_core = extract_sentence_core(s);
    CoreGraph k_core = extract_knowledge_core(k);
    auto compat = [&](const NodeId& x, const NodeId& y) {
      return node_compatible({}, s, k, x, y);
    };
    ++instances;
    auto reference = oracle::brute_force_enumerate(s_core, k_core, compat);
    SearchBudget budget;
    budget.max_mappings = 500000;
    budget.time_limit = std::chrono::milliseconds(60000);
    auto searched = enumerate_isomorphisms(s_core, k_core, compat, budget);
    bool same = reference.ok() && searched.ok() &&
                searched->exhaustiveness == Exhaustiveness::Complete &&
                searched->mappings == *reference.value;
    if (same)
      ++agreements;
    else if (first_failure.empty())
      first_failure = "seed " + std::to_string(seed);
  }
  double elapsed = ms_since(start);
  bool ok = instances == 500 && agreements == instances && elapsed < 60000.0;
  std::ostringstream detail;
  detail << agreements << "/" << instances << " instances, " << elapsed
         << " ms";
  if (!first_failure.empty()) detail << ", first failure at " << first_failure;
  suite.report(
      "search completeness: enumeration equals brute force on 500 seeds, <60s",
      ok, detail.str());
}

void check_definition_agreement(Suite& suite) {
  std::size_t agreements = 0, instances = 0;
  std::string first_failure;
  for (std::uint64_t seed = 2000; seed < 2500; ++seed) {
    auto bundle = oracle::generate_instance(spec_for_seed(seed));
    ++instances;
    AnswerReport report = solve(bundle, exhaustive_config());
    auto reference =
        oracle::answer_by_definition(bundle.problem, bundle.knowledge);
    if (reference.ok() && verdicts_agree(report.verdict, *reference.value))
      ++agreements;
    else if (first_failure.empty())
      first_failure = "seed " + std::to_string(seed) + " (solver " +
                      verdict_text(report.verdict) + ", oracle " +
                      (reference.ok() ? verdict_text(*reference.value)
                                      : "error") +
                      ")";
  }
  bool ok = instances == 500 && agreements == instances;
  std::string detail =
      std::to_string(agreements) + "/" + std::to_string(instances);
  if (!first_failure.empty()) detail += ", first failure: " + first_failure;
  suite.report(
      "definition agreement: solver matches direct evaluation on 500 seeds",
      ok, detail);
}

void check_rules_agreement(Suite& suite, const std::filesystem::path& corpus) {
  std::size_t agreements = 0, instances = 0;
  std::string first_failure;
  for (std::uint64_t seed = 3000; seed < 3200; ++seed) {
    auto bundle = oracle::generate_instance(spec_for_seed(seed));
    ++instances;
    AnswerReport report = solve(bundle, exhaustive_config());
    auto reference = oracle::answer_by_rules(bundle, PolicyMode::ClassOnly);
    if (reference.ok() && verdicts_agree(report.verdict, *reference.value))
      ++agreements;
    else if (first_failure.empty())
      first_failure = "seed " + std::to_string(seed);
  }

  std::size_t corpus_problems = 0, corpus_agreements = 0;
  for (const auto& entry : std::filesystem::directory_iterator(corpus)) {
    if (!entry.is_directory()) continue;
    auto bundle = load_corpus_bundle(corpus, entry.path().filename().string());
    ++corpus_problems;
    auto config = exhaustive_config(PolicyMode::ClassOrSynonymOrSimilar);
    AnswerReport report = solve(bundle, config);
    auto reference =
        oracle::answer_by_rules(bundle, PolicyMode::ClassOrSynonymOrSimilar);
    if (reference.ok() && verdicts_agree(report.verdict, *reference.value))
      ++corpus_agreements;
    else if (first_failure.empty())
      first_failure = entry.path().filename().string();
  }

  bool ok = instances == 200 && agreements == instances &&
            corpus_problems >= 12 && corpus_agreements == corpus_problems;
  std::ostringstream detail;
  detail << agreements << "/" << instances << " seeds, " << corpus_agreements
         << "/" << corpus_problems << " corpus problems";
  if (!first_failure.empty()) detail << ", first failure: " << first_failure;
  suite.report(
      "rules agreement: solver matches literal rule evaluation on 200 seeds "
      "plus the corpus",
      ok, detail.str());
}

void check_corpus_score(Suite& suite, const std::filesystem::path& corpus) {
  CorpusOptions options;
  options.solve.policy.mode = PolicyMode::ClassOrSynonymOrSimilar;
  CorpusResult result = run_corpus(corpus, options);
  bool ok = result.rows.size() >= 12 && result.totals.errors == 0 &&
            result.totals.coverage && *result.totals.coverage == 1.0 &&
            result.totals.accuracy && *result.totals.accuracy == 1.0;
  std::ostringstream detail;
  detail << result.rows.size() << " problems, coverage "
         << (result.totals.coverage ? *result.totals.coverage : 0.0)
         << ", accuracy "
         << (result.totals.accuracy ? *result.totals.accuracy : 0.0);
  suite.report("sample corpus: coverage 1.0 and accuracy 1.0 over >=12 "
               "problems",
               ok, detail.str());
}

void check_metamorphic(Suite& suite) {
  std::size_t rename_ok = 0, swap_ok = 0, grow_ok = 0;
  const std::size_t kCount = 200;
  std::string first_failure;

  for (std::uint64_t seed = 4000; seed < 4000 + kCount; ++seed) {
    auto bundle = oracle::generate_instance(spec_for_seed(seed));
    AnswerReport base = solve(bundle, exhaustive_config());

    AnswerReport renamed =
        solve(rename_knowledge_nodes(bundle), exhaustive_config());
    bool rename_same =
        base.verdict.outcome == renamed.verdict.outcome &&
        base.verdict.answer_node == renamed.verdict.answer_node;
    if (rename_same)
      ++rename_ok;
    else if (first_failure.empty())
      first_failure = "rename seed " + std::to_string(seed);

    ProblemBundle flipped = bundle;
    std::swap(flipped.problem.answer_choice_1,
              flipped.problem.answer_choice_2);
    AnswerReport swapped = solve(flipped, exhaustive_config());
    bool swap_same = base.verdict.outcome == swapped.verdict.outcome &&
                     base.verdict.answer_node == swapped.verdict.answer_node;
    if (swap_same)
      ++swap_ok;
    else if (first_failure.empty())
      first_failure = "swap seed " + std::to_string(seed);

    // Growing the synonym table may create or destroy the answer, but can
    // never move it to the other node.
    auto base_syn = solve(bundle, exhaustive_config(PolicyMode::ClassOrSynonym));
    SolveConfig grown = exhaustive_config(PolicyMode::ClassOrSynonym);
    const auto& s_nodes = bundle.problem.sentence.instance_nodes();
    const auto& k_nodes = bundle.knowledge.instance_nodes();
    for (std::size_t i = 0; i < 3; ++i) {
      std::uint64_t h = seed * 1099511628211ULL + i * 2654435761ULL;
      grown.policy.synonyms.emplace_back(s_nodes[h % s_nodes.size()],
                                         k_nodes[(h >> 16) % k_nodes.size()]);
    }
    auto enlarged = solve(bundle, grown);
    bool flip = base_syn.verdict.outcome == Outcome::Answer &&
                enlarged.verdict.outcome == Outcome::Answer &&
                *base_syn.verdict.answer_node !=
                    *enlarged.verdict.answer_node;
    if (!flip)
      ++grow_ok;
    else if (first_failure.empty())
      first_failure = "synonym-growth seed " + std::to_string(seed);
  }

  bool ok = rename_ok == kCount && swap_ok == kCount && grow_ok == kCount;
  std::ostringstream detail;
  detail << "rename " << rename_ok << "/" << kCount << ", swap " << swap_ok
         << "/" << kCount << ", synonym-growth " << grow_ok << "/" << kCount;
  if (!first_failure.empty()) detail << ", first failure: " << first_failure;
  suite.report("metamorphic: renaming, choice swap, synonym growth", ok,
               detail.str());
}

void check_cli_determinism(Suite& suite, const std::string& cli,
                           const std::filesystem::path& corpus) {
  std::string command = "'" + cli + "' corpus --stable --format json '" +
                        corpus.string() + "' 2>/dev/null";
  auto first = run_command(command);
  auto second = run_command(command);
  bool ok = first.first == 0 && second.first == 0 && !first.second.empty() &&
            first.second == second.second;
  std::ostringstream detail;
  detail << "exit codes " << first.first << "/" << second.first << ", "
         << first.second.size() << " bytes"
         << (first.second == second.second ? ", identical" : ", DIFFER");
  suite.report("determinism: two stable corpus runs are byte-identical", ok,
               detail.str());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: winograph_acceptance <cli-path> <corpus-dir>\n";
    return 2;
  }
  std::string cli = argv[1];
  std::filesystem::path corpus = argv[2];

  Suite suite;
  try {
    check_golden_lift(suite, corpus);
    check_synonym_extension(suite, corpus);
    check_search_completeness(suite);
    check_definition_agreement(suite);
    check_rules_agreement(suite, corpus);
    check_corpus_score(suite, corpus);
    check_metamorphic(suite);
    check_cli_determinism(suite, cli, corpus);
  } catch (const std::exception& e) {
    std::cout << "FAIL: acceptance suite aborted — " << e.what() << "\n";
    return 1;
  }

  std::cout << (suite.failures == 0 ? "all acceptance criteria passed"
                                    : "some acceptance criteria FAILED")
            << "\n";
  return suite.failures == 0 ? 0 : 1;
}
