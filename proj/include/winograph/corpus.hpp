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

#ifndef WINOGRAPH_CORPUS_HPP_
#define WINOGRAPH_CORPUS_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "winograph/facts.hpp"
#include "winograph/resolver.hpp"

namespace winograph {

Result<std::string> read_text_file(const std::filesystem::path& path);

// A problem directory: problem.facts + knowledge.facts, optional
// aux.facts (synonym/similar pairs) and meta.facts (expected answer).
struct BundleDir {
  ProblemBundle bundle;
  std::optional<NodeId> expected;
};

Result<BundleDir> load_bundle_dir(const std::filesystem::path& dir,
                                  const LoadOptions& options = {});

// Standalone validation of one fact file: graph checks for whatever fact
// kinds are present, without requiring a complete bundle.
DiagnosticList validate_fact_collection(const std::vector<Fact>& facts,
                                        const LoadOptions& options = {});

struct CorpusOptions {
  SolveConfig solve;
  LoadOptions load;
  bool check_oracle = false;
};

struct CorpusRow {
  std::string label;
  bool error = false;
  DiagnosticList diagnostics;          // populated on error
  std::optional<AnswerReport> report;  // populated on success
  std::optional<NodeId> expected;
  std::optional<bool> correct;  // only when expected is present
  std::string oracle;  // "", "agrees", "skipped: ...", "disagrees: ..."
};

struct CorpusTotals {
  std::size_t total = 0;
  std::size_t answered = 0;
  std::size_t correct = 0;
  std::size_t errors = 0;
  std::size_t scored = 0;  // answered problems with an expected answer
  std::optional<double> accuracy;  // correct / scored
  std::optional<double> coverage;  // answered / total
};

struct CorpusResult {
  std::vector<CorpusRow> rows;  // sorted by label
  CorpusTotals totals;
  std::size_t oracle_disagreements = 0;
};

// Solves every bundle under dir (one subdirectory per problem). Broken
// bundles become error rows; they never abort the run.
CorpusResult run_corpus(const std::filesystem::path& dir,
                        const CorpusOptions& options);

std::string corpus_to_json(const CorpusResult& result, bool stable = false);
std::string corpus_to_table(const CorpusResult& result, bool stable = false);

}  // namespace winograph

#endif  // WINOGRAPH_CORPUS_HPP_
