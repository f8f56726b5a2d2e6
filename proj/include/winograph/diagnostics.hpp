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

#ifndef WINOGRAPH_DIAGNOSTICS_HPP_
#define WINOGRAPH_DIAGNOSTICS_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace winograph {

enum class Severity { Warning, Error };

// Stable diagnostic codes. Tests and callers match on these, not on the
// human-readable message text.
namespace diag {
// graph validation
inline constexpr char kMultipleClassMembership[] = "MultipleClassMembership";
inline constexpr char kMissingClassMembership[] = "MissingClassMembership";
inline constexpr char kInstanceClassOverlap[] = "InstanceClassOverlap";
inline constexpr char kEdgeOnClassNode[] = "EdgeOnClassNode";
inline constexpr char kCycleDetected[] = "CycleDetected";
inline constexpr char kReservedLabelMisuse[] = "ReservedLabelMisuse";
inline constexpr char kDanglingEdge[] = "DanglingEdge";
inline constexpr char kOrphanNode[] = "OrphanNode";
inline constexpr char kBadIdentifier[] = "BadIdentifier";
inline constexpr char kUnknownNode[] = "UnknownNode";
inline constexpr char kNotAnInstanceNode[] = "NotAnInstanceNode";
// knowledge-graph validation
inline constexpr char kAsymmetricSameAs[] = "AsymmetricSameAs";
inline constexpr char kSameAsOnClassNode[] = "SameAsOnClassNode";
inline constexpr char kMissingSameAs[] = "MissingSameAs";
inline constexpr char kSelfSameAs[] = "SelfSameAs";
// fact files
inline constexpr char kSyntaxError[] = "SyntaxError";
inline constexpr char kUnknownPredicate[] = "UnknownPredicate";
inline constexpr char kArityMismatch[] = "ArityMismatch";
inline constexpr char kWordIndexConvention[] = "WordIndexConvention";
// bundle assembly
inline constexpr char kMissingPronoun[] = "MissingPronoun";
inline constexpr char kDuplicatePronoun[] = "DuplicatePronoun";
inline constexpr char kMissingAnswerChoice[] = "MissingAnswerChoice";
inline constexpr char kDuplicateAnswerChoice[] = "DuplicateAnswerChoice";
inline constexpr char kPronounNotInGraph[] = "PronounNotInGraph";
inline constexpr char kAnswerChoiceNotInGraph[] = "AnswerChoiceNotInGraph";
inline constexpr char kAnswerChoicesNotDistinct[] = "AnswerChoicesNotDistinct";
inline constexpr char kAuxPairEndpointUnknown[] = "AuxPairEndpointUnknown";
inline constexpr char kMultipleKnowledgeGraphs[] = "MultipleKnowledgeGraphs";
inline constexpr char kDuplicateExpected[] = "DuplicateExpected";
// warnings
inline constexpr char kClassOutsideEntityVocabulary[] =
    "ClassOutsideEntityVocabulary";
inline constexpr char kUnsharedKnowledgeClass[] = "UnsharedKnowledgeClass";
// search / oracle
inline constexpr char kNoKnowledgeCore[] = "NoKnowledgeCore";
inline constexpr char kInstanceTooLarge[] = "InstanceTooLarge";
// harness
inline constexpr char kIoError[] = "IoError";
}  // namespace diag

struct Diagnostic {
  std::string code;
  Severity severity = Severity::Error;
  std::string message;
  std::string subject;  // offending node/edge/predicate text, when known
  int line = 0;         // 1-based; 0 when the diagnostic has no location
  int column = 0;
};

// Ordered collection of diagnostics. Warnings never make a result invalid.
class DiagnosticList {
 public:
  void add(Diagnostic d) { items_.push_back(std::move(d)); }
  void error(std::string code, std::string message, std::string subject = "",
             int line = 0, int column = 0) {
    items_.push_back({std::move(code), Severity::Error, std::move(message),
                      std::move(subject), line, column});
  }
  void warning(std::string code, std::string message, std::string subject = "",
               int line = 0, int column = 0) {
    items_.push_back({std::move(code), Severity::Warning, std::move(message),
                      std::move(subject), line, column});
  }
  void append(const DiagnosticList& other) {
    items_.insert(items_.end(), other.items_.begin(), other.items_.end());
  }

  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  const Diagnostic& operator[](std::size_t i) const { return items_[i]; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  bool has_errors() const {
    for (const auto& d : items_)
      if (d.severity == Severity::Error) return true;
    return false;
  }
  std::size_t error_count() const {
    std::size_t n = 0;
    for (const auto& d : items_)
      if (d.severity == Severity::Error) ++n;
    return n;
  }
  bool contains(std::string_view code) const {
    for (const auto& d : items_)
      if (d.code == code) return true;
    return false;
  }

  std::string to_string() const;

 private:
  std::vector<Diagnostic> items_;
};

// Value-or-diagnostics result. A present value may still carry warnings.
template <typename T>
struct Result {
  std::optional<T> value;
  DiagnosticList diagnostics;

  bool ok() const { return value.has_value(); }
  explicit operator bool() const { return ok(); }
  T& operator*() { return *value; }
  const T& operator*() const { return *value; }
  T* operator->() { return &*value; }
  const T* operator->() const { return &*value; }

  static Result success(T v) {
    Result r;
    r.value = std::move(v);
    return r;
  }
  static Result success(T v, DiagnosticList diags) {
    Result r;
    r.value = std::move(v);
    r.diagnostics = std::move(diags);
    return r;
  }
  static Result failure(DiagnosticList diags) {
    Result r;
    r.diagnostics = std::move(diags);
    return r;
  }
  static Result failure(Diagnostic d) {
    Result r;
    r.diagnostics.add(std::move(d));
    return r;
  }
};

}  // namespace winograph

#endif  // WINOGRAPH_DIAGNOSTICS_HPP_
