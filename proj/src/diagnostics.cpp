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

#include "winograph/diagnostics.hpp"

#include <sstream>

namespace winograph {
std::string DiagnosticList::to_string() const {
  std::ostringstream os;
  for (const auto& d : items_) {
    os << (d.severity == Severity::Error ? "error" : "warning");
    if (d.line > 0) {
      os << " at " << d.line << ":" << d.column;
    }
    os << " [" << d.code << "] " << d.message;
    if (!d.subject.empty()) os << ": " << d.subject;
    os << "\n";
  }
  return os.str();
}

}  // namespace winograph
