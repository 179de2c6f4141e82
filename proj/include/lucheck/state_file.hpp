// Copyright 2026 The lucheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lucheck/state.hpp"

namespace lucheck {

// State files are JSON objects:
//   {"n": 2, "kind": "pure", "amplitudes": [[re, im], ...], "label": "..."}
//   {"n": 1, "kind": "mixed", "matrix": [[[re, im], [re, im]], [[re, im], [re, im]]]}
// Complex numbers are always two-element [re, im] arrays; matrices are
// lists of rows.
struct StateFile {
  enum class Kind { kPure, kMixed };

  int n = 0;
  Kind kind = Kind::kMixed;
  std::vector<Complex> amplitudes;  // kPure
  ComplexMatrix matrix;             // kMixed
  std::optional<std::string> label;
};

class StateFileError : public std::runtime_error {
 public:
  enum class Code { kSyntax, kDimension, kValidation };

  StateFileError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

const char* to_string(StateFileError::Code code);

/// Parses the JSON text. Syntax errors carry line/column, shape errors the
/// offending field path.
StateFile parse_state_file_text(std::string_view text);

/// Parses and validates into a state.
NQubitState parse_state_file(std::string_view text, int max_qubits = kDefaultMaxQubits);

NQubitState to_state(const StateFile& file, int max_qubits = kDefaultMaxQubits);

/// Serializes with 17 significant digits, so parsing reproduces every entry.
std::string emit_state_file(const StateFile& file);

StateFile state_file_from_state(const NQubitState& s, std::optional<std::string> label = {});
StateFile state_file_from_amplitudes(std::vector<Complex> amps,
                                     std::optional<std::string> label = {});

}  // namespace lucheck
