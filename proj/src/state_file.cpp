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

#include "lucheck/state_file.hpp"

#include <json.hpp>

namespace lucheck {

namespace {

using nlohmann::json;

[[noreturn]] void dimension_error(const std::string& field, const std::string& message) {
  throw StateFileError(StateFileError::Code::kDimension, field + ": " + message);
}

[[noreturn]] void syntax_error(const std::string& field, const std::string& message) {
  throw StateFileError(StateFileError::Code::kSyntax, field + ": " + message);
}

Complex parse_complex(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    syntax_error(field, "expected a [re, im] pair of numbers");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

// Line and column of a byte offset, 1-based.
std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

const char* to_string(StateFileError::Code code) {
  switch (code) {
    case StateFileError::Code::kSyntax:
      return "syntax";
    case StateFileError::Code::kDimension:
      return "dimension";
    case StateFileError::Code::kValidation:
      return "validation";
  }
  return "unknown";
}

StateFile parse_state_file_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = locate(text, e.byte > 0 ? e.byte - 1 : 0);
    throw StateFileError(StateFileError::Code::kSyntax,
                         "line " + std::to_string(line) + ", column " + std::to_string(col) +
                             ": " + e.what());
  }
  if (!doc.is_object()) syntax_error("<root>", "expected a JSON object");

  StateFile file;
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    syntax_error("n", "missing or not an integer");
  }
  file.n = doc["n"].get<int>();
  if (file.n < 1 || file.n > 30) dimension_error("n", "qubit count out of range");
  const std::size_t dim = std::size_t{1} << file.n;

  if (!doc.contains("kind") || !doc["kind"].is_string()) {
    syntax_error("kind", "missing or not a string");
  }
  const std::string kind = doc["kind"].get<std::string>();
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) syntax_error("label", "not a string");
    file.label = doc["label"].get<std::string>();
  }

  if (kind == "pure") {
    file.kind = StateFile::Kind::kPure;
    if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array()) {
      syntax_error("amplitudes", "missing or not an array");
    }
    const json& amps = doc["amplitudes"];
    if (amps.size() != dim) {
      dimension_error("amplitudes", "expected " + std::to_string(dim) + " entries for n = " +
                                        std::to_string(file.n) + ", got " +
                                        std::to_string(amps.size()));
    }
    file.amplitudes.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      file.amplitudes.push_back(parse_complex(amps[i], "amplitudes[" + std::to_string(i) + "]"));
    }
  } else if (kind == "mixed") {
    file.kind = StateFile::Kind::kMixed;
    if (!doc.contains("matrix") || !doc["matrix"].is_array()) {
      syntax_error("matrix", "missing or not an array");
    }
    const json& rows = doc["matrix"];
    if (rows.size() != dim) {
      dimension_error("matrix", "expected " + std::to_string(dim) + " rows for n = " +
                                    std::to_string(file.n) + ", got " +
                                    std::to_string(rows.size()));
    }
    const auto side = static_cast<Eigen::Index>(dim);
    file.matrix.resize(side, side);
    for (std::size_t r = 0; r < dim; ++r) {
      const std::string row_field = "matrix[" + std::to_string(r) + "]";
      if (!rows[r].is_array()) syntax_error(row_field, "not an array");
      if (rows[r].size() != dim) {
        dimension_error(row_field, "expected " + std::to_string(dim) + " entries, got " +
                                       std::to_string(rows[r].size()));
      }
      for (std::size_t c = 0; c < dim; ++c) {
        file.matrix(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
            parse_complex(rows[r][c], row_field + "[" + std::to_string(c) + "]");
      }
    }
  } else {
    syntax_error("kind", "expected \"pure\" or \"mixed\", got \"" + kind + "\"");
  }
  return file;
}

NQubitState to_state(const StateFile& file, int max_qubits) {
  try {
    if (file.kind == StateFile::Kind::kPure) {
      return from_pure_amplitudes(file.amplitudes, max_qubits);
    }
    return validate_state(file.matrix, max_qubits);
  } catch (const ValidationError& e) {
    throw StateFileError(StateFileError::Code::kValidation,
                         std::string(to_string(e.kind())) + ": " + e.what());
  }
}

NQubitState parse_state_file(std::string_view text, int max_qubits) {
  return to_state(parse_state_file_text(text), max_qubits);
}

std::string emit_state_file(const StateFile& file) {
  json doc;
  doc["n"] = file.n;
  if (file.label) doc["label"] = *file.label;
  if (file.kind == StateFile::Kind::kPure) {
    doc["kind"] = "pure";
    json amps = json::array();
    for (const auto& a : file.amplitudes) amps.push_back(complex_to_json(a));
    doc["amplitudes"] = std::move(amps);
  } else {
    doc["kind"] = "mixed";
    json rows = json::array();
    for (Eigen::Index r = 0; r < file.matrix.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < file.matrix.cols(); ++c) {
        row.push_back(complex_to_json(file.matrix(r, c)));
      }
      rows.push_back(std::move(row));
    }
    doc["matrix"] = std::move(rows);
  }
  return doc.dump() + "\n";
}

StateFile state_file_from_state(const NQubitState& s, std::optional<std::string> label) {
  StateFile f;
  f.n = s.num_qubits();
  f.kind = StateFile::Kind::kMixed;
  f.matrix = s.matrix();
  f.label = std::move(label);
  return f;
}

StateFile state_file_from_amplitudes(std::vector<Complex> amps, std::optional<std::string> label) {
  StateFile f;
  f.n = qubit_count_for_dimension(static_cast<Eigen::Index>(amps.size()));
  if (f.n < 0) {
    throw DimensionError("state_file_from_amplitudes: length is not a power of two");
  }
  f.kind = StateFile::Kind::kPure;
  f.amplitudes = std::move(amps);
  f.label = std::move(label);
  return f;
}

}  // namespace lucheck
