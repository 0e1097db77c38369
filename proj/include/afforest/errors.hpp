/*
 * Copyright 2026 The afforest authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace afforest {

enum class errc {
  duplicate_label,
  self_loop,
  duplicate_arc,
  circuit_detected,
  unknown_node,
  arc_not_present,
  arc_already_present,
  would_create_circuit,
  coalition_out_of_range,
  missing_table_entry,
  too_large,
  node_set_mismatch,
  wrong_node_set,
  enumeration_cap_exceeded,
  forest_mismatch,
  invalid_plan,
  parse_error,
  schema_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::duplicate_label: return "DuplicateLabel";
    case errc::self_loop: return "SelfLoop";
    case errc::duplicate_arc: return "DuplicateArc";
    case errc::circuit_detected: return "CircuitDetected";
    case errc::unknown_node: return "UnknownNode";
    case errc::arc_not_present: return "ArcNotPresent";
    case errc::arc_already_present: return "ArcAlreadyPresent";
    case errc::would_create_circuit: return "WouldCreateCircuit";
    case errc::coalition_out_of_range: return "CoalitionOutOfRange";
    case errc::missing_table_entry: return "MissingTableEntry";
    case errc::too_large: return "TooLarge";
    case errc::node_set_mismatch: return "NodeSetMismatch";
    case errc::wrong_node_set: return "WrongNodeSet";
    case errc::enumeration_cap_exceeded: return "EnumerationCapExceeded";
    case errc::forest_mismatch: return "ForestMismatch";
    case errc::invalid_plan: return "InvalidPlan";
    case errc::parse_error: return "ParseError";
    case errc::schema_error: return "SchemaError";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Circuit validation failure; carries one offending circuit as a label
/// sequence whose first and last entries coincide.
class circuit_error : public error {
 public:
  circuit_error(const std::string& message, std::vector<std::string> witness)
      : error(errc::circuit_detected, message), witness_(std::move(witness)) {}

  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  std::vector<std::string> witness_;
};

}  // namespace afforest
