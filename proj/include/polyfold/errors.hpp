// Copyright 2026 The polyfold authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polyfold {

// Pipeline stage that raised an error. Drives exit-code mapping in the CLI:
// MeshIo -> 2, Topology/Router -> 3, Stapler -> 4, App -> 1.
enum class Stage { MeshIo, Topology, Router, Stapler, App };

inline std::string_view stage_name(Stage s) {
  switch (s) {
    case Stage::MeshIo: return "mesh_io";
    case Stage::Topology: return "topology";
    case Stage::Router: return "router";
    case Stage::Stapler: return "stapler";
    case Stage::App: return "app";
  }
  return "unknown";
}

inline int stage_exit_code(Stage s) {
  switch (s) {
    case Stage::MeshIo: return 2;
    case Stage::Topology:
    case Stage::Router: return 3;
    case Stage::Stapler: return 4;
    case Stage::App: return 1;
  }
  return 1;
}

/// Error thrown by any pipeline operation. `kind` is a stable machine-readable
/// tag (e.g. "NotClosed", "ScaffoldTooShort"); `message` is human prose.
class Error : public std::runtime_error {
 public:
  Error(Stage stage, std::string kind, const std::string& message)
      : std::runtime_error(std::string(stage_name(stage)) + ": " + kind + ": " + message),
        stage_(stage),
        kind_(std::move(kind)),
        message_(message) {}

  Stage stage() const { return stage_; }
  const std::string& kind() const { return kind_; }
  const std::string& message() const { return message_; }

 private:
  Stage stage_;
  std::string kind_;
  std::string message_;
};

}  // namespace polyfold
