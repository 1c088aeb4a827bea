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

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "polyfold/mesh.hpp"

namespace polyfold {

enum class StageKind { Mesh, SpanningTree, Circuit };

inline std::string_view stage_kind_name(StageKind s) {
  switch (s) {
    case StageKind::Mesh: return "mesh";
    case StageKind::SpanningTree: return "tree";
    case StageKind::Circuit: return "circuit";
  }
  return "mesh";
}

enum class TagColor { Red, Blue };

/// Per-edge color annotation for a stage view. Tree stage: tree edges red.
/// Circuit stage: first routed edge red, second blue.
struct EdgeTag {
  VertexPair edge;
  TagColor color = TagColor::Red;
};

struct StageAnnotation {
  std::vector<EdgeTag> edge_tags;
};

/// Serialize a stage view as deterministic JSON:
///   {"vertices":[[x,y,z],...], "faces":[[i,...],...],
///    "edge_tags":[{"edge":[a,b],"color":"red"|"blue"},...], "stage":...}
/// Keys stay in that order; numbers use shortest round-trip form. Indices are
/// 0-based, mirroring the in-memory mesh. One trailing newline.
inline std::string export_stage(const PolyhedralMesh& mesh, const StageAnnotation& annotation,
                                StageKind stage) {
  for (const auto& tag : annotation.edge_tags) {
    if (!std::binary_search(mesh.edges.begin(), mesh.edges.end(), tag.edge)) {
      throw Error(Stage::MeshIo, "UnknownElement",
                  "annotation references edge " + std::to_string(tag.edge.a + 1) + "-" +
                      std::to_string(tag.edge.b + 1) + " which is not in the mesh");
    }
  }
  nlohmann::ordered_json doc;
  auto& verts = doc["vertices"] = nlohmann::ordered_json::array();
  for (const auto& p : mesh.vertices) verts.push_back({p.x, p.y, p.z});
  auto& faces = doc["faces"] = nlohmann::ordered_json::array();
  for (const auto& f : mesh.faces) faces.push_back(f);
  auto& tags = doc["edge_tags"] = nlohmann::ordered_json::array();
  for (const auto& tag : annotation.edge_tags) {
    nlohmann::ordered_json t;
    t["edge"] = {tag.edge.a, tag.edge.b};
    t["color"] = tag.color == TagColor::Red ? "red" : "blue";
    tags.push_back(std::move(t));
  }
  doc["stage"] = stage_kind_name(stage);
  return doc.dump(2) + "\n";
}

}  // namespace polyfold
