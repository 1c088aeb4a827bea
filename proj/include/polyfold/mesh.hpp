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

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polyfold/errors.hpp"

namespace polyfold {

using VertexId = std::int32_t;
using FaceId = std::int32_t;
using EdgeId = std::int32_t;

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

/// Unordered vertex pair with a < b. Natural ordering is lexicographic, which
/// is also the edge-id assignment order used by the topology layer.
struct VertexPair {
  VertexId a = 0;
  VertexId b = 0;

  VertexPair() = default;
  VertexPair(VertexId u, VertexId v) : a(u < v ? u : v), b(u < v ? v : u) {}

  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

/// A closed polyhedral surface: vertices, polygonal face cycles, and the
/// derived undirected edge set. Geometry is carried for export only; the
/// design pipeline is purely topological.
///
/// Validated invariants (see validate()):
///  - every edge is shared by exactly two faces,
///  - face windings are globally consistent (each edge traversed once per
///    direction across its two incident faces),
///  - no face repeats a vertex, all indices in range.
struct PolyhedralMesh {
  std::vector<Point3> vertices;
  std::vector<std::vector<VertexId>> faces;
  std::vector<VertexPair> edges;  // sorted lexicographically, id = index

  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t face_count() const { return faces.size(); }
  std::size_t edge_count() const { return edges.size(); }

  /// V - E + F. 2 for genus-0 solids; anything else earns a warning upstream.
  long long euler_characteristic() const {
    return static_cast<long long>(vertex_count()) - static_cast<long long>(edge_count()) +
           static_cast<long long>(face_count());
  }
};

namespace detail {

// Derives the edge set from face cycles and enforces the closed-2-manifold
// and winding invariants. Fills mesh.edges (sorted, deduplicated).
inline void derive_and_check_edges(PolyhedralMesh& mesh) {
  if (mesh.faces.empty()) {
    throw Error(Stage::MeshIo, "EmptyMesh", "mesh has no faces");
  }
  std::map<std::pair<VertexId, VertexId>, int> directed;
  std::map<VertexPair, int> undirected;
  for (FaceId f = 0; f < static_cast<FaceId>(mesh.faces.size()); ++f) {
    const auto& cycle = mesh.faces[f];
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      VertexId u = cycle[k];
      VertexId v = cycle[(k + 1) % cycle.size()];
      if (++directed[{u, v}] > 1) {
        throw Error(Stage::MeshIo, "InconsistentWinding",
                    "directed edge " + std::to_string(u + 1) + "->" + std::to_string(v + 1) +
                        " is traversed by more than one face; face windings disagree");
      }
      ++undirected[VertexPair(u, v)];
    }
  }
  mesh.edges.clear();
  mesh.edges.reserve(undirected.size());
  for (const auto& [e, count] : undirected) {
    if (count != 2) {
      throw Error(Stage::MeshIo, "NotClosed",
                  "edge " + std::to_string(e.a + 1) + "-" + std::to_string(e.b + 1) + " has " +
                      std::to_string(count) + " incident faces (expected 2); surface is not closed");
    }
    mesh.edges.push_back(e);
  }

  // Vertex manifold check: the face corners around each vertex must chain
  // into one closed fan. A "bowtie" vertex shared by two cones passes the
  // per-edge checks but has two fans.
  std::map<VertexId, std::map<VertexId, VertexId>> corner;  // v -> (next u -> prev p)
  for (const auto& cycle : mesh.faces) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      VertexId p = cycle[(k + cycle.size() - 1) % cycle.size()];
      VertexId v = cycle[k];
      VertexId u = cycle[(k + 1) % cycle.size()];
      corner[v][u] = p;
    }
  }
  for (const auto& [v, fan] : corner) {
    VertexId start = fan.begin()->first;
    VertexId u = start;
    std::size_t steps = 0;
    do {
      u = fan.at(u);
      ++steps;
    } while (u != start && steps <= fan.size());
    if (steps != fan.size()) {
      throw Error(Stage::MeshIo, "NotClosed",
                  "vertex " + std::to_string(v + 1) +
                      " is non-manifold: its incident faces form more than one fan");
    }
  }
}

}  // namespace detail

/// Full structural validation; fills the derived edge set. Throws mesh_io
/// errors on violation. Returns warnings (non-fatal findings) as text.
inline std::vector<std::string> validate_mesh(PolyhedralMesh& mesh) {
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
    if (!mesh.vertices[i].finite()) {
      throw Error(Stage::MeshIo, "MalformedLine",
                  "vertex " + std::to_string(i + 1) + " has non-finite coordinates");
    }
  }
  const auto nverts = static_cast<VertexId>(mesh.vertices.size());
  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    const auto& cycle = mesh.faces[f];
    if (cycle.size() < 3) {
      throw Error(Stage::MeshIo, "MalformedLine",
                  "face " + std::to_string(f + 1) + " has fewer than 3 vertices");
    }
    std::vector<VertexId> sorted(cycle);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(Stage::MeshIo, "MalformedLine",
                  "face " + std::to_string(f + 1) + " repeats a vertex");
    }
    for (VertexId v : cycle) {
      if (v < 0 || v >= nverts) {
        throw Error(Stage::MeshIo, "IndexOutOfRange",
                    "face " + std::to_string(f + 1) + " references vertex " + std::to_string(v + 1) +
                        " but only " + std::to_string(nverts) + " vertices exist");
      }
    }
  }
  detail::derive_and_check_edges(mesh);

  std::vector<std::string> warnings;
  if (mesh.euler_characteristic() != 2) {
    warnings.push_back("Euler characteristic V-E+F = " + std::to_string(mesh.euler_characteristic()) +
                       " (expected 2 for a genus-0 solid); routing may not close into one loop");
  }
  return warnings;
}

}  // namespace polyfold
