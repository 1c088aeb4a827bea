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

#include <algorithm>
#include <map>
#include <vector>

#include "polyfold/mesh.hpp"

namespace polyfold {

struct AdjacentEdge {
  VertexId neighbor = 0;
  EdgeId edge = 0;
};

/// Undirected edge graph of a validated mesh, with the embedding data the
/// router needs: per-vertex adjacency in face-fan cyclic order, face cycles,
/// and the face on each side of every directed edge.
struct EdgeGraph {
  VertexId vertex_count = 0;
  std::vector<VertexPair> edges;                      // lexicographic, id = index
  std::vector<std::vector<AdjacentEdge>> adjacency;   // cyclic fan order per vertex
  std::vector<std::pair<FaceId, FaceId>> edge_faces;  // incident faces per edge
  std::vector<std::vector<VertexId>> faces;           // winding as imported
  std::map<std::pair<VertexId, VertexId>, FaceId> face_of_directed;  // (u,v) -> face with u->v
  std::map<std::pair<VertexId, VertexId>, EdgeId> edge_ids;

  EdgeId edge_id(VertexId u, VertexId v) const {
    VertexPair key(u, v);
    return edge_ids.at({key.a, key.b});
  }

  int degree(VertexId v) const { return static_cast<int>(adjacency[v].size()); }

  /// Vertex after v in face f's cycle.
  VertexId next_in_face(FaceId f, VertexId v) const {
    const auto& cycle = faces[f];
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (cycle[k] == v) return cycle[(k + 1) % cycle.size()];
    }
    throw Error(Stage::Router, "NonEulerian",
                "vertex " + std::to_string(v + 1) + " not found in face " + std::to_string(f));
  }

  /// Vertex before v in face f's cycle.
  VertexId prev_in_face(FaceId f, VertexId v) const {
    const auto& cycle = faces[f];
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (cycle[k] == v) return cycle[(k + cycle.size() - 1) % cycle.size()];
    }
    throw Error(Stage::Router, "NonEulerian",
                "vertex " + std::to_string(v + 1) + " not found in face " + std::to_string(f));
  }
};

/// Build the edge graph from a validated mesh. Edges get ids in lexicographic
/// order. Adjacency lists are produced by walking the face fan around each
/// vertex (successive edges share a face), starting from the lowest-id
/// neighbor, so their cyclic order is consistent with the face windings.
/// Throws Disconnected when the mesh has more than one component.
inline EdgeGraph build_graph(const PolyhedralMesh& mesh) {
  EdgeGraph g;
  g.vertex_count = static_cast<VertexId>(mesh.vertex_count());
  g.edges = mesh.edges;
  g.faces = mesh.faces;
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edges.size()); ++e) {
    g.edge_ids[{g.edges[e].a, g.edges[e].b}] = e;
  }

  for (FaceId f = 0; f < static_cast<FaceId>(mesh.faces.size()); ++f) {
    const auto& cycle = mesh.faces[f];
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      g.face_of_directed[{cycle[k], cycle[(k + 1) % cycle.size()]}] = f;
    }
  }
  g.edge_faces.resize(g.edges.size());
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edges.size()); ++e) {
    g.edge_faces[e] = {g.face_of_directed.at({g.edges[e].a, g.edges[e].b}),
                       g.face_of_directed.at({g.edges[e].b, g.edges[e].a})};
  }

  // Raw neighbor sets, then fan ordering. In the face containing v->u, the
  // fan neighbor after u is the vertex preceding v there: both edges border
  // that face's corner at v.
  std::vector<std::vector<VertexId>> neighbors(g.vertex_count);
  for (const auto& e : g.edges) {
    neighbors[e.a].push_back(e.b);
    neighbors[e.b].push_back(e.a);
  }
  g.adjacency.resize(g.vertex_count);
  for (VertexId v = 0; v < g.vertex_count; ++v) {
    if (neighbors[v].empty()) {
      throw Error(Stage::Topology, "Disconnected",
                  "vertex " + std::to_string(v + 1) + " has no incident edges");
    }
    VertexId start = *std::min_element(neighbors[v].begin(), neighbors[v].end());
    VertexId u = start;
    do {
      g.adjacency[v].push_back({u, g.edge_id(v, u)});
      FaceId f = g.face_of_directed.at({v, u});
      u = g.prev_in_face(f, v);
    } while (u != start && g.adjacency[v].size() <= neighbors[v].size());
    if (g.adjacency[v].size() != neighbors[v].size()) {
      throw Error(Stage::Topology, "Disconnected",
                  "face fan around vertex " + std::to_string(v + 1) +
                      " does not close over all incident edges");
    }
  }

  // connectivity
  std::vector<char> seen(g.vertex_count, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  VertexId reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (const auto& adj : g.adjacency[v]) {
      if (!seen[adj.neighbor]) {
        seen[adj.neighbor] = 1;
        ++reached;
        stack.push_back(adj.neighbor);
      }
    }
  }
  if (reached != g.vertex_count) {
    throw Error(Stage::Topology, "Disconnected",
                "graph has more than one component (" + std::to_string(reached) + " of " +
                    std::to_string(g.vertex_count) + " vertices reachable)");
  }
  return g;
}

}  // namespace polyfold
