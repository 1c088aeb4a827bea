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

#include <queue>
#include <tuple>
#include <vector>

#include "polyfold/graph.hpp"

namespace polyfold {

/// Scaffold-crossover class of an edge: tree edges carry zero scaffold
/// crossovers, every other ("cut") edge carries exactly one.
enum class Crossover { Zero, One };

struct SpanningTreeResult {
  VertexId root = 0;
  std::vector<EdgeId> tree_edges;          // sorted by edge id, |V|-1 entries
  std::vector<Crossover> classification;   // per edge id
  std::vector<VertexId> discovery_order;   // vertices in Prim adoption order

  bool in_tree(EdgeId e) const { return classification[e] == Crossover::Zero; }
};

/// Prim's algorithm on unit edge weights, grown from `root`.
///
/// Tie-break between equal-weight frontier edges: earliest-discovered tree
/// endpoint first, then lowest new-vertex id, then lowest edge id. This makes
/// the adoption order identical to breadth-first search with neighbors
/// scanned in increasing id, which favors wide, branching trees.
inline SpanningTreeResult prim_spanning_tree(const EdgeGraph& graph, VertexId root) {
  if (root < 0 || root >= graph.vertex_count) {
    throw Error(Stage::Topology, "RootOutOfRange",
                "root vertex " + std::to_string(root + 1) + " is not in the graph (V = " +
                    std::to_string(graph.vertex_count) + ")");
  }
  SpanningTreeResult result;
  result.root = root;
  result.classification.assign(graph.edges.size(), Crossover::One);

  std::vector<int> discovered_at(graph.vertex_count, -1);
  // (discovery index of tree endpoint, candidate vertex, edge id)
  using Entry = std::tuple<int, VertexId, EdgeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;

  auto adopt = [&](VertexId v, int order) {
    discovered_at[v] = order;
    result.discovery_order.push_back(v);
    for (const auto& adj : graph.adjacency[v]) {
      if (discovered_at[adj.neighbor] < 0) frontier.push({order, adj.neighbor, adj.edge});
    }
  };

  adopt(root, 0);
  while (!frontier.empty()) {
    auto [from_order, v, e] = frontier.top();
    frontier.pop();
    if (discovered_at[v] >= 0) continue;
    result.classification[e] = Crossover::Zero;
    result.tree_edges.push_back(e);
    adopt(v, static_cast<int>(result.discovery_order.size()));
  }
  if (result.discovery_order.size() != static_cast<std::size_t>(graph.vertex_count)) {
    throw Error(Stage::Topology, "Disconnected", "spanning tree does not reach every vertex");
  }
  std::sort(result.tree_edges.begin(), result.tree_edges.end());
  return result;
}

struct TreeStats {
  int tree_edge_count = 0;
  int cut_edge_count = 0;
  int max_branch_degree = 0;  // highest vertex degree within the tree
  int leaf_count = 0;
};

inline TreeStats tree_stats(const SpanningTreeResult& result, const EdgeGraph& graph) {
  TreeStats stats;
  stats.tree_edge_count = static_cast<int>(result.tree_edges.size());
  stats.cut_edge_count = static_cast<int>(graph.edges.size()) - stats.tree_edge_count;
  std::vector<int> degree(graph.vertex_count, 0);
  for (EdgeId e : result.tree_edges) {
    ++degree[graph.edges[e].a];
    ++degree[graph.edges[e].b];
  }
  for (int d : degree) {
    stats.max_branch_degree = std::max(stats.max_branch_degree, d);
    if (d == 1) ++stats.leaf_count;
  }
  return stats;
}

}  // namespace polyfold
