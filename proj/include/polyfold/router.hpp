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

#include <map>
#include <vector>

#include "polyfold/spanning_tree.hpp"

namespace polyfold {

// The scaffold runs along every edge twice, once per helix, once per
// direction. Each mesh vertex of degree N becomes N degree-2 corner
// pseudo-vertices (one per incident face); each cut edge gains a pair of
// degree-2 midpoint nodes where the scaffold U-turns between its two helices
// (the single scaffold crossover of that edge). Tree edges stay intact. The
// result is 2-regular, so the scaffold walk is forced once a start is fixed.

/// Face-corner pseudo-vertex: joins the two edge-ends bordering `face` at
/// `vertex`.
struct PseudoVertex {
  VertexId vertex = 0;
  FaceId face = 0;
  std::pair<EdgeId, EdgeId> joins{0, 0};  // (incoming edge, outgoing edge) along the winding
};

/// Cut-edge midpoint node joining the two antiparallel half-strands on the
/// `near_vertex` side of the edge.
struct MidpointNode {
  EdgeId edge = 0;
  VertexId near_vertex = 0;
};

enum class SegmentHalf { Whole, FirstHalf, SecondHalf };

/// One directed strand piece. `from`/`to` give the strand direction over the
/// full edge; halves cover only the near or far half of that run. Pseudo-
/// vertex ids index corners first, then midpoints.
struct Segment {
  EdgeId edge = 0;
  VertexId from = 0;
  VertexId to = 0;
  SegmentHalf half = SegmentHalf::Whole;
  int enter_pv = -1;
  int leave_pv = -1;
};

struct ExpandedGraph {
  std::vector<PseudoVertex> corners;
  std::vector<MidpointNode> midpoints;
  std::vector<Segment> segments;   // canonical enumeration order, not walk order
  std::vector<int> successor;      // segment index -> segment index (a permutation)
  int start_segment = 0;           // canonical walk start

  int pseudo_vertex_count() const {
    return static_cast<int>(corners.size() + midpoints.size());
  }
};

/// The single closed scaffold walk. Segment 0 is the canonical start: the
/// lowest-id tree edge at the root, traversed away from the root on the face
/// winding that leaves the root.
struct EulerianCircuit {
  std::vector<Segment> segments;  // walk order
  std::vector<PseudoVertex> corners;
  std::vector<MidpointNode> midpoints;
};

/// Replace every vertex by per-face corner pseudo-vertices and split cut
/// edges at their midpoints. Tree edges contribute two whole strands, cut
/// edges four half strands. Throws NonEulerian if any pseudo-vertex fails the
/// one-in/one-out structure (impossible for validated input; kept as a
/// consistency guard).
inline ExpandedGraph expand_pseudo_vertices(const EdgeGraph& graph, const SpanningTreeResult& tree) {
  ExpandedGraph x;

  std::map<std::pair<VertexId, FaceId>, int> corner_id;
  for (VertexId v = 0; v < graph.vertex_count; ++v) {
    for (const auto& adj : graph.adjacency[v]) {
      FaceId f = graph.face_of_directed.at({v, adj.neighbor});
      VertexId prev = graph.prev_in_face(f, v);
      corner_id[{v, f}] = static_cast<int>(x.corners.size());
      x.corners.push_back({v, f, {graph.edge_id(prev, v), adj.edge}});
    }
  }
  std::map<std::pair<EdgeId, VertexId>, int> midpoint_id;
  for (EdgeId e = 0; e < static_cast<EdgeId>(graph.edges.size()); ++e) {
    if (tree.in_tree(e)) continue;
    for (VertexId end : {graph.edges[e].a, graph.edges[e].b}) {
      midpoint_id[{e, end}] = static_cast<int>(x.corners.size() + x.midpoints.size());
      x.midpoints.push_back({e, end});
    }
  }

  auto corner_of = [&](VertexId v, VertexId toward) {
    return corner_id.at({v, graph.face_of_directed.at({v, toward})});
  };

  // Enumerate strand pieces. A whole strand u->v runs on the face whose
  // winding contains u->v, from corner (u,f) to corner (v,f). A cut edge's
  // strand u->v is split at the midpoint: the near half leaves u and ends at
  // mid(e,u); the far half starts at mid(e,v) and ends at corner (v,f).
  std::map<std::tuple<EdgeId, VertexId, SegmentHalf>, int> seg_id;
  auto add_segment = [&](EdgeId e, VertexId from, VertexId to, SegmentHalf half, int enter, int leave) {
    seg_id[{e, from, half}] = static_cast<int>(x.segments.size());
    x.segments.push_back({e, from, to, half, enter, leave});
  };
  for (EdgeId e = 0; e < static_cast<EdgeId>(graph.edges.size()); ++e) {
    VertexId a = graph.edges[e].a;
    VertexId b = graph.edges[e].b;
    if (tree.in_tree(e)) {
      add_segment(e, a, b, SegmentHalf::Whole, corner_of(a, b), corner_of(b, a));
      add_segment(e, b, a, SegmentHalf::Whole, corner_of(b, a), corner_of(a, b));
    } else {
      add_segment(e, a, b, SegmentHalf::FirstHalf, corner_of(a, b), midpoint_id.at({e, a}));
      add_segment(e, b, a, SegmentHalf::SecondHalf, midpoint_id.at({e, a}), corner_of(a, b));
      add_segment(e, b, a, SegmentHalf::FirstHalf, corner_of(b, a), midpoint_id.at({e, b}));
      add_segment(e, a, b, SegmentHalf::SecondHalf, midpoint_id.at({e, b}), corner_of(b, a));
    }
  }

  // Successor: at a corner (v,f) the walk continues along f's winding to the
  // next edge of that face; at a midpoint it returns on the antiparallel half.
  x.successor.assign(x.segments.size(), -1);
  std::vector<int> entered(x.pseudo_vertex_count(), 0);
  std::vector<int> left(x.pseudo_vertex_count(), 0);
  for (std::size_t s = 0; s < x.segments.size(); ++s) {
    const Segment& seg = x.segments[s];
    ++left[seg.enter_pv];
    ++entered[seg.leave_pv];
    int next = -1;
    if (seg.leave_pv < static_cast<int>(x.corners.size())) {
      const PseudoVertex& pv = x.corners[seg.leave_pv];
      VertexId n = graph.next_in_face(pv.face, pv.vertex);
      EdgeId out = graph.edge_id(pv.vertex, n);
      SegmentHalf half = tree.in_tree(out) ? SegmentHalf::Whole : SegmentHalf::FirstHalf;
      next = seg_id.at({out, pv.vertex, half});
    } else {
      const MidpointNode& mid = x.midpoints[seg.leave_pv - x.corners.size()];
      VertexPair e = graph.edges[mid.edge];
      VertexId far = e.a == mid.near_vertex ? e.b : e.a;
      next = seg_id.at({mid.edge, far, SegmentHalf::SecondHalf});
    }
    x.successor[s] = next;
  }
  for (int pv = 0; pv < x.pseudo_vertex_count(); ++pv) {
    if (entered[pv] != 1 || left[pv] != 1) {
      throw Error(Stage::Router, "NonEulerian",
                  "pseudo-vertex " + std::to_string(pv) + " has in/out degree " +
                      std::to_string(entered[pv]) + "/" + std::to_string(left[pv]) +
                      " (expected 1/1)");
    }
  }

  // Canonical start: lowest-id tree edge at the root, leaving the root.
  int start = -1;
  for (const auto& adj : graph.adjacency[tree.root]) {
    if (!tree.in_tree(adj.edge)) continue;
    int s = seg_id.at({adj.edge, tree.root, SegmentHalf::Whole});
    if (start < 0 || x.segments[s].edge < x.segments[start].edge) start = s;
  }
  if (start < 0) {
    throw Error(Stage::Router, "NonEulerian",
                "root vertex " + std::to_string(tree.root + 1) + " has no incident tree edge");
  }
  x.start_segment = start;
  return x;
}

/// Number of disjoint cycles in the expansion's successor permutation.
inline int cycle_count(const ExpandedGraph& x) {
  std::vector<char> seen(x.segments.size(), 0);
  int cycles = 0;
  for (std::size_t s = 0; s < x.segments.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    int cur = static_cast<int>(s);
    while (!seen[cur]) {
      seen[cur] = 1;
      cur = x.successor[cur];
    }
  }
  return cycles;
}

/// Extract the single closed scaffold walk. The expansion is 2-regular, so
/// the walk is forced; if it decomposes into several loops (possible when the
/// surface is not genus 0) this reports MultipleCycles rather than repairing.
inline EulerianCircuit eulerian_circuit(const ExpandedGraph& x) {
  int cycles = cycle_count(x);
  if (cycles != 1) {
    throw Error(Stage::Router, "MultipleCycles",
                "scaffold routing decomposes into " + std::to_string(cycles) +
                    " disjoint cycles instead of one; the tree/expansion pair does not admit a "
                    "single circuit on this surface");
  }
  EulerianCircuit circuit;
  circuit.corners = x.corners;
  circuit.midpoints = x.midpoints;
  circuit.segments.reserve(x.segments.size());
  int cur = x.start_segment;
  do {
    circuit.segments.push_back(x.segments[cur]);
    cur = x.successor[cur];
  } while (cur != x.start_segment);
  return circuit;
}

struct CircuitReport {
  std::vector<EdgeId> edge_visit_order;      // one entry per segment, in walk order
  EdgeId first_edge = 0;
  EdgeId second_edge = 0;                    // first edge distinct from first_edge
  std::map<EdgeId, double> traversal_count;  // whole-edge equivalents (halves count 1/2)
};

inline CircuitReport circuit_report(const EulerianCircuit& circuit) {
  CircuitReport report;
  report.edge_visit_order.reserve(circuit.segments.size());
  for (const auto& seg : circuit.segments) {
    report.edge_visit_order.push_back(seg.edge);
    report.traversal_count[seg.edge] += seg.half == SegmentHalf::Whole ? 1.0 : 0.5;
  }
  report.first_edge = report.edge_visit_order.front();
  report.second_edge = report.first_edge;
  for (EdgeId e : report.edge_visit_order) {
    if (e != report.first_edge) {
      report.second_edge = e;
      break;
    }
  }
  return report;
}

}  // namespace polyfold
