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

#include <charconv>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "polyfold/mesh.hpp"

namespace polyfold {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline double parse_real(std::string_view tok, std::size_t line_no) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw Error(Stage::MeshIo, "MalformedLine",
                "line " + std::to_string(line_no) + ": '" + std::string(tok) + "' is not a real number");
  }
  return value;
}

// Face token: "i", "i/t", "i//n" or "i/t/n"; only the vertex component is used.
// OBJ indices are 1-based; negative indices count back from the current vertex
// tally. Returns a 0-based index.
inline VertexId parse_face_index(std::string_view tok, std::size_t defined_vertices,
                                 std::size_t line_no) {
  std::string_view head = tok.substr(0, tok.find('/'));
  long idx = 0;
  auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), idx);
  if (ec != std::errc{} || ptr != head.data() + head.size() || idx == 0) {
    throw Error(Stage::MeshIo, "MalformedLine",
                "line " + std::to_string(line_no) + ": '" + std::string(tok) + "' is not a face index");
  }
  long resolved = idx > 0 ? idx - 1 : static_cast<long>(defined_vertices) + idx;
  if (resolved < 0 || resolved >= static_cast<long>(defined_vertices)) {
    throw Error(Stage::MeshIo, "IndexOutOfRange",
                "line " + std::to_string(line_no) + ": face index " + std::string(tok) +
                    " resolves outside the " + std::to_string(defined_vertices) +
                    " vertices defined so far");
  }
  return static_cast<VertexId>(resolved);
}

inline bool is_ignored_keyword(std::string_view kw) {
  return kw == "vn" || kw == "vt" || kw == "o" || kw == "g" || kw == "s" || kw == "mtllib" ||
         kw == "usemtl";
}

}  // namespace detail

/// Parse a Wavefront .obj stream into a validated PolyhedralMesh.
///
/// Supported subset: `v x y z [w]` and `f i j k ...` (slash forms accepted,
/// only the vertex component is read). `vn vt o g s mtllib usemtl #` lines are
/// skipped. Anything else is a MalformedLine. Vertices keep file order; face
/// indices are converted to 0-based. Deterministic: identical bytes in,
/// identical mesh out.
///
/// `warnings`, when non-null, receives non-fatal findings (currently the
/// Euler-characteristic check).
inline PolyhedralMesh parse_obj(std::istream& in, std::vector<std::string>* warnings = nullptr) {
  PolyhedralMesh mesh;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view view(line);
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    auto toks = detail::split_ws(view);
    if (toks.empty()) continue;
    std::string_view kw = toks[0];
    if (kw == "v") {
      if (toks.size() < 4 || toks.size() > 5) {
        throw Error(Stage::MeshIo, "MalformedLine",
                    "line " + std::to_string(line_no) + ": 'v' expects 3 coordinates (optional w)");
      }
      Point3 p{detail::parse_real(toks[1], line_no), detail::parse_real(toks[2], line_no),
               detail::parse_real(toks[3], line_no)};
      if (toks.size() == 5) detail::parse_real(toks[4], line_no);  // w accepted, unused
      mesh.vertices.push_back(p);
    } else if (kw == "f") {
      if (toks.size() < 4) {
        throw Error(Stage::MeshIo, "MalformedLine",
                    "line " + std::to_string(line_no) + ": 'f' needs at least 3 indices");
      }
      std::vector<VertexId> cycle;
      cycle.reserve(toks.size() - 1);
      for (std::size_t k = 1; k < toks.size(); ++k) {
        cycle.push_back(detail::parse_face_index(toks[k], mesh.vertices.size(), line_no));
      }
      mesh.faces.push_back(std::move(cycle));
    } else if (!detail::is_ignored_keyword(kw)) {
      throw Error(Stage::MeshIo, "MalformedLine",
                  "line " + std::to_string(line_no) + ": unsupported keyword '" + std::string(kw) + "'");
    }
  }
  auto found = validate_mesh(mesh);
  if (warnings) warnings->insert(warnings->end(), found.begin(), found.end());
  return mesh;
}

inline PolyhedralMesh parse_obj_text(std::string_view text, std::vector<std::string>* warnings = nullptr) {
  std::istringstream in{std::string(text)};
  return parse_obj(in, warnings);
}

}  // namespace polyfold
