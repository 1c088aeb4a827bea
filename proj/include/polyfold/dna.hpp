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
#include <string>
#include <string_view>

#include "polyfold/errors.hpp"

namespace polyfold {

/// Watson-Crick complement of a single upper-case base.
inline char complement_base(char b) {
  switch (b) {
    case 'A': return 'T';
    case 'T': return 'A';
    case 'C': return 'G';
    case 'G': return 'C';
    default:
      throw Error(Stage::Stapler, "BadAlphabet",
                  std::string("base '") + b + "' is not one of A,C,G,T");
  }
}

inline bool is_acgt(std::string_view seq) {
  return std::all_of(seq.begin(), seq.end(), [](char c) {
    return c == 'A' || c == 'C' || c == 'G' || c == 'T';
  });
}

/// Reverse complement: reversed string with A<->T, C<->G swapped.
/// The result is the 5'->3' sequence of the strand hybridizing to `seq`.
inline std::string reverse_complement(std::string_view seq) {
  std::string out;
  out.reserve(seq.size());
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) out.push_back(complement_base(*it));
  return out;
}

}  // namespace polyfold
