// Copyright 2026 The Authors.
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

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "polycone/linalg.hpp"
#include "polycone/presentation.hpp"

namespace polycone {

/// Classic Normaliz matrix input: row count, column count, one row per
/// line, then the keyword `integral_closure`. LF endings, trailing newline.
inline std::string emit_normaliz(const BaseSet& base) {
  if (base.points.empty())
    throw std::invalid_argument("emit_normaliz: empty base");
  std::ostringstream out;
  out << base.points.size() << "\n" << base.points[0].size() << "\n";
  for (const IntVec& p : base.points) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) out << " ";
      out << p[i];
    }
    out << "\n";
  }
  out << "integral_closure\n";
  return out.str();
}

/// Inverse of emit_normaliz; returns the point rows.
inline std::vector<IntVec> parse_normaliz(const std::string& text) {
  std::istringstream in(text);
  std::size_t rows = 0, cols = 0;
  if (!(in >> rows >> cols))
    throw std::invalid_argument("parse_normaliz: bad header");
  std::vector<IntVec> points(rows, IntVec(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      long long v = 0;
      if (!(in >> v)) throw std::invalid_argument("parse_normaliz: bad row");
      points[r][c] = v;
    }
  std::string keyword;
  if (!(in >> keyword) || keyword != "integral_closure")
    throw std::invalid_argument("parse_normaliz: missing integral_closure");
  return points;
}

}  // namespace polycone
