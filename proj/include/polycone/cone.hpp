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

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "polycone/linalg.hpp"

namespace polycone {

/// Supporting halfspace <normal, x> >= 0 with a primitive integer normal,
/// oriented inward (nonnegative on every generator of the cone it supports).
struct Halfspace {
  IntVec normal;

  bool operator==(const Halfspace& o) const { return normal == o.normal; }
  bool operator<(const Halfspace& o) const { return normal < o.normal; }
};

/// Dual pair for one cone: generators, equations cutting out the linear
/// span, irredundant facet halfspaces inside the span, and the dimension.
struct ConeDescription {
  std::vector<IntVec> generators;      // deduplicated, lex sorted, unscaled
  std::vector<IntVec> span_equations;  // <c,x> = 0 on the span; primitive
  std::vector<Halfspace> facets;       // lex sorted by normal
  int dim = 0;
};

struct lineality_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// Extreme rays of the pointed cone {c in R^d : <h, c> >= 0 for all h},
// by the double description method: seed with d independent constraints,
// insert the rest one at a time, combine adjacent positive/negative pairs
// (combinatorial adjacency test), gcd-reduce every new ray.
inline std::vector<IntVec> polar_extreme_rays(const IntMat& constraints,
                                              std::size_t d) {
  // Seed: first d linearly independent constraint rows.
  std::vector<std::size_t> seed;
  IntMat picked;
  for (std::size_t j = 0; j < constraints.size() && seed.size() < d; ++j) {
    picked.push_back(constraints[j]);
    if (rank(picked) == static_cast<int>(picked.size()))
      seed.push_back(j);
    else
      picked.pop_back();
  }
  if (seed.size() != d)
    throw std::logic_error("polar_extreme_rays: constraints do not span");

  std::vector<IntVec> rays;
  for (std::size_t i = 0; i < d; ++i) {
    IntMat others;
    for (std::size_t k = 0; k < d; ++k)
      if (k != i) others.push_back(constraints[seed[k]]);
    IntVec r = d == 1 ? IntVec{1} : kernel_line(others);
    Int s = dot(constraints[seed[i]], r);
    if (s == 0) throw std::logic_error("polar_extreme_rays: degenerate seed");
    if (s < 0)
      for (Int& x : r) x = -x;
    rays.push_back(std::move(r));
  }

  std::vector<std::size_t> processed(seed);
  auto zero_mask = [&](const IntVec& r) {
    std::vector<std::uint64_t> mask((processed.size() + 63) / 64, 0);
    for (std::size_t t = 0; t < processed.size(); ++t)
      if (dot(constraints[processed[t]], r) == 0)
        mask[t / 64] |= std::uint64_t(1) << (t % 64);
    return mask;
  };

  std::set<std::size_t> in_seed(seed.begin(), seed.end());
  for (std::size_t j = 0; j < constraints.size(); ++j) {
    if (in_seed.count(j)) continue;
    const IntVec& h = constraints[j];
    std::vector<IntVec> pos, neg, kept;
    std::vector<Int> pos_val, neg_val;
    for (IntVec& r : rays) {
      Int v = dot(h, r);
      if (v > 0) {
        pos_val.push_back(v);
        pos.push_back(std::move(r));
      } else if (v < 0) {
        neg_val.push_back(v);
        neg.push_back(std::move(r));
      } else {
        kept.push_back(std::move(r));
      }
    }
    if (neg.empty()) {
      rays = std::move(kept);
      for (IntVec& r : pos) rays.push_back(std::move(r));
      processed.push_back(j);
      continue;
    }
    // Adjacency masks over the constraints processed so far.
    std::vector<std::vector<std::uint64_t>> mask_pos, mask_neg, mask_all;
    for (const IntVec& r : pos) mask_pos.push_back(zero_mask(r));
    for (const IntVec& r : neg) mask_neg.push_back(zero_mask(r));
    for (const IntVec& r : kept) mask_all.push_back(zero_mask(r));
    for (const auto& m : mask_pos) mask_all.push_back(m);
    for (const auto& m : mask_neg) mask_all.push_back(m);

    std::set<IntVec> fresh;
    for (std::size_t a = 0; a < pos.size(); ++a)
      for (std::size_t b = 0; b < neg.size(); ++b) {
        std::vector<std::uint64_t> common(mask_pos[a].size());
        for (std::size_t w = 0; w < common.size(); ++w)
          common[w] = mask_pos[a][w] & mask_neg[b][w];
        bool adjacent = true;
        for (std::size_t t = 0; t < mask_all.size() && adjacent; ++t) {
          const auto& other = mask_all[t];
          if (&other == &mask_all[kept.size() + a] ||
              &other == &mask_all[kept.size() + pos.size() + b])
            continue;
          bool contains = true;
          for (std::size_t w = 0; w < common.size(); ++w)
            if ((common[w] & ~other[w]) != 0) {
              contains = false;
              break;
            }
          if (contains) adjacent = false;
        }
        if (!adjacent) continue;
        IntVec w(pos[a].size());
        for (std::size_t t = 0; t < w.size(); ++t)
          w[t] = pos_val[a] * neg[b][t] - neg_val[b] * pos[a][t];
        fresh.insert(primitive(w));
      }
    rays = std::move(kept);
    for (IntVec& r : pos) rays.push_back(std::move(r));
    for (const IntVec& r : fresh) rays.push_back(r);
    processed.push_back(j);
  }
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return rays;
}

}  // namespace detail

/// H-description of the cone generated by the given vectors: span equations
/// from the orthogonal complement, then the irredundant primitive facet
/// halfspaces inside the span. Output is deterministic (lex sorted).
inline ConeDescription facet_enumeration(std::vector<IntVec> generators) {
  if (generators.empty())
    throw std::domain_error("facet_enumeration: empty generator list");
  const std::size_t n = generators[0].size();
  for (const IntVec& g : generators)
    if (g.size() != n)
      throw std::invalid_argument("facet_enumeration: length mismatch");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());

  ConeDescription out;
  out.generators = generators;
  out.span_equations = kernel_basis(generators, n);
  for (IntVec& e : out.span_equations) e = primitive(e);
  std::sort(out.span_equations.begin(), out.span_equations.end());
  const std::size_t d = n - out.span_equations.size();
  out.dim = static_cast<int>(d);
  if (d == 0) return out;  // cone {0}

  // Integer basis of the generator span; polar cone lives in its
  // coordinates: a = c B with <a, g> = <c, B g>.
  IntMat basis = hermite_normal_form(generators);
  IntMat constraints;
  for (const IntVec& g : generators) {
    IntVec h(d);
    for (std::size_t i = 0; i < d; ++i) h[i] = dot(basis[i], g);
    if (!is_zero(h)) constraints.push_back(primitive(h));
  }
  std::sort(constraints.begin(), constraints.end());
  constraints.erase(std::unique(constraints.begin(), constraints.end()),
                    constraints.end());

  std::vector<IntVec> polar_rays = detail::polar_extreme_rays(constraints, d);
  if (rank(polar_rays) != static_cast<int>(d))
    throw lineality_error("facet_enumeration: cone contains a line");
  for (const IntVec& c : polar_rays) {
    IntVec a(n, 0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t t = 0; t < n; ++t) a[t] += c[i] * basis[i][t];
    out.facets.push_back(Halfspace{primitive(a)});
  }
  std::sort(out.facets.begin(), out.facets.end());
  return out;
}

/// Generators spanning one-dimensional faces: the facets vanishing on the
/// generator, together with the span equations, must have rank n-1.
/// Returned primitive, deduplicated, lex sorted.
inline std::vector<IntVec> extreme_rays(const ConeDescription& c) {
  std::set<IntVec> out;
  for (const IntVec& g : c.generators) {
    if (is_zero(g)) continue;
    IntMat on_g = c.span_equations;
    for (const Halfspace& f : c.facets)
      if (dot(f.normal, g) == 0) on_g.push_back(f.normal);
    if (on_g.empty()) continue;
    if (rank(on_g) == static_cast<int>(g.size()) - 1) out.insert(primitive(g));
  }
  return std::vector<IntVec>(out.begin(), out.end());
}

}  // namespace polycone
