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
#include <numeric>
#include <stdexcept>
#include <vector>

#include "polycone/cone.hpp"
#include "polycone/errors.hpp"
#include "polycone/linalg.hpp"
#include "polycone/presentation.hpp"

namespace polycone {

struct inconsistency_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct stabilization_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact membership oracle for the lattice generated by the base points,
/// kept as a Hermite basis; index measures the lattice inside span cap Z^n.
struct SemigroupLattice {
  IntMat basis;                     // HNF rows
  std::vector<std::size_t> pivots;  // pivot column per basis row
  Int index = 1;

  bool contains(const IntVec& x) const {
    IntVec y = x;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Int& piv = basis[i][pivots[i]];
      if (y[pivots[i]] % piv != 0) return false;
      detail::sub_scaled(y, y[pivots[i]] / piv, basis[i]);
    }
    return is_zero(y);
  }
};

inline SemigroupLattice lattice_of(const BaseSet& base) {
  if (base.points.empty())
    throw std::invalid_argument("lattice_of: empty base");
  const std::size_t n = base.points[0].size();
  SemigroupLattice lat;
  lat.basis = hermite_normal_form(base.points);
  for (const IntVec& row : lat.basis) {
    std::size_t p = 0;
    while (p < n && row[p] == 0) ++p;
    lat.pivots.push_back(p);
  }
  // Saturation span cap Z^n = kernel of the orthogonal-complement lattice;
  // same pivot columns, so the index is the ratio of pivot products.
  IntMat saturation =
      kernel_basis(kernel_basis(base.points, n), n);
  Int prod_lat = 1, prod_sat = 1;
  for (std::size_t i = 0; i < lat.basis.size(); ++i) {
    prod_lat *= lat.basis[i][lat.pivots[i]];
    prod_sat *= saturation[i][lat.pivots[i]];
  }
  lat.index = prod_lat / prod_sat;
  return lat;
}

namespace detail {

// Recursive descent over coordinates with remaining-sum pruning against the
// facet inequalities and span equations.
struct SliceEnumerator {
  const ConeDescription& cone;
  const SemigroupLattice& lat;
  bool interior;
  std::size_t n;
  IntMat ineqs;  // facet normals
  IntMat eqs;    // span equations
  // suffix extremes: max/min coefficient among coordinates >= i
  IntMat ineq_max, eq_max, eq_min;
  IntVec current;
  std::vector<IntVec> out;

  SliceEnumerator(const ConeDescription& c, const SemigroupLattice& l,
                  bool inside)
      : cone(c), lat(l), interior(inside), n(c.generators[0].size()) {
    for (const Halfspace& f : c.facets) ineqs.push_back(f.normal);
    eqs = c.span_equations;
    auto suffix = [&](const IntMat& rows, bool want_max) {
      IntMat s(rows.size(), IntVec(n + 1, 0));
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t i = n; i-- > 0;)
          s[r][i] = want_max ? std::max(rows[r][i], s[r][i + 1])
                             : std::min(rows[r][i], s[r][i + 1]);
      return s;
    };
    ineq_max = suffix(ineqs, true);
    eq_max = suffix(eqs, true);
    eq_min = suffix(eqs, false);
    current.assign(n, 0);
  }

  void run(const Int& total) {
    IntVec ineq_partial(ineqs.size(), 0), eq_partial(eqs.size(), 0);
    descend(0, total, ineq_partial, eq_partial);
  }

  void descend(std::size_t i, const Int& remaining, IntVec& ineq_partial,
               IntVec& eq_partial) {
    if (i == n) {
      if (remaining != 0) return;
      const Int strict = interior ? 1 : 0;
      for (const Int& v : ineq_partial)
        if (v < strict) return;
      for (const Int& v : eq_partial)
        if (v != 0) return;
      if (!lat.contains(current)) return;
      out.push_back(current);
      return;
    }
    // Prune: the best the remaining coordinates can contribute.
    const Int strict = interior ? 1 : 0;
    for (std::size_t r = 0; r < ineqs.size(); ++r)
      if (ineq_partial[r] + remaining * std::max(Int(0), ineq_max[r][i]) <
          strict)
        return;
    for (std::size_t r = 0; r < eqs.size(); ++r) {
      if (eq_partial[r] + remaining * std::max(Int(0), eq_max[r][i]) < 0)
        return;
      if (eq_partial[r] + remaining * std::min(Int(0), eq_min[r][i]) > 0)
        return;
    }
    for (Int v = (i + 1 == n) ? remaining : Int(0); v <= remaining; ++v) {
      current[i] = v;
      for (std::size_t r = 0; r < ineqs.size(); ++r)
        ineq_partial[r] += v * ineqs[r][i];
      for (std::size_t r = 0; r < eqs.size(); ++r)
        eq_partial[r] += v * eqs[r][i];
      descend(i + 1, remaining - v, ineq_partial, eq_partial);
      for (std::size_t r = 0; r < ineqs.size(); ++r)
        ineq_partial[r] -= v * ineqs[r][i];
      for (std::size_t r = 0; r < eqs.size(); ++r)
        eq_partial[r] -= v * eqs[r][i];
      current[i] = 0;
    }
  }
};

inline Int degree_step(const ConeDescription& c) {
  Int m = 0;
  for (const Int& x : c.generators[0]) m += x;
  return m;
}

}  // namespace detail

/// All lattice points of the d-th slice: nonnegative, coordinate sum m*d,
/// on the span, in the semigroup lattice, nonnegative (strictly positive
/// when interior) on every facet. Sorted lexicographically.
inline std::vector<IntVec> points_at_degree(const ConeDescription& c,
                                            const SemigroupLattice& lat,
                                            long d, bool interior) {
  if (d < 0) throw std::domain_error("points_at_degree: negative degree");
  detail::SliceEnumerator e(c, lat, interior);
  e.run(detail::degree_step(c) * d);
  std::sort(e.out.begin(), e.out.end());
  return e.out;
}

inline long hilbert_function(const ConeDescription& c,
                             const SemigroupLattice& lat, long d) {
  return static_cast<long>(points_at_degree(c, lat, d, false).size());
}

struct HilbertSummary {
  long dim = 0;
  std::vector<Int> h;
  long degree_cap = 0;  // highest degree actually counted
  bool gorenstein = false;
  std::vector<IntVec> canonical_generators;
};

namespace detail {

// Counts slices until the numerator coefficients vanish for dim+2
// consecutive degrees, then verifies the reconstruction H(d) =
// sum_j h_j * C(dim-1+d-j, dim-1) at every counted degree.
inline HilbertSummary h_vector_impl(const BaseSet& base,
                                    const ConeDescription& cone,
                                    const SemigroupLattice& lat,
                                    long degree_cap) {
  HilbertSummary s;
  s.dim = rank(base.points);
  const long cap = degree_cap < 0 ? s.dim + 6 : degree_cap;
  if (cap < s.dim + 3)
    throw std::domain_error("h_vector: degree cap must be >= dim + 3");

  std::vector<Int> counts;
  std::vector<Int> h;
  long stabilized_at = -1;
  for (long d = 0; d <= cap; ++d) {
    counts.push_back(hilbert_function(cone, lat, d));
    Int hd = 0;
    for (long i = 0; i <= std::min(d, s.dim); ++i)
      hd += (i % 2 ? -1 : 1) * binomial(s.dim, i) * counts[d - i];
    h.push_back(hd);
    if (d + 1 >= s.dim + 2) {
      bool window_zero = true;
      for (long j = d - (s.dim + 2) + 1; j <= d; ++j)
        if (h[j] != 0) {
          window_zero = false;
          break;
        }
      if (window_zero) {
        stabilized_at = d;
        break;
      }
    }
  }
  if (stabilized_at < 0)
    throw stabilization_error(
        "h_vector: numerator did not stabilize; increase --degree-cap");
  s.degree_cap = static_cast<long>(counts.size()) - 1;

  while (!h.empty() && h.back() == 0) h.pop_back();
  if (h.empty() || h[0] != 1)
    throw inconsistency_error("h_vector: h[0] != 1");
  for (const Int& x : h)
    if (x < 0)
      throw inconsistency_error("h_vector: negative numerator coefficient");
  for (long d = 0; d <= s.degree_cap; ++d) {
    Int rec = 0;
    for (std::size_t j = 0; j < h.size(); ++j)
      rec += h[j] * binomial(s.dim - 1 + d - static_cast<long>(j), s.dim - 1);
    if (rec != counts[d])
      throw inconsistency_error("h_vector: reconstruction mismatch");
  }
  s.h = std::move(h);
  return s;
}

inline std::vector<IntVec> canonical_generators_impl(
    const ConeDescription& cone, const SemigroupLattice& lat,
    long degree_cap) {
  std::vector<IntVec> gens;
  for (long d = 1; d <= degree_cap; ++d) {
    for (const IntVec& p : points_at_degree(cone, lat, d, true)) {
      bool minimal = true;
      for (const IntVec& q : gens) {
        IntVec diff(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) diff[i] = p[i] - q[i];
        if (is_zero(diff)) {
          minimal = false;
          break;
        }
        bool in_cone = lat.contains(diff);
        for (std::size_t r = 0; in_cone && r < cone.span_equations.size();
             ++r)
          in_cone = dot(cone.span_equations[r], diff) == 0;
        for (std::size_t r = 0; in_cone && r < cone.facets.size(); ++r)
          in_cone = dot(cone.facets[r].normal, diff) >= 0;
        if (in_cone) {
          minimal = false;
          break;
        }
      }
      if (minimal) gens.push_back(p);
    }
  }
  return gens;
}

}  // namespace detail

/// Numerator coefficients of the Hilbert series over (1-t)^dim, without a
/// Gorenstein verdict. degree_cap < 0 picks the default dim + 6.
inline HilbertSummary h_vector(const BaseSet& base, long degree_cap = -1) {
  ConeDescription cone = facet_enumeration(base.points);
  SemigroupLattice lat = lattice_of(base);
  return detail::h_vector_impl(base, cone, lat, degree_cap);
}

/// Minimal monomial generators of the canonical module found up to the
/// degree cap: interior lattice points not reachable from a lower-degree
/// interior point by adding a semigroup element.
inline std::vector<IntVec> canonical_generators(const BaseSet& base,
                                                long degree_cap = -1) {
  ConeDescription cone = facet_enumeration(base.points);
  SemigroupLattice lat = lattice_of(base);
  const long cap = degree_cap < 0 ? rank(base.points) + 6 : degree_cap;
  if (cap < 2)
    throw std::domain_error("canonical_generators: degree cap must be >= 2");
  return detail::canonical_generators_impl(cone, lat, cap);
}

/// Full summary with the Gorenstein verdict: palindromic h-vector, cross
/// checked against principality of the canonical module within the cap.
inline HilbertSummary is_gorenstein(const Presentation& p,
                                    long degree_cap = -1, int n_budget = 6) {
  if (p.n > n_budget)
    throw budget_error("is_gorenstein: n exceeds budget; raise the cap");
  BaseSet base = enumerate_bases(p);
  ConeDescription cone = facet_enumeration(base.points);
  SemigroupLattice lat = lattice_of(base);
  HilbertSummary s = detail::h_vector_impl(base, cone, lat, degree_cap);
  const long cap = degree_cap < 0 ? s.dim + 6 : degree_cap;
  s.canonical_generators =
      detail::canonical_generators_impl(cone, lat, cap);

  bool palindromic = true;
  for (std::size_t i = 0; i < s.h.size(); ++i)
    if (s.h[i] != s.h[s.h.size() - 1 - i]) {
      palindromic = false;
      break;
    }
  s.gorenstein = palindromic;
  if (palindromic != (s.canonical_generators.size() == 1))
    throw inconsistency_error(
        "is_gorenstein: palindromicity and canonical-module principality "
        "disagree; raise --degree-cap or report a bug");
  return s;
}

}  // namespace polycone
