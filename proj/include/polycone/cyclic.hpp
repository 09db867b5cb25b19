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
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polycone/cone.hpp"
#include "polycone/errors.hpp"
#include "polycone/hilbert.hpp"
#include "polycone/linalg.hpp"
#include "polycone/presentation.hpp"

namespace polycone {

/// Proper nonempty interval of consecutive residues mod n, 1-based.
struct CyclicInterval {
  int n = 0;
  int start = 0;   // in 1..n
  int length = 0;  // in 1..n-1

  CyclicInterval(int ground, int s, int len)
      : n(ground), start(s), length(len) {
    if (n < 3 || s < 1 || s > n || len < 1 || len > n - 1)
      throw std::domain_error("cyclic interval: out of range");
  }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int t = 0; t < length; ++t)
      out.push_back((start - 1 + t) % n + 1);
    std::sort(out.begin(), out.end());
    return out;
  }
};

struct PredictedNormals {
  int n = 0;
  std::vector<std::pair<CyclicInterval, Halfspace>> normals;
};

/// The 2n-3 reference points: R_{0,j} has leading 2, a single 0 at position
/// n+1-j, and 1 elsewhere; Q_{0,j} has trailing 0, a single 2 at position
/// j+1, and 1 elsewhere.
inline std::pair<std::vector<IntVec>, std::vector<IntVec>> special_points(
    int n) {
  if (n < 3) throw std::domain_error("special_points: n must be >= 3");
  std::vector<IntVec> r_list, q_list;
  for (int j = 1; j <= n - 1; ++j) {
    IntVec p(static_cast<std::size_t>(n), 1);
    p[0] = 2;
    p[static_cast<std::size_t>(n - j)] = 0;  // position n+1-j
    r_list.push_back(std::move(p));
  }
  for (int j = 1; j <= n - 2; ++j) {
    IntVec p(static_cast<std::size_t>(n), 1);
    p[static_cast<std::size_t>(n - 1)] = 0;
    p[static_cast<std::size_t>(j)] = 2;  // position j+1
    q_list.push_back(std::move(p));
  }
  return {r_list, q_list};
}

/// Rows: R_{0,1}..R_{0,n-1} for i=1; R_{0,1}..R_{0,n-i} then Q_{0,1}..
/// Q_{0,i-1} for i >= 2.
inline IntMat matrix_A(int n, int i) {
  if (n < 3) throw std::domain_error("matrix_A: n must be >= 3");
  if (i < 1 || i > n - 1) throw std::domain_error("matrix_A: i out of range");
  auto [r_list, q_list] = special_points(n);
  IntMat rows;
  for (int j = 1; j <= n - i; ++j) rows.push_back(r_list[j - 1]);
  for (int j = 1; j <= i - 1; ++j) rows.push_back(q_list[j - 1]);
  return rows;
}

/// Primitive normal with -(n-i-1) on the interval and (i+1) off it, where
/// i is the interval length. For i = n-1 this reduces to the coordinate
/// halfspace of the single off-interval index.
inline Halfspace interval_normal(const CyclicInterval& s) {
  IntVec v(static_cast<std::size_t>(s.n), Int(s.length + 1));
  for (int e : s.members())
    v[static_cast<std::size_t>(e - 1)] = -(s.n - s.length - 1);
  return Halfspace{primitive(v)};
}

/// interval_normal over all n(n-1) proper cyclic intervals, sorted by
/// normal vector.
inline PredictedNormals predicted_facets(int n) {
  if (n < 3) throw std::domain_error("predicted_facets: n must be >= 3");
  PredictedNormals out;
  out.n = n;
  for (int start = 1; start <= n; ++start)
    for (int len = 1; len <= n - 1; ++len) {
      CyclicInterval iv(n, start, len);
      out.normals.emplace_back(iv, interval_normal(iv));
    }
  std::sort(out.normals.begin(), out.normals.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  for (std::size_t i = 1; i < out.normals.size(); ++i)
    if (out.normals[i].second == out.normals[i - 1].second)
      throw std::logic_error("predicted_facets: duplicate normal");
  return out;
}

/// Whether a {0,1,2}-point of coordinate sum n lies on the hyperplane with
/// normal -(n-2) at its first 2-coordinate and 2 elsewhere.
inline bool lemma33_holds(const IntVec& p) {
  const int n = static_cast<int>(p.size());
  if (n < 3) throw std::domain_error("lemma33_holds: need n >= 3");
  Int sum = 0;
  int first_two = -1;
  for (int i = 0; i < n; ++i) {
    if (p[static_cast<std::size_t>(i)] < 0 ||
        p[static_cast<std::size_t>(i)] > 2)
      throw std::domain_error("lemma33_holds: coordinates must be in {0,1,2}");
    sum += p[static_cast<std::size_t>(i)];
    if (first_two < 0 && p[static_cast<std::size_t>(i)] == 2) first_two = i;
  }
  if (sum != n) throw std::domain_error("lemma33_holds: coordinate sum != n");
  if (first_two < 0)
    throw std::domain_error("lemma33_holds: no coordinate equals 2");
  Int acc = 0;
  for (int i = 0; i < n; ++i)
    acc += (i == first_two ? Int(-(n - 2)) : Int(2)) *
           p[static_cast<std::size_t>(i)];
  return acc == 0;
}

struct TheoremReport {
  int n = 0;
  bool facets_match = false;
  bool dim_ok = false;
  bool cardinality_ok = false;
  bool extreme_rays_ok = false;
  bool success = false;
  long facet_count = 0;
  long base_count = 0;
};

/// Checks the closed-form facet description of the cyclic cone against an
/// independent facet enumeration, plus the dimension, base cardinality and
/// extreme-ray statements.
inline TheoremReport verify_theorem(int n, int n_budget = 7) {
  if (n < 3) throw std::domain_error("verify_theorem: n must be >= 3");
  if (n > n_budget)
    throw budget_error("verify_theorem: n exceeds budget; raise the cap");
  TheoremReport rep;
  rep.n = n;

  BaseSet base = enumerate_bases(cyclic_presentation(n));
  ConeDescription cone = facet_enumeration(base.points);

  std::set<IntVec> computed;
  for (const Halfspace& f : cone.facets) computed.insert(f.normal);
  std::set<IntVec> predicted;
  for (const auto& [iv, h] : predicted_facets(n).normals)
    predicted.insert(h.normal);
  rep.facets_match = computed == predicted;
  rep.facet_count = static_cast<long>(cone.facets.size());

  rep.dim_ok = cone.dim == n;

  rep.base_count = static_cast<long>(base.points.size());
  rep.cardinality_ok = rep.base_count == (1L << n) - 1;

  std::set<IntVec> rays_expected;
  for (const IntVec& p : base.points)
    if (p != IntVec(static_cast<std::size_t>(n), 1))
      rays_expected.insert(primitive(p));
  std::vector<IntVec> rays = extreme_rays(cone);
  rep.extreme_rays_ok =
      std::set<IntVec>(rays.begin(), rays.end()) == rays_expected;

  rep.success = rep.facets_match && rep.dim_ok && rep.cardinality_ok &&
                rep.extreme_rays_ok;
  return rep;
}

struct ConjectureReport {
  bool facets_subset_of_predicted = false;
  bool gorenstein = false;
  long facet_count = 0;
};

/// Records whether the facet normals of the presentation's cone form a
/// subset of the predicted cyclic normal set, and whether the base ring is
/// Gorenstein. Raw facts only; decides nothing about the conjecture.
inline ConjectureReport conjecture_probe(const Presentation& p,
                                         long degree_cap = -1) {
  if (p.n > 5)
    throw budget_error("conjecture_probe: n exceeds budget (n <= 5)");
  ConjectureReport rep;
  BaseSet base = enumerate_bases(p);
  ConeDescription cone = facet_enumeration(base.points);
  rep.facet_count = static_cast<long>(cone.facets.size());
  std::set<IntVec> predicted;
  for (const auto& [iv, h] : predicted_facets(p.n).normals)
    predicted.insert(h.normal);
  rep.facets_subset_of_predicted = true;
  for (const Halfspace& f : cone.facets)
    if (!predicted.count(f.normal)) {
      rep.facets_subset_of_predicted = false;
      break;
    }
  rep.gorenstein = is_gorenstein(p, degree_cap).gorenstein;
  return rep;
}

}  // namespace polycone
