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

#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "polycone/hilbert.hpp"

using namespace polycone;

namespace {

IntVec vec(std::initializer_list<long long> v) {
  return IntVec(v.begin(), v.end());
}

std::vector<Int> hvec(std::initializer_list<long long> v) {
  return std::vector<Int>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("semigroup lattice of the cyclic triangle") {
  // [DERIVED] all base points have coordinate sum 3, and the differences
  // (1,0,-1), (1,-1,0) together with (1,1,1) span {v : sum(v) % 3 == 0},
  // which has index 3 in Z^3.
  BaseSet b = enumerate_bases(cyclic_presentation(3));
  SemigroupLattice lat = lattice_of(b);
  CHECK(lat.index == 3);
  for (const IntVec& p : b.points) CHECK(lat.contains(p));
  CHECK(lat.contains(vec({1, 0, 2})));
  CHECK(lat.contains(vec({-1, -1, -1})));
  CHECK_FALSE(lat.contains(vec({1, 0, 0})));
  CHECK_FALSE(lat.contains(vec({1, 1, 0})));
}

TEST_CASE("even-sum sublattice has index 2") {
  BaseSet b;
  b.presentation = Presentation(2, {{1, 2}, {1, 2}});
  b.points = {vec({0, 2}), vec({1, 1}), vec({2, 0})};
  SemigroupLattice lat = lattice_of(b);
  CHECK(lat.index == 2);
  CHECK(lat.contains(vec({1, 1})));
  CHECK(lat.contains(vec({3, 1})));
  CHECK_FALSE(lat.contains(vec({1, 0})));
}

TEST_CASE("points at degree") {
  BaseSet b3 = enumerate_bases(cyclic_presentation(3));
  ConeDescription c3 = facet_enumeration(b3.points);
  SemigroupLattice l3 = lattice_of(b3);
  CHECK(points_at_degree(c3, l3, 1, true) ==
        std::vector<IntVec>{vec({1, 1, 1})});
  CHECK(points_at_degree(c3, l3, 1, false) == b3.points);
  CHECK(points_at_degree(c3, l3, 0, false) ==
        std::vector<IntVec>{vec({0, 0, 0})});

  BaseSet b4 = enumerate_bases(cyclic_presentation(4));
  ConeDescription c4 = facet_enumeration(b4.points);
  SemigroupLattice l4 = lattice_of(b4);
  CHECK(points_at_degree(c4, l4, 1, true) ==
        std::vector<IntVec>{vec({1, 1, 1, 1})});
}

TEST_CASE("interior slice is a single point for cyclic cones") {
  for (int n = 3; n <= 6; ++n) {
    BaseSet b = enumerate_bases(cyclic_presentation(n));
    ConeDescription c = facet_enumeration(b.points);
    SemigroupLattice lat = lattice_of(b);
    CHECK(points_at_degree(c, lat, 1, true) ==
          std::vector<IntVec>{IntVec(static_cast<std::size_t>(n), 1)});
  }
}

TEST_CASE("hilbert function basics") {
  BaseSet b = enumerate_bases(Presentation(4, {{1, 2, 3}, {2, 3, 4}}));
  ConeDescription c = facet_enumeration(b.points);
  SemigroupLattice lat = lattice_of(b);
  CHECK(hilbert_function(c, lat, 0) == 1);
  CHECK(hilbert_function(c, lat, 1) == 8);

  BaseSet b3 = enumerate_bases(cyclic_presentation(3));
  ConeDescription c3 = facet_enumeration(b3.points);
  SemigroupLattice l3 = lattice_of(b3);
  CHECK(hilbert_function(c3, l3, 1) == 7);
}

TEST_CASE("h-vectors of the reference table") {
  CHECK(h_vector(enumerate_bases(Presentation(4, {{1, 2, 3}, {2, 3, 4}}))).h ==
        hvec({1, 4, 1}));
  CHECK(
      h_vector(enumerate_bases(Presentation(4, {{1, 2, 3, 4}, {2, 3, 4}}))).h ==
      hvec({1, 5, 1}));
  CHECK(h_vector(enumerate_bases(Presentation(4, {{1, 2, 3, 4}, {1, 2, 3, 4}})))
            .h == hvec({1, 6, 1}));
  CHECK(
      h_vector(enumerate_bases(Presentation(4, {{1, 2}, {2, 3}, {3, 4}}))).h ==
      hvec({1, 4, 1}));
  HilbertSummary s13 =
      h_vector(enumerate_bases(Presentation(4, {{1, 2, 3}, {2, 3, 4}})));
  CHECK(s13.dim == 4);
}

TEST_CASE("second Veronese of the triangle is not palindromic") {
  // brute-force oracle: H(d) = (2d+1)(2d+2)/2 lattice points in the
  // dilated triangle, so h = (1,3)
  BaseSet b = enumerate_bases(Presentation(3, {{1, 2, 3}, {1, 2, 3}}));
  ConeDescription c = facet_enumeration(b.points);
  SemigroupLattice lat = lattice_of(b);
  for (long d = 0; d <= 5; ++d)
    CHECK(hilbert_function(c, lat, d) == (2 * d + 1) * (2 * d + 2) / 2);
  HilbertSummary s = h_vector(b);
  CHECK(s.dim == 3);
  CHECK(s.h == hvec({1, 3}));
}

TEST_CASE("canonical module generators") {
  CHECK(canonical_generators(enumerate_bases(cyclic_presentation(3))) ==
        std::vector<IntVec>{vec({1, 1, 1})});
  CHECK(canonical_generators(enumerate_bases(
            Presentation(3, {{1, 2, 3}, {1, 2, 3}, {2, 3}}))) ==
        std::vector<IntVec>{vec({1, 1, 1})});
  std::vector<IntVec> veronese_gens = canonical_generators(
      enumerate_bases(Presentation(3, {{1, 2, 3}, {1, 2, 3}})));
  CHECK(veronese_gens.size() > 1);
}

TEST_CASE("gorenstein verdicts") {
  HilbertSummary s3 = is_gorenstein(cyclic_presentation(3));
  CHECK(s3.gorenstein);
  CHECK(s3.canonical_generators ==
        std::vector<IntVec>{vec({1, 1, 1})});

  HilbertSummary s4 = is_gorenstein(cyclic_presentation(4));
  CHECK(s4.gorenstein);
  CHECK(s4.canonical_generators ==
        std::vector<IntVec>{vec({1, 1, 1, 1})});

  HilbertSummary segre = is_gorenstein(Presentation(3, {{1, 2}, {2, 3}}));
  CHECK(segre.gorenstein);

  HilbertSummary veronese =
      is_gorenstein(Presentation(3, {{1, 2, 3}, {1, 2, 3}}));
  CHECK_FALSE(veronese.gorenstein);
  CHECK(veronese.h == hvec({1, 3}));
  CHECK(veronese.canonical_generators.size() >= 2);

  CHECK_THROWS_AS(is_gorenstein(cyclic_presentation(7)), budget_error);
}

TEST_CASE("single-point base is a polynomial subring") {
  HilbertSummary s = is_gorenstein(Presentation(2, {{1}, {2}}));
  CHECK(s.gorenstein);
  CHECK(s.h == hvec({1}));
}

TEST_CASE("H(0)=1 and H(1)=|base| for assorted presentations") {
  std::vector<Presentation> corpus = {
      cyclic_presentation(3), cyclic_presentation(4),
      Presentation(4, {{1, 2, 3}, {2, 3, 4}}),
      Presentation(3, {{1, 3}, {2}}),
      Presentation(2, {{1, 2}, {1, 2}, {1}})};
  for (const Presentation& p : corpus) {
    BaseSet b = enumerate_bases(p);
    ConeDescription c = facet_enumeration(b.points);
    SemigroupLattice lat = lattice_of(b);
    CHECK(hilbert_function(c, lat, 0) == 1);
    CHECK(hilbert_function(c, lat, 1) ==
          static_cast<long>(b.points.size()));
  }
}

TEST_CASE("slice counts match the multiplicative semigroup (normality)") {
  std::vector<Presentation> corpus = {
      cyclic_presentation(3),
      Presentation(4, {{1, 2, 3}, {2, 3, 4}}),
      Presentation(4, {{1, 2, 3, 4}, {2, 3, 4}}),
      Presentation(4, {{1, 2}, {2, 3}, {3, 4}}),
      Presentation(3, {{1, 2}, {1, 2, 3}, {2, 3}})};
  for (const Presentation& p : corpus) {
    BaseSet b = enumerate_bases(p);
    ConeDescription c = facet_enumeration(b.points);
    SemigroupLattice lat = lattice_of(b);
    std::set<IntVec> layer = {IntVec(b.points[0].size(), 0)};
    for (long d = 1; d <= 4; ++d) {
      std::set<IntVec> next;
      for (const IntVec& x : layer)
        for (const IntVec& g : b.points) {
          IntVec y = x;
          for (std::size_t i = 0; i < y.size(); ++i) y[i] += g[i];
          next.insert(std::move(y));
        }
      layer = std::move(next);
      CHECK(static_cast<long>(layer.size()) == hilbert_function(c, lat, d));
    }
  }
}

TEST_CASE("interior points absorb base points (ideal property)") {
  BaseSet b = enumerate_bases(cyclic_presentation(4));
  ConeDescription c = facet_enumeration(b.points);
  SemigroupLattice lat = lattice_of(b);
  for (long d = 1; d <= 3; ++d) {
    std::vector<IntVec> next = points_at_degree(c, lat, d + 1, true);
    std::set<IntVec> next_set(next.begin(), next.end());
    for (const IntVec& p : points_at_degree(c, lat, d, true))
      for (const IntVec& g : b.points) {
        IntVec y = p;
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += g[i];
        CHECK(next_set.count(y) == 1);
      }
  }
}
