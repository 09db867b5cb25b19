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

#include "polycone/cyclic.hpp"

using namespace polycone;

namespace {
IntVec vec(std::initializer_list<long long> v) {
  return IntVec(v.begin(), v.end());
}
}  // namespace

TEST_CASE("special points layout") {
  auto [r_list, q_list] = special_points(4);
  CHECK(r_list == std::vector<IntVec>{vec({2, 1, 1, 0}), vec({2, 1, 0, 1}),
                                      vec({2, 0, 1, 1})});
  CHECK(q_list ==
        std::vector<IntVec>{vec({1, 2, 1, 0}), vec({1, 1, 2, 0})});
  CHECK_THROWS_AS(special_points(2), std::domain_error);
  for (int n = 3; n <= 9; ++n) {
    auto [r, q] = special_points(n);
    CHECK(r.size() + q.size() == static_cast<std::size_t>(2 * n - 3));
    for (const IntVec& p : r) {
      Int s = 0;
      for (const Int& x : p) s += x;
      CHECK(s == n);
    }
    for (const IntVec& p : q) {
      Int s = 0;
      for (const Int& x : p) s += x;
      CHECK(s == n);
    }
  }
}

TEST_CASE("matrix_A rows") {
  CHECK(matrix_A(4, 2) == IntMat{vec({2, 1, 1, 0}), vec({2, 1, 0, 1}),
                                 vec({1, 2, 1, 0})});
  CHECK_THROWS_AS(matrix_A(4, 0), std::domain_error);
  CHECK_THROWS_AS(matrix_A(4, 4), std::domain_error);
}

TEST_CASE("matrix_A has rank n-1 and kernel proportional to the interval "
          "normal") {
  for (int n = 3; n <= 8; ++n)
    for (int i = 1; i <= n - 1; ++i) {
      IntMat a = matrix_A(n, i);
      CHECK(rank(a) == n - 1);
      IntVec k = kernel_line(a);
      IntVec expected = interval_normal(CyclicInterval(n, 1, i)).normal;
      bool proportional = k == expected;
      if (!proportional) {
        IntVec neg = expected;
        for (Int& x : neg) x = -x;
        proportional = k == neg;
      }
      CHECK(proportional);
    }
}

TEST_CASE("kernel of A_2 for n=5 matches the closed form") {
  CHECK(kernel_line(matrix_A(5, 2)) == vec({-2, -2, 3, 3, 3}));
  IntVec k3 = kernel_line(matrix_A(3, 1));
  CHECK((k3 == vec({-1, 2, 2})));
}

TEST_CASE("interval normals") {
  CHECK(interval_normal(CyclicInterval(4, 1, 2)).normal ==
        vec({-1, -1, 3, 3}));
  CHECK(interval_normal(CyclicInterval(4, 1, 3)).normal ==
        vec({0, 0, 0, 1}));
  CHECK(interval_normal(CyclicInterval(3, 2, 1)).normal ==
        vec({2, -1, 2}));
  CHECK(interval_normal(CyclicInterval(4, 1, 1)).normal ==
        vec({-1, 1, 1, 1}));
  // wraparound interval {4,1} for n=4
  CHECK(interval_normal(CyclicInterval(4, 4, 2)).normal ==
        vec({-1, 3, 3, -1}));
}

TEST_CASE("predicted facet set size and positivity") {
  for (int n = 3; n <= 10; ++n) {
    PredictedNormals pred = predicted_facets(n);
    CHECK(pred.normals.size() == static_cast<std::size_t>(n * (n - 1)));
    IntVec ones(static_cast<std::size_t>(n), 1);
    for (const auto& [iv, h] : pred.normals) CHECK(dot(h.normal, ones) > 0);
  }
}

TEST_CASE("predicted normals are nonnegative on every cyclic base point") {
  for (int n = 3; n <= 6; ++n) {
    BaseSet b = enumerate_bases(cyclic_presentation(n));
    for (const auto& [iv, h] : predicted_facets(n).normals)
      for (const IntVec& p : b.points) CHECK(dot(h.normal, p) >= 0);
  }
}

TEST_CASE("two-coordinate points lie on their leading hyperplane") {
  CHECK(lemma33_holds(vec({2, 1, 1, 0})));
  CHECK_THROWS_AS(lemma33_holds(vec({1, 1, 1})), std::domain_error);
  CHECK_THROWS_AS(lemma33_holds(vec({3, 0, 0})), std::domain_error);
  // exhaustive over admissible points, n in 3..7
  for (int n = 3; n <= 7; ++n) {
    IntVec v(static_cast<std::size_t>(n), 0);
    long admissible = 0;
    for (;;) {
      Int sum = 0;
      bool has_two = false;
      for (const Int& x : v) {
        sum += x;
        if (x == 2) has_two = true;
      }
      if (sum == n && has_two) {
        ++admissible;
        CHECK(lemma33_holds(v));
      }
      std::size_t i = 0;
      while (i < v.size() && v[i] == 2) v[i++] = 0;
      if (i == v.size()) break;
      ++v[i];
    }
    CHECK(admissible > 0);
  }
}

TEST_CASE("facet description matches the enumeration for small n") {
  for (int n = 3; n <= 5; ++n) {
    TheoremReport rep = verify_theorem(n);
    CHECK(rep.success);
    CHECK(rep.facet_count == n * (n - 1));
    CHECK(rep.base_count == (1L << n) - 1);
  }
  CHECK_THROWS_AS(verify_theorem(8), budget_error);
  CHECK_THROWS_AS(verify_theorem(2), std::domain_error);
}

TEST_CASE("conjecture probe") {
  ConjectureReport r1 =
      conjecture_probe(Presentation(3, {{1, 2}, {1, 2, 3}, {2, 3}}));
  CHECK(r1.facets_subset_of_predicted);
  CHECK(r1.gorenstein);

  ConjectureReport r7 = conjecture_probe(Presentation(
      4, {{1, 2, 3, 4}, {1, 2, 3, 4}, {1, 2, 3, 4}, {1, 2, 3, 4}}));
  CHECK(r7.facets_subset_of_predicted);
  CHECK(r7.facet_count == 4);
  CHECK(r7.gorenstein);

  ConjectureReport rneg =
      conjecture_probe(Presentation(3, {{1, 2, 3}, {1, 2, 3}}));
  CHECK_FALSE(rneg.gorenstein);
}
