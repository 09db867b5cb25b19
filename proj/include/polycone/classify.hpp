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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polycone/errors.hpp"
#include "polycone/hilbert.hpp"
#include "polycone/presentation.hpp"

namespace polycone {

struct GorensteinClass {
  Presentation canonical;
  long dim = 0;
  std::vector<Int> h;
  std::vector<IntVec> canonical_generators;
  std::string family;  // named reference families matching this class
};

/// Reference families whose Gorenstein property is part of the test corpus,
/// keyed by canonical form.
inline std::vector<std::pair<std::string, Presentation>> known_families(
    int n) {
  std::vector<std::pair<std::string, Presentation>> fams;
  if (n == 3) {
    fams.emplace_back("A", cyclic_presentation(3));
    fams.emplace_back("A'", Presentation(3, {{1, 2}, {1, 2, 3}, {2, 3}}));
    fams.emplace_back("A''", Presentation(3, {{1, 2, 3}, {1, 2, 3}, {2, 3}}));
    fams.emplace_back("A'''",
                      Presentation(3, {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}}));
    fams.emplace_back("A1", Presentation(3, {{1, 2}, {2, 3}}));
  } else if (n == 4) {
    fams.emplace_back("A", cyclic_presentation(4));
    fams.emplace_back("A1",
                      Presentation(4, {{1, 2, 3}, {2, 3}, {3, 4}, {4, 1}}));
    fams.emplace_back("A2",
                      Presentation(4, {{1, 2, 3, 4}, {2, 3}, {3, 4}, {4, 1}}));
    fams.emplace_back(
        "A3", Presentation(4, {{1, 2, 3, 4}, {2, 3, 4}, {3, 4}, {4, 1}}));
    fams.emplace_back(
        "A4", Presentation(4, {{1, 2, 3, 4}, {1, 2, 3, 4}, {3, 4}, {4, 1}}));
    fams.emplace_back(
        "A5", Presentation(4, {{1, 2, 3, 4}, {1, 2, 3, 4}, {1, 3, 4}, {4, 1}}));
    fams.emplace_back(
        "A6",
        Presentation(4, {{1, 2, 3, 4}, {1, 2, 3, 4}, {1, 2, 3, 4}, {4, 1}}));
    fams.emplace_back(
        "A7", Presentation(4, {{1, 2, 3, 4},
                               {1, 2, 3, 4},
                               {1, 2, 3, 4},
                               {1, 2, 3, 4}}));
    fams.emplace_back(
        "A8", Presentation(4, {{1, 2, 3}, {1, 2, 3}, {3, 4}, {4, 1}}));
    fams.emplace_back(
        "A9", Presentation(4, {{1, 2, 3}, {1, 2, 3}, {1, 3, 4}, {4, 1}}));
    fams.emplace_back(
        "A10", Presentation(4, {{1, 2, 3}, {1, 2, 3}, {1, 2, 3, 4}, {4, 1}}));
    // A11 and A12 are printed identically in the source table.
    fams.emplace_back(
        "A11", Presentation(4, {{1, 2, 3}, {1, 2, 3}, {1, 3, 4}, {1, 3, 4}}));
    fams.emplace_back(
        "A12", Presentation(4, {{1, 2, 3}, {1, 2, 3}, {1, 3, 4}, {1, 3, 4}}));
    fams.emplace_back("A13", Presentation(4, {{1, 2, 3}, {2, 3, 4}}));
    fams.emplace_back("A14", Presentation(4, {{1, 2, 3, 4}, {2, 3, 4}}));
    fams.emplace_back("A15", Presentation(4, {{1, 2, 3, 4}, {1, 2, 3, 4}}));
    fams.emplace_back("A16", Presentation(4, {{1, 2}, {2, 3}, {3, 4}}));
  }
  return fams;
}

/// Enumerates all presentations with m sets (m in [m_min, m_max]) over [n]
/// as multisets of nonempty subsets, quotients by canonical_form, and keeps
/// the classes whose base ring is Gorenstein. Sorted by (m, sets).
inline std::vector<GorensteinClass> classify(int n, int m_min, int m_max,
                                             int n_budget = 4,
                                             long degree_cap = -1) {
  if (n < 1) throw std::domain_error("classify: n must be >= 1");
  if (n > n_budget)
    throw budget_error("classify: n exceeds budget; raise the cap");
  if (m_min < 1 || m_max < m_min)
    throw std::domain_error("classify: bad m range");

  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i + 1);
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end());

  std::map<std::string, std::string> family_of;
  for (const auto& [name, pres] : known_families(n)) {
    std::string key = to_string(canonical_form(pres));
    if (family_of.count(key))
      family_of[key] += "," + name;
    else
      family_of[key] = name;
  }

  std::map<Presentation, GorensteinClass> classes;
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t from, int m_left,
                 int m_total) -> void {
    if (m_left == 0) {
      std::vector<std::vector<int>> sets;
      for (std::size_t idx : pick) sets.push_back(subsets[idx]);
      Presentation canon = canonical_form(Presentation(n, std::move(sets)));
      if (classes.count(canon)) return;
      HilbertSummary s =
          is_gorenstein(canon, degree_cap, std::max(n_budget, n));
      if (!s.gorenstein) {
        classes.emplace(canon, GorensteinClass{});  // cache negative too
        return;
      }
      GorensteinClass cls;
      cls.canonical = canon;
      cls.dim = s.dim;
      cls.h = s.h;
      cls.canonical_generators = s.canonical_generators;
      auto it = family_of.find(to_string(canon));
      if (it != family_of.end()) cls.family = it->second;
      classes[canon] = std::move(cls);
      return;
    }
    for (std::size_t idx = from; idx < subsets.size(); ++idx) {
      pick.push_back(idx);
      self(self, idx, m_left - 1, m_total);
      pick.pop_back();
    }
  };
  for (int m = m_min; m <= m_max; ++m) rec(rec, 0, m, m);

  std::vector<GorensteinClass> out;
  for (auto& [canon, cls] : classes)
    if (!cls.canonical.sets.empty()) out.push_back(cls);
  std::sort(out.begin(), out.end(),
            [](const GorensteinClass& a, const GorensteinClass& b) {
              if (a.canonical.m() != b.canonical.m())
                return a.canonical.m() < b.canonical.m();
              return a.canonical < b.canonical;
            });
  return out;
}

}  // namespace polycone
