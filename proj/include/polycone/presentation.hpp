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
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "polycone/linalg.hpp"

namespace polycone {

/// An ordered list of nonempty subsets of {1,...,n}. Each set is kept as a
/// sorted list of 1-based indices; the list order is significant only as a
/// multiset (repeated sets are allowed).
struct Presentation {
  int n = 0;
  std::vector<std::vector<int>> sets;

  Presentation() = default;
  Presentation(int ground, std::vector<std::vector<int>> s)
      : n(ground), sets(std::move(s)) {
    for (auto& set : sets) {
      std::sort(set.begin(), set.end());
      set.erase(std::unique(set.begin(), set.end()), set.end());
    }
    validate();
  }

  int m() const { return static_cast<int>(sets.size()); }

  void validate() const {
    if (n < 1) throw std::invalid_argument("presentation: n must be >= 1");
    if (sets.empty())
      throw std::invalid_argument("presentation: needs at least one set");
    for (const auto& set : sets) {
      if (set.empty())
        throw std::invalid_argument("presentation: empty set");
      for (int e : set)
        if (e < 1 || e > n)
          throw std::invalid_argument("presentation: index out of range");
    }
  }

  bool operator==(const Presentation& o) const {
    return n == o.n && sets == o.sets;
  }
  bool operator<(const Presentation& o) const {
    if (n != o.n) return n < o.n;
    return sets < o.sets;
  }
};

/// Base points of a transversal polymatroid: deduplicated exponent vectors,
/// lexicographically sorted. Every point has coordinate sum m.
struct BaseSet {
  Presentation presentation;
  std::vector<IntVec> points;
};

/// The presentation {1,2},{2,3},...,{n-1,n},{n,1}.
inline Presentation cyclic_presentation(int n) {
  if (n < 3) throw std::domain_error("cyclic_presentation: n must be >= 3");
  std::vector<std::vector<int>> sets;
  for (int i = 1; i < n; ++i) sets.push_back({i, i + 1});
  sets.push_back({n, 1});
  return Presentation(n, std::move(sets));
}

/// All vectors sum_k e_{i_k} with i_k ranging over the k-th set.
inline BaseSet enumerate_bases(const Presentation& p) {
  p.validate();
  std::set<IntVec> out;
  IntVec current(static_cast<std::size_t>(p.n), 0);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == p.sets.size()) {
      out.insert(current);
      return;
    }
    for (int e : p.sets[k]) {
      ++current[static_cast<std::size_t>(e - 1)];
      self(self, k + 1);
      --current[static_cast<std::size_t>(e - 1)];
    }
  };
  rec(rec, 0);
  return BaseSet{p, std::vector<IntVec>(out.begin(), out.end())};
}

/// Discrete polymatroid base axiom: equal coordinate sums, and for every
/// u, v and every i with u_i > v_i some j with u_j < v_j has u - e_i + e_j
/// in the set.
inline bool check_base_exchange(const std::vector<IntVec>& points) {
  if (points.empty())
    throw std::invalid_argument("check_base_exchange: empty list");
  const std::size_t n = points[0].size();
  std::set<IntVec> index(points.begin(), points.end());
  Int sum0 = std::accumulate(points[0].begin(), points[0].end(), Int(0));
  for (const IntVec& p : points) {
    if (p.size() != n) return false;
    if (std::accumulate(p.begin(), p.end(), Int(0)) != sum0) return false;
  }
  for (const IntVec& u : points)
    for (const IntVec& v : points)
      for (std::size_t i = 0; i < n; ++i) {
        if (u[i] <= v[i]) continue;
        bool found = false;
        IntVec w = u;
        --w[i];
        for (std::size_t j = 0; j < n && !found; ++j) {
          if (u[j] >= v[j]) continue;
          ++w[j];
          found = index.count(w) != 0;
          --w[j];
        }
        if (!found) return false;
      }
  return true;
}

/// Lexicographically least presentation over all relabelings of [n]
/// composed with reorderings of the set list (brute-force orbit minimum).
inline Presentation canonical_form(const Presentation& p) {
  p.validate();
  std::vector<int> perm(static_cast<std::size_t>(p.n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<int>> best;
  bool has_best = false;
  do {
    std::vector<std::vector<int>> image = p.sets;
    for (auto& set : image) {
      for (int& e : set) e = perm[static_cast<std::size_t>(e - 1)];
      std::sort(set.begin(), set.end());
    }
    std::sort(image.begin(), image.end());
    if (!has_best || image < best) {
      best = std::move(image);
      has_best = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Presentation(p.n, std::move(best));
}

/// Parses `n=4; {1,2},{2,3},{3,4},{4,1}` (whitespace-insensitive).
inline Presentation parse_presentation(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.rfind("n=", 0) != 0)
    throw std::invalid_argument("presentation syntax: expected 'n='");
  std::size_t pos = 2;
  std::size_t semi = s.find(';', pos);
  if (semi == std::string::npos)
    throw std::invalid_argument("presentation syntax: expected ';'");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(s.substr(pos, semi - pos), &used);
    if (used != semi - pos) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("presentation syntax: bad ground-set size");
  }
  std::vector<std::vector<int>> sets;
  pos = semi + 1;
  while (pos < s.size()) {
    if (s[pos] != '{')
      throw std::invalid_argument("presentation syntax: expected '{'");
    std::size_t close = s.find('}', pos);
    if (close == std::string::npos)
      throw std::invalid_argument("presentation syntax: unclosed '{'");
    std::vector<int> set;
    std::string body = s.substr(pos + 1, close - pos - 1);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        set.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw std::invalid_argument("presentation syntax: bad index");
      }
    }
    sets.push_back(std::move(set));
    pos = close + 1;
    if (pos < s.size()) {
      if (s[pos] != ',')
        throw std::invalid_argument("presentation syntax: expected ','");
      ++pos;
    }
  }
  return Presentation(n, std::move(sets));
}

inline std::string to_string(const Presentation& p) {
  std::ostringstream out;
  out << "n=" << p.n << "; ";
  for (std::size_t k = 0; k < p.sets.size(); ++k) {
    if (k) out << ",";
    out << "{";
    for (std::size_t i = 0; i < p.sets[k].size(); ++i) {
      if (i) out << ",";
      out << p.sets[k][i];
    }
    out << "}";
  }
  return out.str();
}

}  // namespace polycone
