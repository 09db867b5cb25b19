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
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace polycone {

using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

inline Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const IntVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

inline Int gcd_of(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  return g;  // 0 for the zero vector
}

/// Divides out the gcd of the entries; sign unchanged.
inline IntVec primitive(const IntVec& v) {
  Int g = gcd_of(v);
  if (g == 0) throw std::domain_error("primitive: zero vector");
  IntVec w = v;
  if (g != 1)
    for (Int& x : w) x /= g;
  return w;
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
inline int rank(IntMat a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  for (const IntVec& r : a)
    if (r.size() != cols) throw std::invalid_argument("rank: ragged matrix");
  std::size_t r = 0;
  Int prev = 1;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j)
        a[i][j] = (a[r][col] * a[i][j] - a[i][col] * a[r][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[r][col];
    ++r;
  }
  return static_cast<int>(r);
}

namespace detail {

inline void sub_scaled(IntVec& a, const Int& q, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= q * b[i];
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;  // truncated
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

}  // namespace detail

/// Row Hermite normal form. Returns the nonzero rows: pivots positive,
/// entries above each pivot reduced into [0, pivot). Row operations are
/// unimodular, so the rows generate the same lattice as the input rows.
inline IntMat hermite_normal_form(IntMat a) {
  if (a.empty()) return a;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    for (;;) {
      std::size_t piv = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (a[i][col] != 0 &&
            (piv == rows || boost::multiprecision::abs(a[i][col]) <
                                boost::multiprecision::abs(a[piv][col])))
          piv = i;
      if (piv == rows) break;
      std::swap(a[r], a[piv]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i)
        if (a[i][col] != 0) {
          detail::sub_scaled(a[i], a[i][col] / a[r][col], a[r]);
          if (a[i][col] != 0) clean = false;
        }
      if (clean) break;
    }
    if (a[r][col] == 0) continue;
    if (a[r][col] < 0)
      for (Int& x : a[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i)
      if (a[i][col] != 0)
        detail::sub_scaled(a[i], detail::floor_div(a[i][col], a[r][col]), a[r]);
    ++r;
  }
  a.resize(r);
  return a;
}

/// Basis (in HNF) of the saturated lattice {x in Z^n : <row, x> = 0 for all
/// rows}. Works on the transposed system [A^T | I] with unimodular row ops.
inline IntMat kernel_basis(const IntMat& rows_in, std::size_t n) {
  const std::size_t k = rows_in.size();
  for (const IntVec& r : rows_in)
    if (r.size() != n) throw std::invalid_argument("kernel_basis: bad length");
  IntMat w(n, IntVec(k + n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) w[i][j] = rows_in[j][i];
    w[i][k + i] = 1;
  }
  // Echelonize the left k columns; rows with zero left part carry the kernel.
  std::size_t r = 0;
  const std::size_t rows = n;
  for (std::size_t col = 0; col < k && r < rows; ++col) {
    for (;;) {
      std::size_t piv = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (w[i][col] != 0 &&
            (piv == rows || boost::multiprecision::abs(w[i][col]) <
                                boost::multiprecision::abs(w[piv][col])))
          piv = i;
      if (piv == rows) break;
      std::swap(w[r], w[piv]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i)
        if (w[i][col] != 0) {
          detail::sub_scaled(w[i], w[i][col] / w[r][col], w[r]);
          if (w[i][col] != 0) clean = false;
        }
      if (clean) break;
    }
    if (w[r][col] != 0) ++r;
  }
  IntMat ker;
  for (std::size_t i = r; i < rows; ++i)
    ker.emplace_back(w[i].begin() + static_cast<std::ptrdiff_t>(k),
                     w[i].end());
  return hermite_normal_form(std::move(ker));
}

/// Primitive generator of a one-dimensional kernel; the last nonzero entry
/// is normalized positive.
inline IntVec kernel_line(const IntMat& rows) {
  if (rows.empty()) throw std::domain_error("kernel_line: empty input");
  IntMat ker = kernel_basis(rows, rows[0].size());
  if (ker.size() != 1)
    throw std::domain_error("kernel_line: kernel dimension is not 1");
  IntVec v = primitive(ker[0]);
  for (std::size_t i = v.size(); i-- > 0;) {
    if (v[i] != 0) {
      if (v[i] < 0)
        for (Int& x : v) x = -x;
      break;
    }
  }
  return v;
}

inline Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (long i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

}  // namespace polycone
