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

#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "polycone/classify.hpp"
#include "polycone/cyclic.hpp"
#include "polycone/errors.hpp"
#include "polycone/hilbert.hpp"
#include "polycone/io.hpp"
#include "polycone/presentation.hpp"

namespace polycone::cli {

inline constexpr const char* kVersion = "polycone 1.0.0";

// Exit code contract.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kBudgetExceeded = 3;

struct Budget {
  int verify_n = 7;
  int gorenstein_n = 6;
  int classify_n = 4;
  long degree_cap = -1;  // -1: per-presentation default dim + 6

  /// POLYCONE_BUDGET_N raises the n caps for verify and classify.
  static Budget from_environment() {
    Budget b;
    if (const char* env = std::getenv("POLYCONE_BUDGET_N")) {
      int v = std::atoi(env);
      if (v > 0) {
        b.verify_n = std::max(b.verify_n, v);
        b.classify_n = std::max(b.classify_n, v);
        b.gorenstein_n = std::max(b.gorenstein_n, v);
      }
    }
    return b;
  }
};

struct RunReport {
  nlohmann::json document;
  int exit_code = kOk;
  std::string text;
};

namespace detail {

inline nlohmann::json to_json(const IntVec& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const Int& x : v) a.push_back(x.convert_to<long long>());
  return a;
}

inline nlohmann::json to_json(const std::vector<IntVec>& rows) {
  nlohmann::json a = nlohmann::json::array();
  for (const IntVec& r : rows) a.push_back(to_json(r));
  return a;
}

inline nlohmann::json budget_json(const Budget& b) {
  return {{"verify_n", b.verify_n},
          {"gorenstein_n", b.gorenstein_n},
          {"classify_n", b.classify_n},
          {"degree_cap", b.degree_cap}};
}

inline nlohmann::json wrap(const std::string& command,
                           const nlohmann::json& input,
                           const nlohmann::json& result, const Budget& b) {
  return {{"command", command},
          {"input", input},
          {"result", result},
          {"budget", budget_json(b)},
          {"versions", kVersion}};
}

inline std::string joined(const IntVec& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ",";
    out << v[i];
  }
  out << ")";
  return out.str();
}

}  // namespace detail

inline RunReport cmd_bases(const Presentation& p, const Budget& b) {
  BaseSet base = enumerate_bases(p);
  RunReport rep;
  rep.document = detail::wrap(
      "bases", to_string(p),
      {{"count", base.points.size()}, {"points", detail::to_json(base.points)}},
      b);
  std::ostringstream out;
  out << base.points.size() << " base points\n";
  for (const IntVec& pt : base.points) out << detail::joined(pt) << "\n";
  rep.text = out.str();
  return rep;
}

inline RunReport cmd_facets(const Presentation& p, const Budget& b) {
  BaseSet base = enumerate_bases(p);
  ConeDescription cone = facet_enumeration(base.points);
  RunReport rep;
  std::vector<IntVec> normals;
  for (const Halfspace& f : cone.facets) normals.push_back(f.normal);
  rep.document = detail::wrap("facets", to_string(p),
                              {{"dim", cone.dim},
                               {"span_equations",
                                detail::to_json(cone.span_equations)},
                               {"facets", detail::to_json(normals)}},
                              b);
  std::ostringstream out;
  out << "dim " << cone.dim << ", " << cone.facets.size() << " facets\n";
  for (const IntVec& a : normals) out << detail::joined(a) << "\n";
  rep.text = out.str();
  return rep;
}

inline RunReport cmd_predict(int n, const Budget& b) {
  PredictedNormals pred = predicted_facets(n);
  RunReport rep;
  nlohmann::json entries = nlohmann::json::array();
  std::ostringstream out;
  out << pred.normals.size() << " predicted facet normals\n";
  for (const auto& [iv, h] : pred.normals) {
    nlohmann::json members = nlohmann::json::array();
    for (int e : iv.members()) members.push_back(e);
    entries.push_back({{"interval", members}, {"normal", detail::to_json(h.normal)}});
    out << detail::joined(h.normal) << "  interval {";
    auto mem = iv.members();
    for (std::size_t i = 0; i < mem.size(); ++i)
      out << (i ? "," : "") << mem[i];
    out << "}\n";
  }
  rep.document = detail::wrap("predict", n, {{"normals", entries}}, b);
  rep.text = out.str();
  return rep;
}

inline RunReport cmd_verify(int n, const Budget& b) {
  TheoremReport t = verify_theorem(n, b.verify_n);
  RunReport rep;
  rep.document = detail::wrap("verify", n,
                              {{"facets_match", t.facets_match},
                               {"dim_ok", t.dim_ok},
                               {"cardinality_ok", t.cardinality_ok},
                               {"extreme_rays_ok", t.extreme_rays_ok},
                               {"facet_count", t.facet_count},
                               {"base_count", t.base_count},
                               {"success", t.success}},
                              b);
  std::ostringstream out;
  out << "verify n=" << n << ": " << (t.success ? "success" : "FAILED")
      << " (facets " << t.facet_count << ", bases " << t.base_count << ")\n";
  rep.text = out.str();
  rep.exit_code = t.success ? kOk : kVerificationFailed;
  return rep;
}

inline RunReport cmd_gorenstein(const Presentation& p, const Budget& b) {
  HilbertSummary s = is_gorenstein(p, b.degree_cap, b.gorenstein_n);
  RunReport rep;
  rep.document = detail::wrap(
      "gorenstein", to_string(p),
      {{"dim", s.dim},
       {"h", detail::to_json(s.h)},
       {"degree_cap", s.degree_cap},
       {"gorenstein", s.gorenstein},
       {"canonical_generators", detail::to_json(s.canonical_generators)}},
      b);
  std::ostringstream out;
  out << (s.gorenstein ? "Gorenstein" : "not Gorenstein") << ", dim " << s.dim
      << ", h = (";
  for (std::size_t i = 0; i < s.h.size(); ++i)
    out << (i ? "," : "") << s.h[i];
  out << "), canonical generators:";
  for (const IntVec& g : s.canonical_generators)
    out << " " << detail::joined(g);
  out << "\n";
  rep.text = out.str();
  return rep;
}

inline RunReport cmd_hilbert(const Presentation& p, const Budget& b) {
  BaseSet base = enumerate_bases(p);
  HilbertSummary s = h_vector(base, b.degree_cap);
  RunReport rep;
  rep.document = detail::wrap("hilbert", to_string(p),
                              {{"dim", s.dim},
                               {"h", detail::to_json(s.h)},
                               {"degree_cap", s.degree_cap}},
                              b);
  std::ostringstream out;
  out << "dim " << s.dim << ", h = (";
  for (std::size_t i = 0; i < s.h.size(); ++i)
    out << (i ? "," : "") << s.h[i];
  out << ") over (1-t)^" << s.dim << "\n";
  rep.text = out.str();
  return rep;
}

inline RunReport cmd_probe(const Presentation& p, const Budget& b) {
  ConjectureReport c = conjecture_probe(p, b.degree_cap);
  RunReport rep;
  rep.document = detail::wrap(
      "probe", to_string(p),
      {{"facets_subset_of_predicted", c.facets_subset_of_predicted},
       {"gorenstein", c.gorenstein},
       {"facet_count", c.facet_count}},
      b);
  std::ostringstream out;
  out << "facets subset of predicted: "
      << (c.facets_subset_of_predicted ? "yes" : "no")
      << "; Gorenstein: " << (c.gorenstein ? "yes" : "no") << "\n";
  rep.text = out.str();
  return rep;
}

inline RunReport cmd_classify(int n, int m_min, int m_max, const Budget& b) {
  std::vector<GorensteinClass> classes =
      classify(n, m_min, m_max, b.classify_n, b.degree_cap);
  RunReport rep;
  nlohmann::json entries = nlohmann::json::array();
  std::ostringstream out;
  out << classes.size() << " Gorenstein classes for n=" << n << ", m in ["
      << m_min << "," << m_max << "]\n";
  for (const GorensteinClass& c : classes) {
    entries.push_back(
        {{"presentation", to_string(c.canonical)},
         {"dim", c.dim},
         {"h", detail::to_json(c.h)},
         {"canonical_generators", detail::to_json(c.canonical_generators)},
         {"family", c.family}});
    out << to_string(c.canonical) << "  h=(";
    for (std::size_t i = 0; i < c.h.size(); ++i)
      out << (i ? "," : "") << c.h[i];
    out << ")";
    if (!c.family.empty()) out << "  [" << c.family << "]";
    out << "\n";
  }
  rep.document = detail::wrap(
      "classify",
      {{"n", n}, {"m_min", m_min}, {"m_max", m_max}},
      {{"classes", entries}}, b);
  rep.text = out.str();
  return rep;
}

inline RunReport cmd_emit_normaliz(const Presentation& p, const Budget& b) {
  BaseSet base = enumerate_bases(p);
  RunReport rep;
  std::string text = emit_normaliz(base);
  rep.document =
      detail::wrap("emit-normaliz", to_string(p), {{"text", text}}, b);
  rep.text = text;
  return rep;
}

}  // namespace polycone::cli
