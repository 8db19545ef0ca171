//  Copyright 2026 The predual authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef PREDUAL_IO_HPP_
#define PREDUAL_IO_HPP_

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "predual/axioms.hpp"
#include "predual/morphism.hpp"
#include "predual/space.hpp"
#include "predual/spectrum.hpp"
#include "predual/structure.hpp"

namespace predual {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Structure documents
// ---------------------------------------------------------------------------
// {"elements":[labels], "leq":[[bool]] or [["p","q"]], "prec":[["p","q"]],
//  "join": optional [[label]], "bottom": label,
//  "closure": optional "reflexive-transitive"}
// Pair lists are taken literally unless the closure flag is present.

namespace io_detail {

inline int label_index(const std::vector<std::string>& labels,
                       const std::string& label, const char* what) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  throw Error(Errc::ParseError,
              std::string(what) + " references unknown element '" + label + "'");
}

inline std::vector<Subset> relation_from_json(
    const json& rel, const std::vector<std::string>& labels, bool closure,
    const char* what) {
  int n = static_cast<int>(labels.size());
  std::vector<Subset> rows(n, 0);
  if (!rel.is_array())
    throw Error(Errc::ParseError, std::string(what) + " must be an array");
  bool matrix = !rel.empty() && rel[0].is_array() && !rel[0].empty() &&
                rel[0][0].is_boolean();
  if (matrix) {
    if (static_cast<int>(rel.size()) != n)
      throw Error(Errc::ParseError, std::string(what) + " matrix has wrong size");
    for (int p = 0; p < n; ++p) {
      if (static_cast<int>(rel[p].size()) != n)
        throw Error(Errc::ParseError,
                    std::string(what) + " matrix row has wrong size");
      for (int q = 0; q < n; ++q)
        if (rel[p][q].get<bool>()) rows[p] |= bit(q);
    }
    return rows;
  }
  for (const auto& pair : rel) {
    if (!pair.is_array() || pair.size() != 2)
      throw Error(Errc::ParseError,
                  std::string(what) + " pair list entries must be 2-arrays");
    int p = label_index(labels, pair[0].get<std::string>(), what);
    int q = label_index(labels, pair[1].get<std::string>(), what);
    rows[p] |= bit(q);
  }
  if (closure) {
    for (int p = 0; p < n; ++p) rows[p] |= bit(p);
    for (;;) {
      bool changed = false;
      for (int p = 0; p < n; ++p)
        for_each_in(rows[p], [&](int q) {
          Subset missing = rows[q] & ~rows[p];
          if (missing) {
            rows[p] |= missing;
            changed = true;
          }
        });
      if (!changed) break;
    }
  }
  return rows;
}

}  // namespace io_detail

inline StructureData structure_data_from_json(const json& j) {
  if (!j.is_object()) throw Error(Errc::ParseError, "expected an object");
  StructureData d;
  if (!j.contains("elements") || !j["elements"].is_array())
    throw Error(Errc::ParseError, "missing elements array");
  for (const auto& e : j["elements"]) d.elements.push_back(e.get<std::string>());
  for (std::size_t i = 0; i < d.elements.size(); ++i)
    for (std::size_t k = i + 1; k < d.elements.size(); ++k)
      if (d.elements[i] == d.elements[k])
        throw Error(Errc::ParseError, "duplicate element label " + d.elements[i]);
  bool closure = j.contains("closure") &&
                 j["closure"].get<std::string>() == "reflexive-transitive";
  if (!j.contains("leq")) throw Error(Errc::ParseError, "missing leq");
  d.leq = io_detail::relation_from_json(j["leq"], d.elements, closure, "leq");
  if (!j.contains("prec")) throw Error(Errc::ParseError, "missing prec");
  d.prec = io_detail::relation_from_json(j["prec"], d.elements, closure, "prec");
  if (j.contains("join")) {
    int n = static_cast<int>(d.elements.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n, -1));
    const auto& jj = j["join"];
    if (!jj.is_array() || static_cast<int>(jj.size()) != n)
      throw Error(Errc::ParseError, "join table has wrong shape");
    for (int p = 0; p < n; ++p) {
      if (static_cast<int>(jj[p].size()) != n)
        throw Error(Errc::ParseError, "join table has wrong shape");
      for (int q = 0; q < n; ++q)
        table[p][q] =
            io_detail::label_index(d.elements, jj[p][q].get<std::string>(), "join");
    }
    d.join = std::move(table);
  }
  if (!j.contains("bottom")) throw Error(Errc::ParseError, "missing bottom");
  d.bottom =
      io_detail::label_index(d.elements, j["bottom"].get<std::string>(), "bottom");
  return d;
}

inline Structure structure_from_json(const json& j) {
  return validate_structure(structure_data_from_json(j));
}

inline json structure_to_json(const Structure& s) {
  json j;
  j["elements"] = s.labels();
  std::vector<std::vector<bool>> leq(s.size(), std::vector<bool>(s.size()));
  for (int p = 0; p < s.size(); ++p)
    for (int q = 0; q < s.size(); ++q) leq[p][q] = s.leq(p, q);
  j["leq"] = leq;
  json prec = json::array();
  for (int p = 0; p < s.size(); ++p)
    for (int q = 0; q < s.size(); ++q)
      if (s.prec(p, q)) prec.push_back({s.label(p), s.label(q)});
  j["prec"] = prec;
  std::vector<std::vector<std::string>> join(s.size(),
                                             std::vector<std::string>(s.size()));
  for (int p = 0; p < s.size(); ++p)
    for (int q = 0; q < s.size(); ++q) join[p][q] = s.label(s.join(p, q));
  j["join"] = join;
  j["bottom"] = s.label(s.bottom());
  return j;
}

inline json parse_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(Errc::ParseError, "malformed JSON");
  return j;
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

inline Structure load_structure(const std::string& path) {
  return structure_from_json(load_json_file(path));
}

// ---------------------------------------------------------------------------
// Space documents: {"points":[labels], "opens":[[labels]], "basis":[indices]}
// ---------------------------------------------------------------------------

inline FiniteSpace space_from_json(const json& j) {
  if (!j.is_object()) throw Error(Errc::ParseError, "expected an object");
  if (!j.contains("points") || !j.contains("opens") || !j.contains("basis"))
    throw Error(Errc::ParseError, "space document needs points, opens, basis");
  std::vector<std::string> labels;
  for (const auto& p : j["points"]) labels.push_back(p.get<std::string>());
  std::vector<Subset> opens;
  for (const auto& o : j["opens"]) {
    if (!o.is_array())
      throw Error(Errc::ParseError, "opens entries must be arrays of labels");
    Subset m = 0;
    for (const auto& p : o)
      m |= bit(io_detail::label_index(labels, p.get<std::string>(), "opens"));
    opens.push_back(m);
  }
  std::vector<Subset> basis;
  for (const auto& i : j["basis"]) {
    int idx = i.get<int>();
    if (idx < 0 || idx >= static_cast<int>(opens.size()))
      throw Error(Errc::ParseError, "basis index out of range");
    basis.push_back(opens[idx]);
  }
  return validate_space(std::move(labels), std::move(opens), std::move(basis));
}

inline FiniteSpace load_space(const std::string& path) {
  return space_from_json(load_json_file(path));
}

inline json space_to_json(const FiniteSpace& x) {
  json j;
  j["points"] = x.point_labels;
  json opens = json::array();
  for (Subset o : x.topo.opens) {
    json names = json::array();
    for_each_in(o, [&](int p) { names.push_back(x.point_labels[p]); });
    opens.push_back(names);
  }
  j["opens"] = opens;
  j["basis"] = x.basis;
  return j;
}

// ---------------------------------------------------------------------------
// Morphism documents:
// {"source": ref, "target": ref, "pairs":[["p","p'"]]} where ref is a path
// (resolved relative to the document) or an inline structure object.
// ---------------------------------------------------------------------------

struct LoadedMorphism {
  Structure source;
  Structure target;
  RelMorphism rel;
  json source_ref;
  json target_ref;
};

inline Structure resolve_structure_ref(const json& ref,
                                       const std::string& base_dir) {
  if (ref.is_object()) return structure_from_json(ref);
  if (ref.is_string()) {
    std::filesystem::path p(ref.get<std::string>());
    if (p.is_relative() && !base_dir.empty())
      p = std::filesystem::path(base_dir) / p;
    return load_structure(p.string());
  }
  throw Error(Errc::ParseError, "structure ref must be a path or an object");
}

inline LoadedMorphism morphism_from_json(const json& j,
                                         const std::string& base_dir) {
  if (!j.is_object() || !j.contains("source") || !j.contains("target") ||
      !j.contains("pairs"))
    throw Error(Errc::ParseError, "morphism document needs source, target, pairs");
  LoadedMorphism lm{resolve_structure_ref(j["source"], base_dir),
                    resolve_structure_ref(j["target"], base_dir),
                    {},
                    j["source"],
                    j["target"]};
  lm.rel.source_size = lm.source.size();
  lm.rel.target_size = lm.target.size();
  lm.rel.rows.assign(lm.source.size(), 0);
  for (const auto& pair : j["pairs"]) {
    if (!pair.is_array() || pair.size() != 2)
      throw Error(Errc::ParseError, "pairs entries must be 2-arrays");
    int p = io_detail::label_index(lm.source.labels(), pair[0].get<std::string>(),
                                   "pairs");
    int q = io_detail::label_index(lm.target.labels(), pair[1].get<std::string>(),
                                   "pairs");
    lm.rel.rows[p] |= bit(q);
  }
  return lm;
}

inline LoadedMorphism load_morphism(const std::string& path) {
  std::filesystem::path p(path);
  return morphism_from_json(load_json_file(path), p.parent_path().string());
}

inline json morphism_to_json(const Structure& s, const Structure& t,
                             const RelMorphism& m, const json& source_ref,
                             const json& target_ref) {
  json j;
  j["source"] = source_ref;
  j["target"] = target_ref;
  json pairs = json::array();
  for (int p = 0; p < s.size(); ++p)
    for_each_in(m.rows[p],
                [&](int q) { pairs.push_back({s.label(p), t.label(q)}); });
  j["pairs"] = pairs;
  return j;
}

// ---------------------------------------------------------------------------
// Spectrum export: {"points":[[labels]], "basic_opens":{label:[indices]}}
// ---------------------------------------------------------------------------

inline json spectrum_to_json(const Structure& s, const SpectrumResult& spec) {
  json j;
  json points = json::array();
  for (Subset p : spec.points) {
    json members = json::array();
    for_each_in(p, [&](int e) { members.push_back(s.label(e)); });
    points.push_back(members);
  }
  j["points"] = points;
  json basic = json::object();
  for (int p = 0; p < s.size(); ++p) {
    json idx = json::array();
    for_each_in(spec.basic_opens[p], [&](int i) { idx.push_back(i); });
    basic[s.label(p)] = idx;
  }
  j["basic_opens"] = basic;
  return j;
}

// ---------------------------------------------------------------------------
// DOT export
// ---------------------------------------------------------------------------

namespace io_detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace io_detail

/// Hasse diagram of <= (solid) with the -< pairs overlaid dashed.
inline std::string structure_dot(const Structure& s) {
  std::ostringstream out;
  out << "digraph structure {\n  rankdir=BT;\n";
  for (int p = 0; p < s.size(); ++p)
    out << "  " << io_detail::dot_quote(s.label(p)) << ";\n";
  for (int p = 0; p < s.size(); ++p)
    for (int q = 0; q < s.size(); ++q) {
      if (p == q || !s.leq(p, q)) continue;
      bool covering = true;
      for (int r = 0; r < s.size() && covering; ++r)
        if (r != p && r != q && s.leq(p, r) && s.leq(r, q)) covering = false;
      if (covering)
        out << "  " << io_detail::dot_quote(s.label(p)) << " -> "
            << io_detail::dot_quote(s.label(q)) << ";\n";
    }
  for (int p = 0; p < s.size(); ++p)
    for (int q = 0; q < s.size(); ++q)
      if (p != q && s.prec(p, q))
        out << "  " << io_detail::dot_quote(s.label(p)) << " -> "
            << io_detail::dot_quote(s.label(q))
            << " [style=dashed, constraint=false];\n";
  out << "}\n";
  return out.str();
}

/// Specialization order of the spectrum (Hasse diagram of point inclusion).
inline std::string spectrum_dot(const Structure& s, const SpectrumResult& spec) {
  std::ostringstream out;
  out << "digraph spectrum {\n  rankdir=BT;\n";
  int m = spec.point_count();
  for (int i = 0; i < m; ++i)
    out << "  " << io_detail::dot_quote(s.label_set(spec.points[i])) << ";\n";
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j || !is_subset(spec.points[i], spec.points[j])) continue;
      bool covering = true;
      for (int k = 0; k < m && covering; ++k)
        if (k != i && k != j && is_subset(spec.points[i], spec.points[k]) &&
            is_subset(spec.points[k], spec.points[j]))
          covering = false;
      if (covering)
        out << "  " << io_detail::dot_quote(s.label_set(spec.points[i])) << " -> "
            << io_detail::dot_quote(s.label_set(spec.points[j])) << ";\n";
    }
  out << "}\n";
  return out.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path);
  out << text;
}

}  // namespace predual

#endif  // PREDUAL_IO_HPP_
