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

#ifndef PREDUAL_TOPOLOGY_HPP_
#define PREDUAL_TOPOLOGY_HPP_

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "predual/core.hpp"

namespace predual {

/// A finite topology: `opens` is the full open-set family over points
/// 0..point_count-1, kept sorted ascending by mask for determinism.
struct Topology {
  int point_count = 0;
  std::vector<Subset> opens;

  bool is_open(Subset u) const {
    return std::binary_search(opens.begin(), opens.end(), u);
  }
  Subset everything() const { return full_set(point_count); }
};

inline void sort_unique(std::vector<Subset>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

/// Checks the topology axioms: empty set, full set, pairwise unions and
/// intersections. Throws NotATopology otherwise.
inline Topology validate_topology(int point_count, std::vector<Subset> opens) {
  if (point_count < 0 || point_count > kMaxCarrier)
    throw Error(Errc::CarrierTooLarge, "point count outside [0,24]");
  Subset all = full_set(point_count);
  for (Subset o : opens)
    if (!is_subset(o, all))
      throw Error(Errc::NotATopology, "open set references unknown points");
  sort_unique(opens);
  Topology t{point_count, std::move(opens)};
  if (!t.is_open(0)) throw Error(Errc::NotATopology, "missing empty set");
  if (!t.is_open(all)) throw Error(Errc::NotATopology, "missing full set");
  for (Subset a : t.opens)
    for (Subset b : t.opens) {
      if (!t.is_open(a | b))
        throw Error(Errc::NotATopology, "family not closed under union");
      if (!t.is_open(a & b))
        throw Error(Errc::NotATopology, "family not closed under intersection");
    }
  return t;
}

/// Way-below: every open cover of v has a finite subcover of u. Evaluated
/// through directed covers; a directed family of opens in a finite topology
/// has a largest member, so it suffices to look at single opens above v.
/// In a finite space this coincides with containment, which is asserted as
/// a self-check on every call.
inline bool way_below(const Topology& t, Subset u, Subset v) {
  if (!t.is_open(u) || !t.is_open(v))
    throw Error(Errc::NotOpen, "way_below arguments must be open");
  bool result = true;
  for (Subset w : t.opens)
    if (is_subset(v, w) && !is_subset(u, w)) {
      result = false;
      break;
    }
  if (result != is_subset(u, v))
    throw std::logic_error("way_below self-check failed: directed-cover "
                           "result disagrees with containment");
  return result;
}

/// Debug oracle: the raw definition, quantified over every subfamily of
/// opens. Exponential; intended for cross-checking small spaces in tests.
inline bool way_below_cover_oracle(const Topology& t, Subset u, Subset v) {
  if (!t.is_open(u) || !t.is_open(v))
    throw Error(Errc::NotOpen, "way_below arguments must be open");
  int k = static_cast<int>(t.opens.size());
  if (k > 20) throw Error(Errc::BadInput, "cover oracle limited to 20 opens");
  for (std::uint32_t family = 0; family < (1u << k); ++family) {
    Subset covered = 0;
    for (int i = 0; i < k; ++i)
      if (family & (1u << i)) covered |= t.opens[i];
    if (!is_subset(v, covered)) continue;
    // Every subfamily of a finite family is finite, so a finite subcover of
    // u exists iff the whole family covers u.
    if (!is_subset(u, covered)) return false;
  }
  return true;
}

inline Subset closure_of_point(const Topology& t, int x) {
  Subset cl = t.everything();
  for (Subset o : t.opens)
    if (!has(o, x)) cl &= ~o;
  return cl;
}

/// Specialization order: x <= y iff x lies in the closure of y, i.e. every
/// open containing x contains y. rows[x] = {y : x <= y}.
inline std::vector<Subset> specialization_up(const Topology& t) {
  std::vector<Subset> rows(t.point_count, 0);
  for (int x = 0; x < t.point_count; ++x) {
    Subset cand = t.everything();
    for (Subset o : t.opens)
      if (has(o, x)) cand &= o;
    rows[x] = cand;
  }
  return rows;
}

struct SoberReport {
  struct IrreducibleEntry {
    Subset closed_set;
    std::vector<int> dense_points;  // x with cl{x} == closed_set
  };
  std::vector<IrreducibleEntry> irreducibles;
  bool is_sober = false;
  bool is_t0 = false;
};

/// Closed C is irreducible when it is nonempty and not the union of two
/// proper closed subsets; sober means each such C is the closure of exactly
/// one point.
inline SoberReport sober_check(const Topology& t) {
  SoberReport rep;
  std::vector<Subset> closed;
  closed.reserve(t.opens.size());
  for (Subset o : t.opens) closed.push_back(t.everything() & ~o);
  sort_unique(closed);

  std::vector<Subset> point_closures(t.point_count);
  for (int x = 0; x < t.point_count; ++x)
    point_closures[x] = closure_of_point(t, x);

  rep.is_sober = true;
  for (Subset c : closed) {
    if (c == 0) continue;
    bool reducible = false;
    for (Subset d : closed) {
      if (reducible) break;
      if (d == c || !is_subset(d, c)) continue;
      for (Subset e : closed) {
        if (e == c || !is_subset(e, c)) continue;
        if ((d | e) == c) {
          reducible = true;
          break;
        }
      }
    }
    if (reducible) continue;
    SoberReport::IrreducibleEntry entry;
    entry.closed_set = c;
    for (int x = 0; x < t.point_count; ++x)
      if (point_closures[x] == c) entry.dense_points.push_back(x);
    if (entry.dense_points.size() != 1) rep.is_sober = false;
    rep.irreducibles.push_back(std::move(entry));
  }

  rep.is_t0 = true;
  for (int x = 0; x < t.point_count && rep.is_t0; ++x)
    for (int y = x + 1; y < t.point_count; ++y)
      if (point_closures[x] == point_closures[y]) {
        rep.is_t0 = false;
        break;
      }
  return rep;
}

/// Every open neighbourhood filter O_x must be round for way-below: each
/// open O containing x admits an open U containing x with U way-below O.
/// True for every finite topology; kept as an explicit check so windowed
/// infinite exemplars go through the same code path.
inline bool core_compact_check(const Topology& t) {
  for (int x = 0; x < t.point_count; ++x)
    for (Subset o : t.opens) {
      if (!has(o, x)) continue;
      bool found = false;
      for (Subset u : t.opens)
        if (has(u, x) && way_below(t, u, o)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

/// Compactness of a subset of a finite space: every subfamily of a finite
/// open family is finite, so any cover is its own finite subcover.
inline bool is_compact_subset(const Topology& t, Subset c) {
  return is_subset(c, t.everything());
}

}  // namespace predual

#endif  // PREDUAL_TOPOLOGY_HPP_
