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

#ifndef PREDUAL_RATIONAL_HPP_
#define PREDUAL_RATIONAL_HPP_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace predual {

/// Exact rational number. Interval endpoints must be compared exactly, so
/// floating point is never used here.
struct Rat {
  long long num = 0;
  long long den = 1;

  constexpr Rat() = default;
  constexpr Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    return a.num * b.den <=> b.num * a.den;
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

/// A finite union of bounded open rational intervals in canonical form:
/// components sorted, nonempty, and pairwise non-mergeable. Two components
/// may share an endpoint ((0,1) and (1,2) stay separate because the shared
/// point is excluded), but overlapping components are merged.
struct IntervalUnion {
  std::vector<std::pair<Rat, Rat>> comps;

  bool empty() const { return comps.empty(); }

  static IntervalUnion none() { return {}; }

  static IntervalUnion interval(const Rat& a, const Rat& b) {
    IntervalUnion u;
    if (a < b) u.comps.push_back({a, b});
    return u;
  }

  friend bool operator==(const IntervalUnion& x, const IntervalUnion& y) {
    return x.comps == y.comps;
  }
  friend bool operator<(const IntervalUnion& x, const IntervalUnion& y) {
    if (x.comps.size() != y.comps.size())
      return x.comps.size() < y.comps.size();
    for (std::size_t i = 0; i < x.comps.size(); ++i) {
      if (x.comps[i].first != y.comps[i].first)
        return x.comps[i].first < y.comps[i].first;
      if (x.comps[i].second != y.comps[i].second)
        return x.comps[i].second < y.comps[i].second;
    }
    return false;
  }

  static IntervalUnion unite(const IntervalUnion& x, const IntervalUnion& y) {
    std::vector<std::pair<Rat, Rat>> all = x.comps;
    all.insert(all.end(), y.comps.begin(), y.comps.end());
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first < b.first : a.second < b.second;
    });
    IntervalUnion out;
    for (const auto& c : all) {
      if (!out.comps.empty() && c.first < out.comps.back().second) {
        if (out.comps.back().second < c.second)
          out.comps.back().second = c.second;
      } else {
        out.comps.push_back(c);
      }
    }
    return out;
  }

  /// Subset as point sets: each component must fit inside one component of
  /// the other side (components are separated, so a connected piece cannot
  /// straddle two of them).
  friend bool subset_of(const IntervalUnion& x, const IntervalUnion& y) {
    for (const auto& c : x.comps) {
      bool inside = false;
      for (const auto& d : y.comps)
        if (d.first <= c.first && c.second <= d.second) {
          inside = true;
          break;
        }
      if (inside) continue;
      return false;
    }
    return true;
  }

  /// Compact containment: the closure of x lies inside y, decided by strict
  /// endpoint comparison per component.
  friend bool compactly_inside(const IntervalUnion& x, const IntervalUnion& y) {
    for (const auto& c : x.comps) {
      bool inside = false;
      for (const auto& d : y.comps)
        if (d.first < c.first && c.second < d.second) {
          inside = true;
          break;
        }
      if (!inside) return false;
    }
    return true;
  }

  std::string str() const {
    if (comps.empty()) return "{}";
    std::string out;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (i) out += "u";
      out += "(" + comps[i].first.str() + "," + comps[i].second.str() + ")";
    }
    return out;
  }
};

}  // namespace predual

#endif  // PREDUAL_RATIONAL_HPP_
