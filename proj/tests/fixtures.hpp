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

#ifndef PREDUAL_TESTS_FIXTURES_HPP_
#define PREDUAL_TESTS_FIXTURES_HPP_

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "predual/structure.hpp"

namespace fixtures {

using predual::Structure;
using predual::StructureData;
using predual::Subset;

/// Builds leq rows from explicit strictly-below pairs (reflexivity added).
inline std::vector<Subset> order_rows(int n,
                                      std::initializer_list<std::pair<int, int>>
                                          below) {
  std::vector<Subset> rows(n, 0);
  for (int i = 0; i < n; ++i) rows[i] |= predual::bit(i);
  for (auto [p, q] : below) rows[p] |= predual::bit(q);
  return rows;
}

inline std::vector<Subset> pair_rows(int n,
                                     std::initializer_list<std::pair<int, int>>
                                         pairs) {
  std::vector<Subset> rows(n, 0);
  for (auto [p, q] : pairs) rows[p] |= predual::bit(q);
  return rows;
}

/// Chain 0 < a < 1 with prec = leq.
inline Structure c3() {
  StructureData d;
  d.elements = {"0", "a", "1"};
  d.leq = order_rows(3, {{0, 1}, {0, 2}, {1, 2}});
  d.prec = d.leq;
  d.bottom = 0;
  return predual::validate_structure(d);
}

/// Chain 0 < a with an explicit prec.
inline Structure s2(std::initializer_list<std::pair<int, int>> prec_pairs) {
  StructureData d;
  d.elements = {"0", "a"};
  d.leq = order_rows(2, {{0, 1}});
  d.prec = pair_rows(2, prec_pairs);
  d.bottom = 0;
  return predual::validate_structure(d);
}

/// The modular diamond 0 < x,y,z < 1 with pairwise joins 1, prec = leq.
inline Structure m3() {
  StructureData d;
  d.elements = {"0", "x", "y", "z", "1"};
  d.leq = order_rows(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
  d.prec = d.leq;
  d.bottom = 0;
  return predual::validate_structure(d);
}

/// Boolean square 0 < x,y < 1 with prec = leq (the structure of the
/// discrete two-point space).
inline Structure diamond4() {
  StructureData d;
  d.elements = {"0", "x", "y", "1"};
  d.leq = order_rows(4, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
  d.prec = d.leq;
  d.bottom = 0;
  return predual::validate_structure(d);
}

/// One-point structure with a chosen prec (empty or reflexive).
inline Structure s1(bool reflexive_prec) {
  StructureData d;
  d.elements = {"0"};
  d.leq = order_rows(1, {});
  d.prec = reflexive_prec ? d.leq : pair_rows(1, {});
  d.bottom = 0;
  return predual::validate_structure(d);
}

inline Subset set_of(std::initializer_list<int> bits) {
  Subset s = 0;
  for (int b : bits) s |= predual::bit(b);
  return s;
}

}  // namespace fixtures

#endif  // PREDUAL_TESTS_FIXTURES_HPP_
