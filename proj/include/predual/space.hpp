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

#ifndef PREDUAL_SPACE_HPP_
#define PREDUAL_SPACE_HPP_

#include <algorithm>
#include <string>
#include <vector>

#include "predual/spectrum.hpp"
#include "predual/structure.hpp"
#include "predual/topology.hpp"

namespace predual {

inline constexpr int kMaxPoints = 16;

/// A finite space given by an explicit open family plus a designated
/// union-basis. Spaces are input as arbitrary open families and validated,
/// so proper sub-bases can be exercised, not just whole topologies.
struct FiniteSpace {
  std::vector<std::string> point_labels;
  Topology topo;
  std::vector<int> basis;  // indices into topo.opens, ascending

  int points() const { return topo.point_count; }
  Subset basis_open(int i) const { return topo.opens[basis[i]]; }
  int basis_size() const { return static_cast<int>(basis.size()); }
};

/// Validates the topology axioms plus the union-basis laws: the basis
/// contains the empty set, is closed under pairwise unions, and every open
/// is a union of basis members.
inline FiniteSpace validate_space(std::vector<std::string> point_labels,
                                  std::vector<Subset> opens,
                                  std::vector<Subset> basis_sets) {
  int m = static_cast<int>(point_labels.size());
  if (m > kMaxPoints)
    throw Error(Errc::CarrierTooLarge, "spaces are capped at 16 points");
  Topology topo = validate_topology(m, std::move(opens));

  sort_unique(basis_sets);
  FiniteSpace x;
  x.point_labels = std::move(point_labels);
  for (Subset b : basis_sets) {
    auto it = std::lower_bound(topo.opens.begin(), topo.opens.end(), b);
    if (it == topo.opens.end() || *it != b)
      throw Error(Errc::NotATopology, "basis member is not an open set");
    x.basis.push_back(static_cast<int>(it - topo.opens.begin()));
  }
  if (basis_sets.empty() || basis_sets.front() != 0)
    throw Error(Errc::NotATopology, "basis must contain the empty set");
  for (Subset a : basis_sets)
    for (Subset b : basis_sets)
      if (!std::binary_search(basis_sets.begin(), basis_sets.end(), a | b))
        throw Error(Errc::NotATopology, "basis not closed under union");
  for (Subset o : topo.opens) {
    Subset covered = 0;
    for (Subset b : basis_sets)
      if (is_subset(b, o)) covered |= b;
    if (covered != o)
      throw Error(Errc::NotATopology,
                  "open set is not a union of basis members");
  }
  x.topo = std::move(topo);
  return x;
}

inline std::string open_label(const FiniteSpace& x, Subset open) {
  std::string out = "{";
  bool first = true;
  for_each_in(open, [&](int p) {
    if (!first) out += ",";
    out += x.point_labels[p];
    first = false;
  });
  return out + "}";
}

/// (S, <=, -<) = (basis, subset-of, way-below), join = union, bottom = the
/// empty set. Elements appear in ascending mask order, so the bottom is
/// element 0.
inline Structure derive_structure(const FiniteSpace& x) {
  StructureData d;
  int n = x.basis_size();
  if (n > kMaxCarrier)
    throw Error(Errc::CarrierTooLarge, "basis exceeds the 24-element cap");
  d.elements.reserve(n);
  for (int i = 0; i < n; ++i) d.elements.push_back(open_label(x, x.basis_open(i)));
  d.leq.assign(n, 0);
  d.prec.assign(n, 0);
  std::vector<std::vector<int>> join(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (is_subset(x.basis_open(i), x.basis_open(j))) d.leq[i] |= bit(j);
      if (way_below(x.topo, x.basis_open(i), x.basis_open(j)))
        d.prec[i] |= bit(j);
      Subset u = x.basis_open(i) | x.basis_open(j);
      for (int k = 0; k < n; ++k)
        if (x.basis_open(k) == u) join[i][j] = k;
    }
  d.join = std::move(join);
  d.bottom = 0;
  return validate_structure(d);
}

/// S_x = the basis members containing x, as a subset of derive_structure's
/// carrier.
inline Subset point_filter(const FiniteSpace& x, int point) {
  Subset f = 0;
  for (int i = 0; i < x.basis_size(); ++i)
    if (has(x.basis_open(i), point)) f |= bit(i);
  return f;
}

struct SpaceRecoveryReport {
  std::string precondition_failure;  // "NotT0" / "NotSober" / "" when ok
  bool core_compact = false;
  bool injective = false;
  bool surjective = false;
  bool basis_carried = false;  // each basis member maps onto its basic open
  int space_points = 0;
  int spectrum_points = 0;

  bool pass() const {
    return precondition_failure.empty() && core_compact && injective &&
           surjective && basis_carried;
  }
};

/// x -> S_x must be a bijection onto the spectrum of the derived structure
/// that carries each basis member to its basic open, i.e. a homeomorphism.
inline SpaceRecoveryReport verify_space_recovery(const FiniteSpace& x) {
  SpaceRecoveryReport rep;
  rep.space_points = x.points();
  SoberReport sober = sober_check(x.topo);
  if (!sober.is_t0) {
    rep.precondition_failure = "NotT0";
    return rep;
  }
  if (!sober.is_sober) {
    rep.precondition_failure = "NotSober";
    return rep;
  }
  rep.core_compact = core_compact_check(x.topo);

  Structure derived = derive_structure(x);
  SpectrumResult spec = enumerate_spectrum(derived);
  rep.spectrum_points = spec.point_count();

  std::vector<int> image(x.points(), -1);  // point -> spectrum index
  rep.injective = true;
  for (int a = 0; a < x.points(); ++a) {
    Subset sa = point_filter(x, a);
    for (int i = 0; i < spec.point_count(); ++i)
      if (spec.points[i] == sa) image[a] = i;
    for (int b = 0; b < a; ++b)
      if (point_filter(x, b) == sa) rep.injective = false;
  }
  Subset hit = 0;
  bool all_mapped = true;
  for (int a = 0; a < x.points(); ++a) {
    if (image[a] < 0) all_mapped = false;
    else hit |= bit(image[a]);
  }
  rep.surjective = all_mapped && hit == full_set(spec.point_count());

  rep.basis_carried = all_mapped;
  if (all_mapped)
    for (int i = 0; i < x.basis_size(); ++i) {
      Subset carried = 0;
      for_each_in(x.basis_open(i), [&](int a) { carried |= bit(image[a]); });
      if (carried != spec.basic_opens[i]) rep.basis_carried = false;
    }
  return rep;
}

struct SpaceAxiomReport {
  AxiomReport axioms;
  bool pass = false;  // distributive, interpolative, auxiliary,
                      // approximating and join-preserving all hold
};

/// Any union-basis of a (finite, hence core compact) sober space must be a
/// way-below-distributive union-predomain.
inline SpaceAxiomReport verify_derived_basis_axioms(const FiniteSpace& x) {
  SpaceAxiomReport rep;
  Structure derived = derive_structure(x);
  rep.axioms = check_axioms(derived);
  rep.pass = rep.axioms.passes(Axiom::Distributive) &&
             rep.axioms.passes(Axiom::Interpolative) &&
             rep.axioms.passes(Axiom::Auxiliary) &&
             rep.axioms.passes(Axiom::Approximating) &&
             rep.axioms.passes(Axiom::JoinPreserving);
  return rep;
}

/// Builds the spectrum-as-space of a structure: points are the spectrum
/// points, the basis is the family of basic opens.
inline FiniteSpace spectrum_space(const Structure& s,
                                  const SpectrumResult& spec) {
  FiniteSpace x;
  x.point_labels.reserve(spec.point_count());
  for (Subset p : spec.points) x.point_labels.push_back(s.label_set(p));
  x.topo = spec.topology();
  std::vector<Subset> basis_sets = spec.basic_opens;
  basis_sets.push_back(0);
  sort_unique(basis_sets);
  for (Subset b : basis_sets) {
    auto it = std::lower_bound(x.topo.opens.begin(), x.topo.opens.end(), b);
    x.basis.push_back(static_cast<int>(it - x.topo.opens.begin()));
  }
  return x;
}

}  // namespace predual

#endif  // PREDUAL_SPACE_HPP_
