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

#ifndef PREDUAL_MORPHISM_HPP_
#define PREDUAL_MORPHISM_HPP_

#include <optional>
#include <string>
#include <vector>

#include "predual/axioms.hpp"
#include "predual/space.hpp"
#include "predual/spectrum.hpp"
#include "predual/structure.hpp"

namespace predual {

/// A relation between two carriers; rows[p] is the set of targets p' with
/// p <| p'. Stored dense, composed as a boolean matrix product.
struct RelMorphism {
  int source_size = 0;
  int target_size = 0;
  std::vector<Subset> rows;

  bool at(int p, int q) const { return has(rows[p], q); }
  bool operator==(const RelMorphism& o) const {
    return source_size == o.source_size && target_size == o.target_size &&
           rows == o.rows;
  }
};

inline RelMorphism empty_relation(const Structure& s, const Structure& t) {
  return {s.size(), t.size(), std::vector<Subset>(s.size(), 0)};
}

inline RelMorphism full_relation(const Structure& s, const Structure& t) {
  return {s.size(), t.size(),
          std::vector<Subset>(s.size(), full_set(t.size()))};
}

inline RelMorphism leq_relation(const Structure& s) {
  RelMorphism m{s.size(), s.size(), {}};
  m.rows.reserve(s.size());
  for (int p = 0; p < s.size(); ++p) m.rows.push_back(s.up_of(p));
  return m;
}

inline RelMorphism prec_relation(const Structure& s) {
  RelMorphism m{s.size(), s.size(), {}};
  m.rows.reserve(s.size());
  for (int p = 0; p < s.size(); ++p) m.rows.push_back(s.prec_up(p));
  return m;
}

inline void require_dims(const Structure& s, const Structure& t,
                         const RelMorphism& m) {
  if (m.source_size != s.size() || m.target_size != t.size() ||
      static_cast<int>(m.rows.size()) != s.size())
    throw Error(Errc::DimensionMismatch,
                "relation dimensions do not match the two carriers");
}

enum class MorphismAxiom {
  Faithful,
  Auxiliary,
  Pushforward,
  VeePullback,
  LeftInterpolation,
  VeePreserving,
  Total,
};

inline const char* morphism_axiom_name(MorphismAxiom a) {
  switch (a) {
    case MorphismAxiom::Faithful: return "faithful";
    case MorphismAxiom::Auxiliary: return "auxiliary";
    case MorphismAxiom::Pushforward: return "pushforward";
    case MorphismAxiom::VeePullback: return "vee-pullback";
    case MorphismAxiom::LeftInterpolation: return "left-interpolation";
    case MorphismAxiom::VeePreserving: return "vee-preserving";
    case MorphismAxiom::Total: return "total";
  }
  return "?";
}

struct MorphismAxiomResult {
  MorphismAxiom axiom;
  bool pass = false;
  Witness witness;
};

struct MorphismReport {
  std::vector<MorphismAxiomResult> results;

  const MorphismAxiomResult& result(MorphismAxiom a) const {
    for (const auto& r : results)
      if (r.axiom == a) return r;
    throw Error(Errc::BadInput, "axiom not in report");
  }
  bool passes(MorphismAxiom a) const { return result(a).pass; }
  /// The four defining axioms; the remaining three are the optional
  /// vee-morphism / totality conditions.
  bool core_pass() const {
    return passes(MorphismAxiom::Faithful) &&
           passes(MorphismAxiom::Auxiliary) &&
           passes(MorphismAxiom::Pushforward) &&
           passes(MorphismAxiom::VeePullback);
  }
  bool vee_pass() const {
    return core_pass() && passes(MorphismAxiom::LeftInterpolation) &&
           passes(MorphismAxiom::VeePreserving);
  }
};

/// Columns of the relation: col[p'] = {p : p <| p'}.
inline std::vector<Subset> relation_columns(const Structure& s,
                                            const Structure& t,
                                            const RelMorphism& m) {
  std::vector<Subset> cols(t.size(), 0);
  for (int p = 0; p < s.size(); ++p)
    for_each_in(m.rows[p], [&](int q) { cols[q] |= bit(p); });
  return cols;
}

/// Checks the four defining morphism axioms and the three optional
/// conditions, each with a canonical first witness.
inline MorphismReport check_morphism(const Structure& s, const Structure& t,
                                     const RelMorphism& m) {
  require_dims(s, t, m);
  MorphismReport rep;
  auto add = [&](MorphismAxiom a, std::optional<Witness> v) {
    rep.results.push_back({a, !v.has_value(), v.value_or(Witness{})});
  };

  // (Faithful) p <| 0' => p = 0.
  {
    std::optional<Witness> v;
    for (int p = 0; p < s.size() && !v; ++p)
      if (p != s.bottom() && m.at(p, t.bottom())) v = Witness{p};
    add(MorphismAxiom::Faithful, v);
  }

  // (Auxiliary) p <= q <| q' <= p'  =>  p <| p'.
  {
    std::optional<Witness> v;
    for (int q = 0; q < s.size() && !v; ++q)
      for (int q1 = 0; q1 < t.size() && !v; ++q1) {
        if (!m.at(q, q1)) continue;
        for (int p = 0; p < s.size() && !v; ++p) {
          if (!s.leq(p, q)) continue;
          Subset missing = t.up_of(q1) & ~m.rows[p];
          if (missing != 0) v = Witness{p, q, q1, std::countr_zero(missing)};
        }
      }
    add(MorphismAxiom::Auxiliary, v);
  }

  // (Pushforward) p -< q <| r',s'  =>  exists q' with p <| q' -< r',s'.
  {
    std::optional<Witness> v;
    for (int p = 0; p < s.size() && !v; ++p)
      for (int q = 0; q < s.size() && !v; ++q) {
        if (!s.prec(p, q)) continue;
        for (int r1 = 0; r1 < t.size() && !v; ++r1) {
          if (!m.at(q, r1)) continue;
          for (int s1 = 0; s1 < t.size() && !v; ++s1) {
            if (!m.at(q, s1)) continue;
            Subset ok = m.rows[p] & t.prec_down(r1) & t.prec_down(s1);
            if (ok == 0) v = Witness{p, q, r1, s1};
          }
        }
      }
    add(MorphismAxiom::Pushforward, v);
  }

  // (Vee-Pullback) p -< q <| r' v s'  =>  exists r <| r', s <| s' with
  // p -< r v s. This is the reading used in the composition proof.
  {
    std::optional<Witness> v;
    auto cols = relation_columns(s, t, m);
    for (int p = 0; p < s.size() && !v; ++p)
      for (int q = 0; q < s.size() && !v; ++q) {
        if (!s.prec(p, q)) continue;
        for (int r1 = 0; r1 < t.size() && !v; ++r1)
          for (int s1 = 0; s1 < t.size() && !v; ++s1) {
            if (!m.at(q, t.join(r1, s1))) continue;
            bool found = false;
            for_each_in(cols[r1], [&](int r) {
              if (found) return;
              for_each_in(cols[s1], [&](int x) {
                if (!found && s.prec(p, s.join(r, x))) found = true;
              });
            });
            if (!found) v = Witness{p, q, r1, s1};
          }
      }
    add(MorphismAxiom::VeePullback, v);
  }

  // (Left Interpolation) p <| p'  =>  exists q with p -< q <| p'.
  {
    std::optional<Witness> v;
    auto cols = relation_columns(s, t, m);
    for (int p = 0; p < s.size() && !v; ++p)
      for_each_in(m.rows[p], [&](int p1) {
        if (!v && (s.prec_up(p) & cols[p1]) == 0) v = Witness{p, p1};
      });
    add(MorphismAxiom::LeftInterpolation, v);
  }

  // (Vee-Preserving) q, r <| p'  =>  q v r <| p'.
  {
    std::optional<Witness> v;
    for (int q = 0; q < s.size() && !v; ++q)
      for (int r = 0; r < s.size() && !v; ++r) {
        Subset both = m.rows[q] & m.rows[r] & ~m.rows[s.join(q, r)];
        if (both != 0) v = Witness{q, r, std::countr_zero(both)};
      }
    add(MorphismAxiom::VeePreserving, v);
  }

  // (Total) p -< q  =>  exists q' with p <| q'.
  {
    std::optional<Witness> v;
    for (int p = 0; p < s.size() && !v; ++p)
      for (int q = 0; q < s.size() && !v; ++q)
        if (s.prec(p, q) && m.rows[p] == 0) v = Witness{p, q};
    add(MorphismAxiom::Total, v);
  }
  return rep;
}

/// Relational composite: p (m1 ; m2) p'' iff some p' has p m1 p' m2 p''.
inline RelMorphism compose(const RelMorphism& m1, const RelMorphism& m2) {
  if (m1.target_size != m2.source_size)
    throw Error(Errc::DimensionMismatch,
                "inner dimensions disagree in composition");
  RelMorphism out{m1.source_size, m2.target_size,
                  std::vector<Subset>(m1.source_size, 0)};
  for (int p = 0; p < m1.source_size; ++p)
    for_each_in(m1.rows[p], [&](int mid) { out.rows[p] |= m2.rows[mid]; });
  return out;
}

/// Composition with the category self-check: when both inputs pass the
/// morphism axioms the composite must as well.
inline RelMorphism compose_checked(const Structure& s, const Structure& mid,
                                   const Structure& t, const RelMorphism& m1,
                                   const RelMorphism& m2) {
  require_dims(s, mid, m1);
  require_dims(mid, t, m2);
  RelMorphism out = compose(m1, m2);
  if (check_morphism(s, mid, m1).core_pass() &&
      check_morphism(mid, t, m2).core_pass() &&
      !check_morphism(s, t, out).core_pass())
    throw std::logic_error(
        "composite of two morphisms failed the morphism axioms");
  return out;
}

struct SpectrumMap {
  SpectrumResult source;
  SpectrumResult target;
  /// Per source point: index of the image point, or -1 outside the domain.
  std::vector<int> map;
  bool continuity_ok = false;

  Subset domain() const {
    Subset d = 0;
    for (std::size_t i = 0; i < map.size(); ++i)
      if (map[i] >= 0) d |= bit(static_cast<int>(i));
    return d;
  }
};

/// The induced partial function P |-> P^<| between spectra, with each image
/// verified to be a spectrum point and continuity verified against the
/// union of source basic opens.
inline SpectrumMap spectrum_map(const Structure& s, const Structure& t,
                                const RelMorphism& m) {
  require_dims(s, t, m);
  MorphismReport rep = check_morphism(s, t, m);
  if (!rep.core_pass()) {
    for (const auto& r : rep.results)
      if (!r.pass)
        throw Error(Errc::NotAMorphism,
                    std::string("relation fails axiom ") +
                        morphism_axiom_name(r.axiom));
  }
  SpectrumMap out;
  out.source = enumerate_spectrum(s);
  out.target = enumerate_spectrum(t);
  out.map.assign(out.source.point_count(), -1);

  for (int i = 0; i < out.source.point_count(); ++i) {
    Subset image = 0;
    for_each_in(out.source.points[i], [&](int p) { image |= m.rows[p]; });
    if (image == 0) continue;
    int idx = -1;
    for (int j = 0; j < out.target.point_count(); ++j)
      if (out.target.points[j] == image) idx = j;
    if (idx < 0) {
      if (is_distributive_predomain(s) && is_distributive_predomain(t))
        throw std::logic_error(
            "image of a spectrum point is not a spectrum point "
            "(ImageNotPoint)");
      throw Error(Errc::HypothesesFail,
                  "image " + t.label_set(image) +
                      " is not a spectrum point; the structures do not "
                      "satisfy the duality hypotheses");
    }
    out.map[i] = idx;
  }

  out.continuity_ok = true;
  for (int p1 = 0; p1 < t.size(); ++p1) {
    Subset preimage = 0;
    for (int i = 0; i < out.source.point_count(); ++i)
      if (out.map[i] >= 0 && has(out.target.basic_opens[p1], out.map[i]))
        preimage |= bit(i);
    Subset unions = 0;
    for (int p = 0; p < s.size(); ++p)
      if (m.at(p, p1)) unions |= out.source.basic_opens[p];
    if (preimage != unions) out.continuity_ok = false;
  }
  return out;
}

/// A partial function between the point sets of two spaces; -1 marks points
/// outside the domain. Valid maps have an open domain and continuous
/// preimages of target basis members.
struct PartialMap {
  std::vector<int> assignment;

  Subset domain() const {
    Subset d = 0;
    for (std::size_t i = 0; i < assignment.size(); ++i)
      if (assignment[i] >= 0) d |= bit(static_cast<int>(i));
    return d;
  }
};

inline Subset map_preimage(const PartialMap& pm, Subset target_set) {
  Subset pre = 0;
  for (std::size_t i = 0; i < pm.assignment.size(); ++i)
    if (pm.assignment[i] >= 0 && has(target_set, pm.assignment[i]))
      pre |= bit(static_cast<int>(i));
  return pre;
}

inline void validate_partial_map(const FiniteSpace& x, const FiniteSpace& y,
                                 const PartialMap& pm) {
  if (static_cast<int>(pm.assignment.size()) != x.points())
    throw Error(Errc::DimensionMismatch, "assignment size != source points");
  for (int v : pm.assignment)
    if (v >= y.points())
      throw Error(Errc::DimensionMismatch, "image point out of range");
  if (!x.topo.is_open(pm.domain()))
    throw Error(Errc::NotContinuous, "domain is not open in the source");
  for (int i = 0; i < y.basis_size(); ++i) {
    Subset pre = map_preimage(pm, y.basis_open(i));
    Subset covered = 0;
    for (int p = 0; p < x.basis_size(); ++p)
      if (is_subset(x.basis_open(p), pre)) covered |= x.basis_open(p);
    if (covered != pre)
      throw Error(Errc::NotContinuous,
                  "preimage of " + open_label(y, y.basis_open(i)) +
                      " is not a union of source basis members");
  }
}

inline PartialMap compose_maps(const PartialMap& f, const PartialMap& g) {
  PartialMap h;
  h.assignment.assign(f.assignment.size(), -1);
  for (std::size_t i = 0; i < f.assignment.size(); ++i)
    if (f.assignment[i] >= 0) h.assignment[i] = g.assignment[f.assignment[i]];
  return h;
}

/// p <|_phi p' iff p is way-below the preimage of p'. The ordering of
/// elements matches derive_structure on both spaces.
inline RelMorphism morphism_of_map(const FiniteSpace& x, const FiniteSpace& y,
                                   const PartialMap& pm) {
  validate_partial_map(x, y, pm);
  RelMorphism m{x.basis_size(), y.basis_size(),
                std::vector<Subset>(x.basis_size(), 0)};
  for (int j = 0; j < y.basis_size(); ++j) {
    Subset pre = map_preimage(pm, y.basis_open(j));
    for (int i = 0; i < x.basis_size(); ++i)
      if (way_below(x.topo, x.basis_open(i), pre)) m.rows[i] |= bit(j);
  }
  return m;
}

/// p <|_v p' iff some finite F <| p' has p -< join(F). F ranges over all
/// finite subsets of the column of p', including the empty one whose join
/// is the bottom.
inline RelMorphism vee_closure(const Structure& s, const Structure& t,
                               const RelMorphism& m) {
  require_dims(s, t, m);
  auto cols = relation_columns(s, t, m);
  RelMorphism out{s.size(), t.size(), std::vector<Subset>(s.size(), 0)};
  for (int p1 = 0; p1 < t.size(); ++p1) {
    Subset joins = bit(s.bottom());
    for_each_in(cols[p1], [&](int q) {
      Subset extra = 0;
      for_each_in(joins, [&](int k) { extra |= bit(s.join(k, q)); });
      joins |= extra;
    });
    for (int p = 0; p < s.size(); ++p)
      if ((s.prec_up(p) & joins) != 0) out.rows[p] |= bit(p1);
  }
  return out;
}

/// Vee-closure with the idempotence self-check that applies when the input
/// is a genuine morphism between distributive predomains.
inline RelMorphism vee_closure_checked(const Structure& s, const Structure& t,
                                       const RelMorphism& m) {
  RelMorphism out = vee_closure(s, t, m);
  if (is_distributive_predomain(s) && is_distributive_predomain(t) &&
      check_morphism(s, t, m).core_pass() &&
      !(vee_closure(s, t, out) == out))
    throw std::logic_error("vee_closure failed to be idempotent on a morphism");
  return out;
}

struct CategoryLawReport {
  bool compose_is_morphism = false;
  bool left_identity = false;
  bool right_identity = false;
  bool associativity = false;
  bool spectrum_functorial = false;  // spectra compose pointwise
  bool domain_equation = false;      // dom(phi_{m1;m2}) = phi_m1^{-1}[dom(phi_m2)]
  bool vee_identities = true;        // -< neutral for vee-morphisms (when applicable)

  bool pass() const {
    return compose_is_morphism && left_identity && right_identity &&
           associativity && spectrum_functorial && domain_equation &&
           vee_identities;
  }
};

/// Category and functor laws on a composable pair: closure of the axioms
/// under composition, <= as identity, associativity, and the pointwise
/// functoriality of the spectrum map.
inline CategoryLawReport verify_functor_laws(const Structure& s,
                                             const Structure& mid,
                                             const Structure& t,
                                             const RelMorphism& m1,
                                             const RelMorphism& m2) {
  require_dims(s, mid, m1);
  require_dims(mid, t, m2);
  CategoryLawReport rep;
  RelMorphism comp = compose(m1, m2);
  rep.compose_is_morphism = check_morphism(s, t, comp).core_pass();
  rep.left_identity = compose(leq_relation(s), m1) == m1;
  rep.right_identity = compose(m1, leq_relation(mid)) == m1;
  rep.associativity =
      compose(compose(m1, m2), leq_relation(t)) ==
          compose(m1, compose(m2, leq_relation(t))) &&
      compose(compose(leq_relation(s), m1), m2) ==
          compose(leq_relation(s), compose(m1, m2));

  SpectrumMap f1 = spectrum_map(s, mid, m1);
  SpectrumMap f2 = spectrum_map(mid, t, m2);
  SpectrumMap fc = spectrum_map(s, t, comp);
  rep.spectrum_functorial = true;
  rep.domain_equation = true;
  for (int i = 0; i < fc.source.point_count(); ++i) {
    int through = f1.map[i] >= 0 ? f2.map[f1.map[i]] : -1;
    if (fc.map[i] != through) rep.spectrum_functorial = false;
    bool in_dom_comp = fc.map[i] >= 0;
    bool in_pullback = f1.map[i] >= 0 && f2.map[f1.map[i]] >= 0;
    if (in_dom_comp != in_pullback) rep.domain_equation = false;
  }

  if (vee_closure(s, mid, m1) == m1 &&
      check_morphism(s, mid, m1).vee_pass()) {
    rep.vee_identities = compose(prec_relation(s), m1) == m1 &&
                         compose(m1, prec_relation(mid)) == m1;
  }
  return rep;
}

struct SpaceFunctorReport {
  bool preserves_composition = false;
  bool matches_point_filters = false;  // S'_{phi(x)} = phi_{<|_phi}(S_x)

  bool pass() const { return preserves_composition && matches_point_filters; }
};

/// The map->relation direction: composition is preserved, and the induced
/// spectrum map agrees with the original map under the point-filter
/// identification.
inline SpaceFunctorReport verify_functor_laws_spaces(const FiniteSpace& x,
                                                     const FiniteSpace& y,
                                                     const FiniteSpace& z,
                                                     const PartialMap& f,
                                                     const PartialMap& g) {
  validate_partial_map(x, y, f);
  validate_partial_map(y, z, g);
  SpaceFunctorReport rep;

  RelMorphism mf = morphism_of_map(x, y, f);
  RelMorphism mg = morphism_of_map(y, z, g);
  RelMorphism mh = morphism_of_map(x, z, compose_maps(f, g));
  rep.preserves_composition = mh == compose(mf, mg);

  Structure sx = derive_structure(x);
  Structure sy = derive_structure(y);
  SpectrumMap phi = spectrum_map(sx, sy, mf);
  rep.matches_point_filters = true;
  for (int a = 0; a < x.points(); ++a) {
    if (f.assignment[a] < 0) continue;
    Subset sa = point_filter(x, a);
    Subset sb = point_filter(y, f.assignment[a]);
    int ia = -1;
    for (int i = 0; i < phi.source.point_count(); ++i)
      if (phi.source.points[i] == sa) ia = i;
    if (ia < 0 || phi.map[ia] < 0 ||
        phi.target.points[phi.map[ia]] != sb) {
      rep.matches_point_filters = false;
    }
  }
  return rep;
}

struct VeeClosureSpatialReport {
  bool hypotheses_ok = false;
  /// Pairs (p, p') where the algebraic vee-closure and the spatial relation
  /// S_p way-below preimage-of-S'_{p'} disagree.
  std::vector<std::pair<int, int>> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Compares <|_v against the space-level relation of the induced spectrum
/// map for every pair.
inline VeeClosureSpatialReport verify_vee_closure_spatial(const Structure& s, const Structure& t,
                                    const RelMorphism& m) {
  VeeClosureSpatialReport rep;
  rep.hypotheses_ok =
      is_distributive_predomain(s) && is_distributive_predomain(t) &&
      check_morphism(s, t, m).core_pass();
  if (!rep.hypotheses_ok)
    throw Error(Errc::HypothesesFail,
                "requires a morphism between distributive predomains");

  RelMorphism lhs = vee_closure(s, t, m);
  SpectrumMap phi = spectrum_map(s, t, m);
  Topology topo = phi.source.topology();
  for (int p = 0; p < s.size(); ++p)
    for (int p1 = 0; p1 < t.size(); ++p1) {
      Subset preimage = 0;
      for (int q = 0; q < s.size(); ++q)
        if (m.at(q, p1)) preimage |= phi.source.basic_opens[q];
      bool spatial = way_below(topo, phi.source.basic_opens[p], preimage);
      if (spatial != lhs.at(p, p1)) rep.mismatches.push_back({p, p1});
    }
  return rep;
}

}  // namespace predual

#endif  // PREDUAL_MORPHISM_HPP_
