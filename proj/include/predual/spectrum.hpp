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

#ifndef PREDUAL_SPECTRUM_HPP_
#define PREDUAL_SPECTRUM_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "predual/axioms.hpp"
#include "predual/structure.hpp"
#include "predual/topology.hpp"

namespace predual {

/// A spectrum point is a nonempty proper round prime filter. Nonemptiness
/// keeps the basic opens a genuine basis (a point of the spectrum lies in
/// S_p for each of its members); properness rules out the whole carrier,
/// so the bottom never belongs to a point.
inline bool is_spectrum_point(const Structure& s, Subset p) {
  return p != 0 && p != s.universe() && is_round_filter(s, p) &&
         is_prime_filter(s, p);
}

struct SpectrumResult {
  /// Points in ascending bitmask order, each a subset of the carrier.
  std::vector<Subset> points;
  /// basic_opens[p] = set of point indices whose filter contains element p.
  std::vector<Subset> basic_opens;
  /// Every union of basic opens, i.e. the full topology on the spectrum.
  std::vector<Subset> opens;

  int point_count() const { return static_cast<int>(points.size()); }
  Topology topology() const { return {point_count(), opens}; }
};

/// Exact sweep over all 2^n subsets. The empty spectrum is legal output;
/// it is the correct spectrum of e.g. the diamond M3.
inline SpectrumResult enumerate_spectrum(const Structure& s) {
  int n = s.size();
  if (n > kMaxCarrier) throw Error(Errc::CarrierTooLarge, "carrier above 24");
  SpectrumResult out;
  for (Subset cand = 0; cand <= s.universe(); ++cand)
    if (is_spectrum_point(s, cand)) out.points.push_back(cand);

  out.basic_opens.assign(n, 0);
  for (int i = 0; i < out.point_count(); ++i)
    for_each_in(out.points[i],
                [&](int p) { out.basic_opens[p] |= bit(i); });

  out.opens.push_back(0);
  for (Subset b : out.basic_opens) out.opens.push_back(b);
  sort_unique(out.opens);
  for (;;) {
    std::vector<Subset> fresh;
    for (Subset a : out.opens)
      for (Subset b : out.opens) {
        Subset u = a | b;
        if (!std::binary_search(out.opens.begin(), out.opens.end(), u))
          fresh.push_back(u);
      }
    if (fresh.empty()) break;
    out.opens.insert(out.opens.end(), fresh.begin(), fresh.end());
    sort_unique(out.opens);
  }
  return out;
}

struct ExtensionResult {
  Subset prime = 0;
  /// The extension hypotheses (distributive and auxiliary) are checked;
  /// when they fail the greedy search still runs and this flag is cleared.
  bool hypotheses_ok = true;
};

/// Extends a round filter to a proper round prime filter avoiding an ideal,
/// mirroring the maximal-ideal proof: grow J from I in canonical element
/// order, adding x whenever the generated ideal stays disjoint from F, then
/// take the complement. One pass reaches a maximal ideal because enlarging
/// J only shrinks the set of addable elements.
inline ExtensionResult extend_to_prime(const Structure& s, Subset ideal,
                                       Subset filter) {
  if (!is_ideal(s, ideal))
    throw Error(Errc::BadInput, "I is not an ideal");
  if (!is_round_filter(s, filter))
    throw Error(Errc::BadInput, "F is not a round filter");
  if (filter == 0) throw Error(Errc::BadInput, "F must be nonempty");
  if ((ideal & filter) != 0)
    throw Error(Errc::BadInput, "I and F must be disjoint");
  if (has(filter, s.bottom()))
    throw Error(Errc::BadInput,
                "F contains the bottom, so the only filter extending it is "
                "the whole carrier and no proper extension exists");

  ExtensionResult res;
  res.hypotheses_ok =
      !violates_distributive(s) && !violates_auxiliary(s);

  Subset j = generate_ideal(s, ideal);
  for (int x = 0; x < s.size(); ++x) {
    if (has(j, x)) continue;
    Subset grown = generate_ideal(s, j | bit(x));
    if ((grown & filter) == 0) j = grown;
  }
  Subset p = s.universe() & ~j;
  if (!(is_subset(filter, p) && p != s.universe() && p != 0 &&
        is_filter(s, p) && is_round_filter(s, p) && is_prime_filter(s, p)))
    throw Error(Errc::NoExtension,
                "complement of the maximal ideal " + s.label_set(j) +
                    " is not a proper round prime filter" +
                    (res.hypotheses_ok ? "" : " (hypotheses fail)"),
                {s.label_set(j)});
  res.prime = p;
  return res;
}

struct CompactInterpolantResult {
  Subset point_set = 0;     // spectrum point indices
  Subset filter = 0;        // the interpolating -<-filter F
  bool contains_sp = false; // S_p subset of C
  bool within_sq = false;   // C subset of S_q
  bool compact = false;
};

/// Builds a -<-filter F inside p^< containing q by repeated interpolation
/// (canonically least interpolant each step), then C as the intersection of
/// the basic opens over F. Compactness is verified through the ideal-cover
/// criterion that the prime-filter extension provides: no nonempty ideal
/// whose basic opens each miss part of C can cover C.
inline CompactInterpolantResult compact_interpolant(const Structure& s, int p,
                                                    int q) {
  if (!s.prec(p, q))
    throw Error(Errc::NotPrec, "requires p -< q", {s.label(p), s.label(q)});
  if (violates_distributive(s) || violates_auxiliary(s) ||
      violates_interpolative(s))
    throw Error(Errc::HypothesesFail,
                "requires distributive, auxiliary and interpolative");

  Subset chain = bit(q);
  for (;;) {
    Subset grown = chain;
    for_each_in(chain, [&](int c) {
      Subset mids = s.prec_up(p) & s.prec_down(c);
      if (mids != 0) grown |= bit(std::countr_zero(mids));
    });
    if (grown == chain) break;
    chain = grown;
  }
  CompactInterpolantResult res;
  res.filter = up_closure_leq(s, chain);

  SpectrumResult spec = enumerate_spectrum(s);
  Subset c = full_set(spec.point_count());
  for_each_in(res.filter, [&](int f) { c &= spec.basic_opens[f]; });
  res.point_set = c;
  res.contains_sp = is_subset(spec.basic_opens[p], c);
  res.within_sq = is_subset(c, spec.basic_opens[q]);

  res.compact = true;
  for (Subset ideal = 0; ideal <= s.universe(); ++ideal) {
    if (ideal == 0 || !is_ideal(s, ideal)) continue;
    bool all_miss = true;
    Subset covered = 0;
    for_each_in(ideal, [&](int jx) {
      if (!is_subset(c, spec.basic_opens[jx])) covered |= spec.basic_opens[jx];
      else all_miss = false;
    });
    if (all_miss && is_subset(c, covered)) res.compact = false;
  }
  return res;
}

struct RepresentationReport {
  bool hypotheses_ok = false;  // predomain and distributive
  /// Pairs where (p <= q) and (S_p subset of S_q) disagree.
  std::vector<std::pair<int, int>> leq_violations;
  /// Pairs where (p -< q) and (S_p way-below S_q) disagree.
  std::vector<std::pair<int, int>> prec_violations;

  bool ok() const { return leq_violations.empty() && prec_violations.empty(); }
};

/// Checks both representation biconditionals on the spectrum for every pair
/// of elements. Both directions are computed independently of each other:
/// containment of basic opens on one side, way-below on the spectrum
/// topology on the other.
inline RepresentationReport verify_representation(const Structure& s) {
  RepresentationReport rep;
  rep.hypotheses_ok = is_distributive_predomain(s);
  SpectrumResult spec = enumerate_spectrum(s);
  Topology topo = spec.topology();
  int n = s.size();
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      bool inc = is_subset(spec.basic_opens[p], spec.basic_opens[q]);
      if (s.leq(p, q) != inc) rep.leq_violations.push_back({p, q});
      bool wb = way_below(topo, spec.basic_opens[p], spec.basic_opens[q]);
      if (s.prec(p, q) != wb) rep.prec_violations.push_back({p, q});
    }
  return rep;
}

}  // namespace predual

#endif  // PREDUAL_SPECTRUM_HPP_
