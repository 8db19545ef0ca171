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

#ifndef PREDUAL_EXEMPLARS_HPP_
#define PREDUAL_EXEMPLARS_HPP_

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "predual/axioms.hpp"
#include "predual/rational.hpp"
#include "predual/spectrum.hpp"
#include "predual/structure.hpp"
#include "predual/topology.hpp"

namespace predual {

// ---------------------------------------------------------------------------
// Lazily windowed infinite structures
// ---------------------------------------------------------------------------

/// An infinite (or just large) structure given by decidable predicates over
/// integer codes. window(k) materializes the finite structure on the first
/// k codes closed under join and bottom; windows are nested and preserve
/// <=, -<, v and 0, so in-window relations equal the global ones.
struct LazyStructure {
  std::string name;
  long long zero_code = 0;
  std::function<std::string(long long)> label;
  std::function<bool(long long, long long)> leq;
  std::function<bool(long long, long long)> prec;
  std::function<long long(long long, long long)> join;
  std::function<std::vector<long long>(int)> window_codes;

  Structure window(int k) const {
    std::vector<long long> codes = window_codes(k);
    codes.push_back(zero_code);
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    for (;;) {
      std::vector<long long> fresh;
      for (long long a : codes)
        for (long long b : codes) {
          long long j = join(a, b);
          if (!std::binary_search(codes.begin(), codes.end(), j))
            fresh.push_back(j);
        }
      if (fresh.empty()) break;
      codes.insert(codes.end(), fresh.begin(), fresh.end());
      std::sort(codes.begin(), codes.end());
      codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    }
    int n = static_cast<int>(codes.size());
    if (n > kMaxCarrier)
      throw Error(Errc::CarrierTooLarge,
                  "window closure exceeds the 24-element cap");
    StructureData d;
    d.elements.reserve(n);
    for (long long c : codes) d.elements.push_back(label(c));
    d.leq.assign(n, 0);
    d.prec.assign(n, 0);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        if (leq(codes[p], codes[q])) d.leq[p] |= bit(q);
        if (prec(codes[p], codes[q])) d.prec[p] |= bit(q);
      }
    d.bottom = static_cast<int>(
        std::lower_bound(codes.begin(), codes.end(), zero_code) -
        codes.begin());
    return validate_structure(d);
  }
};

enum class OmegaVariant { A, B };

/// Code of the first infinite element in omega_plus_two.
inline constexpr long long kOmegaCode = 1'000'000'000;

/// The chain 0 < 1 < ... < w < w+1 with join = max. Variant A takes
/// -< equal to <=; variant B removes the single pair (w, w). Windows take
/// {0, ..., k-1, w, w+1}.
inline LazyStructure omega_plus_two(OmegaVariant variant) {
  LazyStructure l;
  l.name = variant == OmegaVariant::A ? "omega-plus-two-A" : "omega-plus-two-B";
  l.zero_code = 0;
  l.label = [](long long c) {
    if (c == kOmegaCode) return std::string("w");
    if (c == kOmegaCode + 1) return std::string("w+1");
    return std::to_string(c);
  };
  l.leq = [](long long a, long long b) { return a <= b; };
  l.prec = [variant](long long a, long long b) {
    if (variant == OmegaVariant::B && a == kOmegaCode && b == kOmegaCode)
      return false;
    return a <= b;
  };
  l.join = [](long long a, long long b) { return a > b ? a : b; };
  l.window_codes = [](int k) {
    std::vector<long long> codes;
    for (int i = 0; i < k; ++i) codes.push_back(i);
    codes.push_back(kOmegaCode);
    codes.push_back(kOmegaCode + 1);
    return codes;
  };
  return l;
}

/// Finite unions of bounded open rational intervals: endpoints p/q with
/// q <= max_denominator and |p/q| <= extent. <= is inclusion, -< is compact
/// containment, join is union. The element space is finite; windows take
/// prefixes of the canonical enumeration (by component count, then
/// lexicographic).
inline LazyStructure rational_intervals(int max_denominator, int extent) {
  if (max_denominator < 1 || extent < 1)
    throw Error(Errc::BadInput, "caps must be positive");

  std::vector<Rat> grid;
  for (int q = 1; q <= max_denominator; ++q)
    for (long long p = -static_cast<long long>(extent) * q;
         p <= static_cast<long long>(extent) * q; ++p)
      grid.push_back(Rat(p, q));
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  int g = static_cast<int>(grid.size());

  auto elements = std::make_shared<std::vector<IntervalUnion>>();
  elements->push_back(IntervalUnion::none());
  // All strictly increasing endpoint sequences a1<b1<=a2<b2<=...
  std::vector<std::pair<Rat, Rat>> comps;
  std::function<void(int)> extend = [&](int from) {
    for (int a = from; a < g; ++a)
      for (int b = a + 1; b < g; ++b) {
        comps.push_back({grid[a], grid[b]});
        IntervalUnion u;
        u.comps = comps;
        elements->push_back(u);
        if (elements->size() > 200000)
          throw Error(Errc::BadInput, "interval caps produce too many elements");
        extend(b);
        comps.pop_back();
      }
  };
  extend(0);
  std::sort(elements->begin(), elements->end());

  auto index_of = std::make_shared<std::map<IntervalUnion, long long>>();
  for (std::size_t i = 0; i < elements->size(); ++i)
    (*index_of)[(*elements)[i]] = static_cast<long long>(i);

  LazyStructure l;
  l.name = "rational-intervals-d" + std::to_string(max_denominator) + "-w" +
           std::to_string(extent);
  l.zero_code = 0;
  l.label = [elements](long long c) { return (*elements)[c].str(); };
  l.leq = [elements](long long a, long long b) {
    return subset_of((*elements)[a], (*elements)[b]);
  };
  l.prec = [elements](long long a, long long b) {
    return compactly_inside((*elements)[a], (*elements)[b]);
  };
  l.join = [elements, index_of](long long a, long long b) {
    return index_of->at(IntervalUnion::unite((*elements)[a], (*elements)[b]));
  };
  l.window_codes = [elements](int k) {
    std::vector<long long> codes;
    long long cap = std::min<long long>(k, elements->size());
    for (long long i = 0; i < cap; ++i) codes.push_back(i);
    return codes;
  };
  return l;
}

// ---------------------------------------------------------------------------
// Three-valued windowed axiom checking
// ---------------------------------------------------------------------------

enum class WindowVerdict { Pass, Fail, Unknown };

inline const char* window_verdict_name(WindowVerdict v) {
  switch (v) {
    case WindowVerdict::Pass: return "pass";
    case WindowVerdict::Fail: return "fail";
    case WindowVerdict::Unknown: return "unknown";
  }
  return "?";
}

struct WindowAxiomResult {
  Axiom axiom;
  WindowVerdict verdict = WindowVerdict::Pass;
  /// For Fail: a complete in-window counterexample. For Unknown: the first
  /// tuple whose witness search left the window.
  Witness tuple;
};

struct WindowReport {
  std::vector<WindowAxiomResult> results;

  const WindowAxiomResult& result(Axiom a) const {
    for (const auto& r : results)
      if (r.axiom == a) return r;
    throw Error(Errc::BadInput, "axiom not in report");
  }
};

/// Evaluates the axioms on a window with quantified tuples restricted to
/// the window. Universal axioms are decided outright; a violated tuple of
/// an axiom with inner existentials is reported Unknown, never Fail,
/// because the missing witness may live outside the window. Fail verdicts
/// therefore persist in every larger window.
inline WindowReport window_axiom_report(const Structure& w) {
  WindowReport rep;
  int n = w.size();

  auto definite = [&](Axiom a, std::optional<Witness> v) {
    rep.results.push_back({a, v ? WindowVerdict::Fail : WindowVerdict::Pass,
                           v.value_or(Witness{})});
  };
  definite(Axiom::PrecTransitive, violates_prec_transitive(w));
  definite(Axiom::Auxiliary, violates_auxiliary(w));

  // Distributive: inner witnesses may be out of window.
  {
    WindowAxiomResult r{Axiom::Distributive, WindowVerdict::Pass, {}};
    if (auto v = violates_distributive(w)) {
      r.verdict = WindowVerdict::Unknown;
      r.tuple = *v;
    }
    rep.results.push_back(r);
  }
  {
    WindowAxiomResult r{Axiom::Interpolative, WindowVerdict::Pass, {}};
    if (auto v = violates_interpolative(w)) {
      r.verdict = WindowVerdict::Unknown;
      r.tuple = *v;
    }
    rep.results.push_back(r);
  }
  // Approximating: the forward direction has in-window witnesses (r -< p
  // without r -< q), so it can genuinely fail; the backward direction
  // compares down-sets that may grow, so it is at most Unknown.
  {
    WindowAxiomResult r{Axiom::Approximating, WindowVerdict::Pass, {}};
    for (int p = 0; p < n && r.verdict != WindowVerdict::Fail; ++p)
      for (int q = 0; q < n; ++q) {
        bool below = w.leq(p, q);
        Subset extra = w.prec_down(p) & ~w.prec_down(q);
        if (below && extra != 0) {
          r.verdict = WindowVerdict::Fail;
          r.tuple = {p, q, std::countr_zero(extra)};
          break;
        }
        if (!below && extra == 0 && r.verdict == WindowVerdict::Pass) {
          r.verdict = WindowVerdict::Unknown;
          r.tuple = {p, q};
        }
      }
    rep.results.push_back(r);
  }
  definite(Axiom::JoinPreserving, violates_join_preserving(w));
  // Strong distributivity: the backward direction hinges on a universal
  // antecedent over the full carrier, so any tuple with p not below s v t
  // stays Unknown.
  {
    WindowAxiomResult r{Axiom::StrongDistributive, WindowVerdict::Pass, {}};
    for (int p = 0; p < n && r.verdict == WindowVerdict::Pass; ++p)
      for (int a = 0; a < n && r.verdict == WindowVerdict::Pass; ++a)
        for (int b = 0; b < n; ++b) {
          bool lhs = w.leq(p, w.join(a, b));
          if (!lhs) {
            r.verdict = WindowVerdict::Unknown;
            r.tuple = {p, a, b};
            break;
          }
          for (int p1 = 0; p1 < n; ++p1) {
            if (!w.prec(p1, p)) continue;
            bool found = false;
            for_each_in(w.prec_down(a), [&](int a1) {
              for_each_in(w.prec_down(b), [&](int b1) {
                int j = w.join(a1, b1);
                if (w.prec(p1, j) && w.prec(j, p)) found = true;
              });
            });
            if (!found) {
              r.verdict = WindowVerdict::Unknown;
              r.tuple = {p, a, b, p1};
              break;
            }
          }
          if (r.verdict != WindowVerdict::Pass) break;
        }
    rep.results.push_back(r);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Random and exhaustive instance generation
// ---------------------------------------------------------------------------

enum class PrecMode { SubsetOfLeq, Arbitrary, EqualLeq };

struct GenOptions {
  PrecMode prec_mode = PrecMode::SubsetOfLeq;
  bool close_prec_transitively = false;
};

/// A seeded random join-semilattice with bottom: random base poset, its
/// principal down-sets closed under union (so joins are unions), padded
/// with random order ideals and trimmed back to n by deleting
/// union-irreducible members. Deterministic per (n, seed, options).
inline Structure gen_structure(int n, std::uint64_t seed, GenOptions opts = {}) {
  if (n < 1 || n > kMaxCarrier)
    throw Error(Errc::CarrierTooLarge, "size outside [1,24]");
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + 0x1234567 + n);

  for (int attempt = 0; attempt < 256; ++attempt) {
    int k = std::min(14, n + 2 + attempt % 3);
    std::vector<Subset> up(k, 0);
    for (int i = k - 1; i >= 0; --i) {
      up[i] = bit(i);
      for (int j = i + 1; j < k; ++j)
        if (rng() & 1) up[i] |= up[j];
    }
    std::vector<Subset> down(k, 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (has(up[j], i)) down[i] |= bit(j);

    std::vector<Subset> family;
    family.push_back(0);
    for (int i = 0; i < k; ++i) family.push_back(down[i]);
    auto close_unions = [&]() {
      sort_unique(family);
      for (;;) {
        std::vector<Subset> fresh;
        for (Subset a : family)
          for (Subset b : family)
            if (!std::binary_search(family.begin(), family.end(), a | b))
              fresh.push_back(a | b);
        if (fresh.empty()) break;
        family.insert(family.end(), fresh.begin(), fresh.end());
        sort_unique(family);
      }
    };
    close_unions();
    int guard = 0;
    while (static_cast<int>(family.size()) < n && guard++ < 4 * n) {
      Subset pick = static_cast<Subset>(rng()) & full_set(k);
      Subset ideal = 0;
      for_each_in(pick, [&](int x) { ideal |= down[x]; });
      family.push_back(ideal);
      close_unions();
    }
    if (static_cast<int>(family.size()) < n) continue;
    while (static_cast<int>(family.size()) > n) {
      std::vector<int> irreducible;
      for (std::size_t z = 0; z < family.size(); ++z) {
        if (family[z] == 0) continue;
        bool reducible = false;
        for (std::size_t a = 0; a < family.size() && !reducible; ++a) {
          if (a == z || !is_subset(family[a], family[z])) continue;
          for (std::size_t b = 0; b < family.size(); ++b)
            if (b != z && (family[a] | family[b]) == family[z]) {
              reducible = true;
              break;
            }
        }
        if (!reducible) irreducible.push_back(static_cast<int>(z));
      }
      if (irreducible.empty()) break;
      int victim = irreducible[rng() % irreducible.size()];
      family.erase(family.begin() + victim);
    }
    if (static_cast<int>(family.size()) != n) continue;

    bool closed = true;
    for (Subset a : family)
      for (Subset b : family)
        if (!std::binary_search(family.begin(), family.end(), a | b))
          closed = false;
    if (!closed || family.front() != 0) continue;

    StructureData d;
    for (int i = 0; i < n; ++i) d.elements.push_back("e" + std::to_string(i));
    d.leq.assign(n, 0);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        if (is_subset(family[p], family[q])) d.leq[p] |= bit(q);
    d.bottom = 0;
    d.prec.assign(n, 0);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        bool in = false;
        switch (opts.prec_mode) {
          case PrecMode::SubsetOfLeq:
            in = has(d.leq[p], q) && (rng() & 1);
            break;
          case PrecMode::Arbitrary:
            in = (rng() & 1) != 0;
            break;
          case PrecMode::EqualLeq:
            in = has(d.leq[p], q);
            break;
        }
        if (in) d.prec[p] |= bit(q);
      }
    if (opts.close_prec_transitively) {
      for (;;) {
        bool changed = false;
        for (int p = 0; p < n; ++p)
          for_each_in(d.prec[p], [&](int q) {
            Subset missing = d.prec[q] & ~d.prec[p];
            if (missing != 0) {
              d.prec[p] |= missing;
              changed = true;
            }
          });
        if (!changed) break;
      }
    }
    return validate_structure(d);
  }
  throw std::logic_error("gen_structure could not reach the requested size");
}

/// Enumerates the leq rows of every join-semilattice with bottom on n
/// elements whose order respects element indices (element 0 is the bottom).
/// Every isomorphism class appears; enumeration order is by ascending mask
/// over the strict pair list (0,1),(0,2),(1,2),(0,3),...
template <typename Fn>
inline void for_each_semilattice_leq(int n, Fn&& fn) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.push_back({i, j});
  int p = static_cast<int>(pairs.size());
  for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
    std::vector<Subset> up(n, 0);
    for (int i = 0; i < n; ++i) up[i] = bit(i);
    for (int b = 0; b < p; ++b)
      if (mask & (1u << b)) up[pairs[b].first] |= bit(pairs[b].second);
    if (n > 1 && up[0] != full_set(n)) continue;  // bottom below everything
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (int j = 0; j < n && transitive; ++j)
        if (i != j && has(up[i], j) && !is_subset(up[j], up[i]))
          transitive = false;
    if (!transitive) continue;
    bool joins = true;
    for (int i = 0; i < n && joins; ++i)
      for (int j = i + 1; j < n && joins; ++j) {
        Subset ub = up[i] & up[j];
        bool least = false;
        for_each_in(ub, [&](int u) {
          if (!least && is_subset(ub, up[u])) least = true;
        });
        if (!least) joins = false;
      }
    if (!joins) continue;
    fn(up);
  }
}

/// All (p,q) with p <= q, ordered lexicographically. Subsets of this list
/// are the candidate prec relations below leq.
inline std::vector<std::pair<int, int>> leq_pair_list(
    const std::vector<Subset>& leq_up) {
  std::vector<std::pair<int, int>> pairs;
  for (int pi = 0; pi < static_cast<int>(leq_up.size()); ++pi)
    for_each_in(leq_up[pi], [&](int q) { pairs.push_back({pi, q}); });
  return pairs;
}

inline Structure make_enumerated(const std::vector<Subset>& leq_up,
                                 const std::vector<Subset>& prec) {
  int n = static_cast<int>(leq_up.size());
  StructureData d;
  for (int i = 0; i < n; ++i) d.elements.push_back("e" + std::to_string(i));
  d.leq = leq_up;
  d.prec = prec;
  d.bottom = 0;
  return validate_structure(d);
}

/// All index-respecting posets on n labeled points (no bottom or join
/// requirement); used to enumerate finite T0 spaces via their Alexandrov
/// topologies.
template <typename Fn>
inline void for_each_poset(int n, Fn&& fn) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.push_back({i, j});
  int p = static_cast<int>(pairs.size());
  for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
    std::vector<Subset> up(n, 0);
    for (int i = 0; i < n; ++i) up[i] = bit(i);
    for (int b = 0; b < p; ++b)
      if (mask & (1u << b)) up[pairs[b].first] |= bit(pairs[b].second);
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (int j = 0; j < n && transitive; ++j)
        if (i != j && has(up[i], j) && !is_subset(up[j], up[i]))
          transitive = false;
    if (transitive) fn(up);
  }
}

/// Opens of the Alexandrov topology of a poset: every up-set.
inline std::vector<Subset> alexandrov_opens(const std::vector<Subset>& up_rows) {
  int n = static_cast<int>(up_rows.size());
  std::vector<Subset> opens;
  for (Subset cand = 0; cand <= full_set(n); ++cand) {
    bool upset = true;
    for_each_in(cand, [&](int x) {
      if (!is_subset(up_rows[x], cand)) upset = false;
    });
    if (upset) opens.push_back(cand);
  }
  return opens;
}

/// Every union-basis of a finite topology: the union-closure of the
/// union-irreducible opens plus the empty set is mandatory; optional opens
/// may be added as long as the family stays union-closed.
inline std::vector<std::vector<Subset>> all_union_bases(const Topology& t) {
  std::vector<Subset> irr;
  for (Subset o : t.opens) {
    if (o == 0) continue;
    bool reducible = false;
    for (Subset a : t.opens) {
      if (reducible) break;
      if (a == o || !is_subset(a, o)) continue;
      for (Subset b : t.opens)
        if (b != o && (a | b) == o) {
          reducible = true;
          break;
        }
    }
    if (!reducible) irr.push_back(o);
  }
  std::vector<Subset> mandatory = irr;
  mandatory.push_back(0);
  sort_unique(mandatory);
  for (;;) {
    std::vector<Subset> fresh;
    for (Subset a : mandatory)
      for (Subset b : mandatory)
        if (!std::binary_search(mandatory.begin(), mandatory.end(), a | b))
          fresh.push_back(a | b);
    if (fresh.empty()) break;
    mandatory.insert(mandatory.end(), fresh.begin(), fresh.end());
    sort_unique(mandatory);
  }
  std::vector<Subset> optional;
  for (Subset o : t.opens)
    if (!std::binary_search(mandatory.begin(), mandatory.end(), o))
      optional.push_back(o);
  if (optional.size() > 20)
    throw Error(Errc::BadInput, "too many optional opens to enumerate bases");

  std::vector<std::vector<Subset>> bases;
  for (std::uint32_t mask = 0; mask < (1u << optional.size()); ++mask) {
    std::vector<Subset> cand = mandatory;
    for (std::size_t i = 0; i < optional.size(); ++i)
      if (mask & (1u << i)) cand.push_back(optional[i]);
    sort_unique(cand);
    bool closed = true;
    for (Subset a : cand) {
      if (!closed) break;
      for (Subset b : cand)
        if (!std::binary_search(cand.begin(), cand.end(), a | b)) {
          closed = false;
          break;
        }
    }
    if (closed) bases.push_back(std::move(cand));
  }
  return bases;
}

// ---------------------------------------------------------------------------
// Counterexample search
// ---------------------------------------------------------------------------

struct SearchSpec {
  std::string property;
  int max_size = 4;
  std::uint64_t seed = 0;
  std::uint64_t budget = 1000000;
};

enum class SearchOutcomeKind { Witness, Exhausted, BudgetSpent };

inline const char* search_outcome_name(SearchOutcomeKind k) {
  switch (k) {
    case SearchOutcomeKind::Witness: return "witness";
    case SearchOutcomeKind::Exhausted: return "exhausted";
    case SearchOutcomeKind::BudgetSpent: return "budget-spent";
  }
  return "?";
}

struct SearchOutcome {
  SearchOutcomeKind kind = SearchOutcomeKind::Exhausted;
  std::optional<StructureData> witness;
  std::string witness_note;
  std::string transcript;
  std::uint64_t instances = 0;
};

inline const char* kSearchProperties[] = {
    "extension-counterexample-without-distributivity",
    "finite-predomain-with-strict-prec",
    "sobriety-counterexample",
};

namespace detail {

inline std::string render_relation(const Structure& s,
                                   const std::vector<Subset>& rows) {
  std::string out = "[";
  bool first = true;
  for (int p = 0; p < s.size(); ++p)
    for_each_in(rows[p], [&](int q) {
      if (!first) out += " ";
      out += s.label(p) + "<" + s.label(q);
      first = false;
    });
  return out + "]";
}

inline std::string render_structure(const Structure& s) {
  StructureData d = s.data();
  std::string out = "elements=[";
  for (int i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += s.label(i);
  }
  out += "] leq=" + render_relation(s, d.leq) +
         " prec=" + render_relation(s, d.prec) +
         " bottom=" + s.label(s.bottom());
  return out;
}

}  // namespace detail

/// Deterministic enumeration search over small structures. Three built-in
/// properties:
///  - extension-counterexample-without-distributivity: auxiliary structures
///    carrying a valid disjoint (ideal, round filter) pair that no proper
///    round prime filter separates.
///  - finite-predomain-with-strict-prec: predomains whose -< differs
///    from <=.
///  - sobriety-counterexample: structures (arbitrary prec) whose spectrum
///    fails to be sober or T0; exhaustive for sizes up to 3 and seeded
///    random beyond (100 samples per size).
inline SearchOutcome search(const SearchSpec& spec) {
  bool known = false;
  for (const char* p : kSearchProperties)
    if (spec.property == p) known = true;
  if (!known)
    throw Error(Errc::UnknownProperty, "no property named " + spec.property);

  SearchOutcome out;
  std::ostringstream log;
  log << "search property=" << spec.property << " max-size=" << spec.max_size
      << " seed=" << spec.seed << " budget=" << spec.budget << "\n";

  auto spend = [&]() -> bool {
    ++out.instances;
    return out.instances > spec.budget;
  };
  bool budget_hit = false;

  auto finish = [&](SearchOutcomeKind kind) {
    out.kind = kind;
    log << "instances=" << out.instances
        << " outcome=" << search_outcome_name(kind) << "\n";
    out.transcript = log.str();
    return out;
  };

  if (spec.property == std::string("extension-counterexample-without-distributivity")) {
    for (int n = 1; n <= spec.max_size && !budget_hit; ++n) {
      std::uint64_t at_start = out.instances;
      bool found = false;
      for_each_semilattice_leq(n, [&](const std::vector<Subset>& leq_up) {
        if (found || budget_hit) return;
        auto pairs = leq_pair_list(leq_up);
        if (pairs.size() > 25) return;
        for (std::uint64_t mask = 0; mask < (1ull << pairs.size()); ++mask) {
          if (spend()) {
            budget_hit = true;
            return;
          }
          std::vector<Subset> prec(n, 0);
          for (std::size_t b = 0; b < pairs.size(); ++b)
            if (mask & (1ull << b)) prec[pairs[b].first] |= bit(pairs[b].second);
          Structure s = make_enumerated(leq_up, prec);
          if (violates_auxiliary(s)) continue;
          std::vector<Subset> points;
          for (Subset cand = 0; cand <= s.universe(); ++cand)
            if (is_spectrum_point(s, cand)) points.push_back(cand);
          std::vector<Subset> ideals, filters;
          for (Subset cand = 0; cand <= s.universe(); ++cand) {
            if (is_ideal(s, cand)) ideals.push_back(cand);
            if (cand != 0 && !has(cand, s.bottom()) && is_round_filter(s, cand))
              filters.push_back(cand);
          }
          for (Subset i : ideals) {
            for (Subset f : filters) {
              if ((i & f) != 0) continue;
              bool extendable = false;
              for (Subset p : points)
                if (is_subset(f, p) && (p & i) == 0) {
                  extendable = true;
                  break;
                }
              if (!extendable) {
                out.witness = s.data();
                out.witness_note = "I=" + s.label_set(i) + " F=" + s.label_set(f);
                log << "witness at n=" << n << " instance=" << out.instances
                    << " " << detail::render_structure(s) << " "
                    << out.witness_note << "\n";
                found = true;
                return;
              }
            }
          }
        }
      });
      if (found) return finish(SearchOutcomeKind::Witness);
      log << "n=" << n << " instances=" << (out.instances - at_start) << "\n";
    }
    return finish(budget_hit ? SearchOutcomeKind::BudgetSpent
                             : SearchOutcomeKind::Exhausted);
  }

  if (spec.property == std::string("finite-predomain-with-strict-prec")) {
    for (int n = 1; n <= spec.max_size && !budget_hit; ++n) {
      std::uint64_t at_start = out.instances;
      bool found = false;
      for_each_semilattice_leq(n, [&](const std::vector<Subset>& leq_up) {
        if (found || budget_hit) return;
        auto pairs = leq_pair_list(leq_up);
        if (pairs.size() > 25) return;
        for (std::uint64_t mask = 0; mask < (1ull << pairs.size()); ++mask) {
          if (spend()) {
            budget_hit = true;
            return;
          }
          std::vector<Subset> prec(n, 0);
          for (std::size_t b = 0; b < pairs.size(); ++b)
            if (mask & (1ull << b)) prec[pairs[b].first] |= bit(pairs[b].second);
          bool equals_leq = prec == leq_up;
          if (equals_leq) continue;
          Structure s = make_enumerated(leq_up, prec);
          if (is_predomain(s)) {
            out.witness = s.data();
            out.witness_note = "predomain with prec != leq";
            log << "witness at n=" << n << " instance=" << out.instances
                << " " << detail::render_structure(s) << "\n";
            found = true;
            return;
          }
        }
      });
      if (found) return finish(SearchOutcomeKind::Witness);
      log << "n=" << n << " instances=" << (out.instances - at_start) << "\n";
    }
    return finish(budget_hit ? SearchOutcomeKind::BudgetSpent
                             : SearchOutcomeKind::Exhausted);
  }

  // sobriety-counterexample
  auto spectrum_sober_and_t0 = [](const Structure& s) {
    SpectrumResult spec_res = enumerate_spectrum(s);
    SoberReport rep = sober_check(spec_res.topology());
    return rep.is_sober && rep.is_t0;
  };
  for (int n = 1; n <= std::min(spec.max_size, 3) && !budget_hit; ++n) {
    std::uint64_t at_start = out.instances;
    bool found = false;
    for_each_semilattice_leq(n, [&](const std::vector<Subset>& leq_up) {
      if (found || budget_hit) return;
      std::vector<std::pair<int, int>> all_pairs;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) all_pairs.push_back({a, b});
      for (std::uint64_t mask = 0; mask < (1ull << all_pairs.size()); ++mask) {
        if (spend()) {
          budget_hit = true;
          return;
        }
        std::vector<Subset> prec(n, 0);
        for (std::size_t b = 0; b < all_pairs.size(); ++b)
          if (mask & (1ull << b))
            prec[all_pairs[b].first] |= bit(all_pairs[b].second);
        Structure s = make_enumerated(leq_up, prec);
        if (!spectrum_sober_and_t0(s)) {
          out.witness = s.data();
          out.witness_note = "spectrum not sober or not T0";
          log << "witness at n=" << n << " instance=" << out.instances << " "
              << detail::render_structure(s) << "\n";
          found = true;
          return;
        }
      }
    });
    if (found) return finish(SearchOutcomeKind::Witness);
    log << "n=" << n << " instances=" << (out.instances - at_start) << "\n";
  }
  for (int n = 4; n <= spec.max_size && !budget_hit; ++n) {
    std::uint64_t at_start = out.instances;
    for (int i = 0; i < 100; ++i) {
      if (spend()) {
        budget_hit = true;
        break;
      }
      Structure s = gen_structure(
          n, spec.seed * 1000003ull + static_cast<std::uint64_t>(n) * 101 + i,
          GenOptions{PrecMode::Arbitrary, false});
      if (!spectrum_sober_and_t0(s)) {
        out.witness = s.data();
        out.witness_note = "spectrum not sober or not T0";
        log << "witness at n=" << n << " instance=" << out.instances << " "
            << detail::render_structure(s) << "\n";
        return finish(SearchOutcomeKind::Witness);
      }
    }
    if (!budget_hit)
      log << "n=" << n << " instances=" << (out.instances - at_start) << "\n";
  }
  return finish(budget_hit ? SearchOutcomeKind::BudgetSpent
                           : SearchOutcomeKind::Exhausted);
}

}  // namespace predual

#endif  // PREDUAL_EXEMPLARS_HPP_
