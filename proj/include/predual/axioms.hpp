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

#ifndef PREDUAL_AXIOMS_HPP_
#define PREDUAL_AXIOMS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "predual/structure.hpp"

namespace predual {

enum class Axiom {
  PrecTransitive,
  Auxiliary,
  Distributive,
  Interpolative,
  Approximating,
  JoinPreserving,
  StrongDistributive,
  Predomain,
};

inline const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::PrecTransitive: return "prec-transitive";
    case Axiom::Auxiliary: return "auxiliary";
    case Axiom::Distributive: return "distributive";
    case Axiom::Interpolative: return "interpolative";
    case Axiom::Approximating: return "approximating";
    case Axiom::JoinPreserving: return "join-preserving";
    case Axiom::StrongDistributive: return "strong-distributive";
    case Axiom::Predomain: return "predomain";
  }
  return "?";
}

inline std::optional<Axiom> axiom_from_name(const std::string& name) {
  for (Axiom a :
       {Axiom::PrecTransitive, Axiom::Auxiliary, Axiom::Distributive,
        Axiom::Interpolative, Axiom::Approximating, Axiom::JoinPreserving,
        Axiom::StrongDistributive, Axiom::Predomain})
    if (name == axiom_name(a)) return a;
  return std::nullopt;
}

/// A concrete counterexample: element indices whose meaning depends on the
/// axiom (see the recheck function below, which re-evaluates a witness).
using Witness = std::vector<int>;

// Each checker returns the first violation in ascending scan order, or
// nullopt when the axiom holds. Scan order is part of the contract: reports
// are deterministic and the first witness is the canonical one.

inline std::optional<Witness> violates_prec_transitive(const Structure& s) {
  int n = s.size();
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      if (!s.prec(p, q)) continue;
      Subset missing = s.prec_up(q) & ~s.prec_up(p);
      if (missing != 0)
        for (int r = 0; r < n; ++r)
          if (has(missing, r)) return Witness{p, q, r};
    }
  return std::nullopt;
}

/// (p <= p' -< q' <= q  =>  p -< q) and (p -< q  =>  p <= q).
/// A 4-tuple witness violates the first implication, a 2-tuple the second.
inline std::optional<Witness> violates_auxiliary(const Structure& s) {
  int n = s.size();
  for (int p = 0; p < n; ++p)
    for (int p1 = 0; p1 < n; ++p1) {
      if (!s.leq(p, p1)) continue;
      for (int q1 = 0; q1 < n; ++q1) {
        if (!s.prec(p1, q1)) continue;
        for (int q = 0; q < n; ++q)
          if (s.leq(q1, q) && !s.prec(p, q)) return Witness{p, p1, q1, q};
      }
    }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (s.prec(p, q) && !s.leq(p, q)) return Witness{p, q};
  return std::nullopt;
}

/// p -< s v t  =>  for all p' -< p there are s' -< s, t' -< t with
/// p' <= s' v t' <= p. Witness: (p, s, t, p').
inline std::optional<Witness> violates_distributive(const Structure& s) {
  int n = s.size();
  for (int p = 0; p < n; ++p)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (!s.prec(p, s.join(a, b))) continue;
        for (int p1 = 0; p1 < n; ++p1) {
          if (!s.prec(p1, p)) continue;
          bool found = false;
          for_each_in(s.prec_down(a), [&](int a1) {
            if (found) return;
            for_each_in(s.prec_down(b), [&](int b1) {
              if (found) return;
              int j = s.join(a1, b1);
              if (s.leq(p1, j) && s.leq(j, p)) found = true;
            });
          });
          if (!found) return Witness{p, a, b, p1};
        }
      }
  return std::nullopt;
}

inline std::optional<Witness> violates_interpolative(const Structure& s) {
  int n = s.size();
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (s.prec(p, q) && (s.prec_up(p) & s.prec_down(q)) == 0)
        return Witness{p, q};
  return std::nullopt;
}

/// <= must be the lower preorder of -<: p <= q iff p^> is contained in q^>.
/// A 3-tuple (p,q,r) witnesses r -< p, not r -< q although p <= q; a 2-tuple
/// (p,q) witnesses containment without p <= q.
inline std::optional<Witness> violates_approximating(const Structure& s) {
  int n = s.size();
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      bool below = s.leq(p, q);
      Subset extra = s.prec_down(p) & ~s.prec_down(q);
      if (below && extra != 0) {
        for (int r = 0; r < n; ++r)
          if (has(extra, r)) return Witness{p, q, r};
      }
      if (!below && extra == 0) return Witness{p, q};
    }
  return std::nullopt;
}

/// p' -< p and q' -< q  =>  p' v q' -< p v q. Witness: (p', p, q', q).
inline std::optional<Witness> violates_join_preserving(const Structure& s) {
  int n = s.size();
  for (int p1 = 0; p1 < n; ++p1)
    for (int p = 0; p < n; ++p) {
      if (!s.prec(p1, p)) continue;
      for (int q1 = 0; q1 < n; ++q1)
        for (int q = 0; q < n; ++q)
          if (s.prec(q1, q) && !s.prec(s.join(p1, q1), s.join(p, q)))
            return Witness{p1, p, q1, q};
    }
  return std::nullopt;
}

/// Original biconditional distributivity: p <= s v t iff every p' -< p
/// admits s' -< s, t' -< t with p' -< s' v t' -< p. A 4-tuple (p,s,t,p')
/// violates the forward direction, a 3-tuple (p,s,t) the backward one.
inline std::optional<Witness> violates_strong_distributive(const Structure& s) {
  int n = s.size();
  auto tuple_rhs_holds_for = [&](int p, int a, int b, int p1) {
    bool found = false;
    for_each_in(s.prec_down(a), [&](int a1) {
      if (found) return;
      for_each_in(s.prec_down(b), [&](int b1) {
        if (found) return;
        int j = s.join(a1, b1);
        if (s.prec(p1, j) && s.prec(j, p)) found = true;
      });
    });
    return found;
  };
  for (int p = 0; p < n; ++p)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        bool lhs = s.leq(p, s.join(a, b));
        int first_unwitnessed = -1;
        for (int p1 = 0; p1 < n && first_unwitnessed < 0; ++p1)
          if (s.prec(p1, p) && !tuple_rhs_holds_for(p, a, b, p1))
            first_unwitnessed = p1;
        bool rhs = first_unwitnessed < 0;
        if (lhs && !rhs) return Witness{p, a, b, first_unwitnessed};
        if (!lhs && rhs) return Witness{p, a, b};
      }
  return std::nullopt;
}

/// Re-evaluates a stored witness; true when it still violates the axiom.
inline bool witness_violates(const Structure& s, Axiom axiom,
                             const Witness& w) {
  switch (axiom) {
    case Axiom::PrecTransitive:
      return w.size() == 3 && s.prec(w[0], w[1]) && s.prec(w[1], w[2]) &&
             !s.prec(w[0], w[2]);
    case Axiom::Auxiliary:
      if (w.size() == 4)
        return s.leq(w[0], w[1]) && s.prec(w[1], w[2]) && s.leq(w[2], w[3]) &&
               !s.prec(w[0], w[3]);
      return w.size() == 2 && s.prec(w[0], w[1]) && !s.leq(w[0], w[1]);
    case Axiom::Distributive: {
      if (w.size() != 4) return false;
      int p = w[0], a = w[1], b = w[2], p1 = w[3];
      if (!s.prec(p, s.join(a, b)) || !s.prec(p1, p)) return false;
      bool found = false;
      for_each_in(s.prec_down(a), [&](int a1) {
        for_each_in(s.prec_down(b), [&](int b1) {
          int j = s.join(a1, b1);
          if (s.leq(p1, j) && s.leq(j, p)) found = true;
        });
      });
      return !found;
    }
    case Axiom::Interpolative:
      return w.size() == 2 && s.prec(w[0], w[1]) &&
             (s.prec_up(w[0]) & s.prec_down(w[1])) == 0;
    case Axiom::Approximating:
      if (w.size() == 3)
        return s.leq(w[0], w[1]) && s.prec(w[2], w[0]) && !s.prec(w[2], w[1]);
      return w.size() == 2 && !s.leq(w[0], w[1]) &&
             is_subset(s.prec_down(w[0]), s.prec_down(w[1]));
    case Axiom::JoinPreserving:
      return w.size() == 4 && s.prec(w[0], w[1]) && s.prec(w[2], w[3]) &&
             !s.prec(s.join(w[0], w[2]), s.join(w[1], w[3]));
    case Axiom::StrongDistributive: {
      auto rhs_for = [&](int p, int a, int b, int p1) {
        bool found = false;
        for_each_in(s.prec_down(a), [&](int a1) {
          for_each_in(s.prec_down(b), [&](int b1) {
            int j = s.join(a1, b1);
            if (s.prec(p1, j) && s.prec(j, p)) found = true;
          });
        });
        return found;
      };
      if (w.size() == 4)
        return s.leq(w[0], s.join(w[1], w[2])) && s.prec(w[3], w[0]) &&
               !rhs_for(w[0], w[1], w[2], w[3]);
      if (w.size() == 3) {
        int p = w[0], a = w[1], b = w[2];
        if (s.leq(p, s.join(a, b))) return false;
        for (int p1 = 0; p1 < s.size(); ++p1)
          if (s.prec(p1, p) && !rhs_for(p, a, b, p1)) return false;
        return true;
      }
      return false;
    }
    case Axiom::Predomain:
      return false;
  }
  return false;
}

struct AxiomResult {
  Axiom axiom;
  bool pass = false;
  Witness witness;  // empty when pass
};

struct AxiomReport {
  std::vector<AxiomResult> results;

  const AxiomResult& result(Axiom a) const {
    for (const auto& r : results)
      if (r.axiom == a) return r;
    throw Error(Errc::BadInput, "axiom not in report");
  }
  bool passes(Axiom a) const { return result(a).pass; }
};

/// Runs every axiom predicate; Predomain is the conjunction of auxiliary,
/// approximating, interpolative and join-preserving.
inline AxiomReport check_axioms(const Structure& s) {
  AxiomReport rep;
  auto add = [&](Axiom a, std::optional<Witness> v) {
    rep.results.push_back({a, !v.has_value(), v.value_or(Witness{})});
  };
  add(Axiom::PrecTransitive, violates_prec_transitive(s));
  add(Axiom::Auxiliary, violates_auxiliary(s));
  add(Axiom::Distributive, violates_distributive(s));
  add(Axiom::Interpolative, violates_interpolative(s));
  add(Axiom::Approximating, violates_approximating(s));
  add(Axiom::JoinPreserving, violates_join_preserving(s));
  add(Axiom::StrongDistributive, violates_strong_distributive(s));
  bool predomain = rep.passes(Axiom::Auxiliary) &&
                   rep.passes(Axiom::Approximating) &&
                   rep.passes(Axiom::Interpolative) &&
                   rep.passes(Axiom::JoinPreserving);
  rep.results.push_back({Axiom::Predomain, predomain, {}});
  return rep;
}

inline bool is_predomain(const Structure& s) {
  return !violates_auxiliary(s) && !violates_approximating(s) &&
         !violates_interpolative(s) && !violates_join_preserving(s);
}

inline bool is_distributive_predomain(const Structure& s) {
  return is_predomain(s) && !violates_distributive(s);
}

struct LowerPreorder {
  std::vector<Subset> rows;  // rows[p] = {q : p^> subset of q^>}
  bool equals_leq = false;
};

/// The canonical preorder induced by -<; equality with <= is exactly the
/// approximating axiom.
inline LowerPreorder lower_preorder(const Structure& s) {
  LowerPreorder out;
  int n = s.size();
  out.rows.assign(n, 0);
  out.equals_leq = true;
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q)
      if (is_subset(s.prec_down(p), s.prec_down(q))) out.rows[p] |= bit(q);
    if (out.rows[p] != s.up_of(p)) out.equals_leq = false;
  }
  return out;
}

}  // namespace predual

#endif  // PREDUAL_AXIOMS_HPP_
