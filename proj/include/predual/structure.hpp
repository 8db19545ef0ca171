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

#ifndef PREDUAL_STRUCTURE_HPP_
#define PREDUAL_STRUCTURE_HPP_

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "predual/core.hpp"

namespace predual {

/// Raw description of a finite join-semilattice with an extra relation.
/// Relations are row masks: bit q of leq[p] means p <= q, bit q of prec[p]
/// means p -< q. `join` is optional; when present it is cross-checked
/// against the least upper bounds computed from `leq`.
struct StructureData {
  std::vector<std::string> elements;
  std::vector<Subset> leq;
  std::vector<Subset> prec;
  std::optional<std::vector<std::vector<int>>> join;
  int bottom = 0;
};

/// A validated, immutable (S, <=, -<, v, 0). The partial-order and join
/// invariants are established once at construction; `prec` is stored raw,
/// exactly as given. All predicates on structures are pure functions.
class Structure {
 public:
  static Structure validate(const StructureData& data) { return Structure(data); }

  int size() const { return n_; }
  Subset universe() const { return full_set(n_); }
  int bottom() const { return bottom_; }
  const std::string& label(int p) const { return labels_[p]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool leq(int p, int q) const { return has(leq_up_[p], q); }
  bool prec(int p, int q) const { return has(prec_up_[p], q); }
  int join(int p, int q) const { return join_[p * n_ + q]; }

  /// {q : p <= q}
  Subset up_of(int p) const { return leq_up_[p]; }
  /// {q : q <= p}
  Subset down_of(int p) const { return leq_down_[p]; }
  /// p^< = {q : p -< q}
  Subset prec_up(int p) const { return prec_up_[p]; }
  /// p^> = {r : r -< p}
  Subset prec_down(int p) const { return prec_down_[p]; }

  /// Join of every element of `s`; the empty join is the bottom.
  int join_all(Subset s) const {
    int j = bottom_;
    for_each_in(s, [&](int p) { j = join(j, p); });
    return j;
  }

  std::string label_set(Subset s) const {
    std::string out = "{";
    bool first = true;
    for_each_in(s, [&](int p) {
      if (!first) out += ",";
      out += labels_[p];
      first = false;
    });
    return out + "}";
  }

  std::vector<std::string> witness_labels(const std::vector<int>& ids) const {
    std::vector<std::string> out;
    out.reserve(ids.size());
    for (int i : ids) out.push_back(labels_[i]);
    return out;
  }

  bool operator==(const Structure& other) const {
    return labels_ == other.labels_ && leq_up_ == other.leq_up_ &&
           prec_up_ == other.prec_up_ && bottom_ == other.bottom_;
  }

  StructureData data() const {
    StructureData d;
    d.elements = labels_;
    d.leq = leq_up_;
    d.prec = prec_up_;
    std::vector<std::vector<int>> j(n_, std::vector<int>(n_));
    for (int p = 0; p < n_; ++p)
      for (int q = 0; q < n_; ++q) j[p][q] = join(p, q);
    d.join = std::move(j);
    d.bottom = bottom_;
    return d;
  }

 private:
  explicit Structure(const StructureData& data) {
    n_ = static_cast<int>(data.elements.size());
    if (n_ < 1 || n_ > kMaxCarrier)
      throw Error(Errc::CarrierTooLarge,
                  "carrier size " + std::to_string(n_) + " outside [1," +
                      std::to_string(kMaxCarrier) + "]");
    if (static_cast<int>(data.leq.size()) != n_ ||
        static_cast<int>(data.prec.size()) != n_)
      throw Error(Errc::BadInput, "relation row count does not match carrier");
    labels_ = data.elements;
    leq_up_.assign(n_, 0);
    for (int p = 0; p < n_; ++p) leq_up_[p] = data.leq[p] & full_set(n_);

    // Partial order: reflexive, antisymmetric, transitive.
    for (int p = 0; p < n_; ++p)
      if (!has(leq_up_[p], p))
        throw Error(Errc::NotPartialOrder, "leq not reflexive at " + labels_[p],
                    {labels_[p]});
    for (int p = 0; p < n_; ++p)
      for (int q = 0; q < n_; ++q)
        if (p != q && has(leq_up_[p], q) && has(leq_up_[q], p))
          throw Error(Errc::NotPartialOrder,
                      "leq not antisymmetric on " + labels_[p] + "," + labels_[q],
                      {labels_[p], labels_[q]});
    for (int p = 0; p < n_; ++p)
      for_each_in(leq_up_[p], [&](int q) {
        if (!is_subset(leq_up_[q], leq_up_[p])) {
          for_each_in(leq_up_[q] & ~leq_up_[p], [&](int r) {
            throw Error(Errc::NotPartialOrder,
                        "leq not transitive on " + labels_[p] + "<=" +
                            labels_[q] + "<=" + labels_[r],
                        {labels_[p], labels_[q], labels_[r]});
          });
        }
      });

    leq_down_.assign(n_, 0);
    for (int p = 0; p < n_; ++p)
      for_each_in(leq_up_[p], [&](int q) { leq_down_[q] |= bit(p); });

    bottom_ = data.bottom;
    if (bottom_ < 0 || bottom_ >= n_ || leq_up_[bottom_] != full_set(n_))
      throw Error(Errc::NoBottom, "designated bottom is not below every element",
                  bottom_ >= 0 && bottom_ < n_
                      ? std::vector<std::string>{labels_[bottom_]}
                      : std::vector<std::string>{});

    // Least upper bounds for every pair.
    join_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (int p = 0; p < n_; ++p)
      for (int q = p; q < n_; ++q) {
        Subset ub = leq_up_[p] & leq_up_[q];
        int least = -1;
        for_each_in(ub, [&](int u) {
          if (least == -1 && is_subset(ub, leq_up_[u])) least = u;
        });
        if (least == -1)
          throw Error(Errc::NoJoin,
                      "no least upper bound for " + labels_[p] + "," + labels_[q],
                      {labels_[p], labels_[q]});
        join_[p * n_ + q] = least;
        join_[q * n_ + p] = least;
      }
    if (data.join) {
      const auto& j = *data.join;
      if (static_cast<int>(j.size()) != n_)
        throw Error(Errc::JoinMismatch, "join table has wrong shape");
      for (int p = 0; p < n_; ++p) {
        if (static_cast<int>(j[p].size()) != n_)
          throw Error(Errc::JoinMismatch, "join table has wrong shape");
        for (int q = 0; q < n_; ++q)
          if (j[p][q] != join_[p * n_ + q])
            throw Error(Errc::JoinMismatch,
                        "supplied join[" + labels_[p] + "][" + labels_[q] +
                            "] disagrees with computed least upper bound",
                        {labels_[p], labels_[q]});
      }
    }

    prec_up_.assign(n_, 0);
    prec_down_.assign(n_, 0);
    for (int p = 0; p < n_; ++p) {
      prec_up_[p] = data.prec[p] & full_set(n_);
      for_each_in(prec_up_[p], [&](int q) { prec_down_[q] |= bit(p); });
    }
  }

  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<Subset> leq_up_, leq_down_, prec_up_, prec_down_;
  std::vector<std::uint8_t> join_;
  int bottom_ = 0;
};

inline Structure validate_structure(const StructureData& data) {
  return Structure::validate(data);
}

/// {r : r -< p}
inline Subset down_set(const Structure& s, int p) { return s.prec_down(p); }
/// {r : p -< r}
inline Subset up_set(const Structure& s, int p) { return s.prec_up(p); }

inline Subset up_closure_leq(const Structure& s, Subset m) {
  Subset out = 0;
  for_each_in(m, [&](int p) { out |= s.up_of(p); });
  return out;
}

inline Subset down_closure_leq(const Structure& s, Subset m) {
  Subset out = 0;
  for_each_in(m, [&](int p) { out |= s.down_of(p); });
  return out;
}

/// Def: p,q in F  iff  some r in F lies below both. Equivalently F is an
/// up-set in which every pair has a lower bound inside F. The empty set
/// passes (both directions are vacuous); callers needing properness or
/// nonemptiness enforce them separately.
inline bool is_filter(const Structure& s, Subset f) {
  Subset bad_up = up_closure_leq(s, f) & ~f;
  if (bad_up != 0) return false;
  bool ok = true;
  for_each_in(f, [&](int p) {
    if (!ok) return;
    for_each_in(f, [&](int q) {
      if (!ok) return;
      if ((s.down_of(p) & s.down_of(q) & f) == 0) ok = false;
    });
  });
  return ok;
}

/// Down-closed and closed under pairwise joins.
inline bool is_ideal(const Structure& s, Subset i) {
  if ((down_closure_leq(s, i) & ~i) != 0) return false;
  bool ok = true;
  for_each_in(i, [&](int p) {
    if (!ok) return;
    for_each_in(i, [&](int q) {
      if (!ok) return;
      if (!has(i, s.join(p, q))) ok = false;
    });
  });
  return ok;
}

/// Filter whose complement is an ideal.
inline bool is_prime_filter(const Structure& s, Subset p) {
  return is_filter(s, p) && is_ideal(s, s.universe() & ~p);
}

/// Filter in which every member has a -<-predecessor inside.
inline bool is_round_filter(const Structure& s, Subset r) {
  if (!is_filter(s, r)) return false;
  bool ok = true;
  for_each_in(r, [&](int p) {
    if (ok && (s.prec_down(p) & r) == 0) ok = false;
  });
  return ok;
}

/// Least ideal containing `seeds`: close under joins and down-closure to a
/// fixpoint.
inline Subset generate_ideal(const Structure& s, Subset seeds) {
  Subset cur = seeds;
  for (;;) {
    Subset next = down_closure_leq(s, cur);
    for_each_in(cur, [&](int p) {
      for_each_in(cur, [&](int q) { next |= bit(s.join(p, q)); });
    });
    if (next == cur) return cur;
    cur = next;
  }
}

/// Least filter containing `seeds`. Exists only when the seeds are
/// directed among themselves (a join-semilattice has no meets to fall back
/// on); otherwise throws NotDirected with the first offending pair.
inline Subset generate_filter(const Structure& s, Subset seeds) {
  std::optional<std::pair<int, int>> bad;
  for_each_in(seeds, [&](int p) {
    if (bad) return;
    for_each_in(seeds, [&](int q) {
      if (bad) return;
      if ((s.down_of(p) & s.down_of(q) & seeds) == 0) bad = {p, q};
    });
  });
  if (bad)
    throw Error(Errc::NotDirected,
                "seeds have no common lower bound among themselves: " +
                    s.label(bad->first) + "," + s.label(bad->second),
                {s.label(bad->first), s.label(bad->second)});
  return up_closure_leq(s, seeds);
}

}  // namespace predual

#endif  // PREDUAL_STRUCTURE_HPP_
