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

#include <doctest.h>

#include "fixtures.hpp"
#include "predual/exemplars.hpp"
#include "predual/spectrum.hpp"

using namespace predual;
using fixtures::set_of;

TEST_CASE("omega-plus-two variant B drops exactly the reflexive pair at w") {
  LazyStructure b = omega_plus_two(OmegaVariant::B);
  CHECK_FALSE(b.prec(kOmegaCode, kOmegaCode));
  CHECK(b.prec(5, kOmegaCode));
  CHECK(b.prec(kOmegaCode, kOmegaCode + 1));
  CHECK(b.prec(kOmegaCode + 1, kOmegaCode + 1));
  LazyStructure a = omega_plus_two(OmegaVariant::A);
  CHECK(a.prec(kOmegaCode, kOmegaCode));
  for (long long p = 0; p <= 6; ++p)
    for (long long q = p; q <= 6; ++q) CHECK(a.prec(p, q));
}

TEST_CASE("omega windows materialize, validate and nest") {
  LazyStructure b = omega_plus_two(OmegaVariant::B);
  Structure w3 = b.window(3);
  REQUIRE(w3.size() == 5);
  CHECK(w3.labels() == std::vector<std::string>{"0", "1", "2", "w", "w+1"});
  CHECK(w3.bottom() == 0);
  for (int k = 1; k <= 5; ++k) {
    Structure wk = b.window(k);
    Structure wk1 = b.window(k + 1);
    // Every element of window(k) appears in window(k+1) with the same
    // relations and joins.
    for (int p = 0; p < wk.size(); ++p) {
      int p1 = -1;
      for (int i = 0; i < wk1.size(); ++i)
        if (wk1.label(i) == wk.label(p)) p1 = i;
      REQUIRE(p1 >= 0);
      for (int q = 0; q < wk.size(); ++q) {
        int q1 = -1;
        for (int i = 0; i < wk1.size(); ++i)
          if (wk1.label(i) == wk.label(q)) q1 = i;
        CHECK(wk.leq(p, q) == wk1.leq(p1, q1));
        CHECK(wk.prec(p, q) == wk1.prec(p1, q1));
        CHECK(wk1.label(wk1.join(p1, q1)) == wk.label(wk.join(p, q)));
      }
    }
  }
}

TEST_CASE("windowed verdicts for omega-plus-two") {
  Structure wb = omega_plus_two(OmegaVariant::B).window(3);
  WindowReport rb = window_axiom_report(wb);
  CHECK(rb.result(Axiom::PrecTransitive).verdict == WindowVerdict::Pass);
  CHECK(rb.result(Axiom::Auxiliary).verdict == WindowVerdict::Pass);
  CHECK(rb.result(Axiom::Distributive).verdict == WindowVerdict::Pass);
  CHECK(rb.result(Axiom::Interpolative).verdict == WindowVerdict::Pass);
  CHECK(rb.result(Axiom::JoinPreserving).verdict == WindowVerdict::Pass);
  // In the window, w and the largest natural have the same strict
  // predecessors, but the separating witness only appears in a larger
  // window; the verdict must be Unknown, never Fail.
  const WindowAxiomResult& approx = rb.result(Axiom::Approximating);
  CHECK(approx.verdict == WindowVerdict::Unknown);
  REQUIRE(approx.tuple.size() == 2);
  CHECK(wb.label(approx.tuple[0]) == "w");
  CHECK(wb.label(approx.tuple[1]) == "2");

  Structure wa = omega_plus_two(OmegaVariant::A).window(3);
  WindowReport ra = window_axiom_report(wa);
  CHECK(ra.result(Axiom::Approximating).verdict == WindowVerdict::Pass);
  CHECK(ra.result(Axiom::Interpolative).verdict == WindowVerdict::Pass);
  // As a plain finite structure, the B window genuinely fails
  // approximating; only the windowed reading refuses to conclude.
  CHECK(violates_approximating(wb).has_value());
  CHECK_FALSE(violates_approximating(wa).has_value());
}

TEST_CASE("no Fail verdict ever rests on an out-of-window witness") {
  // Fail verdicts must carry complete in-window counterexamples.
  std::vector<Structure> windows;
  for (int k = 1; k <= 5; ++k) {
    windows.push_back(omega_plus_two(OmegaVariant::A).window(k));
    windows.push_back(omega_plus_two(OmegaVariant::B).window(k));
  }
  windows.push_back(rational_intervals(1, 2).window(8));
  for (std::uint64_t seed = 0; seed < 40; ++seed)
    windows.push_back(
        gen_structure(1 + seed % 5, seed, {PrecMode::Arbitrary, false}));
  for (const Structure& w : windows)
    for (const auto& r : window_axiom_report(w).results)
      if (r.verdict == WindowVerdict::Fail) {
        CHECK(witness_violates(w, r.axiom, r.tuple));
      }
}

TEST_CASE("windowed spectra of omega-plus-two are chains of the right size") {
  for (int k = 2; k <= 5; ++k) {
    Structure wb = omega_plus_two(OmegaVariant::B).window(k);
    SpectrumResult sb = enumerate_spectrum(wb);
    CHECK(sb.point_count() == k);
    Structure wa = omega_plus_two(OmegaVariant::A).window(k);
    SpectrumResult sa = enumerate_spectrum(wa);
    CHECK(sa.point_count() == k + 1);
    for (const SpectrumResult* s : {&sb, &sa})
      for (int i = 0; i < s->point_count(); ++i)
        for (int j = 0; j < s->point_count(); ++j)
          CHECK((is_subset(s->points[i], s->points[j]) ||
                 is_subset(s->points[j], s->points[i])));
  }
}

TEST_CASE("rational intervals decide compact containment exactly") {
  LazyStructure r = rational_intervals(1, 2);
  auto codes = r.window_codes(1 << 20);
  auto code_of = [&](const std::string& label) {
    for (long long c : codes)
      if (r.label(c) == label) return c;
    REQUIRE(false);
    return -1LL;
  };
  long long c01 = code_of("(0,1)");
  long long cm12 = code_of("(-1,2)");
  CHECK(r.prec(c01, cm12));         // closure [0,1] inside (-1,2)
  CHECK_FALSE(r.prec(c01, c01));    // closure sticks out at both ends
  CHECK(r.leq(c01, c01));
  CHECK(r.prec(r.zero_code, c01));  // empty set compactly inside anything
  long long c02 = code_of("(0,2)");
  CHECK_FALSE(r.prec(c01, c02));    // left endpoint 0 still excluded
  CHECK(r.leq(c01, c02));
  // Join with merging: (0,1) u (1,2) stays two components.
  long long c12 = code_of("(1,2)");
  CHECK(r.label(r.join(c01, c12)) == "(0,1)u(1,2)");
  long long cm11 = code_of("(-1,1)");
  CHECK(r.label(r.join(cm11, c02)) == "(-1,2)");
}

TEST_CASE("windowed verdicts for rational intervals") {
  Structure w = rational_intervals(1, 3).window(8);
  WindowReport rep = window_axiom_report(w);
  CHECK(rep.result(Axiom::Auxiliary).verdict == WindowVerdict::Pass);
  CHECK(rep.result(Axiom::JoinPreserving).verdict == WindowVerdict::Pass);
  CHECK(rep.result(Axiom::PrecTransitive).verdict == WindowVerdict::Pass);
  // Interpolants between integer-endpoint intervals need denominator 2,
  // which lies outside this window: Unknown, not Fail.
  CHECK(rep.result(Axiom::Interpolative).verdict == WindowVerdict::Unknown);
  CHECK(rep.result(Axiom::Approximating).verdict == WindowVerdict::Unknown);
}

TEST_CASE("generator is deterministic and always validates") {
  for (int n = 1; n <= 8; ++n)
    for (std::uint64_t seed = 0; seed < 1250; ++seed) {
      Structure s = gen_structure(n, seed);
      CHECK(s.size() == n);
      // validate_structure ran inside; spot-check determinism.
      if (seed % 100 == 0) CHECK(gen_structure(n, seed) == s);
    }
}

TEST_CASE("prec generation modes") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Structure sub = gen_structure(5, seed, {PrecMode::SubsetOfLeq, false});
    for (int p = 0; p < 5; ++p)
      CHECK(is_subset(sub.prec_up(p), sub.up_of(p)));
    Structure eq = gen_structure(5, seed, {PrecMode::EqualLeq, false});
    for (int p = 0; p < 5; ++p) CHECK(eq.prec_up(p) == eq.up_of(p));
    Structure closed = gen_structure(5, seed, {PrecMode::SubsetOfLeq, true});
    CHECK_FALSE(violates_prec_transitive(closed).has_value());
  }
}

TEST_CASE("three-element samples are always chains") {
  // The only join-semilattice with bottom on three elements is the chain.
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Structure s = gen_structure(3, seed);
    int strict = 0;
    for (int p = 0; p < 3; ++p)
      for (int q = 0; q < 3; ++q)
        if (p != q && s.leq(p, q)) ++strict;
    CHECK(strict == 3);
  }
}

TEST_CASE("semilattice enumeration counts") {
  auto count = [](int n) {
    int c = 0;
    for_each_semilattice_leq(n, [&](const std::vector<Subset>&) { ++c; });
    return c;
  };
  CHECK(count(1) == 1);
  CHECK(count(2) == 1);
  CHECK(count(3) == 1);  // the chain
  CHECK(count(4) == 2);  // chain and diamond
}

TEST_CASE("search: unknown property is rejected") {
  CHECK_THROWS_WITH_AS(search({"no-such-property", 3, 0, 100}),
                       doctest::Contains("UnknownProperty"), Error);
}

TEST_CASE("search: extension counterexamples without distributivity") {
  // The canonical first witness is the four-element diamond whose prec is
  // the auxiliary closure of (top, top): the top filter is round but no
  // proper round prime filter exists at all.
  SearchOutcome out =
      search({"extension-counterexample-without-distributivity", 4, 0, 1000000});
  REQUIRE(out.kind == SearchOutcomeKind::Witness);
  CHECK(out.instances == 499);
  REQUIRE(out.witness.has_value());
  Structure w = validate_structure(*out.witness);
  CHECK(w.size() == 4);
  CHECK(out.witness_note == "I={} F={e3}");
  // Confirm with the oracle: no spectrum point contains the filter.
  CHECK(is_round_filter(w, set_of({3})));
  for (Subset cand = 0; cand <= w.universe(); ++cand)
    if (is_spectrum_point(w, cand)) CHECK_FALSE(is_subset(set_of({3}), cand));
  // And distributivity indeed fails while auxiliary holds.
  CHECK(violates_distributive(w).has_value());
  CHECK_FALSE(violates_auxiliary(w).has_value());
}

TEST_CASE("search: the rigidity sweep finds the vacuous one-point predomain") {
  SearchOutcome out =
      search({"finite-predomain-with-strict-prec", 4, 0, 1000000});
  REQUIRE(out.kind == SearchOutcomeKind::Witness);
  CHECK(out.instances == 1);
  REQUIRE(out.witness.has_value());
  Structure w = validate_structure(*out.witness);
  CHECK(w.size() == 1);
  CHECK(w.prec_up(0) == 0);  // empty prec
  CHECK(is_predomain(w));
}

TEST_CASE("search: no sobriety counterexample exists") {
  SearchOutcome out = search({"sobriety-counterexample", 5, 0, 10000});
  CHECK(out.kind == SearchOutcomeKind::Exhausted);
  CHECK(out.instances == 730);
}

TEST_CASE("search transcripts are reproducible") {
  for (const char* prop : kSearchProperties) {
    SearchOutcome a = search({prop, 4, 7, 5000});
    SearchOutcome b = search({prop, 4, 7, 5000});
    CHECK(a.transcript == b.transcript);
    CHECK(a.instances == b.instances);
    CHECK(a.kind == b.kind);
  }
}

TEST_CASE("search respects its budget") {
  SearchOutcome out = search({"sobriety-counterexample", 5, 0, 100});
  CHECK(out.kind == SearchOutcomeKind::BudgetSpent);
  CHECK(out.instances == 101);
}
