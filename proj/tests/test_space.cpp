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
#include "predual/space.hpp"
#include "predual/spectrum.hpp"
#include "predual/topology.hpp"

using namespace predual;
using fixtures::set_of;

namespace {

// Point x is bit 0; the open point y is bit 1.
FiniteSpace sierpinski() {
  return validate_space({"x", "y"}, {0u, 2u, 3u}, {0u, 2u, 3u});
}

FiniteSpace one_point() { return validate_space({"x"}, {0u, 1u}, {0u, 1u}); }

FiniteSpace discrete2() {
  return validate_space({"x", "y"}, {0u, 1u, 2u, 3u}, {0u, 1u, 2u, 3u});
}

// Chain x < y < z in the specialization order; opens are up-sets.
FiniteSpace chain3_space() {
  return validate_space({"x", "y", "z"}, {0u, 4u, 6u, 7u}, {0u, 4u, 6u, 7u});
}

FiniteSpace indiscrete2() { return validate_space({"x", "y"}, {0u, 3u}, {0u, 3u}); }

}  // namespace

TEST_CASE("topology validation") {
  CHECK_THROWS_WITH_AS(validate_topology(2, {0u}),
                       doctest::Contains("NotATopology"), Error);
  CHECK_THROWS_WITH_AS(validate_topology(2, {0u, 1u, 2u}),
                       doctest::Contains("NotATopology"), Error);  // no full set
  CHECK_NOTHROW(validate_topology(2, {0u, 1u, 3u}));
  CHECK_THROWS_WITH_AS(validate_space({"x", "y"}, {0u, 1u, 2u, 3u}, {0u, 1u, 2u}),
                       doctest::Contains("NotATopology"),
                       Error);  // basis misses the union 3
}

TEST_CASE("way-below coincides with containment on finite spaces") {
  FiniteSpace s = sierpinski();
  CHECK(way_below(s.topo, 2u, 3u));
  CHECK(way_below(s.topo, 0u, 2u));
  CHECK_FALSE(way_below(s.topo, 3u, 2u));
  CHECK(way_below(s.topo, 0u, 0u));
  CHECK_THROWS_WITH_AS(way_below(s.topo, 1u, 3u), doctest::Contains("NotOpen"),
                       Error);

  // Cross-check against the raw cover-quantified oracle everywhere.
  for (const FiniteSpace& x :
       {sierpinski(), one_point(), discrete2(), chain3_space(), indiscrete2()})
    for (Subset u : x.topo.opens)
      for (Subset v : x.topo.opens)
        CHECK(way_below(x.topo, u, v) == way_below_cover_oracle(x.topo, u, v));
}

TEST_CASE("sobriety of small spaces") {
  SoberReport sober = sober_check(sierpinski().topo);
  CHECK(sober.is_sober);
  CHECK(sober.is_t0);

  SoberReport ind = sober_check(indiscrete2().topo);
  CHECK_FALSE(ind.is_t0);
  CHECK_FALSE(ind.is_sober);
  REQUIRE(ind.irreducibles.size() == 1);
  CHECK(ind.irreducibles[0].closed_set == 3u);
  CHECK(ind.irreducibles[0].dense_points == std::vector<int>{0, 1});

  CHECK(sober_check(one_point().topo).is_sober);
}

TEST_CASE("spectrum topologies are sober") {
  SpectrumResult spec = enumerate_spectrum(fixtures::c3());
  SoberReport rep = sober_check(spec.topology());
  CHECK(rep.is_sober);
  CHECK(rep.is_t0);
}

TEST_CASE("finite topologies are core compact") {
  for (const FiniteSpace& x :
       {sierpinski(), one_point(), discrete2(), chain3_space(), indiscrete2()})
    CHECK(core_compact_check(x.topo));
  CHECK(core_compact_check(enumerate_spectrum(fixtures::c3()).topology()));
}

TEST_CASE("derived structure of the Sierpinski space is the chain") {
  Structure s = derive_structure(sierpinski());
  CHECK(s.size() == 3);
  CHECK(s.label(0) == "{}");
  CHECK(s.label(1) == "{y}");
  CHECK(s.label(2) == "{x,y}");
  Structure c3 = fixtures::c3();
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q) {
      CHECK(s.leq(p, q) == c3.leq(p, q));
      CHECK(s.prec(p, q) == c3.prec(p, q));  // way-below = subset here
      CHECK(s.join(p, q) == c3.join(p, q));
    }
}

TEST_CASE("derived structures of tiny spaces") {
  Structure one = derive_structure(one_point());
  CHECK(one.size() == 2);
  CHECK(one.prec(0, 0));  // {} way-below {}

  Structure disc = derive_structure(discrete2());
  CHECK(disc.size() == 4);
  Structure d4 = fixtures::diamond4();
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) {
      CHECK(disc.leq(p, q) == d4.leq(p, q));
      CHECK(disc.prec(p, q) == d4.prec(p, q));
    }
}

TEST_CASE("point filters of the Sierpinski space") {
  FiniteSpace x = sierpinski();
  CHECK(point_filter(x, 1) == set_of({1, 2}));  // y lies in {y} and X
  CHECK(point_filter(x, 0) == set_of({2}));     // x lies only in X
}

TEST_CASE("space recovery on small spaces") {
  SpaceRecoveryReport s = verify_space_recovery(sierpinski());
  CHECK(s.pass());
  CHECK(s.space_points == 2);
  CHECK(s.spectrum_points == 2);

  SpaceRecoveryReport c = verify_space_recovery(chain3_space());
  CHECK(c.pass());
  CHECK(c.spectrum_points == 3);

  SpaceRecoveryReport bad = verify_space_recovery(indiscrete2());
  CHECK_FALSE(bad.pass());
  CHECK(bad.precondition_failure == "NotT0");
}

TEST_CASE("derived bases satisfy the distributivity bundle") {
  for (const FiniteSpace& x :
       {sierpinski(), one_point(), discrete2(), chain3_space()}) {
    SpaceAxiomReport rep = verify_derived_basis_axioms(x);
    CHECK(rep.pass);
  }
}

TEST_CASE("round trip: every T0 space with every basis, up to 3 points") {
  int spaces = 0, bases_checked = 0;
  for (int m = 1; m <= 3; ++m)
    for_each_poset(m, [&](const std::vector<Subset>& up) {
      std::vector<Subset> opens = alexandrov_opens(up);
      Topology topo = validate_topology(m, opens);
      ++spaces;
      for (const std::vector<Subset>& basis : all_union_bases(topo)) {
        std::vector<std::string> labels;
        for (int i = 0; i < m; ++i) labels.push_back("p" + std::to_string(i));
        FiniteSpace x = validate_space(labels, opens, basis);
        SpaceRecoveryReport rep = verify_space_recovery(x);
        CAPTURE(m);
        CHECK(rep.pass());
        CHECK(rep.spectrum_points == m);
        CHECK(verify_derived_basis_axioms(x).pass);
        ++bases_checked;
      }
    });
  CHECK(spaces == 1 + 2 + 7);  // index-respecting posets on 1, 2, 3 points
  CHECK(bases_checked >= spaces);
}

TEST_CASE("specialization order of the derived spectrum matches the space") {
  for (const FiniteSpace& x :
       {sierpinski(), one_point(), discrete2(), chain3_space()}) {
    Structure s = derive_structure(x);
    SpectrumResult spec = enumerate_spectrum(s);
    std::vector<Subset> space_order = specialization_up(x.topo);
    // Map each point to its spectrum point and compare orders; the
    // spectrum's specialization order is inclusion of filters.
    REQUIRE(spec.point_count() == x.points());
    std::vector<int> image(x.points(), -1);
    for (int a = 0; a < x.points(); ++a)
      for (int i = 0; i < spec.point_count(); ++i)
        if (spec.points[i] == point_filter(x, a)) image[a] = i;
    for (int a = 0; a < x.points(); ++a)
      for (int b = 0; b < x.points(); ++b) {
        bool spatial = has(space_order[a], b);
        bool spectral =
            is_subset(spec.points[image[a]], spec.points[image[b]]);
        CHECK(spatial == spectral);
      }
  }
}

TEST_CASE("structure-to-space round trip for distributive predomains") {
  // p |-> S_p is injective and carries leq to inclusion; it carries prec to
  // way-below exactly when the bottom sits below itself in prec.
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    int n = 1 + static_cast<int>(seed % 5);
    Structure s = gen_structure(n, seed);
    if (!is_distributive_predomain(s)) continue;
    SpectrumResult spec = enumerate_spectrum(s);
    Topology topo = spec.topology();
    bool injective = true;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q)
        if (spec.basic_opens[p] == spec.basic_opens[q]) injective = false;
    CAPTURE(seed);
    CHECK(injective);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        CHECK(s.leq(p, q) ==
              is_subset(spec.basic_opens[p], spec.basic_opens[q]));
        bool wb = way_below(topo, spec.basic_opens[p], spec.basic_opens[q]);
        if (s.prec(s.bottom(), s.bottom()) || p != s.bottom() || q != s.bottom())
          CHECK(s.prec(p, q) == wb);
      }
  }
}
