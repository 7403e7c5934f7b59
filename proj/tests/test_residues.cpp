// Copyright 2026 The cherednik authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cherednik/coxeter.hpp"
#include "cherednik/residues.hpp"

using namespace cherednik;

TEST_CASE("kind parsing") {
  CHECK(residue_kind_from_string("A") == ResidueKind::A);
  CHECK(residue_kind_from_string("B") == ResidueKind::B);
  CHECK(residue_kind_from_string("D-infinity") == ResidueKind::DInfinity);
  CHECK(residue_kind_from_string("Dinf") == ResidueKind::DInfinity);
  CHECK(residue_kind_from_string("D-zero") == ResidueKind::DZero);
  CHECK(residue_kind_from_string("D0") == ResidueKind::DZero);
  CHECK_THROWS(residue_kind_from_string("E"));
}

TEST_CASE("degree bookkeeping for every kind") {
  for (int m : {0, 1, 2}) {
    for (int s : {1, 2, 3}) {
      CHECK(residue_twisted_period(ResidueKind::A, 3, s, m).degree() == s + 1 + 4 * m);
      CHECK(residue_twisted_period(ResidueKind::B, 3, s, m).degree() == 2 * s + 6 * m);
      CHECK(residue_twisted_period(ResidueKind::DInfinity, 4, s, m).degree() == 2 * s + 6 * m);
    }
    CHECK(residue_twisted_period(ResidueKind::DZero, 4, 0, m).degree() == 4 * (2 * m + 1) - 2 * m);
    CHECK(residue_twisted_period(ResidueKind::DZero, 3, 0, m).degree() == 3 * (2 * m + 1) - 2 * m);
  }
}

TEST_CASE("closed forms at small parameters") {
  // B2, s = 2, m = 0: x^4 - 6 x^2 y^2 + y^4 up to scale
  MultiPoly p = residue_twisted_period(ResidueKind::B, 2, 2, 0);
  MultiPoly expect(2);
  expect.add_term({4, 0}, FieldElement(1));
  expect.add_term({0, 4}, FieldElement(1));
  expect.add_term({2, 2}, FieldElement(-6));
  CHECK(p == expect);

  // D-zero at m = 0 is the coordinate product
  MultiPoly dz = residue_twisted_period(ResidueKind::DZero, 3, 0, 0);
  CHECK(dz == MultiPoly::monomial(3, {1, 1, 1}, FieldElement(1)));

  // A2, s = 1, m = 0: restricted quadric x^2 + x y + y^2 up to scale
  MultiPoly a = residue_twisted_period(ResidueKind::A, 2, 1, 0);
  CHECK(a.degree() == 2);
  CHECK(a.nvars() == 2);
}

TEST_CASE("ambient type-A residues are translation invariant and restrict consistently") {
  for (int s : {1, 2, 3}) {
    MultiPoly amb = residue_A_ambient(3, s, 0);
    MultiPoly diag(4);
    for (int i = 0; i < 4; ++i) diag += amb.partial_derivative(i);
    CHECK(diag.is_zero());
    RootSystem rs = parse_group("A3");
    CHECK(is_invariant(rs, amb));
  }
}

TEST_CASE("residue polynomials are invariant for B and D") {
  RootSystem b3 = parse_group("B3");
  RootSystem d4 = parse_group("D4");
  for (int m : {0, 1}) {
    CHECK(is_invariant(b3, residue_twisted_period(ResidueKind::B, 3, 2, m)));
    CHECK(is_invariant(d4, residue_twisted_period(ResidueKind::DInfinity, 4, 2, m)));
    CHECK(is_invariant(d4, residue_twisted_period(ResidueKind::DZero, 4, 0, m)));
  }
}

TEST_CASE("complex group parameter validation") {
  ComplexGroupSpec spec(2, 3, 1, 1, 0);
  CHECK(spec.nu == Rat(1));  // (3 - 1 + 1)/3
  CHECK(spec.c_at(-1) == spec.c_at(2));
  CHECK(spec.c[0] == Rat(0));
  CHECK_THROWS(ComplexGroupSpec(2, 3, 0, 0, 0));   // q out of range
  CHECK_THROWS(ComplexGroupSpec(2, 3, 3, 0, 0));   // q out of range
  CHECK_THROWS(ComplexGroupSpec(0, 3, 1, 0, 0));   // rank
  CHECK_THROWS(ComplexGroupSpec(2, 3, 1, -1, 0));  // s out of range
}

TEST_CASE("complex family degrees and annihilation") {
  for (auto [n, ell] : std::vector<std::pair<int, long>>{{2, 2}, {2, 3}}) {
    for (long q = 1; q < ell; ++q)
      for (long s : {0L, 1L}) {
        ComplexGroupSpec spec(n, ell, q, s, 0);
        auto f = complex_singular_family(spec);
        REQUIRE(static_cast<int>(f.size()) == n);
        int want = (n - 1) * (0 * ell + ell - q) + n * static_cast<int>(s);
        for (const auto& p : f) {
          CHECK(p.degree() == want);
          for (int i = 0; i < n; ++i) CHECK(complex_dunkl_apply(spec, i, p).is_zero());
        }
        CHECK(complex_group_action_check(spec, f));
      }
  }
}

TEST_CASE("complex generator relations on plain polynomials") {
  ComplexGroupSpec spec(2, 3, 1, 0, 0);
  MultiPoly p(2);
  p.add_term({2, 1}, FieldElement(1));
  p.add_term({0, 3}, FieldElement(2));
  // s_i has order ell
  MultiPoly q = p;
  for (int k = 0; k < 3; ++k) q = complex_s_apply(spec, 0, 1, q);
  CHECK(q == p);
  // sigma^(a) is an involution
  CHECK(complex_sigma_apply(spec, 0, 1, 1, complex_sigma_apply(spec, 0, 1, 1, p)) == p);
}
