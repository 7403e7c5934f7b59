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

#include <random>

#include "cherednik/dunkl.hpp"
#include "cherednik/saito.hpp"
#include "cherednik/shift.hpp"

using namespace cherednik;

namespace {

std::mt19937 rng(31415);

MultiPoly random_poly(int nvars, int max_deg, int terms) {
  MultiPoly p(nvars);
  std::uniform_int_distribution<int> e(0, max_deg);
  std::uniform_int_distribution<int> c(-6, 6);
  for (int t = 0; t < terms; ++t) {
    Monomial m(nvars);
    for (auto& x : m) x = e(rng);
    p.add_term(m, FieldElement(c(rng)));
  }
  return p;
}

FieldElement random_c() {
  std::uniform_int_distribution<int> num(-7, 7);
  std::uniform_int_distribution<int> den(1, 6);
  return FieldElement(num(rng), den(rng));
}

}  // namespace

TEST_CASE("Dunkl operators lower degree by one and reduce to d/dx at c = 0") {
  RootSystem rs = parse_group("B2");
  for (int it = 0; it < 20; ++it) {
    MultiPoly p = random_poly(2, 4, 4);
    FieldElement c = random_c();
    for (int i = 0; i < 2; ++i) {
      MultiPoly d = dunkl_apply(rs, c, i, p);
      if (!d.is_zero()) CHECK(d.degree() <= p.degree() - 1);
      CHECK(dunkl_apply(rs, FieldElement(0), i, p) == p.partial_derivative(i));
    }
  }
}

TEST_CASE("Dunkl operators agree with plain derivatives on invariants") {
  RootSystem rs = parse_group("B3");
  InvariantBasis ib = basic_invariants(rs);
  FieldElement c(2, 5);
  for (const auto& inv : ib.polys)
    for (int i = 0; i < rs.ambient(); ++i)
      CHECK(dunkl_apply(rs, c, i, inv) == inv.partial_derivative(i));
}

TEST_CASE("commutativity over 100+ randomized cases") {
  int cases = 0;
  for (const char* name : {"A2", "B2", "B3", "D3"}) {
    RootSystem rs = parse_group(name);
    std::vector<MultiPoly> samples;
    for (int it = 0; it < 9; ++it) samples.push_back(random_poly(rs.ambient(), 4, 4));
    for (int rep = 0; rep < 3; ++rep) {
      CommutativityReport rep_out = check_commutativity(rs, random_c(), samples);
      CHECK(rep_out.all_zero);
      CHECK(rep_out.violations.empty());
      cases += static_cast<int>(samples.size());
    }
  }
  CHECK(cases >= 100);
}

TEST_CASE("directional operator is linear in the direction") {
  RootSystem rs = parse_group("D3");
  FieldElement c(1, 3);
  MultiPoly p = random_poly(3, 4, 5);
  FieldVector z1 = {FieldElement(1), FieldElement(0), FieldElement(0)};
  FieldVector z2 = {FieldElement(0), FieldElement(2), FieldElement(-1)};
  FieldVector sum = {FieldElement(1), FieldElement(2), FieldElement(-1)};
  CHECK(dunkl_apply_dir(rs, c, sum, p) ==
        dunkl_apply_dir(rs, c, z1, p) + dunkl_apply_dir(rs, c, z2, p));
  CHECK(dunkl_apply_dir(rs, c, z1, p) == dunkl_apply(rs, c, 0, p));
}

TEST_CASE("singularity certificates") {
  RootSystem rs = parse_group("B2");
  MultiPoly x1 = MultiPoly::variable(2, 0);
  SingularCertificate good = is_singular(rs, FieldElement(1, 4), x1);
  CHECK(good.singular);
  for (const auto& r : good.residuals) CHECK(r.is_zero());

  SingularCertificate bad = is_singular(rs, FieldElement(1, 3), x1);
  CHECK_FALSE(bad.singular);
  bool some_nonzero = false;
  for (const auto& r : bad.residuals) some_nonzero = some_nonzero || !r.is_zero();
  CHECK(some_nonzero);
}

TEST_CASE("invariant polynomials of Dunkl operators annihilate the potential") {
  RootSystem rs = parse_group("B2");
  SaitoFrame frame = saito_frame(rs);
  SingularFamily fam = singular_family(rs, frame, 0, 0);
  MultiPoly p2(2);
  for (int i = 0; i < 2; ++i) p2 += MultiPoly::variable(2, i) * MultiPoly::variable(2, i);
  CHECK(calogero_kernel_check(rs, FieldElement(fam.c), p2, fam.q_potential));
  // a generic invariant is not annihilated
  CHECK_FALSE(calogero_kernel_check(rs, FieldElement(1, 5), p2, p2 * p2));
  // rejects non-invariant input
  CHECK_THROWS(calogero_kernel_check(rs, FieldElement(fam.c), MultiPoly::variable(2, 0),
                                     fam.q_potential));
}
