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

#include "cherednik/saito.hpp"

using namespace cherednik;

TEST_CASE("basic invariants have the group's degrees") {
  for (const char* name : {"A2", "A4", "B3", "D3", "D4"}) {
    RootSystem rs = parse_group(name);
    InvariantBasis ib = basic_invariants(rs);
    CHECK(ib.degrees == rs.degrees());
    for (const auto& p : ib.polys) CHECK(is_invariant(rs, p));
  }
}

TEST_CASE("hyperplane restriction") {
  RootSystem rs = parse_group("A2");
  MultiPoly sum(3);
  for (int i = 0; i < 3; ++i) sum += MultiPoly::variable(3, i);
  CHECK(restrict_to_hyperplane(rs, sum).is_zero());
  RootSystem b2 = parse_group("B2");
  MultiPoly p = MultiPoly::variable(2, 0);
  CHECK(restrict_to_hyperplane(b2, p) == p);
}

TEST_CASE("invariant rewriting round trips") {
  std::mt19937 rng(99);
  RootSystem rs = parse_group("B3");
  InvariantBasis ib = basic_invariants(rs);
  InvariantRewriter rw(ib.polys, ib.degrees);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int it = 0; it < 15; ++it) {
    // random homogeneous word in the basis
    std::uniform_int_distribution<int> pick(0, 2);
    MultiPoly word = ib.polys[pick(rng)] * ib.polys[pick(rng)];
    MultiPoly expr = rw.express(word);
    CHECK(expr.substitute(ib.polys) == word);
  }
  // non-invariant input is rejected
  CHECK_THROWS(rw.express(MultiPoly::monomial(3, {2, 0, 0}, FieldElement(1))));
}

TEST_CASE("contravariant metric is symmetric with quasi-homogeneous entries") {
  RootSystem rs = parse_group("B2");
  InvariantBasis ib = basic_invariants(rs);
  PolyMatrix g = contravariant_metric(rs, ib.polys);
  int n = rs.rank();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) CHECK(g.at(a, b) == g.at(b, a));
}

TEST_CASE("frames verify for every classical group in range") {
  for (const char* name : {"A1", "A2", "A3", "B2", "B3", "D3", "D4"}) {
    RootSystem rs = parse_group(name);
    SaitoFrame frame = saito_frame(rs);
    SaitoVerification v = verify_saito(rs, frame);
    INFO(name);
    for (const auto& f : v.failures) INFO(f);
    CHECK(v.ok);
    CHECK(frame.degrees == rs.degrees());
    for (int a = 0; a < rs.rank(); ++a) {
      Rat lam(rs.degrees()[a] - 1, rs.coxeter_number());
      lam.canonicalize();
      CHECK(frame.lambda[a] == -lam);
    }
  }
}

TEST_CASE("B2 top coordinate matches the closed form") {
  RootSystem rs = parse_group("B2");
  SaitoFrame frame = saito_frame(rs);
  MultiPoly expect(2);
  expect.add_term({4, 0}, FieldElement(1));
  expect.add_term({0, 4}, FieldElement(1));
  expect.add_term({2, 2}, FieldElement(-6));
  CHECK(frame.t[0].monic() == expect.monic());
}

TEST_CASE("frames are rational except D4, which needs sqrt(-3)") {
  auto frame_context = [](const SaitoFrame& f) -> FieldContextPtr {
    for (const auto& t : f.t)
      for (const auto& [m, c] : t.terms())
        if (c.context()) return c.context();
    return nullptr;
  };
  for (const char* name : {"A3", "B3", "D3"}) {
    SaitoFrame f = saito_frame(parse_group(name));
    CHECK(frame_context(f) == nullptr);
  }
  SaitoFrame d4 = saito_frame(parse_group("D4"));
  FieldContextPtr ctx = frame_context(d4);
  REQUIRE(ctx != nullptr);
  CHECK(ctx->kind() == FieldContext::Kind::Sqrt);
  CHECK(ctx->param() == -3);
}

TEST_CASE("verify_saito flags a broken frame") {
  RootSystem rs = parse_group("B2");
  SaitoFrame frame = saito_frame(rs);
  frame.t[0] += frame.t[1] * frame.t[1];  // mixes a non-flat degree-4 invariant into t1
  CHECK_FALSE(verify_saito(rs, frame).ok);
}
