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

#include "cherednik/serialize.hpp"

using namespace cherednik;
using nlohmann::json;

TEST_CASE("rational polynomial round trip") {
  MultiPoly p(3);
  p.add_term({2, 0, 1}, FieldElement(3, 4));
  p.add_term({0, 1, 0}, FieldElement(-5));
  json j = poly_to_json(p);
  CHECK(j["field"]["kind"] == "Q");
  CHECK(poly_from_json(j) == p);
  // string round trip too
  CHECK(poly_from_json(json::parse(j.dump())) == p);
}

TEST_CASE("extension coefficient round trips") {
  auto sq = FieldContext::sqrt_ext(-3);
  MultiPoly p(2);
  p.add_term({1, 0}, FieldElement(1) + FieldElement(2) * FieldElement::omega(sq));
  json j = poly_to_json(p);
  CHECK(j["field"]["kind"] == "Qsqrt");
  CHECK(j["field"]["param"] == -3);
  CHECK(poly_from_json(j) == p);

  auto cyc = FieldContext::cyclotomic(5);
  MultiPoly q(1);
  q.add_term({2}, FieldElement::omega(cyc).pow(3) + FieldElement(1, 7));
  json jq = poly_to_json(q);
  CHECK(jq["field"]["kind"] == "cyclotomic");
  CHECK(poly_from_json(jq) == q);
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS(poly_from_json(json::parse(R"({"vars":2,"field":{"kind":"Z"},"terms":[]})")));
  CHECK_THROWS(poly_from_json(
      json::parse(R"({"vars":2,"field":{"kind":"Q"},"terms":[{"exp":[1],"coef":"1"}]})")));
}

TEST_CASE("frame round trip preserves every component") {
  for (const char* name : {"B2", "D3", "D4"}) {
    RootSystem rs = parse_group(name);
    SaitoFrame frame = saito_frame(rs);
    json j = frame_to_json(frame);
    CHECK(j.contains("U"));
    SaitoFrame back = frame_from_json(j);
    CHECK(back.rank == frame.rank);
    CHECK(back.h == frame.h);
    CHECK(back.degrees == frame.degrees);
    CHECK(back.lambda == frame.lambda);
    REQUIRE(back.t.size() == frame.t.size());
    for (size_t a = 0; a < frame.t.size(); ++a) {
      CHECK(back.t[a] == frame.t[a]);
      CHECK(back.t_restricted[a] == frame.t_restricted[a]);
    }
    for (int a = 0; a < frame.rank; ++a)
      for (int b = 0; b < frame.rank; ++b) CHECK(back.g.at(a, b) == frame.g.at(a, b));
    // the reloaded frame still verifies
    CHECK(verify_saito(rs, back).ok);
  }
}

TEST_CASE("family round trip") {
  RootSystem rs = parse_group("B2");
  SaitoFrame frame = saito_frame(rs);
  SingularFamily fam = singular_family(rs, frame, 0, 1);
  json j = family_to_json(fam);
  SingularFamily back = family_from_json(j);
  CHECK(back.beta == fam.beta);
  CHECK(back.m == fam.m);
  CHECK(back.c == fam.c);
  CHECK(back.degree == fam.degree);
  CHECK(back.q_potential == fam.q_potential);
  CHECK(back.q_potential_flat == fam.q_potential_flat);
  REQUIRE(back.q.size() == fam.q.size());
  for (size_t i = 0; i < fam.q.size(); ++i) CHECK(back.q[i] == fam.q[i]);
}
