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

#include "cherednik/field.hpp"

using namespace cherednik;

namespace {

std::mt19937 rng(20260826);

Rat random_rat() {
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 12);
  Rat r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

FieldElement random_elem(const FieldContextPtr& ctx) {
  if (!ctx) return FieldElement(random_rat());
  std::vector<Rat> c(ctx->degree());
  for (auto& r : c) r = random_rat();
  return FieldElement::extension(ctx, std::move(c));
}

}  // namespace

TEST_CASE("rational string round trip") {
  CHECK(rat_from_string("3/4") == Rat(3, 4));
  CHECK(rat_from_string("-7") == Rat(-7));
  CHECK(rat_to_string(Rat(22, 4)) == "11/2");
  CHECK(rat_to_string(Rat(-5, 1)) == "-5");
  CHECK_THROWS(rat_from_string("1/0"));
  CHECK_THROWS(rat_from_string("abc"));
}

TEST_CASE("ring laws over Q, Q(sqrt -3), Q(zeta_3), Q(zeta_5)") {
  std::vector<FieldContextPtr> ctxs = {nullptr, FieldContext::sqrt_ext(-3),
                                       FieldContext::cyclotomic(3), FieldContext::cyclotomic(5)};
  int cases = 0;
  for (const auto& ctx : ctxs) {
    for (int it = 0; it < 40; ++it) {
      FieldElement a = random_elem(ctx), b = random_elem(ctx), c = random_elem(ctx);
      CHECK(a + b == b + a);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == FieldElement(0));
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == FieldElement(1));
        CHECK(a / a == FieldElement(1));
      }
      ++cases;
    }
  }
  CHECK(cases >= 100);
}

TEST_CASE("minimal polynomial relations") {
  auto s = FieldContext::sqrt_ext(-3);
  FieldElement w = FieldElement::omega(s);
  CHECK(w * w == FieldElement(-3));

  auto z3 = FieldContext::cyclotomic(3);
  FieldElement z = FieldElement::omega(z3);
  CHECK(z * z + z + FieldElement(1) == FieldElement(0));  // Phi_3
  CHECK(z.pow(3) == FieldElement(1));

  auto z5 = FieldContext::cyclotomic(5);
  FieldElement y = FieldElement::omega(z5);
  CHECK(y.pow(5) == FieldElement(1));
  CHECK(y.pow(4) + y.pow(3) + y.pow(2) + y + FieldElement(1) == FieldElement(0));

  auto z2 = FieldContext::cyclotomic(2);
  CHECK(FieldElement::omega(z2) == FieldElement(-1));
}

TEST_CASE("mixed rational and extension arithmetic") {
  auto ctx = FieldContext::sqrt_ext(2);
  FieldElement w = FieldElement::omega(ctx);
  FieldElement x = (w + FieldElement(1)) * (w - FieldElement(1));
  CHECK(x == FieldElement(1));  // 2 - 1
  CHECK((w / w) == FieldElement(1));
  CHECK_THROWS(FieldElement::omega(FieldContext::sqrt_ext(2)) +
               FieldElement::omega(FieldContext::sqrt_ext(3)));
}

TEST_CASE("generalized binomial") {
  CHECK(generalized_binomial(FieldElement(5), 2) == FieldElement(10));
  CHECK(generalized_binomial(FieldElement(1, 2), 2) == FieldElement(-1, 8));
  CHECK(generalized_binomial(FieldElement(7), 0) == FieldElement(1));
  CHECK(generalized_binomial(FieldElement(3), 5) == FieldElement(0));
  // Pascal identity, randomized
  for (int it = 0; it < 120; ++it) {
    FieldElement nu(random_rat());
    std::uniform_int_distribution<long> kd(1, 8);
    long k = kd(rng);
    CHECK(generalized_binomial(nu, k) ==
          generalized_binomial(nu - FieldElement(1), k) +
              generalized_binomial(nu - FieldElement(1), k - 1));
  }
}

TEST_CASE("element string output is stable") {
  CHECK(FieldElement(3, 4).to_string() == "3/4");
  auto ctx = FieldContext::sqrt_ext(-3);
  FieldElement w = FieldElement::omega(ctx);
  FieldElement e = FieldElement(1) + FieldElement(2) * w;
  CHECK(e.to_string() == "[1, 2]");  // coefficients over the power basis of w
}
