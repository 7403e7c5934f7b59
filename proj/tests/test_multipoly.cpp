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

#include "cherednik/multipoly.hpp"

using namespace cherednik;

namespace {

std::mt19937 rng(607);

MultiPoly random_poly(int nvars, int max_deg, int terms) {
  MultiPoly p(nvars);
  std::uniform_int_distribution<int> e(0, max_deg);
  std::uniform_int_distribution<int> c(-9, 9);
  for (int t = 0; t < terms; ++t) {
    Monomial m(nvars);
    for (auto& x : m) x = e(rng);
    p.add_term(m, FieldElement(c(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("grlex order and leading term") {
  MultiPoly p(2);
  p.add_term({1, 1}, FieldElement(5));
  p.add_term({3, 0}, FieldElement(2));
  p.add_term({0, 2}, FieldElement(-1));
  CHECK(p.degree() == 3);
  CHECK(p.leading_term().first == Monomial{3, 0});
  CHECK(p.leading_term().second == FieldElement(2));
  CHECK(p.monic().leading_term().second == FieldElement(1));
  CHECK_FALSE(p.is_homogeneous());
}

TEST_CASE("ring laws for polynomials") {
  for (int it = 0; it < 120; ++it) {
    MultiPoly a = random_poly(3, 3, 4), b = random_poly(3, 3, 4), c = random_poly(3, 3, 4);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == MultiPoly::zero(3));
  }
}

TEST_CASE("derivative Leibniz rule") {
  for (int it = 0; it < 60; ++it) {
    MultiPoly a = random_poly(3, 3, 4), b = random_poly(3, 3, 4);
    for (int i = 0; i < 3; ++i)
      CHECK((a * b).partial_derivative(i) ==
            a.partial_derivative(i) * b + a * b.partial_derivative(i));
  }
}

TEST_CASE("substitution: linear matrix vs composition") {
  std::uniform_int_distribution<int> c(-3, 3);
  for (int it = 0; it < 40; ++it) {
    MultiPoly p = random_poly(3, 3, 4);
    std::vector<std::vector<FieldElement>> a(3, std::vector<FieldElement>(3));
    std::vector<MultiPoly> subs;
    for (int i = 0; i < 3; ++i) {
      MultiPoly row(3);
      for (int j = 0; j < 3; ++j) {
        a[i][j] = FieldElement(c(rng));
        if (!a[i][j].is_zero()) row += a[i][j] * MultiPoly::variable(3, j);
      }
      subs.push_back(row);
    }
    CHECK(p.substitute_linear(a) == p.substitute(subs));
  }
}

TEST_CASE("exact division by linear forms round trips") {
  std::uniform_int_distribution<int> c(-4, 4);
  int done = 0;
  while (done < 120) {
    MultiPoly p = random_poly(3, 3, 4);
    std::vector<FieldElement> gamma(3);
    bool nz = false;
    for (auto& g : gamma) {
      g = FieldElement(c(rng));
      nz = nz || !g.is_zero();
    }
    if (!nz || p.is_zero()) continue;
    MultiPoly form(3);
    for (int i = 0; i < 3; ++i)
      if (!gamma[i].is_zero()) form += gamma[i] * MultiPoly::variable(3, i);
    CHECK((form * p).divide_by_linear_form(gamma) == p);
    ++done;
  }
  // indivisible input throws
  MultiPoly one = MultiPoly::constant(2, FieldElement(1));
  CHECK_THROWS(one.divide_by_linear_form({FieldElement(1), FieldElement(1)}));
}

TEST_CASE("linear solver on a known system") {
  // x + y = 3, x - y = 1
  FieldMatrix m = {{FieldElement(1), FieldElement(1)}, {FieldElement(1), FieldElement(-1)}};
  FieldVector b = {FieldElement(3), FieldElement(1)};
  LinearSolution s = solve_linear_exact(m, b);
  REQUIRE(s.unique());
  CHECK(s.particular[0] == FieldElement(2));
  CHECK(s.particular[1] == FieldElement(1));

  // inconsistent
  FieldMatrix m2 = {{FieldElement(1), FieldElement(1)}, {FieldElement(2), FieldElement(2)}};
  FieldVector b2 = {FieldElement(1), FieldElement(3)};
  CHECK_FALSE(solve_linear_exact(m2, b2).consistent);

  // underdetermined: nullspace vector satisfies the system
  FieldVector b3 = {FieldElement(1), FieldElement(2)};
  LinearSolution s3 = solve_linear_exact(m2, b3);
  REQUIRE(s3.consistent);
  REQUIRE(s3.nullspace.size() == 1);
  const auto& v = s3.nullspace[0];
  CHECK(m2[0][0] * v[0] + m2[0][1] * v[1] == FieldElement(0));
}

TEST_CASE("nullspace and rank on random matrices") {
  std::uniform_int_distribution<int> c(-5, 5);
  for (int it = 0; it < 40; ++it) {
    int rows = 3, cols = 5;
    FieldMatrix m(rows, FieldVector(cols));
    for (auto& r : m)
      for (auto& x : r) x = FieldElement(c(rng));
    auto ns = nullspace_exact(m);
    CHECK(static_cast<int>(ns.size()) == cols - rank_exact(m));
    for (const auto& v : ns)
      for (int i = 0; i < rows; ++i) {
        FieldElement acc(0);
        for (int j = 0; j < cols; ++j) acc += m[i][j] * v[j];
        CHECK(acc == FieldElement(0));
      }
  }
}

TEST_CASE("matrix inverse round trip") {
  std::uniform_int_distribution<int> c(-5, 5);
  int done = 0;
  while (done < 20) {
    FieldMatrix m(3, FieldVector(3));
    for (auto& r : m)
      for (auto& x : r) x = FieldElement(c(rng));
    if (rank_exact(m) < 3) continue;
    FieldMatrix inv = invert_exact(m);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        FieldElement acc(0);
        for (int k = 0; k < 3; ++k) acc += m[i][k] * inv[k][j];
        CHECK(acc == FieldElement(i == j ? 1 : 0));
      }
    ++done;
  }
  FieldMatrix sing = {{FieldElement(1), FieldElement(2)}, {FieldElement(2), FieldElement(4)}};
  CHECK_THROWS(invert_exact(sing));
}

TEST_CASE("polynomial matrix product") {
  PolyMatrix a(1, 2, 1), b(2, 1, 1);
  a.at(0, 0) = MultiPoly::variable(1, 0);
  a.at(0, 1) = MultiPoly::constant(1, FieldElement(1));
  b.at(0, 0) = MultiPoly::variable(1, 0);
  b.at(1, 0) = MultiPoly::constant(1, FieldElement(-1));
  PolyMatrix c = a * b;
  MultiPoly expect = MultiPoly::variable(1, 0) * MultiPoly::variable(1, 0) -
                     MultiPoly::constant(1, FieldElement(1));
  CHECK(c.at(0, 0) == expect);
}
