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

#ifndef CHEREDNIK_MULTIPOLY_HPP
#define CHEREDNIK_MULTIPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cherednik/field.hpp"

namespace cherednik {

using Monomial = std::vector<int>;

/// Graded lexicographic order, descending: begin() of a term map is the
/// leading term (x1 > x2 > ...).
struct GrlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

int monomial_degree(const Monomial& m);

/// Sparse multivariate polynomial: exponent vector -> nonzero coefficient.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, FieldElement, GrlexDesc>;

  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

  static MultiPoly zero(int nvars) { return MultiPoly(nvars); }
  static MultiPoly constant(int nvars, const FieldElement& c);
  static MultiPoly variable(int nvars, int i);  // x_{i}, 0-based
  static MultiPoly monomial(int nvars, Monomial exp, const FieldElement& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }
  const TermMap& terms() const { return terms_; }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  FieldElement coefficient(const Monomial& m) const;
  /// Leading term in grlex order; throws on zero.
  const std::pair<const Monomial, FieldElement>& leading_term() const;

  void add_term(const Monomial& exp, const FieldElement& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly scaled(const FieldElement& c) const;
  /// Scaled so the grlex leading coefficient is 1; zero stays zero.
  MultiPoly monic() const;

  MultiPoly partial_derivative(int i) const;  // d/dx_i, 0-based
  /// p(Ax) for a square matrix A acting on the variable vector.
  MultiPoly substitute_linear(const std::vector<std::vector<FieldElement>>& a) const;
  /// Composition: substitute subs[i] for x_i; all subs share a variable count.
  MultiPoly substitute(const std::vector<MultiPoly>& subs) const;
  /// Exact quotient by the linear form (gamma, x); throws if not divisible.
  MultiPoly divide_by_linear_form(const std::vector<FieldElement>& gamma) const;

  std::string to_string(const std::vector<std::string>& var_names = {}) const;

 private:
  int nvars_;
  TermMap terms_;
};

MultiPoly operator*(const FieldElement& c, const MultiPoly& p);

/// Rectangular matrix of polynomials over a shared variable count.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols, int nvars);

  int rows() const { return static_cast<int>(data_.size()); }
  int cols() const { return data_.empty() ? 0 : static_cast<int>(data_[0].size()); }
  MultiPoly& at(int r, int c) { return data_[r][c]; }
  const MultiPoly& at(int r, int c) const { return data_[r][c]; }

  PolyMatrix operator*(const PolyMatrix& o) const;

 private:
  std::vector<std::vector<MultiPoly>> data_;
};

// ---- exact dense linear algebra over FieldElement ----

using FieldVector = std::vector<FieldElement>;
using FieldMatrix = std::vector<FieldVector>;

/// Outcome of exact Gaussian elimination on M x = b.
struct LinearSolution {
  bool consistent = false;
  FieldVector particular;                // valid when consistent
  std::vector<FieldVector> nullspace;    // basis of the homogeneous space
  bool unique() const { return consistent && nullspace.empty(); }
};

LinearSolution solve_linear_exact(const FieldMatrix& m, const FieldVector& b);
std::vector<FieldVector> nullspace_exact(const FieldMatrix& m);
int rank_exact(FieldMatrix m);
FieldMatrix invert_exact(const FieldMatrix& m);  // throws if singular

}  // namespace cherednik

#endif  // CHEREDNIK_MULTIPOLY_HPP
