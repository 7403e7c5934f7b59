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

#ifndef CHEREDNIK_SAITO_HPP
#define CHEREDNIK_SAITO_HPP

#include <vector>

#include "cherednik/coxeter.hpp"

namespace cherednik {

/// Homogeneous basis of the invariant ring, in ambient x-variables,
/// descending degrees.
struct InvariantBasis {
  std::vector<MultiPoly> polys;
  std::vector<int> degrees;
};

/// Power sums (A: p_2..p_{n+1} of the n+1 ambient variables; B: even power
/// sums; D: even power sums and the coordinate product), sorted by
/// descending degree.
InvariantBasis basic_invariants(const RootSystem& rs);

/// Identity for B/D; for A substitutes z_{n+1} = -(z_1 + ... + z_n),
/// returning a polynomial in rank-many variables.
MultiPoly restrict_to_hyperplane(const RootSystem& rs, const MultiPoly& p);

/// Rewrites invariant polynomials as polynomials in a fixed algebraically
/// independent homogeneous basis, with power caching across calls.
class InvariantRewriter {
 public:
  /// basis lives in k variables (already restricted); degrees descending.
  InvariantRewriter(std::vector<MultiPoly> basis, std::vector<int> degrees);

  /// The unique P with P(y(x)) = p(x); throws if p is not in the subring.
  MultiPoly express(const MultiPoly& p);

 private:
  const MultiPoly& power(int var, int e);

  std::vector<MultiPoly> basis_;
  std::vector<int> degrees_;
  std::vector<std::vector<MultiPoly>> powers_;
};

MultiPoly express_in_invariants(const MultiPoly& p, const std::vector<MultiPoly>& basis,
                                const std::vector<int>& degrees);

/// g^{ab} = sum_i (d coords_a / dx_i)(d coords_b / dx_i), re-expressed in the
/// coordinates themselves; coords are ambient invariant polynomials.
PolyMatrix contravariant_metric(const RootSystem& rs, const std::vector<MultiPoly>& coords);

/// Saito flat coordinate frame: t^a in ambient x-variables, contravariant
/// metric g and intersection matrix U in t-variables, and the diagonal
/// Lambda = -(1/h) diag(d_1 - 1, ..., d_n - 1).
struct SaitoFrame {
  GroupType type;
  int rank = 0;
  int h = 0;
  std::vector<int> degrees;
  std::vector<MultiPoly> t;             // ambient x-variables
  std::vector<MultiPoly> t_restricted;  // rank-many variables (A); same as t otherwise
  PolyMatrix g;                         // in t-variables
  std::vector<Rat> lambda;
};

/// Builds the frame from the residue seeds at m = 0 and an exact linear
/// normalization making eta = d_{t^1} g the antidiagonal identity. For
/// D_{2r} the self-paired degree-n block is definite over Q and the
/// normalization passes through a quadratic extension.
SaitoFrame saito_frame(const RootSystem& rs);

struct SaitoVerification {
  bool ok = false;
  std::vector<std::string> failures;
};

/// Recomputes g from frame.t and asserts d_{t^1} g^{ab} = delta_{a+b,n+1},
/// the degree pattern, and W-invariance of every coordinate.
SaitoVerification verify_saito(const RootSystem& rs, const SaitoFrame& frame);

}  // namespace cherednik

#endif  // CHEREDNIK_SAITO_HPP
