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

#ifndef CHEREDNIK_SHIFT_HPP
#define CHEREDNIK_SHIFT_HPP

#include <vector>

#include "cherednik/saito.hpp"

namespace cherednik {

/// U^b_a = g^{b, n+1-a} in flat coordinates (0-based: U[b][a] = g[b][n-1-a]).
PolyMatrix compute_U(const SaitoFrame& frame);

/// Covector family in flat coordinates:
///   xi^{(0)} = e_beta,  xi^{(j)} = xi^{(j-1)} U / ((d_beta - d_a + j h)/h)
/// iterated m times; beta is 0-based.
std::vector<MultiPoly> xi_shift(const SaitoFrame& frame, int beta, int m);

/// Singular polynomial family at c = (d_beta - 1)/h + m. q_i span the
/// reflection isotypic component, Q is the invariant potential with
/// d_i Q = q_i and Euler degree d_beta + h m. Everything is scaled so Q is
/// monic.
struct SingularFamily {
  int beta = 0;  // 0-based index into the frame degrees
  int m = 0;
  Rat c;
  int degree = 0;              // common degree of the q_i
  std::vector<MultiPoly> xi;   // flat coordinates
  std::vector<MultiPoly> q;    // ambient x-variables, one per ambient direction
  MultiPoly q_potential;       // Q in ambient x-variables
  MultiPoly q_potential_flat;  // Q in flat coordinates
};

SingularFamily singular_family(const RootSystem& rs, const SaitoFrame& frame, int beta, int m);

/// Exact check of the twisted-period system in cleared form: with
/// P = prod_{gamma} (gamma, x),
///   P d_i d_j p = nu sum_gamma 2 gamma_i gamma_j / (gamma, gamma)
///                 (P / (gamma, x)) (gamma, grad p)
/// for all ambient i <= j.
bool twisted_period_pde_check(const RootSystem& rs, const MultiPoly& p, const FieldElement& nu);

/// Basis of degree-D solutions of the twisted-period system among weighted
/// polynomials in the frame coordinates (ambient x-polynomials).
std::vector<MultiPoly> homogeneous_twisted_periods(const RootSystem& rs, const SaitoFrame& frame,
                                                   const FieldElement& nu, int degree);

/// Basis of the degree-D part of the reflection isotypic component of
/// ker(grad) at parameter c: the span of all copies of the reflection
/// representation inside the joint Dunkl kernel.
std::vector<MultiPoly> isotypic_singular_space(const RootSystem& rs, const FieldElement& c,
                                               int degree);

}  // namespace cherednik

#endif  // CHEREDNIK_SHIFT_HPP
