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

#ifndef CHEREDNIK_DUNKL_HPP
#define CHEREDNIK_DUNKL_HPP

#include <vector>

#include "cherednik/coxeter.hpp"

namespace cherednik {

/// Dunkl operator in the i-th coordinate direction at parameter c:
///   grad_i p = d_i p - c sum_{gamma in R+} gamma_i ((1 - s_gamma) p) / (gamma, x).
/// The division is exact; i is 0-based over the ambient variables.
MultiPoly dunkl_apply(const RootSystem& rs, const FieldElement& c, int i, const MultiPoly& p);

/// Directional Dunkl operator for a covector zeta.
MultiPoly dunkl_apply_dir(const RootSystem& rs, const FieldElement& c, const FieldVector& zeta,
                          const MultiPoly& p);

/// Residuals grad_i q for every ambient direction; q is singular iff all
/// residuals vanish.
struct SingularCertificate {
  bool singular = false;
  std::vector<MultiPoly> residuals;
};

SingularCertificate is_singular(const RootSystem& rs, const FieldElement& c, const MultiPoly& q);

/// Exact check of [grad_i, grad_j] p = 0 over all pairs i < j.
struct CommutativityReport {
  bool all_zero = true;
  std::vector<std::tuple<int, int, int>> violations;  // (sample, i, j)
};

CommutativityReport check_commutativity(const RootSystem& rs, const FieldElement& c,
                                        const std::vector<MultiPoly>& samples);

/// Applies g(grad_1, ..., grad_n) to Q and reports whether the result is 0.
/// Both g and Q must be W-invariant, g of positive degree.
bool calogero_kernel_check(const RootSystem& rs, const FieldElement& c, const MultiPoly& g,
                           const MultiPoly& q);

}  // namespace cherednik

#endif  // CHEREDNIK_DUNKL_HPP
