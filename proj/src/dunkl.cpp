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

#include "cherednik/dunkl.hpp"

namespace cherednik {

MultiPoly dunkl_apply(const RootSystem& rs, const FieldElement& c, int i, const MultiPoly& p) {
  if (i < 0 || i >= rs.ambient()) throw std::out_of_range("dunkl direction index");
  MultiPoly result = p.partial_derivative(i);
  if (c.is_zero() || p.is_zero()) return result;
  for (int r = 0; r < rs.num_roots(); ++r) {
    const FieldElement& gi = rs.root(r)[i];
    if (gi.is_zero()) continue;
    MultiPoly diff = p - reflect_poly(rs, r, p);
    if (diff.is_zero()) continue;
    result -= (c * gi) * diff.divide_by_linear_form(rs.root(r));
  }
  return result;
}

MultiPoly dunkl_apply_dir(const RootSystem& rs, const FieldElement& c, const FieldVector& zeta,
                          const MultiPoly& p) {
  MultiPoly result(rs.ambient());
  for (int i = 0; i < rs.ambient(); ++i) {
    if (zeta[i].is_zero()) continue;
    result += zeta[i] * dunkl_apply(rs, c, i, p);
  }
  return result;
}

SingularCertificate is_singular(const RootSystem& rs, const FieldElement& c, const MultiPoly& q) {
  if (q.is_zero()) throw std::invalid_argument("is_singular of zero polynomial");
  SingularCertificate cert;
  cert.singular = true;
  for (int i = 0; i < rs.ambient(); ++i) {
    cert.residuals.push_back(dunkl_apply(rs, c, i, q));
    if (!cert.residuals.back().is_zero()) cert.singular = false;
  }
  return cert;
}

CommutativityReport check_commutativity(const RootSystem& rs, const FieldElement& c,
                                        const std::vector<MultiPoly>& samples) {
  CommutativityReport rep;
  for (size_t s = 0; s < samples.size(); ++s) {
    std::vector<MultiPoly> first;
    for (int i = 0; i < rs.ambient(); ++i) first.push_back(dunkl_apply(rs, c, i, samples[s]));
    for (int i = 0; i < rs.ambient(); ++i)
      for (int j = i + 1; j < rs.ambient(); ++j) {
        MultiPoly comm = dunkl_apply(rs, c, i, first[j]) - dunkl_apply(rs, c, j, first[i]);
        if (!comm.is_zero()) {
          rep.all_zero = false;
          rep.violations.emplace_back(static_cast<int>(s), i, j);
        }
      }
  }
  return rep;
}

bool calogero_kernel_check(const RootSystem& rs, const FieldElement& c, const MultiPoly& g,
                           const MultiPoly& q) {
  if (!is_invariant(rs, g) || !is_invariant(rs, q))
    throw std::invalid_argument("calogero_kernel_check requires invariant inputs");
  if (g.degree() < 1) throw std::invalid_argument("g must have positive degree");
  MultiPoly acc(rs.ambient());
  for (const auto& [mono, coef] : g.terms()) {
    MultiPoly cur = q;
    for (int i = 0; i < rs.ambient() && !cur.is_zero(); ++i)
      for (int e = 0; e < mono[i] && !cur.is_zero(); ++e) cur = dunkl_apply(rs, c, i, cur);
    acc += coef * cur;
  }
  return acc.is_zero();
}

}  // namespace cherednik
