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

#ifndef CHEREDNIK_RESIDUES_HPP
#define CHEREDNIK_RESIDUES_HPP

#include <string>
#include <vector>

#include "cherednik/multipoly.hpp"

namespace cherednik {

/// Flavors of the closed-form residue twisted periods for classical groups.
enum class ResidueKind { A, B, DInfinity, DZero };

ResidueKind residue_kind_from_string(const std::string& s);
std::string residue_kind_name(ResidueKind k);

/// Exact multinomial evaluation of the formal residue expression, normalized
/// to leading coefficient 1.
///   A          (rank n, n+1 vars): nu = s/(n+1) + m, restricted to sum z = 0
///                                  (z_{n+1} substituted), returned in n vars;
///   B          : nu = (2s-1)/(2n) + m,       degree 2s + 2nm;
///   DInfinity  : nu = (2s-1)/(2(n-1)) + m,   degree 2s + 2(n-1)m;
///   DZero      : nu = m + 1/2 (s unused),    degree n(2m+1) - 2m.
MultiPoly residue_twisted_period(ResidueKind kind, int rank, int s, int m);

/// Unrestricted variant of the type-A residue in n+1 ambient variables
/// (translation-invariant along the diagonal); not leading-normalized.
MultiPoly residue_A_ambient(int rank, int s, int m);

/// Unnormalized raw expansions (frame seeds keep the exact residue scale).
MultiPoly residue_raw(ResidueKind kind, int rank, int s, int m);

// ---- G(ell,1,n) ----

/// Parameters of the closed-form singular families for W = S_n x (Z/ell Z)^n.
struct ComplexGroupSpec {
  int n = 1;
  long ell = 2;
  long q = 1;      // 1 <= q <= ell-1
  long s = 0;
  long m = 0;
  Rat nu;                    // m + (ell - q + s)/ell
  std::vector<Rat> c;        // c_0..c_{ell-1}, periodic continuation implied
  FieldContextPtr ctx;       // cyclotomic Phi_ell

  /// Builds the canonical parameter vector: c_{-s mod ell} = s/ell (when
  /// forced), all other entries 0; validates the constraints.
  ComplexGroupSpec(int n, long ell, long q, long s, long m);

  Rat c_at(long index) const;  // periodic lookup, any integer index
  FieldElement omega() const { return FieldElement::omega(ctx); }
};

/// The family f_1..f_n of singular polynomials, by explicit
/// multinomial expansion; f_j homogeneous of degree (n-1)(m ell + ell - q) + n s.
std::vector<MultiPoly> complex_singular_family(const ComplexGroupSpec& spec);

/// Dunkl operator for G(ell,1,n) applied to p over Q(zeta_ell); 0-based i.
MultiPoly complex_dunkl_apply(const ComplexGroupSpec& spec, int i, const MultiPoly& p);

/// Generator actions on polynomials over Q(zeta_ell).
MultiPoly complex_sigma_apply(const ComplexGroupSpec& spec, int i, int j, long a,
                              const MultiPoly& p);
MultiPoly complex_s_apply(const ComplexGroupSpec& spec, int i, long a, const MultiPoly& p);

/// Verifies the generator equivariance of the family and that its span is
/// n-dimensional.
bool complex_group_action_check(const ComplexGroupSpec& spec, const std::vector<MultiPoly>& f);

}  // namespace cherednik

#endif  // CHEREDNIK_RESIDUES_HPP
