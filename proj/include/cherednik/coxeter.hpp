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

#ifndef CHEREDNIK_COXETER_HPP
#define CHEREDNIK_COXETER_HPP

#include <string>
#include <vector>

#include "cherednik/multipoly.hpp"

namespace cherednik {

enum class GroupType { A, B, D };

std::string group_type_name(GroupType t);

/// Classical Coxeter root system with its numerology. Roots are stored
/// unnormalized with cached squared norms; type A lives in n+1 ambient
/// variables (standard embedding, hyperplane sum x = 0 imposed downstream).
class RootSystem {
 public:
  RootSystem(GroupType type, int rank);

  GroupType type() const { return type_; }
  int rank() const { return rank_; }
  int ambient() const { return ambient_; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  const std::vector<FieldVector>& roots() const { return roots_; }
  const FieldVector& root(int i) const { return roots_[i]; }
  const FieldElement& norm2(int i) const { return norms2_[i]; }
  const std::vector<int>& degrees() const { return degrees_; }
  int coxeter_number() const { return h_; }
  /// Indices into roots() of a set of simple roots.
  const std::vector<int>& simple_roots() const { return simple_; }

  /// Orthogonal matrix of s_gamma for the i-th positive root.
  const FieldMatrix& reflection_matrix(int i) const { return refl_[i]; }
  /// (gamma, x) as a linear polynomial in the ambient variables.
  MultiPoly root_form(int i) const;

  /// Basis of the reflection representation inside the ambient space, and
  /// the simple-reflection action matrices in that basis. For B/D this is
  /// the coordinate basis; for A it is e_i - e_{n+1}.
  const std::vector<FieldMatrix>& simple_action_on_reflection_rep() const { return v_action_; }

  std::string name() const;

 private:
  GroupType type_;
  int rank_;
  int ambient_;
  std::vector<FieldVector> roots_;
  std::vector<FieldElement> norms2_;
  std::vector<int> degrees_;
  int h_;
  std::vector<int> simple_;
  std::vector<FieldMatrix> refl_;
  std::vector<FieldMatrix> v_action_;
};

/// Parses strings like "A3", "B4", "D4".
RootSystem parse_group(const std::string& spec);

/// p(s_gamma x) for the root with index root_idx.
MultiPoly reflect_poly(const RootSystem& rs, int root_idx, const MultiPoly& p);

/// True iff p is fixed by every simple reflection (hence by all of W).
bool is_invariant(const RootSystem& rs, const MultiPoly& p);

/// Exact basis of the linear span of the W-orbit of p, computed as the
/// closure of {p} under simple reflections.
std::vector<MultiPoly> module_span(const RootSystem& rs, const MultiPoly& p);

/// Incremental exact basis of a subspace of polynomials, echelonized by
/// grlex leading monomials.
class PolySpace {
 public:
  /// Reduces p against the basis; inserts the remainder if nonzero.
  /// Returns true when the dimension grew.
  bool add(const MultiPoly& p);
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<MultiPoly>& basis() const { return basis_; }
  /// Coordinates of p in the current basis; empty optional if p is outside.
  std::optional<FieldVector> coordinates(const MultiPoly& p) const;

 private:
  std::vector<MultiPoly> basis_;  // monic, distinct leading monomials
};

}  // namespace cherednik

#endif  // CHEREDNIK_COXETER_HPP
