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

#include "cherednik/coxeter.hpp"

#include <algorithm>
#include <deque>

namespace cherednik {

std::string group_type_name(GroupType t) {
  switch (t) {
    case GroupType::A: return "A";
    case GroupType::B: return "B";
    case GroupType::D: return "D";
  }
  return "?";
}

namespace {

FieldVector unit(int n, int i, int sign = 1) {
  FieldVector v(n, FieldElement(0));
  v[i] = FieldElement(sign);
  return v;
}

FieldVector diff(int n, int i, int j) {
  FieldVector v(n, FieldElement(0));
  v[i] = FieldElement(1);
  v[j] = FieldElement(-1);
  return v;
}

FieldVector sum2(int n, int i, int j) {
  FieldVector v(n, FieldElement(0));
  v[i] = FieldElement(1);
  v[j] = FieldElement(1);
  return v;
}

FieldElement dot(const FieldVector& a, const FieldVector& b) {
  FieldElement s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

RootSystem::RootSystem(GroupType type, int rank) : type_(type), rank_(rank) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  switch (type) {
    case GroupType::A: {
      ambient_ = rank + 1;
      for (int i = 0; i < ambient_; ++i)
        for (int j = i + 1; j < ambient_; ++j) roots_.push_back(diff(ambient_, i, j));
      for (int d = rank + 1; d >= 2; --d) degrees_.push_back(d);
      for (int i = 0; i + 1 < ambient_; ++i) {
        // simple root e_i - e_{i+1}
        for (int r = 0; r < static_cast<int>(roots_.size()); ++r)
          if (roots_[r] == diff(ambient_, i, i + 1)) simple_.push_back(r);
      }
      break;
    }
    case GroupType::B: {
      ambient_ = rank;
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
          roots_.push_back(diff(rank, i, j));
          roots_.push_back(sum2(rank, i, j));
        }
      for (int i = 0; i < rank; ++i) roots_.push_back(unit(rank, i));
      for (int d = 2 * rank; d >= 2; d -= 2) degrees_.push_back(d);
      for (int i = 0; i + 1 < rank; ++i)
        for (int r = 0; r < static_cast<int>(roots_.size()); ++r)
          if (roots_[r] == diff(rank, i, i + 1)) simple_.push_back(r);
      for (int r = 0; r < static_cast<int>(roots_.size()); ++r)
        if (roots_[r] == unit(rank, rank - 1)) simple_.push_back(r);
      break;
    }
    case GroupType::D: {
      if (rank < 2) throw std::invalid_argument("D_n requires n >= 2");
      ambient_ = rank;
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
          roots_.push_back(diff(rank, i, j));
          roots_.push_back(sum2(rank, i, j));
        }
      for (int d = 2 * rank - 2; d >= 2; d -= 2) degrees_.push_back(d);
      degrees_.push_back(rank);
      std::sort(degrees_.rbegin(), degrees_.rend());
      for (int i = 0; i + 1 < rank; ++i)
        for (int r = 0; r < static_cast<int>(roots_.size()); ++r)
          if (roots_[r] == diff(rank, i, i + 1)) simple_.push_back(r);
      for (int r = 0; r < static_cast<int>(roots_.size()); ++r)
        if (roots_[r] == sum2(rank, rank - 2, rank - 1)) simple_.push_back(r);
      break;
    }
  }
  h_ = degrees_[0];

  for (const auto& g : roots_) norms2_.push_back(dot(g, g));

  // s_gamma = I - 2 gamma gamma^T / (gamma, gamma)
  for (int r = 0; r < static_cast<int>(roots_.size()); ++r) {
    FieldMatrix m(ambient_, FieldVector(ambient_, FieldElement(0)));
    FieldElement two_over_n2 = FieldElement(2) / norms2_[r];
    for (int i = 0; i < ambient_; ++i) {
      m[i][i] = FieldElement(1);
      for (int j = 0; j < ambient_; ++j) m[i][j] -= two_over_n2 * roots_[r][i] * roots_[r][j];
    }
    refl_.push_back(std::move(m));
  }

  // Reflection representation: coordinate basis for B/D, e_i - e_{n+1} for A.
  for (int s : simple_) {
    const FieldMatrix& m = refl_[s];
    FieldMatrix act(rank_, FieldVector(rank_, FieldElement(0)));
    for (int j = 0; j < rank_; ++j) {
      FieldVector fj(ambient_, FieldElement(0));
      fj[j] = FieldElement(1);
      if (type_ == GroupType::A) fj[ambient_ - 1] = FieldElement(-1);
      for (int i = 0; i < rank_; ++i) {
        FieldElement v(0);
        for (int k = 0; k < ambient_; ++k) v += m[i][k] * fj[k];
        act[i][j] = v;
      }
    }
    v_action_.push_back(std::move(act));
  }
}

MultiPoly RootSystem::root_form(int i) const {
  MultiPoly f(ambient_);
  for (int v = 0; v < ambient_; ++v) {
    if (roots_[i][v].is_zero()) continue;
    Monomial m(ambient_, 0);
    m[v] = 1;
    f.add_term(m, roots_[i][v]);
  }
  return f;
}

std::string RootSystem::name() const { return group_type_name(type_) + std::to_string(rank_); }

RootSystem parse_group(const std::string& spec) {
  if (spec.size() < 2) throw std::invalid_argument("bad group spec: " + spec);
  GroupType t;
  switch (spec[0]) {
    case 'A': case 'a': t = GroupType::A; break;
    case 'B': case 'b': t = GroupType::B; break;
    case 'D': case 'd': t = GroupType::D; break;
    default: throw std::invalid_argument("unsupported group type: " + spec);
  }
  int rank = std::stoi(spec.substr(1));
  return RootSystem(t, rank);
}

MultiPoly reflect_poly(const RootSystem& rs, int root_idx, const MultiPoly& p) {
  if (root_idx < 0 || root_idx >= rs.num_roots()) throw std::out_of_range("root index");
  return p.substitute_linear(rs.reflection_matrix(root_idx));
}

bool is_invariant(const RootSystem& rs, const MultiPoly& p) {
  for (int s : rs.simple_roots())
    if (reflect_poly(rs, s, p) != p) return false;
  return true;
}

std::vector<MultiPoly> module_span(const RootSystem& rs, const MultiPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("module_span of zero polynomial");
  PolySpace space;
  std::deque<MultiPoly> queue;
  space.add(p);
  queue.push_back(p);
  while (!queue.empty()) {
    MultiPoly q = std::move(queue.front());
    queue.pop_front();
    for (int s : rs.simple_roots()) {
      MultiPoly r = reflect_poly(rs, s, q);
      if (space.add(r)) queue.push_back(std::move(r));
    }
  }
  return space.basis();
}

bool PolySpace::add(const MultiPoly& p) {
  MultiPoly r = p;
  // Linear reduction against monic basis elements by leading monomial.
  bool progress = true;
  while (progress && !r.is_zero()) {
    progress = false;
    for (const auto& b : basis_) {
      FieldElement c = r.coefficient(b.leading_term().first);
      if (!c.is_zero()) {
        r -= b.scaled(c);
        progress = true;
        break;
      }
    }
  }
  if (r.is_zero()) return false;
  basis_.push_back(r.monic());
  // Keep earlier elements reduced against the new pivot.
  for (size_t i = 0; i + 1 < basis_.size(); ++i) {
    FieldElement c = basis_[i].coefficient(basis_.back().leading_term().first);
    if (!c.is_zero() && basis_[i].leading_term().first != basis_.back().leading_term().first)
      basis_[i] -= basis_.back().scaled(c);
  }
  return true;
}

std::optional<FieldVector> PolySpace::coordinates(const MultiPoly& p) const {
  MultiPoly r = p;
  FieldVector coords(basis_.size(), FieldElement(0));
  bool progress = true;
  while (progress && !r.is_zero()) {
    progress = false;
    for (size_t i = 0; i < basis_.size(); ++i) {
      FieldElement c = r.coefficient(basis_[i].leading_term().first);
      if (!c.is_zero()) {
        r -= basis_[i].scaled(c);
        coords[i] += c;
        progress = true;
        break;
      }
    }
  }
  if (!r.is_zero()) return std::nullopt;
  return coords;
}

}  // namespace cherednik
