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

#include "cherednik/shift.hpp"

#include <functional>
#include <map>
#include <utility>

#include "cherednik/dunkl.hpp"

namespace cherednik {

PolyMatrix compute_U(const SaitoFrame& frame) {
  int n = frame.rank;
  PolyMatrix u(n, n, n);
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a) u.at(b, a) = frame.g.at(b, n - 1 - a);
  return u;
}

std::vector<MultiPoly> xi_shift(const SaitoFrame& frame, int beta, int m) {
  int n = frame.rank;
  if (beta < 0 || beta >= n) throw std::invalid_argument("beta out of range");
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  PolyMatrix u = compute_U(frame);
  std::vector<MultiPoly> xi(n, MultiPoly(n));
  xi[beta] = MultiPoly::constant(n, FieldElement(1));
  for (int j = 1; j <= m; ++j) {
    std::vector<MultiPoly> next(n, MultiPoly(n));
    for (int a = 0; a < n; ++a) {
      MultiPoly acc(n);
      for (int l = 0; l < n; ++l) {
        if (xi[l].is_zero()) continue;
        acc += xi[l] * u.at(l, a);
      }
      Rat denom(frame.degrees[beta] - frame.degrees[a] + j * frame.h, frame.h);
      denom.canonicalize();
      next[a] = acc.scaled(FieldElement(Rat(1) / denom));
    }
    xi = std::move(next);
  }
  return xi;
}

SingularFamily singular_family(const RootSystem& rs, const SaitoFrame& frame, int beta, int m) {
  int n = frame.rank;
  int nv = rs.ambient();
  SingularFamily fam;
  fam.beta = beta;
  fam.m = m;
  fam.c = Rat(frame.degrees[beta] - 1 + m * frame.h, frame.h);
  fam.c.canonicalize();
  fam.degree = frame.degrees[beta] - 1 + frame.h * m;
  fam.xi = xi_shift(frame, beta, m);

  std::vector<MultiPoly> xi_x;
  for (const auto& x : fam.xi) xi_x.push_back(x.substitute(frame.t));

  for (int i = 0; i < nv; ++i) {
    MultiPoly qi(nv);
    for (int a = 0; a < n; ++a) {
      if (xi_x[a].is_zero()) continue;
      qi += xi_x[a] * frame.t[a].partial_derivative(i);
    }
    fam.q.push_back(std::move(qi));
  }

  Rat euler(frame.degrees[beta] + frame.h * m);
  FieldElement euler_inv(Rat(1) / euler);
  MultiPoly qx(nv), qt(n);
  for (int a = 0; a < n; ++a) {
    FieldElement da(frame.degrees[a]);
    if (!xi_x[a].is_zero()) qx += da * (xi_x[a] * frame.t[a]);
    if (!fam.xi[a].is_zero()) qt += da * (fam.xi[a] * MultiPoly::variable(n, a));
  }
  fam.q_potential = qx.scaled(euler_inv);
  fam.q_potential_flat = qt.scaled(euler_inv);

  // internal consistency: the family is a gradient with the right Euler degree
  for (int i = 0; i < nv; ++i)
    if (fam.q_potential.partial_derivative(i) != fam.q[i])
      throw std::logic_error("potential gradient mismatch");
  MultiPoly euler_sum(nv);
  for (int i = 0; i < nv; ++i) euler_sum += MultiPoly::variable(nv, i) * fam.q[i];
  if (fam.q_potential.scaled(FieldElement(euler)) != euler_sum)
    throw std::logic_error("Euler identity mismatch");

  FieldElement scale = fam.q_potential.leading_term().second.inverse();
  for (auto& x : fam.xi) x = x.scaled(scale);
  for (auto& x : fam.q) x = x.scaled(scale);
  fam.q_potential = fam.q_potential.scaled(scale);
  fam.q_potential_flat = fam.q_potential_flat.scaled(scale);
  return fam;
}

namespace {

struct ClearedSystem {
  MultiPoly product;                 // prod over positive roots of (gamma, x)
  std::vector<MultiPoly> cofactors;  // product / (gamma, x)
  std::vector<FieldElement> weight;  // 2 / (gamma, gamma)
};

ClearedSystem cleared_system(const RootSystem& rs) {
  ClearedSystem cs;
  cs.product = MultiPoly::constant(rs.ambient(), FieldElement(1));
  for (int r = 0; r < rs.num_roots(); ++r) cs.product *= rs.root_form(r);
  for (int r = 0; r < rs.num_roots(); ++r) {
    cs.cofactors.push_back(cs.product.divide_by_linear_form(rs.root(r)));
    cs.weight.push_back(FieldElement(2) / rs.norm2(r));
  }
  return cs;
}

// All residuals P d_i d_j p - nu sum_gamma ... for i <= j; empty-all-zero
// means p solves the system.
std::vector<MultiPoly> pde_residuals(const RootSystem& rs, const ClearedSystem& cs,
                                     const MultiPoly& p, const FieldElement& nu) {
  int nv = rs.ambient();
  std::vector<MultiPoly> dp;
  for (int k = 0; k < nv; ++k) dp.push_back(p.partial_derivative(k));
  std::vector<MultiPoly> dir;  // (gamma, grad p) per root
  for (int r = 0; r < rs.num_roots(); ++r) {
    MultiPoly d(nv);
    for (int k = 0; k < nv; ++k) {
      if (rs.root(r)[k].is_zero() || dp[k].is_zero()) continue;
      d += rs.root(r)[k] * dp[k];
    }
    dir.push_back(std::move(d));
  }
  std::vector<MultiPoly> out;
  for (int i = 0; i < nv; ++i)
    for (int j = i; j < nv; ++j) {
      MultiPoly lhs = cs.product * dp[i].partial_derivative(j);
      MultiPoly rhs(nv);
      for (int r = 0; r < rs.num_roots(); ++r) {
        const FieldVector& g = rs.root(r);
        if (g[i].is_zero() || g[j].is_zero() || dir[r].is_zero()) continue;
        rhs += (nu * g[i] * g[j] * cs.weight[r]) * (cs.cofactors[r] * dir[r]);
      }
      out.push_back(lhs - rhs);
    }
  return out;
}

}  // namespace

bool twisted_period_pde_check(const RootSystem& rs, const MultiPoly& p, const FieldElement& nu) {
  ClearedSystem cs = cleared_system(rs);
  for (const auto& res : pde_residuals(rs, cs, p, nu))
    if (!res.is_zero()) return false;
  return true;
}

std::vector<MultiPoly> homogeneous_twisted_periods(const RootSystem& rs, const SaitoFrame& frame,
                                                   const FieldElement& nu, int degree) {
  int n = frame.rank;
  std::vector<Monomial> exps;
  Monomial e(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (pos == n) {
      if (rem == 0) exps.push_back(e);
      return;
    }
    for (int v = 0; v * frame.degrees[pos] <= rem; ++v) {
      e[pos] = v;
      rec(pos + 1, rem - v * frame.degrees[pos]);
    }
    e[pos] = 0;
  };
  rec(0, degree);
  if (exps.empty()) return {};

  std::vector<std::vector<MultiPoly>> powers(n);
  for (int a = 0; a < n; ++a)
    powers[a].push_back(MultiPoly::constant(rs.ambient(), FieldElement(1)));
  auto power = [&](int a, int k) -> const MultiPoly& {
    while (static_cast<int>(powers[a].size()) <= k) powers[a].push_back(powers[a].back() * frame.t[a]);
    return powers[a][k];
  };
  std::vector<MultiPoly> cand;
  for (const auto& ex : exps) {
    MultiPoly prod = MultiPoly::constant(rs.ambient(), FieldElement(1));
    for (int a = 0; a < n; ++a)
      if (ex[a] > 0) prod *= power(a, ex[a]);
    cand.push_back(std::move(prod));
  }

  ClearedSystem cs = cleared_system(rs);
  std::vector<std::vector<MultiPoly>> residuals;
  for (const auto& p : cand) residuals.push_back(pde_residuals(rs, cs, p, nu));

  std::map<std::pair<int, Monomial>, int> row_of;
  for (const auto& rv : residuals)
    for (size_t k = 0; k < rv.size(); ++k)
      for (const auto& [mono, c] : rv[k].terms()) {
        auto key = std::make_pair(static_cast<int>(k), mono);
        if (!row_of.count(key)) row_of.emplace(key, static_cast<int>(row_of.size()));
      }
  if (row_of.empty()) {
    std::vector<MultiPoly> out;
    for (const auto& p : cand) out.push_back(p.monic());
    return out;
  }
  FieldMatrix mat(row_of.size(), FieldVector(cand.size(), FieldElement(0)));
  for (size_t col = 0; col < residuals.size(); ++col)
    for (size_t k = 0; k < residuals[col].size(); ++k)
      for (const auto& [mono, c] : residuals[col][k].terms())
        mat[row_of[{static_cast<int>(k), mono}]][col] = c;

  std::vector<MultiPoly> out;
  for (const auto& ns : nullspace_exact(mat)) {
    MultiPoly p(rs.ambient());
    for (size_t col = 0; col < cand.size(); ++col)
      if (!ns[col].is_zero()) p += ns[col] * cand[col];
    out.push_back(p.monic());
  }
  return out;
}

std::vector<MultiPoly> isotypic_singular_space(const RootSystem& rs, const FieldElement& c,
                                               int degree) {
  int nv = rs.ambient();
  std::vector<Monomial> mons;
  Monomial e(nv, 0);
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (pos == nv) {
      if (rem == 0) mons.push_back(e);
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      e[pos] = v;
      rec(pos + 1, rem - v);
    }
    e[pos] = 0;
  };
  rec(0, degree);
  if (mons.empty()) return {};

  // joint kernel of the Dunkl operators on the degree slice
  std::map<std::pair<int, Monomial>, int> row_of;
  std::vector<std::vector<MultiPoly>> images(mons.size());
  for (size_t col = 0; col < mons.size(); ++col) {
    MultiPoly mono = MultiPoly::monomial(nv, mons[col], FieldElement(1));
    for (int i = 0; i < nv; ++i) {
      MultiPoly im = dunkl_apply(rs, c, i, mono);
      for (const auto& [mo, cf] : im.terms()) {
        auto key = std::make_pair(i, mo);
        if (!row_of.count(key)) row_of.emplace(key, static_cast<int>(row_of.size()));
      }
      images[col].push_back(std::move(im));
    }
  }
  std::vector<FieldVector> kernel;
  if (row_of.empty()) {
    for (size_t col = 0; col < mons.size(); ++col) {
      FieldVector v(mons.size(), FieldElement(0));
      v[col] = FieldElement(1);
      kernel.push_back(std::move(v));
    }
  } else {
    FieldMatrix mat(row_of.size(), FieldVector(mons.size(), FieldElement(0)));
    for (size_t col = 0; col < mons.size(); ++col)
      for (int i = 0; i < nv; ++i)
        for (const auto& [mo, cf] : images[col][i].terms()) mat[row_of[{i, mo}]][col] = cf;
    kernel = nullspace_exact(mat);
  }
  if (kernel.empty()) return {};
  int k = static_cast<int>(kernel.size());

  std::vector<MultiPoly> kpolys;
  for (const auto& v : kernel) {
    MultiPoly p(nv);
    for (size_t col = 0; col < mons.size(); ++col)
      if (!v[col].is_zero()) p.add_term(mons[col], v[col]);
    kpolys.push_back(std::move(p));
  }

  // matrices of the simple reflections on the kernel
  std::map<Monomial, int> midx;
  for (size_t i = 0; i < mons.size(); ++i) midx.emplace(mons[i], static_cast<int>(i));
  FieldMatrix kmat(mons.size(), FieldVector(k, FieldElement(0)));
  for (int b = 0; b < k; ++b)
    for (size_t col = 0; col < mons.size(); ++col) kmat[col][b] = kernel[b][col];

  const auto& simples = rs.simple_roots();
  int ns = static_cast<int>(simples.size());
  std::vector<FieldMatrix> s_mats;  // s K_b = sum_{b'} S[b'][b] K_{b'}
  for (int si = 0; si < ns; ++si) {
    FieldMatrix s(k, FieldVector(k, FieldElement(0)));
    for (int b = 0; b < k; ++b) {
      MultiPoly refl = reflect_poly(rs, simples[si], kpolys[b]);
      FieldVector vec(mons.size(), FieldElement(0));
      for (const auto& [mo, cf] : refl.terms()) vec[midx.at(mo)] = cf;
      LinearSolution sol = solve_linear_exact(kmat, vec);
      if (!sol.consistent) throw std::logic_error("Dunkl kernel is not reflection-stable");
      for (int bp = 0; bp < k; ++bp) s[bp][b] = sol.particular[bp];
    }
    s_mats.push_back(std::move(s));
  }

  // equivariant maps from the reflection representation into the kernel:
  // unknown Phi (k x rank) with Phi A^s = S^s Phi for every simple s
  int rk = rs.rank();
  const auto& v_act = rs.simple_action_on_reflection_rep();
  FieldMatrix hom;
  for (int si = 0; si < ns; ++si)
    for (int b = 0; b < k; ++b)
      for (int j = 0; j < rk; ++j) {
        FieldVector row(k * rk, FieldElement(0));
        for (int l = 0; l < rk; ++l) row[b * rk + l] += v_act[si][l][j];
        for (int bp = 0; bp < k; ++bp) row[bp * rk + j] -= s_mats[si][b][bp];
        hom.push_back(std::move(row));
      }
  std::vector<FieldVector> phis = nullspace_exact(hom);

  PolySpace space;
  for (const auto& phi : phis)
    for (int j = 0; j < rk; ++j) {
      MultiPoly p(nv);
      for (int b = 0; b < k; ++b)
        if (!phi[b * rk + j].is_zero()) p += phi[b * rk + j] * kpolys[b];
      if (!p.is_zero()) space.add(p.monic());
    }
  return space.basis();
}

}  // namespace cherednik
