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

#include "cherednik/saito.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "cherednik/residues.hpp"

namespace cherednik {

InvariantBasis basic_invariants(const RootSystem& rs) {
  InvariantBasis ib;
  int n = rs.rank();
  int nv = rs.ambient();
  auto power_sum = [&](int k) {
    MultiPoly p(nv);
    for (int i = 0; i < nv; ++i) {
      Monomial m(nv, 0);
      m[i] = k;
      p.add_term(m, FieldElement(1));
    }
    return p;
  };
  switch (rs.type()) {
    case GroupType::A:
      for (int k = n + 1; k >= 2; --k) ib.polys.push_back(power_sum(k));
      break;
    case GroupType::B:
      for (int k = n; k >= 1; --k) ib.polys.push_back(power_sum(2 * k));
      break;
    case GroupType::D: {
      std::vector<std::tuple<int, int, MultiPoly>> items;  // (degree, tag, poly)
      for (int k = 1; k <= n - 1; ++k) items.emplace_back(2 * k, 0, power_sum(2 * k));
      Monomial prod(nv, 1);
      items.emplace_back(n, 1, MultiPoly::monomial(nv, prod, FieldElement(1)));
      std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) > std::get<0>(b);
        return std::get<1>(a) < std::get<1>(b);
      });
      for (auto& [d, tag, p] : items) ib.polys.push_back(std::move(p));
      break;
    }
  }
  for (const auto& p : ib.polys) ib.degrees.push_back(p.degree());
  return ib;
}

MultiPoly restrict_to_hyperplane(const RootSystem& rs, const MultiPoly& p) {
  if (rs.type() != GroupType::A) return p;
  int n = rs.rank();
  if (p.nvars() != n + 1) throw std::invalid_argument("expected ambient polynomial");
  std::vector<MultiPoly> subs;
  MultiPoly last(n);
  for (int i = 0; i < n; ++i) {
    subs.push_back(MultiPoly::variable(n, i));
    last -= subs.back();
  }
  subs.push_back(last);
  return p.substitute(subs);
}

InvariantRewriter::InvariantRewriter(std::vector<MultiPoly> basis, std::vector<int> degrees)
    : basis_(std::move(basis)), degrees_(std::move(degrees)), powers_(basis_.size()) {
  for (size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].degree() != degrees_[i] || !basis_[i].is_homogeneous())
      throw std::invalid_argument("basis element degree mismatch");
    powers_[i].push_back(MultiPoly::constant(basis_[i].nvars(), FieldElement(1)));
  }
}

const MultiPoly& InvariantRewriter::power(int var, int e) {
  auto& pw = powers_[var];
  while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * basis_[var]);
  return pw[e];
}

MultiPoly InvariantRewriter::express(const MultiPoly& p) {
  int nb = static_cast<int>(basis_.size());
  if (p.is_zero()) return MultiPoly(nb);
  if (!p.is_homogeneous()) throw std::invalid_argument("express expects homogeneous input");
  int d = p.degree();

  std::vector<Monomial> ansatz;  // exponents over the basis
  Monomial e(nb, 0);
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (pos == nb) {
      if (rem == 0) ansatz.push_back(e);
      return;
    }
    for (int v = 0; v * degrees_[pos] <= rem; ++v) {
      e[pos] = v;
      rec(pos + 1, rem - v * degrees_[pos]);
    }
    e[pos] = 0;
  };
  rec(0, d);
  if (ansatz.empty()) throw std::logic_error("no invariant ansatz at the requested degree");

  std::vector<MultiPoly> products;
  products.reserve(ansatz.size());
  for (const auto& ex : ansatz) {
    MultiPoly prod = MultiPoly::constant(p.nvars(), FieldElement(1));
    for (int i = 0; i < nb; ++i)
      if (ex[i] > 0) prod *= power(i, ex[i]);
    products.push_back(std::move(prod));
  }

  std::map<Monomial, int> row_of;
  auto touch = [&](const MultiPoly& q) {
    for (const auto& [m, c] : q.terms())
      if (!row_of.count(m)) row_of.emplace(m, static_cast<int>(row_of.size()));
  };
  for (const auto& q : products) touch(q);
  touch(p);

  int rows = static_cast<int>(row_of.size());
  FieldMatrix mat(rows, FieldVector(ansatz.size(), FieldElement(0)));
  FieldVector rhs(rows, FieldElement(0));
  for (size_t col = 0; col < products.size(); ++col)
    for (const auto& [m, c] : products[col].terms()) mat[row_of[m]][col] = c;
  for (const auto& [m, c] : p.terms()) rhs[row_of[m]] = c;

  LinearSolution sol = solve_linear_exact(mat, rhs);
  if (!sol.consistent) throw std::logic_error("polynomial not in the invariant subring");
  MultiPoly out(nb);
  for (size_t i = 0; i < ansatz.size(); ++i) out.add_term(ansatz[i], sol.particular[i]);
  return out;
}

MultiPoly express_in_invariants(const MultiPoly& p, const std::vector<MultiPoly>& basis,
                                const std::vector<int>& degrees) {
  InvariantRewriter rw(basis, degrees);
  return rw.express(p);
}

PolyMatrix contravariant_metric(const RootSystem& rs, const std::vector<MultiPoly>& coords) {
  int n = static_cast<int>(coords.size());
  std::vector<MultiPoly> restricted;
  std::vector<int> degrees;
  for (const auto& c : coords) {
    restricted.push_back(restrict_to_hyperplane(rs, c));
    degrees.push_back(c.degree());
  }
  InvariantRewriter rw(restricted, degrees);

  std::vector<std::vector<MultiPoly>> grads;
  for (const auto& c : coords) {
    std::vector<MultiPoly> g;
    for (int i = 0; i < rs.ambient(); ++i) g.push_back(c.partial_derivative(i));
    grads.push_back(std::move(g));
  }

  PolyMatrix out(n, n, n);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      MultiPoly entry(rs.ambient());
      for (int i = 0; i < rs.ambient(); ++i) entry += grads[a][i] * grads[b][i];
      MultiPoly expr = rw.express(restrict_to_hyperplane(rs, entry));
      out.at(a, b) = expr;
      out.at(b, a) = std::move(expr);
    }
  return out;
}

namespace {

std::vector<MultiPoly> frame_seeds(const RootSystem& rs) {
  int n = rs.rank();
  std::vector<MultiPoly> seeds;
  switch (rs.type()) {
    case GroupType::A:
      for (int a = 0; a < n; ++a) seeds.push_back(residue_A_ambient(n, n - a, 0));
      break;
    case GroupType::B:
      for (int a = 0; a < n; ++a) seeds.push_back(residue_raw(ResidueKind::B, n, n - a, 0));
      break;
    case GroupType::D: {
      // D-infinity family plus the coordinate-product (Res at z=0) seed,
      // the latter assigned the later index among equal degrees.
      std::vector<std::tuple<int, int, MultiPoly>> items;
      for (int s = 1; s <= n - 1; ++s)
        items.emplace_back(2 * s, 0, residue_raw(ResidueKind::DInfinity, n, s, 0));
      items.emplace_back(n, 1, residue_raw(ResidueKind::DZero, n, 0, 0));
      std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) > std::get<0>(b);
        return std::get<1>(a) < std::get<1>(b);
      });
      for (auto& [d, tag, p] : items) seeds.push_back(std::move(p));
      break;
    }
  }
  return seeds;
}

// Square root of a positive-or-negative rational as f*sqrt(s)/den with s
// square-free; returns {rational part, squarefree radicand} where radicand 1
// means the root is rational.
std::pair<Rat, long> rational_sqrt_parts(const Rat& v) {
  mpz_class num = v.get_num() * v.get_den();
  mpz_class den = v.get_den();
  long sign = num < 0 ? -1 : 1;
  mpz_class a = abs(num);
  mpz_class f = 1, s = 1;
  for (mpz_class p = 2; p * p <= a; ++p) {
    while (a % (p * p) == 0) {
      a /= p * p;
      f *= p;
    }
    if (a % p == 0) {
      a /= p;
      s *= p;
    }
  }
  s *= a;
  if (!s.fits_slong_p()) throw std::overflow_error("radicand too large");
  long rad = s.get_si() * sign;
  Rat rational_part = Rat(f) / Rat(den);
  rational_part.canonicalize();
  return {rational_part, rad};
}

}  // namespace

SaitoFrame saito_frame(const RootSystem& rs) {
  const int n = rs.rank();
  const int h = rs.coxeter_number();
  const std::vector<int>& degrees = rs.degrees();
  if (rs.type() == GroupType::D && rs.rank() == 2)
    throw std::invalid_argument("D2 is reducible; no Saito frame is constructed");

  std::vector<MultiPoly> seeds = frame_seeds(rs);
  std::vector<MultiPoly> seeds_r;
  for (const auto& s : seeds) seeds_r.push_back(restrict_to_hyperplane(rs, s));

  // eta in the seed coordinates must be a constant matrix supported on
  // degree-complementary pairs.
  PolyMatrix g_y = contravariant_metric(rs, seeds);
  FieldMatrix eta(n, FieldVector(n, FieldElement(0)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      MultiPoly d1 = g_y.at(a, b).partial_derivative(0);
      if (d1.degree() > 0)
        throw std::logic_error("seed eta is not constant; residue seeds are not flat");
      eta[a][b] = d1.is_zero() ? FieldElement(0) : d1.leading_term().second;
      if (degrees[a] + degrees[b] != h + 2 && !eta[a][b].is_zero())
        throw std::logic_error("seed eta couples non-complementary degrees");
    }

  // Normalization: find block-by-degree T with (1/T00) T eta T^T = J.
  FieldMatrix t_mat(n, FieldVector(n, FieldElement(0)));
  FieldElement tau(1);

  // index groups by degree, descending order preserved
  std::vector<std::pair<int, std::vector<int>>> blocks;
  for (int i = 0; i < n; ++i) {
    if (!blocks.empty() && blocks.back().first == degrees[i])
      blocks.back().second.push_back(i);
    else
      blocks.push_back({degrees[i], {i}});
  }

  // middle (self-paired) block first: it pins tau
  for (auto& [d, idx] : blocks) {
    if (2 * d != h + 2) continue;
    if (idx.size() == 1) {
      int c = idx[0];
      FieldElement mu = eta[c][c];
      if (mu.is_zero()) throw std::logic_error("degenerate middle eta block");
      if (c == 0) {
        tau = mu.inverse();  // rank-1: the middle block is t^1 itself
        t_mat[0][0] = tau;
      } else {
        tau = mu;
        t_mat[c][c] = FieldElement(1);
      }
    } else if (idx.size() == 2) {
      int r = idx[0];
      FieldElement p = eta[r][r], mix = eta[r][r + 1], q = eta[r + 1][r + 1];
      // isotropic rows of the block form
      FieldVector v1(2), v2(2);
      if (p.is_zero()) {
        v1 = {FieldElement(1), FieldElement(0)};
        if (q.is_zero())
          v2 = {FieldElement(0), FieldElement(1)};
        else
          v2 = {-q / (FieldElement(2) * mix), FieldElement(1)};
      } else if (q.is_zero()) {
        v1 = {FieldElement(0), FieldElement(1)};
        v2 = {FieldElement(1), -p / (FieldElement(2) * mix)};
      } else {
        Rat pr = p.rational_value(), mr = mix.rational_value(), qr = q.rational_value();
        Rat disc = mr * mr - pr * qr;
        auto [froot, rad] = rational_sqrt_parts(disc);
        FieldElement sq(froot);
        if (rad != 1) sq = FieldElement(froot) * FieldElement::omega(FieldContext::sqrt_ext(rad));
        FieldElement lam_p = (-mix + sq) / q;
        FieldElement lam_m = (-mix - sq) / q;
        v1 = {FieldElement(1), lam_p};
        v2 = {FieldElement(1), lam_m};
      }
      FieldElement pairing = v1[0] * (p * v2[0] + mix * v2[1]) + v1[1] * (mix * v2[0] + q * v2[1]);
      if (pairing.is_zero()) throw std::logic_error("degenerate middle eta block");
      FieldElement scale = tau / pairing;  // tau = 1 here
      t_mat[r][r] = v1[0];
      t_mat[r][r + 1] = v1[1];
      t_mat[r + 1][r] = scale * v2[0];
      t_mat[r + 1][r + 1] = scale * v2[1];
    } else {
      throw std::logic_error("middle eta block of multiplicity > 2 is unsupported");
    }
  }

  // upper blocks get identity rows (scaled by tau for the top block), and
  // their complementary partners are solved linearly
  for (auto& [d, idx] : blocks) {
    if (2 * d <= h + 2) continue;
    for (int a : idx) t_mat[a][a] = (d == h) ? tau : FieldElement(1);
    // partner block
    std::vector<int> partner;
    for (auto& [d2, idx2] : blocks)
      if (d2 == h + 2 - d) partner = idx2;
    if (partner.size() != idx.size()) throw std::logic_error("unpaired eta degree block");
    for (int b : partner) {
      // unknown row u over partner columns: for each a in idx,
      //   (T_a eta u^T) = tau * [a + b == n - 1]
      int k = static_cast<int>(idx.size());
      FieldMatrix mat(k, FieldVector(k, FieldElement(0)));
      FieldVector rhs(k, FieldElement(0));
      for (int ia = 0; ia < k; ++ia) {
        int a = idx[ia];
        for (int jb = 0; jb < k; ++jb) {
          int col = partner[jb];
          FieldElement v(0);
          for (int c : idx) v += t_mat[a][c] * eta[c][col];
          mat[ia][jb] = v;
        }
        rhs[ia] = (a + b == n - 1) ? tau : FieldElement(0);
      }
      LinearSolution sol = solve_linear_exact(mat, rhs);
      if (!sol.unique()) throw std::logic_error("eta pairing block is singular");
      for (int jb = 0; jb < k; ++jb) t_mat[b][partner[jb]] = sol.particular[jb];
    }
  }

  SaitoFrame frame;
  frame.type = rs.type();
  frame.rank = n;
  frame.h = h;
  frame.degrees = degrees;
  for (int a = 0; a < n; ++a) {
    MultiPoly ta(rs.ambient());
    for (int b = 0; b < n; ++b) {
      if (t_mat[a][b].is_zero()) continue;
      ta += t_mat[a][b] * seeds[b];
    }
    frame.t.push_back(std::move(ta));
  }
  for (const auto& t : frame.t) frame.t_restricted.push_back(restrict_to_hyperplane(rs, t));
  frame.g = contravariant_metric(rs, frame.t);
  for (int a = 0; a < n; ++a) {
    Rat lam(degrees[a] - 1, h);
    lam.canonicalize();
    frame.lambda.push_back(-lam);
  }

  // construction-time flatness assertion; verify_saito redoes this check
  // from scratch on demand
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      MultiPoly d1 = frame.g.at(a, b).partial_derivative(0);
      bool good = (a + b == n - 1) ? (d1 == MultiPoly::constant(n, FieldElement(1)))
                                   : d1.is_zero();
      if (!good) throw std::logic_error("frame normalization failed the flatness identity");
    }
  return frame;
}

SaitoVerification verify_saito(const RootSystem& rs, const SaitoFrame& frame) {
  SaitoVerification v;
  v.ok = true;
  int n = frame.rank;
  for (int a = 0; a < n; ++a) {
    if (frame.t[a].degree() != frame.degrees[a] || !frame.t[a].is_homogeneous()) {
      v.ok = false;
      v.failures.push_back("t^" + std::to_string(a + 1) + " has wrong degree");
    }
    if (!is_invariant(rs, frame.t[a])) {
      v.ok = false;
      v.failures.push_back("t^" + std::to_string(a + 1) + " is not W-invariant");
    }
    if (frame.degrees[a] + frame.degrees[n - 1 - a] != frame.h + 2) {
      v.ok = false;
      v.failures.push_back("degree pairing d_a + d_{n+1-a} != h + 2");
    }
  }
  if (!v.ok) return v;
  PolyMatrix g = contravariant_metric(rs, frame.t);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      MultiPoly d1 = g.at(a, b).partial_derivative(0);
      MultiPoly expect = MultiPoly::constant(n, FieldElement(a + b == n - 1 ? 1 : 0));
      bool good = (a + b == n - 1) ? (d1 == expect) : d1.is_zero();
      if (!good) {
        v.ok = false;
        v.failures.push_back("eta^{" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                             "} is not delta_{a+b,n+1}");
      }
    }
  return v;
}

}  // namespace cherednik
