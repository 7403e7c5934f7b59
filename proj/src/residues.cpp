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

#include "cherednik/residues.hpp"

#include <functional>

#include "cherednik/coxeter.hpp"

namespace cherednik {

ResidueKind residue_kind_from_string(const std::string& s) {
  if (s == "A") return ResidueKind::A;
  if (s == "B") return ResidueKind::B;
  if (s == "D-infinity" || s == "Dinf") return ResidueKind::DInfinity;
  if (s == "D-zero" || s == "D0") return ResidueKind::DZero;
  throw std::invalid_argument("unknown residue kind: " + s);
}

std::string residue_kind_name(ResidueKind k) {
  switch (k) {
    case ResidueKind::A: return "A";
    case ResidueKind::B: return "B";
    case ResidueKind::DInfinity: return "D-infinity";
    case ResidueKind::DZero: return "D-zero";
  }
  return "?";
}

namespace {

// Enumerates k_1 + ... + k_n = total over nonnegative integers.
void compositions(int n, int total, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> k(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (pos == n - 1) {
      k[pos] = rem;
      fn(k);
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      k[pos] = v;
      rec(pos + 1, rem - v);
    }
  };
  if (n == 0) return;
  rec(0, total);
}

// sum over |k| = total of prod_j binom(nu, k_j) (-x_j^2)^{k_j}
MultiPoly even_multinomial(int nvars, const Rat& nu, int total) {
  MultiPoly out(nvars);
  Rat cnu = nu;
  cnu.canonicalize();
  FieldElement fnu(cnu);
  compositions(nvars, total, [&](const std::vector<int>& k) {
    FieldElement coef(1);
    Monomial mono(nvars, 0);
    for (int j = 0; j < nvars; ++j) {
      coef *= generalized_binomial(fnu, k[j]);
      if (k[j] % 2) coef = -coef;
      mono[j] = 2 * k[j];
    }
    out.add_term(mono, coef);
  });
  return out;
}

}  // namespace

MultiPoly residue_A_ambient(int rank, int s, int m) {
  if (rank < 1 || s < 1 || s > rank || m < 0)
    throw std::invalid_argument("type A residue parameters out of range");
  int nv = rank + 1;
  Rat nu = Rat(s, rank + 1) + m;
  nu.canonicalize();
  int total = s + (rank + 1) * m + 1;
  MultiPoly out(nv);
  FieldElement fnu(nu);
  compositions(nv, total, [&](const std::vector<int>& k) {
    FieldElement coef(1);
    Monomial mono(nv, 0);
    for (int j = 0; j < nv; ++j) {
      coef *= generalized_binomial(fnu, k[j]);
      if (k[j] % 2) coef = -coef;
      mono[j] = k[j];
    }
    out.add_term(mono, coef);
  });
  return out;
}

MultiPoly residue_raw(ResidueKind kind, int rank, int s, int m) {
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  switch (kind) {
    case ResidueKind::A:
      return residue_A_ambient(rank, s, m);
    case ResidueKind::B: {
      if (s < 1 || s > rank) throw std::invalid_argument("type B residue needs 1 <= s <= n");
      return even_multinomial(rank, Rat(2 * s - 1, 2 * rank) + m, s + rank * m);
    }
    case ResidueKind::DInfinity: {
      if (rank < 2 || s < 1 || s > rank - 1)
        throw std::invalid_argument("D-infinity residue needs 1 <= s <= n-1");
      return even_multinomial(rank, Rat(2 * s - 1, 2 * (rank - 1)) + m, s + (rank - 1) * m);
    }
    case ResidueKind::DZero: {
      if (rank < 2) throw std::invalid_argument("D-zero residue needs n >= 2");
      MultiPoly out(rank);
      FieldElement half(Rat(2 * m + 1, 2));
      compositions(rank, m, [&](const std::vector<int>& k) {
        FieldElement coef(1);
        Monomial mono(rank, 0);
        for (int j = 0; j < rank; ++j) {
          coef *= generalized_binomial(half, k[j]);
          if (k[j] % 2) coef = -coef;
          mono[j] = 2 * m + 1 - 2 * k[j];
        }
        out.add_term(mono, coef);
      });
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

MultiPoly residue_twisted_period(ResidueKind kind, int rank, int s, int m) {
  MultiPoly raw = residue_raw(kind, rank, s, m);
  if (kind == ResidueKind::A) {
    // restrict to the hyperplane: z_{n+1} = -(z_1 + ... + z_n)
    std::vector<MultiPoly> subs;
    MultiPoly last(rank);
    for (int i = 0; i < rank; ++i) {
      subs.push_back(MultiPoly::variable(rank, i));
      last -= subs.back();
    }
    subs.push_back(last);
    raw = raw.substitute(subs);
  }
  return raw.monic();
}

// ---- G(ell,1,n) ----

ComplexGroupSpec::ComplexGroupSpec(int n_, long ell_, long q_, long s_, long m_)
    : n(n_), ell(ell_), q(q_), s(s_), m(m_) {
  if (n < 1 || ell < 2 || q < 1 || q > ell - 1 || s < 0 || m < 0)
    throw std::invalid_argument("complex group spec out of range");
  nu = Rat(ell - q + s, ell) + m;
  nu.canonicalize();
  c.assign(ell, Rat(0));
  long forced = ((-s) % ell + ell) % ell;
  if (forced == 0) {
    if (s != 0) throw std::invalid_argument("constraint c_0 = s/ell conflicts with c_0 = 0");
  } else {
    c[forced] = Rat(s, ell);
  }
  long zero_idx = ((q - s) % ell + ell) % ell;
  if (c[zero_idx] != 0) throw std::invalid_argument("constraint c_{q-s} = 0 violated");
  ctx = FieldContext::cyclotomic(ell);
}

Rat ComplexGroupSpec::c_at(long index) const { return c[((index % ell) + ell) % ell]; }

std::vector<MultiPoly> complex_singular_family(const ComplexGroupSpec& spec) {
  const int n = spec.n;
  long lnu = spec.ell * spec.m + spec.ell - spec.q + spec.s;  // = ell * nu, integer
  std::vector<MultiPoly> f(n, MultiPoly(n));
  FieldElement fnu(spec.nu), fnum1(spec.nu - 1);
  compositions(n, static_cast<int>(spec.m), [&](const std::vector<int>& k) {
    for (int j = 0; j < n; ++j) {
      FieldElement coef = generalized_binomial(fnum1, k[j]);
      Monomial mono(n, 0);
      mono[j] = static_cast<int>(spec.ell * (spec.m - k[j]) + spec.s);
      for (int i = 0; i < n; ++i) {
        if (i == j) continue;
        coef *= generalized_binomial(fnu, k[i]);
        mono[i] = static_cast<int>(lnu - spec.ell * k[i]);
      }
      if (spec.m % 2) coef = -coef;
      f[j].add_term(mono, coef);
    }
  });
  return f;
}

MultiPoly complex_sigma_apply(const ComplexGroupSpec& spec, int i, int j, long a,
                              const MultiPoly& p) {
  const int n = spec.n;
  FieldElement w = spec.omega();
  FieldMatrix sub(n, FieldVector(n, FieldElement(0)));
  for (int v = 0; v < n; ++v) sub[v][v] = FieldElement(1);
  sub[i][i] = FieldElement(0);
  sub[j][j] = FieldElement(0);
  sub[i][j] = w.pow(a);
  sub[j][i] = w.pow(-a);
  return p.substitute_linear(sub);
}

MultiPoly complex_s_apply(const ComplexGroupSpec& spec, int i, long a, const MultiPoly& p) {
  const int n = spec.n;
  FieldMatrix sub(n, FieldVector(n, FieldElement(0)));
  for (int v = 0; v < n; ++v) sub[v][v] = FieldElement(1);
  sub[i][i] = spec.omega().pow(-a);
  return p.substitute_linear(sub);
}

MultiPoly complex_dunkl_apply(const ComplexGroupSpec& spec, int i, const MultiPoly& p) {
  const int n = spec.n;
  if (i < 0 || i >= n) throw std::out_of_range("complex dunkl direction");
  if (p.nvars() != n) throw std::invalid_argument("variable count mismatch");
  MultiPoly result = p.partial_derivative(i);
  FieldElement w = spec.omega();
  FieldElement fnu(spec.nu);
  if (!fnu.is_zero()) {
    for (long a = 0; a < spec.ell; ++a) {
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        MultiPoly diff = p - complex_sigma_apply(spec, i, j, a, p);
        if (diff.is_zero()) continue;
        FieldVector form(n, FieldElement(0));
        form[i] = FieldElement(1);
        form[j] = -w.pow(a);
        result -= fnu * diff.divide_by_linear_form(form);
      }
    }
  }
  // sum_b c_b sum_a w^{-ab} s_i^a / x_i collapses per monomial with
  // x_i-exponent k to ell * c_{-k} x_i^{k-1}; c_0 = 0 keeps it polynomial.
  for (const auto& [mono, coef] : p.terms()) {
    Rat cb = spec.c_at(-mono[i]);
    if (cb == 0) continue;
    if (mono[i] == 0) throw std::logic_error("nonpolynomial term in complex Dunkl operator");
    Monomial mm = mono;
    mm[i] -= 1;
    result.add_term(mm, -(FieldElement(cb * spec.ell) * coef));
  }
  return result;
}

bool complex_group_action_check(const ComplexGroupSpec& spec, const std::vector<MultiPoly>& f) {
  const int n = spec.n;
  if (static_cast<int>(f.size()) != n) return false;
  FieldElement w = spec.omega();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (long a = 0; a < spec.ell; ++a) {
        if (complex_sigma_apply(spec, i, j, a, f[i]) != w.pow(a * spec.q) * f[j]) return false;
        if (complex_sigma_apply(spec, i, j, a, f[j]) != w.pow(-a * spec.q) * f[i]) return false;
        for (int k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          if (complex_sigma_apply(spec, i, j, a, f[k]) != f[k]) return false;
        }
      }
    }
  for (int i = 0; i < n; ++i) {
    if (complex_s_apply(spec, i, 1, f[i]) != w.pow(-spec.s) * f[i]) return false;
    for (int k = 0; k < n; ++k) {
      if (k == i) continue;
      if (complex_s_apply(spec, i, 1, f[k]) != w.pow(spec.q - spec.s) * f[k]) return false;
    }
  }
  PolySpace span;
  for (const auto& p : f) span.add(p);
  return span.dim() == n;
}

}  // namespace cherednik
