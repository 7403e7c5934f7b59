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

#include "cherednik/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace cherednik {

int monomial_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

bool GrlexDesc::operator()(const Monomial& a, const Monomial& b) const {
  int da = monomial_degree(a), db = monomial_degree(b);
  if (da != db) return da > db;
  return a > b;  // lexicographic, x1 > x2 > ...
}

MultiPoly MultiPoly::constant(int nvars, const FieldElement& c) {
  MultiPoly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw std::out_of_range("variable index");
  Monomial m(nvars, 0);
  m[i] = 1;
  return monomial(nvars, std::move(m), FieldElement(1));
}

MultiPoly MultiPoly::monomial(int nvars, Monomial exp, const FieldElement& c) {
  if (static_cast<int>(exp.size()) != nvars) throw std::invalid_argument("exponent length");
  MultiPoly p(nvars);
  p.add_term(exp, c);
  return p;
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  return monomial_degree(terms_.begin()->first);
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = degree();
  for (const auto& [m, c] : terms_)
    if (monomial_degree(m) != d) return false;
  return true;
}

FieldElement MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? FieldElement(0) : it->second;
}

const std::pair<const Monomial, FieldElement>& MultiPoly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return *terms_.begin();
}

void MultiPoly::add_term(const Monomial& exp, const FieldElement& c) {
  if (static_cast<int>(exp.size()) != nvars_) throw std::invalid_argument("exponent length");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
  MultiPoly r(a.nvars_);
  Monomial m(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin(), jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt)
    if (it->first != jt->first || it->second != jt->second) return false;
  return true;
}

MultiPoly MultiPoly::scaled(const FieldElement& c) const {
  MultiPoly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(leading_term().second.inverse());
}

MultiPoly MultiPoly::partial_derivative(int i) const {
  if (i < 0 || i >= nvars_) throw std::out_of_range("derivative index");
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Monomial d = m;
    d[i] -= 1;
    r.add_term(d, c * FieldElement(m[i]));
  }
  return r;
}

MultiPoly MultiPoly::substitute_linear(const std::vector<std::vector<FieldElement>>& a) const {
  if (static_cast<int>(a.size()) != nvars_) throw std::invalid_argument("matrix shape");
  // Fast path: generalized permutation matrix (one nonzero per row) maps
  // monomials to monomials. All A/B/D reflections land here.
  bool monomial_map = true;
  std::vector<int> target(nvars_, -1);
  std::vector<FieldElement> factor(nvars_);
  for (int i = 0; i < nvars_ && monomial_map; ++i) {
    if (static_cast<int>(a[i].size()) != nvars_) throw std::invalid_argument("matrix shape");
    for (int j = 0; j < nvars_; ++j) {
      if (a[i][j].is_zero()) continue;
      if (target[i] != -1) {
        monomial_map = false;
        break;
      }
      target[i] = j;
      factor[i] = a[i][j];
    }
    if (target[i] == -1) monomial_map = false;
  }
  if (monomial_map) {
    MultiPoly r(nvars_);
    Monomial mm(nvars_);
    for (const auto& [m, c] : terms_) {
      std::fill(mm.begin(), mm.end(), 0);
      FieldElement coef = c;
      for (int i = 0; i < nvars_; ++i) {
        if (m[i] == 0) continue;
        mm[target[i]] += m[i];
        if (!(factor[i] == FieldElement(1))) coef *= factor[i].pow(m[i]);
      }
      r.add_term(mm, coef);
    }
    return r;
  }
  std::vector<MultiPoly> subs;
  subs.reserve(nvars_);
  for (int i = 0; i < nvars_; ++i) {
    MultiPoly s(nvars_);
    for (int j = 0; j < nvars_; ++j) {
      Monomial m(nvars_, 0);
      m[j] = 1;
      s.add_term(m, a[i][j]);
    }
    subs.push_back(std::move(s));
  }
  return substitute(subs);
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& subs) const {
  if (static_cast<int>(subs.size()) != nvars_) throw std::invalid_argument("substitution arity");
  int out_vars = subs.empty() ? 0 : subs[0].nvars();
  for (const auto& s : subs)
    if (s.nvars() != out_vars) throw std::invalid_argument("substitution variable counts differ");
  // Cache powers of each substituted polynomial up to the needed exponent.
  std::vector<int> maxe(nvars_, 0);
  for (const auto& [m, c] : terms_)
    for (int i = 0; i < nvars_; ++i) maxe[i] = std::max(maxe[i], m[i]);
  std::vector<std::vector<MultiPoly>> pw(nvars_);
  for (int i = 0; i < nvars_; ++i) {
    pw[i].push_back(MultiPoly::constant(out_vars, FieldElement(1)));
    for (int e = 1; e <= maxe[i]; ++e) pw[i].push_back(pw[i][e - 1] * subs[i]);
  }
  MultiPoly r(out_vars);
  for (const auto& [m, c] : terms_) {
    MultiPoly term = MultiPoly::constant(out_vars, c);
    for (int i = 0; i < nvars_; ++i)
      if (m[i] > 0) term *= pw[i][m[i]];
    r += term;
  }
  return r;
}

MultiPoly MultiPoly::divide_by_linear_form(const std::vector<FieldElement>& gamma) const {
  if (static_cast<int>(gamma.size()) != nvars_) throw std::invalid_argument("covector length");
  int piv = -1;
  for (int i = 0; i < nvars_; ++i)
    if (!gamma[i].is_zero()) {
      piv = i;
      break;
    }
  if (piv < 0) throw std::invalid_argument("zero linear form");
  if (is_zero()) return MultiPoly(nvars_);

  // View p as a polynomial in x_piv with MultiPoly coefficients and run
  // synthetic division by c*x_piv + R from the top degree down.
  int topdeg = 0;
  for (const auto& [m, c] : terms_) topdeg = std::max(topdeg, m[piv]);
  std::vector<MultiPoly> coef(topdeg + 1, MultiPoly(nvars_));
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    int k = mm[piv];
    mm[piv] = 0;
    coef[k].add_term(mm, c);
  }
  MultiPoly rest(nvars_);  // R = (gamma, x) - c*x_piv
  for (int i = 0; i < nvars_; ++i) {
    if (i == piv || gamma[i].is_zero()) continue;
    rest.add_term(MultiPoly::variable(nvars_, i).leading_term().first, gamma[i]);
  }
  // p = sum coef[k] x^k, divisor c*x + R:
  //   coef[k] = c*q[k-1] + R*q[k],  remainder = coef[0] - R*q[0].
  FieldElement cinv = gamma[piv].inverse();
  std::vector<MultiPoly> q(std::max(topdeg, 1), MultiPoly(nvars_));
  for (int k = topdeg; k >= 1; --k) {
    MultiPoly num = coef[k];
    if (k < topdeg) num -= rest * q[k];
    q[k - 1] = num.scaled(cinv);
  }
  if (coef[0] != rest * q[0])
    throw std::logic_error("polynomial not divisible by the linear form");
  MultiPoly result(nvars_);
  for (int k = 0; k < static_cast<int>(q.size()); ++k) {
    Monomial shift(nvars_, 0);
    shift[piv] = k;
    result += q[k] * MultiPoly::monomial(nvars_, shift, FieldElement(1));
  }
  return result;
}

MultiPoly operator*(const FieldElement& c, const MultiPoly& p) { return p.scaled(c); }

std::string MultiPoly::to_string(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.to_string();
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      os << "*";
      if (static_cast<int>(var_names.size()) == nvars_)
        os << var_names[i];
      else
        os << "x" << (i + 1);
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

PolyMatrix::PolyMatrix(int rows, int cols, int nvars)
    : data_(rows, std::vector<MultiPoly>(cols, MultiPoly(nvars))) {}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols() != o.rows()) throw std::invalid_argument("polymatrix shape mismatch");
  int nv = rows() && cols() ? at(0, 0).nvars() : 0;
  PolyMatrix r(rows(), o.cols(), nv);
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < o.cols(); ++j)
      for (int k = 0; k < cols(); ++k) r.at(i, j) += at(i, k) * o.at(k, j);
  return r;
}

// ---- linear algebra ----

namespace {

struct Echelon {
  FieldMatrix m;                 // reduced rows
  std::vector<int> pivot_cols;   // per row
};

// Gauss-Jordan with full row processing; rows of `a` may include an
// augmented column handled by the caller.
Echelon reduce(FieldMatrix a) {
  Echelon e;
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!a[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    FieldElement inv = a[r][c].inverse();
    for (int j = c; j < cols; ++j) a[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      FieldElement f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    e.pivot_cols.push_back(c);
    ++r;
  }
  a.resize(r);
  e.m = std::move(a);
  return e;
}

}  // namespace

LinearSolution solve_linear_exact(const FieldMatrix& m, const FieldVector& b) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  if (static_cast<int>(b.size()) != rows) throw std::invalid_argument("rhs length");
  FieldMatrix aug = m;
  for (int i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  if (rows == 0) {
    LinearSolution s;
    s.consistent = true;
    s.particular.assign(cols, FieldElement(0));
    for (int j = 0; j < cols; ++j) {
      FieldVector v(cols, FieldElement(0));
      v[j] = FieldElement(1);
      s.nullspace.push_back(std::move(v));
    }
    return s;
  }
  Echelon e = reduce(std::move(aug));
  LinearSolution s;
  s.consistent = true;
  for (size_t i = 0; i < e.pivot_cols.size(); ++i)
    if (e.pivot_cols[i] == cols) s.consistent = false;  // pivot in rhs column
  if (!s.consistent) return s;
  std::vector<int> pivot_of_col(cols, -1);
  for (size_t i = 0; i < e.pivot_cols.size(); ++i) pivot_of_col[e.pivot_cols[i]] = static_cast<int>(i);
  s.particular.assign(cols, FieldElement(0));
  for (int c = 0; c < cols; ++c)
    if (pivot_of_col[c] >= 0) s.particular[c] = e.m[pivot_of_col[c]][cols];
  for (int c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    FieldVector v(cols, FieldElement(0));
    v[c] = FieldElement(1);
    for (int cc = 0; cc < cols; ++cc)
      if (pivot_of_col[cc] >= 0) v[cc] = -e.m[pivot_of_col[cc]][c];
    s.nullspace.push_back(std::move(v));
  }
  return s;
}

std::vector<FieldVector> nullspace_exact(const FieldMatrix& m) {
  int rows = static_cast<int>(m.size());
  FieldVector zero(rows, FieldElement(0));
  return solve_linear_exact(m, zero).nullspace;
}

int rank_exact(FieldMatrix m) { return static_cast<int>(reduce(std::move(m)).pivot_cols.size()); }

FieldMatrix invert_exact(const FieldMatrix& m) {
  int n = static_cast<int>(m.size());
  FieldMatrix aug = m;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n) throw std::invalid_argument("not square");
    for (int j = 0; j < n; ++j) aug[i].push_back(FieldElement(i == j ? 1 : 0));
  }
  Echelon e = reduce(std::move(aug));
  if (static_cast<int>(e.pivot_cols.size()) != n || e.pivot_cols[n - 1] != n - 1)
    throw std::domain_error("matrix is singular");
  FieldMatrix inv(n, FieldVector(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = e.m[i][n + j];
  return inv;
}

}  // namespace cherednik
