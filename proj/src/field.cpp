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

#include "cherednik/field.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace cherednik {

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  mpz_class num, den(1);
  if (slash == std::string::npos) {
    num = mpz_class(s);
  } else {
    num = mpz_class(s.substr(0, slash));
    den = mpz_class(s.substr(slash + 1));
  }
  if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

namespace {

// Dense univariate polynomials over Q, ascending coefficients.
using UPoly = std::vector<Rat>;

void utrim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  utrim(r);
  return r;
}

// Division a = q*b + r, b nonzero.
std::pair<UPoly, UPoly> udivmod(UPoly a, const UPoly& b) {
  UPoly q;
  utrim(a);
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
  while (a.size() >= b.size()) {
    Rat f = a.back() / b.back();
    size_t off = a.size() - b.size();
    q[off] = f;
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    utrim(a);
  }
  return {std::move(q), std::move(a)};
}

UPoly usub(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  utrim(a);
  return a;
}

// Phi_ell by peeling off Phi_d for proper divisors d.
UPoly cyclotomic_poly(long ell) {
  UPoly p(ell + 1, Rat(0));  // x^ell - 1
  p[0] = -1;
  p[ell] = 1;
  for (long d = 1; d < ell; ++d) {
    if (ell % d != 0) continue;
    p = udivmod(std::move(p), cyclotomic_poly(d)).first;
  }
  return p;
}

}  // namespace

FieldContextPtr FieldContext::sqrt_ext(long d) {
  if (d == 0 || d == 1) throw std::invalid_argument("sqrt extension needs d != 0, 1");
  std::vector<Rat> mu = {Rat(-d), Rat(0), Rat(1)};
  return std::make_shared<FieldContext>(Kind::Sqrt, d, std::move(mu));
}

FieldContextPtr FieldContext::cyclotomic(long ell) {
  if (ell < 2) throw std::invalid_argument("cyclotomic extension needs ell >= 2");
  static std::mutex mtx;
  static std::map<long, FieldContextPtr> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(ell);
  if (it != cache.end()) return it->second;
  auto ctx = std::make_shared<FieldContext>(Kind::Cyclotomic, ell, cyclotomic_poly(ell));
  cache.emplace(ell, ctx);
  return ctx;
}

FieldElement::FieldElement(long num, long den) : coeffs_(1) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  coeffs_[0] = Rat(num, den);
  coeffs_[0].canonicalize();
}

FieldElement FieldElement::omega(const FieldContextPtr& ctx) {
  std::vector<Rat> c(ctx->degree(), Rat(0));
  if (ctx->degree() == 1) {
    // mu = x - r: omega is the rational root itself.
    c[0] = -ctx->min_poly()[0];
  } else {
    c[1] = 1;
  }
  return extension(ctx, std::move(c));
}

FieldElement FieldElement::extension(const FieldContextPtr& ctx, std::vector<Rat> coeffs) {
  if (static_cast<int>(coeffs.size()) > ctx->degree())
    throw std::invalid_argument("coefficient vector longer than extension degree");
  FieldElement e;
  e.ctx_ = ctx;
  coeffs.resize(ctx->degree(), Rat(0));
  e.coeffs_ = std::move(coeffs);
  return e;
}

bool FieldElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

Rat FieldElement::rational_value() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) throw std::logic_error("field element is not rational");
  return coeffs_[0];
}

void FieldElement::align(FieldElement& a, FieldElement& b) {
  if (a.ctx_ == b.ctx_) return;
  if (a.ctx_ && b.ctx_) {
    if (a.ctx_->kind() != b.ctx_->kind() || a.ctx_->param() != b.ctx_->param() ||
        a.ctx_->min_poly() != b.ctx_->min_poly())
      throw std::logic_error("mixing elements of different field extensions");
    return;  // equal contexts behind distinct pointers
  }
  FieldElement& rat = a.ctx_ ? b : a;
  const FieldElement& ext = a.ctx_ ? a : b;
  rat.ctx_ = ext.ctx_;
  rat.coeffs_.resize(ext.coeffs_.size(), Rat(0));
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  FieldElement b = o;
  align(*this, b);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  FieldElement b = o;
  align(*this, b);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  FieldElement b = o;
  align(*this, b);
  if (!ctx_) {
    coeffs_[0] *= b.coeffs_[0];
    return *this;
  }
  UPoly prod = umul(coeffs_, b.coeffs_);
  if (!prod.empty() && static_cast<int>(prod.size()) >= static_cast<int>(ctx_->min_poly().size()))
    prod = udivmod(std::move(prod), ctx_->min_poly()).second;
  prod.resize(ctx_->degree(), Rat(0));
  coeffs_ = std::move(prod);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

bool FieldElement::operator==(const FieldElement& o) const {
  FieldElement a = *this, b = o;
  align(a, b);
  return a.coeffs_ == b.coeffs_;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero field element");
  if (!ctx_) return FieldElement(Rat(1) / coeffs_[0]);
  // Extended Euclid in Q[w]: u*a + v*mu = gcd (a unit, mu irreducible).
  UPoly r0 = ctx_->min_poly(), r1 = coeffs_;
  utrim(r1);
  UPoly s0 = {}, s1 = {Rat(1)};  // coefficients of `a` in r0, r1
  while (!r1.empty() && r1.size() > 1) {
    auto [q, r] = udivmod(r0, r1);
    UPoly s = usub(s0, umul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  UPoly u;
  if (r1.empty()) {
    // gcd reached at r0; mu irreducible forces deg r0 == 0 for nonzero a.
    if (r0.size() != 1) throw std::logic_error("reducible minimal polynomial");
    u = s0;
    for (auto& c : u) c /= r0[0];
  } else {
    u = s1;
    for (auto& c : u) c /= r1[0];
  }
  u.resize(ctx_->degree(), Rat(0));
  return extension(ctx_, std::move(u));
}

FieldElement FieldElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement base = *this, result(1);
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string FieldElement::to_string() const {
  if (!ctx_) return rat_to_string(coeffs_[0]);
  std::string s = "[";
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ", ";
    s += rat_to_string(coeffs_[i]);
  }
  return s + "]";
}

FieldElement generalized_binomial(const FieldElement& nu, long k) {
  if (k < 0) throw std::invalid_argument("negative k in generalized binomial");
  FieldElement num(1);
  Rat fact(1);
  for (long j = 0; j < k; ++j) {
    num *= nu - FieldElement(j);
    fact *= Rat(j + 1);
  }
  return num * FieldElement(Rat(1) / fact);
}

}  // namespace cherednik
