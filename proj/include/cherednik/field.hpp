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

#ifndef CHEREDNIK_FIELD_HPP
#define CHEREDNIK_FIELD_HPP

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace cherednik {

using Rat = mpq_class;

/// Parses "p/q" or "p"; rejects zero denominators.
Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& r);

/// A simple algebraic extension Q[w]/(mu(w)), with mu either x^2 - d for
/// square-free d or the ell-th cyclotomic polynomial Phi_ell.
class FieldContext {
 public:
  enum class Kind { Sqrt, Cyclotomic };

  static std::shared_ptr<const FieldContext> sqrt_ext(long d);
  static std::shared_ptr<const FieldContext> cyclotomic(long ell);

  Kind kind() const { return kind_; }
  long param() const { return param_; }
  int degree() const { return static_cast<int>(min_poly_.size()) - 1; }
  /// Coefficients of mu, ascending, monic.
  const std::vector<Rat>& min_poly() const { return min_poly_; }

  FieldContext(Kind kind, long param, std::vector<Rat> min_poly)
      : kind_(kind), param_(param), min_poly_(std::move(min_poly)) {}

 private:
  Kind kind_;
  long param_;
  std::vector<Rat> min_poly_;
};

using FieldContextPtr = std::shared_ptr<const FieldContext>;

/// An exact scalar: a rational, or an element of a FieldContext extension.
/// Extension elements are kept reduced modulo the minimal polynomial.
class FieldElement {
 public:
  FieldElement() : coeffs_(1, Rat(0)) {}
  FieldElement(long n) : coeffs_(1, Rat(n)) {}
  FieldElement(const Rat& r) : coeffs_(1, r) { coeffs_[0].canonicalize(); }
  FieldElement(long num, long den);

  /// The distinguished root w of the context's minimal polynomial.
  static FieldElement omega(const FieldContextPtr& ctx);
  /// Element with the given coefficient vector over Q (length <= deg mu).
  static FieldElement extension(const FieldContextPtr& ctx, std::vector<Rat> coeffs);

  bool is_rational() const { return ctx_ == nullptr; }
  bool is_zero() const;
  const FieldContextPtr& context() const { return ctx_; }
  /// Rational value; throws if the element does not lie in Q.
  Rat rational_value() const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  FieldElement inverse() const;
  FieldElement pow(long e) const;

  std::string to_string() const;

 private:
  // Promotes *this and o to a shared context; throws on incompatible contexts.
  static void align(FieldElement& a, FieldElement& b);

  FieldContextPtr ctx_;          // null for plain rationals
  std::vector<Rat> coeffs_;      // length 1 (rational) or deg(mu)
};

/// nu(nu-1)...(nu-k+1)/k!; equals 1 for k = 0.
FieldElement generalized_binomial(const FieldElement& nu, long k);

}  // namespace cherednik

#endif  // CHEREDNIK_FIELD_HPP
