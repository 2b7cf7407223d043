#pragma once

#include <optional>
#include <string>

#include "qspectra/multipoly.hpp"

namespace qspectra {

/// Quotient num/den of two MultiPoly values.
///
/// The denominator is scaled so its leading coefficient is 1; no gcd is ever
/// taken, so equality is decided by cross-multiplication (see ratfun_eq).
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(const BigRational& c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(MultiPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT
  RationalFunction(MultiPoly num, MultiPoly den);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool has_unit_denominator() const { return den_.is_one(); }

  // The polynomial this equals, when den divides num exactly.
  std::optional<MultiPoly> cleared() const;

  RationalFunction inverse() const;
  RationalFunction operator-() const { return {-num_, den_, Normalized{}}; }

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  // Mathematical equality, not representation equality.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  std::string to_string(std::size_t max_terms = 0) const;

 private:
  struct Normalized {};
  RationalFunction(MultiPoly num, MultiPoly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}

  MultiPoly num_;
  MultiPoly den_;
};

/// a == b iff a.num * b.den == b.num * a.den.
bool ratfun_eq(const RationalFunction& a, const RationalFunction& b);

/// a.num * b.den - b.num * a.den; zero iff the two are equal.
MultiPoly cleared_difference(const RationalFunction& a, const RationalFunction& b);

RationalFunction pow(const RationalFunction& base, int exponent);

/// Partial evaluation of numerator and denominator. Throws
/// DenominatorVanishes when the denominator specializes to zero.
RationalFunction specialize(const RationalFunction& f, const Point& point);

RationalFunction substitute(const RationalFunction& f, VarId v, const RationalFunction& value);

/// Quotient-rule derivative with respect to a formal variable.
RationalFunction diff_univar(const RationalFunction& f, VarId v);

/// k-th derivative with respect to a formal variable. Keeps the original
/// denominator D and returns N_k / D^(k+1) instead of squaring at each step.
RationalFunction diff_univar_n(const RationalFunction& f, VarId v, int k);

}  // namespace qspectra
