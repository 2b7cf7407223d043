#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qspectra/var.hpp"

namespace qspectra {

using BigRational = mpq_class;
using BigInt = mpz_class;

std::string to_string(const BigRational& r);

/// Exponent vector over the global variable layout. Only the q slot may be
/// negative; the cached total degree keeps graded comparisons cheap.
struct Monomial {
  std::array<std::int16_t, kSlots> exp{};
  std::int32_t degree = 0;

  static Monomial of(VarId v, int e);

  int operator[](VarId v) const { return exp[v.slot()]; }
  bool is_one() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;
  // Graded lexicographic: total degree first, then slot order q, mu, nu, formal.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// A (partial) assignment of rational values to variables.
class Point {
 public:
  void set(VarId v, BigRational value);
  void erase(VarId v);
  bool has(VarId v) const { return assigned_[v.slot()]; }
  const BigRational& get(VarId v) const;
  bool empty() const;

 private:
  std::array<BigRational, kSlots> values_{};
  std::array<bool, kSlots> assigned_{};
};

/// Sparse multivariate polynomial over Q, Laurent in q.
///
/// Terms are kept sorted in descending graded-lex order with no zero
/// coefficients, so two equal polynomials have identical term vectors.
class MultiPoly {
 public:
  struct Term {
    Monomial mono;
    BigRational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  MultiPoly() = default;
  MultiPoly(long c);  // NOLINT: integer constants read naturally in formulas
  MultiPoly(const BigRational& c);

  static MultiPoly var(VarId v, int exponent = 1);
  static MultiPoly monomial(const BigRational& c, const Monomial& m);
  static MultiPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::optional<BigRational> constant_value() const;

  // Greatest term in the canonical order. Precondition: nonzero.
  const Term& leading() const { return terms_.front(); }

  bool depends_on(VarId v) const;
  int max_exponent(VarId v) const;
  int min_exponent(VarId v) const;
  // Sum of all terms whose v-exponent equals e, with v removed.
  MultiPoly coefficient_of(VarId v, int e) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly scaled(const BigRational& c) const;
  MultiPoly shifted(const Monomial& m) const;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  // Renders at most max_terms terms, followed by a count of the rest.
  std::string to_string(std::size_t max_terms = 0) const;

 private:
  std::vector<Term> terms_;
};

MultiPoly pow(const MultiPoly& base, unsigned exponent);

/// Full evaluation. Throws MissingAssignment for an unassigned variable and
/// ZeroBaseNegativeExponent when q maps to 0 under a negative exponent.
BigRational poly_eval(const MultiPoly& p, const Point& point);

/// Replaces the assigned variables by their values and keeps the rest.
MultiPoly specialize(const MultiPoly& p, const Point& point);

/// Replaces v by a polynomial. v must occur with nonnegative exponents only.
MultiPoly substitute(const MultiPoly& p, VarId v, const MultiPoly& value);

/// Partial derivative with respect to v.
MultiPoly derivative(const MultiPoly& p, VarId v);

/// a / b when b divides a exactly, otherwise nullopt. Throws DivisionByZero
/// for b = 0.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

}  // namespace qspectra
