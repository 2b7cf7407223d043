#pragma once

#include <string>
#include <vector>

#include "qspectra/ratfun.hpp"

namespace qspectra {

/// Power series c_0 + c_1 x + ... + c_K x^K in one formal symbol x, with
/// everything beyond x^K discarded.
class TruncatedSeries {
 public:
  TruncatedSeries(VarId formal, int order);
  TruncatedSeries(VarId formal, std::vector<RationalFunction> coeffs);

  static TruncatedSeries one(VarId formal, int order);

  VarId formal() const { return formal_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<RationalFunction>& coeffs() const { return coeffs_; }
  // Coefficient of x^k; zero beyond the order is NOT implied, so k must be <= order.
  const RationalFunction& operator[](int k) const;
  RationalFunction& operator[](int k);

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  TruncatedSeries scaled(const RationalFunction& c) const;
  // x -> c x: coefficient k is multiplied by c^k.
  TruncatedSeries compose_scale(const RationalFunction& c) const;
  TruncatedSeries truncated(int order) const;
  // d/dx; the result has order K-1.
  TruncatedSeries derivative() const;
  // Multiplicative inverse; requires c_0 = 1.
  TruncatedSeries inverse() const;

  // True when every coefficient through the shared order agrees.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  std::string to_string() const;

 private:
  void check_compatible(const TruncatedSeries& o) const;

  VarId formal_;
  std::vector<RationalFunction> coeffs_;
};

/// a'/a through order K-1, from the recursion a' = (log a)' * a.
/// Throws NonUnitConstantTerm unless a_0 = 1.
TruncatedSeries series_log_derivative(const TruncatedSeries& a);

}  // namespace qspectra
