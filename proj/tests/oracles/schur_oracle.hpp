#pragma once

// Schur polynomials by brute-force semistandard tableau enumeration, and
// Schur expansions of products by peeling off dominant monomials. Shares no
// code with the library's Littlewood-Richardson routine.

#include <map>
#include <vector>

#include "qspectra/partition.hpp"

namespace oracle {

using Exponent = std::vector<int>;
using Poly = std::map<Exponent, long long>;

namespace detail {

inline void fill(const std::vector<int>& shape, int vars, std::size_t row, int col, std::vector<std::vector<int>>& tab,
                 Exponent& exp, Poly& out) {
  if (row == shape.size()) {
    out[exp] += 1;
    return;
  }
  if (col == shape[row]) {
    fill(shape, vars, row + 1, 0, tab, exp, out);
    return;
  }
  int lo = 1;
  if (col > 0) lo = std::max(lo, tab[row][col - 1]);
  if (row > 0) lo = std::max(lo, tab[row - 1][col] + 1);
  for (int v = lo; v <= vars; ++v) {
    tab[row][col] = v;
    ++exp[v - 1];
    fill(shape, vars, row, col + 1, tab, exp, out);
    --exp[v - 1];
  }
}

inline bool weakly_decreasing(const Exponent& e) {
  for (std::size_t i = 1; i < e.size(); ++i) {
    if (e[i] > e[i - 1]) return false;
  }
  return true;
}

}  // namespace detail

/// s_lambda(x_1..x_vars) as a full monomial expansion.
inline Poly schur(const qspectra::Partition& lambda, int vars) {
  Poly out;
  if (lambda.length() > vars) return out;
  std::vector<int> shape(lambda.parts().begin(), lambda.parts().end());
  std::vector<std::vector<int>> tab;
  for (int r : shape) tab.emplace_back(static_cast<std::size_t>(r), 0);
  Exponent exp(static_cast<std::size_t>(vars), 0);
  detail::fill(shape, vars, 0, 0, tab, exp, out);
  return out;
}

/// Coefficients of the weakly decreasing exponents of a * b.
inline Poly dominant_product(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      if (detail::weakly_decreasing(e)) out[e] += ca * cb;
    }
  }
  return out;
}

/// s_lambda * s_mu = sum_nu c_nu s_nu, found in vars variables.
inline std::map<qspectra::Partition, long long> schur_product_expansion(const qspectra::Partition& lambda,
                                                                         const qspectra::Partition& mu, int vars) {
  Poly rest = dominant_product(schur(lambda, vars), schur(mu, vars));
  std::map<qspectra::Partition, long long> out;
  for (;;) {
    while (!rest.empty() && rest.rbegin()->second == 0) rest.erase(std::prev(rest.end()));
    if (rest.empty()) break;
    // The lexicographically largest surviving exponent is the leading partition.
    const auto [top, c] = *rest.rbegin();
    qspectra::Partition nu{std::vector<int>(top.begin(), top.end())};
    out[nu] = c;
    for (const auto& [e, k] : schur(nu, vars)) {
      if (!detail::weakly_decreasing(e)) continue;
      rest[e] -= c * k;
    }
  }
  return out;
}

}  // namespace oracle
