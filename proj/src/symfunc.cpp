#include "qspectra/symfunc.hpp"

#include <algorithm>
#include <bit>
#include <optional>

#include "qspectra/errors.hpp"

namespace qspectra {

Alphabet::Alphabet(std::vector<VarId> vars, MultiPoly prefactor)
    : vars_(std::move(vars)), prefactor_(std::move(prefactor)) {
  if (!prefactor_.is_monomial()) throw Error(ErrorCode::InvalidArgument, "alphabet prefactor must be a nonzero monomial");
  auto sorted = vars_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::InvalidArgument, "alphabet variables must be distinct");
  }
}

Alphabet Alphabet::mu(int m, MultiPoly prefactor) {
  std::vector<VarId> vars;
  for (int i = 0; i < m; ++i) vars.push_back(VarId::mu(i));
  return {std::move(vars), std::move(prefactor)};
}

Alphabet Alphabet::nu(int n, MultiPoly prefactor) {
  std::vector<VarId> vars;
  for (int j = 0; j < n; ++j) vars.push_back(VarId::nu(j));
  return {std::move(vars), std::move(prefactor)};
}

Alphabet Alphabet::scaled(const MultiPoly& c) const { return {vars_, prefactor_ * c}; }

MultiPoly q_number(int k) {
  if (k == 0) return {};
  if (k < 0) return -q_number(-k);
  MultiPoly out;
  for (int e = k - 1; e >= 1 - k; e -= 2) out += MultiPoly::var(VarId::q(), e);
  return out;
}

namespace {

// Sum over index tuples i_1 < ... < i_k (strict) or i_1 <= ... <= i_k.
void sum_products(const std::vector<VarId>& vars, int k, bool strict, std::size_t start, Monomial current,
                  std::vector<MultiPoly::Term>& out) {
  if (k == 0) {
    out.push_back({current, 1});
    return;
  }
  for (std::size_t i = start; i < vars.size(); ++i) {
    sum_products(vars, k - 1, strict, strict ? i + 1 : i, current * Monomial::of(vars[i], 1), out);
  }
}

MultiPoly symmetric_sum(int k, const Alphabet& a, bool strict) {
  if (k < 0) return {};
  if (k == 0) return MultiPoly(1);
  std::vector<MultiPoly::Term> terms;
  sum_products(a.vars(), k, strict, 0, Monomial{}, terms);
  return MultiPoly::from_terms(std::move(terms)) * pow(a.prefactor(), static_cast<unsigned>(k));
}

}  // namespace

MultiPoly elem_sym(int k, const Alphabet& a) { return symmetric_sum(k, a, true); }

MultiPoly complete_sym(int k, const Alphabet& a) { return symmetric_sum(k, a, false); }

MultiPoly power_sum_classical(int k, const Alphabet& a) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "power sums start at k = 1");
  MultiPoly out;
  for (VarId v : a.vars()) out += MultiPoly::var(v, k);
  return out * pow(a.prefactor(), static_cast<unsigned>(k));
}

TruncatedSeries gen_series(GenKind which, const Alphabet& a, int order) {
  const VarId t = VarId::t();
  if (which == GenKind::P) {
    TruncatedSeries out(t, order);
    for (int j = 0; j <= order; ++j) out[j] = power_sum_classical(j + 1, a);
    return out;
  }
  TruncatedSeries out = TruncatedSeries::one(t, order);
  for (VarId v : a.vars()) {
    const MultiPoly x = a.prefactor() * MultiPoly::var(v);
    TruncatedSeries factor = TruncatedSeries::one(t, order);
    if (which == GenKind::E) {
      if (order >= 1) factor[1] = x;
    } else {
      MultiPoly power(1);
      for (int j = 1; j <= order; ++j) {
        power *= x;
        factor[j] = power;
      }
    }
    out = out * factor;
  }
  return out;
}

TruncatedSeries super_series(SuperKind which, const Alphabet& x, const Alphabet& y, int order) {
  switch (which) {
    case SuperKind::A: return gen_series(GenKind::E, x, order) * gen_series(GenKind::H, y.negated(), order);
    case SuperKind::S: return gen_series(GenKind::H, x, order) * gen_series(GenKind::E, y.negated(), order);
    case SuperKind::Pi: return gen_series(GenKind::P, x, order) - gen_series(GenKind::P, y, order);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown super series");
}

RationalFunction determinant(const std::vector<std::vector<RationalFunction>>& matrix) {
  const std::size_t n = matrix.size();
  if (n == 0) return 1;
  if (n > 20) throw Error(ErrorCode::InvalidArgument, "determinant too large for subset expansion");
  for (const auto& row : matrix) {
    if (row.size() != n) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  }
  // partial[mask]: signed sum over injective maps of the first popcount(mask)
  // rows onto the columns in mask.
  std::vector<std::optional<RationalFunction>> partial(std::size_t{1} << n);
  partial[0] = RationalFunction(1);
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t mask = 0; mask < partial.size(); ++mask) {
      if (!partial[mask] || static_cast<std::size_t>(std::popcount(mask)) != row) continue;
      for (std::size_t col = 0; col < n; ++col) {
        if (mask & (std::size_t{1} << col)) continue;
        const auto& entry = matrix[row][col];
        if (entry.is_zero()) continue;
        const int inversions = std::popcount(mask >> (col + 1));
        RationalFunction term = *partial[mask] * entry;
        if (inversions % 2 != 0) term = -term;
        auto& slot = partial[mask | (std::size_t{1} << col)];
        if (slot) {
          *slot += term;
        } else {
          slot = std::move(term);
        }
      }
      partial[mask].reset();
    }
  }
  const auto& full = partial.back();
  return full ? *full : RationalFunction();
}

RationalFunction jacobi_trudi(const Partition& lambda, const HProvider& h) {
  const int len = lambda.length();
  std::vector<std::vector<RationalFunction>> matrix(static_cast<std::size_t>(len),
                                                    std::vector<RationalFunction>(static_cast<std::size_t>(len)));
  for (int i = 0; i < len; ++i) {
    for (int j = 0; j < len; ++j) {
      const int k = lambda[i] - i + j;
      if (k < 0) continue;
      matrix[i][j] = k == 0 ? RationalFunction(1) : h(k);
    }
  }
  return determinant(matrix);
}

}  // namespace qspectra
