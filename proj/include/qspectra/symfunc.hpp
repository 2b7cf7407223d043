#pragma once

#include <functional>
#include <vector>

#include "qspectra/multipoly.hpp"
#include "qspectra/partition.hpp"
#include "qspectra/ratfun.hpp"
#include "qspectra/series.hpp"

namespace qspectra {

/// An ordered list of distinct variables with a common monomial prefactor c,
/// standing for the scaled alphabet (c x_1, ..., c x_p).
class Alphabet {
 public:
  Alphabet() : prefactor_(1) {}
  // Throws InvalidArgument when prefactor is not a single nonzero term or the
  // variables repeat.
  Alphabet(std::vector<VarId> vars, MultiPoly prefactor);

  // mu_1..mu_m (resp. nu_1..nu_n) scaled by prefactor.
  static Alphabet mu(int m, MultiPoly prefactor = MultiPoly(1));
  static Alphabet nu(int n, MultiPoly prefactor = MultiPoly(1));

  const std::vector<VarId>& vars() const { return vars_; }
  const MultiPoly& prefactor() const { return prefactor_; }
  std::size_t size() const { return vars_.size(); }

  Alphabet scaled(const MultiPoly& c) const;
  Alphabet negated() const { return scaled(MultiPoly(-1)); }

 private:
  std::vector<VarId> vars_;
  MultiPoly prefactor_;
};

/// k_q = (q^k - q^-k)/(q - q^-1) as the Laurent polynomial
/// q^(k-1) + q^(k-3) + ... + q^(1-k); 0_q = 0 and (-k)_q = -k_q.
MultiPoly q_number(int k);

MultiPoly elem_sym(int k, const Alphabet& a);
MultiPoly complete_sym(int k, const Alphabet& a);
/// p_k = sum_i (c x_i)^k, k >= 1.
MultiPoly power_sum_classical(int k, const Alphabet& a);

enum class GenKind { E, H, P };

/// E(x|t) = prod (1 + x_i t), H(x|t) = prod (1 - x_i t)^-1 built as series
/// products; P(x|t) = sum_k p_k t^(k-1), so coefficient j holds p_{j+1}.
TruncatedSeries gen_series(GenKind which, const Alphabet& a, int order);

enum class SuperKind { A, S, Pi };

/// A = E(X|t) H(-Y|t), S = H(X|t) E(-Y|t), Pi = P(X|t) - P(Y|t).
TruncatedSeries super_series(SuperKind which, const Alphabet& x, const Alphabet& y, int order);

using HProvider = std::function<RationalFunction(int)>;

/// det(h(lambda_i - i + j)) for 1 <= i, j <= l(lambda). h(k) is taken as 0 for
/// k < 0 and 1 for k = 0 without consulting the provider.
RationalFunction jacobi_trudi(const Partition& lambda, const HProvider& h);

/// Determinant by Laplace expansion over column subsets. No division is
/// performed, so entries may be arbitrary rational functions.
RationalFunction determinant(const std::vector<std::vector<RationalFunction>>& matrix);

}  // namespace qspectra
