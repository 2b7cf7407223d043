#pragma once

#include <string>
#include <vector>

#include "qspectra/multipoly.hpp"
#include "qspectra/partition.hpp"
#include "qspectra/ratfun.hpp"
#include "qspectra/report.hpp"
#include "qspectra/series.hpp"
#include "qspectra/symfunc.hpp"

namespace qspectra {

/// Exponents of q inside the linear factors of the power-sum weights:
///   d_i  = q^-1 prod_{p!=i} (mu_i - q^{d_mu} mu_p)/(mu_i - mu_p) prod_j (mu_i - q^{d_nu} nu_j)/(mu_i - nu_j)
///   d~_j = -q  prod_i (nu_j - q^{dt_mu} mu_i)/(nu_j - mu_i) prod_{p!=j} (nu_j - q^{dt_nu} nu_p)/(nu_j - nu_p)
/// The defaults give the true weights; anything else is a deliberate
/// corruption used to check that the verifier can fail.
struct WeightExponents {
  int d_mu = -2;
  int d_nu = 2;
  int dt_mu = -2;
  int dt_nu = 2;
  friend bool operator==(const WeightExponents&, const WeightExponents&) = default;
};

inline constexpr int kDefaultOrder = 8;

/// Bi-rank (m|n) with spectral variables mu_1..mu_m and nu_1..nu_n.
struct SpectralContext {
  int m = 0;
  int n = 0;
  int order = kDefaultOrder;
  WeightExponents weight_exponents{};

  SpectralContext(int m, int n, int order = kDefaultOrder);

  // Position a in [0, m+n): mu_{a+1} for a < m, nu_{a-m+1} otherwise.
  VarId spectral_var(int a) const { return a < m ? VarId::mu(a) : VarId::nu(a - m); }
  int rank() const { return m + n; }

  Alphabet mu_alphabet() const;  // q^-1 mu
  Alphabet nu_alphabet() const;  // q nu
};

struct WeightVector {
  std::vector<RationalFunction> d;
  std::vector<RationalFunction> d_tilde;
};

/// All weights over the shared denominator V = prod_{a<b} (x_a - x_b), where
/// x runs over mu then nu: weight a equals numerators[a] / denominator.
struct CommonWeights {
  std::vector<MultiPoly> numerators;
  MultiPoly denominator;
};

MultiPoly pi_k(int k, const SpectralContext& ctx);
MultiPoly a_image(int k, const SpectralContext& ctx);
MultiPoly s_image(int k, const SpectralContext& ctx);

WeightVector weights(const SpectralContext& ctx);
CommonWeights common_weights(const SpectralContext& ctx);
/// The GL(m) weights q^-1 prod_{j!=i} (mu_i - q^-2 mu_j)/(mu_i - mu_j), built
/// independently of weights().
std::vector<RationalFunction> gl_weights(int m);

/// sum_i d_i mu_i^k + sum_j d~_j nu_j^k over the common denominator.
RationalFunction p_image(int k, const SpectralContext& ctx);

/// q^{n-m} (m-n)_q
MultiPoly p0_closed_form(int m, int n);

/// s_[m|n] = prod_i prod_j (q^-1 mu_i - q nu_j)
MultiPoly hook_schur_product(const SpectralContext& ctx);

RationalFunction f_of_z(const SpectralContext& ctx);
/// f written in y = 1/z: prod (1 - q^-2 mu_i y)/(1 - mu_i y) prod (1 - q^2 nu_j y)/(1 - nu_j y).
RationalFunction f_of_y(const SpectralContext& ctx);
/// Taylor expansion of f(y) at y = 0; coefficient r equals f_r / r!.
TruncatedSeries f_taylor(const SpectralContext& ctx, int order);

/// The summands q^-1 mu_i/((1-mu_i y)(1-q^-2 mu_i y)) and
/// -q nu_j/((1-nu_j y)(1-q^2 nu_j y)) of u(y).
std::vector<RationalFunction> u_terms(const SpectralContext& ctx);
RationalFunction u_of_y(const SpectralContext& ctx);

/// Residue of f at a simple pole in the formal variable v: multiply by
/// (v - pole), cancel exactly, then substitute. nullopt if (v - pole) does
/// not divide the denominator.
std::optional<RationalFunction> simple_pole_residue(const RationalFunction& f, VarId v, const MultiPoly& pole);

/// Equations behind the simple-fraction expansion of z^k f(z). Cell 0 also
/// carries the residues, f(0) and the behaviour at infinity. A nonempty point
/// specializes every ingredient first (evaluated mode).
std::vector<Equation> partial_fraction_equations(const SpectralContext& ctx, const Point& point, int k);
VerificationReport partial_fraction_check(const SpectralContext& ctx, int kmax = 0);

/// Equations for u_k(0) = k! (k+1)_q pi_{k+1}; cell 0 adds f' = (q-q^-1) u f
/// and cells k >= 1 add the f_k recursion and p_k = f_k / ((q-q^-1) k!).
std::vector<Equation> u_derivative_equations(const SpectralContext& ctx, const Point& point, int k);
VerificationReport u_derivatives_check(const SpectralContext& ctx, int kmax);

/// Jacobi-Trudi determinant over the s_image generators.
RationalFunction schur_image(const Partition& lambda, const SpectralContext& ctx);

struct ChImage {
  std::string label;      // "[m|n]^k" or "[m|n]_r"
  Partition partition;
  RationalFunction product;  // s_[m|n] e_k(q^-1 mu) or s_[m|n] e_r(-q nu)
  RationalFunction schur;    // schur_image(partition)
  bool matches = false;
};

std::vector<ChImage> ch_coeff_images(const SpectralContext& ctx);

}  // namespace qspectra
