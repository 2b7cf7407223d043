#include "qspectra/spectral.hpp"

#include <chrono>

#include "qspectra/errors.hpp"

namespace qspectra {

namespace {

MultiPoly q_pow(int e) { return MultiPoly::var(VarId::q(), e); }

BigRational factorial(int k) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return BigRational(f);
}

BigRational binomial(int n, int r) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return BigRational(b);
}

MultiPoly x_of(const SpectralContext& ctx, int a) { return MultiPoly::var(ctx.spectral_var(a)); }

// Numerator factors and prefactor of weight a, without its denominator.
MultiPoly weight_numerator(const SpectralContext& ctx, int a) {
  const auto& ex = ctx.weight_exponents;
  const bool even = a < ctx.m;
  MultiPoly out = even ? q_pow(-1) : -q_pow(1);
  const MultiPoly xa = x_of(ctx, a);
  for (int b = 0; b < ctx.rank(); ++b) {
    if (b == a) continue;
    const bool b_even = b < ctx.m;
    const int e = even ? (b_even ? ex.d_mu : ex.d_nu) : (b_even ? ex.dt_mu : ex.dt_nu);
    out *= xa - q_pow(e) * x_of(ctx, b);
  }
  return out;
}

MultiPoly pair_product(const SpectralContext& ctx, int skip) {
  MultiPoly out(1);
  for (int a = 0; a < ctx.rank(); ++a) {
    if (a == skip) continue;
    for (int b = a + 1; b < ctx.rank(); ++b) {
      if (b == skip) continue;
      out *= x_of(ctx, a) - x_of(ctx, b);
    }
  }
  return out;
}

MultiPoly lift(const MultiPoly& p, const Point& point) { return specialize(p, point); }

RationalFunction lift(const RationalFunction& f, const Point& point) { return specialize(f, point); }

MultiPoly lift_nonzero(const MultiPoly& p, const Point& point) {
  MultiPoly out = specialize(p, point);
  if (out.is_zero()) throw Error(ErrorCode::DenominatorVanishes, "common denominator vanishes at sample point");
  return out;
}

// sum_i c_i / (v - pole_i), brought over V * prod (v - pole_j) when every c_i
// has a denominator dividing V.
RationalFunction sum_simple_fractions(const std::vector<RationalFunction>& coeffs, const std::vector<MultiPoly>& poles,
                                      const MultiPoly& common, VarId v) {
  const MultiPoly var = MultiPoly::var(v);
  std::vector<MultiPoly> nums;
  for (const auto& c : coeffs) {
    auto cof = divide_exact(common, c.den());
    if (!cof) break;
    nums.push_back(c.num() * *cof);
  }
  if (nums.size() != coeffs.size()) {
    RationalFunction sum;
    for (std::size_t i = 0; i < coeffs.size(); ++i) sum += coeffs[i] * RationalFunction(MultiPoly(1), var - poles[i]);
    return sum;
  }
  MultiPoly num;
  MultiPoly den = common;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    MultiPoly term = nums[i];
    for (std::size_t j = 0; j < poles.size(); ++j) {
      if (j != i) term *= var - poles[j];
    }
    num += term;
    den *= var - poles[i];
  }
  return {std::move(num), std::move(den)};
}

template <typename Builder>
VerificationReport run_cells(IdentityId id, const SpectralContext& ctx, int kmin, int kmax, Builder build) {
  VerificationReport report;
  report.identity = id;
  report.mode = Mode::Symbolic;
  const Point symbolic;
  for (int k = kmin; k <= kmax; ++k) {
    auto start = std::chrono::steady_clock::now();
    CellResult cell = check_equations(ctx.m, ctx.n, k, build(ctx, symbolic, k));
    cell.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.cells.push_back(std::move(cell));
  }
  return report;
}

}  // namespace

SpectralContext::SpectralContext(int m_, int n_, int order_) : m(m_), n(n_), order(order_) {
  if (m < 0 || m > kMaxMu || n < 0 || n > kMaxNu) {
    throw Error(ErrorCode::IndexOutOfRange, "bi-rank must satisfy 0 <= m <= 8 and 0 <= n <= 8");
  }
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "series order must be positive");
}

Alphabet SpectralContext::mu_alphabet() const { return Alphabet::mu(m, q_pow(-1)); }

Alphabet SpectralContext::nu_alphabet() const { return Alphabet::nu(n, q_pow(1)); }

MultiPoly pi_k(int k, const SpectralContext& ctx) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "pi_k needs k >= 1");
  return power_sum_classical(k, ctx.mu_alphabet()) - power_sum_classical(k, ctx.nu_alphabet());
}

MultiPoly a_image(int k, const SpectralContext& ctx) {
  if (k < 0) return {};
  const Alphabet x = ctx.mu_alphabet();
  const Alphabet y = ctx.nu_alphabet().negated();
  MultiPoly out;
  for (int r = 0; r <= std::min<int>(k, static_cast<int>(x.size())); ++r) out += elem_sym(r, x) * complete_sym(k - r, y);
  return out;
}

MultiPoly s_image(int k, const SpectralContext& ctx) {
  if (k < 0) return {};
  const Alphabet x = ctx.mu_alphabet();
  const Alphabet y = ctx.nu_alphabet().negated();
  MultiPoly out;
  for (int r = 0; r <= std::min<int>(k, static_cast<int>(y.size())); ++r) out += elem_sym(r, y) * complete_sym(k - r, x);
  return out;
}

WeightVector weights(const SpectralContext& ctx) {
  if (ctx.rank() < 1) throw Error(ErrorCode::InvalidArgument, "weights need m + n >= 1");
  WeightVector w;
  for (int a = 0; a < ctx.rank(); ++a) {
    MultiPoly den(1);
    for (int b = 0; b < ctx.rank(); ++b) {
      if (b != a) den *= x_of(ctx, a) - x_of(ctx, b);
    }
    RationalFunction d(weight_numerator(ctx, a), std::move(den));
    (a < ctx.m ? w.d : w.d_tilde).push_back(std::move(d));
  }
  return w;
}

CommonWeights common_weights(const SpectralContext& ctx) {
  if (ctx.rank() < 1) throw Error(ErrorCode::InvalidArgument, "weights need m + n >= 1");
  CommonWeights cw;
  cw.denominator = pair_product(ctx, -1);
  for (int a = 0; a < ctx.rank(); ++a) {
    // V = (-1)^a prod_{b!=a} (x_a - x_b) * prod_{pairs avoiding a}
    MultiPoly w = weight_numerator(ctx, a) * pair_product(ctx, a);
    if (a % 2 != 0) w = -w;
    cw.numerators.push_back(std::move(w));
  }
  return cw;
}

std::vector<RationalFunction> gl_weights(int m) {
  std::vector<RationalFunction> out;
  for (int i = 0; i < m; ++i) {
    const MultiPoly mi = MultiPoly::var(VarId::mu(i));
    RationalFunction d = q_pow(-1);
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      const MultiPoly mj = MultiPoly::var(VarId::mu(j));
      d *= RationalFunction(mi - q_pow(-2) * mj, mi - mj);
    }
    out.push_back(std::move(d));
  }
  return out;
}

RationalFunction p_image(int k, const SpectralContext& ctx) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "p_image needs k >= 0");
  const CommonWeights cw = common_weights(ctx);
  MultiPoly num;
  for (int a = 0; a < ctx.rank(); ++a) num += cw.numerators[a] * MultiPoly::var(ctx.spectral_var(a), k);
  return {std::move(num), cw.denominator};
}

MultiPoly p0_closed_form(int m, int n) { return q_pow(n - m) * q_number(m - n); }

MultiPoly hook_schur_product(const SpectralContext& ctx) {
  MultiPoly out(1);
  for (int i = 0; i < ctx.m; ++i) {
    for (int j = 0; j < ctx.n; ++j) {
      out *= q_pow(-1) * MultiPoly::var(VarId::mu(i)) - q_pow(1) * MultiPoly::var(VarId::nu(j));
    }
  }
  return out;
}

RationalFunction f_of_z(const SpectralContext& ctx) {
  if (ctx.rank() < 1) throw Error(ErrorCode::InvalidArgument, "f(z) needs m + n >= 1");
  const MultiPoly z = MultiPoly::var(VarId::z());
  MultiPoly num(1);
  MultiPoly den(1);
  for (int a = 0; a < ctx.rank(); ++a) {
    const MultiPoly x = x_of(ctx, a);
    num *= z - q_pow(a < ctx.m ? -2 : 2) * x;
    den *= z - x;
  }
  return {std::move(num), std::move(den)};
}

RationalFunction f_of_y(const SpectralContext& ctx) {
  if (ctx.rank() < 1) throw Error(ErrorCode::InvalidArgument, "f(y) needs m + n >= 1");
  const MultiPoly y = MultiPoly::var(VarId::y());
  MultiPoly num(1);
  MultiPoly den(1);
  for (int a = 0; a < ctx.rank(); ++a) {
    const MultiPoly x = x_of(ctx, a);
    num *= MultiPoly(1) - q_pow(a < ctx.m ? -2 : 2) * x * y;
    den *= MultiPoly(1) - x * y;
  }
  return {std::move(num), std::move(den)};
}

TruncatedSeries f_taylor(const SpectralContext& ctx, int order) {
  const VarId y = VarId::y();
  TruncatedSeries out = TruncatedSeries::one(y, order);
  for (int a = 0; a < ctx.rank(); ++a) {
    const MultiPoly x = x_of(ctx, a);
    TruncatedSeries zero_factor = TruncatedSeries::one(y, order);
    if (order >= 1) zero_factor[1] = -(q_pow(a < ctx.m ? -2 : 2) * x);
    TruncatedSeries pole_factor = TruncatedSeries::one(y, order);
    MultiPoly power(1);
    for (int j = 1; j <= order; ++j) {
      power *= x;
      pole_factor[j] = power;
    }
    out = out * zero_factor * pole_factor;
  }
  return out;
}

std::vector<RationalFunction> u_terms(const SpectralContext& ctx) {
  if (ctx.rank() < 1) throw Error(ErrorCode::InvalidArgument, "u(y) needs m + n >= 1");
  const MultiPoly y = MultiPoly::var(VarId::y());
  std::vector<RationalFunction> out;
  for (int a = 0; a < ctx.rank(); ++a) {
    const MultiPoly x = x_of(ctx, a);
    const bool even = a < ctx.m;
    MultiPoly num = even ? q_pow(-1) * x : -(q_pow(1) * x);
    MultiPoly den = (MultiPoly(1) - x * y) * (MultiPoly(1) - q_pow(even ? -2 : 2) * x * y);
    out.emplace_back(std::move(num), std::move(den));
  }
  return out;
}

RationalFunction u_of_y(const SpectralContext& ctx) {
  RationalFunction sum;
  for (const auto& term : u_terms(ctx)) sum += term;
  return sum;
}

std::optional<RationalFunction> simple_pole_residue(const RationalFunction& f, VarId v, const MultiPoly& pole) {
  auto cofactor = divide_exact(f.den(), MultiPoly::var(v) - pole);
  if (!cofactor) return std::nullopt;
  MultiPoly den = substitute(*cofactor, v, pole);
  if (den.is_zero()) throw Error(ErrorCode::DenominatorVanishes, "pole of order > 1 at sample point");
  return RationalFunction(substitute(f.num(), v, pole), std::move(den));
}

std::vector<Equation> partial_fraction_equations(const SpectralContext& ctx, const Point& point, int k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative index");
  const VarId z = VarId::z();
  const MultiPoly zvar = MultiPoly::var(z);
  const RationalFunction qq = lift(q_pow(1) - q_pow(-1), point);
  const CommonWeights cw = common_weights(ctx);
  const MultiPoly common = lift_nonzero(cw.denominator, point);
  std::vector<MultiPoly> weight_nums;
  std::vector<MultiPoly> poles;
  for (int a = 0; a < ctx.rank(); ++a) {
    weight_nums.push_back(lift(cw.numerators[a], point));
    poles.push_back(lift(x_of(ctx, a), point));
  }
  const RationalFunction f = lift(f_of_z(ctx), point);

  std::vector<Equation> eqs;
  if (k == 0) {
    std::vector<RationalFunction> residues;
    for (int a = 0; a < ctx.rank(); ++a) {
      const std::string at = ctx.spectral_var(a).name();
      auto res = simple_pole_residue(f, z, poles[a]);
      if (!res) {
        eqs.push_back({"simple pole at " + at, 1, 0});
        continue;
      }
      eqs.push_back({"Res f at " + at + " = (q-q^-1)*" + at + "*weight", *res,
                     qq * RationalFunction(poles[a] * weight_nums[a], common)});
      residues.push_back(std::move(*res));
    }
    if (residues.size() == poles.size()) {
      eqs.push_back({"f(z) = 1 + sum Res/(z - pole)", f, RationalFunction(1) + sum_simple_fractions(residues, poles, common, z)});
    }
    const RationalFunction f0 = substitute(f, z, RationalFunction(0));
    eqs.push_back({"f(0) = q^(2(n-m))", f0, lift(q_pow(2 * (ctx.n - ctx.m)), point)});
    MultiPoly weight_sum;
    for (const auto& w : weight_nums) weight_sum += w;
    eqs.push_back({"f(0) = 1 - (q-q^-1) p_0", f0, RationalFunction(1) - qq * RationalFunction(weight_sum, common)});
    const int deg_num = f.num().max_exponent(z);
    const int deg_den = f.den().max_exponent(z);
    eqs.push_back({"deg_z numerator = m+n", RationalFunction(deg_num), RationalFunction(ctx.rank())});
    eqs.push_back({"deg_z denominator = m+n", RationalFunction(deg_den), RationalFunction(ctx.rank())});
    eqs.push_back({"lim_{z->inf} f(z) = 1",
                   RationalFunction(f.num().coefficient_of(z, deg_num), f.den().coefficient_of(z, deg_den)), 1});
  }

  // z^k f(z) = sum_{r<=k} z^{k-r} f_r/r! + (q-q^-1) sum_a d_a x_a^{k+1}/(z - x_a)
  const TruncatedSeries taylor = f_taylor(ctx, k);
  RationalFunction polynomial_part;
  for (int r = 0; r <= k; ++r) polynomial_part += lift(taylor[r], point) * RationalFunction(MultiPoly::var(z, k - r));
  std::vector<RationalFunction> coeffs;
  for (int a = 0; a < ctx.rank(); ++a) {
    coeffs.emplace_back(weight_nums[a] * pow(poles[a], static_cast<unsigned>(k + 1)), common);
  }
  eqs.push_back({"z^" + std::to_string(k) + " f(z) simple-fraction expansion",
                 f * RationalFunction(MultiPoly::var(z, k)),
                 polynomial_part + qq * sum_simple_fractions(coeffs, poles, common, z)});
  return eqs;
}

VerificationReport partial_fraction_check(const SpectralContext& ctx, int kmax) {
  return run_cells(IdentityId::PartialFrac, ctx, 0, kmax, partial_fraction_equations);
}

std::vector<Equation> u_derivative_equations(const SpectralContext& ctx, const Point& point, int k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative derivative order");
  const VarId y = VarId::y();
  const RationalFunction qq = lift(q_pow(1) - q_pow(-1), point);
  std::vector<RationalFunction> terms;
  for (const auto& t : u_terms(ctx)) terms.push_back(lift(t, point));

  auto u_at_zero = [&](int r) {
    RationalFunction sum;
    for (const auto& t : terms) sum += substitute(diff_univar_n(t, y, r), y, RationalFunction(0));
    return sum;
  };

  std::vector<Equation> eqs;
  std::vector<RationalFunction> u0;
  for (int r = 0; r <= k; ++r) u0.push_back(u_at_zero(r));
  eqs.push_back({"u_" + std::to_string(k) + "(0) = k!(k+1)_q pi_{k+1}", u0[k],
                 lift(RationalFunction(q_number(k + 1).scaled(factorial(k)) * pi_k(k + 1, ctx)), point)});

  if (k == 0) {
    const RationalFunction f = lift(f_of_y(ctx), point);
    RationalFunction u;
    for (const auto& t : terms) u += t;
    eqs.push_back({"f'(y) = (q-q^-1) u(y) f(y)", diff_univar(f, y), qq * u * f});
    return eqs;
  }

  const TruncatedSeries taylor = f_taylor(ctx, k);
  std::vector<RationalFunction> fj;
  for (int j = 0; j <= k; ++j) fj.push_back(lift(taylor[j], point) * RationalFunction(factorial(j)));
  RationalFunction recursion;
  for (int r = 0; r <= k - 1; ++r) recursion += RationalFunction(binomial(k - 1, r)) * u0[r] * fj[k - 1 - r];
  eqs.push_back({"f_k = (q-q^-1) sum_r C(k-1,r) u_r(0) f_{k-1-r}", fj[k], qq * recursion});
  eqs.push_back({"p_k = f_k / ((q-q^-1) k!)", lift(p_image(k, ctx), point),
                 fj[k] / (qq * RationalFunction(factorial(k)))});
  return eqs;
}

VerificationReport u_derivatives_check(const SpectralContext& ctx, int kmax) {
  return run_cells(IdentityId::UPi, ctx, 0, kmax, u_derivative_equations);
}

RationalFunction schur_image(const Partition& lambda, const SpectralContext& ctx) {
  std::vector<std::optional<RationalFunction>> cache;
  return jacobi_trudi(lambda, [&](int k) {
    if (static_cast<int>(cache.size()) <= k) cache.resize(static_cast<std::size_t>(k) + 1);
    auto& slot = cache[static_cast<std::size_t>(k)];
    if (!slot) slot = RationalFunction(s_image(k, ctx));
    return *slot;
  });
}

std::vector<ChImage> ch_coeff_images(const SpectralContext& ctx) {
  const MultiPoly hook = hook_schur_product(ctx);
  std::vector<ChImage> out;
  const std::string tag = "[" + std::to_string(ctx.m) + "|" + std::to_string(ctx.n) + "]";
  for (int k = 0; k <= ctx.m; ++k) {
    Partition p = ch_partitions(ctx.m, ctx.n, k, 0).first;
    RationalFunction product(hook * elem_sym(k, ctx.mu_alphabet()));
    RationalFunction schur = schur_image(p, ctx);
    bool ok = product == schur;
    out.push_back({tag + "^" + std::to_string(k), std::move(p), std::move(product), std::move(schur), ok});
  }
  for (int r = 0; r <= ctx.n; ++r) {
    Partition p = ch_partitions(ctx.m, ctx.n, 0, r).second;
    RationalFunction product(hook * elem_sym(r, ctx.nu_alphabet().negated()));
    RationalFunction schur = schur_image(p, ctx);
    bool ok = product == schur;
    out.push_back({tag + "_" + std::to_string(r), std::move(p), std::move(product), std::move(schur), ok});
  }
  return out;
}

}  // namespace qspectra
