#include <doctest.h>

#include "oracles/weights_oracle.hpp"
#include "qspectra/errors.hpp"
#include "qspectra/partition.hpp"
#include "qspectra/spectral.hpp"
#include "support.hpp"

using namespace qt;

namespace {

std::vector<std::pair<int, int>> ranks_up_to(int total) {
  std::vector<std::pair<int, int>> out;
  for (int s = 1; s <= total; ++s) {
    for (int m = s; m >= 0; --m) out.emplace_back(m, s - m);
  }
  return out;
}

MultiPoly swapped(const MultiPoly& p, VarId a, VarId b) {
  std::vector<MultiPoly::Term> terms = p.terms();
  for (auto& t : terms) std::swap(t.mono.exp[a.slot()], t.mono.exp[b.slot()]);
  return MultiPoly::from_terms(std::move(terms));
}

RationalFunction swapped(const RationalFunction& f, VarId a, VarId b) {
  return {swapped(f.num(), a, b), swapped(f.den(), a, b)};
}

RationalFunction at_q_one(const RationalFunction& f) {
  Point p;
  p.set(VarId::q(), 1);
  return specialize(f, p);
}

MultiPoly supertrace(int m, int n, int k) {
  MultiPoly out;
  for (int i = 1; i <= m; ++i) out += MU(i, k);
  for (int j = 1; j <= n; ++j) out -= NU(j, k);
  return out;
}

MultiPoly hook_product(int m, int n) {
  MultiPoly out(1);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) out *= Q(-1) * MU(i) - Q() * NU(j);
  }
  return out;
}

}  // namespace

TEST_CASE("pi_k examples") {
  CHECK(pi_k(1, SpectralContext(1, 1)) == Q(-1) * MU(1) - Q() * NU(1));
  CHECK(pi_k(2, SpectralContext(2, 0)) == Q(-2) * (MU(1, 2) + MU(2, 2)));
  CHECK(pi_k(3, SpectralContext(0, 1)) == -(Q(3) * NU(1, 3)));
  CHECK(pi_k(2, SpectralContext(1, 2)) == Q(-2) * MU(1, 2) - Q(2) * (NU(1, 2) + NU(2, 2)));
}

TEST_CASE("a_image and s_image examples") {
  CHECK(a_image(1, SpectralContext(1, 0)) == Q(-1) * MU(1));
  CHECK(a_image(2, SpectralContext(0, 1)) == Q(2) * NU(1, 2));
  CHECK(a_image(2, SpectralContext(1, 1)) == Q(2) * NU(1, 2) - MU(1) * NU(1));
  CHECK(a_image(0, SpectralContext(2, 2)) == MultiPoly(1));
  CHECK(s_image(2, SpectralContext(1, 0)) == Q(-2) * MU(1, 2));
  CHECK(s_image(1, SpectralContext(0, 1)) == -(Q() * NU(1)));
  CHECK(s_image(1, SpectralContext(1, 1)) == a_image(1, SpectralContext(1, 1)));
  CHECK(s_image(1, SpectralContext(1, 1)) == pi_k(1, SpectralContext(1, 1)));
}

TEST_CASE("a_image and s_image match the super series") {
  for (auto [m, n] : ranks_up_to(3)) {
    const SpectralContext ctx(m, n);
    const TruncatedSeries a = super_series(SuperKind::A, ctx.mu_alphabet(), ctx.nu_alphabet(), 6);
    const TruncatedSeries s = super_series(SuperKind::S, ctx.mu_alphabet(), ctx.nu_alphabet(), 6);
    for (int k = 0; k <= 6; ++k) {
      CHECK(a[k] == RationalFunction(a_image(k, ctx)));
      CHECK(s[k] == RationalFunction(s_image(k, ctx)));
    }
  }
}

TEST_CASE("weights examples") {
  const WeightVector w10 = weights(SpectralContext(1, 0));
  REQUIRE(w10.d.size() == 1);
  CHECK(w10.d_tilde.empty());
  CHECK(w10.d[0] == RationalFunction(Q(-1)));
  CHECK(w10.d[0].to_string() == "q^-1");

  const WeightVector w01 = weights(SpectralContext(0, 1));
  CHECK(w01.d_tilde[0] == RationalFunction(-Q()));

  const WeightVector w11 = weights(SpectralContext(1, 1));
  CHECK(w11.d[0] == RationalFunction(Q(-1) * (MU(1) - Q(2) * NU(1)), MU(1) - NU(1)));
  CHECK(w11.d_tilde[0] == RationalFunction(-Q() * (NU(1) - Q(-2) * MU(1)), NU(1) - MU(1)));
  CHECK((w11.d[0] + w11.d_tilde[0]).is_zero());

  try {
    weights(SpectralContext(0, 0));
    FAIL("weights of rank (0|0)");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
}

TEST_CASE("common weights agree with the direct products") {
  for (auto [m, n] : ranks_up_to(4)) {
    const SpectralContext ctx(m, n);
    const WeightVector w = weights(ctx);
    const CommonWeights cw = common_weights(ctx);
    for (int a = 0; a < ctx.rank(); ++a) {
      const RationalFunction& direct = a < m ? w.d[a] : w.d_tilde[a - m];
      CHECK(RationalFunction(cw.numerators[a], cw.denominator) == direct);
    }
  }
}

TEST_CASE("p_image examples") {
  for (auto [m, n] : ranks_up_to(4)) {
    CHECK(p_image(0, SpectralContext(m, n)) == RationalFunction(p0_closed_form(m, n)));
  }
  CHECK(p0_closed_form(1, 1).is_zero());
  CHECK(p0_closed_form(0, 2) == -(Q(3) + Q()));
  CHECK(p_image(1, SpectralContext(1, 1)) == RationalFunction(Q(-1) * MU(1) - Q() * NU(1)));
  for (int k = 0; k <= 6; ++k) CHECK(p_image(k, SpectralContext(1, 0)) == RationalFunction(Q(-1) * MU(1, k)));
}

TEST_CASE("oracle: p_image against numerically evaluated weights") {
  PolyGen gen(11);
  for (auto [m, n] : ranks_up_to(4)) {
    const SpectralContext ctx(m, n);
    for (int k = 0; k <= 6; ++k) {
      const RationalFunction p = p_image(k, ctx);
      Point point;
      point.set(VarId::q(), gen.value());
      for (int a = 0; a < ctx.rank(); ++a) point.set(ctx.spectral_var(a), gen.value());
      const BigRational den = poly_eval(p.den(), point);
      if (den == 0) continue;
      CHECK(poly_eval(p.num(), point) / den == oracle::numeric_power_sum(m, n, k, point));
    }
  }
}

TEST_CASE("f(z) examples") {
  const VarId z = VarId::z();
  for (auto [m, n] : ranks_up_to(3)) {
    const RationalFunction f = f_of_z(SpectralContext(m, n));
    CHECK(substitute(f, z, RationalFunction(0)) == RationalFunction(Q(2 * (n - m))));
    CHECK(f.num().max_exponent(z) == m + n);
    CHECK(f.den().max_exponent(z) == m + n);
    CHECK(f.num().coefficient_of(z, m + n) == f.den().coefficient_of(z, m + n));
  }
  CHECK(f_of_z(SpectralContext(1, 0)) == RationalFunction(Z() - Q(-2) * MU(1), Z() - MU(1)));
}

TEST_CASE("residues and partial fractions") {
  const SpectralContext ctx(1, 0);
  const auto res = simple_pole_residue(f_of_z(ctx), VarId::z(), MU(1));
  REQUIRE(res);
  CHECK(*res == RationalFunction((MultiPoly(1) - Q(-2)) * MU(1)));
  CHECK(*res == RationalFunction((Q() - Q(-1)) * MU(1) * Q(-1)));
  CHECK_FALSE(simple_pole_residue(f_of_z(ctx), VarId::z(), NU(1)));

  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    const VerificationReport report = partial_fraction_check(SpectralContext(m, n), 3);
    CHECK(report.cells.size() == 4);
    CHECK_MESSAGE(report.all_passed(), m << "," << n << ": " << report.cells.front().witness);
  }
}

TEST_CASE("u(y) examples") {
  CHECK(substitute(u_of_y(SpectralContext(1, 0)), VarId::y(), RationalFunction(0)) == RationalFunction(Q(-1) * MU(1)));
  CHECK(substitute(u_of_y(SpectralContext(1, 1)), VarId::y(), RationalFunction(0)) ==
        RationalFunction(Q(-1) * MU(1) - Q() * NU(1)));
  for (auto [m, n] : ranks_up_to(3)) {
    const SpectralContext ctx(m, n);
    const RationalFunction f = f_of_y(ctx);
    CHECK(diff_univar(f, VarId::y()) == RationalFunction(Q() - Q(-1)) * u_of_y(ctx) * f);
  }
  const RationalFunction u10 = u_of_y(SpectralContext(1, 0));
  CHECK(substitute(diff_univar(u10, VarId::y()), VarId::y(), RationalFunction(0)) ==
        RationalFunction((Q() + Q(-1)) * Q(-2) * MU(1, 2)));
}

TEST_CASE("u derivatives") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}, {2, 1}}) {
    const VerificationReport report = u_derivatives_check(SpectralContext(m, n), 3);
    CHECK(report.cells.size() == 4);
    CHECK(report.all_passed());
  }
}

TEST_CASE("oracle: u derivatives through Taylor coefficients") {
  // 1/((1 - x y)(1 - r x y)) = sum_k x^k (1 + r + ... + r^k) y^k
  const VarId y = VarId::y();
  for (auto [m, n] : ranks_up_to(3)) {
    const SpectralContext ctx(m, n);
    const std::vector<RationalFunction> terms = u_terms(ctx);
    for (int k = 0; k <= 4; ++k) {
      MultiPoly expected;
      for (int a = 0; a < ctx.rank(); ++a) {
        const bool even = a < m;
        const MultiPoly x = MultiPoly::var(ctx.spectral_var(a));
        MultiPoly geometric;
        for (int j = 0; j <= k; ++j) geometric += Q(even ? -2 * j : 2 * j);
        expected += (even ? Q(-1) : -Q()) * pow(x, static_cast<unsigned>(k + 1)) * geometric;
      }
      BigInt fact;
      mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
      RationalFunction got;
      for (const auto& t : terms) got += substitute(diff_univar_n(t, y, k), y, RationalFunction(0));
      CHECK(got == RationalFunction(expected.scaled(BigRational(fact))));
    }
  }
}

TEST_CASE("schur_image examples") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}}) {
    const SpectralContext ctx(m, n);
    for (int k = 1; k <= 4; ++k) {
      const Partition column(std::vector<int>(static_cast<std::size_t>(k), 1));
      CHECK(schur_image(column, ctx) == RationalFunction(a_image(k, ctx)));
    }
  }
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}}) {
    const SpectralContext ctx(m, n);
    CHECK(schur_image(lambda_mn(m, n), ctx).is_zero());
    const Partition rect(std::vector<int>(static_cast<std::size_t>(m), n));
    CHECK(schur_image(rect, ctx) == RationalFunction(hook_product(m, n)));
    CHECK(hook_schur_product(ctx) == hook_product(m, n));
  }
}

TEST_CASE("characteristic coefficient images") {
  const SpectralContext ctx(1, 1);
  const auto images = ch_coeff_images(ctx);
  REQUIRE(images.size() == 4);
  for (const auto& im : images) CHECK_MESSAGE(im.matches, im.label);
  CHECK(images[1].partition == Partition({2}));
  CHECK(images[1].product == RationalFunction((Q(-1) * MU(1) - Q() * NU(1)) * Q(-1) * MU(1)));
  CHECK(images[3].partition == Partition({1, 1}));
  CHECK(images[3].schur == RationalFunction((Q(-1) * MU(1) - Q() * NU(1)) * -(Q() * NU(1))));
  CHECK(images[0].product == images[0].schur);
  CHECK(images[0].product == RationalFunction(hook_product(1, 1)));
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 1}, {1, 2}, {2, 2}}) {
    for (const auto& im : ch_coeff_images(SpectralContext(m, n))) CHECK_MESSAGE(im.matches, im.label);
  }
}

TEST_CASE("property: p_image is a polynomial") {
  for (auto [m, n] : ranks_up_to(4)) {
    const SpectralContext ctx(m, n);
    for (int k = 0; k <= 8; ++k) {
      const RationalFunction p = p_image(k, ctx);
      const auto poly = p.cleared();
      REQUIRE_MESSAGE(poly, m << "," << n << " k=" << k);
      CHECK(ratfun_eq(p, RationalFunction(*poly)));
    }
  }
}

TEST_CASE("property: symmetry under transpositions") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 0}, {2, 1}, {1, 2}, {2, 2}, {3, 1}}) {
    const SpectralContext ctx(m, n);
    std::vector<std::pair<VarId, VarId>> swaps;
    for (int i = 0; i + 1 < m; ++i) swaps.emplace_back(VarId::mu(i), VarId::mu(i + 1));
    for (int j = 0; j + 1 < n; ++j) swaps.emplace_back(VarId::nu(j), VarId::nu(j + 1));
    for (int k = 1; k <= 5; ++k) {
      const RationalFunction p = p_image(k, ctx);
      const MultiPoly a = a_image(k, ctx), s = s_image(k, ctx), pi = pi_k(k, ctx);
      for (auto [u, v] : swaps) {
        CHECK(swapped(p, u, v) == p);
        CHECK(swapped(a, u, v) == a);
        CHECK(swapped(s, u, v) == s);
        CHECK(swapped(pi, u, v) == pi);
      }
    }
  }
}

TEST_CASE("property: p_1 = pi_1") {
  for (auto [m, n] : ranks_up_to(4)) {
    const SpectralContext ctx(m, n);
    CHECK(p_image(1, ctx) == RationalFunction(pi_k(1, ctx)));
  }
}

TEST_CASE("property: q -> 1 gives the classical supertrace") {
  for (auto [m, n] : ranks_up_to(4)) {
    for (int k = 0; k <= 6; ++k) {
      CHECK(at_q_one(p_image(k, SpectralContext(m, n))) == RationalFunction(supertrace(m, n, k)));
    }
  }
}

TEST_CASE("property: GL(m) reduction") {
  for (int m = 1; m <= 4; ++m) {
    const WeightVector w = weights(SpectralContext(m, 0));
    const std::vector<RationalFunction> gl = gl_weights(m);
    REQUIRE(w.d.size() == gl.size());
    for (int i = 0; i < m; ++i) CHECK(w.d[i] == gl[i]);
  }
}

TEST_CASE("property: Schur images multiply by LR coefficients") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}}) {
    const SpectralContext ctx(m, n);
    for (int total = 2; total <= 6; ++total) {
      for (int w = 1; w < total; ++w) {
        for (const auto& lam : partitions_of(w)) {
          for (const auto& mu : partitions_of(total - w)) {
            RationalFunction rhs;
            for (const auto& nu : partitions_of(total)) {
              const auto c = static_cast<long>(lr_coeff(lam, mu, nu));
              if (c != 0) rhs += RationalFunction(c) * schur_image(nu, ctx);
            }
            CHECK(schur_image(lam, ctx) * schur_image(mu, ctx) == rhs);
          }
        }
      }
    }
  }
}

TEST_CASE("property: vanishing outside the hook") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}}) {
    const SpectralContext ctx(m, n);
    const Partition rect = lambda_mn(m, n);
    for (int w = 0; w <= rect.weight() + 2; ++w) {
      for (const auto& nu : partitions_of(w)) {
        const bool vanishes = schur_image(nu, ctx).is_zero();
        if (contains(rect, nu)) {
          CHECK_MESSAGE(vanishes, nu.to_string());
        } else {
          CHECK_MESSAGE(!vanishes, nu.to_string());
        }
      }
    }
  }
}
