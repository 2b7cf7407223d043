#include "qspectra/verify.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <random>

#include "qspectra/errors.hpp"
#include "qspectra/partition.hpp"

namespace qspectra {

namespace {

MultiPoly q_pow(int e) { return MultiPoly::var(VarId::q(), e); }

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mix(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = 0;
  for (auto p : parts) h = splitmix(h ^ p);
  return h;
}

BigRational draw_value(std::mt19937_64& gen, int height) {
  const auto span = static_cast<std::uint64_t>(height);
  long num = static_cast<long>(gen() % (2 * span)) - height;
  if (num >= 0) ++num;  // skip zero
  long den = static_cast<long>(gen() % span) + 1;
  BigRational v(num, den);
  v.canonicalize();
  return v;
}

bool is_vanishing(const Error& e) {
  return e.code() == ErrorCode::DenominatorVanishes || e.code() == ErrorCode::DivisionByZero ||
         e.code() == ErrorCode::ZeroBaseNegativeExponent;
}

// Every ingredient of the identities for one (m,n), specialized at a point
// (the empty point in symbolic mode) and cached by index.
class Ingredients {
 public:
  Ingredients(const SpectralContext& ctx, const Point& point)
      : ctx_(ctx), point_(point), weights_(common_weights_or_empty(ctx)) {
    q_ = lift(q_pow(1));
    qinv_ = lift(q_pow(-1));
    qq_ = lift(q_pow(1) - q_pow(-1));
  }

  const SpectralContext& ctx() const { return ctx_; }
  const Point& point() const { return point_; }

  RationalFunction lift(const MultiPoly& p) const { return RationalFunction(specialize(p, point_)); }
  RationalFunction lift(const RationalFunction& f) const { return specialize(f, point_); }

  const RationalFunction& q() const { return q_; }
  const RationalFunction& qinv() const { return qinv_; }
  const RationalFunction& qq() const { return qq_; }

  RationalFunction qnum(int k) const { return lift(q_number(k)); }
  RationalFunction qpow(int e) const { return lift(q_pow(e)); }

  const RationalFunction& a(int k) { return cached(a_, k, [&] { return lift(a_image(k, ctx_)); }); }
  const RationalFunction& s(int k) { return cached(s_, k, [&] { return lift(s_image(k, ctx_)); }); }
  const RationalFunction& pi(int k) { return cached(pi_, k, [&] { return lift(pi_k(k, ctx_)); }); }
  const RationalFunction& p(int k) { return cached(p_, k, [&] { return make_p(k); }); }

  const RationalFunction& schur(const Partition& lambda) {
    auto it = schur_.find(lambda);
    if (it != schur_.end()) return it->second;
    RationalFunction value = jacobi_trudi(lambda, [&](int k) { return s(k); });
    return schur_.emplace(lambda, std::move(value)).first->second;
  }

  // Classical super power sum sum mu^k - sum nu^k.
  RationalFunction supertrace(int k) const {
    MultiPoly out;
    for (int a = 0; a < ctx_.rank(); ++a) {
      const MultiPoly x = MultiPoly::var(ctx_.spectral_var(a), k);
      out += a < ctx_.m ? x : -x;
    }
    return lift(out);
  }

  TruncatedSeries lift(const TruncatedSeries& s) const {
    TruncatedSeries out(s.formal(), s.order());
    for (int j = 0; j <= s.order(); ++j) out[j] = lift(s[j]);
    return out;
  }

 private:
  static CommonWeights common_weights_or_empty(const SpectralContext& ctx) {
    if (ctx.rank() == 0) return {};
    return common_weights(ctx);
  }

  template <typename F>
  static const RationalFunction& cached(std::map<int, RationalFunction>& cache, int k, F make) {
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    return cache.emplace(k, make()).first->second;
  }

  RationalFunction make_p(int k) {
    if (point_.empty()) {
      MultiPoly num;
      for (int a = 0; a < ctx_.rank(); ++a) num += weights_.numerators[a] * MultiPoly::var(ctx_.spectral_var(a), k);
      RationalFunction f(std::move(num), weights_.denominator);
      if (auto poly = f.cleared()) return RationalFunction(std::move(*poly));
      return f;
    }
    if (lifted_numerators_.empty()) {
      lifted_den_ = specialize(weights_.denominator, point_);
      if (lifted_den_.is_zero()) throw Error(ErrorCode::DenominatorVanishes, "weight denominator vanishes at sample point");
      for (int a = 0; a < ctx_.rank(); ++a) {
        lifted_numerators_.push_back(specialize(weights_.numerators[a], point_));
        lifted_vars_.push_back(specialize(MultiPoly::var(ctx_.spectral_var(a)), point_));
      }
    }
    MultiPoly num;
    for (int a = 0; a < ctx_.rank(); ++a) {
      num += lifted_numerators_[a] * pow(lifted_vars_[a], static_cast<unsigned>(k));
    }
    return {std::move(num), lifted_den_};
  }

  const SpectralContext& ctx_;
  const Point& point_;
  CommonWeights weights_;
  RationalFunction q_, qinv_, qq_;
  std::map<int, RationalFunction> a_, s_, pi_, p_;
  std::map<Partition, RationalFunction> schur_;
  std::vector<MultiPoly> lifted_numerators_;
  std::vector<MultiPoly> lifted_vars_;
  MultiPoly lifted_den_;
};

// Series built once per block at order kmax.
class Block {
 public:
  Block(const SpectralContext& ctx, const Point& point, int kmax) : in(ctx, point), kmax_(kmax) {}

  Ingredients in;

  const TruncatedSeries& A() { return series(A_, [&] { return coeff_series(kmax_, [&](int k) { return in.a(k); }); }); }
  const TruncatedSeries& S() { return series(S_, [&] { return coeff_series(kmax_, [&](int k) { return in.s(k); }); }); }
  // P(t) = 1 + (q - q^-1) sum_k p_k t^k
  const TruncatedSeries& P() {
    return series(P_, [&] {
      return coeff_series(kmax_, [&](int k) { return k == 0 ? RationalFunction(1) : in.qq() * in.p(k); });
    });
  }
  // Pi(q^-1 mu, q nu | t) = sum_k pi_k t^(k-1)
  const TruncatedSeries& Pi() {
    return series(Pi_, [&] { return coeff_series(kmax_ - 1, [&](int j) { return in.pi(j + 1); }); });
  }
  const TruncatedSeries& superA() {
    return series(superA_, [&] {
      return in.lift(super_series(SuperKind::A, in.ctx().mu_alphabet(), in.ctx().nu_alphabet(), kmax_));
    });
  }
  const TruncatedSeries& superS() {
    return series(superS_, [&] {
      return in.lift(super_series(SuperKind::S, in.ctx().mu_alphabet(), in.ctx().nu_alphabet(), kmax_));
    });
  }

 private:
  template <typename F>
  static TruncatedSeries coeff_series(int order, F coeff) {
    TruncatedSeries out(VarId::t(), order);
    for (int k = 0; k <= order; ++k) out[k] = coeff(k);
    return out;
  }

  template <typename F>
  static const TruncatedSeries& series(std::optional<TruncatedSeries>& slot, F make) {
    if (!slot) slot = make();
    return *slot;
  }

  int kmax_;
  std::optional<TruncatedSeries> A_, S_, P_, Pi_, superA_, superS_;
};

using Builder = std::function<std::vector<Equation>(Block&, int)>;

RationalFunction sign(int e) { return RationalFunction(e % 2 == 0 ? 1 : -1); }

std::vector<Equation> newton_anti(Block& b, int k) {
  auto& in = b.in;
  RationalFunction lhs = sign(k) * in.qnum(k) * in.a(k);
  for (int r = 0; r < k; ++r) lhs += sign(r) * in.qpow(r) * in.a(r) * in.p(k - r);
  return {{"(-1)^k k_q a_k + sum_r (-q)^r a_r p_{k-r} = 0", lhs, 0}};
}

std::vector<Equation> newton_simm(Block& b, int k) {
  auto& in = b.in;
  RationalFunction lhs = in.qnum(k) * in.s(k);
  for (int r = 0; r < k; ++r) lhs -= in.qpow(-r) * in.s(r) * in.p(k - r);
  return {{"k_q s_k - sum_r q^-r s_r p_{k-r} = 0", lhs, 0}};
}

std::vector<Equation> wronski(Block& b, int k) {
  auto& in = b.in;
  RationalFunction lhs;
  for (int r = 0; r <= k; ++r) lhs += sign(r) * in.a(r) * in.s(k - r);
  return {{"sum_r (-1)^r a_r s_{k-r} = 0", lhs, 0}};
}

std::vector<Equation> gf_newton2(Block& b, int k) {
  auto& in = b.in;
  const TruncatedSeries& A = b.A();
  const TruncatedSeries& S = b.S();
  const TruncatedSeries& P = b.P();
  const std::string at = "[t^" + std::to_string(k) + "] ";
  return {
      {at + "P(-t)A(qt) = A(q^-1 t)", (P.compose_scale(-1) * A.compose_scale(in.q()))[k], A.compose_scale(in.qinv())[k]},
      {at + "P(t)S(q^-1 t) = S(qt)", (P * S.compose_scale(in.qinv()))[k], S.compose_scale(in.q())[k]},
      {at + "A(t)S(-t) = 1", (A * S.compose_scale(-1))[k], k == 0 ? 1 : 0},
  };
}

std::vector<Equation> lemma1_a(Block& b, int k) {
  auto& in = b.in;
  RationalFunction lhs = sign(k) * RationalFunction(k) * in.a(k);
  for (int r = 0; r < k; ++r) lhs += sign(r) * in.a(r) * in.pi(k - r);
  const TruncatedSeries log_a = series_log_derivative(b.superA().compose_scale(-1));
  return {
      {"(-1)^k k a_k + sum_r (-1)^r a_r pi_{k-r} = 0", lhs, 0},
      {"a_k = [t^k] E(q^-1 mu|t) H(-q nu|t)", in.a(k), b.superA()[k]},
      {"pi_k = -[t^(k-1)] d/dt log A(-t)", in.pi(k), -log_a[k - 1]},
  };
}

std::vector<Equation> lemma1_s(Block& b, int k) {
  auto& in = b.in;
  RationalFunction lhs = RationalFunction(k) * in.s(k);
  for (int r = 0; r < k; ++r) lhs -= in.s(r) * in.pi(k - r);
  const TruncatedSeries log_s = series_log_derivative(b.superS());
  return {
      {"k s_k - sum_r s_r pi_{k-r} = 0", lhs, 0},
      {"s_k = [t^k] H(q^-1 mu|t) E(-q nu|t)", in.s(k), b.superS()[k]},
      {"pi_k = [t^(k-1)] d/dt log S(t)", in.pi(k), log_s[k - 1]},
  };
}

std::vector<Equation> lemma2(Block& b, int k) {
  auto& in = b.in;
  RationalFunction rhs = in.qnum(k) * in.pi(k);
  RationalFunction sum;
  for (int r = 1; r < k; ++r) sum += in.qnum(r) * in.pi(r) * in.p(k - r);
  rhs += in.qq() * sum;
  return {{"k p_k = k_q pi_k + (q-q^-1) sum_r r_q pi_r p_{k-r}", RationalFunction(k) * in.p(k), rhs}};
}

std::vector<Equation> gf_ppi(Block& b, int k) {
  auto& in = b.in;
  const TruncatedSeries& Pi = b.Pi();
  const TruncatedSeries P = b.P().truncated(Pi.order());
  const TruncatedSeries bracket = Pi.compose_scale(in.q()).scaled(in.q()) - Pi.compose_scale(in.qinv()).scaled(in.qinv());
  const TruncatedSeries lhs = P * bracket;
  const TruncatedSeries rhs = b.P().derivative();
  return {{"[t^" + std::to_string(k - 1) + "] P(t)(q Pi(qt) - q^-1 Pi(q^-1 t)) = P'(t)", lhs[k - 1], rhs[k - 1]}};
}

std::vector<Equation> p0(Block& b, int) {
  auto& in = b.in;
  const RationalFunction closed = in.lift(p0_closed_form(in.ctx().m, in.ctx().n));
  const WeightVector w = weights(in.ctx());
  RationalFunction sum;
  for (const auto& d : w.d) sum += in.lift(d);
  for (const auto& d : w.d_tilde) sum += in.lift(d);
  return {
      {"sum d_i + sum d~_j = q^(n-m) (m-n)_q", sum, closed},
      {"p_0 = q^(n-m) (m-n)_q", in.p(0), closed},
  };
}

std::vector<Equation> gs_reduction(Block& b, int k) {
  auto& in = b.in;
  const int m = in.ctx().m;
  const std::vector<RationalFunction> gl = gl_weights(m);
  std::vector<Equation> eqs;
  RationalFunction sum;
  for (int i = 0; i < m; ++i) {
    sum += in.lift(gl[i]) * in.lift(MultiPoly::var(VarId::mu(i), k));
  }
  if (k == 0) {
    const WeightVector w = weights(in.ctx());
    for (int i = 0; i < m; ++i) {
      eqs.push_back({"d_" + std::to_string(i + 1) + " = GL(m) weight", in.lift(w.d[i]), in.lift(gl[i])});
    }
  }
  eqs.push_back({"p_k = sum GL(m) weights mu_i^k", in.p(k), sum});
  return eqs;
}

// Runs on a point where q = 1.
std::vector<Equation> classical_limit(Block& b, int k) {
  auto& in = b.in;
  const SpectralContext& ctx = in.ctx();
  const Alphabet mu = Alphabet::mu(ctx.m, MultiPoly(1));
  const Alphabet nu = Alphabet::nu(ctx.n, MultiPoly(1));
  const TruncatedSeries classical_a = in.lift(super_series(SuperKind::A, mu, nu, k));
  RationalFunction anti = sign(k) * in.qnum(k) * in.a(k);
  for (int r = 0; r < k; ++r) anti += sign(r) * in.qpow(r) * in.a(r) * in.p(k - r);
  RationalFunction newton = RationalFunction(k) * in.a(k);
  for (int r = 1; r <= k; ++r) newton += sign(r) * in.supertrace(r) * in.a(k - r);
  return {
      {"p_k|q=1 = sum mu^k - sum nu^k", in.p(k), in.supertrace(k)},
      {"a_k|q=1 = [t^k] E(mu|t) H(-nu|t)", in.a(k), classical_a[k]},
      {"newton-anti at q=1", anti, 0},
      {"k e_k + sum_r (-1)^r p_r e_{k-r} = 0", newton, 0},
  };
}

std::vector<Equation> ch_images(Block& b, int k) {
  auto& in = b.in;
  const SpectralContext& ctx = in.ctx();
  const RationalFunction hook = in.lift(hook_schur_product(ctx));
  std::vector<Equation> eqs;
  const auto [upper, lower] = ch_partitions(ctx.m, ctx.n, std::min(k, ctx.m), std::min(k, ctx.n));
  if (k <= ctx.m) {
    eqs.push_back({"s_[m|n]^k " + upper.to_string() + " = s_[m|n] e_k(q^-1 mu)", in.schur(upper),
                   hook * in.lift(elem_sym(k, ctx.mu_alphabet()))});
  }
  if (k <= ctx.n) {
    eqs.push_back({"s_[m|n]_r " + lower.to_string() + " = s_[m|n] e_r(-q nu)", in.schur(lower),
                   hook * in.lift(elem_sym(k, ctx.nu_alphabet().negated()))});
  }
  if (k == 0) {
    std::vector<int> rect(static_cast<std::size_t>(ctx.m), ctx.n);
    eqs.push_back({"s_(n^m) = prod (q^-1 mu_i - q nu_j)", in.schur(Partition(rect)), hook});
  }
  return eqs;
}

std::vector<Equation> schur_vanishing(Block& b, int k) {
  auto& in = b.in;
  const Partition rect = lambda_mn(in.ctx().m, in.ctx().n);
  std::vector<Equation> eqs;
  for (const auto& nu : partitions_of(k)) {
    if (!contains(rect, nu)) continue;
    eqs.push_back({"s_" + nu.to_string() + " = 0", in.schur(nu), 0});
  }
  return eqs;
}

std::vector<Equation> lr_homomorphism(Block& b, int k) {
  auto& in = b.in;
  const std::vector<Partition> targets = partitions_of(k);
  std::vector<Equation> eqs;
  for (int w = 1; w < k; ++w) {
    for (const auto& lam : partitions_of(w)) {
      for (const auto& mu : partitions_of(k - w)) {
        RationalFunction rhs;
        for (const auto& nu : targets) {
          const long c = static_cast<long>(lr_coeff(lam, mu, nu));
          if (c != 0) rhs += RationalFunction(c) * in.schur(nu);
        }
        eqs.push_back({"s_" + lam.to_string() + " s_" + mu.to_string() + " = sum c s_nu", in.schur(lam) * in.schur(mu), rhs});
      }
    }
  }
  return eqs;
}

std::vector<Equation> partial_frac(Block& b, int k) {
  return partial_fraction_equations(b.in.ctx(), b.in.point(), k);
}

std::vector<Equation> u_pi(Block& b, int k) { return u_derivative_equations(b.in.ctx(), b.in.point(), k); }

Builder builder_for(IdentityId id) {
  switch (id) {
    case IdentityId::NewtonAnti: return newton_anti;
    case IdentityId::NewtonSimm: return newton_simm;
    case IdentityId::Wronski: return wronski;
    case IdentityId::GfNewton2: return gf_newton2;
    case IdentityId::Lemma1A: return lemma1_a;
    case IdentityId::Lemma1S: return lemma1_s;
    case IdentityId::Lemma2: return lemma2;
    case IdentityId::GfPPi: return gf_ppi;
    case IdentityId::PartialFrac: return partial_frac;
    case IdentityId::UPi: return u_pi;
    case IdentityId::P0: return p0;
    case IdentityId::GsReduction: return gs_reduction;
    case IdentityId::ClassicalLimit: return classical_limit;
    case IdentityId::ChImages: return ch_images;
    case IdentityId::SchurVanishing: return schur_vanishing;
    case IdentityId::LrHomomorphism: return lr_homomorphism;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown identity");
}

bool applies(IdentityId id, int m, int n) {
  if (id == IdentityId::GsReduction) return n == 0 && m >= 1;
  switch (id) {
    case IdentityId::ChImages:
    case IdentityId::SchurVanishing:
    case IdentityId::LrHomomorphism:
      return true;
    default:
      return m + n >= 1;
  }
}

int series_order_needed(IdentityId id, const std::vector<int>& cells) {
  int top = 0;
  for (int k : cells) top = std::max(top, k);
  return id == IdentityId::GfPPi ? std::max(top, 1) : top;
}

Point random_point(const SpectralContext& ctx, std::uint64_t seed, IdentityId id, int attempt) {
  std::mt19937_64 gen(mix({seed, static_cast<std::uint64_t>(id), static_cast<std::uint64_t>(ctx.m),
                           static_cast<std::uint64_t>(ctx.n), static_cast<std::uint64_t>(attempt)}));
  Point point;
  point.set(VarId::q(), draw_value(gen, kDefaultHeight));
  for (int a = 0; a < ctx.rank(); ++a) point.set(ctx.spectral_var(a), draw_value(gen, kDefaultHeight));
  return point;
}

std::vector<CellResult> run_block(IdentityId id, int m, int n, int kmax, const VerifyOptions& options) {
  SpectralContext ctx(m, n, options.order);
  ctx.weight_exponents = options.weight_exponents;
  const std::vector<int> cells = identity_cells(id, m, n, kmax);
  const Builder build = builder_for(id);
  const int order = series_order_needed(id, cells);

  auto attempt_at = [&](const Point& point) {
    Block block(ctx, point, order);
    std::vector<CellResult> out;
    for (int k : cells) {
      auto start = std::chrono::steady_clock::now();
      CellResult cell = check_equations(m, n, k, build(block, k));
      cell.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      out.push_back(std::move(cell));
    }
    return out;
  };

  const bool classical = id == IdentityId::ClassicalLimit;
  if (options.mode == Mode::Symbolic) {
    Point point;
    if (classical) point.set(VarId::q(), 1);
    return attempt_at(point);
  }
  for (int attempt = 0; attempt < kResampleCap; ++attempt) {
    Point point = random_point(ctx, *options.seed, id, attempt);
    if (classical) point.set(VarId::q(), 1);
    try {
      return attempt_at(point);
    } catch (const Error& e) {
      if (!is_vanishing(e)) throw;
    }
  }
  throw Error(ErrorCode::ResampleCapExceeded, "no usable sample point for " + std::string(identity_name(id)) + " at (" +
                                                  std::to_string(m) + "," + std::to_string(n) + ")");
}

void check_options(int kmax, const VerifyOptions& options) {
  if (kmax < 1) throw Error(ErrorCode::InvalidArgument, "kmax must be positive");
  if (kmax > options.order) {
    throw Error(ErrorCode::OrderExceeded,
                "kmax " + std::to_string(kmax) + " exceeds series order " + std::to_string(options.order));
  }
  if (options.mode == Mode::Evaluated && !options.seed) {
    throw Error(ErrorCode::InvalidArgument, "evaluated mode needs a seed");
  }
}

VerificationReport empty_report(IdentityId id, const VerifyOptions& options) {
  VerificationReport report;
  report.identity = id;
  report.mode = options.mode;
  if (options.mode == Mode::Evaluated) report.seed = options.seed;
  return report;
}

}  // namespace

const std::vector<GridPoint>& default_grid() {
  static const std::vector<GridPoint> grid{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}, {2, 2}};
  return grid;
}

std::vector<int> identity_cells(IdentityId id, int m, int n, int kmax) {
  auto range = [](int lo, int hi) {
    std::vector<int> out;
    for (int k = lo; k <= hi; ++k) out.push_back(k);
    return out;
  };
  switch (id) {
    case IdentityId::PartialFrac:
    case IdentityId::UPi:
    case IdentityId::GsReduction:
      return range(0, kmax);
    case IdentityId::P0:
      return {0};
    case IdentityId::ChImages:
      return range(0, std::max(m, n));
    case IdentityId::SchurVanishing: {
      const int w = (m + 1) * (n + 1);
      return range(w, w + 2);
    }
    case IdentityId::LrHomomorphism:
      return range(2, std::max(2, std::min(kmax, 6)));
    default:
      return range(1, kmax);
  }
}

VerificationReport verify_identity(IdentityId id, int m, int n, int kmax, const VerifyOptions& options) {
  check_options(kmax, options);
  if (!applies(id, m, n)) {
    throw Error(ErrorCode::NotApplicable, std::string(identity_name(id)) + " does not apply to (" + std::to_string(m) +
                                              "," + std::to_string(n) + ")");
  }
  VerificationReport report = empty_report(id, options);
  report.cells = run_block(id, m, n, kmax, options);
  return report;
}

VerificationReport verify_identity(IdentityId id, const std::vector<GridPoint>& grid, int kmax,
                                   const VerifyOptions& options) {
  check_options(kmax, options);
  std::vector<GridPoint> blocks;
  for (const auto& g : grid) {
    if (applies(id, g.m, g.n)) blocks.push_back(g);
  }
  if (blocks.empty()) {
    throw Error(ErrorCode::NotApplicable, std::string(identity_name(id)) + " applies to no grid point");
  }
  VerificationReport report = empty_report(id, options);
  std::vector<std::vector<CellResult>> results(blocks.size());
  if (options.threads > 1 && blocks.size() > 1) {
    std::vector<std::future<std::vector<CellResult>>> pending;
    for (const auto& g : blocks) {
      pending.push_back(std::async(std::launch::async, [=, &options] { return run_block(id, g.m, g.n, kmax, options); }));
    }
    for (std::size_t i = 0; i < pending.size(); ++i) results[i] = pending[i].get();
  } else {
    for (std::size_t i = 0; i < blocks.size(); ++i) results[i] = run_block(id, blocks[i].m, blocks[i].n, kmax, options);
  }
  for (auto& r : results) {
    for (auto& c : r) report.cells.push_back(std::move(c));
  }
  return report;
}

std::vector<VerificationReport> verify_all(const std::vector<GridPoint>& grid, int kmax, const VerifyOptions& options) {
  check_options(kmax, options);
  std::vector<VerificationReport> out;
  for (IdentityId id : all_identities()) {
    try {
      out.push_back(verify_identity(id, grid, kmax, options));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotApplicable) throw;
    }
  }
  return out;
}

bool random_eval_check(const RationalFunction& lhs, const RationalFunction& rhs, std::uint64_t seed, int trials,
                       int height) {
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be positive");
  if (height < 1) throw Error(ErrorCode::InvalidArgument, "height must be positive");
  std::array<bool, kSlots> used{};
  for (const MultiPoly* p : {&lhs.num(), &lhs.den(), &rhs.num(), &rhs.den()}) {
    for (const auto& t : p->terms()) {
      for (int s = 0; s < kSlots; ++s) used[s] = used[s] || t.mono.exp[s] != 0;
    }
  }
  for (int trial = 0; trial < trials; ++trial) {
    bool evaluated = false;
    for (int attempt = 0; attempt < kResampleCap && !evaluated; ++attempt) {
      std::mt19937_64 gen(mix({seed, static_cast<std::uint64_t>(trial), static_cast<std::uint64_t>(attempt)}));
      Point point;
      for (int s = 0; s < kSlots; ++s) {
        if (used[s]) point.set(VarId::from_slot(s), draw_value(gen, height));
      }
      const BigRational ld = poly_eval(lhs.den(), point);
      const BigRational rd = poly_eval(rhs.den(), point);
      if (ld == 0 || rd == 0) continue;
      evaluated = true;
      if (poly_eval(lhs.num(), point) * rd != poly_eval(rhs.num(), point) * ld) return false;
    }
    if (!evaluated) throw Error(ErrorCode::ResampleCapExceeded, "every sample point hit a vanishing denominator");
  }
  return true;
}

}  // namespace qspectra
