// Runs every acceptance criterion under its time limit and prints one
// PASS/FAIL line each. Exit status is nonzero if any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles/schur_oracle.hpp"
#include "qspectra/cli.hpp"
#include "qspectra/partition.hpp"
#include "qspectra/spectral.hpp"
#include "qspectra/symfunc.hpp"
#include "qspectra/verify.hpp"
#include "support.hpp"

using namespace qt;

namespace {

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;
  std::function<bool(std::string&)> run;
};

// e_k of the given linear terms, summed over k-subsets.
MultiPoly elementary(int k, const std::vector<MultiPoly>& terms, std::size_t from = 0) {
  if (k == 0) return MultiPoly(1);
  MultiPoly sum;
  for (std::size_t i = from; i < terms.size(); ++i) sum += terms[i] * elementary(k - 1, terms, i + 1);
  return sum;
}

std::vector<GridPoint> grid_of(std::initializer_list<GridPoint> points) { return points; }

bool all_pass(IdentityId id, const std::vector<GridPoint>& grid, int kmax, std::string& detail,
              const VerifyOptions& options = {}) {
  const VerificationReport r = verify_identity(id, grid, kmax, options);
  for (const auto& c : r.cells) {
    if (!c.pass) {
      detail = std::string(identity_name(id)) + " failed at (" + std::to_string(c.m) + "," + std::to_string(c.n) +
               ") k=" + std::to_string(c.k) + ": " + c.witness;
      return false;
    }
  }
  if (r.cells.empty()) {
    detail = std::string(identity_name(id)) + " produced no cells";
    return false;
  }
  return true;
}

bool newton(std::string& detail) {
  return all_pass(IdentityId::NewtonAnti, default_grid(), 8, detail) &&
         all_pass(IdentityId::NewtonSimm, default_grid(), 8, detail);
}

bool lemmas(std::string& detail) {
  for (IdentityId id : {IdentityId::Lemma1A, IdentityId::Lemma1S, IdentityId::Lemma2, IdentityId::GfPPi}) {
    if (!all_pass(id, default_grid(), 8, detail)) return false;
  }
  return true;
}

bool p0(std::string& detail) {
  for (GridPoint g : default_grid()) {
    const SpectralContext ctx(g.m, g.n);
    const WeightVector w = weights(ctx);
    RationalFunction sum;
    for (const auto& d : w.d) sum += d;
    for (const auto& d : w.d_tilde) sum += d;
    const RationalFunction closed(Q(g.n - g.m) * q_number(g.m - g.n));
    if (!(sum == closed) || !(p_image(0, ctx) == closed)) {
      detail = "p_0 mismatch at (" + std::to_string(g.m) + "," + std::to_string(g.n) + ")";
      return false;
    }
  }
  return all_pass(IdentityId::P0, default_grid(), 1, detail);
}

bool partial_fractions(std::string& detail) { return all_pass(IdentityId::PartialFrac, default_grid(), 8, detail); }

bool u_derivatives(std::string& detail) { return all_pass(IdentityId::UPi, default_grid(), 5, detail); }

bool gl_reduction(std::string& detail) {
  for (int m = 1; m <= 4; ++m) {
    const SpectralContext ctx(m, 0);
    const WeightVector w = weights(ctx);
    const std::vector<RationalFunction> gl = gl_weights(m);
    for (int i = 0; i < m; ++i) {
      if (!(w.d[static_cast<std::size_t>(i)] == gl[static_cast<std::size_t>(i)])) {
        detail = "weight d" + std::to_string(i + 1) + " differs from GL(" + std::to_string(m) + ")";
        return false;
      }
    }
  }
  return all_pass(IdentityId::GsReduction, grid_of({{1, 0}, {2, 0}, {3, 0}, {4, 0}}), 8, detail);
}

bool classical(std::string& detail) { return all_pass(IdentityId::ClassicalLimit, default_grid(), 6, detail); }

const std::vector<GridPoint> kSmallGrid{{1, 1}, {2, 1}, {1, 2}};

bool ch_images(std::string& detail) {
  for (GridPoint g : kSmallGrid) {
    const SpectralContext ctx(g.m, g.n);
    MultiPoly product(1);
    for (int i = 1; i <= g.m; ++i) {
      for (int j = 1; j <= g.n; ++j) product *= Q(-1) * MU(i) - Q() * NU(j);
    }
    const Partition rect(std::vector<int>(static_cast<std::size_t>(g.m), g.n));
    if (!(schur_image(rect, ctx) == RationalFunction(product))) {
      detail = "rectangle factorization fails at (" + std::to_string(g.m) + "," + std::to_string(g.n) + ")";
      return false;
    }
    const std::vector<ChImage> images = ch_coeff_images(ctx);
    if (images.size() != static_cast<std::size_t>(g.m + g.n + 2)) {
      detail = "unexpected number of characteristic coefficients";
      return false;
    }
    std::vector<MultiPoly> mus, nus;
    for (int i = 1; i <= g.m; ++i) mus.push_back(Q(-1) * MU(i));
    for (int j = 1; j <= g.n; ++j) nus.push_back(-(Q() * NU(j)));
    for (std::size_t idx = 0; idx < images.size(); ++idx) {
      const ChImage& im = images[idx];
      const int k = static_cast<int>(idx);
      const MultiPoly expected =
          k <= g.m ? product * elementary(k, mus) : product * elementary(k - g.m - 1, nus);
      if (!im.matches || !(im.schur == RationalFunction(expected))) {
        detail = im.label + " does not match";
        return false;
      }
    }
  }
  return all_pass(IdentityId::ChImages, kSmallGrid, 8, detail);
}

bool lr(std::string& detail) {
  if (!all_pass(IdentityId::LrHomomorphism, grid_of({{1, 1}, {2, 1}}), 6, detail)) return false;
  for (int total = 0; total <= 8; ++total) {
    for (int a = 0; a <= total; ++a) {
      for (const auto& lambda : partitions_of(a)) {
        for (const auto& mu : partitions_of(total - a)) {
          const auto expansion = oracle::schur_product_expansion(lambda, mu, std::max(total, 1));
          for (const auto& nu : partitions_of(total)) {
            const auto it = expansion.find(nu);
            const long long expected = it == expansion.end() ? 0 : it->second;
            if (static_cast<long long>(lr_coeff(lambda, mu, nu)) != expected) {
              detail = "lr_coeff " + lambda.to_string() + " " + mu.to_string() + " " + nu.to_string();
              return false;
            }
          }
        }
      }
    }
  }
  return true;
}

bool vanishing(std::string& detail) {
  for (GridPoint g : kSmallGrid) {
    const SpectralContext ctx(g.m, g.n);
    const Partition rect = lambda_mn(g.m, g.n);
    const int top = (g.m + 1) * (g.n + 1) + 2;
    int checked = 0;
    for (int w = rect.weight(); w <= top; ++w) {
      for (const auto& nu : partitions_of(w)) {
        if (!contains(rect, nu)) continue;
        ++checked;
        if (!schur_image(nu, ctx).is_zero()) {
          detail = "s_" + nu.to_string() + " does not vanish";
          return false;
        }
      }
    }
    if (checked == 0) {
      detail = "no partitions checked";
      return false;
    }
  }
  return all_pass(IdentityId::SchurVanishing, kSmallGrid, 8, detail);
}

bool mutation(std::string& detail) {
  VerifyOptions corrupted;
  corrupted.weight_exponents.d_nu = 3;
  const VerificationReport r = verify_identity(IdentityId::NewtonAnti, 1, 1, 4, corrupted);
  for (const auto& c : r.cells) {
    if (!c.pass && c.k <= 4) return true;
  }
  detail = "corrupted weights were not detected";
  return false;
}

std::string run_in_process(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  if (qspectra::cli::run(args, out, err) != qspectra::cli::kExitPass) return "exit status " + err.str();
  return out.str();
}

std::string run_binary(const std::string& command) {
  std::string out;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) return {};
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), got);
  if (::pclose(pipe) != 0) out += "\nexit status nonzero";
  return out;
}

bool determinism(std::string& detail) {
  const std::vector<std::string> args{"verify", "all", "--mode", "evaluated", "--seed", "7", "--format", "json"};
  const std::string first = run_in_process(args);
  const std::string second = run_in_process(args);
  if (first != second) {
    detail = "in-process runs differ";
    return false;
  }
  const std::string command = std::string("\"") + QSPECTRA_BINARY + "\" verify all --mode evaluated --seed 7 --format json";
  const std::string third = run_binary(command);
  const std::string fourth = run_binary(command);
  if (third != fourth) {
    detail = "binary runs differ";
    return false;
  }
  if (third != first + "\n" && third != first) {
    detail = "binary output differs from in-process output";
    return false;
  }
  if (first.find("\"fail\": 0") == std::string::npos || first.find("\"status\": \"fail\"") != std::string::npos) {
    detail = "evaluated run reported failures";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "newton-anti and newton-simm, symbolic, default grid, k <= 8", 600, newton},
      {2, "lemma1-a, lemma1-s, lemma2, gf-ppi, symbolic, default grid", 300, lemmas},
      {3, "p_0 closed form on the default grid", 10, p0},
      {4, "partial fractions, residues, f(0) and degrees", 60, partial_fractions},
      {5, "u_k(0) = k! (k+1)_q pi_{k+1}, k <= 5", 120, u_derivatives},
      {6, "GL(m|0) weights, m <= 4", 10, gl_reduction},
      {7, "classical limit q = 1, k <= 6", 30, classical},
      {8, "characteristic coefficient images and factorization", 120, ch_images},
      {9, "Schur images respect LR products; LR oracle for |nu| <= 8", 300, lr},
      {10, "Schur images vanish above the fat hook", 120, vanishing},
      {11, "corrupted weight exponent is detected", 60, mutation},
      {12, "verify all --mode evaluated --seed 7 is byte-identical", 600, determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && seconds >= c.limit_seconds) {
      ok = false;
      detail = "time limit exceeded";
    }
    if (!ok) ++failures;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", seconds, c.limit_seconds);
    std::cout << (ok ? "PASS" : "FAIL") << "  " << c.number << "  " << c.title << "  (" << timing << ")";
    if (!detail.empty()) std::cout << "  " << detail;
    std::cout << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
