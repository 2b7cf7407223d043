#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qspectra/report.hpp"
#include "qspectra/spectral.hpp"

namespace qspectra {

struct GridPoint {
  int m = 0;
  int n = 0;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

/// (1,0), (0,1), (1,1), (2,1), (1,2), (2,2)
const std::vector<GridPoint>& default_grid();

inline constexpr int kDefaultKmax = 8;
inline constexpr int kDefaultHeight = 99;
inline constexpr int kResampleCap = 16;

struct VerifyOptions {
  Mode mode = Mode::Symbolic;
  std::optional<std::uint64_t> seed;  // required in evaluated mode
  int order = kDefaultOrder;
  int threads = 1;
  WeightExponents weight_exponents{};
};

/// The k values checked for one (m,n) block. Most identities use 1..kmax;
/// partial-frac and u-pi start at 0, p0 is the single cell 0, and the
/// combinatorial identities use their own weight ranges.
std::vector<int> identity_cells(IdentityId id, int m, int n, int kmax);

/// Runs id over a single (m,n). Throws OrderExceeded when kmax > order,
/// NotApplicable for gs-reduction with n > 0, InvalidArgument for evaluated
/// mode without a seed and ResampleCapExceeded when no usable point is found.
VerificationReport verify_identity(IdentityId id, int m, int n, int kmax, const VerifyOptions& options = {});

/// Runs id over every grid point it applies to; cells stay in grid order.
VerificationReport verify_identity(IdentityId id, const std::vector<GridPoint>& grid, int kmax,
                                   const VerifyOptions& options = {});

/// One report per identity, skipping identities that apply to no grid point.
std::vector<VerificationReport> verify_all(const std::vector<GridPoint>& grid, int kmax, const VerifyOptions& options = {});

/// Compares lhs and rhs at `trials` seeded random rational points whose
/// numerators and denominators are bounded by height. Points where either
/// denominator vanishes are redrawn, at most kResampleCap times per trial.
bool random_eval_check(const RationalFunction& lhs, const RationalFunction& rhs, std::uint64_t seed, int trials,
                       int height = kDefaultHeight);

}  // namespace qspectra
