#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qspectra/ratfun.hpp"

namespace qspectra {

enum class IdentityId {
  NewtonAnti,
  NewtonSimm,
  Wronski,
  GfNewton2,
  Lemma1A,
  Lemma1S,
  Lemma2,
  GfPPi,
  PartialFrac,
  UPi,
  P0,
  GsReduction,
  ClassicalLimit,
  ChImages,
  SchurVanishing,
  LrHomomorphism,
};

const std::vector<IdentityId>& all_identities();
std::string_view identity_name(IdentityId id);
// Throws InvalidArgument for an unknown name.
IdentityId parse_identity(std::string_view name);

enum class Mode { Symbolic, Evaluated };

std::string_view mode_name(Mode mode);
Mode parse_mode(std::string_view name);

/// One asserted equality lhs == rhs inside a grid cell.
struct Equation {
  std::string label;
  RationalFunction lhs;
  RationalFunction rhs;
};

struct CellResult {
  int m = 0;
  int n = 0;
  int k = 0;
  bool pass = false;
  double ms = 0.0;
  std::string witness;  // empty iff pass
};

struct VerificationReport {
  IdentityId identity = IdentityId::NewtonAnti;
  Mode mode = Mode::Symbolic;
  std::optional<std::uint64_t> seed;
  std::vector<CellResult> cells;

  int passed() const;
  int failed() const;
  bool all_passed() const { return failed() == 0; }
};

inline constexpr std::size_t kWitnessTerms = 40;

/// Checks every equation; on the first mismatch the cell fails with the
/// cleared difference (truncated to kWitnessTerms terms) as witness.
CellResult check_equations(int m, int n, int k, const std::vector<Equation>& equations);

/// {identity, mode, seed, cells:[{m,n,k,status,ms,witness?}], summary:{pass,fail}}
/// with stable field order. Timings are written as 0 unless with_timing is
/// set, so repeated runs serialize byte-identically.
std::string to_json(const VerificationReport& report, bool with_timing = false, int indent = 2);
std::string to_json(const std::vector<VerificationReport>& reports, bool with_timing = false, int indent = 2);

std::string to_text(const VerificationReport& report);

}  // namespace qspectra
