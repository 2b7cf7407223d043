#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>

namespace qspectra {

// Global variable layout. Every MultiPoly shares the same exponent-vector
// shape: q, mu_1..mu_8, nu_1..nu_8, then the formal symbols t, z, y.
inline constexpr int kMaxMu = 8;
inline constexpr int kMaxNu = 8;
inline constexpr int kMaxFormal = 3;
inline constexpr int kSlots = 1 + kMaxMu + kMaxNu + kMaxFormal;

enum class VarKind : std::uint8_t { Q = 0, MU = 1, NU = 2, FORMAL = 3 };

struct VarId {
  VarKind kind = VarKind::Q;
  std::uint8_t index = 0;

  static constexpr VarId q() { return {VarKind::Q, 0}; }
  static VarId mu(int i);
  static VarId nu(int j);
  static VarId formal(int f);
  static constexpr VarId t() { return {VarKind::FORMAL, 0}; }
  static constexpr VarId z() { return {VarKind::FORMAL, 1}; }
  static constexpr VarId y() { return {VarKind::FORMAL, 2}; }

  // Position in the exponent vector.
  constexpr int slot() const {
    switch (kind) {
      case VarKind::Q: return 0;
      case VarKind::MU: return 1 + index;
      case VarKind::NU: return 1 + kMaxMu + index;
      case VarKind::FORMAL: return 1 + kMaxMu + kMaxNu + index;
    }
    return 0;
  }

  static VarId from_slot(int slot);

  // q, mu1, nu2, t, z, y
  std::string name() const;

  friend constexpr bool operator==(VarId a, VarId b) { return a.slot() == b.slot(); }
  friend constexpr auto operator<=>(VarId a, VarId b) { return a.slot() <=> b.slot(); }
};

}  // namespace qspectra
