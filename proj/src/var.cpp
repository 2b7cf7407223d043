#include "qspectra/var.hpp"

#include "qspectra/errors.hpp"

namespace qspectra {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingAssignment: return "MissingAssignment";
    case ErrorCode::ZeroBaseNegativeExponent: return "ZeroBaseNegativeExponent";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::FormalVarMismatch: return "FormalVarMismatch";
    case ErrorCode::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorCode::NotFormalVariable: return "NotFormalVariable";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::OrderExceeded: return "OrderExceeded";
    case ErrorCode::ResampleCapExceeded: return "ResampleCapExceeded";
  }
  return "Unknown";
}

VarId VarId::mu(int i) {
  if (i < 0 || i >= kMaxMu) throw Error(ErrorCode::IndexOutOfRange, "mu index " + std::to_string(i));
  return {VarKind::MU, static_cast<std::uint8_t>(i)};
}

VarId VarId::nu(int j) {
  if (j < 0 || j >= kMaxNu) throw Error(ErrorCode::IndexOutOfRange, "nu index " + std::to_string(j));
  return {VarKind::NU, static_cast<std::uint8_t>(j)};
}

VarId VarId::formal(int f) {
  if (f < 0 || f >= kMaxFormal) throw Error(ErrorCode::IndexOutOfRange, "formal index " + std::to_string(f));
  return {VarKind::FORMAL, static_cast<std::uint8_t>(f)};
}

VarId VarId::from_slot(int slot) {
  if (slot == 0) return q();
  if (slot <= kMaxMu) return mu(slot - 1);
  if (slot <= kMaxMu + kMaxNu) return nu(slot - 1 - kMaxMu);
  return formal(slot - 1 - kMaxMu - kMaxNu);
}

std::string VarId::name() const {
  switch (kind) {
    case VarKind::Q: return "q";
    case VarKind::MU: return "mu" + std::to_string(index + 1);
    case VarKind::NU: return "nu" + std::to_string(index + 1);
    case VarKind::FORMAL: {
      static constexpr const char* kNames[kMaxFormal] = {"t", "z", "y"};
      return kNames[index];
    }
  }
  return "?";
}

}  // namespace qspectra
