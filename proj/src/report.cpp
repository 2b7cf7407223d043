#include "qspectra/report.hpp"

#include <array>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "qspectra/errors.hpp"

namespace qspectra {

namespace {

struct NamedIdentity {
  IdentityId id;
  std::string_view name;
};

constexpr std::array<NamedIdentity, 16> kIdentities{{
    {IdentityId::NewtonAnti, "newton-anti"},
    {IdentityId::NewtonSimm, "newton-simm"},
    {IdentityId::Wronski, "wronski"},
    {IdentityId::GfNewton2, "gf-newton2"},
    {IdentityId::Lemma1A, "lemma1-a"},
    {IdentityId::Lemma1S, "lemma1-s"},
    {IdentityId::Lemma2, "lemma2"},
    {IdentityId::GfPPi, "gf-ppi"},
    {IdentityId::PartialFrac, "partial-frac"},
    {IdentityId::UPi, "u-pi"},
    {IdentityId::P0, "p0"},
    {IdentityId::GsReduction, "gs-reduction"},
    {IdentityId::ClassicalLimit, "classical-limit"},
    {IdentityId::ChImages, "ch-images"},
    {IdentityId::SchurVanishing, "schur-vanishing"},
    {IdentityId::LrHomomorphism, "lr-homomorphism"},
}};

}  // namespace

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = [] {
    std::vector<IdentityId> out;
    for (const auto& e : kIdentities) out.push_back(e.id);
    return out;
  }();
  return ids;
}

std::string_view identity_name(IdentityId id) {
  for (const auto& e : kIdentities) {
    if (e.id == id) return e.name;
  }
  return "?";
}

IdentityId parse_identity(std::string_view name) {
  for (const auto& e : kIdentities) {
    if (e.name == name) return e.id;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown identity '" + std::string(name) + "'");
}

std::string_view mode_name(Mode mode) { return mode == Mode::Symbolic ? "symbolic" : "evaluated"; }

Mode parse_mode(std::string_view name) {
  if (name == "symbolic") return Mode::Symbolic;
  if (name == "evaluated") return Mode::Evaluated;
  throw Error(ErrorCode::InvalidArgument, "unknown mode '" + std::string(name) + "'");
}

int VerificationReport::passed() const {
  int count = 0;
  for (const auto& c : cells) count += c.pass ? 1 : 0;
  return count;
}

int VerificationReport::failed() const { return static_cast<int>(cells.size()) - passed(); }

CellResult check_equations(int m, int n, int k, const std::vector<Equation>& equations) {
  CellResult cell{m, n, k, true, 0.0, {}};
  for (const auto& eq : equations) {
    MultiPoly diff = cleared_difference(eq.lhs, eq.rhs);
    if (!diff.is_zero()) {
      cell.pass = false;
      cell.witness = eq.label + ": " + diff.to_string(kWitnessTerms);
      break;
    }
  }
  return cell;
}

namespace {

nlohmann::ordered_json report_json(const VerificationReport& report, bool with_timing) {
  nlohmann::ordered_json j;
  j["identity"] = std::string(identity_name(report.identity));
  j["mode"] = std::string(mode_name(report.mode));
  if (report.seed) {
    j["seed"] = *report.seed;
  } else {
    j["seed"] = nullptr;
  }
  auto cells = nlohmann::ordered_json::array();
  for (const auto& c : report.cells) {
    nlohmann::ordered_json cj;
    cj["m"] = c.m;
    cj["n"] = c.n;
    cj["k"] = c.k;
    cj["status"] = c.pass ? "pass" : "fail";
    cj["ms"] = with_timing ? c.ms : 0.0;
    if (!c.pass) cj["witness"] = c.witness;
    cells.push_back(std::move(cj));
  }
  j["cells"] = std::move(cells);
  j["summary"] = {{"pass", report.passed()}, {"fail", report.failed()}};
  return j;
}

}  // namespace

std::string to_json(const VerificationReport& report, bool with_timing, int indent) {
  return report_json(report, with_timing).dump(indent);
}

std::string to_json(const std::vector<VerificationReport>& reports, bool with_timing, int indent) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_json(r, with_timing));
  return arr.dump(indent);
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream os;
  os << identity_name(report.identity) << " [" << mode_name(report.mode);
  if (report.seed) os << ", seed " << *report.seed;
  os << "]\n";
  for (const auto& c : report.cells) {
    os << "  (m,n)=(" << c.m << "," << c.n << ") k=" << c.k << "  " << (c.pass ? "pass" : "FAIL") << "  "
       << std::fixed << std::setprecision(1) << c.ms << " ms\n";
    if (!c.pass) os << "    witness: " << c.witness << "\n";
  }
  os << "  summary: " << report.passed() << " pass, " << report.failed() << " fail\n";
  return os.str();
}

}  // namespace qspectra
