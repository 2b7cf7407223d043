#include "qspectra/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "qspectra/errors.hpp"
#include "qspectra/partition.hpp"
#include "qspectra/spectral.hpp"
#include "qspectra/symfunc.hpp"
#include "qspectra/verify.hpp"

namespace qspectra::cli {

namespace {

const std::vector<std::string> kQuantities{"ek", "hk", "pk-classical", "ak", "sk", "pik", "weights",
                                           "p-image", "schur", "f", "u", "lr"};

struct Config {
  int m = 1;
  int n = 1;
  int k = 1;
  int kmax = kDefaultKmax;
  int order = kDefaultOrder;
  std::string mode = "symbolic";
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string lam, mu, nu;
  int threads = 1;
  bool timing = false;
  std::string target;
};

bool usage_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidPartition:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::OrderExceeded:
    case ErrorCode::NotApplicable:
      return true;
    default:
      return false;
  }
}

std::string render(const RationalFunction& f) {
  if (auto poly = f.cleared()) return poly->to_string();
  return f.to_string();
}

Partition partition_flag(const std::string& text, const char* flag) {
  if (text.empty()) throw Error(ErrorCode::InvalidArgument, std::string("missing ") + flag);
  return Partition::parse(text);
}

std::vector<std::pair<std::string, std::string>> compute(const Config& c) {
  const std::string& what = c.target;
  std::vector<std::pair<std::string, std::string>> rows;
  auto single = [&](std::string value) { rows.emplace_back(what, std::move(value)); };

  if (what == "lr") {
    const auto value = lr_coeff(partition_flag(c.lam, "--lam"), partition_flag(c.mu, "--mu"), partition_flag(c.nu, "--nu"));
    single(std::to_string(value));
    return rows;
  }
  if (what == "ek" || what == "hk" || what == "pk-classical") {
    const Alphabet a = Alphabet::mu(c.m, MultiPoly(1));
    if (c.m < 0 || c.m > kMaxMu) throw Error(ErrorCode::IndexOutOfRange, "m must be in [0, 8]");
    if (what == "ek") single(elem_sym(c.k, a).to_string());
    if (what == "hk") single(complete_sym(c.k, a).to_string());
    if (what == "pk-classical") single(power_sum_classical(c.k, a).to_string());
    return rows;
  }

  const SpectralContext ctx(c.m, c.n, c.order);
  if (what == "ak") {
    single(a_image(c.k, ctx).to_string());
  } else if (what == "sk") {
    single(s_image(c.k, ctx).to_string());
  } else if (what == "pik") {
    single(pi_k(c.k, ctx).to_string());
  } else if (what == "weights") {
    const WeightVector w = weights(ctx);
    for (std::size_t i = 0; i < w.d.size(); ++i) rows.emplace_back("d" + std::to_string(i + 1), w.d[i].to_string());
    for (std::size_t j = 0; j < w.d_tilde.size(); ++j) {
      rows.emplace_back("dt" + std::to_string(j + 1), w.d_tilde[j].to_string());
    }
  } else if (what == "p-image") {
    single(render(p_image(c.k, ctx)));
  } else if (what == "schur") {
    single(render(schur_image(partition_flag(c.lam, "--lam"), ctx)));
  } else if (what == "f") {
    single(f_of_z(ctx).to_string());
  } else if (what == "u") {
    single(u_of_y(ctx).to_string());
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown quantity '" + what + "'");
  }
  return rows;
}

int cmd_compute(const Config& c, std::ostream& out) {
  const auto rows = compute(c);
  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["quantity"] = c.target;
    if (rows.size() == 1 && rows[0].first == c.target) {
      j["value"] = rows[0].second;
    } else {
      nlohmann::ordered_json values;
      for (const auto& [name, value] : rows) values[name] = value;
      j["value"] = std::move(values);
    }
    out << j.dump(2) << "\n";
    return kExitPass;
  }
  for (const auto& [name, value] : rows) {
    if (rows.size() == 1 && name == c.target) {
      out << value << "\n";
    } else {
      out << name << " = " << value << "\n";
    }
  }
  return kExitPass;
}

VerifyOptions options_of(const Config& c) {
  VerifyOptions o;
  o.mode = parse_mode(c.mode);
  if (o.mode == Mode::Evaluated) o.seed = c.seed;
  o.order = c.order;
  o.threads = c.threads;
  return o;
}

void p0_sides(const std::vector<GridPoint>& grid, std::ostream& out) {
  for (const auto& g : grid) {
    if (g.m + g.n < 1) continue;
    const SpectralContext ctx(g.m, g.n);
    out << "  (m,n)=(" << g.m << "," << g.n << ")  p_0 = " << render(p_image(0, ctx))
        << "  q^(n-m) (m-n)_q = " << p0_closed_form(g.m, g.n).to_string() << "\n";
  }
}

int cmd_verify(const Config& c, const std::vector<GridPoint>& grid, std::ostream& out) {
  const VerifyOptions options = options_of(c);
  std::vector<VerificationReport> reports;
  const bool all = c.target == "all";
  if (all) {
    reports = verify_all(grid, c.kmax, options);
  } else {
    reports.push_back(verify_identity(parse_identity(c.target), grid, c.kmax, options));
  }
  if (c.format == "json") {
    out << (all ? to_json(reports, c.timing) : to_json(reports.front(), c.timing)) << "\n";
  } else {
    for (const auto& r : reports) {
      out << to_text(r);
      if (r.identity == IdentityId::P0) p0_sides(grid, out);
    }
  }
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.all_passed(); });
  return ok ? kExitPass : kExitFailure;
}

int cmd_report(const Config& c, const std::vector<GridPoint>& grid, std::ostream& out) {
  const auto reports = verify_all(grid, c.kmax, options_of(c));
  bool ok = true;
  if (c.format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
      j.push_back({{"identity", std::string(identity_name(r.identity))}, {"pass", r.passed()}, {"fail", r.failed()}});
      ok = ok && r.all_passed();
    }
    out << j.dump(2) << "\n";
  } else {
    out << "identity            pass  fail\n";
    for (const auto& r : reports) {
      std::string name(identity_name(r.identity));
      name.resize(std::max<std::size_t>(name.size(), 18), ' ');
      out << name << "  " << std::setw(4) << r.passed() << "  " << std::setw(4) << r.failed() << "\n";
      ok = ok && r.all_passed();
    }
  }
  return ok ? kExitPass : kExitFailure;
}

}  // namespace

int default_order() {
  if (const char* env = std::getenv("QSPECTRA_ORDER")) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(env, &used);
      if (used == std::string(env).size() && value >= 1) return value;
    } catch (const std::exception&) {
    }
  }
  return kDefaultOrder;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  c.order = default_order();
  c.threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));

  CLI::App app{"Exact spectral power-sum identities for GL(m|n) quantum matrix algebras", "qspectra"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--m", c.m, "number of even spectral values")->check(CLI::Range(0, kMaxMu));
    sub->add_option("--n", c.n, "number of odd spectral values")->check(CLI::Range(0, kMaxNu));
    sub->add_option("--order", c.order, "series order K")->check(CLI::PositiveNumber);
    sub->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_verify = [&](CLI::App* sub) {
    sub->add_option("--kmax", c.kmax, "largest k checked")->check(CLI::PositiveNumber);
    sub->add_option("--mode", c.mode, "symbolic or evaluated")->check(CLI::IsMember({"symbolic", "evaluated"}));
    sub->add_option("--seed", c.seed, "seed for evaluated mode");
    sub->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--timing", c.timing, "include per-cell timings in JSON");
  };

  CLI::App* compute_cmd = app.add_subcommand("compute", "print a quantity");
  compute_cmd->add_option("quantity", c.target, "quantity")->required()->check(CLI::IsMember(kQuantities));
  add_common(compute_cmd);
  compute_cmd->add_option("--k", c.k, "index k");
  compute_cmd->add_option("--lam", c.lam, "partition, e.g. (2,1)");
  compute_cmd->add_option("--mu", c.mu, "partition");
  compute_cmd->add_option("--nu", c.nu, "partition");

  CLI::App* verify_cmd = app.add_subcommand("verify", "check an identity, or all of them");
  verify_cmd->add_option("identity", c.target, "identity name or 'all'")->required();
  add_common(verify_cmd);
  add_verify(verify_cmd);

  CLI::App* report_cmd = app.add_subcommand("report", "pass/fail summary of every identity");
  add_common(report_cmd);
  add_verify(report_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitPass;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (compute_cmd->parsed()) return cmd_compute(c, out);

    CLI::App* sub = verify_cmd->parsed() ? verify_cmd : report_cmd;
    const bool explicit_rank = sub->count("--m") > 0 || sub->count("--n") > 0;
    if (!explicit_rank) {
      c.m = 0;
      c.n = 0;
    } else {
      if (sub->count("--m") == 0) c.m = 0;
      if (sub->count("--n") == 0) c.n = 0;
    }
    const std::vector<GridPoint> grid = explicit_rank ? std::vector<GridPoint>{{c.m, c.n}} : default_grid();
    if (sub->count("--kmax") == 0) c.kmax = std::min(kDefaultKmax, c.order);
    if (verify_cmd->parsed()) {
      if (c.target != "all") parse_identity(c.target);
      return cmd_verify(c, grid, out);
    }
    return cmd_report(c, grid, out);
  } catch (const Error& e) {
    err << "qspectra: " << e.what() << "\n";
    return usage_error(e.code()) ? kExitUsage : kExitFailure;
  }
}

}  // namespace qspectra::cli
