// Command-line surface for deciding the strong Rayleigh property of
// Young-subgroup-symmetric matroid families and for emitting and verifying
// sum-of-squares certificates of their Rayleigh differences.
//
// Exit codes: 0 = yes/pass, 1 = no/fail, 2 = usage error, 3 = resource limit.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "rayleigh/certificates.hpp"
#include "rayleigh/error.hpp"
#include "rayleigh/families.hpp"
#include "rayleigh/selfcheck.hpp"
#include "rayleigh/stability.hpp"

namespace {

using namespace rayleigh;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct FamilyFlags {
  std::string family;
  int r = 0, m = 0, s = 0, t = 0, a = 0, b = 0, ell = 0;
  CLI::Option* m_opt = nullptr;
  CLI::Option* s_opt = nullptr;
  CLI::Option* t_opt = nullptr;
  CLI::Option* a_opt = nullptr;
  CLI::Option* b_opt = nullptr;
  CLI::Option* ell_opt = nullptr;
};

void add_family_flags(CLI::App* cmd, FamilyFlags& flags, bool line_only) {
  if (line_only) {
    flags.family = "line";
  } else {
    cmd->add_option("--family", flags.family, "uniform, twoflats, or line")
        ->required()
        ->check(CLI::IsMember({"uniform", "twoflats", "line"}));
  }
  cmd->add_option("--r", flags.r, "rank")->required();
  flags.a_opt = cmd->add_option("--a", flags.a, "points on the first flat / free points");
  flags.ell_opt = cmd->add_option("--ell", flags.ell, "extra line points");
  if (!line_only) {
    flags.m_opt = cmd->add_option("--m", flags.m, "ground size (uniform)");
    flags.s_opt = cmd->add_option("--s", flags.s, "rank of flat S (twoflats)");
    flags.t_opt = cmd->add_option("--t", flags.t, "rank of flat T (twoflats)");
    flags.b_opt = cmd->add_option("--b", flags.b, "points on flat T (twoflats)");
  }
}

void require_flag(const CLI::Option* opt, const char* name,
                  const std::string& family) {
  if (opt == nullptr || opt->count() == 0) {
    throw Error("family '" + family + "' requires --" + std::string(name));
  }
}

FamilySpec spec_from_flags(const FamilyFlags& flags) {
  if (flags.family == "uniform") {
    require_flag(flags.m_opt, "m", flags.family);
    return UniformSpec{flags.r, flags.m};
  }
  if (flags.family == "twoflats") {
    require_flag(flags.s_opt, "s", flags.family);
    require_flag(flags.t_opt, "t", flags.family);
    require_flag(flags.a_opt, "a", flags.family);
    require_flag(flags.b_opt, "b", flags.family);
    return TwoFlatSpec{flags.r, flags.s, flags.t, flags.a, flags.b};
  }
  require_flag(flags.a_opt, "a", flags.family);
  require_flag(flags.ell_opt, "ell", flags.family);
  return LinePlusFreeSpec{flags.r, flags.ell, flags.a};
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot open output file '" + path + "'");
  }
  out << content;
}

std::string table_to_csv(const std::vector<std::vector<TableCell>>& grid,
                         int rmin, int lmin, int lmax) {
  std::ostringstream out;
  out << "r\\l";
  for (int ell = lmin; ell <= lmax; ++ell) out << "," << ell;
  out << "\n";
  for (std::size_t row = 0; row < grid.size(); ++row) {
    out << (rmin + static_cast<int>(row));
    for (const TableCell& cell : grid[row]) {
      out << "," << (cell.infinite ? "inf" : cell.floor_value.get_str());
    }
    out << "\n";
  }
  return out.str();
}

std::string table_to_json(const std::vector<std::vector<TableCell>>& grid,
                          int rmin, int rmax, int lmin, int lmax) {
  nlohmann::json j;
  j["rmin"] = rmin;
  j["rmax"] = rmax;
  j["lmin"] = lmin;
  j["lmax"] = lmax;
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t row = 0; row < grid.size(); ++row) {
    nlohmann::json entry;
    entry["r"] = rmin + static_cast<int>(row);
    nlohmann::json cells = nlohmann::json::array();
    for (const TableCell& cell : grid[row]) {
      cells.push_back(cell.infinite ? std::string("inf")
                                    : cell.floor_value.get_str());
    }
    entry["cells"] = std::move(cells);
    rows.push_back(std::move(entry));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string table_to_text(const std::vector<std::vector<TableCell>>& grid,
                          int rmin, int lmin, int lmax) {
  std::ostringstream out;
  out << "r\\l";
  for (int ell = lmin; ell <= lmax; ++ell) {
    out << "\t" << ell;
  }
  out << "\n";
  for (std::size_t row = 0; row < grid.size(); ++row) {
    out << (rmin + static_cast<int>(row));
    for (const TableCell& cell : grid[row]) {
      out << "\t" << (cell.infinite ? "inf" : cell.floor_value.get_str());
    }
    out << "\n";
  }
  return out.str();
}

int run_check(const FamilyFlags& flags, const std::string& format) {
  const FamilySpec spec = spec_from_flags(flags);
  const Decision decision = is_strongly_rayleigh(spec);
  if (format == "json") {
    nlohmann::json j = nlohmann::json::parse(decision.to_json());
    j["family"] = nlohmann::json::parse(family_to_json(spec));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "family: " << family_name(spec) << "\n"
              << "decision: "
              << (decision.strongly_rayleigh ? "strongly Rayleigh"
                                             : "not strongly Rayleigh")
              << "\n"
              << "path: " << decision.path << "\n"
              << "detail: " << decision.detail << "\n";
  }
  return decision.strongly_rayleigh ? kExitYes : kExitNo;
}

int run_table(int rmin, int rmax, int lmin, int lmax,
              const std::string& format, const std::string& out_path) {
  const auto grid = table_A(rmin, rmax, lmin, lmax);
  std::string content;
  if (format == "csv") {
    content = table_to_csv(grid, rmin, lmin, lmax);
  } else if (format == "json") {
    content = table_to_json(grid, rmin, rmax, lmin, lmax);
  } else {
    content = table_to_text(grid, rmin, lmin, lmax);
  }
  write_output(out_path, content);
  return kExitYes;
}

int run_certify(const FamilyFlags& flags, const std::string& out_path) {
  const FamilySpec family = spec_from_flags(flags);
  const auto& spec = std::get<LinePlusFreeSpec>(family);
  require_valid(family);
  if (!psd_closed_form(spec)) {
    const Threshold threshold = threshold_A(spec.r, spec.ell);
    std::cout << "no SOS certificate exists for " << family_name(family)
              << ": a = " << spec.a << " exceeds A(" << spec.r << ","
              << spec.ell << ") = "
              << (threshold.infinite ? std::string("inf")
                                     : fraction_string(threshold.value) + " (" +
                                           decimal_string(threshold.value) + ")")
              << "\n";
    return kExitNo;
  }
  const SOSCertificate cert = build_certificate(spec);
  if (!verify_certificate(cert, rayleigh_closed_form(spec))) {
    std::cout << "internal error: certificate failed re-verification\n";
    return kExitNo;
  }
  int zero_weights = 0;
  for (const auto& summand : cert.summands) {
    if (summand.weight == 0) ++zero_weights;
  }
  write_output(out_path, certificate_to_json(cert) + "\n");
  std::cerr << "certificate verified: " << cert.summands.size()
            << " summands (" << zero_weights << " with zero weight)\n";
  return kExitYes;
}

int run_verify(const std::string& cert_path, const FamilyFlags& flags,
               bool has_family) {
  std::ifstream in(cert_path, std::ios::binary);
  if (!in) {
    throw Error("cannot open certificate file '" + cert_path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const SOSCertificate cert = certificate_from_json(buffer.str());
  if (has_family) {
    const FamilySpec expected = spec_from_flags(flags);
    if (!(FamilySpec(*cert.family) == expected)) {
      std::cout << "certificate family " << family_name(FamilySpec(*cert.family))
                << " does not match requested " << family_name(expected) << "\n";
      return kExitNo;
    }
  }
  const BoundedExponentForm target = rayleigh_closed_form(*cert.family);
  const bool ok = verify_certificate(cert, target);
  std::cout << (ok ? "certificate verifies exactly"
                   : "certificate does NOT match the Rayleigh difference")
            << " for " << family_name(FamilySpec(*cert.family)) << "\n";
  return ok ? kExitYes : kExitNo;
}

int run_witness(const FamilyFlags& flags, std::uint64_t seed) {
  const FamilySpec family = spec_from_flags(flags);
  const auto& spec = std::get<LinePlusFreeSpec>(family);
  const WitnessSearchResult result = negativity_witness(spec, seed);
  for (const auto& line : result.stage_log) {
    std::cerr << "stage: " << line << "\n";
  }
  if (!result.witness) {
    std::cout << "no witness found for " << family_name(family) << "\n";
    return kExitNo;
  }
  const Witness& witness = *result.witness;
  std::cout << "negativity witness for " << family_name(family) << " (stage "
            << witness.stage << "):\n";
  const GroundSet& ground = witness.point.ground();
  for (int i = 0; i < ground.size(); ++i) {
    const Rational& value = witness.point.value(i);
    std::cout << "  " << ground.label(i) << " = " << fraction_string(value)
              << " (" << decimal_string(value) << ")\n";
  }
  std::cout << "  Delta = " << fraction_string(witness.value) << " ("
            << decimal_string(witness.value) << ")\n";
  return kExitYes;
}

int run_selftest_cmd(const std::string& level) {
  const SelfTestReport report = run_selftest(level == "full");
  std::cout << report.to_json() << "\n";
  return report.all_pass() ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact strong-Rayleigh decisions and sum-of-squares certificates for "
      "highly symmetric matroid families"};
  app.require_subcommand(1);

  FamilyFlags check_flags;
  std::string check_format = "text";
  CLI::App* check = app.add_subcommand(
      "check", "Decide whether a family member is strongly Rayleigh");
  add_family_flags(check, check_flags, false);
  check->add_option("--format", check_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  int rmin = 3, rmax = 12, lmin = 1, lmax = 12;
  std::string table_format = "csv";
  std::string table_out;
  CLI::App* table = app.add_subcommand(
      "table", "Emit the grid of free-point thresholds A(r, ell)");
  table->add_option("--rmin", rmin, "smallest rank (>= 3)");
  table->add_option("--rmax", rmax, "largest rank");
  table->add_option("--lmin", lmin, "smallest ell (>= 1)");
  table->add_option("--lmax", lmax, "largest ell");
  table->add_option("--format", table_format, "csv, json, or text")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  table->add_option("--out", table_out, "output path (default stdout)");

  FamilyFlags certify_flags;
  std::string certify_out;
  CLI::App* certify = app.add_subcommand(
      "certify", "Build and verify an SOS certificate for the line family");
  add_family_flags(certify, certify_flags, true);
  certify->add_option("--out", certify_out, "certificate path (default stdout)");

  FamilyFlags verify_flags;
  std::string verify_cert;
  CLI::App* verify = app.add_subcommand(
      "verify", "Re-verify a certificate file against its family");
  verify->add_option("--cert", verify_cert, "certificate JSON path")->required();
  verify->add_option("--r", verify_flags.r, "expected rank");
  verify_flags.a_opt = verify->add_option("--a", verify_flags.a, "expected free points");
  verify_flags.ell_opt = verify->add_option("--ell", verify_flags.ell, "expected line points");
  verify_flags.family = "line";

  FamilyFlags witness_flags;
  std::uint64_t seed = 0;
  CLI::App* witness = app.add_subcommand(
      "witness", "Search for a point where the Rayleigh difference is negative");
  add_family_flags(witness, witness_flags, true);
  witness->add_option("--seed", seed, "random stage seed (default 0)");

  std::string level = "quick";
  CLI::App* selftest = app.add_subcommand(
      "selftest", "Run the brute-force cross-check suites");
  selftest->add_option("--level", level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (check->parsed()) return run_check(check_flags, check_format);
    if (table->parsed()) return run_table(rmin, rmax, lmin, lmax, table_format, table_out);
    if (certify->parsed()) return run_certify(certify_flags, certify_out);
    if (verify->parsed()) {
      const bool has_family = verify->count("--r") > 0;
      if (has_family) {
        if (verify->count("--a") == 0 || verify->count("--ell") == 0) {
          throw Error("expected family needs --r, --ell, and --a together");
        }
      }
      return run_verify(verify_cert, verify_flags, has_family);
    }
    if (witness->parsed()) return run_witness(witness_flags, seed);
    if (selftest->parsed()) return run_selftest_cmd(level);
  } catch (const SizeError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
