#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

// Runs the CLI binary with the given arguments, capturing stdout.
CliResult run_cli(const std::string& args) {
  const std::string command =
      std::string(RAYLEIGH_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buffer{};
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << content;
}

}  // namespace

TEST_CASE("check decides the boundary pair with the documented exit codes") {
  CHECK(run_cli("check --family line --r 3 --ell 3 --a 17").exit_code == 0);
  CHECK(run_cli("check --family line --r 3 --ell 3 --a 18").exit_code == 1);

  const CliResult flats =
      run_cli("check --family twoflats --r 3 --s 3 --t 2 --a 18 --b 5");
  CHECK(flats.exit_code == 1);
  CHECK(flats.output.find("P_M not real-rooted") != std::string::npos);

  CHECK(run_cli("check --family uniform --r 4 --m 9").exit_code == 0);
  const CliResult line17 = run_cli("check --family line --r 3 --ell 3 --a 17");
  CHECK(line17.output.find("A(3,3) = 17/1") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("check --family line --r 3").exit_code == 2);
  CHECK(run_cli("check --family nosuch --r 3 --ell 1 --a 2").exit_code == 2);
  CHECK(run_cli("check --family line --r 2 --ell 1 --a 4").exit_code == 2);
  CHECK(run_cli("table --rmin 2 --rmax 3").exit_code == 2);
  CHECK(run_cli("selftest --level sideways").exit_code == 2);
  CHECK(run_cli("nosuchcommand").exit_code == 2);
}

TEST_CASE("table output matches the golden grid byte for byte") {
  const std::string golden = read_file(std::string(RAYLEIGH_DATA_DIR) + "/table1.csv");
  const CliResult table =
      run_cli("table --rmin 3 --rmax 12 --lmin 1 --lmax 12 --format csv");
  CHECK(table.exit_code == 0);
  CHECK(table.output == golden);

  // identical flags produce identical bytes
  const CliResult again =
      run_cli("table --rmin 3 --rmax 12 --lmin 1 --lmax 12 --format csv");
  CHECK(again.output == table.output);

  const CliResult small = run_cli("table --rmin 3 --rmax 3 --lmin 1 --lmax 2");
  CHECK(small.output.find("inf,inf") != std::string::npos);
  const CliResult single = run_cli("table --rmin 12 --rmax 12 --lmin 1 --lmax 1");
  CHECK(single.output.find("15") != std::string::npos);
}

TEST_CASE("table writes files and other formats") {
  const std::string path = "/tmp/rayleigh_cli_table.csv";
  std::remove(path.c_str());
  CHECK(run_cli("table --rmin 3 --rmax 4 --lmin 1 --lmax 3 --out " + path)
            .exit_code == 0);
  const std::string content = read_file(path);
  CHECK(content.find("r\\l,1,2,3") == 0);

  const CliResult json = run_cli("table --rmin 3 --rmax 3 --lmin 3 --lmax 3 --format json");
  CHECK(json.exit_code == 0);
  CHECK(json.output.find("\"17\"") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("certify, verify, and tamper detection") {
  const std::string path = "/tmp/rayleigh_cli_cert.json";
  std::remove(path.c_str());
  CHECK(run_cli("certify --r 3 --ell 1 --a 3 --out " + path).exit_code == 0);
  CHECK(run_cli("verify --cert " + path).exit_code == 0);
  CHECK(run_cli("verify --cert " + path + " --r 3 --ell 1 --a 3").exit_code == 0);
  CHECK(run_cli("verify --cert " + path + " --r 3 --ell 1 --a 4").exit_code == 1);

  // identical flags produce byte-identical certificates
  const std::string first = read_file(path);
  CHECK(run_cli("certify --r 3 --ell 1 --a 3 --out " + path).exit_code == 0);
  CHECK(read_file(path) == first);

  // a single edited digit must fail verification
  std::string tampered = first;
  const auto pos = tampered.find("\"coeff\": \"1");
  REQUIRE(pos != std::string::npos);
  tampered.replace(pos + 10, 1, "2");
  const std::string tampered_path = "/tmp/rayleigh_cli_cert_tampered.json";
  write_file(tampered_path, tampered);
  CHECK(run_cli("verify --cert " + tampered_path).exit_code == 1);

  // truncated file is a usage-level failure
  const std::string truncated_path = "/tmp/rayleigh_cli_cert_truncated.json";
  write_file(truncated_path, first.substr(0, first.size() / 2));
  CHECK(run_cli("verify --cert " + truncated_path).exit_code == 2);
  CHECK(run_cli("verify --cert /tmp/no_such_file.json").exit_code == 2);

  // no certificate past the threshold, message cites it
  const CliResult refused = run_cli("certify --r 3 --ell 3 --a 18 --out /tmp/doomed.json");
  CHECK(refused.exit_code == 1);
  CHECK(refused.output.find("17") != std::string::npos);

  std::remove(path.c_str());
  std::remove(tampered_path.c_str());
  std::remove(truncated_path.c_str());
}

TEST_CASE("witness subcommand finds and reports failures") {
  const CliResult found = run_cli("witness --r 3 --ell 3 --a 18");
  CHECK(found.exit_code == 0);
  CHECK(found.output.find("symmetric-slice") != std::string::npos);
  CHECK(found.output.find("Delta = -") != std::string::npos);

  CHECK(run_cli("witness --r 3 --ell 3 --a 17").exit_code == 1);
  CHECK(run_cli("witness --r 5 --ell 1 --a 19").exit_code == 1);
}

TEST_CASE("selftest subcommand") {
  const CliResult quick = run_cli("selftest --level quick");
  CHECK(quick.exit_code == 0);
  CHECK(quick.output.find("\"pass\": true") != std::string::npos);
}
