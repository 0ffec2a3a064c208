#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

// End-to-end tests of the command-line binary; the path arrives via the
// BOTT_CLI environment variable set by ctest.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string cli_path() {
  const char* path = std::getenv("BOTT_CLI");
  REQUIRE_MESSAGE(path != nullptr, "BOTT_CLI must point at the binary");
  return path;
}

RunResult run_cli(const std::string& args) {
  RunResult result;
  std::string err_file = "cli_stderr.tmp";
  std::string cmd = cli_path() + " " + args + " 2>" + err_file;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.out.append(buffer.data(), n);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream err(err_file);
  result.err.assign(std::istreambuf_iterator<char>(err), std::istreambuf_iterator<char>());
  std::remove(err_file.c_str());
  return result;
}

} // namespace

TEST_CASE("collineations command emits the expected JSON") {
  RunResult r = run_cli("collineations --group G3 --dist b1 --params alpha=1,beta=1,gamma=1");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("dim") == 1);
  REQUIRE(j.at("basis").size() == 1);
  CHECK(j.at("basis").at(0) == nlohmann::json::array({"0", "0", "1"}));
}

TEST_CASE("ricci command: G5/B1 is Ricci-flat") {
  RunResult r =
      run_cli("ricci --group G5 --dist b1 --params alpha=1,beta=2,gamma=-6,delta=3");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("symmetric") == true);
  for (const auto& row : j.at("m"))
    for (const auto& entry : row) CHECK(entry == "0");
}

TEST_CASE("ricci --rho exposes the asymmetry") {
  RunResult r = run_cli("ricci --group G1 --dist b1 --params alpha=1,beta=1 --rho");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("symmetric") == false);
  CHECK(j.at("m").at(1).at(2) != j.at("m").at(2).at(1));
}

TEST_CASE("connection command round-trips through the documented schema") {
  RunResult r = run_cli("connection --group G3 --dist b1 --params alpha=1,beta=1,gamma=1");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  // nabla_e3 e1 = beta e2
  CHECK(j.at("gamma").at(2).at(0) == nlohmann::json::array({"0", "1", "0"}));
}

TEST_CASE("jacobi command validates groups") {
  RunResult r = run_cli("jacobi --group G4 --params alpha=1,beta=2,eta=1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("holds") != std::string::npos);
}

TEST_CASE("malformed input exits 2 with empty stdout") {
  SUBCASE("float-looking rational") {
    RunResult r = run_cli("ricci --group G1 --dist b1 --params alpha=0.5,beta=1");
    CHECK(r.exit_code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("1/2") != std::string::npos); // hint to write a fraction
  }
  SUBCASE("unknown group") {
    RunResult r = run_cli("ricci --group G9 --dist b1 --params alpha=1,beta=1");
    CHECK(r.exit_code == 2);
    CHECK(r.out.empty());
    CHECK(!r.err.empty());
  }
  SUBCASE("constraint violation") {
    RunResult r = run_cli("collineations --group G1 --dist b1 --params alpha=0,beta=1");
    CHECK(r.exit_code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("alpha != 0") != std::string::npos);
  }
  SUBCASE("unknown flag") {
    RunResult r = run_cli("ricci --group G1 --dist b1 --params alpha=1,beta=1 --bogus");
    CHECK(r.exit_code == 2);
    CHECK(r.out.empty());
  }
  SUBCASE("missing distribution") {
    RunResult r = run_cli("ricci --group G1 --params alpha=1,beta=1");
    CHECK(r.exit_code == 2);
    CHECK(r.out.empty());
  }
}

TEST_CASE("custom algebra files") {
  const char* path = "cli_algebra.tmp.json";
  {
    std::ofstream out(path);
    // abelian algebra
    out << R"({"c": [[["0","0","0"],["0","0","0"],["0","0","0"]],)"
        << R"([["0","0","0"],["0","0","0"],["0","0","0"]],)"
        << R"([["0","0","0"],["0","0","0"],["0","0","0"]]]})";
  }
  RunResult r = run_cli(std::string("collineations --algebra ") + path + " --dist b2");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("dim") == 3);

  {
    std::ofstream out(path);
    // breaks antisymmetry: c[1][2] and c[2][1] disagree
    out << R"({"c": [[["0","0","0"],["1","0","0"],["0","0","0"]],)"
        << R"([["1","0","0"],["0","0","0"],["0","0","0"]],)"
        << R"([["0","0","0"],["0","0","0"],["0","0","0"]]]})";
  }
  RunResult bad = run_cli(std::string("jacobi --algebra ") + path);
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.empty());
  std::remove(path);
}

TEST_CASE("verify subcommand determinism and filtering") {
  RunResult a = run_cli("verify --seed 42 --samples 3 --case G6.B1.case3");
  RunResult b = run_cli("verify --seed 42 --samples 3 --case G6.B1.case3");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out); // byte-identical
  auto j = nlohmann::json::parse(a.out);
  REQUIRE(j.at("cases").size() == 1);
  CHECK(j.at("cases").at(0).at("case_id") == "G6.B1.case3");
  CHECK(j.at("all_pass") == true);
}

TEST_CASE("verify table mode names known discrepancies") {
  RunResult r = run_cli("verify --seed 42 --samples 3 --case G5.B2.case3 --format table");
  CHECK(r.exit_code == 0); // flagged, not failed
  CHECK(r.out.find("known-discrepancy") != std::string::npos);
  CHECK(r.out.find("G5.B2.case3.basis") != std::string::npos);
}

TEST_CASE("verify --list prints catalog ids") {
  RunResult r = run_cli("verify --list");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("G1.B1.main\n") != std::string::npos);
  CHECK(r.out.find("G7.B3.tables\n") != std::string::npos);
}

TEST_CASE("output goes to a file when requested") {
  const char* path = "cli_out.tmp.json";
  RunResult r = run_cli(std::string("collineations --group G3 --dist b1 ") +
                        "--params alpha=1,beta=1,gamma=1 --output " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  nlohmann::json j = nlohmann::json::parse(in);
  CHECK(j.at("dim") == 1);
  std::remove(path);
}
