// End-to-end tests of the verification CLI: exit codes, report content,
// determinism, and the element file round trip. The binary path arrives as
// the first non-flag argument (wired up by CTest).

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "wgdr/element_io.hpp"

namespace {

std::string g_binary = "tools/verify";
std::filesystem::path g_workdir;

int run_cli(const std::string& args) {
  const std::string cmd = g_binary + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("exactness run on the tetrahedron reports the expected ranks") {
  const auto out = g_workdir / "tet_exactness.json";
  const int rc = run_cli("--element tet --complex 1 --degree 0 --checks exactness --out " +
                         out.string());
  CHECK(rc == 0);

  const nlohmann::json doc = nlohmann::json::parse(slurp(out));
  const auto& ranks = doc["cases"][0]["exactness"]["ranks"];
  CHECK(ranks["grad"] == 11);
  CHECK(ranks["curl"] == 6);
  CHECK(ranks["div"] == 1);
  CHECK(doc["verdicts"]["pass"] == true);
}

TEST_CASE("family 2 with k < 3 is rejected with exit code 2") {
  CHECK(run_cli("--element cube --complex 2 --degree 2") == 2);
}

TEST_CASE("unknown flags and bad element files exit with code 2") {
  CHECK(run_cli("--no-such-flag") == 2);
  const auto bad = g_workdir / "bad_element.json";
  std::ofstream(bad) << "{\"vertices\": \"oops\"}";
  CHECK(run_cli("--element " + bad.string() + " --degree 0") == 2);
}

TEST_CASE("structured reports are byte-identical for identical configurations") {
  const auto a = g_workdir / "det_a.json";
  const auto b = g_workdir / "det_b.json";
  const std::string args =
      "--element tet --complex 1 --degree 0..1 --checks complex,commute --trials 10 --seed 99 ";
  CHECK(run_cli(args + "--out " + a.string()) == 0);
  CHECK(run_cli(args + "--out " + b.string()) == 0);
  CHECK(slurp(a) == slurp(b));
}

TEST_CASE("an exported element file reproduces the builtin results") {
  const auto element_path = g_workdir / "prism.json";
  wgdr::save_element(wgdr::PolyElement::right_triangular_prism(), element_path.string());

  const auto a = g_workdir / "roundtrip_builtin.json";
  const auto b = g_workdir / "roundtrip_file.json";
  const std::string tail =
      " --complex 1 --degree 0 --checks complex,dims,exactness --out ";
  CHECK(run_cli("--element prism" + tail + a.string()) == 0);
  CHECK(run_cli("--element " + element_path.string() + tail + b.string()) == 0);

  const nlohmann::json da = nlohmann::json::parse(slurp(a));
  const nlohmann::json db = nlohmann::json::parse(slurp(b));
  CHECK(da["cases"].dump() == db["cases"].dump());
  CHECK(da["element"].dump() == db["element"].dump());
}

TEST_CASE("descending-family alternating sums are informational, not verdicts") {
  const auto out = g_workdir / "descending_dims.json";
  CHECK(run_cli("--element cube --complex 2 --degree 3 --checks dims --out " + out.string()) ==
        0);
  const nlohmann::json doc = nlohmann::json::parse(slurp(out));
  CHECK(doc["cases"][0]["dims"]["asserted"] == false);
  CHECK(doc["cases"][0]["dims"]["alternating_sum"] == -19);
  CHECK(doc["verdicts"]["total"] == 0);
}

TEST_CASE("markdown format renders") {
  const auto out = g_workdir / "report.md";
  CHECK(run_cli("--element cube --complex 1 --degree 0 --checks exactness --format markdown "
                "--out " +
                out.string()) == 0);
  const std::string text = slurp(out);
  CHECK(text.find("## equal family, k = 0") != std::string::npos);
  CHECK(text.find("PASS") != std::string::npos);
}

TEST_CASE("matrices appear only under --dump-matrices") {
  const auto plain = g_workdir / "plain.json";
  const auto dumped = g_workdir / "dumped.json";
  CHECK(run_cli("--element tet --degree 0 --checks complex --out " + plain.string()) == 0);
  CHECK(run_cli("--element tet --degree 0 --checks complex --dump-matrices --out " +
                dumped.string()) == 0);
  const nlohmann::json dp = nlohmann::json::parse(slurp(plain));
  const nlohmann::json dd = nlohmann::json::parse(slurp(dumped));
  CHECK(!dp["cases"][0].contains("matrices"));
  REQUIRE(dd["cases"][0].contains("matrices"));
  CHECK(dd["cases"][0]["matrices"]["grad"].size() == 17);
}

}  // TEST_SUITE

int main(int argc, char** argv) {
  doctest::Context context;
  if (argc > 1 && argv[1][0] != '-') {
    g_binary = argv[1];
    context.applyCommandLine(argc - 1, argv + 1);
  } else {
    context.applyCommandLine(argc, argv);
  }

  g_workdir = std::filesystem::temp_directory_path() / "wgdr_cli_tests";
  std::filesystem::create_directories(g_workdir);

  return context.run();
}
