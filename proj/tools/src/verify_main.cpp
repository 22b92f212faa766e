// Command-line front end: load an element, run the requested verification
// suites over a degree range, emit a structured or markdown report.
//
// Exit codes: 0 all requested verdicts pass, 1 verification failure,
// 2 invalid input (flags, element file, degree/family combination).

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "run_report.hpp"
#include "wgdr/errors.hpp"

namespace {

// "k" or "a..b"
bool parse_degree_range(const std::string& text, int& lo, int& hi) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      lo = hi = std::stoi(text, &used);
      return used == text.size();
    }
    lo = std::stoi(text.substr(0, dots), &used);
    if (used != dots) return false;
    const std::string tail = text.substr(dots + 2);
    hi = std::stoi(tail, &used);
    return used == tail.size();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-element weak Galerkin de Rham complex verifier"};

  wgdr::cli::RunConfig config;
  std::string degree_text;

  app.add_option("--element", config.element_spec,
                 "builtin element (tet|cube|prism) or path to an element file")
      ->capture_default_str();
  app.add_option("--complex", config.family, "complex family: 1 = equal order, 2 = descending")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  app.add_option("--degree", degree_text, "degree k or range a..b (default 0, family 2: 3)");
  app.add_option("--checks", config.checks,
                 "comma list of complex,commute,dims,exactness or all")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--out", config.out_path, "report output path (default: stdout)");
  app.add_option("--format", config.format, "report format")
      ->check(CLI::IsMember({"structured", "markdown"}))
      ->capture_default_str();
  app.add_option("--seed", config.seed, "seed for the random trial fields")
      ->capture_default_str();
  app.add_option("--quad-boost", config.quad_boost,
                 "extra quadrature exactness degree on top of the defaults")
      ->capture_default_str();
  app.add_flag("--dump-matrices", config.dump_matrices,
               "include the operator matrices in the structured report");
  app.add_option("--trials", config.polynomial_trials,
                 "random polynomial trials per commutativity case")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  // degree defaults and family validation
  if (degree_text.empty()) {
    config.degree_lo = config.degree_hi = (config.family == 2) ? 3 : 0;
  } else if (!parse_degree_range(degree_text, config.degree_lo, config.degree_hi)) {
    std::cerr << "error: cannot parse --degree '" << degree_text << "' (use k or a..b)\n";
    return 2;
  }
  if (config.degree_lo > config.degree_hi) {
    std::cerr << "error: empty degree range\n";
    return 2;
  }
  const int min_degree = (config.family == 2) ? 3 : 0;
  if (config.degree_lo < min_degree) {
    if (config.family == 2)
      std::cerr << "error: family 2 requires k >= 3\n";
    else
      std::cerr << "error: family 1 requires k >= 0\n";
    return 2;
  }
  for (const std::string& c : config.checks) {
    if (c != "all" && c != "complex" && c != "commute" && c != "dims" && c != "exactness") {
      std::cerr << "error: unknown check '" << c << "'\n";
      return 2;
    }
  }

  try {
    const wgdr::PolyElement element = wgdr::cli::resolve_element(config.element_spec);
    const wgdr::cli::RunResult result = wgdr::cli::run_checks(element, config);

    std::cout << wgdr::cli::render_summary(result);
    for (const std::string& w : result.warnings) std::cerr << "warning: " << w << "\n";

    const std::string report = config.format == "markdown"
                                   ? wgdr::cli::render_markdown(result)
                                   : wgdr::cli::render_structured(result);
    if (config.out_path.empty()) {
      std::cout << report;
    } else {
      std::ofstream out(config.out_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write report to " << config.out_path << "\n";
        return 2;
      }
      out << report;
    }
    return result.pass() ? 0 : 1;
  } catch (const wgdr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
