// Run configuration and report assembly for the verification CLI: per-case
// check execution, collected verdicts, and structured (JSON) or markdown
// rendering. Structured reports are deterministic byte for byte for a fixed
// configuration, so nothing time- or machine-dependent goes in.

#ifndef WGDR_RUN_REPORT_HPP
#define WGDR_RUN_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wgdr/verify.hpp"

namespace wgdr::cli {

struct RunConfig {
  std::string element_spec = "tet";  ///< builtin name (tet|cube|prism) or a file path
  int family = 1;                    ///< 1 = equal order, 2 = descending
  int degree_lo = -1;                ///< -1: default for the family
  int degree_hi = -1;
  std::vector<std::string> checks = {"all"};
  std::string out_path;              ///< empty: print to stdout
  std::string format = "structured";
  std::uint64_t seed = 20250808;
  int quad_boost = 0;
  bool dump_matrices = false;
  int polynomial_trials = 100;
};

struct CommutativitySummary {
  int polynomial_trials = 0;
  double max_polynomial_residual = 0.0;
  double polynomial_tolerance = 1e-10;
  double transcendental_residual = 0.0;
  double transcendental_tolerance = 1e-8;
  std::uint64_t seed = 0;
  bool pass = false;
};

struct DimsSummary {
  int dim_slot0 = 0;
  std::array<int, 4> dims{};
  long long alternating_sum = 0;
  bool asserted = false;  ///< verdict issued only on tetrahedra and boxes
  bool pass = true;
};

struct DumpedMatrices {
  Eigen::MatrixXd grad, curl, div;
};

struct CaseResult {
  Family family = Family::Equal;
  int k = 0;
  std::optional<ComplexCheck> complex_check;
  std::optional<CommutativitySummary> commutativity;
  std::optional<DimsSummary> dims;
  std::optional<VerificationReport> exactness;
  std::optional<DumpedMatrices> matrices;
};

struct RunResult {
  RunConfig config;
  std::string element_label;
  int num_vertices = 0, num_edges = 0, num_faces = 0;
  double volume = 0.0, h = 0.0;
  std::vector<CaseResult> cases;
  std::vector<std::string> warnings;

  int verdicts_total = 0;
  int verdicts_passed = 0;
  bool pass() const { return verdicts_passed == verdicts_total; }
};

/// Resolve the element source (builtin name or file path).
PolyElement resolve_element(const std::string& source);

/// Run every requested check over the degree range.
RunResult run_checks(const PolyElement& el, const RunConfig& config);

std::string render_structured(const RunResult& result);
std::string render_markdown(const RunResult& result);

/// One human-readable line per case and check, plus the final verdict line.
std::string render_summary(const RunResult& result);

}  // namespace wgdr::cli

#endif
