#include "run_report.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include <json.hpp>

#include "wgdr/element_io.hpp"
#include "wgdr/errors.hpp"

namespace wgdr::cli {

using json = nlohmann::ordered_json;

PolyElement resolve_element(const std::string& source) {
  if (source == "tet") return PolyElement::reference_tetrahedron();
  if (source == "cube") return PolyElement::unit_cube();
  if (source == "prism") return PolyElement::right_triangular_prism();
  return load_element(source);
}

namespace {

bool wants(const RunConfig& config, const std::string& check) {
  for (const std::string& c : config.checks)
    if (c == "all" || c == check) return true;
  return false;
}

CommutativitySummary run_commutativity(const PolyElement& el, Family family, int k,
                                       const RunConfig& config) {
  CommutativitySummary summary;
  summary.seed = config.seed;
  summary.polynomial_trials = config.polynomial_trials;

  const CommutativityHarness harness(el, family, k, config.quad_boost);
  std::mt19937_64 rng(config.seed);
  for (int trial = 0; trial < config.polynomial_trials; ++trial) {
    const CommutativityResiduals r = harness.run(polynomial_trial(k + 1, rng));
    summary.max_polynomial_residual = std::max(summary.max_polynomial_residual, r.max());
  }
  summary.transcendental_residual = harness.run(transcendental_trial()).max();
  summary.pass = summary.max_polynomial_residual <= summary.polynomial_tolerance &&
                 summary.transcendental_residual <= summary.transcendental_tolerance;
  return summary;
}

void count_verdicts(RunResult& result) {
  for (const CaseResult& c : result.cases) {
    if (c.complex_check) {
      result.verdicts_total += 2;
      result.verdicts_passed += (c.complex_check->curl_grad <= c.complex_check->tolerance);
      result.verdicts_passed += (c.complex_check->div_curl <= c.complex_check->tolerance);
    }
    if (c.commutativity) {
      result.verdicts_total += 2;
      result.verdicts_passed +=
          (c.commutativity->max_polynomial_residual <= c.commutativity->polynomial_tolerance);
      result.verdicts_passed +=
          (c.commutativity->transcendental_residual <= c.commutativity->transcendental_tolerance);
    }
    if (c.dims && c.dims->asserted) {
      result.verdicts_total += 1;
      result.verdicts_passed += c.dims->pass;
    }
    if (c.exactness && !c.exactness->exploratory) {
      for (const Verdict& v : c.exactness->verdicts) {
        result.verdicts_total += 1;
        result.verdicts_passed += v.pass;
      }
    }
  }
}

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json verdict_to_json(const Verdict& v) {
  json out;
  out["name"] = v.name;
  out["pass"] = v.pass;
  out["measured"] = v.measured;
  out["tolerance"] = v.tolerance;
  if (!v.detail.empty()) out["detail"] = v.detail;
  return out;
}

}  // namespace

RunResult run_checks(const PolyElement& el, const RunConfig& config) {
  RunResult result;
  result.config = config;
  result.num_vertices = el.num_vertices();
  result.num_edges = el.num_edges();
  result.num_faces = el.num_faces();
  result.volume = el.volume();
  result.h = el.diameter();

  const IwPattern pattern = classify_iw_pattern(el);
  const bool proven_element = pattern.kind != IwPattern::Kind::Unsupported;
  switch (pattern.kind) {
    case IwPattern::Kind::Tetrahedron:
      result.element_label = "tetrahedron";
      break;
    case IwPattern::Kind::Box:
      result.element_label = "box";
      break;
    default:
      result.element_label = "polyhedron";
      break;
  }

  const Family family = config.family == 1 ? Family::Equal : Family::Descending;
  for (int k = config.degree_lo; k <= config.degree_hi; ++k) {
    CaseResult cr;
    cr.family = family;
    cr.k = k;

    if (wants(config, "complex")) cr.complex_check = check_complex(el, family, k);
    if (wants(config, "commute")) cr.commutativity = run_commutativity(el, family, k, config);
    if (wants(config, "dims")) {
      DimsSummary dims;
      dims.dim_slot0 = el.num_vertices();
      for (int slot = 1; slot <= 4; ++slot)
        dims.dims[slot - 1] = space_dim(make_space(family, slot, k), el);
      dims.alternating_sum = dimension_alternating_sum(el, family, k, dims.dim_slot0);
      // the zero alternating sum is an equal-order identity; for the
      // descending family the value is reported without a verdict
      dims.asserted = proven_element && family == Family::Equal;
      dims.pass = !dims.asserted || dims.alternating_sum == 0;
      cr.dims = dims;
    }
    if (wants(config, "exactness")) {
      cr.exactness = exactness_report(el, family, k);
      if (cr.exactness->exploratory)
        result.warnings.push_back("exactness at " + std::string(family_name(family)) + " k=" +
                                  std::to_string(k) +
                                  " is outside the proven configurations; ranks reported "
                                  "without verdicts");
    }
    if (config.dump_matrices) {
      DumpedMatrices m;
      m.grad = composite_gradient(el, family, k).entries;
      m.curl = composite_curl(el, family, k).entries;
      m.div = weak_divergence(el, family, k).entries;
      cr.matrices = std::move(m);
    }

    result.cases.push_back(std::move(cr));
  }

  count_verdicts(result);
  return result;
}

std::string render_structured(const RunResult& result) {
  json doc;
  doc["tool"] = "wg-derham-verify";

  json config;
  config["element"] = result.config.element_spec;
  config["complex"] = result.config.family;
  config["degree_lo"] = result.config.degree_lo;
  config["degree_hi"] = result.config.degree_hi;
  config["checks"] = result.config.checks;
  config["format"] = result.config.format;
  config["seed"] = result.config.seed;
  config["quad_boost"] = result.config.quad_boost;
  config["dump_matrices"] = result.config.dump_matrices;
  config["polynomial_trials"] = result.config.polynomial_trials;
  doc["config"] = std::move(config);

  json element;
  element["label"] = result.element_label;
  element["vertices"] = result.num_vertices;
  element["edges"] = result.num_edges;
  element["faces"] = result.num_faces;
  element["volume"] = result.volume;
  element["h"] = result.h;
  doc["element"] = std::move(element);

  doc["cases"] = json::array();
  for (const CaseResult& c : result.cases) {
    json jc;
    jc["family"] = family_name(c.family);
    jc["k"] = c.k;

    if (c.complex_check) {
      json j;
      j["curl_grad_residual"] = c.complex_check->curl_grad;
      j["div_curl_residual"] = c.complex_check->div_curl;
      j["tolerance"] = c.complex_check->tolerance;
      j["pass"] = c.complex_check->pass;
      jc["complex"] = std::move(j);
    }
    if (c.commutativity) {
      const CommutativitySummary& s = *c.commutativity;
      json j;
      j["polynomial_trials"] = s.polynomial_trials;
      j["max_polynomial_residual"] = s.max_polynomial_residual;
      j["polynomial_tolerance"] = s.polynomial_tolerance;
      j["transcendental_residual"] = s.transcendental_residual;
      j["transcendental_tolerance"] = s.transcendental_tolerance;
      j["seed"] = s.seed;
      j["pass"] = s.pass;
      jc["commutativity"] = std::move(j);
    }
    if (c.dims) {
      json j;
      j["dim_slot0"] = c.dims->dim_slot0;
      j["dims"] = c.dims->dims;
      j["alternating_sum"] = c.dims->alternating_sum;
      j["asserted"] = c.dims->asserted;
      j["pass"] = c.dims->pass;
      jc["dims"] = std::move(j);
    }
    if (c.exactness) {
      const VerificationReport& r = *c.exactness;
      json j;
      j["element"] = r.element_label;
      j["exploratory"] = r.exploratory;
      if (!r.note.empty()) j["note"] = r.note;
      j["space_dims"] = r.space_dims;
      j["dim_slot0"] = r.dim_slot0;
      j["alternating_sum"] = r.alternating_sum;
      j["shapes"] = {{"grad", {r.shapes[0][0], r.shapes[0][1]}},
                     {"curl", {r.shapes[1][0], r.shapes[1][1]}},
                     {"div", {r.shapes[2][0], r.shapes[2][1]}}};
      j["ranks"] = {{"grad", r.ranks[0]}, {"curl", r.ranks[1]}, {"div", r.ranks[2]}};
      j["nullities"] = {{"grad", r.nullities[0]}, {"curl", r.nullities[1]}, {"div", r.nullities[2]}};
      j["svd_threshold"] = r.svd_eps;
      j["ranks_stable"] = r.ranks_stable;
      j["verdicts"] = json::array();
      for (const Verdict& v : r.verdicts) j["verdicts"].push_back(verdict_to_json(v));
      j["kernel_notes"] = r.kernel_notes;
      jc["exactness"] = std::move(j);
    }
    if (c.matrices) {
      json j;
      j["grad"] = matrix_to_json(c.matrices->grad);
      j["curl"] = matrix_to_json(c.matrices->curl);
      j["div"] = matrix_to_json(c.matrices->div);
      jc["matrices"] = std::move(j);
    }
    doc["cases"].push_back(std::move(jc));
  }

  doc["warnings"] = result.warnings;
  json verdicts;
  verdicts["total"] = result.verdicts_total;
  verdicts["passed"] = result.verdicts_passed;
  verdicts["pass"] = result.pass();
  doc["verdicts"] = std::move(verdicts);

  return doc.dump(2) + "\n";
}

namespace {

const char* pass_str(bool pass) { return pass ? "pass" : "FAIL"; }

}  // namespace

std::string render_markdown(const RunResult& result) {
  std::ostringstream out;
  out << "# Weak Galerkin de Rham verification\n\n";
  out << "Element: " << result.element_label << " (" << result.num_vertices << " vertices, "
      << result.num_edges << " edges, " << result.num_faces << " faces), volume "
      << result.volume << ", h " << result.h << "\n\n";
  out << "Family: " << (result.config.family == 1 ? "equal order" : "descending order")
      << ", seed " << result.config.seed << "\n\n";

  for (const CaseResult& c : result.cases) {
    out << "## " << family_name(c.family) << " family, k = " << c.k << "\n\n";
    if (c.complex_check) {
      out << "| complex check | residual | tolerance | verdict |\n";
      out << "|---|---|---|---|\n";
      out << "| curl o grad | " << c.complex_check->curl_grad << " | "
          << c.complex_check->tolerance << " | "
          << pass_str(c.complex_check->curl_grad <= c.complex_check->tolerance) << " |\n";
      out << "| div o curl | " << c.complex_check->div_curl << " | " << c.complex_check->tolerance
          << " | " << pass_str(c.complex_check->div_curl <= c.complex_check->tolerance)
          << " |\n\n";
    }
    if (c.commutativity) {
      const CommutativitySummary& s = *c.commutativity;
      out << "| commuting diagram | residual | tolerance | verdict |\n";
      out << "|---|---|---|---|\n";
      out << "| " << s.polynomial_trials << " random polynomial trials | "
          << s.max_polynomial_residual << " | " << s.polynomial_tolerance << " | "
          << pass_str(s.max_polynomial_residual <= s.polynomial_tolerance) << " |\n";
      out << "| transcendental triple | " << s.transcendental_residual << " | "
          << s.transcendental_tolerance << " | "
          << pass_str(s.transcendental_residual <= s.transcendental_tolerance) << " |\n\n";
    }
    if (c.dims) {
      out << "Space dimensions (slot 0..4): " << c.dims->dim_slot0;
      for (int d : c.dims->dims) out << ", " << d;
      out << "; alternating sum " << c.dims->alternating_sum
          << (c.dims->asserted ? (c.dims->pass ? " (pass)" : " (FAIL)") : " (exploratory)")
          << "\n\n";
    }
    if (c.exactness) {
      const VerificationReport& r = *c.exactness;
      out << "Exactness: ranks (grad, curl, div) = (" << r.ranks[0] << ", " << r.ranks[1] << ", "
          << r.ranks[2] << "), nullities = (" << r.nullities[0] << ", " << r.nullities[1] << ", "
          << r.nullities[2] << ")\n\n";
      if (r.exploratory) {
        out << "_" << r.note << "_\n\n";
      } else {
        out << "| verdict | measured | tolerance | result |\n";
        out << "|---|---|---|---|\n";
        for (const Verdict& v : r.verdicts)
          out << "| " << v.name << " | " << v.measured << " | " << v.tolerance << " | "
              << pass_str(v.pass) << " |\n";
        out << "\n";
      }
    }
  }

  for (const std::string& w : result.warnings) out << "> warning: " << w << "\n";
  out << "\nVerdicts: " << result.verdicts_passed << "/" << result.verdicts_total << " passed -> "
      << (result.pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string render_summary(const RunResult& result) {
  std::ostringstream out;
  for (const CaseResult& c : result.cases) {
    const std::string head =
        std::string(family_name(c.family)) + " k=" + std::to_string(c.k) + " ";
    if (c.complex_check)
      out << "[" << pass_str(c.complex_check->pass) << "] " << head
          << "complex: curl.grad=" << c.complex_check->curl_grad
          << " div.curl=" << c.complex_check->div_curl << "\n";
    if (c.commutativity)
      out << "[" << pass_str(c.commutativity->pass) << "] " << head
          << "commute: poly=" << c.commutativity->max_polynomial_residual
          << " transcendental=" << c.commutativity->transcendental_residual << "\n";
    if (c.dims)
      out << "[" << (c.dims->asserted ? pass_str(c.dims->pass) : "info") << "] " << head
          << "dims: alternating_sum=" << c.dims->alternating_sum << "\n";
    if (c.exactness) {
      if (c.exactness->exploratory)
        out << "[info] " << head << "exactness: exploratory ranks (" << c.exactness->ranks[0]
            << ", " << c.exactness->ranks[1] << ", " << c.exactness->ranks[2] << ")\n";
      else
        out << "[" << pass_str(c.exactness->all_pass()) << "] " << head << "exactness: ranks ("
            << c.exactness->ranks[0] << ", " << c.exactness->ranks[1] << ", "
            << c.exactness->ranks[2] << "), " << c.exactness->verdicts.size() << " verdicts\n";
    }
  }
  out << (result.pass() ? "PASS" : "FAIL") << ": " << result.verdicts_passed << "/"
      << result.verdicts_total << " verdicts\n";
  return out.str();
}

}  // namespace wgdr::cli
