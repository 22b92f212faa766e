// Machine-checkable certificates for the structural claims of the WG de Rham
// complexes: complex residuals (curl o grad = 0, div o curl = 0),
// commuting-diagram residuals, dimension identities, and the lowest-order
// exactness analysis via SVD rank, kernel and subspace comparisons.

#ifndef WGDR_VERIFY_HPP
#define WGDR_VERIFY_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wgdr/trialfields.hpp"
#include "wgdr/weakops.hpp"

namespace wgdr {

// ---------------------------------------------------------------------------
// Numerical subspace toolbox
// ---------------------------------------------------------------------------

/// Rank with relative singular-value threshold eps * sigma_max.
int matrix_rank(const Eigen::MatrixXd& m, double eps = 1e-9);

/// Orthonormal kernel basis: right singular vectors with sigma <= eps * sigma_max.
Eigen::MatrixXd kernel_basis(const Eigen::MatrixXd& m, double eps = 1e-9);

/// Orthonormal range basis (left singular vectors above the threshold).
Eigen::MatrixXd range_basis(const Eigen::MatrixXd& m, double eps = 1e-9);

/// max over columns a of ||(I - P_space) a||_2 / ||a||_2.
double containment_residual(const Eigen::MatrixXd& vectors, const Eigen::MatrixXd& space);

/// True when the rank is invariant as the threshold sweeps the decades of
/// [eps_lo, eps_hi].
bool rank_stable(const Eigen::MatrixXd& m, double eps_lo = 1e-11, double eps_hi = 1e-7);

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

/// One verdict, always carrying the tolerance it was judged against.
struct Verdict {
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

/// Residuals of the two compositions, scaled by the factor norms.
struct ComplexCheck {
  double curl_grad = 0.0;  ///< ||Mc*Mg||_inf / (||Mc||_inf ||Mg||_inf + 1)
  double div_curl = 0.0;
  double tolerance = 1e-10;
  bool pass = false;
};

ComplexCheck check_complex(const PolyElement& el, Family family, int k);

/// Commuting-diagram residuals for one trial; each is
/// ||lhs - rhs||_inf / (1 + max(||lhs||_inf, ||rhs||_inf)).
struct CommutativityResiduals {
  double grad = 0.0;
  double curl = 0.0;
  double div = 0.0;
  double max() const { return std::max(grad, std::max(curl, div)); }
};

/// Precomputes the operators and projection tables of one case, then runs
/// trials cheaply. Polynomial trials use the exact 2k+2 quadrature;
/// transcendental trials get the +6 boost, and extra_boost adds on top.
class CommutativityHarness {
 public:
  CommutativityHarness(const PolyElement& el, Family family, int k, int extra_boost = 0);

  CommutativityResiduals run(const TrialFields& trial) const;

 private:
  const PolyElement* el_;
  OperatorMatrix grad_, curl_, div_;
  Projector poly_projector_, transc_projector_;
};

CommutativityResiduals check_commutativity(const PolyElement& el, Family family, int k,
                                           const TrialFields& trial, int extra_boost = 0);

/// dim_slot0 - dim1 + dim2 - dim3 + dim4.
long long dimension_alternating_sum(const PolyElement& el, Family family, int k, int dim_slot0);

/// The structured verification record for one (element, family, k) case.
struct VerificationReport {
  std::string element_label;
  int num_vertices = 0;
  int num_edges = 0;
  int num_faces = 0;
  Family family = Family::Equal;
  int k = 0;

  /// True when the element/degree pair is outside the two proven lowest-order
  /// configurations; ranks are still reported but no verdicts are issued.
  bool exploratory = true;
  std::string note;

  std::array<int, 4> space_dims{};  ///< slots 1..4
  int dim_slot0 = 0;                ///< #V(T)
  long long alternating_sum = 0;

  std::array<std::array<Eigen::Index, 2>, 3> shapes{};  ///< grad, curl, div
  std::array<int, 3> ranks{};
  std::array<int, 3> nullities{};
  bool ranks_stable = false;
  double svd_eps = 1e-9;

  std::vector<Verdict> verdicts;
  std::vector<std::string> kernel_notes;

  bool all_pass() const;
};

/// Rank/kernel/exactness analysis. Full verdicts are issued for k = 0 in the
/// equal-order family on tetrahedra and boxes; everything else is exploratory.
/// With require_verdicts set, an exploratory case throws UnsupportedCase
/// instead of downgrading.
VerificationReport exactness_report(const PolyElement& el, Family family, int k,
                                    double svd_eps = 1e-9, bool require_verdicts = false);

}  // namespace wgdr

#endif
