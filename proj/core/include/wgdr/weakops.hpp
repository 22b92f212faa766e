// Assembly of the local weak differential operators as Gram-solved linear
// maps between WG coefficient spaces: the volume/face/edge weak gradients,
// the volume/face weak curls, the weak divergence, and the composite
// operators obtained by stacking the per-entity blocks.

#ifndef WGDR_WEAKOPS_HPP
#define WGDR_WEAKOPS_HPP

#include "wgdr/wgspaces.hpp"

namespace wgdr {

/// Dense matrix realizing a weak operator between two WG coefficient spaces.
/// Rows index codomain DOFs, columns domain DOFs.
struct OperatorMatrix {
  SpaceDescriptor domain;
  SpaceDescriptor codomain;
  Eigen::MatrixXd entries;

  Eigen::Index rows() const { return entries.rows(); }
  Eigen::Index cols() const { return entries.cols(); }
};

/// Symmetric positive-definite Gram solve with a truncated spectral fallback
/// once the condition estimate exceeds 1e12. Throws SingularGram when the
/// matrix is not positive definite.
class GramSolver {
 public:
  explicit GramSolver(const Eigen::MatrixXd& gram);

  Eigen::MatrixXd solve(const Eigen::MatrixXd& rhs) const;
  double condition() const { return condition_; }

 private:
  Eigen::LLT<Eigen::MatrixXd> llt_;
  Eigen::MatrixXd spectral_basis_;
  Eigen::VectorXd spectral_inverse_;
  double condition_ = 0.0;
  bool truncated_ = false;
};

// Entity blocks of the weak operators. Rows span the named codomain block
// (component-major for vector data); columns span the full domain space, so
// the blocks stack directly into the composite matrices.

/// Volume weak gradient: (g, phi)_T = -(v_0, div phi)_T + (v_f, phi.n)_dT.
Eigen::MatrixXd weak_gradient_volume(const PolyElement& el, Family family, int k);

/// Surface weak gradient on one face:
/// (g, theta x n_f)_f = -(v_f, curl theta . n_f)_f + (v_e, theta . t_df)_df.
Eigen::MatrixXd weak_gradient_face(const PolyElement& el, int face, Family family, int k);

/// Edge weak gradient (directional derivative):
/// (g, phi t_e)_e = -(v_e, phi' )_e + (v_n, phi t_e.n)_de.
Eigen::MatrixXd weak_gradient_edge(const PolyElement& el, int edge, Family family, int k);

/// Volume weak curl: (c, theta)_T = (u_0, curl theta)_T + (u_f, theta x n)_dT.
Eigen::MatrixXd weak_curl_volume(const PolyElement& el, Family family, int k);

/// Surface weak curl on one face:
/// (c, tau n_f)_f = (u_f, grad tau x n_f)_f + (u_e, tau t_df)_df.
Eigen::MatrixXd weak_curl_face(const PolyElement& el, int face, Family family, int k);

/// Weak divergence: (d, tau)_T = -(w_0, grad tau)_T + (w_f, tau n)_dT.
OperatorMatrix weak_divergence(const PolyElement& el, Family family, int k);

/// Full slot-1 -> slot-2 weak gradient, entity blocks stacked per dof_layout.
OperatorMatrix composite_gradient(const PolyElement& el, Family family, int k);

/// Full slot-2 -> slot-3 weak curl.
OperatorMatrix composite_curl(const PolyElement& el, Family family, int k);

/// Apply an operator to a coefficient vector; descriptors must match.
WgCoefficients apply(const OperatorMatrix& op, const PolyElement& el, const WgCoefficients& v);

}  // namespace wgdr

#endif
