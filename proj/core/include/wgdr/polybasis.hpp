// Scaled monomial bases P_k on volumes, faces (in face-local coordinates) and
// edges (arc-length coordinate), with exact analytic derivatives, plus the two
// intrinsic surface-derivative expressions used by the weak operators.

#ifndef WGDR_POLYBASIS_HPP
#define WGDR_POLYBASIS_HPP

#include <array>
#include <vector>

#include "wgdr/geometry.hpp"

namespace wgdr {

/// dim P_k in d variables, i.e. C(k+d, d).
int dim_pk(int d, int k);

/// Monomial basis x -> ((x - center)/scale)^alpha on a d-dimensional entity,
/// d in {1,2,3}. Multi-indices are ordered by total degree, then
/// lexicographically with the first coordinate strongest (1, x, y, z, x^2,
/// xy, xz, y^2, ...). Points are passed in the entity's local coordinates,
/// padded with zeros beyond d.
class ScalarBasis {
 public:
  ScalarBasis(int dim, int degree, Vec3 center, double scale);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(powers_.size()); }
  const std::vector<std::array<int, 3>>& powers() const { return powers_; }
  const Vec3& center() const { return center_; }
  double scale() const { return scale_; }

  /// Values of all basis functions at a local point.
  Eigen::VectorXd eval(const Vec3& local) const;

  /// Exact partial derivatives: row c holds d/dx_c of every basis function.
  Eigen::MatrixXd grad(const Vec3& local) const;

 private:
  int dim_;
  int degree_;
  Vec3 center_;
  double scale_;
  std::vector<std::array<int, 3>> powers_;
};

/// P_degree(T), centered at the element centroid, scaled by h/2.
ScalarBasis volume_basis(const PolyElement& el, int degree);

/// P_degree(f) in face coordinates (s1, s2) through the area centroid,
/// scaled by half the face diameter.
ScalarBasis face_basis(const PolyElement& el, int face, int degree);

/// P_degree(e) in the arc-length coordinate about the edge midpoint,
/// scaled by the half length.
ScalarBasis edge_basis(const PolyElement& el, int edge, int degree);

/// Scalar surface curl of the tangential field theta = theta1 t1 + theta2 t2:
/// d(theta2)/ds1 - d(theta1)/ds2. Coefficients are in `fb`.
double surface_curl_scalar(const ScalarBasis& fb, const Eigen::VectorXd& theta1,
                           const Eigen::VectorXd& theta2, const Vec2& local);

/// The rotated surface gradient grad(tau) x n_f
/// = -(d tau/ds1) t2 + (d tau/ds2) t1, returned in global coordinates.
Vec3 rotated_surface_gradient(const FaceGeom& frame, const ScalarBasis& fb,
                              const Eigen::VectorXd& tau, const Vec2& local);

}  // namespace wgdr

#endif
