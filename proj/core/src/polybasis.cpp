#include "wgdr/polybasis.hpp"

#include <cassert>
#include <string>

#include "wgdr/errors.hpp"

namespace wgdr {

int dim_pk(int d, int k) {
  if (k < 0) return 0;
  switch (d) {
    case 1:
      return k + 1;
    case 2:
      return (k + 1) * (k + 2) / 2;
    case 3:
      return (k + 1) * (k + 2) * (k + 3) / 6;
    default:
      throw DegreeOutOfRange("dim_pk: dimension must be 1, 2 or 3");
  }
}

ScalarBasis::ScalarBasis(int dim, int degree, Vec3 center, double scale)
    : dim_(dim), degree_(degree), center_(std::move(center)), scale_(scale) {
  if (dim < 1 || dim > 3) throw DegreeOutOfRange("ScalarBasis: dimension must be 1, 2 or 3");
  if (degree < 0) throw DegreeOutOfRange("ScalarBasis: degree must be >= 0");
  if (!(scale > 0.0)) throw DegreeOutOfRange("ScalarBasis: scale must be positive");

  powers_.reserve(dim_pk(dim, degree));
  for (int total = 0; total <= degree; ++total) {
    if (dim == 1) {
      powers_.push_back({total, 0, 0});
    } else if (dim == 2) {
      for (int a = total; a >= 0; --a) powers_.push_back({a, total - a, 0});
    } else {
      for (int a = total; a >= 0; --a)
        for (int b = total - a; b >= 0; --b) powers_.push_back({a, b, total - a - b});
    }
  }
  assert(static_cast<int>(powers_.size()) == dim_pk(dim, degree));
}

namespace {

// pow_table(c, j) = xi_c^j for j = 0..degree
inline void fill_pow_table(double xi[3], int degree, int dim,
                           Eigen::Matrix<double, 3, Eigen::Dynamic>& table) {
  table.resize(3, degree + 1);
  for (int c = 0; c < 3; ++c) {
    table(c, 0) = 1.0;
    for (int j = 1; j <= degree; ++j) table(c, j) = (c < dim) ? table(c, j - 1) * xi[c] : 0.0;
  }
}

}  // namespace

Eigen::VectorXd ScalarBasis::eval(const Vec3& local) const {
  double xi[3] = {(local.x() - center_.x()) / scale_, (local.y() - center_.y()) / scale_,
                  (local.z() - center_.z()) / scale_};
  Eigen::Matrix<double, 3, Eigen::Dynamic> pw;
  fill_pow_table(xi, degree_, dim_, pw);

  Eigen::VectorXd out(size());
  for (int i = 0; i < size(); ++i) {
    const auto& a = powers_[i];
    out(i) = pw(0, a[0]) * pw(1, a[1]) * pw(2, a[2]);
  }
  return out;
}

Eigen::MatrixXd ScalarBasis::grad(const Vec3& local) const {
  double xi[3] = {(local.x() - center_.x()) / scale_, (local.y() - center_.y()) / scale_,
                  (local.z() - center_.z()) / scale_};
  Eigen::Matrix<double, 3, Eigen::Dynamic> pw;
  fill_pow_table(xi, degree_, dim_, pw);

  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim_, size());
  for (int i = 0; i < size(); ++i) {
    const auto& a = powers_[i];
    for (int c = 0; c < dim_; ++c) {
      if (a[c] == 0) continue;
      double v = a[c] / scale_;
      for (int b = 0; b < 3; ++b) v *= (b == c) ? pw(b, a[b] - 1) : pw(b, a[b]);
      out(c, i) = v;
    }
  }
  return out;
}

// Half the centroid radius keeps the monomial Gram conditioning below 1e8
// through degree 5 on the reference elements (measured: the full radius
// overshoots 1e9 on the tetrahedron at k = 5).
ScalarBasis volume_basis(const PolyElement& el, int degree) {
  return ScalarBasis(3, degree, el.centroid(), 0.5 * el.diameter());
}

ScalarBasis face_basis(const PolyElement& el, int face, int degree) {
  return ScalarBasis(2, degree, Vec3::Zero(), 0.5 * el.face(face).diameter);
}

ScalarBasis edge_basis(const PolyElement& el, int edge, int degree) {
  return ScalarBasis(1, degree, Vec3::Zero(), 0.5 * el.edge(edge).length);
}

double surface_curl_scalar(const ScalarBasis& fb, const Eigen::VectorXd& theta1,
                           const Eigen::VectorXd& theta2, const Vec2& local) {
  const Eigen::MatrixXd g = fb.grad(Vec3(local.x(), local.y(), 0.0));
  return g.row(0).dot(theta2) - g.row(1).dot(theta1);
}

Vec3 rotated_surface_gradient(const FaceGeom& frame, const ScalarBasis& fb,
                              const Eigen::VectorXd& tau, const Vec2& local) {
  const Eigen::MatrixXd g = fb.grad(Vec3(local.x(), local.y(), 0.0));
  const double ds1 = g.row(0).dot(tau);
  const double ds2 = g.row(1).dot(tau);
  return -ds1 * frame.tangent2 + ds2 * frame.tangent1;
}

}  // namespace wgdr
