#include <doctest.h>

#include <random>

#include "../support/test_support.hpp"
#include "wgdr/polybasis.hpp"
#include "wgdr/quadrature.hpp"

using namespace wgdr;
using wgdr::testing::fd_gradient;
using wgdr::testing::monomial_coeffs;

TEST_SUITE("polybasis") {

TEST_CASE("dim_pk") {
  CHECK(dim_pk(3, 0) == 1);
  CHECK(dim_pk(2, 1) == 3);
  CHECK(dim_pk(3, 3) == 20);
  CHECK(dim_pk(1, 4) == 5);

  // enumeration matches the closed form
  for (int d = 1; d <= 3; ++d)
    for (int k = 0; k <= 10; ++k)
      CHECK(ScalarBasis(d, k, Vec3::Zero(), 1.0).size() == dim_pk(d, k));
}

TEST_CASE("eval basics") {
  const ScalarBasis constant(3, 0, Vec3::Zero(), 2.0);
  CHECK(constant.eval(Vec3(0.3, -0.7, 0.2)) == Eigen::VectorXd::Ones(1));

  const ScalarBasis line(1, 2, Vec3::Zero(), 0.5);
  const Eigen::VectorXd at_center = line.eval(Vec3::Zero());
  CHECK(at_center(0) == 1.0);
  CHECK(at_center(1) == 0.0);
  CHECK(at_center(2) == 0.0);

  const double h = 0.37;
  const ScalarBasis plane(2, 1, Vec3::Zero(), h);
  const Eigen::VectorXd at_h = plane.eval(Vec3(h, 0.0, 0.0));
  CHECK(at_h(0) == doctest::Approx(1.0));
  CHECK(at_h(1) == doctest::Approx(1.0));
  CHECK(at_h(2) == doctest::Approx(0.0));
}

TEST_CASE("grad basics") {
  const ScalarBasis constant(2, 0, Vec3::Zero(), 1.0);
  CHECK(constant.grad(Vec3(0.4, 0.1, 0)).cwiseAbs().maxCoeff() == 0.0);

  const double h = 0.25;
  const ScalarBasis line(1, 1, Vec3::Zero(), h);
  CHECK(line.grad(Vec3(0.1, 0, 0))(0, 1) == doctest::Approx(1.0 / h));
}

TEST_CASE("grad matches central finite differences") {
  std::mt19937_64 rng(20240811);
  std::uniform_real_distribution<double> dist(-0.8, 0.8);
  for (int d = 1; d <= 3; ++d) {
    for (int k = 0; k <= 5; ++k) {
      const ScalarBasis basis(d, k, Vec3(0.1, -0.2, 0.05), 1.3);
      for (int trial = 0; trial < 20; ++trial) {
        Vec3 p = Vec3::Zero();
        for (int c = 0; c < d; ++c) p(c) = dist(rng);
        const Eigen::MatrixXd exact = basis.grad(p);
        const Eigen::MatrixXd approx = fd_gradient(basis, p, 6e-6);
        const double scale = exact.cwiseAbs().maxCoeff() + 1.0;
        CHECK((exact - approx).cwiseAbs().maxCoeff() / scale <= 1e-7);
      }
    }
  }
}

TEST_CASE("surface curl of tangential polynomials") {
  const PolyElement cube = PolyElement::unit_cube();
  const int top = 1;  // z = 1
  const ScalarBasis fb = face_basis(cube, top, 2);

  SUBCASE("constants have zero curl") {
    const Eigen::VectorXd theta = monomial_coeffs(fb, 0, 0, 0, 3.0);
    CHECK(surface_curl_scalar(fb, theta, theta, Vec2(0.2, -0.1)) == doctest::Approx(0.0));
  }
  SUBCASE("planar rotation field has curl 2") {
    const Eigen::VectorXd theta1 = monomial_coeffs(fb, 0, 1, 0, -1.0);  // -s2
    const Eigen::VectorXd theta2 = monomial_coeffs(fb, 1, 0, 0, 1.0);   // s1
    CHECK(surface_curl_scalar(fb, theta1, theta2, Vec2(0.3, 0.4)) == doctest::Approx(2.0));
  }
  SUBCASE("theta = (s1 s2, s1^2) has curl s1") {
    const Eigen::VectorXd theta1 = monomial_coeffs(fb, 1, 1, 0);
    const Eigen::VectorXd theta2 = monomial_coeffs(fb, 2, 0, 0);
    for (const double s1 : {-0.3, 0.0, 0.25}) {
      CHECK(surface_curl_scalar(fb, theta1, theta2, Vec2(s1, 0.17)) ==
            doctest::Approx(s1).epsilon(1e-12));
    }
  }
}

TEST_CASE("rotated surface gradient") {
  const PolyElement cube = PolyElement::unit_cube();
  const int top = 1;
  const FaceGeom& face = cube.face(top);
  const ScalarBasis fb = face_basis(cube, top, 2);

  SUBCASE("constant tau") {
    const Eigen::VectorXd tau = monomial_coeffs(fb, 0, 0, 0, 5.0);
    CHECK(rotated_surface_gradient(face, fb, tau, Vec2(0.1, 0.2)).norm() == doctest::Approx(0.0));
  }
  SUBCASE("tau = s1 rotates to -t2") {
    const Eigen::VectorXd tau = monomial_coeffs(fb, 1, 0, 0);
    CHECK(rotated_surface_gradient(face, fb, tau, Vec2(0.0, 0.0)).isApprox(-face.tangent2, 1e-13));
  }
  SUBCASE("tau = s1^2 + s2 matches the 3D cross-product oracle") {
    const Eigen::VectorXd tau =
        monomial_coeffs(fb, 2, 0, 0) + monomial_coeffs(fb, 0, 1, 0);
    auto tau3d = [&face](const Vec3& x) {
      const Vec2 s = face.to_local(x);
      return s.x() * s.x() + s.y();
    };
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
      const Vec3 x = wgdr::testing::random_point_on_face(cube, top, rng);
      // finite-difference 3D gradient, then cross with the normal
      const double step = 1e-6;
      Vec3 grad;
      for (int c = 0; c < 3; ++c) {
        Vec3 hi = x, lo = x;
        hi(c) += step;
        lo(c) -= step;
        grad(c) = (tau3d(hi) - tau3d(lo)) / (2 * step);
      }
      const Vec3 expected = grad.cross(face.normal);
      const Vec3 got = rotated_surface_gradient(face, fb, tau, face.to_local(x));
      CHECK((expected - got).norm() <= 1e-7);
    }
  }
}

TEST_CASE("entity Gram matrices are SPD and well conditioned through k = 5") {
  auto condition = [](const Eigen::MatrixXd& vals, const Eigen::VectorXd& w) {
    const Eigen::MatrixXd gram = vals.transpose() * w.asDiagonal() * vals;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
    REQUIRE(es.eigenvalues()(0) > 0.0);
    return es.eigenvalues()(es.eigenvalues().size() - 1) / es.eigenvalues()(0);
  };

  for (const PolyElement& el :
       {PolyElement::reference_tetrahedron(), PolyElement::unit_cube()}) {
    for (int k = 0; k <= 5; ++k) {
      const ScalarBasis vb = volume_basis(el, k);
      const QuadratureRule rule = volume_rule(el, 2 * k);
      Eigen::MatrixXd vals(rule.size(), vb.size());
      for (int q = 0; q < rule.size(); ++q) vals.row(q) = vb.eval(rule.points[q]);
      CHECK(condition(vals, rule.weights) < 1e8);

      for (int f = 0; f < el.num_faces(); ++f) {
        const ScalarBasis fb = face_basis(el, f, k);
        const QuadratureRule fr = face_rule(el, f, 2 * k);
        Eigen::MatrixXd fvals(fr.size(), fb.size());
        for (int q = 0; q < fr.size(); ++q) {
          const Vec2 s = el.face(f).to_local(fr.points[q]);
          fvals.row(q) = fb.eval(Vec3(s.x(), s.y(), 0));
        }
        CHECK(condition(fvals, fr.weights) < 1e8);
      }

      for (int e = 0; e < el.num_edges(); ++e) {
        const ScalarBasis eb = edge_basis(el, e, k);
        const QuadratureRule er = edge_rule(el, e, 2 * k);
        Eigen::MatrixXd evals(er.size(), eb.size());
        for (int q = 0; q < er.size(); ++q)
          evals.row(q) = eb.eval(Vec3(el.edge(e).arc_coord(er.points[q]), 0, 0));
        CHECK(condition(evals, er.weights) < 1e8);
      }
    }
  }
}

}  // TEST_SUITE
