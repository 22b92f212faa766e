// Trial fields for the commuting-diagram checks: dense trivariate polynomials
// with closed-form derivatives, seeded random triples, and the three fixed
// transcendental fields.

#ifndef WGDR_TRIALFIELDS_HPP
#define WGDR_TRIALFIELDS_HPP

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "wgdr/projections.hpp"

namespace wgdr {

/// Polynomial in (x, y, z) stored as dense coefficients over plain monomials
/// x^a y^b z^c, a+b+c <= degree, graded-lexicographic order. Kept separate
/// from ScalarBasis so derivative evaluation follows an independent path.
class Poly3 {
 public:
  static constexpr int kMaxDegree = 24;

  Poly3() : degree_(0), coeffs_(1, 0.0) {}
  explicit Poly3(int degree) : degree_(degree), coeffs_(count(degree), 0.0) {
    if (degree > kMaxDegree) throw std::out_of_range("Poly3 degree cap exceeded");
  }

  static int count(int degree) { return (degree + 1) * (degree + 2) * (degree + 3) / 6; }

  /// Uniform [-1, 1] coefficients.
  static Poly3 random(int degree, std::mt19937_64& rng);

  /// c * x^a y^b z^c as a polynomial of exactly the needed degree.
  static Poly3 monomial(int a, int b, int c, double coeff);

  int degree() const { return degree_; }
  double& coeff(int a, int b, int c);
  double coeff(int a, int b, int c) const;

  double operator()(const Vec3& p) const;
  Poly3 derivative(int axis) const;

 private:
  int degree_;
  std::vector<double> coeffs_;  // index via (a,b,c) enumeration
};

/// One commuting-diagram trial: a scalar potential with its gradient, a
/// vector field with its curl, and a vector field with its divergence, all
/// supplied in closed form.
struct TrialFields {
  std::string label;
  bool polynomial = true;
  ScalarField v;
  VectorField grad_v;
  VectorField u;
  VectorField curl_u;
  VectorField w;
  ScalarField div_w;
};

/// Random polynomial triple of total degree <= degree.
TrialFields polynomial_trial(int degree, std::mt19937_64& rng);

/// The three fixed transcendental fields:
/// v = sin(x)cos(y), u = (sin z, cos x, xy), w = (cos y, sin z, x).
TrialFields transcendental_trial();

}  // namespace wgdr

#endif
