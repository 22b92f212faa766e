#include "wgdr/trialfields.hpp"

#include <cmath>

namespace wgdr {

namespace {

// Enumeration index of (a, b, c) inside the graded-lex ordering.
int index_of(int a, int b, int c) {
  const int total = a + b + c;
  int idx = Poly3::count(total - 1);
  // within the degree block: a descending, then b descending
  for (int aa = total; aa > a; --aa) idx += total - aa + 1;
  idx += (total - a) - b;
  return idx;
}

}  // namespace

double& Poly3::coeff(int a, int b, int c) { return coeffs_[index_of(a, b, c)]; }
double Poly3::coeff(int a, int b, int c) const { return coeffs_[index_of(a, b, c)]; }

Poly3 Poly3::random(int degree, std::mt19937_64& rng) {
  Poly3 p(degree);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (double& c : p.coeffs_) c = dist(rng);
  return p;
}

Poly3 Poly3::monomial(int a, int b, int c, double coeff_value) {
  Poly3 p(a + b + c);
  p.coeff(a, b, c) = coeff_value;
  return p;
}

double Poly3::operator()(const Vec3& p) const {
  // power tables beat pow() by an order of magnitude on the projection paths
  double px[kMaxDegree + 1], py[kMaxDegree + 1], pz[kMaxDegree + 1];
  px[0] = py[0] = pz[0] = 1.0;
  for (int j = 1; j <= degree_; ++j) {
    px[j] = px[j - 1] * p.x();
    py[j] = py[j - 1] * p.y();
    pz[j] = pz[j - 1] * p.z();
  }
  double result = 0.0;
  int idx = 0;
  for (int total = 0; total <= degree_; ++total) {
    for (int a = total; a >= 0; --a) {
      for (int b = total - a; b >= 0; --b) {
        const int c = total - a - b;
        const double coef = coeffs_[idx++];
        if (coef != 0.0) result += coef * px[a] * py[b] * pz[c];
      }
    }
  }
  return result;
}

Poly3 Poly3::derivative(int axis) const {
  Poly3 out(degree_ > 0 ? degree_ - 1 : 0);
  int idx = 0;
  for (int total = 0; total <= degree_; ++total) {
    for (int a = total; a >= 0; --a) {
      for (int b = total - a; b >= 0; --b) {
        const int c = total - a - b;
        const double coef = coeffs_[idx++];
        if (coef == 0.0) continue;
        if (axis == 0 && a > 0) out.coeff(a - 1, b, c) += a * coef;
        if (axis == 1 && b > 0) out.coeff(a, b - 1, c) += b * coef;
        if (axis == 2 && c > 0) out.coeff(a, b, c - 1) += c * coef;
      }
    }
  }
  return out;
}

TrialFields polynomial_trial(int degree, std::mt19937_64& rng) {
  const Poly3 v = Poly3::random(degree, rng);
  const Poly3 u0 = Poly3::random(degree, rng);
  const Poly3 u1 = Poly3::random(degree, rng);
  const Poly3 u2 = Poly3::random(degree, rng);
  const Poly3 w0 = Poly3::random(degree, rng);
  const Poly3 w1 = Poly3::random(degree, rng);
  const Poly3 w2 = Poly3::random(degree, rng);

  TrialFields t;
  t.label = "polynomial-deg" + std::to_string(degree);
  t.polynomial = true;

  t.v = {[v](const Vec3& x) { return v(x); }, degree};
  const Poly3 vx = v.derivative(0), vy = v.derivative(1), vz = v.derivative(2);
  t.grad_v = {[vx, vy, vz](const Vec3& x) { return Vec3(vx(x), vy(x), vz(x)); },
              degree > 0 ? degree - 1 : 0};

  t.u = {[u0, u1, u2](const Vec3& x) { return Vec3(u0(x), u1(x), u2(x)); }, degree};
  const Poly3 c0x = u2.derivative(1), c0y = u1.derivative(2);
  const Poly3 c1x = u0.derivative(2), c1y = u2.derivative(0);
  const Poly3 c2x = u1.derivative(0), c2y = u0.derivative(1);
  t.curl_u = {[c0x, c0y, c1x, c1y, c2x, c2y](const Vec3& x) {
                return Vec3(c0x(x) - c0y(x), c1x(x) - c1y(x), c2x(x) - c2y(x));
              },
              degree > 0 ? degree - 1 : 0};

  t.w = {[w0, w1, w2](const Vec3& x) { return Vec3(w0(x), w1(x), w2(x)); }, degree};
  const Poly3 dx = w0.derivative(0), dy = w1.derivative(1), dz = w2.derivative(2);
  t.div_w = {[dx, dy, dz](const Vec3& x) { return dx(x) + dy(x) + dz(x); },
             degree > 0 ? degree - 1 : 0};
  return t;
}

TrialFields transcendental_trial() {
  TrialFields t;
  t.label = "transcendental";
  t.polynomial = false;
  t.v = {[](const Vec3& p) { return std::sin(p.x()) * std::cos(p.y()); }};
  t.grad_v = {[](const Vec3& p) {
    return Vec3(std::cos(p.x()) * std::cos(p.y()), -std::sin(p.x()) * std::sin(p.y()), 0.0);
  }};
  t.u = {[](const Vec3& p) { return Vec3(std::sin(p.z()), std::cos(p.x()), p.x() * p.y()); }};
  t.curl_u = {[](const Vec3& p) {
    return Vec3(p.x(), std::cos(p.z()) - p.y(), -std::sin(p.x()));
  }};
  t.w = {[](const Vec3& p) { return Vec3(std::cos(p.y()), std::sin(p.z()), p.x()); }};
  t.div_w = {[](const Vec3&) { return 0.0; }};
  return t;
}

}  // namespace wgdr
