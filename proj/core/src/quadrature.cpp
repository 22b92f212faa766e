#include "wgdr/quadrature.hpp"

#include <cmath>

namespace wgdr {

void gauss_legendre(int n, Eigen::VectorXd& nodes, Eigen::VectorXd& weights) {
  nodes.resize(n);
  weights.resize(n);
  for (int i = 0; i < n; ++i) {
    // Newton iteration from the Chebyshev-based starting guess.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes(n - 1 - i) = x;
    weights(n - 1 - i) = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

namespace {

struct Gauss01 {
  Eigen::VectorXd x, w;  // on [0, 1]
  explicit Gauss01(int n) {
    Eigen::VectorXd xi, wi;
    gauss_legendre(n, xi, wi);
    x = 0.5 * (xi.array() + 1.0);
    w = 0.5 * wi.array();
  }
};

inline int points_for(int degree) { return (degree + 2) / 2; }  // ceil((degree+1)/2)

// Duffy rule on the reference triangle {a,b >= 0, a+b <= 1}, exact to degree N.
void triangle_duffy(int N, std::vector<Vec2>& pts, std::vector<double>& wts) {
  const Gauss01 gu(points_for(N + 1));
  const Gauss01 gv(points_for(N));
  for (int i = 0; i < gu.x.size(); ++i) {
    for (int j = 0; j < gv.x.size(); ++j) {
      const double u = gu.x(i), v = gv.x(j);
      pts.emplace_back(u, v * (1.0 - u));
      wts.push_back(gu.w(i) * gv.w(j) * (1.0 - u));
    }
  }
}

// Duffy rule on the reference tetrahedron {a,b,c >= 0, a+b+c <= 1}.
void tetrahedron_duffy(int N, std::vector<Vec3>& pts, std::vector<double>& wts) {
  const Gauss01 gu(points_for(N + 2));
  const Gauss01 gv(points_for(N + 1));
  const Gauss01 gw(points_for(N));
  for (int i = 0; i < gu.x.size(); ++i) {
    for (int j = 0; j < gv.x.size(); ++j) {
      for (int l = 0; l < gw.x.size(); ++l) {
        const double u = gu.x(i), v = gv.x(j), w = gw.x(l);
        const double a = u;
        const double b = (1.0 - u) * v;
        const double c = (1.0 - u) * (1.0 - v) * w;
        pts.emplace_back(a, b, c);
        wts.push_back(gu.w(i) * gv.w(j) * gw.w(l) * (1.0 - u) * (1.0 - u) * (1.0 - v));
      }
    }
  }
}

}  // namespace

QuadratureRule volume_rule(const PolyElement& el, int N) {
  if (N < 0) N = 0;
  std::vector<Vec3> ref;
  std::vector<double> ref_w;
  tetrahedron_duffy(N, ref, ref_w);

  QuadratureRule rule;
  rule.kind = EntityKind::Volume;
  rule.exactness = N;

  std::vector<double> weights;
  for (const FaceGeom& face : el.faces()) {
    const int m = static_cast<int>(face.loop.size());
    for (int i = 0; i < m; ++i) {
      // Tetrahedron (element centroid, face centroid, loop vertex pair).
      const Vec3& p0 = el.centroid();
      const Vec3 e1 = face.centroid - p0;
      const Vec3 e2 = el.vertex(face.loop[i]) - p0;
      const Vec3 e3 = el.vertex(face.loop[(i + 1) % m]) - p0;
      const double jac = e1.cross(e2).dot(e3);  // 6 * signed volume
      for (std::size_t q = 0; q < ref.size(); ++q) {
        rule.points.push_back(p0 + ref[q].x() * e1 + ref[q].y() * e2 + ref[q].z() * e3);
        weights.push_back(ref_w[q] * jac);
      }
    }
  }
  rule.weights = Eigen::Map<Eigen::VectorXd>(weights.data(), weights.size());
  return rule;
}

QuadratureRule face_rule(const PolyElement& el, int face_id, int N) {
  if (N < 0) N = 0;
  std::vector<Vec2> ref;
  std::vector<double> ref_w;
  triangle_duffy(N, ref, ref_w);

  const FaceGeom& face = el.face(face_id);
  QuadratureRule rule;
  rule.kind = EntityKind::Face;
  rule.exactness = N;

  std::vector<double> weights;
  const int m = static_cast<int>(face.loop.size());
  for (int i = 0; i < m; ++i) {
    const Vec3& p0 = face.centroid;
    const Vec3 e1 = el.vertex(face.loop[i]) - p0;
    const Vec3 e2 = el.vertex(face.loop[(i + 1) % m]) - p0;
    const double jac = e1.cross(e2).dot(face.normal);  // 2 * signed area
    for (std::size_t q = 0; q < ref.size(); ++q) {
      rule.points.push_back(p0 + ref[q].x() * e1 + ref[q].y() * e2);
      weights.push_back(ref_w[q] * jac);
    }
  }
  rule.weights = Eigen::Map<Eigen::VectorXd>(weights.data(), weights.size());
  return rule;
}

QuadratureRule edge_rule(const PolyElement& el, int edge_id, int N) {
  if (N < 0) N = 0;
  const EdgeGeom& edge = el.edge(edge_id);
  Eigen::VectorXd xi, wi;
  gauss_legendre(points_for(N), xi, wi);

  QuadratureRule rule;
  rule.kind = EntityKind::Edge;
  rule.exactness = N;
  rule.weights = 0.5 * edge.length * wi;
  rule.points.reserve(xi.size());
  for (int q = 0; q < xi.size(); ++q)
    rule.points.push_back(edge.midpoint + 0.5 * edge.length * xi(q) * edge.tangent);
  return rule;
}

}  // namespace wgdr
