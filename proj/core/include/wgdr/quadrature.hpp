// Quadrature rules that are exact for polynomials up to a requested degree on
// element volumes, faces and edges. Polytopes are handled by centroid-fan
// simplex decomposition; each simplex carries a tensor-collapsed Gauss rule.

#ifndef WGDR_QUADRATURE_HPP
#define WGDR_QUADRATURE_HPP

#include <vector>

#include "wgdr/geometry.hpp"

namespace wgdr {

enum class EntityKind { Volume, Face, Edge };

/// Points are in physical coordinates; weights sum to the entity measure.
struct QuadratureRule {
  EntityKind kind = EntityKind::Volume;
  int exactness = 0;
  std::vector<Vec3> points;
  Eigen::VectorXd weights;

  int size() const { return static_cast<int>(points.size()); }
  double total_weight() const { return weights.sum(); }
};

/// Gauss-Legendre nodes and weights on [-1, 1]; exact through degree 2n-1.
void gauss_legendre(int n, Eigen::VectorXd& nodes, Eigen::VectorXd& weights);

/// Rule exact for polynomials of total degree <= N on the element volume.
QuadratureRule volume_rule(const PolyElement& el, int N);

/// Rule exact to degree N on one face (points lie in the face plane).
QuadratureRule face_rule(const PolyElement& el, int face, int N);

/// Gauss rule with ceil((N+1)/2) points mapped onto the edge segment.
QuadratureRule edge_rule(const PolyElement& el, int edge, int N);

}  // namespace wgdr

#endif
