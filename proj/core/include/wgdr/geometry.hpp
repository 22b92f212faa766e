// Convex polyhedral elements with deterministic orientation frames on faces
// and edges: outward normals, right-handed face tangents, lowest-to-highest
// edge tangents, and signed face/edge incidence.

#ifndef WGDR_GEOMETRY_HPP
#define WGDR_GEOMETRY_HPP

#include <Eigen/Dense>
#include <vector>

namespace wgdr {

using Vec3 = Eigen::Vector3d;
using Vec2 = Eigen::Vector2d;

/// Oriented edge. The tangent always points from the lower-indexed vertex
/// (tail) to the higher-indexed one (head).
struct EdgeGeom {
  int tail = -1;
  int head = -1;
  Vec3 tangent = Vec3::Zero();
  Vec3 midpoint = Vec3::Zero();
  double length = 0.0;

  /// Arc-length coordinate of a point on the edge, measured from the midpoint
  /// along the tangent.
  double arc_coord(const Vec3& x) const { return (x - midpoint).dot(tangent); }
};

/// One boundary segment of a face loop: which edge, and the sign that turns
/// the stored edge tangent into the loop direction (t_loop = sign * t_e).
struct FaceIncidence {
  int edge = -1;
  double sign = 0.0;
};

/// Planar face with an orthonormal right-handed frame:
/// tangent1 x tangent2 = normal, and the normal points out of the element.
struct FaceGeom {
  std::vector<int> loop;                 ///< vertex indices, counterclockwise seen from outside
  std::vector<FaceIncidence> boundary;   ///< one entry per loop segment
  Vec3 normal = Vec3::Zero();
  Vec3 tangent1 = Vec3::Zero();
  Vec3 tangent2 = Vec3::Zero();
  Vec3 centroid = Vec3::Zero();          ///< area centroid
  double area = 0.0;
  double diameter = 0.0;                 ///< max loop-vertex distance from the centroid

  /// In-plane coordinates (s1, s2) of a point, relative to the centroid.
  Vec2 to_local(const Vec3& x) const {
    const Vec3 d = x - centroid;
    return {d.dot(tangent1), d.dot(tangent2)};
  }
  Vec3 to_global(const Vec2& s) const {
    return centroid + s.x() * tangent1 + s.y() * tangent2;
  }
};

/// A single convex polyhedral element. Immutable after construction; all
/// orientation frames follow fixed deterministic rules so that rebuilding the
/// same element reproduces them bit for bit.
class PolyElement {
 public:
  /// Tetrahedron with vertices (0,0,0), (1,0,0), (0,1,0), (0,0,1).
  static PolyElement reference_tetrahedron();

  /// The unit cube [0,1]^3.
  static PolyElement unit_cube();

  /// Right prism over the reference triangle, height 1.
  static PolyElement right_triangular_prism();

  /// General constructor. Face loops must be counterclockwise when viewed
  /// from outside; faces must be planar (within 1e-12 * h) and the resulting
  /// solid convex. Throws NonPlanarFace, OpenSurface, or InwardNormal.
  static PolyElement from_vertices_faces(std::vector<Vec3> vertices,
                                         std::vector<std::vector<int>> face_loops);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_faces() const { return static_cast<int>(faces_.size()); }

  const std::vector<Vec3>& vertices() const { return vertices_; }
  const Vec3& vertex(int v) const { return vertices_[v]; }
  const std::vector<EdgeGeom>& edges() const { return edges_; }
  const EdgeGeom& edge(int e) const { return edges_[e]; }
  const std::vector<FaceGeom>& faces() const { return faces_; }
  const FaceGeom& face(int f) const { return faces_[f]; }

  const Vec3& centroid() const { return centroid_; }
  double volume() const { return volume_; }
  /// Characteristic length h: max vertex-to-centroid distance.
  double diameter() const { return h_; }

  /// Edge id joining two vertices, or -1.
  int edge_between(int va, int vb) const;

  /// Orientation sign of the edge tangent relative to the face loop direction.
  /// Throws EdgeNotOnFace.
  double boundary_sign(int face, int edge) const;

  /// Boundary tangent t_{df} = sign * t_e induced on an edge by a face; obeys
  /// the right-hand rule with the outward face normal. Throws EdgeNotOnFace.
  Vec3 induced_boundary_tangent(int face, int edge) const;

  /// +1 at the head of the edge tangent, -1 at the tail (t_e . n at the
  /// endpoint). Throws VertexNotOnEdge.
  double endpoint_outward_sign(int edge, int vertex) const;

 private:
  PolyElement() = default;

  std::vector<Vec3> vertices_;
  std::vector<EdgeGeom> edges_;
  std::vector<FaceGeom> faces_;
  Vec3 centroid_ = Vec3::Zero();
  double volume_ = 0.0;
  double h_ = 0.0;
};

}  // namespace wgdr

#endif
