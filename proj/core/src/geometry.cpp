#include "wgdr/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "wgdr/errors.hpp"

namespace wgdr {

namespace {

constexpr double kPlanarityRel = 1e-12;

// Newell normal of a (possibly non-planar) loop; not normalized.
Vec3 newell_normal(const std::vector<Vec3>& pts, const std::vector<int>& loop) {
  Vec3 n = Vec3::Zero();
  const int m = static_cast<int>(loop.size());
  for (int i = 0; i < m; ++i) {
    const Vec3& a = pts[loop[i]];
    const Vec3& b = pts[loop[(i + 1) % m]];
    n += a.cross(b);
  }
  return 0.5 * n;
}

// Deterministic face tangent: project the global axis least aligned with the
// normal onto the face plane (ties broken toward the lower axis index).
Vec3 first_tangent(const Vec3& n) {
  int axis = 0;
  double best = std::abs(n.x());
  if (std::abs(n.y()) < best) {
    axis = 1;
    best = std::abs(n.y());
  }
  if (std::abs(n.z()) < best) axis = 2;
  Vec3 t = Vec3::Unit(axis) - n(axis) * n;
  return t.normalized();
}

}  // namespace

PolyElement PolyElement::from_vertices_faces(std::vector<Vec3> vertices,
                                             std::vector<std::vector<int>> face_loops) {
  const int nv = static_cast<int>(vertices.size());
  if (nv < 4) throw OpenSurface("element needs at least 4 vertices");
  if (face_loops.size() < 4) throw OpenSurface("element needs at least 4 faces");

  PolyElement el;
  el.vertices_ = std::move(vertices);

  Vec3 vertex_mean = Vec3::Zero();
  for (const Vec3& v : el.vertices_) vertex_mean += v;
  vertex_mean /= nv;

  double h0 = 0.0;
  for (const Vec3& v : el.vertices_) h0 = std::max(h0, (v - vertex_mean).norm());
  if (h0 <= 0.0) throw OpenSurface("degenerate element: all vertices coincide");

  el.faces_.reserve(face_loops.size());
  for (std::size_t fi = 0; fi < face_loops.size(); ++fi) {
    const std::vector<int>& loop = face_loops[fi];
    if (loop.size() < 3)
      throw OpenSurface("face " + std::to_string(fi) + " has fewer than 3 vertices");
    for (std::size_t i = 0; i < loop.size(); ++i) {
      if (loop[i] < 0 || loop[i] >= nv)
        throw OpenSurface("face " + std::to_string(fi) + " references an invalid vertex");
      if (loop[i] == loop[(i + 1) % loop.size()])
        throw OpenSurface("face " + std::to_string(fi) + " repeats a vertex");
    }

    FaceGeom face;
    face.loop = loop;

    const Vec3 nn = newell_normal(el.vertices_, loop);
    if (nn.norm() <= 1e-14 * h0 * h0)
      throw NonPlanarFace("face " + std::to_string(fi) + " is degenerate");
    face.normal = nn.normalized();

    // Planarity against the Newell plane through the loop-vertex mean.
    Vec3 loop_mean = Vec3::Zero();
    for (int v : loop) loop_mean += el.vertices_[v];
    loop_mean /= static_cast<double>(loop.size());
    double deviation = 0.0;
    for (int v : loop)
      deviation = std::max(deviation, std::abs((el.vertices_[v] - loop_mean).dot(face.normal)));
    if (deviation > kPlanarityRel * h0)
      throw NonPlanarFace("face " + std::to_string(fi) + " deviates from planarity by " +
                          std::to_string(deviation));

    // Area and area centroid by fan triangulation around the loop-vertex mean.
    double area = 0.0;
    Vec3 moment = Vec3::Zero();
    const int m = static_cast<int>(loop.size());
    for (int i = 0; i < m; ++i) {
      const Vec3& a = el.vertices_[loop[i]];
      const Vec3& b = el.vertices_[loop[(i + 1) % m]];
      const double tri = 0.5 * ((a - loop_mean).cross(b - loop_mean)).dot(face.normal);
      area += tri;
      moment += tri * (loop_mean + a + b) / 3.0;
    }
    if (area <= 0.0)
      throw InwardNormal("face " + std::to_string(fi) + " has non-positive oriented area");
    face.area = area;
    face.centroid = moment / area;
    for (int v : loop)
      face.diameter = std::max(face.diameter, (el.vertices_[v] - face.centroid).norm());

    face.tangent1 = first_tangent(face.normal);
    face.tangent2 = face.normal.cross(face.tangent1);

    el.faces_.push_back(std::move(face));
  }

  // Element volume and centroid: cone decomposition over the face fans.
  double volume = 0.0;
  Vec3 vol_moment = Vec3::Zero();
  for (const FaceGeom& face : el.faces_) {
    const int m = static_cast<int>(face.loop.size());
    for (int i = 0; i < m; ++i) {
      const Vec3& a = el.vertices_[face.loop[i]];
      const Vec3& b = el.vertices_[face.loop[(i + 1) % m]];
      const double tet =
          (face.centroid - vertex_mean).cross(a - vertex_mean).dot(b - vertex_mean) / 6.0;
      volume += tet;
      vol_moment += tet * (vertex_mean + face.centroid + a + b) / 4.0;
    }
  }
  if (volume <= 0.0) throw InwardNormal("element has non-positive volume; check loop orientation");
  el.volume_ = volume;
  el.centroid_ = vol_moment / volume;

  for (const Vec3& v : el.vertices_) el.h_ = std::max(el.h_, (v - el.centroid_).norm());

  // Outward normals and convexity: every vertex on the inner side of every
  // face plane.
  for (std::size_t fi = 0; fi < el.faces_.size(); ++fi) {
    const FaceGeom& face = el.faces_[fi];
    if (face.normal.dot(face.centroid - el.centroid_) <= 0.0)
      throw InwardNormal("face " + std::to_string(fi) + " normal points inward");
    for (int v = 0; v < nv; ++v) {
      if (face.normal.dot(el.vertices_[v] - face.centroid) > kPlanarityRel * el.h_ * 100)
        throw InwardNormal("vertex " + std::to_string(v) + " lies outside face " +
                           std::to_string(fi) + ": element not convex");
    }
  }

  // Derive edges from the loops. Every undirected edge must be traversed
  // exactly twice, once in each direction.
  std::map<std::pair<int, int>, int> edge_ids;
  std::vector<int> forward_count, total_count;
  for (FaceGeom& face : el.faces_) {
    const int m = static_cast<int>(face.loop.size());
    face.boundary.resize(m);
    for (int i = 0; i < m; ++i) {
      const int a = face.loop[i];
      const int b = face.loop[(i + 1) % m];
      const auto key = std::minmax(a, b);
      auto [it, inserted] = edge_ids.try_emplace(key, static_cast<int>(el.edges_.size()));
      if (inserted) {
        EdgeGeom edge;
        edge.tail = key.first;
        edge.head = key.second;
        const Vec3 d = el.vertices_[edge.head] - el.vertices_[edge.tail];
        edge.length = d.norm();
        if (edge.length <= 1e-14 * el.h_) throw OpenSurface("zero-length edge");
        edge.tangent = d / edge.length;
        edge.midpoint = 0.5 * (el.vertices_[edge.tail] + el.vertices_[edge.head]);
        el.edges_.push_back(edge);
        forward_count.push_back(0);
        total_count.push_back(0);
      }
      const int id = it->second;
      face.boundary[i].edge = id;
      face.boundary[i].sign = (a < b) ? 1.0 : -1.0;
      total_count[id] += 1;
      if (a < b) forward_count[id] += 1;
    }
  }
  for (std::size_t e = 0; e < el.edges_.size(); ++e) {
    if (total_count[e] != 2)
      throw OpenSurface("edge " + std::to_string(e) + " is shared by " +
                        std::to_string(total_count[e]) + " faces, expected 2");
    if (forward_count[e] != 1)
      throw InwardNormal("edge " + std::to_string(e) +
                         " traversed twice in the same direction: a loop is mis-ordered");
  }

  const int euler = nv - el.num_edges() + el.num_faces();
  if (euler != 2)
    throw OpenSurface("Euler characteristic V - E + F = " + std::to_string(euler) +
                      ", expected 2");

  return el;
}

PolyElement PolyElement::reference_tetrahedron() {
  return from_vertices_faces(
      {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
      {{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}});
}

PolyElement PolyElement::unit_cube() {
  return from_vertices_faces(
      {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}},
      {{0, 2, 3, 1}, {4, 5, 7, 6}, {0, 1, 5, 4}, {2, 6, 7, 3}, {0, 4, 6, 2}, {1, 3, 7, 5}});
}

PolyElement PolyElement::right_triangular_prism() {
  return from_vertices_faces(
      {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}},
      {{0, 2, 1}, {3, 4, 5}, {0, 1, 4, 3}, {0, 3, 5, 2}, {1, 2, 5, 4}});
}

int PolyElement::edge_between(int va, int vb) const {
  for (int e = 0; e < num_edges(); ++e) {
    const auto [lo, hi] = std::minmax(va, vb);
    if (edges_[e].tail == lo && edges_[e].head == hi) return e;
  }
  return -1;
}

double PolyElement::boundary_sign(int face, int edge) const {
  for (const FaceIncidence& inc : faces_[face].boundary) {
    if (inc.edge == edge) return inc.sign;
  }
  throw EdgeNotOnFace("edge " + std::to_string(edge) + " is not on face " + std::to_string(face));
}

Vec3 PolyElement::induced_boundary_tangent(int face, int edge) const {
  return boundary_sign(face, edge) * edges_[edge].tangent;
}

double PolyElement::endpoint_outward_sign(int edge, int vertex) const {
  const EdgeGeom& e = edges_[edge];
  if (vertex == e.head) return 1.0;
  if (vertex == e.tail) return -1.0;
  throw VertexNotOnEdge("vertex " + std::to_string(vertex) + " is not an endpoint of edge " +
                        std::to_string(edge));
}

}  // namespace wgdr
