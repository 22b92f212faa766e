// Descriptors of the eight weak Galerkin spaces (equal-order slots 1..4 and
// descending-order slots 1..4), their degree-of-freedom layouts on an element,
// coefficient vectors blocked by entity, and the lowest-order inclusion map.

#ifndef WGDR_WGSPACES_HPP
#define WGDR_WGSPACES_HPP

#include <vector>

#include "wgdr/geometry.hpp"

namespace wgdr {

/// The two space families: equal polynomial order k >= 0 on every entity, or
/// naturally descending orders starting from k >= 3.
enum class Family { Equal = 1, Descending = 2 };

const char* family_name(Family f);

/// Identifies one WG space: family, slot in the four-term sequence, and base
/// degree. Slot 1 carries scalar data on volume/faces/edges plus vertex
/// values; slot 2 vector volume data, tangential face data and tangential
/// edge data; slot 3 vector volume data and normal face data; slot 4 volume
/// data only.
struct SpaceDescriptor {
  Family family = Family::Equal;
  int slot = 1;
  int degree = 0;

  /// Polynomial degree of the entity block, or -1 when the slot carries no
  /// data on that entity.
  int volume_degree() const;
  int face_degree() const;
  int edge_degree() const;
  bool has_vertex_values() const { return slot == 1; }

  /// Number of components stored per entity basis function.
  int volume_components() const { return (slot == 2 || slot == 3) ? 3 : 1; }
  int face_components() const { return slot == 2 ? 2 : 1; }
  int edge_components() const { return 1; }

  bool operator==(const SpaceDescriptor&) const = default;
};

/// Validated constructor; throws DegreeOutOfRange for invalid (family, k).
SpaceDescriptor make_space(Family family, int slot, int k);

enum class DofEntity { Volume, Face, Edge, Vertex };

struct DofBlock {
  DofEntity entity;
  int index;   ///< entity id (0 for the volume)
  int offset;  ///< first coefficient
  int size;
};

/// Deterministic block layout: volume, then faces in element order, then
/// edges, then vertices. Within a vector-valued block, coefficients are
/// component-major.
struct DofLayout {
  std::vector<DofBlock> blocks;
  int total = 0;
  int volume_offset = 0;
  int volume_size = 0;
  int face_size = 0;  ///< per face (0 if the slot has no face data)
  int edge_size = 0;
  int first_face_offset = 0;
  int first_edge_offset = 0;
  int first_vertex_offset = 0;

  int face_offset(int f) const { return first_face_offset + f * face_size; }
  int edge_offset(int e) const { return first_edge_offset + e * edge_size; }
  int vertex_offset(int v) const { return first_vertex_offset + v; }
};

DofLayout dof_layout(const SpaceDescriptor& desc, const PolyElement& el);

/// Total coefficient count of the space on the element.
int space_dim(const SpaceDescriptor& desc, const PolyElement& el);

/// Coefficient vector for one WG function, blocked per dof_layout.
struct WgCoefficients {
  SpaceDescriptor desc;
  DofLayout layout;
  Eigen::VectorXd values;

  Eigen::VectorBlock<Eigen::VectorXd> volume_block() {
    return values.segment(layout.volume_offset, layout.volume_size);
  }
  Eigen::VectorBlock<const Eigen::VectorXd> volume_block() const {
    return values.segment(layout.volume_offset, layout.volume_size);
  }
  Eigen::VectorBlock<Eigen::VectorXd> face_block(int f) {
    return values.segment(layout.face_offset(f), layout.face_size);
  }
  Eigen::VectorBlock<const Eigen::VectorXd> face_block(int f) const {
    return values.segment(layout.face_offset(f), layout.face_size);
  }
  Eigen::VectorBlock<Eigen::VectorXd> edge_block(int e) {
    return values.segment(layout.edge_offset(e), layout.edge_size);
  }
  Eigen::VectorBlock<const Eigen::VectorXd> edge_block(int e) const {
    return values.segment(layout.edge_offset(e), layout.edge_size);
  }
  double& vertex_value(int v) { return values(layout.vertex_offset(v)); }
  double vertex_value(int v) const { return values(layout.vertex_offset(v)); }
};

WgCoefficients zero_coefficients(const SpaceDescriptor& desc, const PolyElement& el);

/// Classification backing the inclusion map: a tetrahedron takes 4 constants,
/// a box (three parallel-face pairs, three parallel-edge classes) takes 8.
struct IwPattern {
  enum class Kind { Tetrahedron, Box, Unsupported };
  Kind kind = Kind::Unsupported;
  std::vector<int> face_class;  ///< per face, class id (box only)
  std::vector<int> edge_class;  ///< per edge, class id (box only)
  int num_constants = 0;
};

IwPattern classify_iw_pattern(const PolyElement& el);

/// The inclusion map I_w into the lowest-order slot-1 space. On a tetrahedron
/// the constants are (v_0, v_f, v_e, v_n); on a box (v_0, three parallel-face
/// class values, three parallel-edge class values, v_n). Throws
/// UnsupportedElement for other elements and DegreeNotZero for the
/// descending family (which has no k = 0 space).
WgCoefficients inclusion_iw(const PolyElement& el, Family family,
                            const Eigen::VectorXd& constants);

}  // namespace wgdr

#endif
