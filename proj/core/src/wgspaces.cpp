#include "wgdr/wgspaces.hpp"

#include <cmath>
#include <string>

#include "wgdr/errors.hpp"
#include "wgdr/polybasis.hpp"

namespace wgdr {

const char* family_name(Family f) { return f == Family::Equal ? "equal" : "descending"; }

int SpaceDescriptor::volume_degree() const {
  if (family == Family::Equal) return degree;
  switch (slot) {
    case 1:
      return degree;
    case 2:
      return degree - 1;
    case 3:
      return degree - 2;
    default:
      return degree - 3;
  }
}

int SpaceDescriptor::face_degree() const {
  if (slot == 4) return -1;
  if (family == Family::Equal) return degree;
  switch (slot) {
    case 1:
      return degree - 1;
    case 2:
      return degree - 2;
    default:
      return degree - 3;
  }
}

int SpaceDescriptor::edge_degree() const {
  if (slot >= 3) return -1;
  if (family == Family::Equal) return degree;
  return slot == 1 ? degree - 2 : degree - 3;
}

SpaceDescriptor make_space(Family family, int slot, int k) {
  if (slot < 1 || slot > 4) throw DegreeOutOfRange("slot must be in 1..4");
  if (family == Family::Equal && k < 0)
    throw DegreeOutOfRange("equal-order family requires k >= 0");
  if (family == Family::Descending && k < 3)
    throw DegreeOutOfRange("descending family requires k >= 3, got k = " + std::to_string(k));
  return SpaceDescriptor{family, slot, k};
}

DofLayout dof_layout(const SpaceDescriptor& desc, const PolyElement& el) {
  make_space(desc.family, desc.slot, desc.degree);  // validate

  DofLayout layout;
  layout.volume_size = desc.volume_components() * dim_pk(3, desc.volume_degree());
  layout.face_size =
      desc.face_degree() >= 0 ? desc.face_components() * dim_pk(2, desc.face_degree()) : 0;
  layout.edge_size =
      desc.edge_degree() >= 0 ? desc.edge_components() * dim_pk(1, desc.edge_degree()) : 0;

  int offset = 0;
  layout.volume_offset = offset;
  layout.blocks.push_back({DofEntity::Volume, 0, offset, layout.volume_size});
  offset += layout.volume_size;

  layout.first_face_offset = offset;
  if (layout.face_size > 0) {
    for (int f = 0; f < el.num_faces(); ++f) {
      layout.blocks.push_back({DofEntity::Face, f, offset, layout.face_size});
      offset += layout.face_size;
    }
  }

  layout.first_edge_offset = offset;
  if (layout.edge_size > 0) {
    for (int e = 0; e < el.num_edges(); ++e) {
      layout.blocks.push_back({DofEntity::Edge, e, offset, layout.edge_size});
      offset += layout.edge_size;
    }
  }

  layout.first_vertex_offset = offset;
  if (desc.has_vertex_values()) {
    for (int v = 0; v < el.num_vertices(); ++v) {
      layout.blocks.push_back({DofEntity::Vertex, v, offset, 1});
      offset += 1;
    }
  }

  layout.total = offset;
  return layout;
}

int space_dim(const SpaceDescriptor& desc, const PolyElement& el) {
  return dof_layout(desc, el).total;
}

WgCoefficients zero_coefficients(const SpaceDescriptor& desc, const PolyElement& el) {
  WgCoefficients c;
  c.desc = desc;
  c.layout = dof_layout(desc, el);
  c.values = Eigen::VectorXd::Zero(c.layout.total);
  return c;
}

IwPattern classify_iw_pattern(const PolyElement& el) {
  constexpr double kAlignTol = 1e-12;
  IwPattern pattern;

  if (el.num_vertices() == 4 && el.num_edges() == 6 && el.num_faces() == 4) {
    pattern.kind = IwPattern::Kind::Tetrahedron;
    pattern.num_constants = 4;
    return pattern;
  }

  if (el.num_vertices() == 8 && el.num_edges() == 12 && el.num_faces() == 6) {
    // Faces are in one class iff parallel; likewise edges.
    pattern.face_class.assign(el.num_faces(), -1);
    int next = 0;
    for (int f = 0; f < el.num_faces(); ++f) {
      if (pattern.face_class[f] >= 0) continue;
      pattern.face_class[f] = next;
      for (int g = f + 1; g < el.num_faces(); ++g) {
        if (std::abs(std::abs(el.face(f).normal.dot(el.face(g).normal)) - 1.0) < kAlignTol)
          pattern.face_class[g] = next;
      }
      ++next;
    }
    const int face_classes = next;

    pattern.edge_class.assign(el.num_edges(), -1);
    next = 0;
    for (int e = 0; e < el.num_edges(); ++e) {
      if (pattern.edge_class[e] >= 0) continue;
      pattern.edge_class[e] = next;
      for (int g = e + 1; g < el.num_edges(); ++g) {
        if (std::abs(std::abs(el.edge(e).tangent.dot(el.edge(g).tangent)) - 1.0) < kAlignTol)
          pattern.edge_class[g] = next;
      }
      ++next;
    }
    const int edge_classes = next;

    if (face_classes == 3 && edge_classes == 3) {
      pattern.kind = IwPattern::Kind::Box;
      pattern.num_constants = 8;
      return pattern;
    }
  }

  return pattern;
}

WgCoefficients inclusion_iw(const PolyElement& el, Family family,
                            const Eigen::VectorXd& constants) {
  if (family != Family::Equal)
    throw DegreeNotZero("the inclusion map exists only in the k = 0 equal-order space");

  const IwPattern pattern = classify_iw_pattern(el);
  if (pattern.kind == IwPattern::Kind::Unsupported)
    throw UnsupportedElement("the inclusion map's constant pattern covers tetrahedra and boxes");
  if (constants.size() != pattern.num_constants)
    throw UnsupportedElement("inclusion map expects " + std::to_string(pattern.num_constants) +
                             " constants, got " + std::to_string(constants.size()));

  WgCoefficients c = zero_coefficients(make_space(Family::Equal, 1, 0), el);
  if (pattern.kind == IwPattern::Kind::Tetrahedron) {
    c.volume_block()(0) = constants(0);
    for (int f = 0; f < el.num_faces(); ++f) c.face_block(f)(0) = constants(1);
    for (int e = 0; e < el.num_edges(); ++e) c.edge_block(e)(0) = constants(2);
    for (int v = 0; v < el.num_vertices(); ++v) c.vertex_value(v) = constants(3);
  } else {
    c.volume_block()(0) = constants(0);
    for (int f = 0; f < el.num_faces(); ++f)
      c.face_block(f)(0) = constants(1 + pattern.face_class[f]);
    for (int e = 0; e < el.num_edges(); ++e)
      c.edge_block(e)(0) = constants(4 + pattern.edge_class[e]);
    for (int v = 0; v < el.num_vertices(); ++v) c.vertex_value(v) = constants(7);
  }
  return c;
}

}  // namespace wgdr
