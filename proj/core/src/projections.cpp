#include "wgdr/projections.hpp"

#include "wgdr/polybasis.hpp"

namespace wgdr {

Projector::Projector(const PolyElement& el, Family family, int k, int quad_boost)
    : el_(&el), family_(family), k_(k), quad_degree_(2 * k + 2 + quad_boost) {
  for (int slot = 1; slot <= 4; ++slot) {
    const SpaceDescriptor desc = make_space(family, slot, k);
    build_volume_table(desc.volume_degree());
    if (desc.face_degree() >= 0) build_face_tables(desc.face_degree());
    if (desc.edge_degree() >= 0) build_edge_tables(desc.edge_degree());
  }
}

void Projector::build_volume_table(int degree) {
  if (volume_tables_.count(degree)) return;
  const ScalarBasis basis = volume_basis(*el_, degree);
  QuadratureRule rule = volume_rule(*el_, quad_degree_);
  Eigen::MatrixXd vals(rule.size(), basis.size());
  for (int q = 0; q < rule.size(); ++q) vals.row(q) = basis.eval(rule.points[q]);
  GramSolver gram(vals.transpose() * rule.weights.asDiagonal() * vals);
  volume_tables_.emplace(degree, EntityTable{std::move(rule), std::move(vals), std::move(gram)});
}

void Projector::build_face_tables(int degree) {
  for (int face = 0; face < el_->num_faces(); ++face) {
    if (face_tables_.count({face, degree})) continue;
    const ScalarBasis basis = face_basis(*el_, face, degree);
    const FaceGeom& geom = el_->face(face);
    QuadratureRule rule = face_rule(*el_, face, quad_degree_);
    Eigen::MatrixXd vals(rule.size(), basis.size());
    for (int q = 0; q < rule.size(); ++q) {
      const Vec2 s = geom.to_local(rule.points[q]);
      vals.row(q) = basis.eval(Vec3(s.x(), s.y(), 0.0));
    }
    GramSolver gram(vals.transpose() * rule.weights.asDiagonal() * vals);
    face_tables_.emplace(std::make_pair(face, degree),
                         EntityTable{std::move(rule), std::move(vals), std::move(gram)});
  }
}

void Projector::build_edge_tables(int degree) {
  for (int edge = 0; edge < el_->num_edges(); ++edge) {
    if (edge_tables_.count({edge, degree})) continue;
    const ScalarBasis basis = edge_basis(*el_, edge, degree);
    const EdgeGeom& geom = el_->edge(edge);
    QuadratureRule rule = edge_rule(*el_, edge, quad_degree_);
    Eigen::MatrixXd vals(rule.size(), basis.size());
    for (int q = 0; q < rule.size(); ++q)
      vals.row(q) = basis.eval(Vec3(geom.arc_coord(rule.points[q]), 0.0, 0.0));
    GramSolver gram(vals.transpose() * rule.weights.asDiagonal() * vals);
    edge_tables_.emplace(std::make_pair(edge, degree),
                         EntityTable{std::move(rule), std::move(vals), std::move(gram)});
  }
}

Eigen::VectorXd Projector::l2_project(const EntityTable& table,
                                      const std::function<double(const Vec3&)>& f) const {
  Eigen::VectorXd fw(table.rule.size());
  for (int q = 0; q < table.rule.size(); ++q)
    fw(q) = table.rule.weights(q) * f(table.rule.points[q]);
  return table.gram.solve(table.values.transpose() * fw);
}

WgCoefficients Projector::slot1(const ScalarField& v) const {
  const SpaceDescriptor desc = make_space(family_, 1, k_);
  WgCoefficients c = zero_coefficients(desc, *el_);
  c.volume_block() = l2_project(volume_table(desc.volume_degree()), v.fn);
  for (int f = 0; f < el_->num_faces(); ++f)
    c.face_block(f) = l2_project(face_table(f, desc.face_degree()), v.fn);
  for (int e = 0; e < el_->num_edges(); ++e)
    c.edge_block(e) = l2_project(edge_table(e, desc.edge_degree()), v.fn);
  for (int n = 0; n < el_->num_vertices(); ++n) c.vertex_value(n) = v(el_->vertex(n));
  return c;
}

WgCoefficients Projector::slot2(const VectorField& u) const {
  const SpaceDescriptor desc = make_space(family_, 2, k_);
  WgCoefficients c = zero_coefficients(desc, *el_);

  const EntityTable& vol = volume_table(desc.volume_degree());
  const int pv = static_cast<int>(vol.values.cols());
  for (int comp = 0; comp < 3; ++comp)
    c.volume_block().segment(comp * pv, pv) =
        l2_project(vol, [&u, comp](const Vec3& x) { return u(x)(comp); });

  for (int f = 0; f < el_->num_faces(); ++f) {
    const FaceGeom& face = el_->face(f);
    const EntityTable& tab = face_table(f, desc.face_degree());
    const int pf = static_cast<int>(tab.values.cols());
    c.face_block(f).segment(0, pf) =
        l2_project(tab, [&u, &face](const Vec3& x) { return u(x).dot(face.tangent1); });
    c.face_block(f).segment(pf, pf) =
        l2_project(tab, [&u, &face](const Vec3& x) { return u(x).dot(face.tangent2); });
  }

  for (int e = 0; e < el_->num_edges(); ++e) {
    const Vec3 t = el_->edge(e).tangent;
    c.edge_block(e) =
        l2_project(edge_table(e, desc.edge_degree()),
                   [&u, &t](const Vec3& x) { return u(x).dot(t); });
  }
  return c;
}

WgCoefficients Projector::slot3(const VectorField& w) const {
  const SpaceDescriptor desc = make_space(family_, 3, k_);
  WgCoefficients c = zero_coefficients(desc, *el_);

  const EntityTable& vol = volume_table(desc.volume_degree());
  const int pv = static_cast<int>(vol.values.cols());
  for (int comp = 0; comp < 3; ++comp)
    c.volume_block().segment(comp * pv, pv) =
        l2_project(vol, [&w, comp](const Vec3& x) { return w(x)(comp); });

  for (int f = 0; f < el_->num_faces(); ++f) {
    const Vec3 n = el_->face(f).normal;
    c.face_block(f) = l2_project(face_table(f, desc.face_degree()),
                                 [&w, &n](const Vec3& x) { return w(x).dot(n); });
  }
  return c;
}

WgCoefficients Projector::slot4(const ScalarField& p) const {
  const SpaceDescriptor desc = make_space(family_, 4, k_);
  WgCoefficients c = zero_coefficients(desc, *el_);
  c.volume_block() = l2_project(volume_table(desc.volume_degree()), p.fn);
  return c;
}

WgCoefficients project_slot1(const PolyElement& el, Family family, int k, const ScalarField& v,
                             int quad_boost) {
  return Projector(el, family, k, quad_boost).slot1(v);
}

WgCoefficients project_slot2(const PolyElement& el, Family family, int k, const VectorField& u,
                             int quad_boost) {
  return Projector(el, family, k, quad_boost).slot2(u);
}

WgCoefficients project_slot3(const PolyElement& el, Family family, int k, const VectorField& w,
                             int quad_boost) {
  return Projector(el, family, k, quad_boost).slot3(w);
}

WgCoefficients project_slot4(const PolyElement& el, Family family, int k, const ScalarField& p,
                             int quad_boost) {
  return Projector(el, family, k, quad_boost).slot4(p);
}

}  // namespace wgdr
