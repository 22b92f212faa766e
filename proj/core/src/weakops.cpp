#include "wgdr/weakops.hpp"

#include <array>

#include "wgdr/errors.hpp"
#include "wgdr/polybasis.hpp"
#include "wgdr/quadrature.hpp"

namespace wgdr {

namespace {

// One conservative exactness degree for every assembly: mass terms need 2k,
// derivative terms at most 2k+1 across both families.
int assembly_degree(int k) { return 2 * k + 2; }

struct Tab {
  Eigen::MatrixXd val;                 // npts x size
  std::array<Eigen::MatrixXd, 3> der;  // partials, npts x size (first dim() rows used)
};

Tab tabulate_volume(const ScalarBasis& b, const QuadratureRule& rule, bool with_der) {
  Tab t;
  t.val.resize(rule.size(), b.size());
  if (with_der)
    for (int c = 0; c < 3; ++c) t.der[c].resize(rule.size(), b.size());
  for (int q = 0; q < rule.size(); ++q) {
    t.val.row(q) = b.eval(rule.points[q]);
    if (with_der) {
      const Eigen::MatrixXd g = b.grad(rule.points[q]);
      for (int c = 0; c < 3; ++c) t.der[c].row(q) = g.row(c);
    }
  }
  return t;
}

Tab tabulate_on_face(const ScalarBasis& b, const FaceGeom& face, const QuadratureRule& rule,
                     bool with_der) {
  Tab t;
  t.val.resize(rule.size(), b.size());
  if (with_der)
    for (int c = 0; c < 2; ++c) t.der[c].resize(rule.size(), b.size());
  for (int q = 0; q < rule.size(); ++q) {
    const Vec2 s = face.to_local(rule.points[q]);
    const Vec3 local(s.x(), s.y(), 0.0);
    t.val.row(q) = b.eval(local);
    if (with_der) {
      const Eigen::MatrixXd g = b.grad(local);
      for (int c = 0; c < 2; ++c) t.der[c].row(q) = g.row(c);
    }
  }
  return t;
}

Tab tabulate_on_edge(const ScalarBasis& b, const EdgeGeom& edge, const QuadratureRule& rule,
                     bool with_der) {
  Tab t;
  t.val.resize(rule.size(), b.size());
  if (with_der) t.der[0].resize(rule.size(), b.size());
  for (int q = 0; q < rule.size(); ++q) {
    const Vec3 local(edge.arc_coord(rule.points[q]), 0.0, 0.0);
    t.val.row(q) = b.eval(local);
    if (with_der) t.der[0].row(q) = b.grad(local).row(0);
  }
  return t;
}

// (A, B)_w = A^T diag(w) B
Eigen::MatrixXd weighted_ip(const Eigen::MatrixXd& a, const Eigen::VectorXd& w,
                            const Eigen::MatrixXd& b) {
  return a.transpose() * w.asDiagonal() * b;
}

Vec3 unit_cross(int c, const Vec3& n) { return Vec3::Unit(c).cross(n); }

}  // namespace

GramSolver::GramSolver(const Eigen::MatrixXd& gram) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  if (es.info() != Eigen::Success) throw SingularGram("Gram eigendecomposition failed");
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double lambda_max = ev(ev.size() - 1);
  const double lambda_min = ev(0);
  if (!(lambda_max > 0.0) || lambda_min <= lambda_max * 1e-14)
    throw SingularGram("entity Gram matrix is numerically singular");
  condition_ = lambda_max / lambda_min;

  if (condition_ > 1e12) {
    truncated_ = true;
    spectral_basis_ = es.eigenvectors();
    spectral_inverse_ = (ev.array() > lambda_max * 1e-12)
                            .select(ev.array().inverse(), Eigen::ArrayXd::Zero(ev.size()))
                            .matrix();
  } else {
    llt_.compute(gram);
    if (llt_.info() != Eigen::Success) throw SingularGram("Gram Cholesky factorization failed");
  }
}

Eigen::MatrixXd GramSolver::solve(const Eigen::MatrixXd& rhs) const {
  if (truncated_)
    return spectral_basis_ *
           (spectral_inverse_.asDiagonal() * (spectral_basis_.transpose() * rhs));
  return llt_.solve(rhs);
}

Eigen::MatrixXd weak_gradient_volume(const PolyElement& el, Family family, int k) {
  const SpaceDescriptor d1 = make_space(family, 1, k);
  const SpaceDescriptor d2 = make_space(family, 2, k);
  const DofLayout in = dof_layout(d1, el);
  const int N = assembly_degree(k);

  const ScalarBasis test = volume_basis(el, d2.volume_degree());
  const ScalarBasis trial = volume_basis(el, d1.volume_degree());
  const QuadratureRule qv = volume_rule(el, N);
  const Tab tt = tabulate_volume(test, qv, true);
  const Tab tr = tabulate_volume(trial, qv, false);
  const GramSolver gram(weighted_ip(tt.val, qv.weights, tt.val));

  const int pt = test.size();
  Eigen::MatrixXd out(3 * pt, in.total);
  for (int c = 0; c < 3; ++c) {
    Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(pt, in.total);
    // -(v_0, d/dx_c test)_T
    rhs.middleCols(in.volume_offset, in.volume_size) = -weighted_ip(tt.der[c], qv.weights, tr.val);
    // +(v_f, test * n_c)_f on every face
    for (int f = 0; f < el.num_faces(); ++f) {
      const QuadratureRule qf = face_rule(el, f, N);
      const Tab test_f = tabulate_volume(test, qf, false);
      const Tab face_tr = tabulate_on_face(face_basis(el, f, d1.face_degree()), el.face(f), qf, false);
      rhs.middleCols(in.face_offset(f), in.face_size) +=
          el.face(f).normal(c) * weighted_ip(test_f.val, qf.weights, face_tr.val);
    }
    out.middleRows(c * pt, pt) = gram.solve(rhs);
  }
  return out;
}

Eigen::MatrixXd weak_gradient_face(const PolyElement& el, int face_id, Family family, int k) {
  const SpaceDescriptor d1 = make_space(family, 1, k);
  const SpaceDescriptor d2 = make_space(family, 2, k);
  const DofLayout in = dof_layout(d1, el);
  const FaceGeom& face = el.face(face_id);
  const int N = assembly_degree(k);

  const ScalarBasis test = face_basis(el, face_id, d2.face_degree());
  const QuadratureRule qf = face_rule(el, face_id, N);
  const Tab tt = tabulate_on_face(test, face, qf, true);
  const GramSolver gram(weighted_ip(tt.val, qf.weights, tt.val));
  const Tab tr = tabulate_on_face(face_basis(el, face_id, d1.face_degree()), face, qf, false);

  const int p = test.size();
  // Test fields theta = m_j t1 and theta = m_j t2; the Gram system is solved
  // in the rotated basis psi = theta x n_f, which spans the same tangential
  // space with an orthogonal change of frame.
  Eigen::MatrixXd rhs1 = Eigen::MatrixXd::Zero(p, in.total);
  Eigen::MatrixXd rhs2 = Eigen::MatrixXd::Zero(p, in.total);

  // -(v_f, curl theta . n_f)_f: curl(m_j t1).n = -d m_j/ds2, curl(m_j t2).n = d m_j/ds1
  rhs1.middleCols(in.face_offset(face_id), in.face_size) = weighted_ip(tt.der[1], qf.weights, tr.val);
  rhs2.middleCols(in.face_offset(face_id), in.face_size) = -weighted_ip(tt.der[0], qf.weights, tr.val);

  // +(v_e, theta . t_df)_df edge by edge
  for (const FaceIncidence& inc : face.boundary) {
    const EdgeGeom& edge = el.edge(inc.edge);
    const QuadratureRule qe = edge_rule(el, inc.edge, N);
    const Tab test_e = tabulate_on_face(test, face, qe, false);
    const Tab tr_e = tabulate_on_edge(edge_basis(el, inc.edge, d1.edge_degree()), edge, qe, false);
    const Eigen::MatrixXd pairing = weighted_ip(test_e.val, qe.weights, tr_e.val);
    const Vec3 t_loop = inc.sign * edge.tangent;
    rhs1.middleCols(in.edge_offset(inc.edge), in.edge_size) += face.tangent1.dot(t_loop) * pairing;
    rhs2.middleCols(in.edge_offset(inc.edge), in.edge_size) += face.tangent2.dot(t_loop) * pairing;
  }

  const Eigen::MatrixXd a1 = gram.solve(rhs1);
  const Eigen::MatrixXd a2 = gram.solve(rhs2);

  // g = sum_j a1_j (m_j t1 x n) + a2_j (m_j t2 x n) = sum_j (a2_j m_j) t1 - (a1_j m_j) t2
  Eigen::MatrixXd out(2 * p, in.total);
  out.topRows(p) = a2;
  out.bottomRows(p) = -a1;
  return out;
}

Eigen::MatrixXd weak_gradient_edge(const PolyElement& el, int edge_id, Family family, int k) {
  const SpaceDescriptor d1 = make_space(family, 1, k);
  const SpaceDescriptor d2 = make_space(family, 2, k);
  const DofLayout in = dof_layout(d1, el);
  const EdgeGeom& edge = el.edge(edge_id);
  const int N = assembly_degree(k);

  const ScalarBasis test = edge_basis(el, edge_id, d2.edge_degree());
  const QuadratureRule qe = edge_rule(el, edge_id, N);
  const Tab tt = tabulate_on_edge(test, edge, qe, true);
  const GramSolver gram(weighted_ip(tt.val, qe.weights, tt.val));
  const Tab tr = tabulate_on_edge(edge_basis(el, edge_id, d1.edge_degree()), edge, qe, false);

  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(test.size(), in.total);
  rhs.middleCols(in.edge_offset(edge_id), in.edge_size) = -weighted_ip(tt.der[0], qe.weights, tr.val);

  // (v_n, phi t_e . n_de)_de telescopes to head minus tail values.
  const double half = 0.5 * edge.length;
  rhs.col(in.vertex_offset(edge.head)) += test.eval(Vec3(half, 0, 0));
  rhs.col(in.vertex_offset(edge.tail)) -= test.eval(Vec3(-half, 0, 0));

  return gram.solve(rhs);
}

Eigen::MatrixXd weak_curl_volume(const PolyElement& el, Family family, int k) {
  const SpaceDescriptor d2 = make_space(family, 2, k);
  const SpaceDescriptor d3 = make_space(family, 3, k);
  const DofLayout in = dof_layout(d2, el);
  const int N = assembly_degree(k);

  const ScalarBasis test = volume_basis(el, d3.volume_degree());
  const ScalarBasis trial = volume_basis(el, d2.volume_degree());
  const QuadratureRule qv = volume_rule(el, N);
  const Tab tt = tabulate_volume(test, qv, true);
  const Tab tr = tabulate_volume(trial, qv, false);
  const GramSolver gram(weighted_ip(tt.val, qv.weights, tt.val));

  const int pt = test.size();
  const int pv = trial.size();
  Eigen::MatrixXd out(3 * pt, in.total);
  for (int c = 0; c < 3; ++c) {
    Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(pt, in.total);

    // (u_0, curl(m_j e_c))_T: the e_b component of grad m_j x e_c is
    // grad m_j . (e_c x e_b).
    for (int b = 0; b < 3; ++b) {
      const Vec3 cxb = Vec3::Unit(c).cross(Vec3::Unit(b));
      Eigen::MatrixXd block = Eigen::MatrixXd::Zero(pt, pv);
      for (int d = 0; d < 3; ++d)
        if (cxb(d) != 0.0) block += cxb(d) * weighted_ip(tt.der[d], qv.weights, tr.val);
      rhs.middleCols(in.volume_offset + b * pv, pv) = block;
    }

    // (u_f, m_j e_c x n)_f: tangential data u_f = u1 t1 + u2 t2.
    for (int f = 0; f < el.num_faces(); ++f) {
      const FaceGeom& face = el.face(f);
      const QuadratureRule qf = face_rule(el, f, N);
      const Tab test_f = tabulate_volume(test, qf, false);
      const Tab u_f = tabulate_on_face(face_basis(el, f, d2.face_degree()), face, qf, false);
      const Eigen::MatrixXd pairing = weighted_ip(test_f.val, qf.weights, u_f.val);
      const Vec3 cxn = unit_cross(c, face.normal);
      const int pf = static_cast<int>(u_f.val.cols());
      rhs.middleCols(in.face_offset(f), pf) += face.tangent1.dot(cxn) * pairing;
      rhs.middleCols(in.face_offset(f) + pf, pf) += face.tangent2.dot(cxn) * pairing;
    }

    out.middleRows(c * pt, pt) = gram.solve(rhs);
  }
  return out;
}

Eigen::MatrixXd weak_curl_face(const PolyElement& el, int face_id, Family family, int k) {
  const SpaceDescriptor d2 = make_space(family, 2, k);
  const SpaceDescriptor d3 = make_space(family, 3, k);
  const DofLayout in = dof_layout(d2, el);
  const FaceGeom& face = el.face(face_id);
  const int N = assembly_degree(k);

  const ScalarBasis test = face_basis(el, face_id, d3.face_degree());
  const QuadratureRule qf = face_rule(el, face_id, N);
  const Tab tt = tabulate_on_face(test, face, qf, true);
  const GramSolver gram(weighted_ip(tt.val, qf.weights, tt.val));
  const Tab u_f = tabulate_on_face(face_basis(el, face_id, d2.face_degree()), face, qf, false);

  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(test.size(), in.total);

  // (u_f, grad tau x n_f)_f with grad tau x n = -(d tau/ds1) t2 + (d tau/ds2) t1
  const int pf = static_cast<int>(u_f.val.cols());
  rhs.middleCols(in.face_offset(face_id), pf) = weighted_ip(tt.der[1], qf.weights, u_f.val);
  rhs.middleCols(in.face_offset(face_id) + pf, pf) = -weighted_ip(tt.der[0], qf.weights, u_f.val);

  // (u_e, tau t_df)_df: edge data is u t_e, so the pairing picks up the
  // orientation sign of each boundary edge.
  for (const FaceIncidence& inc : face.boundary) {
    const EdgeGeom& edge = el.edge(inc.edge);
    const QuadratureRule qe = edge_rule(el, inc.edge, N);
    const Tab test_e = tabulate_on_face(test, face, qe, false);
    const Tab u_e = tabulate_on_edge(edge_basis(el, inc.edge, d2.edge_degree()), edge, qe, false);
    rhs.middleCols(in.edge_offset(inc.edge), in.edge_size) +=
        inc.sign * weighted_ip(test_e.val, qe.weights, u_e.val);
  }

  return gram.solve(rhs);
}

OperatorMatrix weak_divergence(const PolyElement& el, Family family, int k) {
  const SpaceDescriptor d3 = make_space(family, 3, k);
  const SpaceDescriptor d4 = make_space(family, 4, k);
  const DofLayout in = dof_layout(d3, el);
  const int N = assembly_degree(k);

  const ScalarBasis test = volume_basis(el, d4.volume_degree());
  const ScalarBasis trial = volume_basis(el, d3.volume_degree());
  const QuadratureRule qv = volume_rule(el, N);
  const Tab tt = tabulate_volume(test, qv, true);
  const Tab tr = tabulate_volume(trial, qv, false);
  const GramSolver gram(weighted_ip(tt.val, qv.weights, tt.val));

  const int pv = trial.size();
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(test.size(), in.total);
  for (int b = 0; b < 3; ++b)
    rhs.middleCols(in.volume_offset + b * pv, pv) = -weighted_ip(tt.der[b], qv.weights, tr.val);

  // (w_f, tau n)_f = (w_f_scalar, tau)_f since the face data is w n_f.
  for (int f = 0; f < el.num_faces(); ++f) {
    const QuadratureRule qf = face_rule(el, f, N);
    const Tab test_f = tabulate_volume(test, qf, false);
    const Tab w_f = tabulate_on_face(face_basis(el, f, d3.face_degree()), el.face(f), qf, false);
    rhs.middleCols(in.face_offset(f), in.face_size) +=
        weighted_ip(test_f.val, qf.weights, w_f.val);
  }

  OperatorMatrix op;
  op.domain = d3;
  op.codomain = d4;
  op.entries = gram.solve(rhs);
  return op;
}

OperatorMatrix composite_gradient(const PolyElement& el, Family family, int k) {
  const SpaceDescriptor d1 = make_space(family, 1, k);
  const SpaceDescriptor d2 = make_space(family, 2, k);
  const DofLayout in = dof_layout(d1, el);
  const DofLayout out_layout = dof_layout(d2, el);

  OperatorMatrix op;
  op.domain = d1;
  op.codomain = d2;
  op.entries.resize(out_layout.total, in.total);

  op.entries.middleRows(out_layout.volume_offset, out_layout.volume_size) =
      weak_gradient_volume(el, family, k);
  for (int f = 0; f < el.num_faces(); ++f)
    op.entries.middleRows(out_layout.face_offset(f), out_layout.face_size) =
        weak_gradient_face(el, f, family, k);
  for (int e = 0; e < el.num_edges(); ++e)
    op.entries.middleRows(out_layout.edge_offset(e), out_layout.edge_size) =
        weak_gradient_edge(el, e, family, k);
  return op;
}

OperatorMatrix composite_curl(const PolyElement& el, Family family, int k) {
  const SpaceDescriptor d2 = make_space(family, 2, k);
  const SpaceDescriptor d3 = make_space(family, 3, k);
  const DofLayout in = dof_layout(d2, el);
  const DofLayout out_layout = dof_layout(d3, el);

  OperatorMatrix op;
  op.domain = d2;
  op.codomain = d3;
  op.entries.resize(out_layout.total, in.total);

  op.entries.middleRows(out_layout.volume_offset, out_layout.volume_size) =
      weak_curl_volume(el, family, k);
  for (int f = 0; f < el.num_faces(); ++f)
    op.entries.middleRows(out_layout.face_offset(f), out_layout.face_size) =
        weak_curl_face(el, f, family, k);
  return op;
}

WgCoefficients apply(const OperatorMatrix& op, const PolyElement& el, const WgCoefficients& v) {
  if (!(v.desc == op.domain)) throw Error("operator applied to coefficients of another space");
  WgCoefficients out = zero_coefficients(op.codomain, el);
  out.values = op.entries * v.values;
  return out;
}

}  // namespace wgdr
