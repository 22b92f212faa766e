// Entity-wise L2 projections from smooth fields onto the WG spaces: the
// commuting projections of both families (componentwise volume projections,
// tangential/normal trace projections on faces, tangential edge projections,
// vertex point values).

#ifndef WGDR_PROJECTIONS_HPP
#define WGDR_PROJECTIONS_HPP

#include <functional>
#include <map>
#include <optional>

#include "wgdr/quadrature.hpp"
#include "wgdr/weakops.hpp"
#include "wgdr/wgspaces.hpp"

namespace wgdr {

/// Scalar function assumed smooth on the element closure. The optional degree
/// tag marks exact polynomial inputs.
struct ScalarField {
  std::function<double(const Vec3&)> fn;
  std::optional<int> polynomial_degree = {};
  double operator()(const Vec3& x) const { return fn(x); }
};

struct VectorField {
  std::function<Vec3(const Vec3&)> fn;
  std::optional<int> polynomial_degree = {};
  Vec3 operator()(const Vec3& x) const { return fn(x); }
};

/// Precomputed projection engine for one (element, family, k). Entity
/// quadratures use exactness degree 2k+2+quad_boost; the +6 default keeps
/// transcendental inputs accurate to well below 1e-8. All tables are built
/// up front, so a constructed Projector is safe for concurrent use.
class Projector {
 public:
  Projector(const PolyElement& el, Family family, int k, int quad_boost = 6);

  /// Slot 1: {Q_0 v, Q_f v|_f, Q_e v|_e, v|_n}.
  WgCoefficients slot1(const ScalarField& v) const;

  /// Slot 2: componentwise volume projection, tangential face trace
  /// n_f x (u x n_f) projected in (t1, t2) coordinates, edge projection of
  /// u . t_e.
  WgCoefficients slot2(const VectorField& u) const;

  /// Slot 3: componentwise volume projection plus normal traces w . n_f.
  WgCoefficients slot3(const VectorField& w) const;

  /// Slot 4: a single volume projection.
  WgCoefficients slot4(const ScalarField& p) const;

  const PolyElement& element() const { return *el_; }

 private:
  struct EntityTable {
    QuadratureRule rule;
    Eigen::MatrixXd values;  // npts x basis size
    GramSolver gram;
  };

  const EntityTable& volume_table(int degree) const { return volume_tables_.at(degree); }
  const EntityTable& face_table(int face, int degree) const {
    return face_tables_.at({face, degree});
  }
  const EntityTable& edge_table(int edge, int degree) const {
    return edge_tables_.at({edge, degree});
  }

  void build_volume_table(int degree);
  void build_face_tables(int degree);
  void build_edge_tables(int degree);

  Eigen::VectorXd l2_project(const EntityTable& table,
                             const std::function<double(const Vec3&)>& f) const;

  const PolyElement* el_;
  Family family_;
  int k_;
  int quad_degree_;
  std::map<int, EntityTable> volume_tables_;
  std::map<std::pair<int, int>, EntityTable> face_tables_;
  std::map<std::pair<int, int>, EntityTable> edge_tables_;
};

// One-shot wrappers.
WgCoefficients project_slot1(const PolyElement& el, Family family, int k, const ScalarField& v,
                             int quad_boost = 6);
WgCoefficients project_slot2(const PolyElement& el, Family family, int k, const VectorField& u,
                             int quad_boost = 6);
WgCoefficients project_slot3(const PolyElement& el, Family family, int k, const VectorField& w,
                             int quad_boost = 6);
WgCoefficients project_slot4(const PolyElement& el, Family family, int k, const ScalarField& p,
                             int quad_boost = 6);

}  // namespace wgdr

#endif
