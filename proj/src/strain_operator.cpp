#include "shellbar/strain_operator.hpp"

#include "shellbar/error.hpp"

namespace shellbar {
namespace {

// Symmetric gradient of the field v * f, given grad f, in Voigt form.
Vector6d voigt_strain(const Eigen::Vector3d& v, const Eigen::Vector3d& g) {
  Vector6d e;
  e << v[0] * g[0], v[1] * g[1], v[2] * g[2], v[0] * g[1] + v[1] * g[0], v[0] * g[2] + v[2] * g[0],
      v[1] * g[2] + v[2] * g[1];
  return e;
}

}  // namespace

StrainOperator strain_operator(const ShellModel& model, const BasisSample& s, double zeta) {
  const int slots = slots_per_point(model.kind());
  const int rotations = slots - 3;
  const auto& pts = model.net().points;
  const auto& dirs = model.directors();
  const auto count = static_cast<int>(s.cp.size());

  Eigen::Matrix3d jac = Eigen::Matrix3d::Zero();  // columns dx/dxi, dx/deta, dx/dzeta
  for (int a = 0; a < count; ++a) {
    const Eigen::Vector3d lifted = pts[s.cp[a]] + zeta * dirs[s.cp[a]];
    jac.col(0) += s.dr_dxi[a] * lifted;
    jac.col(1) += s.dr_deta[a] * lifted;
    jac.col(2) += s.r[a] * dirs[s.cp[a]];
  }
  StrainOperator op;
  op.det_j = jac.determinant();
  const double scale = jac.col(0).norm() * jac.col(1).norm() * jac.col(2).norm();
  if (!(op.det_j > 1e-14 * scale)) throw GeometryError("non-positive shell Jacobian determinant");
  const Eigen::Matrix3d inv = jac.inverse();

  op.b = StrainMatrix::Zero(6, count * slots);
  for (int a = 0; a < count; ++a) {
    const Eigen::Vector3d grad = s.dr_dxi[a] * inv.row(0).transpose() + s.dr_deta[a] * inv.row(1).transpose();
    const Eigen::Vector3d grad_rot = zeta * grad + s.r[a] * inv.row(2).transpose();
    for (int c = 0; c < 3; ++c) {
      op.b.col(a * slots + c) = voigt_strain(Eigen::Vector3d::Unit(c), grad);
    }
    // u_P picks up zeta * (theta x n_A).
    for (int c = 0; c < rotations; ++c) {
      const Eigen::Vector3d v = Eigen::Vector3d::Unit(c).cross(dirs[s.cp[a]]);
      op.b.col(a * slots + 3 + c) = voigt_strain(v, grad_rot);
    }
  }
  return op;
}

StrainOperator strain_operator(const ShellModel& model, const ElementSpan& element, double xi, double eta,
                               double zeta) {
  if (std::abs(zeta) > 0.5 * model.thickness() * (1.0 + 1e-12)) {
    throw ArgumentError("thickness coordinate outside [-h/2, h/2]");
  }
  return strain_operator(model, model.basis().evaluate(element, xi, eta), zeta);
}

StrainMatrix mid_operator(const ShellModel& model, const ElementSpan& element, double xi, double eta,
                          int thickness_points) {
  const BasisSample s = model.basis().evaluate(element, xi, eta);
  QuadratureRule rule;
  rule.points_zeta = thickness_points;
  const GaussRule g = rule.thickness(model.thickness());
  StrainMatrix mid = StrainMatrix::Zero(6, static_cast<int>(s.cp.size()) * slots_per_point(model.kind()));
  for (std::size_t k = 0; k < g.points.size(); ++k) mid += g.weights[k] * strain_operator(model, s, g.points[k]).b;
  return mid / model.thickness();
}

SectionSample section_sample(const ShellModel& model, const ElementSpan& element, double xi, double eta,
                             const GaussRule& thickness_rule, const Matrix6d& d_local) {
  SectionSample out;
  out.basis = model.basis().evaluate(element, xi, eta);
  out.surface = surface_point(model, out.basis);
  const LaminaFrame frame = lamina_frame(out.surface.x_xi, out.surface.x_eta);
  out.d_global = global_constitutive(frame, d_local);
  out.area_measure = out.surface.x_xi.cross(out.surface.x_eta).norm();
  out.layer_weights = thickness_rule.weights;
  out.mid = StrainMatrix::Zero(6, static_cast<int>(out.basis.cp.size()) * slots_per_point(model.kind()));
  for (std::size_t k = 0; k < thickness_rule.points.size(); ++k) {
    out.layers.push_back(strain_operator(model, out.basis, thickness_rule.points[k]));
    out.mid += thickness_rule.weights[k] * out.layers.back().b;
    out.volume_measure += thickness_rule.weights[k] * out.layers.back().det_j;
  }
  out.mid /= model.thickness();
  return out;
}

}  // namespace shellbar
