#include "shellbar/shell_model.hpp"

#include <cmath>
#include <sstream>

#include "shellbar/error.hpp"

namespace shellbar {
namespace {

std::vector<double> checked_weights(const ControlNet& net) {
  net.validate();
  return net.weights;
}

}  // namespace

void Material::validate() const {
  if (!(E > 0.0)) throw ArgumentError("Young's modulus must be positive");
  if (!(nu >= 0.0 && nu < 0.5)) throw ArgumentError("Poisson ratio must lie in [0, 0.5)");
  if (!(kappa > 0.0)) throw ArgumentError("shear correction factor must be positive");
}

ShellModel::ShellModel(KnotVector xi, KnotVector eta, ControlNet net, double thickness, Material material,
                       ShellKind kind)
    : basis_(std::move(xi), std::move(eta), checked_weights(net)),
      net_(std::move(net)),
      thickness_(thickness),
      material_(material),
      kind_(kind) {
  if (net_.n != basis_.n() || net_.m != basis_.m()) {
    std::ostringstream os;
    os << "control net " << net_.n << "x" << net_.m << " does not match basis " << basis_.n() << "x"
       << basis_.m();
    throw ArgumentError(os.str());
  }
  if (!(thickness_ > 0.0)) throw ArgumentError("thickness must be positive");
  material_.validate();
  directors_ = compute_directors(*this);
}

ShellModel ShellModel::with_geometry(KnotVector xi, KnotVector eta, ControlNet net) const {
  return ShellModel(std::move(xi), std::move(eta), std::move(net), thickness_, material_, kind_);
}

ShellModel ShellModel::with_thickness(double thickness) const {
  return ShellModel(basis_.xi(), basis_.eta(), net_, thickness, material_, kind_);
}

SurfacePoint surface_point(const ShellModel& model, const BasisSample& sample) {
  SurfacePoint sp{Eigen::Vector3d::Zero(), Eigen::Vector3d::Zero(), Eigen::Vector3d::Zero()};
  const auto& pts = model.net().points;
  for (std::size_t a = 0; a < sample.cp.size(); ++a) {
    const Eigen::Vector3d& xa = pts[sample.cp[a]];
    sp.x += sample.r[a] * xa;
    sp.x_xi += sample.dr_dxi[a] * xa;
    sp.x_eta += sample.dr_deta[a] * xa;
  }
  return sp;
}

SurfacePoint surface_point(const ShellModel& model, double xi, double eta) {
  const SurfacePoint sp = surface_point(model, model.basis().evaluate(xi, eta));
  unit_normal(sp);  // rejects degenerate tangents
  return sp;
}

Eigen::Vector3d unit_normal(const SurfacePoint& point) {
  const Eigen::Vector3d c = point.x_xi.cross(point.x_eta);
  const double scale = point.x_xi.norm() * point.x_eta.norm();
  if (!(scale > 0.0) || c.norm() <= 1e-14 * scale) {
    throw GeometryError("degenerate surface tangents (zero cross product)");
  }
  return c.normalized();
}

Eigen::Vector3d unit_normal(const ShellModel& model, double xi, double eta) {
  return unit_normal(surface_point(model, model.basis().evaluate(xi, eta)));
}

std::vector<Eigen::Vector3d> compute_directors(const ShellModel& model) {
  const int n = model.net().n;
  const int m = model.net().m;
  std::vector<Eigen::Vector3d> out(n * m, Eigen::Vector3d::UnitZ());
  if (model.kind() == ShellKind::plate) return out;
  const auto gx = greville_abscissae(model.basis().xi());
  const auto gy = greville_abscissae(model.basis().eta());
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) out[j * n + i] = unit_normal(model, gx[i], gy[j]);
  }
  return out;
}

Eigen::Vector3d interpolated_director(const ShellModel& model, const BasisSample& sample) {
  Eigen::Vector3d d = Eigen::Vector3d::Zero();
  for (std::size_t a = 0; a < sample.cp.size(); ++a) d += sample.r[a] * model.directors()[sample.cp[a]];
  return d;
}

Eigen::Vector3d shell_point(const ShellModel& model, double xi, double eta, double zeta) {
  const double half = 0.5 * model.thickness();
  if (std::abs(zeta) > half * (1.0 + 1e-12)) {
    throw ArgumentError("thickness coordinate outside [-h/2, h/2]");
  }
  const BasisSample s = model.basis().evaluate(xi, eta);
  Eigen::Vector3d x = Eigen::Vector3d::Zero();
  for (std::size_t a = 0; a < s.cp.size(); ++a) {
    x += s.r[a] * (model.net().points[s.cp[a]] + zeta * model.directors()[s.cp[a]]);
  }
  return x;
}

ShellModel refine_uniform(const ShellModel& model, int elements_xi, int elements_eta) {
  auto [kx, net1] = insert_knots(model.basis().xi(), missing_uniform_knots(model.basis().xi(), elements_xi),
                                 model.net(), Direction::xi);
  auto [ky, net2] = insert_knots(model.basis().eta(), missing_uniform_knots(model.basis().eta(), elements_eta),
                                 net1, Direction::eta);
  return model.with_geometry(std::move(kx), std::move(ky), std::move(net2));
}

ShellModel elevate_to(const ShellModel& model, int degree) {
  KnotVector kx = model.basis().xi();
  KnotVector ky = model.basis().eta();
  ControlNet net = model.net();
  if (degree > kx.degree()) std::tie(kx, net) = elevate_degree(kx, net, degree - kx.degree(), Direction::xi);
  if (degree > ky.degree()) std::tie(ky, net) = elevate_degree(ky, net, degree - ky.degree(), Direction::eta);
  return model.with_geometry(std::move(kx), std::move(ky), std::move(net));
}

}  // namespace shellbar
