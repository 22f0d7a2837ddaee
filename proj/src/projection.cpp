#include "shellbar/projection.hpp"

#include "shellbar/error.hpp"

namespace shellbar {

ProjectionAssignment assign_projection_spaces(int elements_xi, int elements_eta, ProjectionStrategy strategy,
                                              int p, int q) {
  if (elements_xi < 1 || elements_eta < 1) throw ArgumentError("mesh needs at least one element per direction");
  if (p < 1 || q < 1) throw ArgumentError("degrees must be >= 1");
  ProjectionAssignment out;
  out.elements_xi = elements_xi;
  out.elements_eta = elements_eta;
  out.orders.assign(elements_xi * elements_eta, ProjectionOrders{p - 1, q - 1});
  if (strategy == ProjectionStrategy::lb) return out;
  if (p != 2 || q != 2) {
    out.warning = "generalized strategy is defined for Q2,2 only; using one-order-lower spaces (LB) for degree (" +
                  std::to_string(p) + "," + std::to_string(q) + ")";
    return out;
  }
  const bool strip = elements_xi == 1 || elements_eta == 1;
  for (int j = 0; j < elements_eta; ++j) {
    for (int i = 0; i < elements_xi; ++i) {
      const bool on_xi_boundary = i == 0 || i == elements_xi - 1;    // xi = const edge, runs along eta
      const bool on_eta_boundary = j == 0 || j == elements_eta - 1;  // eta = const edge, runs along xi
      ProjectionOrders o{0, 0};
      if (strip || (on_xi_boundary && on_eta_boundary)) {
        o = {1, 1};
      } else if (on_eta_boundary) {
        o = {0, 1};  // constant along the boundary, linear towards the inside
      } else if (on_xi_boundary) {
        o = {1, 0};
      }
      out.orders[j * elements_xi + i] = o;
    }
  }
  return out;
}

ElementProjection element_projection(const ElementSpan& element, ProjectionOrders orders,
                                     const std::vector<QuadraturePoint>& points, const Eigen::VectorXd& area_measure) {
  const ProjectionBasis space(element, orders.p_bar, orders.q_bar);
  ElementProjection out;
  out.orders = orders;
  out.basis.resize(static_cast<int>(points.size()), space.size());
  out.measure.resize(static_cast<int>(points.size()));
  for (std::size_t g = 0; g < points.size(); ++g) {
    if (!(area_measure[g] > 0.0)) throw GeometryError("non-positive surface measure in projection");
    out.basis.row(g) = space.evaluate(points[g].xi, points[g].eta).transpose();
    out.measure[g] = points[g].weight * area_measure[g];
  }
  out.gram = out.basis.transpose() * out.measure.asDiagonal() * out.basis;
  if (Eigen::LLT<Eigen::MatrixXd>(out.gram).info() != Eigen::Success) {
    throw GeometryError("projection Gram matrix is not positive definite");
  }
  return out;
}

ElementProjection element_projection(const ShellModel& model, const ElementSpan& element, ProjectionOrders orders,
                                     const QuadratureRule& rule) {
  const auto points = rule.in_plane(element);
  Eigen::VectorXd area(static_cast<int>(points.size()));
  for (std::size_t g = 0; g < points.size(); ++g) {
    const SurfacePoint sp = surface_point(model, model.basis().evaluate(element, points[g].xi, points[g].eta));
    area[g] = sp.x_xi.cross(sp.x_eta).norm();
  }
  return element_projection(element, orders, points, area);
}

Eigen::MatrixXd projection_operator(const ElementProjection& projection) {
  const Eigen::LDLT<Eigen::MatrixXd> gram(projection.gram);
  if (gram.info() != Eigen::Success) throw NumericalError("singular projection Gram matrix");
  const Eigen::MatrixXd rhs = projection.basis.transpose() * projection.measure.asDiagonal();
  return projection.basis * gram.solve(rhs);
}

std::vector<StrainMatrix> project_mid_strain(const ElementProjection& projection,
                                             const std::vector<StrainMatrix>& mid_samples) {
  const Eigen::MatrixXd pi = projection_operator(projection);
  if (pi.rows() != static_cast<Eigen::Index>(mid_samples.size())) {
    throw ArgumentError("one MID sample per quadrature point is required");
  }
  std::vector<StrainMatrix> out(mid_samples.size());
  for (std::size_t g = 0; g < mid_samples.size(); ++g) {
    out[g] = StrainMatrix::Zero(6, mid_samples.front().cols());
    for (std::size_t h = 0; h < mid_samples.size(); ++h) out[g] += pi(g, h) * mid_samples[h];
  }
  return out;
}

}  // namespace shellbar
