#include "shellbar/global_bbar.hpp"

#include <Eigen/Sparse>

#include "shellbar/element_stiffness.hpp"
#include "shellbar/error.hpp"

namespace shellbar {

GlobalProjector::GlobalProjector(const ShellModel& model, const QuadratureRule& rule) {
  if (model.degree_xi() < 2 || model.degree_eta() < 2) {
    throw ArgumentError("classical B-bar needs degree >= 2 in both directions");
  }
  const KnotVector lower_xi = reduced_knot_vector(model.basis().xi());
  const KnotVector lower_eta = reduced_knot_vector(model.basis().eta());
  const SurfaceBasis lower(lower_xi, lower_eta,
                           std::vector<double>(lower_xi.num_basis() * lower_eta.num_basis(), 1.0));
  gram_ = Eigen::MatrixXd::Zero(lower.num_functions(), lower.num_functions());
  for (const ElementSpan& element : model.basis().elements()) {
    std::vector<PointBasis> pts;
    for (const QuadraturePoint& q : rule.in_plane(element)) {
      const SurfacePoint sp = surface_point(model, model.basis().evaluate(element, q.xi, q.eta));
      const BasisSample s = lower.evaluate(q.xi, q.eta);
      PointBasis pb{s.cp, s.r, q.weight * sp.x_xi.cross(sp.x_eta).norm()};
      if (!(pb.measure > 0.0)) throw GeometryError("non-positive surface measure in global projection");
      for (std::size_t a = 0; a < pb.index.size(); ++a) {
        for (std::size_t b = 0; b < pb.index.size(); ++b) {
          gram_(pb.index[a], pb.index[b]) += pb.measure * pb.value[a] * pb.value[b];
        }
      }
      pts.push_back(std::move(pb));
    }
    points_.push_back(std::move(pts));
  }
  factor_.compute(gram_);
  if (factor_.info() != Eigen::Success || factor_.vectorD().minCoeff() <= 0.0) {
    throw NumericalError("singular global projection Gram matrix");
  }
}

std::vector<std::vector<Eigen::MatrixXd>> GlobalProjector::project(
    const std::vector<std::vector<Eigen::MatrixXd>>& samples) const {
  if (samples.size() != points_.size()) throw ArgumentError("one sample set per element is required");
  const auto rows = samples.front().front().rows();
  const auto cols = samples.front().front().cols();
  // Flatten each sample; rhs row k = integral of N_k times the field.
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(size(), rows * cols);
  for (std::size_t e = 0; e < points_.size(); ++e) {
    if (samples[e].size() != points_[e].size()) throw ArgumentError("one sample per quadrature point is required");
    for (std::size_t g = 0; g < points_[e].size(); ++g) {
      const PointBasis& pb = points_[e][g];
      const Eigen::Map<const Eigen::RowVectorXd> flat(samples[e][g].data(), rows * cols);
      for (std::size_t a = 0; a < pb.index.size(); ++a) rhs.row(pb.index[a]) += pb.measure * pb.value[a] * flat;
    }
  }
  const Eigen::MatrixXd coeff = factor_.solve(rhs);
  std::vector<std::vector<Eigen::MatrixXd>> out(points_.size());
  for (std::size_t e = 0; e < points_.size(); ++e) {
    for (const PointBasis& pb : points_[e]) {
      Eigen::RowVectorXd flat = Eigen::RowVectorXd::Zero(rows * cols);
      for (std::size_t a = 0; a < pb.index.size(); ++a) flat += pb.value[a] * coeff.row(pb.index[a]);
      out[e].push_back(Eigen::Map<const Eigen::MatrixXd>(flat.data(), rows, cols));
    }
  }
  return out;
}

Eigen::MatrixXd global_bbar_stiffness(const ShellModel& model, const QuadratureRule& rule) {
  const int slots = slots_per_point(model.kind());
  const int dofs = model.num_control_points() * slots;
  if (dofs > kGlobalBbarMaxDofs) throw ArgumentError("classical B-bar is limited to moderate meshes");
  const GlobalProjector projector(model, rule);
  const int nbar = projector.size();
  const auto elements = model.basis().elements();

  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(dofs, dofs);
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(6 * nbar, dofs);  // integral of N_k MID, stacked 6 rows per k
  std::vector<Eigen::Triplet<double>> h_entries;

  for (std::size_t e = 0; e < elements.size(); ++e) {
    const auto sections = element_sections(model, elements[e], rule);
    const auto points = rule.in_plane(elements[e]);
    const ElementStiffness base = element_stiffness_without_mid(model, elements[e], rule);
    const auto& cp = base.cp;
    for (std::size_t a = 0; a < cp.size(); ++a) {
      for (std::size_t b = 0; b < cp.size(); ++b) {
        k.block(cp[a] * slots, cp[b] * slots, slots, slots) += base.k.block(a * slots, b * slots, slots, slots);
      }
    }
    for (std::size_t q = 0; q < sections.size(); ++q) {
      const SectionSample& s = sections[q];
      const GlobalProjector::PointBasis& pb = projector.element_points(static_cast<int>(e))[q];
      for (std::size_t i = 0; i < pb.index.size(); ++i) {
        const double f = pb.measure * pb.value[i];
        for (std::size_t a = 0; a < cp.size(); ++a) {
          g.block(6 * pb.index[i], cp[a] * slots, 6, slots) += f * s.mid.middleCols(a * slots, slots);
        }
        for (std::size_t j = 0; j < pb.index.size(); ++j) {
          const double c = points[q].weight * s.volume_measure * pb.value[i] * pb.value[j];
          for (int r = 0; r < 6; ++r) {
            for (int t = 0; t < 6; ++t) {
              if (s.d_global(r, t) != 0.0) {
                h_entries.emplace_back(6 * pb.index[i] + r, 6 * pb.index[j] + t, c * s.d_global(r, t));
              }
            }
          }
        }
      }
    }
  }
  // C = (M^-1 kron I6) G, evaluated per Voigt component.
  Eigen::MatrixXd c(6 * nbar, dofs);
  {
    const Eigen::LDLT<Eigen::MatrixXd> m(projector.gram());
    for (int r = 0; r < 6; ++r) {
      Eigen::MatrixXd rows(nbar, dofs);
      for (int k2 = 0; k2 < nbar; ++k2) rows.row(k2) = g.row(6 * k2 + r);
      const Eigen::MatrixXd solved = m.solve(rows);
      for (int k2 = 0; k2 < nbar; ++k2) c.row(6 * k2 + r) = solved.row(k2);
    }
  }
  Eigen::SparseMatrix<double> h(6 * nbar, 6 * nbar);
  h.setFromTriplets(h_entries.begin(), h_entries.end());
  const Eigen::MatrixXd hc = h * c;
  k.noalias() += c.transpose() * hc;
  return 0.5 * (k + k.transpose());
}

}  // namespace shellbar
