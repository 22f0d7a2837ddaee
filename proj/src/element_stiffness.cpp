#include "shellbar/element_stiffness.hpp"

#include "shellbar/constitutive.hpp"

namespace shellbar {
namespace {

ElementStiffness integrate(const std::vector<SectionSample>& sections, const std::vector<QuadraturePoint>& points,
                           const std::vector<StrainMatrix>* projected, bool keep_mid) {
  ElementStiffness out;
  out.cp = sections.front().basis.cp;
  const auto size = sections.front().mid.cols();
  out.k = Eigen::MatrixXd::Zero(size, size);
  for (std::size_t g = 0; g < sections.size(); ++g) {
    const SectionSample& s = sections[g];
    const double w = points[g].weight;
    for (std::size_t z = 0; z < s.layers.size(); ++z) {
      const StrainMatrix db = s.d_global * s.layers[z].b;
      out.k.noalias() += (w * s.layer_weights[z] * s.layers[z].det_j) * (s.layers[z].b.transpose() * db);
    }
    if (!keep_mid) {
      out.k.noalias() -= (w * s.volume_measure) * (s.mid.transpose() * (s.d_global * s.mid));
    }
    if (projected != nullptr) {
      const StrainMatrix& bbar = (*projected)[g];
      out.k.noalias() += (w * s.volume_measure) * (bbar.transpose() * (s.d_global * bbar));
    }
  }
  out.k = 0.5 * (out.k + out.k.transpose()).eval();
  return out;
}

}  // namespace

std::vector<SectionSample> element_sections(const ShellModel& model, const ElementSpan& element,
                                            const QuadratureRule& rule) {
  const Matrix6d d_local = local_constitutive(model.material());
  const GaussRule thickness = rule.thickness(model.thickness());
  std::vector<SectionSample> out;
  for (const QuadraturePoint& q : rule.in_plane(element)) {
    out.push_back(section_sample(model, element, q.xi, q.eta, thickness, d_local));
  }
  return out;
}

ElementStiffness element_stiffness_iga(const ShellModel& model, const ElementSpan& element,
                                       const QuadratureRule& rule) {
  return integrate(element_sections(model, element, rule), rule.in_plane(element), nullptr, true);
}

ElementStiffness element_stiffness_without_mid(const ShellModel& model, const ElementSpan& element,
                                               const QuadratureRule& rule) {
  return integrate(element_sections(model, element, rule), rule.in_plane(element), nullptr, false);
}

ElementStiffness element_stiffness_bbar(const ShellModel& model, const ElementSpan& element,
                                        ProjectionOrders orders, const QuadratureRule& rule) {
  const auto points = rule.in_plane(element);
  const auto sections = element_sections(model, element, rule);
  Eigen::VectorXd area(static_cast<int>(sections.size()));
  std::vector<StrainMatrix> mids;
  for (std::size_t g = 0; g < sections.size(); ++g) {
    area[g] = sections[g].area_measure;
    mids.push_back(sections[g].mid);
  }
  const ElementProjection projection = element_projection(element, orders, points, area);
  const std::vector<StrainMatrix> projected = project_mid_strain(projection, mids);
  return integrate(sections, points, &projected, false);
}

}  // namespace shellbar
