#include "shellbar/assembly.hpp"

#include <algorithm>
#include <thread>

#include "shellbar/element_stiffness.hpp"
#include "shellbar/error.hpp"
#include "shellbar/global_bbar.hpp"

namespace shellbar {

SparseMatrix GlobalSystem::free_stiffness() const {
  std::vector<Eigen::Triplet<double>> t;
  for (int c = 0; c < k_all.outerSize(); ++c) {
    const int fc = dofs.free_index(c);
    if (fc < 0) continue;
    for (SparseMatrix::InnerIterator it(k_all, c); it; ++it) {
      const int fr = dofs.free_index(static_cast<int>(it.row()));
      if (fr >= 0) t.emplace_back(fr, fc, it.value());
    }
  }
  SparseMatrix k(dofs.num_free(), dofs.num_free());
  k.setFromTriplets(t.begin(), t.end());
  return k;
}

Eigen::VectorXd GlobalSystem::free_load() const {
  Eigen::VectorXd prescribed = Eigen::VectorXd::Zero(dofs.num_slots());
  for (int s = 0; s < dofs.num_slots(); ++s) {
    if (!dofs.is_free(s)) prescribed[s] = dofs.prescribed(s);
  }
  return dofs.restrict(f_all - k_all * prescribed);
}

ProjectionAssignment projection_assignment(const ShellModel& model, Method method) {
  const auto strategy = method == Method::glb ? ProjectionStrategy::glb : ProjectionStrategy::lb;
  return assign_projection_spaces(model.basis().elements_xi(), model.basis().elements_eta(), strategy,
                                  model.degree_xi(), model.degree_eta());
}

SparseMatrix assemble_stiffness(const ShellModel& model, const AssemblyOptions& options,
                                std::optional<std::string>* warning) {
  const int slots = slots_per_point(model.kind());
  const int total = model.num_control_points() * slots;
  const QuadratureRule rule =
      quadrature_for(options.method, model.degree_xi(), model.degree_eta(), options.thickness_points);
  SparseMatrix k(total, total);

  if (options.method == Method::cbar) {
    k = global_bbar_stiffness(model, rule).sparseView(0.0, 0.0);
    return k;
  }

  const auto elements = model.basis().elements();
  const ProjectionAssignment assignment = projection_assignment(model, options.method);
  if (warning != nullptr && options.method == Method::glb) *warning = assignment.warning;

  std::vector<ElementStiffness> local(elements.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t e = begin; e < end; ++e) {
      const ElementSpan& el = elements[e];
      local[e] = options.method == Method::iga
                     ? element_stiffness_iga(model, el, rule)
                     : element_stiffness_bbar(model, el, assignment.at(el.ex, el.ey), rule);
    }
  };
  const std::size_t workers =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::max(options.threads, 1)), 1, elements.size());
  if (workers == 1) {
    work(0, elements.size());
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    const std::size_t chunk = (elements.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          work(w * chunk, std::min(elements.size(), (w + 1) * chunk));
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::vector<Eigen::Triplet<double>> triplets;
  for (const ElementStiffness& ke : local) {
    for (std::size_t a = 0; a < ke.cp.size(); ++a) {
      for (int sa = 0; sa < slots; ++sa) {
        for (std::size_t b = 0; b < ke.cp.size(); ++b) {
          for (int sb = 0; sb < slots; ++sb) {
            const double v = ke.k(a * slots + sa, b * slots + sb);
            if (v != 0.0) triplets.emplace_back(ke.cp[a] * slots + sa, ke.cp[b] * slots + sb, v);
          }
        }
      }
    }
  }
  k.setFromTriplets(triplets.begin(), triplets.end());
  return k;
}

GlobalSystem assemble(const ShellModel& model, const DofMap& dofs, const AssemblyOptions& options) {
  if (dofs.num_slots() != model.num_control_points() * slots_per_point(model.kind())) {
    throw ArgumentError("DOF map does not match the model");
  }
  GlobalSystem system{dofs, {}, Eigen::VectorXd::Zero(dofs.num_slots()), std::nullopt};
  system.k_all = assemble_stiffness(model, options, &system.warning);
  return system;
}

void apply_point_load(GlobalSystem& system, const ShellModel& model, std::array<double, 2> at,
                      const Eigen::Vector3d& direction, double magnitude) {
  const int slots = slots_per_point(model.kind());
  const BasisSample s = model.basis().evaluate(at[0], at[1]);
  for (std::size_t a = 0; a < s.cp.size(); ++a) {
    system.f_all.segment<3>(s.cp[a] * slots) += s.r[a] * magnitude * direction;
  }
}

void apply_pressure(GlobalSystem& system, const ShellModel& model, const std::optional<Eigen::Vector3d>& direction,
                    double magnitude) {
  if (magnitude == 0.0) return;
  const int slots = slots_per_point(model.kind());
  const QuadratureRule rule = quadrature_for(Method::iga, model.degree_xi(), model.degree_eta());
  for (const ElementSpan& el : model.basis().elements()) {
    for (const QuadraturePoint& q : rule.in_plane(el)) {
      const BasisSample s = model.basis().evaluate(el, q.xi, q.eta);
      const SurfacePoint sp = surface_point(model, s);
      const Eigen::Vector3d normal = sp.x_xi.cross(sp.x_eta);
      const double area = normal.norm();
      const Eigen::Vector3d d = direction ? *direction : Eigen::Vector3d(normal / area);
      const Eigen::Vector3d traction = (q.weight * area * magnitude) * d;
      for (std::size_t a = 0; a < s.cp.size(); ++a) system.f_all.segment<3>(s.cp[a] * slots) += s.r[a] * traction;
    }
  }
}

void apply_loads(GlobalSystem& system, const ShellModel& model, const std::vector<LoadSpec>& loads) {
  for (const LoadSpec& l : loads) {
    if (l.type == LoadType::point) {
      apply_point_load(system, model, l.at, l.direction, l.magnitude);
    } else if (l.along_normal) {
      apply_pressure(system, model, std::nullopt, l.magnitude);
    } else {
      apply_pressure(system, model, l.direction, l.magnitude);
    }
  }
}

Eigen::VectorXd reactions(const GlobalSystem& system, const Eigen::VectorXd& displacement) {
  return system.k_all * displacement - system.f_all;
}

}  // namespace shellbar
