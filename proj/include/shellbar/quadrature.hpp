#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shellbar/surface_basis.hpp"

namespace shellbar {

/// Analysis formulations: standard Galerkin IGA, local B-bar (LB), generalized
/// local B-bar (GLB) and the patch-wide classical B-bar (cbar).
enum class Method { iga, lb, glb, cbar };

const char* to_string(Method method);
std::optional<Method> method_from_string(const std::string& s);

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> points;
  std::vector<double> weights;
};

GaussRule gauss_legendre(int count);

struct QuadraturePoint {
  double xi;
  double eta;
  double weight;  // parametric measure dxi deta
};

/// In-plane tensor Gauss rule plus a through-thickness Gauss rule.
struct QuadratureRule {
  int points_xi = 0;
  int points_eta = 0;
  int points_zeta = 2;

  /// Points mapped onto the element's parametric rectangle; weights sum to its area.
  std::vector<QuadraturePoint> in_plane(const ElementSpan& element) const;
  /// Thickness coordinates in [-h/2, h/2]; weights sum to h.
  GaussRule thickness(double h) const;
};

/// (p+1)x(q+1) in-plane points for iga, p x q for the B-bar family.
QuadratureRule quadrature_for(Method method, int p, int q, int thickness_points = 2);

}  // namespace shellbar
