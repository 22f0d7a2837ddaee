#include "shellbar/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "shellbar/error.hpp"

namespace shellbar {

const char* to_string(Method method) {
  switch (method) {
    case Method::iga: return "iga";
    case Method::lb: return "lb";
    case Method::glb: return "glb";
    case Method::cbar: return "cbar";
  }
  return "?";
}

std::optional<Method> method_from_string(const std::string& s) {
  for (Method m : {Method::iga, Method::lb, Method::glb, Method::cbar}) {
    if (s == to_string(m)) return m;
  }
  return std::nullopt;
}

GaussRule gauss_legendre(int count) {
  if (count < 1) throw ArgumentError("Gauss rule needs at least one point");
  GaussRule rule;
  rule.points.resize(count);
  rule.weights.resize(count);
  // Newton iteration on P_n from the Chebyshev-like initial guess.
  for (int i = 0; i < (count + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (count + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= count; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = count * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.points[i] = -x;
    rule.points[count - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[count - 1 - i] = w;
  }
  if (count % 2 == 1) rule.points[count / 2] = 0.0;
  return rule;
}

std::vector<QuadraturePoint> QuadratureRule::in_plane(const ElementSpan& element) const {
  const GaussRule gx = gauss_legendre(points_xi);
  const GaussRule gy = gauss_legendre(points_eta);
  const double hx = 0.5 * element.xi_length();
  const double hy = 0.5 * element.eta_length();
  const double cx = 0.5 * (element.xi_range.first + element.xi_range.second);
  const double cy = 0.5 * (element.eta_range.first + element.eta_range.second);
  std::vector<QuadraturePoint> out;
  out.reserve(gx.points.size() * gy.points.size());
  for (std::size_t b = 0; b < gy.points.size(); ++b) {
    for (std::size_t a = 0; a < gx.points.size(); ++a) {
      out.push_back({cx + hx * gx.points[a], cy + hy * gy.points[b], hx * hy * gx.weights[a] * gy.weights[b]});
    }
  }
  return out;
}

GaussRule QuadratureRule::thickness(double h) const {
  GaussRule g = gauss_legendre(points_zeta);
  for (std::size_t k = 0; k < g.points.size(); ++k) {
    g.points[k] *= 0.5 * h;
    g.weights[k] *= 0.5 * h;
  }
  return g;
}

QuadratureRule quadrature_for(Method method, int p, int q, int thickness_points) {
  if (p < 1 || q < 1) throw ArgumentError("degrees must be >= 1");
  QuadratureRule rule;
  if (method == Method::iga) {
    rule.points_xi = p + 1;
    rule.points_eta = q + 1;
  } else {
    rule.points_xi = p;
    rule.points_eta = q;
  }
  rule.points_zeta = thickness_points;
  return rule;
}

}  // namespace shellbar
