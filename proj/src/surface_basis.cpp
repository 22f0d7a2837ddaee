#include "shellbar/surface_basis.hpp"

#include "shellbar/error.hpp"

namespace shellbar {

SurfaceBasis::SurfaceBasis(KnotVector xi, KnotVector eta, std::vector<double> weights)
    : xi_(std::move(xi)), eta_(std::move(eta)), weights_(std::move(weights)) {
  if (static_cast<int>(weights_.size()) != n() * m()) {
    throw ArgumentError("weight count " + std::to_string(weights_.size()) + " does not match " +
                        std::to_string(n()) + "x" + std::to_string(m()) + " basis");
  }
  for (double w : weights_) {
    if (!(w > 0.0)) throw ArgumentError("NURBS weights must be strictly positive");
  }
}

std::vector<ElementSpan> SurfaceBasis::elements() const {
  const auto& U = xi_.knots();
  const auto& V = eta_.knots();
  std::vector<ElementSpan> out;
  int ey = 0;
  for (int j : eta_.nonzero_spans()) {
    int ex = 0;
    for (int i : xi_.nonzero_spans()) {
      out.push_back(ElementSpan{i, j, ex++, ey, {U[i], U[i + 1]}, {V[j], V[j + 1]}});
    }
    ++ey;
  }
  return out;
}

BasisSample SurfaceBasis::evaluate(double xi, double eta) const {
  return evaluate_spans(find_span(xi_, xi), find_span(eta_, eta), xi, eta);
}

BasisSample SurfaceBasis::evaluate(const ElementSpan& element, double xi, double eta) const {
  if (xi < xi_.front() || xi > xi_.back() || eta < eta_.front() || eta > eta_.back()) {
    throw DomainError("evaluation point outside the parametric domain");
  }
  return evaluate_spans(element.i, element.j, xi, eta);
}

BasisSample SurfaceBasis::evaluate_spans(int span_i, int span_j, double xi, double eta) const {
  const int p = xi_.degree();
  const int q = eta_.degree();
  const Eigen::MatrixXd nu = basis_and_derivatives(xi_, span_i, xi, 1);
  const Eigen::MatrixXd nv = basis_and_derivatives(eta_, span_j, eta, 1);

  const int count = (p + 1) * (q + 1);
  BasisSample s;
  s.r.resize(count);
  s.dr_dxi.resize(count);
  s.dr_deta.resize(count);
  s.cp.resize(count);

  double w = 0.0;
  double w_xi = 0.0;
  double w_eta = 0.0;
  for (int b = 0; b <= q; ++b) {
    for (int a = 0; a <= p; ++a) {
      const int k = b * (p + 1) + a;
      const int gi = span_i - p + a;
      const int gj = span_j - q + b;
      s.cp[k] = gj * n() + gi;
      const double wk = weights_[s.cp[k]];
      s.r[k] = nu(0, a) * nv(0, b) * wk;
      s.dr_dxi[k] = nu(1, a) * nv(0, b) * wk;
      s.dr_deta[k] = nu(0, a) * nv(1, b) * wk;
      w += s.r[k];
      w_xi += s.dr_dxi[k];
      w_eta += s.dr_deta[k];
    }
  }
  // Quotient rule on the weighted products.
  s.dr_dxi = (s.dr_dxi * w - s.r * w_xi) / (w * w);
  s.dr_deta = (s.dr_deta * w - s.r * w_eta) / (w * w);
  s.r /= w;
  return s;
}

Eigen::VectorXd bernstein(int degree, double t) {
  Eigen::VectorXd b = Eigen::VectorXd::Zero(degree + 1);
  b[0] = 1.0;
  const double s = 1.0 - t;
  for (int k = 1; k <= degree; ++k) {
    double saved = 0.0;
    for (int r = 0; r < k; ++r) {
      const double temp = b[r];
      b[r] = saved + s * temp;
      saved = t * temp;
    }
    b[k] = saved;
  }
  return b;
}

ProjectionBasis::ProjectionBasis(const ElementSpan& element, int p_bar, int q_bar)
    : element_(element), p_bar_(p_bar), q_bar_(q_bar) {
  if (p_bar < 0 || q_bar < 0) throw ArgumentError("projection orders must be non-negative");
  if (!(element.xi_length() > 0.0) || !(element.eta_length() > 0.0)) {
    throw ArgumentError("projection basis needs an element of nonzero size");
  }
}

Eigen::VectorXd ProjectionBasis::evaluate(double xi, double eta) const {
  const double s = (xi - element_.xi_range.first) / element_.xi_length();
  const double t = (eta - element_.eta_range.first) / element_.eta_length();
  const Eigen::VectorXd bs = bernstein(p_bar_, s);
  const Eigen::VectorXd bt = bernstein(q_bar_, t);
  Eigen::VectorXd out(size());
  for (int b = 0; b <= q_bar_; ++b) {
    for (int a = 0; a <= p_bar_; ++a) out[b * (p_bar_ + 1) + a] = bs[a] * bt[b];
  }
  return out;
}

}  // namespace shellbar
