#include "shellbar/knot_vector.hpp"

#include <algorithm>
#include <sstream>

#include "shellbar/error.hpp"

namespace shellbar {

KnotVector::KnotVector(int degree, std::vector<double> knots)
    : degree_(degree), knots_(std::move(knots)) {
  if (degree_ < 1) throw ArgumentError("knot vector degree must be >= 1");
  const int p = degree_;
  const auto size = static_cast<int>(knots_.size());
  if (size < 2 * (p + 1)) {
    throw ArgumentError("knot vector too short for degree " + std::to_string(p));
  }
  if (!std::is_sorted(knots_.begin(), knots_.end())) {
    throw ArgumentError("knot vector entries must be non-decreasing");
  }
  if (!(knots_.front() < knots_.back())) {
    throw ArgumentError("knot vector has an empty parametric domain");
  }
  const int first = multiplicity(knots_.front());
  const int last = multiplicity(knots_.back());
  if (first != p + 1 || last != p + 1) {
    std::ostringstream os;
    os << "knot vector is not open: end multiplicities " << first << "/" << last
       << ", expected " << p + 1;
    throw ArgumentError(os.str());
  }
  for (double u : unique_knots()) {
    if (u != knots_.front() && u != knots_.back() && multiplicity(u) > p) {
      std::ostringstream os;
      os << "interior knot " << u << " has multiplicity " << multiplicity(u) << " > degree " << p;
      throw ArgumentError(os.str());
    }
  }
}

KnotVector KnotVector::uniform(int degree, int elements, double lo, double hi) {
  if (elements < 1) throw ArgumentError("uniform knot vector needs at least one element");
  std::vector<double> knots(degree + 1, lo);
  for (int k = 1; k < elements; ++k) {
    knots.push_back(lo + (hi - lo) * static_cast<double>(k) / elements);
  }
  knots.insert(knots.end(), degree + 1, hi);
  return KnotVector(degree, std::move(knots));
}

std::vector<double> KnotVector::unique_knots() const {
  std::vector<double> out;
  for (double u : knots_) {
    if (out.empty() || u != out.back()) out.push_back(u);
  }
  return out;
}

int KnotVector::multiplicity(double u) const {
  return static_cast<int>(std::count(knots_.begin(), knots_.end(), u));
}

std::vector<int> KnotVector::nonzero_spans() const {
  std::vector<int> spans;
  for (int i = degree_; i < num_basis(); ++i) {
    if (knots_[i] < knots_[i + 1]) spans.push_back(i);
  }
  return spans;
}

int find_span(const KnotVector& kv, double u) {
  const auto& U = kv.knots();
  if (u < kv.front() || u > kv.back()) {
    std::ostringstream os;
    os << "parameter " << u << " outside knot domain [" << kv.front() << ", " << kv.back() << "]";
    throw DomainError(os.str());
  }
  const int n = kv.num_basis() - 1;
  if (u >= U[n + 1]) {
    // Right end: clamp to the last span of nonzero length.
    int i = n;
    while (U[i] >= U[i + 1]) --i;
    return i;
  }
  // First index with U[i] > u, minus one.
  auto it = std::upper_bound(U.begin() + kv.degree(), U.begin() + n + 1, u);
  return static_cast<int>(it - U.begin()) - 1;
}

Eigen::MatrixXd basis_and_derivatives(const KnotVector& kv, int span, double u, int order) {
  const int p = kv.degree();
  if (order < 0 || order > p) {
    throw ArgumentError("derivative order must lie in [0, degree]");
  }
  const auto& U = kv.knots();
  // Cox-de Boor triangle with the knot differences kept in the lower part.
  Eigen::MatrixXd ndu(p + 1, p + 1);
  std::vector<double> left(p + 1), right(p + 1);
  ndu(0, 0) = 1.0;
  for (int j = 1; j <= p; ++j) {
    left[j] = u - U[span + 1 - j];
    right[j] = U[span + j] - u;
    double saved = 0.0;
    for (int r = 0; r < j; ++r) {
      ndu(j, r) = right[r + 1] + left[j - r];
      const double temp = ndu(r, j - 1) / ndu(j, r);
      ndu(r, j) = saved + right[r + 1] * temp;
      saved = left[j - r] * temp;
    }
    ndu(j, j) = saved;
  }

  Eigen::MatrixXd ders = Eigen::MatrixXd::Zero(order + 1, p + 1);
  for (int j = 0; j <= p; ++j) ders(0, j) = ndu(j, p);

  Eigen::MatrixXd a(2, p + 1);
  for (int r = 0; r <= p; ++r) {
    int s1 = 0;
    int s2 = 1;
    a.setZero();
    a(0, 0) = 1.0;
    for (int k = 1; k <= order; ++k) {
      double d = 0.0;
      const int rk = r - k;
      const int pk = p - k;
      if (r >= k) {
        a(s2, 0) = a(s1, 0) / ndu(pk + 1, rk);
        d = a(s2, 0) * ndu(rk, pk);
      }
      const int j1 = rk >= -1 ? 1 : -rk;
      const int j2 = (r - 1 <= pk) ? k - 1 : p - r;
      for (int j = j1; j <= j2; ++j) {
        a(s2, j) = (a(s1, j) - a(s1, j - 1)) / ndu(pk + 1, rk + j);
        d += a(s2, j) * ndu(rk + j, pk);
      }
      if (r <= pk) {
        a(s2, k) = -a(s1, k - 1) / ndu(pk + 1, r);
        d += a(s2, k) * ndu(r, pk);
      }
      ders(k, r) = d;
      std::swap(s1, s2);
    }
  }
  double factor = p;
  for (int k = 1; k <= order; ++k) {
    ders.row(k) *= factor;
    factor *= (p - k);
  }
  return ders;
}

Eigen::MatrixXd basis_and_derivatives(const KnotVector& kv, double u, int order) {
  return basis_and_derivatives(kv, find_span(kv, u), u, order);
}

std::vector<double> greville_abscissae(const KnotVector& kv) {
  const int p = kv.degree();
  const auto& U = kv.knots();
  std::vector<double> out(kv.num_basis());
  for (int a = 0; a < kv.num_basis(); ++a) {
    double sum = 0.0;
    for (int k = 1; k <= p; ++k) sum += U[a + k];
    out[a] = sum / p;
  }
  return out;
}

KnotVector elevated_knot_vector(const KnotVector& kv, int times) {
  if (times < 1) throw ArgumentError("degree elevation count must be >= 1");
  std::vector<double> knots;
  for (double u : kv.unique_knots()) {
    knots.insert(knots.end(), kv.multiplicity(u) + times, u);
  }
  return KnotVector(kv.degree() + times, std::move(knots));
}

KnotVector reduced_knot_vector(const KnotVector& kv) {
  const int p = kv.degree() - 1;
  if (p < 1) throw ArgumentError("no lower-order spline space below degree 1");
  const auto breaks = kv.unique_knots();
  std::vector<double> knots(p + 1, breaks.front());
  knots.insert(knots.end(), breaks.begin() + 1, breaks.end() - 1);
  knots.insert(knots.end(), p + 1, breaks.back());
  return KnotVector(p, std::move(knots));
}

}  // namespace shellbar
