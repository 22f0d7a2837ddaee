#include "shellbar/control_net.hpp"

#include <algorithm>
#include <sstream>

#include "shellbar/error.hpp"

namespace shellbar {
namespace {

using Homogeneous = Eigen::Vector4d;

// Lines of homogeneous points running along `direction`; one line per
// index of the other direction.
std::vector<std::vector<Homogeneous>> extract_lines(const ControlNet& net, Direction direction) {
  const bool along_xi = direction == Direction::xi;
  const int lines = along_xi ? net.m : net.n;
  const int length = along_xi ? net.n : net.m;
  std::vector<std::vector<Homogeneous>> out(lines, std::vector<Homogeneous>(length));
  for (int l = 0; l < lines; ++l) {
    for (int k = 0; k < length; ++k) {
      const int idx = along_xi ? net.index(k, l) : net.index(l, k);
      const double w = net.weights[idx];
      out[l][k] << w * net.points[idx], w;
    }
  }
  return out;
}

ControlNet assemble_lines(const std::vector<std::vector<Homogeneous>>& lines, Direction direction) {
  const bool along_xi = direction == Direction::xi;
  const int length = static_cast<int>(lines.front().size());
  ControlNet net;
  net.n = along_xi ? length : static_cast<int>(lines.size());
  net.m = along_xi ? static_cast<int>(lines.size()) : length;
  net.points.resize(net.n * net.m);
  net.weights.resize(net.n * net.m);
  for (int l = 0; l < static_cast<int>(lines.size()); ++l) {
    for (int k = 0; k < length; ++k) {
      const int idx = along_xi ? net.index(k, l) : net.index(l, k);
      const Homogeneous& h = lines[l][k];
      net.weights[idx] = h[3];
      net.points[idx] = h.head<3>() / h[3];
    }
  }
  return net;
}

}  // namespace

void ControlNet::validate() const {
  if (n < 1 || m < 1) throw ArgumentError("control net must be at least 1x1");
  if (static_cast<int>(points.size()) != n * m || static_cast<int>(weights.size()) != n * m) {
    throw ArgumentError("control net storage does not match its " + std::to_string(n) + "x" +
                        std::to_string(m) + " layout");
  }
  for (double w : weights) {
    if (!(w > 0.0)) throw ArgumentError("control weights must be strictly positive");
  }
}

bool ControlNet::operator==(const ControlNet& other) const {
  return n == other.n && m == other.m && points == other.points && weights == other.weights;
}

std::pair<KnotVector, ControlNet> insert_knots(const KnotVector& kv, const std::vector<double>& new_knots,
                                               const ControlNet& net, Direction direction) {
  net.validate();
  const int p = kv.degree();
  std::vector<double> sorted = new_knots;
  std::sort(sorted.begin(), sorted.end());
  for (double u : sorted) {
    if (!(u > kv.front() && u < kv.back())) {
      std::ostringstream os;
      os << "inserted knot " << u << " is not interior to the domain";
      throw ArgumentError(os.str());
    }
    const auto added = std::count(sorted.begin(), sorted.end(), u);
    if (kv.multiplicity(u) + added > p) {
      std::ostringstream os;
      os << "inserting knot " << u << " would raise its multiplicity above degree " << p;
      throw ArgumentError(os.str());
    }
  }

  auto lines = extract_lines(net, direction);
  std::vector<double> U = kv.knots();
  for (double u : sorted) {
    const KnotVector current(p, U);
    const int k = find_span(current, u);
    for (auto& line : lines) {
      std::vector<Homogeneous> q(line.size() + 1);
      for (int i = 0; i <= k - p; ++i) q[i] = line[i];
      for (int i = k - p + 1; i <= k; ++i) {
        const double alpha = (u - U[i]) / (U[i + p] - U[i]);
        q[i] = alpha * line[i] + (1.0 - alpha) * line[i - 1];
      }
      for (int i = k + 1; i < static_cast<int>(q.size()); ++i) q[i] = line[i - 1];
      line = std::move(q);
    }
    U.insert(U.begin() + k + 1, u);
  }
  return {KnotVector(p, std::move(U)), assemble_lines(lines, direction)};
}

std::pair<KnotVector, ControlNet> elevate_degree(const KnotVector& kv, const ControlNet& net, int times,
                                                 Direction direction) {
  net.validate();
  KnotVector elevated = elevated_knot_vector(kv, times);
  const int count = elevated.num_basis();
  const std::vector<double> sites = greville_abscissae(elevated);

  // The homogeneous curve lies in the elevated spline space, so collocation at
  // the (distinct) Greville sites recovers its coefficients exactly.
  Eigen::MatrixXd collocation = Eigen::MatrixXd::Zero(count, count);
  Eigen::MatrixXd old_values = Eigen::MatrixXd::Zero(count, kv.num_basis());
  for (int r = 0; r < count; ++r) {
    const int span_new = find_span(elevated, sites[r]);
    const Eigen::MatrixXd nn = basis_and_derivatives(elevated, span_new, sites[r], 0);
    for (int a = 0; a <= elevated.degree(); ++a) collocation(r, span_new - elevated.degree() + a) = nn(0, a);
    const int span_old = find_span(kv, sites[r]);
    const Eigen::MatrixXd no = basis_and_derivatives(kv, span_old, sites[r], 0);
    for (int a = 0; a <= kv.degree(); ++a) old_values(r, span_old - kv.degree() + a) = no(0, a);
  }
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(collocation);
  const Eigen::MatrixXd transfer = lu.solve(old_values);

  auto lines = extract_lines(net, direction);
  for (auto& line : lines) {
    std::vector<Homogeneous> q(count, Homogeneous::Zero());
    for (int r = 0; r < count; ++r) {
      for (int c = 0; c < kv.num_basis(); ++c) q[r] += transfer(r, c) * line[c];
    }
    line = std::move(q);
  }
  return {std::move(elevated), assemble_lines(lines, direction)};
}

std::vector<double> missing_uniform_knots(const KnotVector& kv, int elements) {
  if (elements < 1) throw ArgumentError("uniform refinement needs at least one element");
  std::vector<double> out;
  for (int k = 1; k < elements; ++k) {
    const double u = kv.front() + (kv.back() - kv.front()) * static_cast<double>(k) / elements;
    if (kv.multiplicity(u) == 0) out.push_back(u);
  }
  return out;
}

}  // namespace shellbar
