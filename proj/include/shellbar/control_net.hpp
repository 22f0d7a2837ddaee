#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "shellbar/knot_vector.hpp"

namespace shellbar {

enum class Direction { xi, eta };

/// Control points (meters) and positive weights of a single patch, xi-fastest.
struct ControlNet {
  int n = 0;  // count along xi
  int m = 0;  // count along eta
  std::vector<Eigen::Vector3d> points;
  std::vector<double> weights;

  int index(int i, int j) const { return j * n + i; }
  const Eigen::Vector3d& point(int i, int j) const { return points[index(i, j)]; }
  double weight(int i, int j) const { return weights[index(i, j)]; }

  /// Throws ArgumentError on size mismatch or non-positive weights.
  void validate() const;

  bool operator==(const ControlNet& other) const;
};

/// Refined knot vector and net after inserting `new_knots` along `direction`.
/// Geometry is unchanged. Throws ArgumentError if a knot is not interior or
/// its resulting multiplicity would exceed the degree.
std::pair<KnotVector, ControlNet> insert_knots(const KnotVector& kv, const std::vector<double>& new_knots,
                                               const ControlNet& net, Direction direction);

/// Raises the degree along `direction` by `times` without changing geometry.
std::pair<KnotVector, ControlNet> elevate_degree(const KnotVector& kv, const ControlNet& net, int times,
                                                 Direction direction);

/// Knots k/elements (scaled to the domain) that are not already present.
std::vector<double> missing_uniform_knots(const KnotVector& kv, int elements);

}  // namespace shellbar
