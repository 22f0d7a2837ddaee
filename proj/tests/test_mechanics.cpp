#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "shellbar/benchmarks.hpp"
#include "shellbar/constitutive.hpp"
#include "shellbar/error.hpp"
#include "shellbar/quadrature.hpp"
#include "shellbar/strain_operator.hpp"

using namespace shellbar;

namespace {

// Mandel scaling makes the Voigt rotation orthogonal, so congruence preserves eigenvalues.
Matrix6d mandel(const Matrix6d& d) {
  Vector6d s;
  s << 1, 1, 1, std::sqrt(2.0), std::sqrt(2.0), std::sqrt(2.0);
  return s.asDiagonal() * d * s.asDiagonal();
}

Eigen::VectorXd sorted_eigenvalues(const Matrix6d& m) {
  Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Matrix6d>(m).eigenvalues();
  std::sort(ev.begin(), ev.end());
  return ev;
}

Vector6d random_strain(std::mt19937& rng) {
  Vector6d e;
  for (int i = 0; i < 6; ++i) e[i] = oracle::uniform(rng, -1, 1);
  return e;
}

std::vector<BenchmarkCase> all_cases() {
  return {case_plate(0.05), case_scordelis(), case_cylinder(), case_hemisphere()};
}

Eigen::VectorXd random_state(std::mt19937& rng, int size) {
  Eigen::VectorXd q(size);
  for (int i = 0; i < size; ++i) q[i] = oracle::uniform(rng, -1, 1);
  return q;
}

}  // namespace

TEST_CASE("lamina constitutive matrix") {
  const Matrix6d d = local_constitutive({1.0, 0.0, 5.0 / 6.0});
  Vector6d diag;
  diag << 1, 1, 0, 0.5, 5.0 / 12.0, 5.0 / 12.0;
  CHECK((d - Matrix6d(diag.asDiagonal())).cwiseAbs().maxCoeff() < 1e-15);

  const Material steel{200e9, 0.3};
  const Matrix6d ds = local_constitutive(steel);
  CHECK(ds(0, 0) == doctest::Approx(2.1978e11).epsilon(1e-4));
  CHECK(ds(1, 1) == doctest::Approx(200e9 / 0.91));
  CHECK(ds(0, 1) == ds(1, 0));
  CHECK(ds(0, 1) == doctest::Approx(0.3 * 200e9 / 0.91));
  CHECK(ds.row(2).norm() == 0.0);
  CHECK(ds.col(2).norm() == 0.0);
  CHECK(sorted_eigenvalues(ds).minCoeff() >= -1e-6);
}

TEST_CASE("lamina frame") {
  const LaminaFrame aligned = lamina_frame({1, 0, 0}, {0, 1, 0});
  CHECK((aligned.T - Matrix6d::Identity()).norm() < 1e-15);
  CHECK_THROWS_AS(lamina_frame({1, 0, 0}, {2, 0, 0}), GeometryError);

  // A frame turned 90 degrees about the normal swaps e11 and e22.
  const LaminaFrame turned = lamina_frame({0, 1, 0}, {-1, 0, 0});
  Vector6d e11 = Vector6d::Zero();
  e11[0] = 1.0;
  Vector6d e22 = Vector6d::Zero();
  e22[1] = 1.0;
  CHECK((turned.T * e11 - e22).norm() < 1e-15);

  const LaminaFrame skew = lamina_frame({1, 1, 0}, {0, 1, 0.5});
  CHECK((skew.triad * skew.triad.transpose() - Eigen::Matrix3d::Identity()).norm() < 1e-14);
  CHECK(skew.triad.row(2).dot(Eigen::Vector3d(1, 1, 0)) == doctest::Approx(0.0));
}

TEST_CASE("property: Voigt rotation agrees with the tensor rotation") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Matrix3d r = oracle::random_rotation(rng);
    const Vector6d e = random_strain(rng);
    CHECK((strain_rotation(r) * e - oracle::rotate_strain(r, e)).norm() < 1e-12 * (1 + e.norm()));

    const Eigen::Vector3d a(oracle::uniform(rng, -1, 1), oracle::uniform(rng, -1, 1), oracle::uniform(rng, -1, 1));
    const Eigen::Vector3d b(oracle::uniform(rng, -1, 1), oracle::uniform(rng, -1, 1), oracle::uniform(rng, -1, 1));
    const LaminaFrame f = lamina_frame(a, b);
    CHECK((f.T * e - oracle::rotate_strain(f.triad, e)).norm() < 1e-12 * (1 + e.norm()));
    CHECK((f.T * strain_rotation(f.triad.transpose()) - Matrix6d::Identity()).norm() < 1e-12);
  }
}

TEST_CASE("global constitutive matrix") {
  const Material m{30e9, 0.3};
  const Matrix6d dl = local_constitutive(m);
  CHECK((global_constitutive(lamina_frame({1, 0, 0}, {0, 1, 0}), dl) - dl).norm() == 0.0);

  std::mt19937 rng(32);
  const Eigen::VectorXd reference = sorted_eigenvalues(mandel(dl));
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Vector3d a(oracle::uniform(rng, -1, 1), oracle::uniform(rng, -1, 1), oracle::uniform(rng, -1, 1));
    const Eigen::Vector3d b(oracle::uniform(rng, -1, 1), oracle::uniform(rng, -1, 1), oracle::uniform(rng, -1, 1));
    const LaminaFrame f = lamina_frame(a, b);
    const Matrix6d dg = global_constitutive(f, dl);
    CHECK((dg - dg.transpose()).norm() < 1e-12 * dl.norm());
    CHECK((sorted_eigenvalues(mandel(dg)) - reference).norm() < 1e-9 * reference.norm());

    // Any in-plane orientation of e1 gives the same law for an isotropic material.
    const double angle = oracle::uniform(rng, 0, 2 * std::numbers::pi);
    Eigen::Matrix3d spun = f.triad;
    spun.row(0) = std::cos(angle) * f.triad.row(0) + std::sin(angle) * f.triad.row(1);
    spun.row(1) = -std::sin(angle) * f.triad.row(0) + std::cos(angle) * f.triad.row(1);
    const Matrix6d t = strain_rotation(spun);
    CHECK((t.transpose() * dl * t - dg).norm() < 1e-12 * dl.norm());
  }
}

TEST_CASE("plane stress in a z-normal frame") {
  const Matrix6d dg = global_constitutive(lamina_frame({2, 0, 0}, {0.3, 1, 0}), local_constitutive({200e9, 0.3}));
  std::mt19937 rng(33);
  for (int trial = 0; trial < 10; ++trial) CHECK(std::abs((dg * random_strain(rng))[2]) < 1e-3);
}

TEST_CASE("Gauss-Legendre rules") {
  for (int n = 1; n <= 8; ++n) {
    const GaussRule g = gauss_legendre(n);
    double sum = 0.0;
    for (double w : g.weights) sum += w;
    CHECK(sum == doctest::Approx(2.0).epsilon(1e-14));
    for (int k = 0; k <= 2 * n - 1; ++k) {
      double integral = 0.0;
      for (int i = 0; i < n; ++i) integral += g.weights[i] * std::pow(g.points[i], k);
      const double exact = k % 2 == 1 ? 0.0 : 2.0 / (k + 1);
      CHECK(std::abs(integral - exact) < 1e-14);
    }
  }
  CHECK_THROWS_AS(gauss_legendre(0), ArgumentError);
  const GaussRule t = QuadratureRule{}.thickness(0.2);
  CHECK(t.weights[0] + t.weights[1] == doctest::Approx(0.2));
  CHECK(t.points[1] == doctest::Approx(0.1 / std::sqrt(3.0)));
}

TEST_CASE("property: rigid body motions produce no strain") {
  std::mt19937 rng(34);
  for (const auto& c : all_cases()) {
    const ShellModel m = refine_uniform(c.model, 2, 2);
    const int slots = slots_per_point(m.kind());
    const QuadratureRule rule = quadrature_for(Method::iga, 2, 2, 3);
    for (int trial = 0; trial < 3; ++trial) {
      const Eigen::Vector3d t(oracle::uniform(rng, -1, 1), oracle::uniform(rng, -1, 1), oracle::uniform(rng, -1, 1));
      Eigen::Vector3d w(oracle::uniform(rng, -1, 1), oracle::uniform(rng, -1, 1), oracle::uniform(rng, -1, 1));
      if (m.kind() == ShellKind::plate) w.z() = 0.0;
      Eigen::VectorXd translation = Eigen::VectorXd::Zero(m.num_control_points() * slots);
      Eigen::VectorXd rotation = translation;
      for (int a = 0; a < m.num_control_points(); ++a) {
        translation.segment<3>(a * slots) = t;
        rotation.segment<3>(a * slots) = w.cross(m.net().points[a]);
        rotation.segment(a * slots + 3, slots - 3) = w.head(slots - 3);
      }
      for (const auto& e : m.basis().elements()) {
        for (const auto& qp : rule.in_plane(e)) {
          for (double zeta : rule.thickness(m.thickness()).points) {
            const StrainOperator op = strain_operator(m, e, qp.xi, qp.eta, zeta);
            CHECK(op.det_j > 0.0);
            const double scale = op.b.cwiseAbs().maxCoeff();
            CHECK((op.b * oracle::gather(translation, m.basis().evaluate(e, qp.xi, qp.eta).cp, slots)).norm() <
                  1e-12 * scale);
            CHECK((op.b * oracle::gather(rotation, m.basis().evaluate(e, qp.xi, qp.eta).cp, slots)).norm() <
                  1e-11 * scale * (1 + m.net().points[0].norm()));
          }
        }
      }
    }
  }
}

TEST_CASE("plate bending kinematics") {
  const ShellModel m = refine_uniform(case_plate(0.1).model, 2, 2);
  Eigen::VectorXd q = Eigen::VectorXd::Zero(m.num_control_points() * 5);
  for (int a = 0; a < m.num_control_points(); ++a) q[a * 5 + 4] = m.net().points[a].x();  // theta_y = x
  const ElementSpan e = m.basis().elements()[3];
  for (double zeta : {-0.05, -0.02, 0.0, 0.03, 0.05}) {
    const BasisSample s = m.basis().evaluate(e, 0.7, 0.8);
    const Vector6d strain = strain_operator(m, s, zeta).b * oracle::gather(q, s.cp, 5);
    CHECK(strain[0] == doctest::Approx(zeta).epsilon(1e-12));
    CHECK(std::abs(strain[1]) < 1e-14);
    CHECK(strain[4] == doctest::Approx(surface_point(m, 0.7, 0.8).x.x()).epsilon(1e-12));
  }
  CHECK_THROWS_AS(strain_operator(m, e, 0.7, 0.8, 0.051), ArgumentError);
}

TEST_CASE("property: strain operator matches finite differences of the displacement map") {
  std::mt19937 rng(35);
  for (const auto& c : all_cases()) {
    const ShellModel m = refine_uniform(c.model, 2, 2);
    const int slots = slots_per_point(m.kind());
    const auto elements = m.basis().elements();
    for (int trial = 0; trial < 5; ++trial) {
      const Eigen::VectorXd q = random_state(rng, m.num_control_points() * slots);
      const ElementSpan& e = elements[trial % elements.size()];
      const double xi = e.xi_range.first + oracle::uniform(rng, 0.1, 0.9) * e.xi_length();
      const double eta = e.eta_range.first + oracle::uniform(rng, 0.1, 0.9) * e.eta_length();
      const double zeta = oracle::uniform(rng, -0.5, 0.5) * m.thickness();
      const BasisSample s = m.basis().evaluate(e, xi, eta);
      const Vector6d analytic = strain_operator(m, s, zeta).b * oracle::gather(q, s.cp, slots);
      const Vector6d fd = oracle::fd_strain(m, q, xi, eta, zeta);
      CHECK((analytic - fd).norm() < 1e-6 * analytic.norm());
    }
  }
}

TEST_CASE("through-thickness average on a flat plate") {
  const ShellModel m = refine_uniform(case_plate(0.02).model, 2, 2);
  const ElementSpan e = m.basis().elements()[1];
  const StrainMatrix mid = mid_operator(m, e, 0.8, 0.3);
  const StrainMatrix at_zero = strain_operator(m, e, 0.8, 0.3, 0.0).b;
  for (int a = 0; a < 9; ++a) {
    for (int slot = 0; slot < 3; ++slot) CHECK((mid.col(a * 5 + slot) - at_zero.col(a * 5 + slot)).norm() < 1e-12);
    for (int slot = 3; slot < 5; ++slot) {
      const auto col = mid.col(a * 5 + slot);
      CHECK(std::abs(col[0]) + std::abs(col[1]) + std::abs(col[3]) < 1e-12);
      CHECK(std::abs(col[4] - at_zero(4, a * 5 + slot)) < 1e-12);
      CHECK(std::abs(col[5] - at_zero(5, a * 5 + slot)) < 1e-12);
    }
  }
  CHECK((mid_operator(m, e, 0.8, 0.3, 3) - mid).norm() < 1e-12 * mid.norm());
}

TEST_CASE("through-thickness average on a cylinder element matches dense quadrature") {
  const ShellModel m = refine_uniform(case_cylinder().model, 2, 2);
  const ElementSpan e = m.basis().elements()[2];
  const double xi = 0.3;
  const double eta = 0.8;
  const double h = m.thickness();
  const auto b_of = [&](double zeta) { return StrainMatrix(strain_operator(m, e, xi, eta, zeta).b); };
  const StrainMatrix dense = oracle::richardson_trapezoid(b_of, -h / 2, h / 2, 50) / h;
  const double scale = dense.norm();
  // Jacobian variation across the thickness is rational in zeta; the 3-point
  // rule resolves it to round-off, the default 2-point rule to (h/R)^4.
  CHECK((mid_operator(m, e, xi, eta, 3) - dense).norm() < 1e-10 * scale);
  CHECK((mid_operator(m, e, xi, eta, 2) - dense).norm() < 1e-8 * scale);
}
