#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "shellbar/benchmarks.hpp"
#include "shellbar/element_stiffness.hpp"
#include "shellbar/error.hpp"
#include "shellbar/global_bbar.hpp"
#include "shellbar/projection.hpp"
#include "shellbar/solver.hpp"
#include "shellbar/timoshenko.hpp"

using namespace shellbar;

namespace {

const std::vector<ProjectionOrders> kAllOrders{{0, 0}, {1, 0}, {0, 1}, {1, 1}};

ElementSpan unit_element() {
  ElementSpan e;
  e.xi_range = {0.0, 1.0};
  e.eta_range = {0.0, 1.0};
  return e;
}

double bernstein1(int a, double t) { return a == 0 ? 1.0 - t : t; }

/// Bilinear/constant tensor Bernstein function written out by hand.
double hand_basis(ProjectionOrders o, int index, const ElementSpan& e, double xi, double eta) {
  const int a = index % (o.p_bar + 1);
  const int b = index / (o.p_bar + 1);
  const double s = (xi - e.xi_range.first) / e.xi_length();
  const double t = (eta - e.eta_range.first) / e.eta_length();
  return (o.p_bar == 0 ? 1.0 : bernstein1(a, s)) * (o.q_bar == 0 ? 1.0 : bernstein1(b, t));
}

/// Plate refined with non-uniform knots; the map stays affine.
ShellModel skewed_plate(double thickness) {
  const ShellModel coarse = case_plate(thickness).model;
  auto [kx, nx] = insert_knots(coarse.basis().xi(), {0.3, 0.55, 0.8}, coarse.net(), Direction::xi);
  auto [ky, ny] = insert_knots(coarse.basis().eta(), {0.2, 0.45, 0.7}, nx, Direction::eta);
  return coarse.with_geometry(kx, ky, ny);
}

/// MID samples of an element on a rule, with surface measures.
struct MidSamples {
  std::vector<QuadraturePoint> points;
  Eigen::VectorXd area;
  std::vector<StrainMatrix> mid;
};

MidSamples mid_samples(const ShellModel& m, const ElementSpan& e, int points_per_direction) {
  QuadratureRule rule;
  rule.points_xi = rule.points_eta = points_per_direction;
  MidSamples out;
  out.points = rule.in_plane(e);
  out.area.resize(static_cast<int>(out.points.size()));
  for (std::size_t g = 0; g < out.points.size(); ++g) {
    const SurfacePoint sp = surface_point(m, out.points[g].xi, out.points[g].eta);
    out.area[g] = sp.x_xi.cross(sp.x_eta).norm();
    out.mid.push_back(mid_operator(m, e, out.points[g].xi, out.points[g].eta));
  }
  return out;
}

/// Least-squares fit of a MID field with normal equations on a dense rule,
/// evaluated at `at`.
std::vector<StrainMatrix> dense_lsq(const ShellModel& m, const ElementSpan& e, ProjectionOrders o,
                                    const std::vector<QuadraturePoint>& at) {
  const MidSamples dense = mid_samples(m, e, 10);
  const int nb = (o.p_bar + 1) * (o.q_bar + 1);
  const auto cols = dense.mid.front().cols();
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(nb, nb);
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(nb, 6 * cols);
  for (std::size_t g = 0; g < dense.points.size(); ++g) {
    Eigen::VectorXd n(nb);
    for (int k = 0; k < nb; ++k) n[k] = hand_basis(o, k, e, dense.points[g].xi, dense.points[g].eta);
    const double w = dense.points[g].weight * dense.area[g];
    gram += w * n * n.transpose();
    rhs += w * n * Eigen::Map<const Eigen::RowVectorXd>(dense.mid[g].data(), 6 * cols);
  }
  const Eigen::MatrixXd coeff = gram.llt().solve(rhs);
  std::vector<StrainMatrix> out;
  for (const auto& p : at) {
    Eigen::RowVectorXd n(nb);
    for (int k = 0; k < nb; ++k) n[k] = hand_basis(o, k, e, p.xi, p.eta);
    const Eigen::RowVectorXd flat = n * coeff;
    out.push_back(Eigen::Map<const StrainMatrix>(flat.data(), 6, cols));
  }
  return out;
}

double max_diff(const std::vector<StrainMatrix>& a, const std::vector<StrainMatrix>& b) {
  double worst = 0.0;
  for (std::size_t g = 0; g < a.size(); ++g) worst = std::max(worst, (a[g] - b[g]).cwiseAbs().maxCoeff());
  return worst;
}

double max_entry(const std::vector<StrainMatrix>& a) {
  double worst = 0.0;
  for (const auto& m : a) worst = std::max(worst, m.cwiseAbs().maxCoeff());
  return worst;
}

Eigen::MatrixXd random_matrix(std::mt19937& rng, int rows, int cols) {
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < m.size(); ++i) m(i) = oracle::uniform(rng, -1, 1);
  return m;
}

std::vector<ShellModel> shell_models(int mesh) {
  return {refine_uniform(case_scordelis().model, mesh, mesh), refine_uniform(case_cylinder().model, mesh, mesh),
          refine_uniform(case_hemisphere().model, mesh, mesh)};
}

}  // namespace

TEST_CASE("projection space assignment") {
  const ProjectionAssignment glb = assign_projection_spaces(4, 4, ProjectionStrategy::glb, 2, 2);
  CHECK_FALSE(glb.warning.has_value());
  int corners = 0, edges_01 = 0, edges_10 = 0, interior = 0;
  for (const auto& o : glb.orders) {
    if (o == ProjectionOrders{1, 1}) ++corners;
    if (o == ProjectionOrders{0, 1}) ++edges_01;
    if (o == ProjectionOrders{1, 0}) ++edges_10;
    if (o == ProjectionOrders{0, 0}) ++interior;
  }
  CHECK(corners == 4);
  CHECK(edges_01 == 4);
  CHECK(edges_10 == 4);
  CHECK(interior == 4);
  CHECK(glb.at(0, 0) == ProjectionOrders{1, 1});
  CHECK(glb.at(3, 3) == ProjectionOrders{1, 1});
  CHECK(glb.at(1, 0) == ProjectionOrders{0, 1});  // along an eta = const edge
  CHECK(glb.at(2, 3) == ProjectionOrders{0, 1});
  CHECK(glb.at(0, 2) == ProjectionOrders{1, 0});  // along a xi = const edge
  CHECK(glb.at(2, 1) == ProjectionOrders{0, 0});

  const ProjectionAssignment single = assign_projection_spaces(1, 1, ProjectionStrategy::glb, 2, 2);
  REQUIRE(single.orders.size() == 1);
  CHECK(single.orders[0] == ProjectionOrders{1, 1});
  for (const auto& o : assign_projection_spaces(1, 5, ProjectionStrategy::glb, 2, 2).orders) {
    CHECK(o == ProjectionOrders{1, 1});
  }

  for (const auto& o : assign_projection_spaces(4, 4, ProjectionStrategy::lb, 2, 2).orders) {
    CHECK(o == ProjectionOrders{1, 1});
  }
  for (const auto& o : assign_projection_spaces(3, 2, ProjectionStrategy::lb, 3, 2).orders) {
    CHECK(o == ProjectionOrders{2, 1});
  }

  const ProjectionAssignment fallback = assign_projection_spaces(4, 4, ProjectionStrategy::glb, 3, 3);
  CHECK(fallback.warning.has_value());
  for (const auto& o : fallback.orders) CHECK(o == ProjectionOrders{2, 2});

  CHECK_THROWS_AS(assign_projection_spaces(0, 4, ProjectionStrategy::glb, 2, 2), ArgumentError);
}

TEST_CASE("element Gram matrices") {
  const ShellModel plate = case_plate().model;
  const ElementSpan e = plate.basis().elements()[0];
  const Eigen::MatrixXd m0 = element_gram(plate, e, {0, 0}, quadrature_for(Method::glb, 2, 2));
  REQUIRE(m0.rows() == 1);
  CHECK(m0(0, 0) == doctest::Approx(0.25).epsilon(1e-14));

  const ElementSpan unit = unit_element();
  QuadratureRule rule;
  rule.points_xi = rule.points_eta = 2;
  const auto pts = rule.in_plane(unit);
  const ElementProjection bilinear = element_projection(unit, {1, 1}, pts, Eigen::VectorXd::Ones(4));
  Eigen::Matrix4d expected;
  expected << 4, 2, 2, 1, 2, 4, 1, 2, 2, 1, 4, 2, 1, 2, 2, 4;
  expected /= 36.0;
  CHECK((bilinear.gram - expected).cwiseAbs().maxCoeff() < 1e-15);

  // Dense 10 x 10 quadrature of the hand-written basis.
  rule.points_xi = rule.points_eta = 10;
  Eigen::Matrix4d dense = Eigen::Matrix4d::Zero();
  for (const auto& p : rule.in_plane(unit)) {
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        dense(a, b) += p.weight * hand_basis({1, 1}, a, unit, p.xi, p.eta) * hand_basis({1, 1}, b, unit, p.xi, p.eta);
      }
    }
  }
  CHECK((bilinear.gram - dense).cwiseAbs().maxCoeff() < 1e-12);

  const ShellModel roof = refine_uniform(case_scordelis().model, 3, 3);
  for (const auto& el : roof.basis().elements()) {
    for (const auto& o : kAllOrders) {
      const Eigen::MatrixXd g = element_gram(roof, el, o, quadrature_for(Method::glb, 2, 2));
      CHECK((g - g.transpose()).norm() < 1e-15 * g.norm());
      CHECK(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(g).eigenvalues().minCoeff() > 0.0);
    }
  }

  CHECK_THROWS_AS(element_projection(unit, {1, 1}, pts, Eigen::Vector4d(1, 1, 0, 1)), GeometryError);
  // Four points cannot support a 3 x 3 space.
  CHECK_THROWS_AS(element_projection(unit, {2, 2}, pts, Eigen::VectorXd::Ones(4)), GeometryError);
}

TEST_CASE("projection of simple fields") {
  const ElementSpan e = unit_element();
  QuadratureRule rule;
  rule.points_xi = rule.points_eta = 2;
  const auto pts = rule.in_plane(e);
  std::mt19937 rng(41);

  StrainMatrix constant(6, 3);
  for (int i = 0; i < constant.size(); ++i) constant(i) = oracle::uniform(rng, -1, 1);
  for (const auto& o : kAllOrders) {
    const ElementProjection proj = element_projection(e, o, pts, Eigen::VectorXd::Ones(4));
    const auto out = project_mid_strain(proj, std::vector<StrainMatrix>(4, constant));
    for (const auto& m : out) CHECK((m - constant).cwiseAbs().maxCoeff() < 1e-14);
  }

  // Linear in xi projected onto constants gives the element average 0.5 * (slope) + offset.
  std::vector<StrainMatrix> linear;
  for (const auto& p : pts) linear.push_back(StrainMatrix::Constant(6, 1, 2.0 + 3.0 * p.xi));
  const auto avg = project_mid_strain(element_projection(e, {0, 0}, pts, Eigen::VectorXd::Ones(4)), linear);
  for (const auto& m : avg) CHECK(m(0, 0) == doctest::Approx(3.5).epsilon(1e-14));
  const auto kept = project_mid_strain(element_projection(e, {1, 0}, pts, Eigen::VectorXd::Ones(4)), linear);
  CHECK(max_diff(kept, linear) < 1e-14);
}

TEST_CASE("property: projection idempotence, linearity and reproduction") {
  std::mt19937 rng(42);
  for (const ShellModel& m : shell_models(3)) {
    const QuadratureRule rule = quadrature_for(Method::glb, 2, 2);
    for (const auto& el : m.basis().elements()) {
      for (const auto& o : kAllOrders) {
        const ElementProjection proj = element_projection(m, el, o, rule);
        const Eigen::MatrixXd pi = projection_operator(proj);
        CHECK((pi * pi - pi).cwiseAbs().maxCoeff() < 1e-12);

        const int n = static_cast<int>(pi.rows());
        std::vector<StrainMatrix> b1, b2, combo;
        for (int g = 0; g < n; ++g) {
          b1.push_back(random_matrix(rng, 6, 4));
          b2.push_back(random_matrix(rng, 6, 4));
          combo.push_back(1.5 * b1.back() - 0.25 * b2.back());
        }
        const auto p1 = project_mid_strain(proj, b1);
        const auto p2 = project_mid_strain(proj, b2);
        const auto pc = project_mid_strain(proj, combo);
        for (int g = 0; g < n; ++g) CHECK((pc[g] - (1.5 * p1[g] - 0.25 * p2[g])).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(max_diff(project_mid_strain(proj, p1), p1) < 1e-12);

        // Fields inside the space: random coefficients on the projection basis.
        const auto pts = rule.in_plane(el);
        const Eigen::MatrixXd coeff = random_matrix(rng, static_cast<int>(proj.basis.cols()), 6 * 4);
        std::vector<StrainMatrix> in_space;
        for (int g = 0; g < n; ++g) {
          Eigen::RowVectorXd row(proj.basis.cols());
          for (int k = 0; k < row.size(); ++k) row[k] = hand_basis(o, k, el, pts[g].xi, pts[g].eta);
          const Eigen::RowVectorXd flat = row * coeff;
          in_space.push_back(Eigen::Map<const StrainMatrix>(flat.data(), 6, 4));
        }
        CHECK(max_diff(project_mid_strain(proj, in_space), in_space) < 1e-10);
      }
    }
  }
}

TEST_CASE("projection matches a dense least-squares fit on affine elements") {
  const ShellModel m = skewed_plate(0.01);
  const QuadratureRule rule = quadrature_for(Method::glb, 2, 2);
  for (const auto& el : m.basis().elements()) {
    for (const auto& o : kAllOrders) {
      const MidSamples s = mid_samples(m, el, 2);
      const auto projected = project_mid_strain(element_projection(m, el, o, rule), s.mid);
      const auto oracle_fit = dense_lsq(m, el, o, s.points);
      CHECK(max_diff(projected, oracle_fit) < 1e-10 * max_entry(oracle_fit));
    }
  }
}

TEST_CASE("B-bar element stiffness") {
  const QuadratureRule reduced = quadrature_for(Method::glb, 2, 2);
  const QuadratureRule full = quadrature_for(Method::iga, 2, 2);
  std::vector<ShellModel> models = shell_models(2);
  models.push_back(skewed_plate(0.01));
  for (const ShellModel& m : models) {
    const int slots = slots_per_point(m.kind());
    for (const auto& el : m.basis().elements()) {
      // With as many projection functions as sampling points the projection
      // interpolates, so the B-bar terms cancel.
      const ElementStiffness iga = element_stiffness_iga(m, el, reduced);
      const ElementStiffness lb = element_stiffness_bbar(m, el, {1, 1}, reduced);
      CHECK((lb.k - iga.k).norm() < 1e-12 * iga.k.norm());

      for (const auto& o : kAllOrders) {
        const ElementStiffness k = element_stiffness_bbar(m, el, o, reduced);
        CHECK(k.cp == iga.cp);
        CHECK((k.k - k.k.transpose()).norm() <= 1e-12 * k.k.norm());
        for (int c = 0; c < 3; ++c) {
          Eigen::VectorXd t = Eigen::VectorXd::Zero(k.k.rows());
          for (std::size_t a = 0; a < k.cp.size(); ++a) t[a * slots + c] = 1.0;
          CHECK(std::abs(t.dot(k.k * t)) < 1e-10 * k.k.norm());
        }
      }
      const ElementStiffness kf = element_stiffness_iga(m, el, full);
      CHECK((kf.k - kf.k.transpose()).norm() <= 1e-12 * kf.k.norm());
    }
  }
}

TEST_CASE("projection lowers the shear energy of a thin plate bending state") {
  const ShellModel m = refine_uniform(case_plate(1e-3).model, 4, 4);
  const ElementSpan el = m.basis().elements()[5];  // interior element
  const ElementStiffness iga = element_stiffness_iga(m, el, quadrature_for(Method::iga, 2, 2));
  const ElementStiffness glb = element_stiffness_bbar(m, el, {0, 0}, quadrature_for(Method::glb, 2, 2));
  Eigen::VectorXd q = Eigen::VectorXd::Zero(iga.k.rows());
  for (std::size_t a = 0; a < iga.cp.size(); ++a) q[a * 5 + 4] = m.net().points[iga.cp[a]].x();  // theta_y = x
  const double e_iga = q.dot(iga.k * q);
  const double e_glb = q.dot(glb.k * q);
  CHECK(e_glb > 0.0);
  CHECK(e_glb < e_iga);
}

namespace {

// Element matrices of thin shells carry singular values down to ~1e-8 of the
// largest and round-off null values near 1e-14, which straddle the N eps
// threshold. Rank here is counted against a 1e-10 relative gap.
int element_rank(const Eigen::MatrixXd& k) {
  const Eigen::VectorXd s = Eigen::JacobiSVD<Eigen::MatrixXd>(k).singularValues();
  return static_cast<int>((s.array() > 1e-10 * s[0]).count());
}

}  // namespace

TEST_CASE("element rank is unchanged by the local projection") {
  const QuadratureRule reduced = quadrature_for(Method::glb, 2, 2);
  for (const ShellModel& m : shell_models(4)) {
    const auto assignment = assign_projection_spaces(4, 4, ProjectionStrategy::glb, 2, 2);
    for (const auto& el : m.basis().elements()) {
      const int r_iga = element_rank(element_stiffness_iga(m, el, reduced).k);
      const int r_glb = element_rank(element_stiffness_bbar(m, el, assignment.at(el.ex, el.ey), reduced).k);
      CHECK(r_glb == r_iga);
    }
  }
}

TEST_CASE("patch-wide projection") {
  const QuadratureRule rule = quadrature_for(Method::cbar, 2, 2);

  SUBCASE("single element coincides with the local projection") {
    const ShellModel m = case_scordelis().model;
    const GlobalProjector gp(m, rule);
    CHECK(gp.size() == 4);
    const ElementSpan el = m.basis().elements()[0];
    const MidSamples s = mid_samples(m, el, 2);
    std::vector<std::vector<Eigen::MatrixXd>> samples(1);
    for (const auto& mid : s.mid) samples[0].push_back(mid);
    const auto global = gp.project(samples);
    const auto local = project_mid_strain(element_projection(m, el, {1, 1}, rule), s.mid);
    for (std::size_t g = 0; g < local.size(); ++g) {
      CHECK((global[0][g] - local[g]).cwiseAbs().maxCoeff() < 1e-12 * max_entry(local));
    }
  }

  SUBCASE("constants are kept") {
    const ShellModel m = refine_uniform(case_hemisphere().model, 3, 3);
    const GlobalProjector gp(m, rule);
    std::vector<std::vector<Eigen::MatrixXd>> samples(gp.num_elements(),
                                                      std::vector<Eigen::MatrixXd>(4, Eigen::MatrixXd::Constant(2, 3, 7.0)));
    for (const auto& e : gp.project(samples)) {
      for (const auto& v : e) CHECK((v.array() - 7.0).abs().maxCoeff() < 1e-12);
    }
  }

  SUBCASE("4 x 4 plate matches a dense global least-squares fit") {
    const ShellModel m = refine_uniform(case_plate(0.01).model, 4, 4);
    const GlobalProjector gp(m, rule);
    const auto elements = m.basis().elements();
    const KnotVector lx = reduced_knot_vector(m.basis().xi());
    const KnotVector ly = reduced_knot_vector(m.basis().eta());
    const int nbar = lx.num_basis() * ly.num_basis();
    const int cols = 6 * m.num_control_points() * 5;

    // MID over all control-point slots so elements share one column layout.
    const auto global_mid = [&](const ElementSpan& el, double xi, double eta) {
      const StrainMatrix local = mid_operator(m, el, xi, eta);
      const auto cp = m.basis().evaluate(el, xi, eta).cp;
      StrainMatrix out = StrainMatrix::Zero(6, m.num_control_points() * 5);
      for (std::size_t a = 0; a < cp.size(); ++a) out.middleCols(cp[a] * 5, 5) = local.middleCols(a * 5, 5);
      return out;
    };
    const auto lower = [&](double xi, double eta) {
      Eigen::VectorXd n(nbar);
      for (int j = 0; j < ly.num_basis(); ++j) {
        for (int i = 0; i < lx.num_basis(); ++i) {
          n[j * lx.num_basis() + i] = oracle::cox_de_boor(lx.knots(), i, 1, xi) * oracle::cox_de_boor(ly.knots(), j, 1, eta);
        }
      }
      return n;
    };

    Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(nbar, nbar);
    Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(nbar, cols);
    QuadratureRule dense;
    dense.points_xi = dense.points_eta = 10;
    for (const auto& el : elements) {
      for (const auto& p : dense.in_plane(el)) {
        const SurfacePoint sp = surface_point(m, p.xi, p.eta);
        const double w = p.weight * sp.x_xi.cross(sp.x_eta).norm();
        const Eigen::VectorXd n = lower(p.xi, p.eta);
        const StrainMatrix mid = global_mid(el, p.xi, p.eta);
        gram += w * n * n.transpose();
        rhs += w * n * Eigen::Map<const Eigen::RowVectorXd>(mid.data(), cols);
      }
    }
    const Eigen::MatrixXd coeff = gram.ldlt().solve(rhs);

    std::vector<std::vector<Eigen::MatrixXd>> samples(elements.size());
    for (std::size_t e = 0; e < elements.size(); ++e) {
      for (const auto& p : rule.in_plane(elements[e])) samples[e].push_back(global_mid(elements[e], p.xi, p.eta));
    }
    const auto projected = gp.project(samples);
    double worst = 0.0;
    double scale = 0.0;
    for (std::size_t e = 0; e < elements.size(); ++e) {
      const auto pts = rule.in_plane(elements[e]);
      for (std::size_t g = 0; g < pts.size(); ++g) {
        const Eigen::RowVectorXd flat = lower(pts[g].xi, pts[g].eta).transpose() * coeff;
        const Eigen::Map<const Eigen::MatrixXd> expected(flat.data(), 6, cols / 6);
        worst = std::max(worst, (projected[e][g] - expected).cwiseAbs().maxCoeff());
        scale = std::max(scale, expected.cwiseAbs().maxCoeff());
      }
    }
    CHECK(worst < 1e-9 * scale);
  }

  SUBCASE("classical stiffness on one element equals LB") {
    for (const BenchmarkCase& c : {case_scordelis(), case_plate(0.01)}) {
      const Eigen::MatrixXd k = global_bbar_stiffness(c.model, rule);
      const ElementSpan el = c.model.basis().elements()[0];
      const ElementStiffness lb = element_stiffness_bbar(c.model, el, {1, 1}, rule);
      // Single element: local ordering equals global ordering.
      CHECK((k - lb.k).norm() < 1e-10 * lb.k.norm());
    }
  }

  SUBCASE("degree 1 has no lower space") {
    const ShellModel m = case_plate().model;
    const ShellModel linear = m.with_geometry(KnotVector(1, {0, 0, 1, 1}), KnotVector(1, {0, 0, 1, 1}),
                                              ControlNet{2, 2, {{0.5, 0, 0}, {1, 0, 0}, {0.5, 0.5, 0}, {1, 0.5, 0}},
                                                         {1, 1, 1, 1}});
    CHECK_THROWS_AS(GlobalProjector(linear, quadrature_for(Method::cbar, 1, 1)), ArgumentError);
  }
}

TEST_CASE("two-node beam shear projection") {
  const BeamShear demo = timoshenko_demo();
  CHECK(demo == BeamShear{-1.0, 1.0, -0.5, -0.5});
  CHECK(timoshenko_shear(0.0) == BeamShear{-1.0, 1.0, -1.0, 0.0});
  for (double x : {0.0, 0.3, 1.0}) {
    const BeamShear p0 = timoshenko_projected_shear(x, 0);
    for (int k = 0; k < 4; ++k) CHECK(p0[k] == doctest::Approx(demo[k]).epsilon(1e-14));
    const BeamShear p1 = timoshenko_projected_shear(x, 1);
    const BeamShear original = timoshenko_shear(x);
    for (int k = 0; k < 4; ++k) CHECK(std::abs(p1[k] - original[k]) < 1e-14);
  }
  // Equal nodal rotations give a constant shear strain, which the projection keeps.
  std::mt19937 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    const double w1 = oracle::uniform(rng, -1, 1);
    const double w2 = oracle::uniform(rng, -1, 1);
    const double th = oracle::uniform(rng, -1, 1);
    const double x = oracle::uniform(rng, 0, 1);
    const auto apply = [&](const BeamShear& c) { return c[0] * w1 + c[1] * w2 + c[2] * th + c[3] * th; };
    CHECK(apply(timoshenko_projected_shear(x, 0)) == doctest::Approx(apply(timoshenko_shear(x))).epsilon(1e-13));
  }
  CHECK_THROWS_AS(timoshenko_projected_shear(0.5, 2), ArgumentError);
}
