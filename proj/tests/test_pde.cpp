#include "doctest.h"
#include "oracles.hpp"
#include "scalarflat/curvature.hpp"
#include "scalarflat/errors.hpp"
#include "scalarflat/pde.hpp"

#include <random>

using namespace scalarflat;
using oracle::pi;
using oracle::tau;

namespace {

RealGrid random_zero_mean(int n, std::mt19937& rng) {
  std::normal_distribution<double> N01;
  const double a = N01(rng), b = N01(rng), c = N01(rng);
  return sample_curve_grid(n, [&](double x, double y) {
    return a * std::sin(tau * x) + b * std::cos(tau * (x + 2 * y)) + c * std::sin(3 * tau * y);
  });
}

MetricModel4T kahler(int n, double amp) {
  const TorusGrid4 grid(n);
  return MetricModel4T::kahler(grid, grid.sample([&](double x1, double, double, double y2) {
    return amp * std::sin(tau * x1) * std::cos(tau * y2);
  }));
}

}  // namespace

TEST_CASE("poisson_periodic") {
  const int n = 32;
  CHECK(poisson_periodic(RealGrid::Zero(n, n)).abs().maxCoeff() == 0.0);
  const RealGrid rho = sample_curve_grid(n, [](double x, double) { return std::cos(tau * x); });
  const RealGrid expected = -rho / (tau * tau);
  CHECK((poisson_periodic(rho) - expected).abs().maxCoeff() < 1e-10);
  CHECK_THROWS_AS(poisson_periodic(RealGrid::Ones(n, n)), SolvabilityError);
}

TEST_CASE("poisson solution satisfies the equation and has zero mean") {
  std::mt19937 rng(3);
  const int n = 32;
  const RealGrid rho = random_zero_mean(n, rng);
  const RealGrid u = poisson_periodic(rho);
  CHECK(std::abs(u.mean()) < 1e-14);
  const PeriodicAxis axis(n);
  CHECK((4.0 * d_z_zbar(axis, u) - rho).abs().maxCoeff() < 1e-10);
}

TEST_CASE("poisson is self-adjoint") {
  std::mt19937 rng(5);
  for (int t = 0; t < 5; ++t) {
    const RealGrid a = random_zero_mean(32, rng), b = random_zero_mean(32, rng);
    const double lhs = (poisson_periodic(a) * b).sum(), rhs = (a * poisson_periodic(b)).sum();
    CHECK(std::abs(lhs - rhs) < 1e-10 * (1.0 + std::abs(lhs)));
  }
}

TEST_CASE("prescribe_curvature round trip") {
  const int n = 64;
  const CurveModel c = CurveModel::uniform(2, n);
  const PeriodicAxis axis(n);
  const LineBundleModel current = make_line_bundle(1, ConstantProfile{}, c);
  CHECK(prescribe_curvature(current.kappa(), current).abs().maxCoeff() == 0.0);
  const RealGrid target = sample_curve_grid(n, [](double x, double y) { return pi + 0.6 * std::sin(tau * x) * std::cos(2 * tau * y); });
  const RealGrid u = prescribe_curvature(target, current);
  const LineBundleModel moved = modify_potential(current, u, axis);
  CHECK((moved.kappa() - target).abs().maxCoeff() < 1e-8);
  CHECK(std::abs(integrate(moved.kappa(), c) / pi - 1.0) < 1e-10);
  CHECK_THROWS_AS(prescribe_curvature(target + pi, current), DegreeError);
}

TEST_CASE("Gauduchon test") {
  const GauduchonCheck flat = is_gauduchon(MetricModel4T::flat(8));
  CHECK(flat.gauduchon);
  CHECK(flat.residual == 0.0);
  const GauduchonCheck k = is_gauduchon(kahler(16, 0.05));
  CHECK(k.gauduchon);
  CHECK(k.residual < 1e-8);
  // e^u flat with u = eps sin(2 pi x1): c = (1/4)(e^u)'' = (1/4) e^u (u'' + u'^2)
  const double eps = 0.2;
  const TorusGrid4 grid(16);
  const MetricModel4T m = MetricModel4T::conformally_flat(
      grid, grid.sample([&](double x1, double, double, double) { return eps * std::sin(tau * x1); }));
  double expected = 0.0;
  for (int i = 0; i < 16; ++i) {
    const double x = i / 16.0;
    const double up = eps * tau * std::cos(tau * x), upp = -eps * tau * tau * std::sin(tau * x);
    expected = std::max(expected, 0.25 * std::exp(eps * std::sin(tau * x)) * std::abs(upp + up * up));
  }
  const GauduchonCheck c = is_gauduchon(m);
  CHECK_FALSE(c.gauduchon);
  CHECK(c.residual == doctest::Approx(expected).epsilon(1e-8));
}

TEST_CASE("flat metric needs no conformal change") {
  const ConformalSolution s = conformal_scalar_flat(MetricModel4T::flat(8));
  CHECK(s.f.cwiseAbs().maxCoeff() == 0.0);
  CHECK(s.residual == 0.0);
}

TEST_CASE("conformal solve on a small Kahler perturbation") {
  const MetricModel4T m = kahler(16, 0.05);
  const ConformalSolution s = conformal_scalar_flat(m);
  CHECK(std::abs(s.f.mean()) < 1e-12);
  CHECK(s.solve_residual <= 1e-10);
  CHECK(s.residual < 1e-6);
  const double recomputed = chern_scalar(m.rescaled(s.f / 2)).cwiseAbs().maxCoeff();
  CHECK(std::abs(recomputed - s.residual) <= 1e-12);
  CHECK(conformal_scalar_identity_residual(m, s.f) < 1e-8);
  const ConformalSolution again = conformal_scalar_flat(m);
  CHECK(again.iterations == s.iterations);
  CHECK((again.f - s.f).cwiseAbs().maxCoeff() == 0.0);
  CHECK(again.residual == s.residual);
}

TEST_CASE("conformal solver refuses bad input") {
  const TorusGrid4 grid(8);
  const MetricModel4T conf = MetricModel4T::conformally_flat(
      grid, grid.sample([](double x1, double, double, double) { return 0.3 * std::sin(tau * x1); }));
  CHECK_THROWS_AS(conformal_scalar_flat(conf), InvalidInput);
  ConformalOptions o;
  o.enforce_gauduchon = false;
  CHECK_THROWS_AS(conformal_scalar_flat(conf, o), SolvabilityError);
  o.n = 3;
  CHECK_THROWS_AS(conformal_scalar_flat(MetricModel4T::flat(8), o), InvalidInput);
  ConformalOptions tight;
  tight.max_iterations = 1;
  CHECK_THROWS_AS(conformal_scalar_flat(kahler(8, 0.05), tight), ConvergenceError);
}

TEST_CASE("scalar curvature under conformal change") {
  const MetricModel4T m = kahler(16, 0.05);
  const TorusGrid4& grid = m.grid();
  const Field4 f = grid.sample([](double x1, double y1, double x2, double) {
    return 0.3 * std::sin(tau * x1) * std::cos(tau * y1) + 0.1 * std::cos(tau * x2);
  });
  CHECK(conformal_scalar_identity_residual(m, f) < 1e-8);
  CHECK(conformal_scalar_identity_residual(m, Field4::Zero(grid.size())) == 0.0);
}

TEST_CASE("total scalar identity under conformal change") {
  const MetricModel4T k = kahler(16, 0.05);
  const TorusGrid4& grid = k.grid();
  const Field4 f = grid.sample([](double x1, double y1, double, double y2) {
    return 0.2 * std::sin(tau * x1) * std::cos(tau * y2) + 0.1 * std::cos(tau * y1);
  });
  // e^f (e^{-f} omega_K) = omega_K is Gauduchon.
  const MetricModel4T w = k.rescaled(-f);
  CHECK(conformal_total_scalar_identity_check(w, f) < 1e-6);
  CHECK(conformal_total_scalar_identity_check(k, Field4::Zero(grid.size())) < 1e-12);
  const Field4 c = Field4::Constant(grid.size(), 0.4);
  CHECK(conformal_total_scalar_identity_check(k, c) < 1e-10);
  const MetricModel4T flat = MetricModel4T::flat(16);
  CHECK(conformal_total_scalar_identity_check(flat, c) < 1e-8);
  CHECK_THROWS_AS(conformal_total_scalar_identity_check(k, f), InvalidInput);
}
