#include "doctest.h"
#include "oracles.hpp"
#include "scalarflat/errors.hpp"
#include "scalarflat/positivity.hpp"

using namespace scalarflat;
using oracle::pi;
using oracle::tau;

TEST_CASE("rc_scan finds the first minimizer") {
  const int n = 8;
  Eigen::MatrixXd base = Eigen::MatrixXd::Constant(n * n, 2, 5.0);
  base(10, 1) = 0.5;
  base(20, 1) = 0.5;
  base(3, 0) = 2.0;
  const std::vector<FiberSimplexPoint> samples{FiberSimplexPoint::leading(0.0, 2), FiberSimplexPoint::leading(1.0, 2)};
  const OneOneForm form(n, 2, base, samples, -2.0);
  const RCReport r = rc_scan(form, CurveModel::uniform(2, n));
  CHECK(r.min_max_eigenvalue == 0.5);
  CHECK(r.witness.point == 10);
  CHECK(r.witness.ix == 2);
  CHECK(r.witness.iy == 1);
  CHECK(r.witness.sample == 1);
  CHECK(r.witness.s1 == 1.0);
  CHECK(r.rc_positive);
}

TEST_CASE("rc_scan divides by lambda and respects the fiber eigenvalue") {
  const int n = 8;
  const Eigen::MatrixXd base = Eigen::MatrixXd::Constant(n * n, 1, -3.0);
  const OneOneForm neg(n, 2, base, {FiberSimplexPoint::leading(0.5, 2)}, -2.0);
  CHECK(rc_scan(neg, CurveModel::uniform(2, n)).min_max_eigenvalue == -2.0);
  CHECK_FALSE(rc_scan(neg, CurveModel::uniform(2, n)).rc_positive);
  const OneOneForm pos(n, 2, Eigen::MatrixXd::Constant(n * n, 1, 3.0), {FiberSimplexPoint::leading(0.5, 2)}, -2.0);
  const CurveModel wide(2, RealGrid::Constant(n, n, 2.0));
  CHECK(rc_scan(pos, wide).min_max_eigenvalue == 1.5);
  CHECK_THROWS_AS(rc_scan(pos, CurveModel::uniform(2, 16)), InvalidInput);
}

TEST_CASE("constant certificates") {
  struct Row { int g, d, n; };
  for (const Row r : {Row{2, 1, 2}, Row{6, 5, 2}, Row{2, 0, 3}, Row{6, 2, 3}, Row{4, 1, 5}}) {
    const double expected = pi * (2 * r.g - 2 - (r.n - 1) * r.d);
    const CertificateOutcome c = kx_certificate_split(r.g, r.d, r.n, 32);
    REQUIRE(c.issued());
    CHECK(std::abs(c.margin - expected) <= 1e-12);
    CHECK(std::abs(c.certificate->scan.min_max_eigenvalue - expected) <= 1e-9);
    if (r.d > 0) CHECK(c.certificate->scan.witness.s1 == 1.0);
    CHECK(std::abs(recompute_margin(*c.certificate) - c.certificate->margin) <= 1e-12);
  }
}

TEST_CASE("constant certificates fail at the boundary") {
  for (auto [g, d, n] : {std::tuple{2, 2, 2}, std::tuple{2, 1, 3}, std::tuple{3, 3, 3}}) {
    const CertificateOutcome c = kx_certificate_split(g, d, n, 16);
    CHECK_FALSE(c.issued());
    CHECK(c.margin <= 0.0);
    CHECK(c.witness.has_value());
    CHECK_FALSE(c.failure.empty());
  }
}

TEST_CASE("certificate preconditions") {
  CHECK_THROWS_AS(kx_certificate_split(1, 0, 2, 16), InvalidInput);
  CHECK_THROWS_AS(kx_certificate_split(2, -1, 2, 16), InvalidInput);
  CHECK_THROWS_AS(kx_certificate_split(2, 0, 1, 16), InvalidInput);
}

TEST_CASE("prescribed certificate with non-constant densities") {
  const int n = 32;
  const CurveModel c = CurveModel::uniform(3, n);
  const RealGrid kappa = sample_curve_grid(n, [](double x, double y) { return pi + 0.8 * std::sin(tau * x) * std::cos(tau * y); });
  const RealGrid gamma = sample_curve_grid(n, [](double x, double) { return 4 * pi + 1.1 * std::cos(tau * x); });
  const CertificateOutcome out = kx_certificate_split(3, 1, 2, PrescribedDensities{c, kappa, gamma});
  REQUIRE(out.issued());
  double margin = 1e300;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) margin = std::min(margin, gamma(i, j) - kappa(i, j));
  CHECK(std::abs(out.margin - margin) < 1e-12);
  CHECK(std::abs(recompute_margin(*out.certificate) - out.margin) <= 1e-12);
  CHECK(out.certificate->strategy == CertificateStrategy::Prescribed);
}

TEST_CASE("prescribed densities with a negative pointwise margin are refused") {
  const int n = 32;
  const CurveModel c = CurveModel::uniform(2, n);
  const RealGrid kappa = sample_curve_grid(n, [](double x, double) { return pi + 3.5 * std::sin(tau * x); });
  const RealGrid gamma = RealGrid::Constant(n, n, 2 * pi);
  const CertificateOutcome out = kx_certificate_split(2, 1, 2, PrescribedDensities{c, kappa, gamma});
  CHECK_FALSE(out.issued());
  REQUIRE(out.witness.has_value());
  CHECK(gamma(out.witness->ix, out.witness->iy) - kappa(out.witness->ix, out.witness->iy) == doctest::Approx(out.margin));
  CHECK_THROWS_AS(kx_certificate_split(2, 1, 2, PrescribedDensities{c, kappa, gamma + 0.1}), DegreeError);
}

TEST_CASE("anti-canonical flag") {
  const AntiCanonicalFlag f = anti_kx_rc_flag({true, 3});
  CHECK(f.rc_positive);
  CHECK_FALSE(f.provenance.empty());
  CHECK_THROWS_AS(anti_kx_rc_flag({false, 3}), InvalidInput);
}
