#include "scalarflat/spectral.hpp"

#include "scalarflat/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace scalarflat {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

PeriodicAxis::PeriodicAxis(int n, DiffMode mode) : n_(n), mode_(mode) {
  if (n < 8 || n % 2 != 0)
    throw InvalidInput("grid resolution must be even and >= 8, got " + std::to_string(n));

  // Columns: constant, (cos k, sin k) for k = 1..n/2-1, Nyquist.
  basis_.resize(n, n);
  d2_eigenvalues_.resize(n);
  Eigen::MatrixXd d1_modal = Eigen::MatrixXd::Zero(n, n);
  const int half = n / 2;
  const double c0 = 1.0 / std::sqrt(double(n));
  const double ck = std::sqrt(2.0 / n);
  for (int j = 0; j < n; ++j) {
    const double x = double(j) / n;
    basis_(j, 0) = c0;
    for (int k = 1; k < half; ++k) {
      basis_(j, 2 * k - 1) = ck * std::cos(kTwoPi * k * x);
      basis_(j, 2 * k) = ck * std::sin(kTwoPi * k * x);
    }
    basis_(j, n - 1) = (j % 2 == 0 ? c0 : -c0);
  }
  d2_eigenvalues_(0) = 0.0;
  for (int k = 1; k < half; ++k) {
    const double w = kTwoPi * k;
    d2_eigenvalues_(2 * k - 1) = -w * w;
    d2_eigenvalues_(2 * k) = -w * w;
    // d/dx cos = -w sin, d/dx sin = w cos
    d1_modal(2 * k, 2 * k - 1) = -w;
    d1_modal(2 * k - 1, 2 * k) = w;
  }
  d2_eigenvalues_(n - 1) = -(kTwoPi * half) * (kTwoPi * half);

  if (mode == DiffMode::Spectral) {
    d1_ = basis_ * d1_modal * basis_.transpose();
    d2_ = basis_ * d2_eigenvalues_.asDiagonal() * basis_.transpose();
    return;
  }

  const double h = 1.0 / n;
  d1_ = Eigen::MatrixXd::Zero(n, n);
  d2_ = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    const int jp = (j + 1) % n;
    const int jm = (j + n - 1) % n;
    d1_(j, jp) = 0.5 / h;
    d1_(j, jm) = -0.5 / h;
    d2_(j, jp) = 1.0 / (h * h);
    d2_(j, jm) = 1.0 / (h * h);
    d2_(j, j) = -2.0 / (h * h);
  }
}

}  // namespace scalarflat
