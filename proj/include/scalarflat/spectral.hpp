#pragma once

#include <Eigen/Dense>

#include <complex>
#include <type_traits>

namespace scalarflat {

using cplx = std::complex<double>;

template <typename Scalar>
using Grid2 = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RealGrid = Grid2<double>;
using ComplexGrid = Grid2<cplx>;

enum class DiffMode { Spectral, FiniteDifference };

/// Differentiation operators on N equispaced samples of the periodic unit
/// interval, x_j = j / N.
///
/// Spectral mode uses trigonometric interpolation: d2() is the exact second
/// derivative of the interpolant (it keeps the Nyquist mode), while d1()
/// annihilates the Nyquist mode, so d2() != d1() * d1() in general.
/// Finite-difference mode uses centered second-order stencils.
class PeriodicAxis {
 public:
  explicit PeriodicAxis(int n, DiffMode mode = DiffMode::Spectral);

  int size() const { return n_; }
  DiffMode mode() const { return mode_; }
  const Eigen::MatrixXd& d1() const { return d1_; }
  const Eigen::MatrixXd& d2() const { return d2_; }

  // Orthonormal real Fourier basis (one mode per column) that diagonalizes
  // the spectral d2(); eigenvalues are -(2 pi k)^2.
  const Eigen::MatrixXd& basis() const { return basis_; }
  const Eigen::VectorXd& d2_eigenvalues() const { return d2_eigenvalues_; }

 private:
  int n_;
  DiffMode mode_;
  Eigen::MatrixXd d1_;
  Eigen::MatrixXd d2_;
  Eigen::MatrixXd basis_;
  Eigen::VectorXd d2_eigenvalues_;
};

namespace detail {

template <typename Scalar>
Grid2<Scalar> shifted(const Grid2<Scalar>& f) {
  // Derivatives kill constants; removing one sample makes that exact in
  // floating point for constant input.
  return f - f(0, 0);
}

}  // namespace detail

// Curve grids are indexed f(ix, iy): rows follow x, columns follow y.

template <typename Scalar>
Grid2<Scalar> along_x(const Eigen::MatrixXd& op, const Grid2<Scalar>& f) {
  return (op.cast<Scalar>() * detail::shifted(f).matrix()).array();
}

template <typename Scalar>
Grid2<Scalar> along_y(const Eigen::MatrixXd& op, const Grid2<Scalar>& f) {
  return (detail::shifted(f).matrix() * op.transpose().cast<Scalar>()).array();
}

/// d/dz = (d/dx - i d/dy) / 2.
template <typename Scalar>
ComplexGrid d_z(const PeriodicAxis& axis, const Grid2<Scalar>& f) {
  const ComplexGrid fx = along_x(axis.d1(), f).template cast<cplx>();
  const ComplexGrid fy = along_y(axis.d1(), f).template cast<cplx>();
  return 0.5 * (fx - cplx(0.0, 1.0) * fy);
}

/// d/dzbar = (d/dx + i d/dy) / 2.
template <typename Scalar>
ComplexGrid d_zbar(const PeriodicAxis& axis, const Grid2<Scalar>& f) {
  const ComplexGrid fx = along_x(axis.d1(), f).template cast<cplx>();
  const ComplexGrid fy = along_y(axis.d1(), f).template cast<cplx>();
  return 0.5 * (fx + cplx(0.0, 1.0) * fy);
}

/// d^2/dz dzbar = (d_xx + d_yy) / 4, using the axis' second-derivative operator.
template <typename Scalar>
Grid2<Scalar> d_z_zbar(const PeriodicAxis& axis, const Grid2<Scalar>& f) {
  return 0.25 * (along_x(axis.d2(), f) + along_y(axis.d2(), f));
}

/// Sampled function on the periodic unit square.
template <typename Fn>
RealGrid sample_curve_grid(int n, Fn&& fn) {
  RealGrid out(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) out(i, j) = fn(double(i) / n, double(j) / n);
  return out;
}

}  // namespace scalarflat
