#pragma once

// Honest Hermitian metrics on a discretized complex 2-torus: fields over an
// N^4 periodic grid with complex coordinates z1 = x1 + i y1, z2 = x2 + i y2.
// Linear index ((i_x1 * N + i_y1) * N + i_x2) * N + i_y2.

#include "scalarflat/spectral.hpp"

#include <stdexcept>

namespace scalarflat {

using Field4 = Eigen::VectorXd;
using ComplexField4 = Eigen::VectorXcd;

enum Axis4 : int { kX1 = 0, kY1 = 1, kX2 = 2, kY2 = 3 };

class TorusGrid4 {
 public:
  explicit TorusGrid4(int n, DiffMode mode = DiffMode::Spectral);

  int resolution() const { return axis_.size(); }
  Eigen::Index size() const { return size_; }
  double cell_volume() const { return 1.0 / double(size_); }
  const PeriodicAxis& axis() const { return axis_; }

  /// Applies a 1-D derivative operator along one coordinate direction.
  /// Constants are removed first, so constant input differentiates to zero.
  template <typename Scalar>
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> apply(const Eigen::MatrixXd& op,
                                                 const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& f,
                                                 int axis) const {
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> shifted = f.array() - f(0);
    return apply_linear(op, shifted, axis);
  }

  /// Applies an arbitrary 1-D linear map along one coordinate direction.
  template <typename Scalar>
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> apply_linear(
      const Eigen::MatrixXd& op, const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& f, int axis) const;

  Field4 d1(const Field4& f, int axis) const { return apply(axis_.d1(), f, axis); }
  Field4 d2(const Field4& f, int axis) const { return apply(axis_.d2(), f, axis); }

  double integrate(const Field4& f) const { return f.sum() * cell_volume(); }

  template <typename Fn>
  Field4 sample(Fn&& fn) const;

 private:
  PeriodicAxis axis_;
  Eigen::Index size_;
};

/// 2x2 Hermitian matrix field: a11, a22 real, a12 complex, a21 = conj(a12).
/// Used for metrics g_{i jbar}, Chern-Ricci forms and complex Hessians.
struct HermitianField2 {
  Field4 a11;
  Field4 a22;
  ComplexField4 a12;

  Eigen::Index size() const { return a11.size(); }
  HermitianField2 operator-(const HermitianField2& o) const {
    return {a11 - o.a11, a22 - o.a22, a12 - o.a12};
  }
  HermitianField2 operator*(double c) const { return {c * a11, c * a22, c * a12}; }
  double max_abs() const;
};

/// Complex Hessian d^2 f / dz^i dzbar^j of a real field.
HermitianField2 complex_hessian(const TorusGrid4& grid, const Field4& f);

/// d^2 f / dz^i dzbar^j of a complex field, for i, j in {0, 1}.
ComplexField4 mixed_derivative(const TorusGrid4& grid, const ComplexField4& f, int i, int j);

/// tr(M B) pointwise. With M = g^{-1} this is the trace tr_g B.
Field4 trace_product(const HermitianField2& m, const HermitianField2& b);

/// Hermitian metric with cached determinant and inverse.
class MetricModel4T {
 public:
  MetricModel4T(TorusGrid4 grid, HermitianField2 g);

  static MetricModel4T flat(int n, DiffMode mode = DiffMode::Spectral);
  /// g = delta + ddbar(phi); positive-definiteness is checked, not assumed.
  static MetricModel4T kahler(const TorusGrid4& grid, const Field4& phi);
  /// g = exp(u) * identity.
  static MetricModel4T conformally_flat(const TorusGrid4& grid, const Field4& u);

  const TorusGrid4& grid() const { return grid_; }
  const HermitianField2& g() const { return g_; }
  const Field4& det() const { return det_; }
  // Matrix entries of g^{-1}; tr_g B = tr(g^{-1} B).
  const HermitianField2& inverse() const { return inverse_; }

  /// exp(log_factor) * g.
  MetricModel4T rescaled(const Field4& log_factor) const;

 private:
  TorusGrid4 grid_;
  HermitianField2 g_;
  Field4 det_;
  HermitianField2 inverse_;
};

/// Components of the Chern-Ricci form in the dz^i ^ dzbar^j basis.
struct RicciField {
  HermitianField2 ric;
};

/// ric_{i jbar} = -d_i d_jbar log det g.
RicciField chern_ricci(const MetricModel4T& metric);

/// s = g^{i jbar} ric_{i jbar}.
Field4 chern_scalar(const MetricModel4T& metric);
Field4 chern_scalar(const MetricModel4T& metric, const RicciField& ric);

struct TotalScalar {
  double integral = 0.0;        // int s omega^n
  double wedge_integral = 0.0;  // n int Ric ^ omega^(n-1)
  double cross_check_residual = 0.0;
};

/// Both expressions of the total scalar curvature with volume form
/// omega^2 = 8 det g dx1 dy1 dx2 dy2. Raises NumericalInconsistency when they
/// differ by more than `cross_check_tol`.
TotalScalar total_scalar_report(const MetricModel4T& metric, double cross_check_tol = 1e-6);
double total_scalar(const MetricModel4T& metric);

/// Ric(e^f omega) = Ric(omega) - n ddbar f.
RicciField conformal_ricci(const RicciField& ric, const TorusGrid4& grid, const Field4& f, int n);

// ---------------------------------------------------------------------------

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> TorusGrid4::apply_linear(
    const Eigen::MatrixXd& op, const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& f,
    int axis) const {
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index n = resolution();
  const Eigen::Index n2 = n * n;
  const Eigen::Index n3 = n2 * n;
  const Mat opc = op.cast<Scalar>();
  const Mat opt = opc.transpose();
  Vec out(f.size());
  switch (axis) {
    case kY2:
      Eigen::Map<Mat>(out.data(), n, n3).noalias() = opc * Eigen::Map<const Mat>(f.data(), n, n3);
      break;
    case kX1:
      Eigen::Map<Mat>(out.data(), n3, n).noalias() = Eigen::Map<const Mat>(f.data(), n3, n) * opt;
      break;
    case kY1:
      for (Eigen::Index b = 0; b < n; ++b)
        Eigen::Map<Mat>(out.data() + b * n3, n2, n).noalias() =
            Eigen::Map<const Mat>(f.data() + b * n3, n2, n) * opt;
      break;
    case kX2:
      for (Eigen::Index b = 0; b < n2; ++b)
        Eigen::Map<Mat>(out.data() + b * n2, n, n).noalias() =
            Eigen::Map<const Mat>(f.data() + b * n2, n, n) * opt;
      break;
    default:
      throw std::out_of_range("axis must be in 0..3");
  }
  return out;
}

template <typename Fn>
Field4 TorusGrid4::sample(Fn&& fn) const {
  const int n = resolution();
  Field4 out(size_);
  Eigen::Index idx = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          out(idx++) = fn(double(a) / n, double(b) / n, double(c) / n, double(d) / n);
  return out;
}

}  // namespace scalarflat
