#include "scalarflat/pde.hpp"

#include "scalarflat/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace scalarflat {

RealGrid poisson_periodic(const RealGrid& rho) {
  if (rho.rows() != rho.cols()) throw InvalidInput("poisson_periodic: grid must be square");
  const int n = static_cast<int>(rho.rows());
  const PeriodicAxis axis(n);
  const double mean = rho.mean();
  if (std::abs(mean) > tol::kPoissonMean)
    throw SolvabilityError("poisson_periodic: source has mean " + std::to_string(mean) +
                           ", the periodic Laplacian needs zero mean");
  const Eigen::MatrixXd& q = axis.basis();
  const Eigen::VectorXd& lam = axis.d2_eigenvalues();
  Eigen::MatrixXd modal = q.transpose() * (rho - mean).matrix() * q;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const double symbol = lam(i) + lam(j);
      modal(i, j) = (i == 0 && j == 0) ? 0.0 : modal(i, j) / symbol;
    }
  return (q * modal * q.transpose()).array();
}

RealGrid prescribe_curvature(const RealGrid& target, const LineBundleModel& current) {
  const int n = current.resolution();
  if (target.rows() != n || target.cols() != n)
    throw InvalidInput("prescribe_curvature: target grid differs from the bundle grid");
  const RealGrid diff = target - current.kappa();
  const double degree_gap = diff.mean() / std::numbers::pi;
  if (std::abs(degree_gap) > tol::kDegreeInput)
    throw DegreeError("prescribe_curvature: target and current differ in degree by " +
                      std::to_string(degree_gap));
  // d_z d_zbar u = (1/4) Laplacian u
  return poisson_periodic(4.0 * (diff - diff.mean()));
}

GauduchonCheck is_gauduchon(const MetricModel4T& metric, double tolerance) {
  const TorusGrid4& grid = metric.grid();
  const HermitianField2& g = metric.g();
  const Field4 c = 0.25 * (grid.d2(g.a22, kX1) + grid.d2(g.a22, kY1)) +
                   0.25 * (grid.d2(g.a11, kX2) + grid.d2(g.a11, kY2)) -
                   2.0 * mixed_derivative(grid, g.a12, 1, 0).real();
  GauduchonCheck out;
  out.residual = c.cwiseAbs().maxCoeff();
  out.gauduchon = out.residual < tolerance;
  return out;
}

Field4 trace_ddbar(const MetricModel4T& metric, const Field4& f) {
  return trace_product(metric.inverse(), complex_hessian(metric.grid(), f));
}

namespace {

// Inverse of f -> c1 d1 d1bar f + c2 d2 d2bar f with c_i the averaged
// diagonal of g^{-1}; constants map to zero.
class ConstantCoefficientInverse {
 public:
  explicit ConstantCoefficientInverse(const MetricModel4T& metric) : grid_(metric.grid()) {
    const double c1 = metric.inverse().a11.mean();
    const double c2 = metric.inverse().a22.mean();
    const Eigen::VectorXd& lam = grid_.axis().d2_eigenvalues();
    const int n = grid_.resolution();
    inverse_symbol_.resize(grid_.size());
    Eigen::Index idx = 0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d) {
            const double symbol = 0.25 * (c1 * (lam(a) + lam(b)) + c2 * (lam(c) + lam(d)));
            inverse_symbol_(idx) = idx == 0 ? 0.0 : 1.0 / symbol;
            ++idx;
          }
  }

  Field4 operator()(const Field4& r) const {
    const Eigen::MatrixXd& q = grid_.axis().basis();
    const Eigen::MatrixXd qt = q.transpose();
    Field4 w = r;
    for (int ax = 0; ax < 4; ++ax) w = grid_.apply_linear(qt, w, ax);
    w.array() *= inverse_symbol_.array();
    for (int ax = 0; ax < 4; ++ax) w = grid_.apply_linear(q, w, ax);
    return w;
  }

 private:
  TorusGrid4 grid_;
  Field4 inverse_symbol_;
};

double relative_residual(const Field4& r, double scale) { return r.cwiseAbs().maxCoeff() / scale; }

}  // namespace

ConformalSolution conformal_scalar_flat(const MetricModel4T& metric, const ConformalOptions& options) {
  if (options.n != 2)
    throw InvalidInput("the conformal solver works in complex dimension 2 only");
  if (options.enforce_gauduchon) {
    const GauduchonCheck gc = is_gauduchon(metric, options.gauduchon_tolerance);
    if (!gc.gauduchon)
      throw InvalidInput("conformal_scalar_flat: metric is not Gauduchon (residual " +
                         std::to_string(gc.residual) + ")");
  }
  const TotalScalar total = total_scalar_report(metric);
  if (std::abs(total.integral) >= options.total_scalar_tolerance)
    throw SolvabilityError("conformal_scalar_flat: total scalar curvature is " +
                           std::to_string(total.integral) + ", must vanish");

  ConformalSolution sol;
  sol.total_scalar_in = total.integral;
  const TorusGrid4& grid = metric.grid();
  const Field4 s_g = chern_scalar(metric);
  const double scale = std::max(s_g.cwiseAbs().maxCoeff(), 1e-300);
  sol.f = Field4::Zero(grid.size());

  const double s_max = s_g.cwiseAbs().maxCoeff();
  if (s_max == 0.0) {
    sol.residual = chern_scalar(metric.rescaled(sol.f / options.n)).cwiseAbs().maxCoeff();
    return sol;
  }

  const ConstantCoefficientInverse precond(metric);
  auto op = [&](const Field4& f) { return trace_ddbar(metric, f); };

  // s(e^{f/n} omega_G) = e^{-f/n} (s_G - L f) holds exactly on the grid, so
  // the scalar curvature of the rescaled metric is read off the weighted residual.
  auto weighted = [&](const Field4& r, const Field4& x) {
    const Field4 w = (-(x.array() - x.mean()) / options.n).exp();
    return (w.array() * r.array()).abs().maxCoeff();
  };
  auto reached = [&](double rel, double w) {
    return rel <= options.tolerance && w <= options.residual_target;
  };
  auto acceptable = [&](double rel, double w) {
    return rel <= options.tolerance && w <= 0.5 * options.end_to_end_tolerance;
  };

  // Right-preconditioned BiCGSTAB on L M^{-1} y = s_G, f = M^{-1} y, restarted
  // from the true residual every kRestart steps. Stops at residual_target, or
  // once restarts stop improving an acceptable iterate (rounding floor).
  constexpr int kRestart = 40;
  Field4& x = sol.f;
  Field4 r = s_g;
  int it = 0;
  double res = relative_residual(r, scale);
  double res_weighted = weighted(r, x);
  int stalled = 0;
  while (!reached(res, res_weighted) && it < options.max_iterations) {
    const Field4 r_hat = r;
    double rho = 1.0, alpha = 1.0, omega = 1.0;
    Field4 v = Field4::Zero(grid.size());
    Field4 p = Field4::Zero(grid.size());
    for (int inner = 0; inner < kRestart && it < options.max_iterations; ++inner) {
      ++it;
      const double rho_new = r_hat.dot(r);
      if (rho_new == 0.0 || omega == 0.0) break;
      const double beta = (rho_new / rho) * (alpha / omega);
      rho = rho_new;
      p = r + beta * (p - omega * v);
      const Field4 p_hat = precond(p);
      v = op(p_hat);
      alpha = rho / r_hat.dot(v);
      const Field4 s = r - alpha * v;
      if (relative_residual(s, scale) <= options.tolerance) {
        const Field4 x_half = x + alpha * p_hat;
        if (weighted(s, x_half) <= options.residual_target) {
          x = x_half;
          break;
        }
      }
      const Field4 s_hat = precond(s);
      const Field4 t = op(s_hat);
      const double tt = t.squaredNorm();
      omega = tt > 0.0 ? t.dot(s) / tt : 0.0;
      x += alpha * p_hat + omega * s_hat;
      r = s - omega * t;
      if (reached(relative_residual(r, scale), weighted(r, x))) break;
    }
    x.array() -= x.mean();
    r = s_g - op(x);
    const double previous = res_weighted;
    res = relative_residual(r, scale);
    res_weighted = weighted(r, x);
    stalled = res_weighted > 0.5 * previous ? stalled + 1 : 0;
    if (stalled >= 2 && acceptable(res, res_weighted)) break;
    if (stalled >= 4) break;
  }
  sol.iterations = it;
  sol.solve_residual = res;
  if (!acceptable(res, res_weighted))
    throw ConvergenceError("conformal_scalar_flat: relative residual " + std::to_string(res) + ", weighted " +
                           std::to_string(res_weighted) + " after " +
                           std::to_string(it) + " iterations");

  sol.residual = chern_scalar(metric.rescaled(x / options.n)).cwiseAbs().maxCoeff();
  if (!(sol.residual < options.end_to_end_tolerance))
    throw NumericalInconsistency("conformal_scalar_flat: rescaled metric has max |s| = " +
                                 std::to_string(sol.residual));
  return sol;
}

double conformal_scalar_identity_residual(const MetricModel4T& metric, const Field4& f, int n) {
  const Field4 s_new = chern_scalar(metric.rescaled(f / n));
  const Field4 predicted = (-f / n).array().exp() * (chern_scalar(metric) - trace_ddbar(metric, f)).array();
  return (s_new - predicted).cwiseAbs().maxCoeff();
}

double conformal_total_scalar_identity_check(const MetricModel4T& metric, const Field4& f, int n) {
  if (n != 2) throw InvalidInput("identity check is implemented for complex dimension 2");
  const MetricModel4T rescaled = metric.rescaled(f);
  const GauduchonCheck gc = is_gauduchon(rescaled);
  if (!gc.gauduchon)
    throw InvalidInput("e^f omega is not Gauduchon (residual " + std::to_string(gc.residual) + ")");
  const double lhs = total_scalar_report(rescaled).wedge_integral;
  const Field4 s = chern_scalar(metric);
  const Field4 weight = (double(n - 1) * f).array().exp();
  const double rhs =
      8.0 * (weight.array() * s.array() * metric.det().array()).sum() * metric.grid().cell_volume();
  return std::abs(lhs - rhs);
}

}  // namespace scalarflat
