#include "scalarflat/metric4.hpp"

#include "scalarflat/errors.hpp"

#include <cmath>
#include <string>

namespace scalarflat {

TorusGrid4::TorusGrid4(int n, DiffMode mode)
    : axis_(n, mode), size_(Eigen::Index(n) * n * n * n) {}

double HermitianField2::max_abs() const {
  return std::max({a11.cwiseAbs().maxCoeff(), a22.cwiseAbs().maxCoeff(),
                   a12.cwiseAbs().maxCoeff()});
}

HermitianField2 complex_hessian(const TorusGrid4& grid, const Field4& f) {
  const Field4 fx1 = grid.d1(f, kX1);
  const Field4 fy1 = grid.d1(f, kY1);
  HermitianField2 h;
  h.a11 = 0.25 * (grid.d2(f, kX1) + grid.d2(f, kY1));
  h.a22 = 0.25 * (grid.d2(f, kX2) + grid.d2(f, kY2));
  const Field4 re = grid.d1(fx1, kX2) + grid.d1(fy1, kY2);
  const Field4 im = grid.d1(fx1, kY2) - grid.d1(fy1, kX2);
  h.a12.resize(f.size());
  h.a12.real() = 0.25 * re;
  h.a12.imag() = 0.25 * im;
  return h;
}

ComplexField4 mixed_derivative(const TorusGrid4& grid, const ComplexField4& f, int i, int j) {
  if (i < 0 || i > 1 || j < 0 || j > 1) throw InvalidInput("complex direction must be 0 or 1");
  const Eigen::MatrixXd& d1 = grid.axis().d1();
  const Eigen::MatrixXd& d2 = grid.axis().d2();
  const int xi = 2 * i, yi = 2 * i + 1, xj = 2 * j, yj = 2 * j + 1;
  const cplx iu(0.0, 1.0);
  if (i == j) return 0.25 * (grid.apply(d2, f, xi) + grid.apply(d2, f, yi));
  const ComplexField4 fxi = grid.apply(d1, f, xi);
  const ComplexField4 fyi = grid.apply(d1, f, yi);
  return 0.25 * (grid.apply(d1, fxi, xj) + grid.apply(d1, fyi, yj) +
                 iu * (grid.apply(d1, fxi, yj) - grid.apply(d1, fyi, xj)));
}

Field4 trace_product(const HermitianField2& m, const HermitianField2& b) {
  // m12 b21 + m21 b12 = 2 Re(m12 conj(b12))
  return m.a11.cwiseProduct(b.a11) + m.a22.cwiseProduct(b.a22) +
         2.0 * (m.a12.array() * b.a12.array().conjugate()).real().matrix();
}

MetricModel4T::MetricModel4T(TorusGrid4 grid, HermitianField2 g)
    : grid_(std::move(grid)), g_(std::move(g)) {
  const Eigen::Index n = grid_.size();
  if (g_.a11.size() != n || g_.a22.size() != n || g_.a12.size() != n)
    throw InvalidInput("metric components must have N^4 entries");
  if (!g_.a11.allFinite() || !g_.a22.allFinite() || !g_.a12.allFinite())
    throw InvalidInput("metric components must be finite");
  det_ = g_.a11.cwiseProduct(g_.a22) - g_.a12.cwiseAbs2();
  Eigen::Index bad;
  if (g_.a11.minCoeff(&bad) <= 0.0 || det_.minCoeff(&bad) <= 0.0)
    throw InvalidInput("metric is not positive-definite at grid index " + std::to_string(bad));
  inverse_.a11 = g_.a22.cwiseQuotient(det_);
  inverse_.a22 = g_.a11.cwiseQuotient(det_);
  inverse_.a12 = -(g_.a12.array() / det_.array().cast<cplx>()).matrix();
}

MetricModel4T MetricModel4T::flat(int n, DiffMode mode) {
  TorusGrid4 grid(n, mode);
  const Eigen::Index size = grid.size();
  return MetricModel4T(std::move(grid), {Field4::Ones(size), Field4::Ones(size),
                                         ComplexField4::Zero(size)});
}

MetricModel4T MetricModel4T::kahler(const TorusGrid4& grid, const Field4& phi) {
  if (phi.size() != grid.size()) throw InvalidInput("potential must have N^4 entries");
  HermitianField2 g = complex_hessian(grid, phi);
  g.a11.array() += 1.0;
  g.a22.array() += 1.0;
  return MetricModel4T(grid, std::move(g));
}

MetricModel4T MetricModel4T::conformally_flat(const TorusGrid4& grid, const Field4& u) {
  if (u.size() != grid.size()) throw InvalidInput("conformal factor must have N^4 entries");
  const Field4 e = u.array().exp();
  return MetricModel4T(grid, {e, e, ComplexField4::Zero(grid.size())});
}

MetricModel4T MetricModel4T::rescaled(const Field4& log_factor) const {
  if (log_factor.size() != grid_.size()) throw InvalidInput("conformal factor must have N^4 entries");
  const Field4 e = log_factor.array().exp();
  return MetricModel4T(grid_, {g_.a11.cwiseProduct(e), g_.a22.cwiseProduct(e),
                               (g_.a12.array() * e.array().cast<cplx>()).matrix()});
}

RicciField chern_ricci(const MetricModel4T& metric) {
  const Field4 log_det = metric.det().array().log();
  return {complex_hessian(metric.grid(), log_det) * -1.0};
}

Field4 chern_scalar(const MetricModel4T& metric, const RicciField& ric) {
  if (ric.ric.size() != metric.grid().size()) throw InvalidInput("Ricci field grid mismatch");
  return trace_product(metric.inverse(), ric.ric);
}

Field4 chern_scalar(const MetricModel4T& metric) { return chern_scalar(metric, chern_ricci(metric)); }

TotalScalar total_scalar_report(const MetricModel4T& metric, double cross_check_tol) {
  const RicciField ric = chern_ricci(metric);
  const Field4 s = chern_scalar(metric, ric);
  const HermitianField2& g = metric.g();
  const HermitianField2& r = ric.ric;
  const double cell = metric.grid().cell_volume();

  TotalScalar out;
  // omega^2 = 2 det g (i dz1 ^ dz1bar) ^ (i dz2 ^ dz2bar) = 8 det g dV
  out.integral = 8.0 * s.cwiseProduct(metric.det()).sum() * cell;
  // alpha ^ beta coefficient: a11 b22 + a22 b11 - a12 b21 - a21 b12
  const Field4 wedge = r.a11.cwiseProduct(g.a22) + r.a22.cwiseProduct(g.a11) -
                       2.0 * (r.a12.array() * g.a12.array().conjugate()).real().matrix();
  out.wedge_integral = 2.0 * 4.0 * wedge.sum() * cell;
  out.cross_check_residual = std::abs(out.integral - out.wedge_integral);
  if (!(out.cross_check_residual <= cross_check_tol))
    throw NumericalInconsistency("total scalar curvature routes disagree by " +
                                 std::to_string(out.cross_check_residual));
  return out;
}

double total_scalar(const MetricModel4T& metric) { return total_scalar_report(metric).integral; }

RicciField conformal_ricci(const RicciField& ric, const TorusGrid4& grid, const Field4& f, int n) {
  if (f.size() != grid.size() || ric.ric.size() != grid.size())
    throw InvalidInput("conformal factor grid mismatch");
  return {ric.ric - complex_hessian(grid, f) * double(n)};
}

}  // namespace scalarflat
