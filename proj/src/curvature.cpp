#include "scalarflat/curvature.hpp"

#include "scalarflat/errors.hpp"

#include <cmath>
#include <string>

namespace scalarflat {

MatrixField::MatrixField(int rank, int resolution)
    : rank_(rank),
      resolution_(resolution),
      entries_(std::size_t(rank) * rank, ComplexGrid::Zero(resolution, resolution)) {
  if (rank < 1) throw InvalidInput("matrix field rank must be >= 1");
}

Eigen::MatrixXcd MatrixField::at(Eigen::Index ix, Eigen::Index iy) const {
  Eigen::MatrixXcd m(rank_, rank_);
  for (int a = 0; a < rank_; ++a)
    for (int b = 0; b < rank_; ++b) m(a, b) = (*this)(a, b)(ix, iy);
  return m;
}

MatrixField MatrixField::diagonal(const std::vector<RealGrid>& entries) {
  if (entries.empty()) throw InvalidInput("diagonal field needs at least one entry");
  MatrixField out(static_cast<int>(entries.size()), static_cast<int>(entries.front().rows()));
  for (int a = 0; a < out.rank(); ++a) {
    if (entries[a].rows() != out.resolution() || entries[a].cols() != out.resolution())
      throw InvalidInput("diagonal entries must share one grid");
    out(a, a) = entries[a].cast<cplx>();
  }
  return out;
}

MatrixField chern_curvature_matrix(const MatrixField& h, const PeriodicAxis& axis) {
  const int r = h.rank();
  const int n = h.resolution();
  if (axis.size() != n) throw InvalidInput("axis resolution differs from the bundle grid");

  MatrixField dh(r, n), dbarh(r, n), ddbarh(r, n);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      dh(a, b) = d_z(axis, h(a, b));
      dbarh(a, b) = d_zbar(axis, h(a, b));
      ddbarh(a, b) = d_z_zbar(axis, h(a, b));
    }

  MatrixField out(r, n);
  for (int iy = 0; iy < n; ++iy) {
    for (int ix = 0; ix < n; ++ix) {
      const Eigen::MatrixXcd hm = h.at(ix, iy);
      const double scale = hm.cwiseAbs().maxCoeff();
      if ((hm - hm.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw InvalidInput("metric is not Hermitian at grid point (" + std::to_string(ix) + ", " +
                           std::to_string(iy) + ")");
      Eigen::LLT<Eigen::MatrixXcd> llt(hm);
      if (llt.info() != Eigen::Success || !(llt.matrixL().toDenseMatrix().diagonal().real().array() > 0).all())
        throw InvalidInput("metric is not positive-definite at grid point (" + std::to_string(ix) +
                           ", " + std::to_string(iy) + ")");
      const Eigen::MatrixXcd r_pt =
          -ddbarh.at(ix, iy) + dh.at(ix, iy) * llt.solve(dbarh.at(ix, iy));
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) out(a, b)(ix, iy) = r_pt(a, b);
    }
  }
  return out;
}

LineBundleModel modify_potential(const LineBundleModel& base, const RealGrid& u,
                                 const PeriodicAxis& axis) {
  if (u.rows() != base.resolution() || u.cols() != base.resolution())
    throw InvalidInput("potential grid differs from the bundle grid");
  // -ddbar log(h e^{-u}) = kappa + ddbar u. Differentiating log h rather than
  // h keeps band-limited potentials band-limited, so the degree is preserved
  // to rounding.
  return LineBundleModel(base.degree(), base.kappa() + d_z_zbar(axis, u));
}

RealGrid tautological_base_curvature(const SplitBundle& e, const FiberSimplexPoint& s) {
  if (s.rank() != e.rank())
    throw InvalidInput("fiber point has " + std::to_string(s.rank()) + " weights, bundle rank is " +
                       std::to_string(e.rank()));
  const int n = e.curve().resolution();
  RealGrid out = RealGrid::Zero(n, n);
  for (int a = 0; a < e.rank(); ++a) out += s.weights()(a) * e.summands()[a].kappa();
  return out;
}

std::vector<double> default_s1_samples(int count) {
  if (count < 1) throw InvalidInput("need at least one fiber interval");
  std::vector<double> s(count + 1);
  for (int k = 0; k <= count; ++k) s[k] = double(k) / count;
  s.back() = 1.0;
  return s;
}

OneOneForm canonical_curvature_split(const SplitBundle& e, const LineBundleModel& gamma_k,
                                     std::span<const double> s1_samples) {
  const int rank = e.rank();
  if (rank < 2) throw InvalidInput("canonical curvature needs E = L + O^(n-1) with n >= 2");
  for (int a = 1; a < rank; ++a) {
    const auto& l = e.summands()[a];
    if (l.degree() != 0 || l.kappa().abs().maxCoeff() > 1e-12)
      throw InvalidInput("summand " + std::to_string(a) +
                         " must be the trivial bundle with the flat metric");
  }
  const int genus = e.curve().genus();
  if (gamma_k.degree() != 2 * genus - 2)
    throw DegreeError("K_C density has degree " + std::to_string(gamma_k.degree()) +
                      ", expected 2g - 2 = " + std::to_string(2 * genus - 2));
  if (gamma_k.resolution() != e.curve().resolution())
    throw InvalidInput("K_C density grid differs from the bundle grid");
  if (s1_samples.empty()) throw InvalidInput("need at least one fiber sample");

  const int n = e.curve().resolution();
  const RealGrid& kappa = e.summands()[0].kappa();
  const RealGrid& gamma = gamma_k.kappa();
  Eigen::MatrixXd base(Eigen::Index(n) * n, Eigen::Index(s1_samples.size()));
  std::vector<FiberSimplexPoint> samples;
  samples.reserve(s1_samples.size());
  for (std::size_t k = 0; k < s1_samples.size(); ++k) {
    samples.push_back(FiberSimplexPoint::leading(s1_samples[k], rank));
    const RealGrid col = (kappa + gamma) - double(rank) * kappa * s1_samples[k];
    base.col(Eigen::Index(k)) = Eigen::Map<const Eigen::VectorXd>(col.data(), col.size());
  }
  return OneOneForm(n, rank, std::move(base), std::move(samples), -double(rank));
}

}  // namespace scalarflat
