#pragma once

// Chern curvature of Hermitian bundles over a curve chart and of the
// tautological / canonical bundles on split projective bundles.

#include "scalarflat/geom_core.hpp"

#include <span>
#include <vector>

namespace scalarflat {

/// r x r field of complex matrices on a curve grid; entry (a, b) holds
/// h_{a bbar}.
class MatrixField {
 public:
  MatrixField(int rank, int resolution);

  int rank() const { return rank_; }
  int resolution() const { return resolution_; }
  ComplexGrid& operator()(int a, int b) { return entries_[a * rank_ + b]; }
  const ComplexGrid& operator()(int a, int b) const { return entries_[a * rank_ + b]; }
  Eigen::MatrixXcd at(Eigen::Index ix, Eigen::Index iy) const;

  static MatrixField diagonal(const std::vector<RealGrid>& entries);

 private:
  int rank_;
  int resolution_;
  std::vector<ComplexGrid> entries_;
};

/// R_{z zbar a bbar} = -d_z d_zbar h_{a bbar} + h^{c dbar} d_z h_{a dbar} d_zbar h_{c bbar},
/// i.e. R = -ddbar H + (dH) H^{-1} (dbar H) pointwise. Entries carry lowered
/// indices; for a line bundle the curvature density is R / h.
/// Throws InvalidInput if h fails to be Hermitian positive-definite anywhere.
MatrixField chern_curvature_matrix(const MatrixField& h, const PeriodicAxis& axis);

/// Curvature density of the metric h * exp(-u) on a line bundle whose
/// reference metric h has density base.kappa(): kappa + ddbar u.
LineBundleModel modify_potential(const LineBundleModel& base, const RealGrid& u,
                                 const PeriodicAxis& axis);

/// Base-base part of the curvature of O_E(1) at fiber point s for diagonal E:
/// sum_a kappa_a * s_a. The fiber part is 1 * omega_FS.
RealGrid tautological_base_curvature(const SplitBundle& e, const FiberSimplexPoint& s);

/// s1 in {0, 1/count, ..., 1}.
std::vector<double> default_s1_samples(int count = 64);

/// Curvature of K_X on X = P(E*) for E = L + O^(n-1) via the projection
/// formula K_X = O_E(-n) (x) pi^*(K_C (x) det E):
///   base  = (kappa + gamma) - n * kappa * s1,   fiber = -n * omega_FS.
/// gamma_k is the density chosen on K_C and must have degree 2g - 2.
OneOneForm canonical_curvature_split(const SplitBundle& e, const LineBundleModel& gamma_k,
                                     std::span<const double> s1_samples);

}  // namespace scalarflat
