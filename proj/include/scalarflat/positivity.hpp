#pragma once

// RC-positivity certificates. A scan can certify positivity for one metric
// choice; it never refutes it. Negative statements belong to the classifier.

#include "scalarflat/curvature.hpp"
#include "scalarflat/tolerances.hpp"

#include <optional>
#include <string>

namespace scalarflat {

struct ScanWitness {
  Eigen::Index point = 0;  // ix + N * iy
  int ix = 0;
  int iy = 0;
  int sample = 0;
  double s1 = 0.0;  // leading fiber weight of the sample
};

struct RCReport {
  double min_max_eigenvalue = 0.0;
  ScanWitness witness;
  bool rc_positive = false;
  double tolerance = tol::kRcPositive;
};

/// Minimum over all (curve point, fiber sample) of the largest eigenvalue of
/// the form against lambda sqrt(-1) dz ^ dzbar (+) omega_FS. For a block form
/// those eigenvalues are base / lambda and fs_multiple (multiplicity r - 1).
/// Samples are visited in storage order; the witness is the first minimizer.
RCReport rc_scan(const OneOneForm& form, const CurveModel& reference,
                 double tolerance = tol::kRcPositive);

enum class CertificateStrategy { Constant, Prescribed };

struct Certificate {
  int genus = 0;
  int deg_l = 0;
  int n = 0;
  CertificateStrategy strategy = CertificateStrategy::Constant;
  RealGrid kappa;
  RealGrid gamma;
  double margin = 0.0;  // min over the grid of gamma - (n - 1) kappa
  RCReport scan;        // rc_scan of the assembled K_X curvature
};

struct CertificateOutcome {
  std::optional<Certificate> certificate;
  double margin = 0.0;
  std::string failure;  // empty on success
  std::optional<ScanWitness> witness;

  bool issued() const { return certificate.has_value(); }
};

struct PrescribedDensities {
  CurveModel curve;
  RealGrid kappa;  // density on L, integral pi * deg L
  RealGrid gamma;  // density on K_C, integral pi * (2g - 2)
};

/// Constant strategy: kappa = pi deg L, gamma = pi (2g - 2), so the margin is
/// pi (2g - 2 - (n - 1) deg L); a certificate is issued iff it is positive.
/// Throws InvalidInput for g < 2, deg L < 0 or n < 2.
CertificateOutcome kx_certificate_split(int genus, int deg_l, int n,
                                        int resolution = kDefaultResolution,
                                        double tolerance = tol::kRcPositive);

/// Prescribed strategy: user densities (projected onto the exact degree,
/// DegreeError if they are off by more than 1e-6) re-verified pointwise.
CertificateOutcome kx_certificate_split(int genus, int deg_l, int n,
                                        const PrescribedDensities& densities,
                                        double tolerance = tol::kRcPositive);

/// Recomputes min(gamma - (n - 1) kappa) from a certificate's stored fields.
double recompute_margin(const Certificate& c);

struct ProjectiveBundleDescriptor {
  bool is_projective_bundle = true;
  int genus = 0;
};

struct AntiCanonicalFlag {
  bool rc_positive = false;
  std::string provenance;
};

/// Projective bundles over curves are uniruled, hence K_X^{-1} is RC-positive.
AntiCanonicalFlag anti_kx_rc_flag(const ProjectiveBundleDescriptor& model);

}  // namespace scalarflat
