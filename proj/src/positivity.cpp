#include "scalarflat/positivity.hpp"

#include "scalarflat/errors.hpp"

#include <limits>
#include <numbers>
#include <string>

namespace scalarflat {

RCReport rc_scan(const OneOneForm& form, const CurveModel& reference, double tolerance) {
  if (form.fiber_samples().empty() || form.base_component().rows() == 0)
    throw InvalidInput("rc_scan: empty sample set");
  if (reference.resolution() != form.resolution())
    throw InvalidInput("rc_scan: reference grid differs from the form's grid");

  const int n = form.resolution();
  const Eigen::Map<const Eigen::VectorXd> lambda(reference.lambda().data(), reference.lambda().size());
  const bool has_fiber = form.rank() > 1;

  RCReport report;
  report.tolerance = tolerance;
  report.min_max_eigenvalue = std::numeric_limits<double>::infinity();
  for (int k = 0; k < int(form.fiber_samples().size()); ++k) {
    for (Eigen::Index p = 0; p < form.base_component().rows(); ++p) {
      double top = form.base_component()(p, k) / lambda(p);
      if (has_fiber) top = std::max(top, form.fs_multiple());
      if (top < report.min_max_eigenvalue) {
        report.min_max_eigenvalue = top;
        report.witness = {p, int(p % n), int(p / n), k, form.fiber_samples()[k].weights()(0)};
      }
    }
  }
  report.rc_positive = report.min_max_eigenvalue > tolerance;
  return report;
}

namespace {

void check_preconditions(int genus, int deg_l, int n) {
  if (genus < 2) throw InvalidInput("K_X certificate needs genus >= 2, got " + std::to_string(genus));
  if (deg_l < 0) throw InvalidInput("K_X certificate needs deg L >= 0, got " + std::to_string(deg_l));
  if (n < 2) throw InvalidInput("K_X certificate needs n >= 2, got " + std::to_string(n));
}

CertificateOutcome assemble(int genus, int deg_l, int n, CertificateStrategy strategy,
                            const CurveModel& curve, LineBundleModel l, LineBundleModel k_c,
                            double tolerance) {
  CertificateOutcome out;
  const RealGrid margin_field = k_c.kappa() - double(n - 1) * l.kappa();
  Eigen::Index mi, mj;
  out.margin = margin_field.minCoeff(&mi, &mj);

  std::vector<LineBundleModel> summands{l};
  for (int a = 1; a < n; ++a) summands.push_back(make_line_bundle(0, ConstantProfile{}, curve));
  const SplitBundle e(curve, std::move(summands));
  const std::vector<double> s1 = default_s1_samples();
  const RCReport scan = rc_scan(canonical_curvature_split(e, k_c, s1), curve, tolerance);

  if (!(out.margin > 0.0)) {
    out.failure = "gamma - (n - 1) kappa is not positive: margin " + std::to_string(out.margin);
    out.witness = ScanWitness{mi + curve.resolution() * mj, int(mi), int(mj),
                              static_cast<int>(s1.size()) - 1, 1.0};
    return out;
  }
  if (!scan.rc_positive) {
    out.failure = "assembled K_X curvature has no positive eigenvalue at the witness: " +
                  std::to_string(scan.min_max_eigenvalue);
    out.witness = scan.witness;
    return out;
  }
  out.certificate = Certificate{genus, deg_l, n, strategy, l.kappa(), k_c.kappa(), out.margin, scan};
  return out;
}

}  // namespace

CertificateOutcome kx_certificate_split(int genus, int deg_l, int n, int resolution,
                                        double tolerance) {
  check_preconditions(genus, deg_l, n);
  const CurveModel curve = CurveModel::uniform(genus, resolution);
  CertificateOutcome out = assemble(genus, deg_l, n, CertificateStrategy::Constant, curve,
                                    make_line_bundle(deg_l, ConstantProfile{}, curve),
                                    make_line_bundle(2 * genus - 2, ConstantProfile{}, curve),
                                    tolerance);
  // The constant-density margin is known in closed form; report it exactly.
  out.margin = std::numbers::pi * double(2 * genus - 2 - (n - 1) * deg_l);
  if (out.certificate) out.certificate->margin = out.margin;
  return out;
}

CertificateOutcome kx_certificate_split(int genus, int deg_l, int n,
                                        const PrescribedDensities& densities, double tolerance) {
  check_preconditions(genus, deg_l, n);
  if (densities.curve.genus() != genus)
    throw InvalidInput("prescribed densities live on a curve of a different genus");
  return assemble(genus, deg_l, n, CertificateStrategy::Prescribed, densities.curve,
                  make_line_bundle(deg_l, densities.kappa, densities.curve),
                  make_line_bundle(2 * genus - 2, densities.gamma, densities.curve), tolerance);
}

double recompute_margin(const Certificate& c) {
  return (c.gamma - double(c.n - 1) * c.kappa).minCoeff();
}

AntiCanonicalFlag anti_kx_rc_flag(const ProjectiveBundleDescriptor& model) {
  if (!model.is_projective_bundle)
    throw InvalidInput("anti-canonical flag is only defined for projective-bundle models");
  if (model.genus < 0) throw InvalidInput("genus must be >= 0");
  return {true, "projective bundles over curves are uniruled, and uniruled => K_X^{-1} RC-positive"};
}

}  // namespace scalarflat
