#include "scalarflat/geom_core.hpp"

#include "scalarflat/errors.hpp"
#include "scalarflat/tolerances.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace scalarflat {

namespace {

void require_square(const RealGrid& f, int n, const char* what) {
  if (f.rows() != n || f.cols() != n)
    throw InvalidInput(std::string(what) + ": expected " + std::to_string(n) + "x" +
                       std::to_string(n) + " grid, got " + std::to_string(f.rows()) + "x" +
                       std::to_string(f.cols()));
}

double degree_integral(const RealGrid& kappa) {
  const double n = double(kappa.rows());
  return kappa.sum() / (n * n) / std::numbers::pi;
}

}  // namespace

CurveModel::CurveModel(int genus, RealGrid lambda) : genus_(genus), lambda_(std::move(lambda)) {
  if (genus_ < 0) throw InvalidInput("genus must be >= 0");
  if (lambda_.rows() != lambda_.cols()) throw InvalidInput("curve grid must be square");
  PeriodicAxis check(static_cast<int>(lambda_.rows()));  // validates N
  if (!(lambda_ > 0.0).all() || !lambda_.isFinite().all())
    throw InvalidInput("fiducial area density must be positive and finite");
}

CurveModel CurveModel::uniform(int genus, int resolution) {
  if (resolution < 8 || resolution % 2 != 0)
    throw InvalidInput("grid resolution must be even and >= 8, got " + std::to_string(resolution));
  return CurveModel(genus, RealGrid::Ones(resolution, resolution));
}

double integrate(const RealGrid& field, const CurveModel& curve, bool weighted) {
  require_square(field, curve.resolution(), "integrate");
  if (weighted) return (field * curve.lambda()).sum() * curve.cell_area();
  return field.sum() * curve.cell_area();
}

LineBundleModel::LineBundleModel(int degree, RealGrid kappa)
    : degree_(degree), kappa_(std::move(kappa)) {
  if (kappa_.rows() != kappa_.cols() || kappa_.rows() < 8)
    throw InvalidInput("curvature density must live on a square curve grid");
  if (!kappa_.isFinite().all()) throw InvalidInput("curvature density must be finite");
  const double d = degree_integral(kappa_);
  if (std::abs(d - degree_) > tol::kDegreeQuantization)
    throw DegreeError("curvature integrates to degree " + std::to_string(d) + ", declared " +
                      std::to_string(degree_));
}

LineBundleModel make_line_bundle(int degree, const CurvatureProfile& profile,
                                 const CurveModel& curve) {
  const int n = curve.resolution();
  if (std::holds_alternative<ConstantProfile>(profile))
    return LineBundleModel(degree, RealGrid::Constant(n, n, std::numbers::pi * degree));

  const RealGrid& field = std::get<RealGrid>(profile);
  require_square(field, n, "make_line_bundle");
  const double integral = integrate(field, curve);
  const double defect = std::numbers::pi * degree - integral;
  if (std::abs(defect) > tol::kDegreeInput)
    throw DegreeError("supplied curvature integrates to " + std::to_string(integral) +
                      ", expected pi * " + std::to_string(degree));
  return LineBundleModel(degree, field + defect);
}

LineBundleModel tensor(const LineBundleModel& a, const LineBundleModel& b) {
  if (a.resolution() != b.resolution()) throw InvalidInput("tensor: grids differ");
  return LineBundleModel(a.degree() + b.degree(), a.kappa() + b.kappa());
}

LineBundleModel dual(const LineBundleModel& l) { return LineBundleModel(-l.degree(), -l.kappa()); }

SplitBundle::SplitBundle(CurveModel curve, std::vector<LineBundleModel> summands)
    : curve_(std::move(curve)), summands_(std::move(summands)) {
  if (summands_.empty()) throw InvalidInput("split bundle needs rank >= 1");
  for (const auto& l : summands_)
    if (l.resolution() != curve_.resolution())
      throw InvalidInput("all summands must share the curve grid");
}

int SplitBundle::total_degree() const {
  int d = 0;
  for (const auto& l : summands_) d += l.degree();
  return d;
}

FiberSimplexPoint::FiberSimplexPoint(Eigen::VectorXd weights) : weights_(std::move(weights)) {
  if (weights_.size() < 1) throw InvalidInput("fiber point needs at least one weight");
  if ((weights_.array() < 0.0).any() || !weights_.allFinite())
    throw InvalidInput("fiber weights must be nonnegative");
  if (std::abs(weights_.sum() - 1.0) > tol::kSimplexSum)
    throw InvalidInput("fiber weights must sum to 1");
}

FiberSimplexPoint FiberSimplexPoint::leading(double s1, int rank) {
  if (rank < 1) throw InvalidInput("rank must be >= 1");
  if (rank == 1) {
    if (s1 != 1.0) throw InvalidInput("rank-one fiber point must be s = (1)");
    return FiberSimplexPoint(Eigen::VectorXd::Ones(1));
  }
  if (!(s1 >= 0.0 && s1 <= 1.0)) throw InvalidInput("s1 must lie in [0, 1]");
  Eigen::VectorXd w = Eigen::VectorXd::Constant(rank, (1.0 - s1) / (rank - 1));
  w(0) = s1;
  return FiberSimplexPoint(std::move(w));
}

OneOneForm::OneOneForm(int resolution, int rank, Eigen::MatrixXd base_component,
                       std::vector<FiberSimplexPoint> fiber_samples, double fs_multiple)
    : resolution_(resolution),
      rank_(rank),
      base_(std::move(base_component)),
      samples_(std::move(fiber_samples)),
      fs_multiple_(fs_multiple) {
  if (base_.rows() != Eigen::Index(resolution_) * resolution_)
    throw InvalidInput("base component rows must equal the number of curve points");
  if (base_.cols() != Eigen::Index(samples_.size()))
    throw InvalidInput("base component needs one column per fiber sample");
  for (const auto& s : samples_)
    if (s.rank() != rank_) throw InvalidInput("fiber sample rank mismatch");
  if (!base_.allFinite() || !std::isfinite(fs_multiple_))
    throw InvalidInput("(1,1)-form entries must be finite");
}

RealGrid OneOneForm::base_at(int sample) const {
  return Eigen::Map<const RealGrid>(base_.col(sample).data(), resolution_, resolution_);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(KahlerVerdict v) {
  switch (v) {
    case KahlerVerdict::Yes: return "yes";
    case KahlerVerdict::No: return "no";
    case KahlerVerdict::Unknown: return "unknown";
    case KahlerVerdict::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

std::string to_string(TotalScalarImage v) {
  switch (v) {
    case TotalScalarImage::AllReals: return "AllReals";
    case TotalScalarImage::PositiveReals: return "PositiveReals";
    case TotalScalarImage::NegativeReals: return "NegativeReals";
    case TotalScalarImage::ZeroOnly: return "ZeroOnly";
    case TotalScalarImage::Unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace scalarflat
