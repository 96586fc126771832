#pragma once

// Domain types shared by every module.
//
// Modeling convention. The analytic chart of a base curve is always the
// periodic unit square (torus topology), whatever genus the curve declares.
// Genus only enters through required integrals, e.g. a metric on K_C must
// have curvature integrating to pi (2g - 2). Every positivity formula used
// here depends on curvature densities and their integrals alone, never on
// an embedding of a genus-g curve, so this decoupling loses nothing.
//
// Degree convention: a curvature form R = kappa * sqrt(-1) dz ^ dzbar has
// degree (1/2pi) int R = (1/pi) int kappa dx dy, because
// sqrt(-1) dz ^ dzbar = 2 dx ^ dy. A constant density kappa = pi carries
// degree one.

#include "scalarflat/spectral.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace scalarflat {

inline constexpr int kDefaultResolution = 64;

class CurveModel {
 public:
  CurveModel(int genus, RealGrid lambda);
  // lambda == 1 everywhere.
  static CurveModel uniform(int genus, int resolution = kDefaultResolution);

  int genus() const { return genus_; }
  int resolution() const { return static_cast<int>(lambda_.rows()); }
  const RealGrid& lambda() const { return lambda_; }
  double cell_area() const { return 1.0 / (double(resolution()) * resolution()); }

 private:
  int genus_;
  RealGrid lambda_;
};

/// Sum of field * cell area, optionally weighted by the fiducial density.
double integrate(const RealGrid& field, const CurveModel& curve, bool weighted = false);

class LineBundleModel {
 public:
  // Rejects kappa whose degree integral is off by more than the quantization
  // tolerance.
  LineBundleModel(int degree, RealGrid kappa);

  int degree() const { return degree_; }
  const RealGrid& kappa() const { return kappa_; }
  int resolution() const { return static_cast<int>(kappa_.rows()); }

 private:
  int degree_;
  RealGrid kappa_;
};

struct ConstantProfile {};
using CurvatureProfile = std::variant<ConstantProfile, RealGrid>;

/// Constant profile: kappa = pi * degree. A supplied field must already
/// integrate to pi * degree within 1e-6; the remaining defect is removed by
/// adding a constant.
LineBundleModel make_line_bundle(int degree, const CurvatureProfile& profile,
                                 const CurveModel& curve);

LineBundleModel tensor(const LineBundleModel& a, const LineBundleModel& b);
LineBundleModel dual(const LineBundleModel& l);

/// E = L_1 + ... + L_r with the diagonal Hermitian structure.
class SplitBundle {
 public:
  SplitBundle(CurveModel curve, std::vector<LineBundleModel> summands);

  const CurveModel& curve() const { return curve_; }
  const std::vector<LineBundleModel>& summands() const { return summands_; }
  int rank() const { return static_cast<int>(summands_.size()); }
  int total_degree() const;

 private:
  CurveModel curve_;
  std::vector<LineBundleModel> summands_;
};

/// Point of the fiber, recorded by s_a = |a_a|^2 / |a|^2.
class FiberSimplexPoint {
 public:
  explicit FiberSimplexPoint(Eigen::VectorXd weights);
  // (s1, (1 - s1)/(r - 1), ...): the weight profile seen by L + O^(r-1).
  static FiberSimplexPoint leading(double s1, int rank);

  const Eigen::VectorXd& weights() const { return weights_; }
  int rank() const { return static_cast<int>(weights_.size()); }

 private:
  Eigen::VectorXd weights_;
};

/// Block-diagonal (1,1)-form on the total space of a split projective bundle:
/// base_component(p, k) * sqrt(-1) dz ^ dzbar at curve point p and fiber
/// sample k, plus fs_multiple * omega_FS along the fiber. Cross terms vanish.
class OneOneForm {
 public:
  OneOneForm(int resolution, int rank, Eigen::MatrixXd base_component,
             std::vector<FiberSimplexPoint> fiber_samples, double fs_multiple);

  int resolution() const { return resolution_; }
  int rank() const { return rank_; }
  // Rows: curve points in column-major grid order (ix + N * iy).
  const Eigen::MatrixXd& base_component() const { return base_; }
  const std::vector<FiberSimplexPoint>& fiber_samples() const { return samples_; }
  double fs_multiple() const { return fs_multiple_; }

  RealGrid base_at(int sample) const;

 private:
  int resolution_;
  int rank_;
  Eigen::MatrixXd base_;
  std::vector<FiberSimplexPoint> samples_;
  double fs_multiple_;
};

enum class Verdict { Yes, No, Unknown };
enum class KahlerVerdict { Yes, No, Unknown, NotApplicable };
enum class TotalScalarImage { AllReals, PositiveReals, NegativeReals, ZeroOnly, Unknown };

std::string to_string(Verdict v);
std::string to_string(KahlerVerdict v);
std::string to_string(TotalScalarImage v);

struct Attachment {
  std::string kind;  // "margin", "section_count", "witness", ...
  double value = 0.0;
  std::string note;

  bool operator==(const Attachment&) const = default;
};

struct ClassificationReport {
  Verdict scalar_flat_hermitian = Verdict::Unknown;
  KahlerVerdict scalar_flat_kahler = KahlerVerdict::Unknown;
  TotalScalarImage total_scalar_image = TotalScalarImage::Unknown;
  std::string fired_case;
  std::string reason;
  std::optional<Attachment> certificate;

  bool operator==(const ClassificationReport&) const = default;
};

}  // namespace scalarflat
