#include "scalarflat/classifier.hpp"

#include "scalarflat/errors.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numbers>
#include <string>

namespace scalarflat {

int m_split_rank2(int deg_l) { return -std::abs(deg_l); }

void validate_m(int m, int genus) {
  if (genus < 0) throw InvalidInput("genus must be >= 0");
  if (m > genus)
    throw NagataViolation("NagataViolation: m = " + std::to_string(m) + " exceeds genus " +
                          std::to_string(genus) + " (m(E) <= g)");
}

bool is_stable_rank2(int m) { return m > 0; }

int RuledSurfaceDescriptor::resolved_m() const {
  if (n != 2) throw InvalidInput("ruled surfaces have n = 2");
  if (m && split_deg && *m != m_split_rank2(*split_deg))
    throw InvalidInput("descriptor gives m = " + std::to_string(*m) + " but split degree " +
                       std::to_string(*split_deg) + " forces m = " +
                       std::to_string(m_split_rank2(*split_deg)));
  if (m) return *m;
  if (split_deg) return m_split_rank2(*split_deg);
  throw InvalidInput("descriptor needs m or split_deg");
}

ClassificationReport classify_ruled(int genus, int m) {
  validate_m(m, genus);
  ClassificationReport r;
  if (genus == 0) {
    // Hirzebruch surface with invariant k = -m >= 0.
    const int k = -m;
    r.scalar_flat_hermitian = Verdict::No;
    r.fired_case = "Hirzebruch";
    r.reason = "base P^1: K_X^{-1} is effective (h^0 = " +
               std::to_string(hirzebruch_anticanonical_h0(k)) +
               "), so K_X is not RC-positive";
    r.certificate = Attachment{"section_count", double(hirzebruch_anticanonical_h0(k)),
                               "h^0(X, K_X^{-1}) for k = " + std::to_string(k)};
  } else if (genus == 1) {
    r.scalar_flat_hermitian = Verdict::No;
    r.fired_case = "elliptic base";
    r.reason =
        "elliptic base: K_X^{-1} is nef (E indecomposable, deg E = 0 or, after an etale "
        "base change, deg E != 0) or effective (E decomposable), hence pseudo-effective, "
        "so K_X is not RC-positive";
  } else if (m <= 2 - 2 * genus) {
    r.scalar_flat_hermitian = Verdict::No;
    r.fired_case = "case (1)";
    r.reason = "m <= 2 - 2g: O_E(1) is effective and K_X^{-1} is pseudo-effective";
  } else if (m <= 0) {
    r.scalar_flat_hermitian = Verdict::Yes;
    r.fired_case = "case (2)";
    r.reason = "2 - 2g < m <= 0: E* is nef with 0 <= deg E* < 2g - 2, "
               "so K_X and K_X^{-1} are RC-positive";
  } else if (m < 2 * genus - 2) {
    r.scalar_flat_hermitian = Verdict::Yes;
    r.fired_case = "case (3)";
    r.reason = "0 < m < 2g - 2: E is nef with 0 < deg E < 2g - 2, "
               "so K_X and K_X^{-1} are RC-positive";
  } else {
    // m >= 2g - 2 together with m <= g leaves g = 2, m = 2 only.
    r.scalar_flat_hermitian = Verdict::Yes;
    r.fired_case = "case (4)";
    r.reason = "g = 2, m = 2: E is stable of degree 2, hence ample and Griffiths-positive; "
               "K_C (x) det E* is unitary flat, so K_X and K_X^{-1} are RC-positive";
  }
  if (r.scalar_flat_hermitian == Verdict::Yes) {
    r.total_scalar_image = total_scalar_image(true, true, false);
    r.scalar_flat_kahler = KahlerVerdict::Unknown;
  } else {
    // Uniruled and not Ricci-flat: K_X^{-1} is RC-positive, K_X is not.
    r.total_scalar_image = total_scalar_image(false, true, false);
    r.scalar_flat_kahler = KahlerVerdict::No;
  }
  return r;
}

ClassificationReport classify_ruled(const RuledSurfaceDescriptor& d) {
  return classify_ruled(d.genus, d.resolved_m());
}

ClassificationReport classify_split(int genus, int deg_l, int n) {
  if (n < 2) throw InvalidInput("split bundle needs n >= 2, got " + std::to_string(n));
  if (genus < 0) throw InvalidInput("genus must be >= 0");
  const int abs_deg = std::abs(deg_l);

  if (n == 2) {
    ClassificationReport r = classify_ruled(genus, m_split_rank2(deg_l));
    if (r.scalar_flat_hermitian == Verdict::Yes) {
      r.scalar_flat_kahler = abs_deg == 0 ? KahlerVerdict::Yes : KahlerVerdict::No;
      r.reason += abs_deg == 0
                      ? "; L + O is poly-stable and carries scalar-flat Kahler metrics"
                      : "; L + O is not poly-stable, so there is no scalar-flat Kahler metric";
      r.certificate = Attachment{"margin", std::numbers::pi * double(2 * genus - 2 - abs_deg),
                                 "constant-density K_X margin pi (2g - 2 - |deg L|)"};
    } else {
      r.scalar_flat_kahler = KahlerVerdict::No;
    }
    return r;
  }

  ClassificationReport r;
  const bool certified = genus >= 2 && (n - 1) * abs_deg < 2 * genus - 2;
  if (certified) {
    r.scalar_flat_hermitian = Verdict::Yes;
    r.fired_case = "split rank n";
    r.reason = "g >= 2 and 0 <= |deg L| < (2g - 2)/(n - 1): gamma - (n - 1) kappa > 0 "
               "certifies K_X RC-positive; K_X^{-1} is RC-positive since X is uniruled";
    r.total_scalar_image = TotalScalarImage::AllReals;
    r.certificate = Attachment{"margin",
                               std::numbers::pi * double(2 * genus - 2 - (n - 1) * abs_deg),
                               "constant-density K_X margin pi (2g - 2 - (n - 1) |deg L|)"};
  } else {
    r.scalar_flat_hermitian = Verdict::No;
    r.fired_case = "no certificate";
    r.reason = "outside 0 <= |deg L| < (2g - 2)/(n - 1) with g >= 2: no K_X certificate; "
               "nonexistence is not asserted for n > 2";
    r.total_scalar_image = TotalScalarImage::Unknown;
  }
  r.scalar_flat_kahler =
      (abs_deg == 0 && certified) ? KahlerVerdict::Yes : KahlerVerdict::No;
  if (abs_deg != 0) r.reason += "; L + O^(n-1) is not poly-stable, so no scalar-flat Kahler metric";
  return r;
}

TotalScalarImage total_scalar_image(bool kx_rc, bool anti_kx_rc, bool ricci_flat) {
  if (ricci_flat != (!kx_rc && !anti_kx_rc))
    throw InvalidInput(
        "inconsistent flags: X is Ricci-flat iff neither K_X nor K_X^{-1} is RC-positive");
  if (kx_rc && anti_kx_rc) return TotalScalarImage::AllReals;
  if (anti_kx_rc) return TotalScalarImage::PositiveReals;
  if (kx_rc) return TotalScalarImage::NegativeReals;
  return TotalScalarImage::ZeroOnly;
}

int hirzebruch_anticanonical_h0(int k) {
  if (k < 0) throw InvalidInput("Hirzebruch invariant k must be >= 0");
  return (k + 3) + 3 + std::max(0, 3 - k);
}

namespace {

struct ClassInfo {
  SurfaceClass cls;
  const char* name;
  KodairaDimension kodaira;
};

constexpr std::array<ClassInfo, 11> kClasses{{
    {SurfaceClass::Enriques, "Enriques", KodairaDimension::Zero},
    {SurfaceClass::BiElliptic, "BiElliptic", KodairaDimension::Zero},
    {SurfaceClass::K3, "K3", KodairaDimension::Zero},
    {SurfaceClass::Torus, "Torus", KodairaDimension::Zero},
    {SurfaceClass::Kodaira, "Kodaira", KodairaDimension::Zero},
    {SurfaceClass::RationalMinimal, "RationalMinimal", KodairaDimension::MinusInfinity},
    {SurfaceClass::Hirzebruch, "Hirzebruch", KodairaDimension::MinusInfinity},
    {SurfaceClass::Ruled, "Ruled", KodairaDimension::MinusInfinity},
    {SurfaceClass::Inoue, "Inoue", KodairaDimension::MinusInfinity},
    {SurfaceClass::Hopf, "Hopf", KodairaDimension::MinusInfinity},
    {SurfaceClass::VII0B2Positive, "VII0_b2_positive", KodairaDimension::MinusInfinity},
}};

const ClassInfo& info(SurfaceClass c) {
  for (const auto& i : kClasses)
    if (i.cls == c) return i;
  throw InvalidInput("unknown surface class");
}

}  // namespace

std::string to_string(SurfaceClass c) { return info(c).name; }

std::string to_string(KodairaDimension k) {
  switch (k) {
    case KodairaDimension::MinusInfinity: return "-inf";
    case KodairaDimension::Zero: return "0";
    case KodairaDimension::One: return "1";
    case KodairaDimension::Two: return "2";
  }
  return "?";
}

std::optional<SurfaceClass> parse_surface_class(const std::string& name) {
  for (const auto& i : kClasses)
    if (name == i.name) return i.cls;
  return std::nullopt;
}

KodairaDimension kodaira_dimension_of(SurfaceClass c) { return info(c).kodaira; }

MinimalSurfaceDescriptor MinimalSurfaceDescriptor::of(SurfaceClass c) {
  MinimalSurfaceDescriptor d;
  d.kodaira = kodaira_dimension_of(c);
  d.surface_class = c;
  return d;
}

MinimalSurfaceDescriptor MinimalSurfaceDescriptor::ruled(int genus, int m) {
  MinimalSurfaceDescriptor d = of(SurfaceClass::Ruled);
  d.ruled_genus = genus;
  d.ruled_m = m;
  return d;
}

std::string to_string(GateVerdict v) {
  switch (v) {
    case GateVerdict::Admits: return "admits";
    case GateVerdict::Rejected: return "rejected";
    case GateVerdict::PossibleUnknown: return "possible_unknown";
  }
  return "possible_unknown";
}

GateResult minimal_surface_gate(const MinimalSurfaceDescriptor& d) {
  const bool general = d.kodaira == KodairaDimension::One || d.kodaira == KodairaDimension::Two;
  if (general) {
    if (d.surface_class)
      throw InvalidInput("surface class " + to_string(*d.surface_class) +
                         " is inconsistent with Kodaira dimension " + to_string(d.kodaira));
    return {GateVerdict::Rejected,
            "Kodaira dimension " + to_string(d.kodaira) +
                ": a scalar-flat Hermitian metric forces kappa(X) = 0 or -inf",
            std::nullopt};
  }
  if (!d.surface_class)
    throw InvalidInput("minimal surfaces with kappa in {0, -inf} need a surface class");
  const SurfaceClass c = *d.surface_class;
  if (kodaira_dimension_of(c) != d.kodaira)
    throw InvalidInput("surface class " + to_string(c) + " has Kodaira dimension " +
                       to_string(kodaira_dimension_of(c)) + ", descriptor says " +
                       to_string(d.kodaira));

  switch (c) {
    case SurfaceClass::Enriques:
    case SurfaceClass::BiElliptic:
    case SurfaceClass::K3:
    case SurfaceClass::Torus:
    case SurfaceClass::Kodaira:
      return {GateVerdict::Admits,
              "kappa = 0: torsion canonical bundle (K_X^6 = O_X), hence Ricci-flat",
              std::nullopt};
    case SurfaceClass::RationalMinimal:
    case SurfaceClass::Hirzebruch:
      return {GateVerdict::Rejected,
              "minimal rational surface: K_X^{-1} is effective, so K_X is not RC-positive",
              std::nullopt};
    case SurfaceClass::Ruled: {
      ClassificationReport r = classify_ruled(d.ruled_genus, d.ruled_m);
      const GateVerdict v =
          r.scalar_flat_hermitian == Verdict::Yes ? GateVerdict::Admits : GateVerdict::Rejected;
      return {v, "ruled surface: delegated to the ruled-surface criterion (" + r.fired_case + ")",
              std::move(r)};
    }
    case SurfaceClass::Inoue:
      return {GateVerdict::Rejected,
              "Inoue surface: K_X semi-positive but not unitary flat", std::nullopt};
    case SurfaceClass::Hopf:
      return {GateVerdict::Rejected, "Hopf surface: semi-positive anti-canonical bundle",
              std::nullopt};
    case SurfaceClass::VII0B2Positive:
      return {GateVerdict::PossibleUnknown,
              "class VII_0 with b2 > 0: not completely classified; some may admit "
              "scalar-flat Hermitian metrics",
              std::nullopt};
  }
  throw InvalidInput("unhandled surface class");
}

}  // namespace scalarflat
