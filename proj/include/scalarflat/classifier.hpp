#pragma once

// Decision procedures for scalar-flat Hermitian metrics on ruled surfaces,
// split projective bundles and minimal compact complex surfaces. Pure integer
// and flag logic; every inequality is implemented with the strictness the
// underlying result states.

#include "scalarflat/geom_core.hpp"

#include <optional>
#include <string>

namespace scalarflat {

/// m(P(L + O)) = -|deg L|.
int m_split_rank2(int deg_l);

/// Nagata: m(E) <= g. Throws NagataViolation otherwise.
void validate_m(int m, int genus);

/// A rank-two bundle is stable iff m(E) > 0.
bool is_stable_rank2(int m);

struct RuledSurfaceDescriptor {
  int genus = 0;
  std::optional<int> m;
  std::optional<int> split_deg;  // X = P(L + O) with deg L = split_deg
  int n = 2;
  std::string m_provenance;      // how m was obtained; m is never computed here

  /// m, cross-checked against split_deg when both are present.
  int resolved_m() const;
};

/// X ruled over a curve of genus g: scalar-flat Hermitian iff g >= 2 and
/// m(X) > 2 - 2g. Exactly one of the proof cases fires.
ClassificationReport classify_ruled(int genus, int m);
ClassificationReport classify_ruled(const RuledSurfaceDescriptor& d);

/// X = P(E*) for E = L + O^(n-1).
ClassificationReport classify_split(int genus, int deg_l, int n);

/// Image of the total scalar curvature on Gauduchon metrics. Requires
/// ricci_flat == (!kx_rc && !anti_kx_rc).
TotalScalarImage total_scalar_image(bool kx_rc, bool anti_kx_rc, bool ricci_flat);

/// h^0(P^1, O(k+2) + O(2) + O(2-k)) = h^0 of the anti-canonical bundle of the
/// Hirzebruch surface with invariant k.
int hirzebruch_anticanonical_h0(int k);

enum class KodairaDimension { MinusInfinity, Zero, One, Two };

enum class SurfaceClass {
  Enriques,
  BiElliptic,
  K3,
  Torus,
  Kodaira,
  RationalMinimal,
  Hirzebruch,
  Ruled,
  Inoue,
  Hopf,
  VII0B2Positive,
};

std::string to_string(SurfaceClass c);
std::string to_string(KodairaDimension k);
std::optional<SurfaceClass> parse_surface_class(const std::string& name);
KodairaDimension kodaira_dimension_of(SurfaceClass c);

struct MinimalSurfaceDescriptor {
  KodairaDimension kodaira = KodairaDimension::MinusInfinity;
  std::optional<SurfaceClass> surface_class;  // absent for kappa in {1, 2}
  int ruled_genus = 0;                        // SurfaceClass::Ruled only
  int ruled_m = 0;

  static MinimalSurfaceDescriptor of(SurfaceClass c);
  static MinimalSurfaceDescriptor ruled(int genus, int m);
};

enum class GateVerdict { Admits, Rejected, PossibleUnknown };
std::string to_string(GateVerdict v);

struct GateResult {
  GateVerdict verdict = GateVerdict::PossibleUnknown;
  std::string reason;
  std::optional<ClassificationReport> delegated;  // ruled surfaces
};

GateResult minimal_surface_gate(const MinimalSurfaceDescriptor& d);

}  // namespace scalarflat
