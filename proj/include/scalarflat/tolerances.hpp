#pragma once

namespace scalarflat::tol {

// Single source for default tolerances. The CLI `--tol` flag overrides the
// value relevant to each pipeline; nothing else hard-codes these numbers.

inline constexpr double kDegreeQuantization = 1e-8;
inline constexpr double kDegreeInput = 1e-6;
inline constexpr double kSimplexSum = 1e-12;
inline constexpr double kImaginaryResidue = 1e-8;
inline constexpr double kTotalScalarCrossCheck = 1e-6;
inline constexpr double kRcPositive = 1e-9;
inline constexpr double kPoissonMean = 1e-8;
inline constexpr double kGauduchon = 1e-8;
inline constexpr double kTotalScalarZero = 1e-6;
inline constexpr double kConformalSolve = 1e-10;
// Stopping target for the weighted residual; reachable above the rounding floor at N = 32.
inline constexpr double kConformalStopTarget = 2e-9;
inline constexpr double kEndToEnd = 1e-6;
inline constexpr int kMaxSolverIterations = 10000;

}  // namespace scalarflat::tol
