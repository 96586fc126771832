#pragma once

// Reference computations for the tests. Nothing here calls into the library's
// differentiation or classification code.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

inline constexpr double pi = std::numbers::pi;
inline constexpr double tau = 2.0 * std::numbers::pi;
using cplx = std::complex<double>;

/// h^0(P^1, O(d)) summed over the given degrees.
inline int h0_p1_sum(const std::vector<int>& degrees) {
  int total = 0;
  for (int d : degrees) total += std::max(0, d + 1);
  return total;
}

/// Ruled surface over genus g with invariant m admits a scalar-flat Hermitian metric.
inline bool ruled_predicate(int g, int m) { return g >= 2 && m > 2 - 2 * g; }

/// For e^u * flat on the 4-torus with u = eps sin(2 pi x1), the total scalar
/// curvature under the volume normalization omega^2 = 8 det dV:
///   -4 int e^u u'' dx = 4 int e^u u'^2 dx = 16 pi^2 eps I_1(eps).
inline double conformal_total_scalar(double eps) {
  const double a = std::abs(eps);  // even in eps; the library Bessel rejects negative arguments
  return 16.0 * pi * pi * a * std::cyl_bessel_i(1.0, a);
}

/// Brute-force Chern curvature of a rank-r metric on the curve chart from
/// second-order central differences of h sampled at the grid points:
///   R_{a bbar} = -d d_bar h_{a bbar} + sum_{c,d} h^{c dbar} d h_{a dbar} d_bar h_{c bbar},
/// evaluated with explicit index loops. h(x, y) returns the matrix h_{a bbar}.
struct FdChern {
  int n;
  std::function<Eigen::MatrixXcd(double, double)> h;

  Eigen::MatrixXcd at(int ix, int iy) const {
    const double dx = 1.0 / n;
    const double x = ix * dx, y = iy * dx;
    const Eigen::MatrixXcd c = h(x, y);
    const Eigen::MatrixXcd xp = h(x + dx, y), xm = h(x - dx, y);
    const Eigen::MatrixXcd yp = h(x, y + dx), ym = h(x, y - dx);
    const Eigen::MatrixXcd hx = (xp - xm) / (2 * dx), hy = (yp - ym) / (2 * dx);
    const Eigen::MatrixXcd lap = (xp + xm + yp + ym - 4.0 * c) / (dx * dx);
    const cplx i(0.0, 1.0);
    const Eigen::MatrixXcd dz = 0.5 * (hx - i * hy), dzb = 0.5 * (hx + i * hy);
    const Eigen::MatrixXcd ddb = 0.25 * lap;
    const int r = static_cast<int>(c.rows());
    // h^{c dbar} h_{b dbar} = delta^c_b
    const Eigen::MatrixXcd up = c.transpose().inverse();
    Eigen::MatrixXcd out(r, r);
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) {
        cplx acc = -ddb(a, b);
        for (int cc = 0; cc < r; ++cc)
          for (int d = 0; d < r; ++d) acc += up(cc, d) * dz(a, d) * dzb(cc, b);
        out(a, b) = acc;
      }
    return out;
  }
};

}  // namespace oracle
