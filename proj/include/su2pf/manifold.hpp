#ifndef SU2PF_MANIFOLD_HPP
#define SU2PF_MANIFOLD_HPP

#include <array>
#include <cmath>

#include "su2pf/dual.hpp"
#include "su2pf/errors.hpp"
#include "su2pf/fields.hpp"

namespace su2pf {

// Global coordinate ordering on M = S^3 x Sigma^2, used by every
// coefficient array in the library.
inline constexpr int kPsi = 0;
inline constexpr int kTheta = 1;
inline constexpr int kPhi = 2;
inline constexpr int kR = 3;
inline constexpr int kU = 4;

struct Point5 {
  Cplx psi{}, theta{}, phi{}, r{}, u{};

  std::array<Cplx, 5> coords() const { return {psi, theta, phi, r, u}; }
  static Point5 from_coords(const std::array<Cplx, 5>& x) {
    return {x[kPsi], x[kTheta], x[kPhi], x[kR], x[kU]};
  }
};

// Left-invariant one-forms sigma_1, sigma_2, sigma_3 on SU(2) ~ S^3 in the
// Euler-angle chart, as rows over (psi, theta, phi, r, u):
//   sigma_1 = sin(psi) dtheta - cos(psi) sin(theta) dphi
//   sigma_2 = cos(psi) dtheta + sin(psi) sin(theta) dphi
//   sigma_3 = -dpsi - cos(theta) dphi
template <class T>
std::array<std::array<T, 5>, 3> su2_sigma_rows(const std::array<T, 5>& x) {
  const T& psi = x[kPsi];
  const T& th = x[kTheta];
  std::array<std::array<T, 5>, 3> rows{};
  rows[0][kTheta] = sin(psi);
  rows[0][kPhi] = -cos(psi) * sin(th);
  rows[1][kTheta] = cos(psi);
  rows[1][kPhi] = sin(psi) * sin(th);
  rows[2][kPsi] = T(-1.0);
  rows[2][kPhi] = -cos(th);
  return rows;
}

inline constexpr double kChartTol = 1e-6;

// Dual frame E^1, E^2, E^3 with <sigma_i, E^j> = delta_ij.  The 3x3 angular
// block has det = -sin(theta); inverted by the adjugate so the formula stays
// exact on dual numbers.
template <class T>
std::array<std::array<T, 5>, 3> su2_frame_rows(const std::array<T, 5>& x) {
  if (std::abs(std::sin(leaf_value(x[kTheta]))) < kChartTol)
    throw ChartDegenerate("su2_frame: sin(theta) below chart threshold");

  auto sig = su2_sigma_rows(x);
  // Angular block M[i][k], columns (psi, theta, phi).
  std::array<std::array<T, 3>, 3> m;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) m[i][k] = sig[i][k];

  T det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
          m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
          m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);

  // inv[k][j] = adj(M)[k][j] / det; E^j coefficients are column j of inv.
  std::array<std::array<T, 3>, 3> inv;
  inv[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / det;
  inv[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / det;
  inv[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / det;
  inv[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / det;
  inv[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / det;
  inv[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / det;
  inv[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / det;
  inv[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / det;
  inv[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / det;

  std::array<std::array<T, 5>, 3> rows{};
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) rows[j][k] = inv[k][j];
  return rows;
}

std::array<Row5c, 3> su2_coframe(const Point5& p);
std::array<Row5c, 3> su2_frame(const Point5& p);

// sigma_i / E^i (i in 1..3) as standalone smooth fields.
OneFormField sigma_field(int i);
VectorField5 frame_field(int i);

// [X, Y]^k = X^a d_a Y^k - Y^a d_a X^k at p.
Row5c lie_bracket(const VectorField5& x, const VectorField5& y, const Point5& p);

// The bracket as a field, for iterated brackets.  The result is depth-1: it
// supports values and first derivatives, which is all the growth-vector
// filtration needs.
VectorField5 lie_bracket_field(const VectorField5& x, const VectorField5& y);

}  // namespace su2pf

#endif  // SU2PF_MANIFOLD_HPP
