#ifndef SU2PF_PFAFFIAN_HPP
#define SU2PF_PFAFFIAN_HPP

#include <complex>
#include <map>
#include <string>

#include "su2pf/fields.hpp"
#include "su2pf/forms.hpp"
#include "su2pf/manifold.hpp"
#include "su2pf/sampling.hpp"

namespace su2pf {

// Constants of one Pfaffian system.  All square roots and fractional powers
// use the principal branch; for real b1 > 0 the sign factor b1/sqrt(b1^2)
// is +1.
struct SystemParams {
  Cplx a1{}, b1{}, c1{}, a2{}, b2{}, c2{}, k{1.0};
  RFunc f;

  // Validates the invariants and installs the default profile
  // f(r) = k exp(-(c2/a2)(b1/sqrt(b1^2)) r).
  static SystemParams make(Cplx a1, Cplx b1, Cplx c1, Cplx a2, Cplx b2, Cplx c2, Cplx k);

  // Same constants with a custom profile.
  template <class F>
  SystemParams with_profile(F profile) const {
    SystemParams q = *this;
    q.f = RFunc(profile);
    return q;
  }

  Cplx norm1() const { return std::sqrt(a1 * a1 + b1 * b1 + c1 * c1); }
  Cplx norm2() const { return std::sqrt(a2 * a2 + b2 * b2 + c2 * c2); }
  Cplx sign_b1() const { return b1 / std::sqrt(b1 * b1); }
  bool simplified() const;  // a1 = c1 = b2 = 0 and b1/sqrt(b1^2) = +1
};

// Split product metric  g = sigma_i sigma_i - dr^2 - f(r)^2 du^2.
MetricField<5> gsplit_metric(const SystemParams& params);

// Rows omega_1..omega_5 of the completed coframe, templated core.
template <class T>
std::array<std::array<T, 5>, 5> omega_rows(const SystemParams& params,
                                           const std::array<T, 5>& x) {
  const Cplx n1 = params.norm1();
  const Cplx n2 = params.norm2();
  const auto sig = su2_sigma_rows(x);
  const T fr = params.f(x[kR]);

  std::array<std::array<T, 5>, 5> rows{};
  const Cplx ang[3] = {params.a1, params.b1, params.c1};
  const Cplx rev[3] = {params.a2, params.b2, params.c2};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 5; ++j) rows[i][j] = sig[i][j];
    rows[i][kR] += ang[i] / n1;
    rows[i][kU] += (rev[i] / n2) * fr;
  }
  rows[3][kR] = params.b1 / n1;
  rows[4][kU] = -(params.a2 / n2) * fr;
  return rows;
}

Coframe5 omega_coframe(const SystemParams& params);

// The two g-null vector fields spanning the distribution:
//   X_1 = a1 E^1 + b1 E^2 + c1 E^3 - n1 d/dr
//   X_2 = a2 E^1 + b2 E^2 + c2 E^3 - (n2 / f) d/du
VectorField5 distribution_field(const SystemParams& params, int which);

struct StructureReport {
  bool pass = false;
  std::map<std::string, double> residuals;  // equation label -> max residual
  Cplx H{};                                 // omega4^omega5 coefficient of d omega3
};

// Verifies the structure equations at sampled points: the explicit
// five-equation coefficient pattern for the simplified system, or the
// mod-ideal pattern for generic constants.  Failures are reported, never
// thrown.
StructureReport check_structure_equations(const SystemParams& params, int npoints, double tol,
                                          std::uint64_t seed = 42);

// Ranks of D, [D,D], [[D,D],D] by singular-value thresholding.
std::array<int, 3> growth_vector(const SystemParams& params, const Point5& p,
                                 double rank_tol = 1e-7);
std::array<int, 3> growth_vector(const VectorField5& x1, const VectorField5& x2, const Point5& p,
                                 double rank_tol = 1e-7);

}  // namespace su2pf

#endif  // SU2PF_PFAFFIAN_HPP
