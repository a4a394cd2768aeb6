#ifndef SU2PF_CURVATURE_HPP
#define SU2PF_CURVATURE_HPP

#include <array>
#include <functional>

#include <Eigen/Dense>

#include "su2pf/errors.hpp"
#include "su2pf/fields.hpp"
#include "su2pf/manifold.hpp"
#include "su2pf/sampling.hpp"

namespace su2pf {

// Sign conventions, fixed once:
//   R^rho_{sigma mu nu} = d_mu Gamma^rho_{nu sigma} - d_nu Gamma^rho_{mu sigma}
//                         + Gamma^rho_{mu lam} Gamma^lam_{nu sigma}
//                         - Gamma^rho_{nu lam} Gamma^lam_{mu sigma}
//   Ric_{sigma nu} = R^mu_{sigma mu nu}
// so the round unit 2-sphere has Gauss curvature +1.
template <int N>
struct CurvatureTensors {
  using MatN = Eigen::Matrix<Cplx, N, N>;
  template <class T>
  using Arr = std::array<T, N>;
  using T3 = Arr<Arr<Arr<Cplx>>>;
  using T4 = Arr<T3>;

  MatN metric, metric_inv, ricci, schouten;
  T3 gamma;      // gamma[rho][mu][nu], symmetric in (mu, nu)
  T4 riem, weyl; // (0,4) index order (rho, sigma, mu, nu)
  Cplx scalar{};
};

template <int N>
CurvatureTensors<N> curvature_at(const MetricField<N>& gf,
                                 const typename MetricField<N>::Coords& x);

extern template CurvatureTensors<2> curvature_at(const MetricField<2>&,
                                                 const std::array<Cplx, 2>&);
extern template CurvatureTensors<5> curvature_at(const MetricField<5>&,
                                                 const std::array<Cplx, 5>&);

// Weyl component in the dual frame of the given coframe rows; idx is
// 1-based, e.g. {2,4,2,4}.
Cplx weyl_frame_component(const MetricField<5>& gf, const Coframe5& frame,
                          const std::array<int, 4>& idx, const Point5& p);

// Closed form for the theta-coframe component W_2424 as a function of the
// system constants (principal branch powers).
Cplx weyl_component_closed_form(Cplx a2, Cplx c2);

struct FlatnessScan {
  bool flat = false;
  double max_abs = 0.0;
};

FlatnessScan weyl_flat(const MetricField<5>& gf, int npoints, double tol, std::uint64_t seed = 42,
                       const PointFilter& keep = {});

// max |Ric| entry over sampled points.
double max_ricci_residual(const MetricField<5>& gf, int npoints, std::uint64_t seed = 42,
                          const PointFilter& keep = {});

MetricField<5> conformal_rescale(const MetricField<5>& gf, const ScalarField5& omega);

// K = scalar/2 in two dimensions.
Cplx gauss_curvature(const MetricField<2>& gf, const std::array<Cplx, 2>& x);

// Diagnostics used by the property suite.
template <int N>
double riemann_symmetry_residual(const CurvatureTensors<N>& t);
template <int N>
double first_bianchi_residual(const CurvatureTensors<N>& t);
double weyl_trace_residual(const CurvatureTensors<5>& t);
double weyl_norm_inf(const CurvatureTensors<5>& t);

// (1,3)-Weyl C^rho_{sigma mu nu}, the conformally invariant form.
CurvatureTensors<5>::T4 weyl13(const CurvatureTensors<5>& t);

}  // namespace su2pf

#endif  // SU2PF_CURVATURE_HPP
