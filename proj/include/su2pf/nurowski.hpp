#ifndef SU2PF_NUROWSKI_HPP
#define SU2PF_NUROWSKI_HPP

#include <utility>

#include <Eigen/Dense>

#include "su2pf/fields.hpp"
#include "su2pf/pfaffian.hpp"

namespace su2pf {

// Adapted coframe constants.  The normalization forces R = U = 0, T = P,
// S = -Q and fixes P = 0; Q is a fixed rational-power expression in a2, c2.
struct AdaptedCoframe {
  SystemParams params;
  Cplx lambda{};  // (a2^2 / (a2^2 + c2^2))^{1/3}
  Cplx P{}, Q{}, R{}, S{}, T{}, U{};
};

// Requires real a2 > 0 (fractional powers stay on the real branch) and the
// simplified system; throws BranchRestriction / DegenerateParams otherwise.
AdaptedCoframe adapted_constants(const SystemParams& params);

// theta_1..theta_5 built from the omega coframe and the constants.
Coframe5 adapted_coframe(const AdaptedCoframe& ac);

struct ConnectionSolution {
  Eigen::Matrix<Cplx, 7, 5> omega_conn;  // row j = theta-basis coefficients of Omega_{j+1}
  double residual = 0.0;                 // max coefficient mismatch of the five equations
};

// Least-squares solve of the Cartan structure equations for the 35 unknown
// connection coefficients at p (50 wedge-coefficient equations).
ConnectionSolution solve_connection_forms(const Coframe5& theta, const Point5& p);

// g = 2 theta1 theta5 - 2 theta2 theta4 + (4/3) theta3 theta3.
MetricField<5> nurowski_metric_g(const SystemParams& params);

// Branch-free representative, valid for complex constants:
// gt = 2 w1 w5 - 2 w2 w4 + (4/3) mu w3 w3
//      + (1/5) mu ((7 a2^2 + 3 c2^2)/a2^2) (w1 w1 + w2 w2),  mu = a2^2/(a2^2+c2^2).
MetricField<5> nurowski_metric_gtilde(const SystemParams& params);

enum class CaseId { A, B };  // A: a2^2 + 9 c2^2 = 0,  B: 9 a2^2 + c2^2 = 0
enum class SignBranch { minus, plus };
enum class Variant { complex_form, real_form };
enum class SystemKind { standard, sign_reversed };

struct CaseSpec {
  CaseId id = CaseId::A;
  SignBranch sign = SignBranch::minus;
  Variant variant = Variant::complex_form;
  SystemKind system = SystemKind::standard;
};

// The coframe rows for the chosen case: the standard system returns
// omega_1..5, sign-reversed returns bar-omega_1..3 with omega_4, omega_5
// unchanged.
Coframe5 case_coframe(const CaseSpec& spec);

// The conformally flat representative metric for the chosen case and system.
MetricField<5> case_metric(const CaseSpec& spec);

// Both closed forms of the case metric: the specialization of the rescaled
// representative, and the diagonal polarised form.  They agree entrywise.
std::pair<MetricField<5>, MetricField<5>> case_metric_forms(const CaseSpec& spec);

// 2-metric on the surface factor:  A: dr^2 + (9/8) cos^2(r/3) du^2,
// B: dr^2 + (1/8) cos^2(3r) du^2.
MetricField<2> surface_metric(CaseId id);

// Points where the case coframe/metric degenerates (profile zeros) are
// rejected when sampling.
PointFilter case_point_filter(const CaseSpec& spec);

}  // namespace su2pf

#endif  // SU2PF_NUROWSKI_HPP
