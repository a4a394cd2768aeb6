#ifndef SU2PF_GAUGE_HPP
#define SU2PF_GAUGE_HPP

#include <functional>

#include <Eigen/Dense>

#include "su2pf/errors.hpp"
#include "su2pf/fields.hpp"

namespace su2pf {

using SpinMatrix = Eigen::Matrix2cd;

// E^a -> (i/2) sigma_a; trace-free, anti-Hermitian, [E^1, E^2] = -E^3 and
// cyclic.
SpinMatrix pauli_rep(int a);

enum class GaugeCaseId { A, B };
enum class GaugeSign { minus, plus };  // upper / lower branch of the -/+ pair
enum class GaugeVariant { complex_form, real_form, sign_reversed };

struct GaugeCase {
  GaugeCaseId id = GaugeCaseId::A;
  GaugeSign sign = GaugeSign::minus;
  GaugeVariant variant = GaugeVariant::complex_form;

  // The sign-reversed covariant derivative exists for case A only.
  void validate() const;
};

// A_mu = W_{mu a} E^a with W depending on r alone.  W_{0 2} is the only
// nonzero component of A_0; A_1 carries the E^1 and E^3 profiles.
// Derivatives are the hand-differentiated closed forms.
struct GaugePotential {
  Cplx w02{};
  std::function<Cplx(double)> w11, w13;
  std::function<Cplx(double)> dw11, dw13;
  std::function<Cplx(double)> ddw11, ddw13;

  SpinMatrix A0() const;
  SpinMatrix A1(double r) const;
  SpinMatrix dA1(double r) const;
  SpinMatrix ddA1(double r) const;
  Cplx w(int mu, int a, double r) const;  // W_{mu a}, mu in {0,1}, a in {1,2,3}
};

GaugePotential gauge_potential(const GaugeCase& gc);

// Spinor doublet over (r, u).
class Spinor {
 public:
  Spinor() = default;
  template <class F>
  explicit Spinor(F f) : map_(f) {}

  static Spinor constant(Cplx up, Cplx down) {
    return Spinor([up, down](const auto& x) {
      using T = std::remove_cvref_t<decltype(x[0])>;
      return std::array<T, 2>{T(up), T(down)};
    });
  }

  Eigen::Vector2cd value(double r, double u) const;
  Eigen::Vector2cd d1(int mu, double r, double u) const;

 private:
  SmoothMap<2, 2> map_;
};

// D_mu psi = d_mu psi + A_mu psi at (r, u).
Eigen::Vector2cd covariant_derivative(const GaugeCase& gc, int mu, const Spinor& psi, double r,
                                      double u);

// F = d_0 A_1 + [A_0, A_1] (the potentials are u-independent).
SpinMatrix field_strength(const GaugeCase& gc, double r);

// Computed brackets against the closed-form references.
struct BracketTable {
  SpinMatrix F, d0F, d1F;
  SpinMatrix F_ref, d0F_ref, d1F_ref;
  double max_residual = 0.0;
};

BracketTable bracket_table(const GaugeCase& gc, double r);

// Case A rescaling  Dt0 = (3/(2 sqrt 2)) e^{+-ir/3} D0,  Dt1 = D1:
// [Dt0, Dt1] = E^3 exactly, plus the two phase-factor brackets.
struct RescaledBrackets {
  SpinMatrix F, d0F, d1F;
  SpinMatrix F_ref, d0F_ref, d1F_ref;
  double max_residual = 0.0;
};

RescaledBrackets rescaled_brackets(const GaugeCase& gc, double r);

}  // namespace su2pf

#endif  // SU2PF_GAUGE_HPP
