#include "su2pf/gauge.hpp"

#include <cmath>
#include <numbers>

namespace su2pf {

namespace {
const Cplx kI(0.0, 1.0);
const double kInvTwoSqrt2 = 1.0 / (2.0 * std::numbers::sqrt2);
}  // namespace

SpinMatrix pauli_rep(int a) {
  SpinMatrix m;
  switch (a) {
    case 1:
      m << 0.0, 0.5 * kI, 0.5 * kI, 0.0;
      break;
    case 2:
      m << 0.0, 0.5, -0.5, 0.0;
      break;
    case 3:
      m << 0.5 * kI, 0.0, 0.0, -0.5 * kI;
      break;
    default:
      throw std::invalid_argument("pauli_rep: a must be 1, 2 or 3");
  }
  return m;
}

void GaugeCase::validate() const {
  if (variant == GaugeVariant::sign_reversed && id == GaugeCaseId::B)
    throw UnsupportedCase("gauge: the sign-reversed connection is a case A construction");
}

SpinMatrix GaugePotential::A0() const { return w02 * pauli_rep(2); }

SpinMatrix GaugePotential::A1(double r) const {
  return w11(r) * pauli_rep(1) + w13(r) * pauli_rep(3);
}

SpinMatrix GaugePotential::dA1(double r) const {
  return dw11(r) * pauli_rep(1) + dw13(r) * pauli_rep(3);
}

SpinMatrix GaugePotential::ddA1(double r) const {
  return ddw11(r) * pauli_rep(1) + ddw13(r) * pauli_rep(3);
}

Cplx GaugePotential::w(int mu, int a, double r) const {
  if (mu == 0) return a == 2 ? w02 : Cplx(0.0);
  switch (a) {
    case 1:
      return w11(r);
    case 2:
      return Cplx(0.0);
    case 3:
      return w13(r);
    default:
      throw std::invalid_argument("GaugePotential::w: a must be 1, 2 or 3");
  }
}

namespace {

struct Profile {
  std::function<Cplx(double)> w, dw, ddw;
};

Profile exp_profile(Cplx amp, Cplx freq) {
  return {[amp, freq](double r) { return amp * std::exp(freq * r); },
          [amp, freq](double r) { return amp * freq * std::exp(freq * r); },
          [amp, freq](double r) { return amp * freq * freq * std::exp(freq * r); }};
}

Profile cos_profile(double amp, double om) {
  return {[amp, om](double r) { return Cplx(amp * std::cos(om * r)); },
          [amp, om](double r) { return Cplx(-amp * om * std::sin(om * r)); },
          [amp, om](double r) { return Cplx(-amp * om * om * std::cos(om * r)); }};
}

Profile sin_profile(double amp, double om) {
  return {[amp, om](double r) { return Cplx(amp * std::sin(om * r)); },
          [amp, om](double r) { return Cplx(amp * om * std::cos(om * r)); },
          [amp, om](double r) { return Cplx(-amp * om * om * std::sin(om * r)); }};
}

void install(GaugePotential& pot, const Profile& p11, const Profile& p13) {
  pot.w11 = p11.w;
  pot.dw11 = p11.dw;
  pot.ddw11 = p11.ddw;
  pot.w13 = p13.w;
  pot.dw13 = p13.dw;
  pot.ddw13 = p13.ddw;
}

}  // namespace

GaugePotential gauge_potential(const GaugeCase& gc) {
  gc.validate();
  const double s = gc.sign == GaugeSign::minus ? 1.0 : -1.0;
  GaugePotential pot;
  pot.w02 = Cplx(-1.0);

  if (gc.id == GaugeCaseId::A) {
    const Cplx freq = -s * kI / 3.0;
    switch (gc.variant) {
      case GaugeVariant::complex_form: {
        const Cplx f0 = -3.0 * kInvTwoSqrt2;  // f = -(3/(2 sqrt 2)) e^{-+ ir/3}
        install(pot, exp_profile(f0, freq), exp_profile(s * (kI / 3.0) * f0, freq));
        break;
      }
      case GaugeVariant::real_form:
        install(pot, cos_profile(-3.0 * kInvTwoSqrt2, 1.0 / 3.0),
                sin_profile(-kInvTwoSqrt2, 1.0 / 3.0));
        break;
      case GaugeVariant::sign_reversed:
        pot.w02 = Cplx(1.0);
        install(pot, exp_profile(3.0 * kInvTwoSqrt2, freq),
                exp_profile(-s * kI * kInvTwoSqrt2, freq));
        break;
    }
  } else {
    const Cplx freq = -s * 3.0 * kI;
    switch (gc.variant) {
      case GaugeVariant::complex_form: {
        const Cplx f0 = kI * kInvTwoSqrt2;  // f = (i/(2 sqrt 2)) e^{-+ 3ir}
        install(pot, exp_profile(f0, freq), exp_profile(s * 3.0 * kI * f0, freq));
        break;
      }
      case GaugeVariant::real_form:
        install(pot, cos_profile(kInvTwoSqrt2, 3.0), sin_profile(3.0 * kInvTwoSqrt2, 3.0));
        break;
      case GaugeVariant::sign_reversed:
        throw UnsupportedCase("gauge: the sign-reversed connection is a case A construction");
    }
  }
  return pot;
}

Eigen::Vector2cd Spinor::value(double r, double u) const {
  const auto v = map_.value({Cplx(r), Cplx(u)});
  return {v[0], v[1]};
}

Eigen::Vector2cd Spinor::d1(int mu, double r, double u) const {
  const auto v = map_.d1({Cplx(r), Cplx(u)}, mu);
  return {v[0], v[1]};
}

Eigen::Vector2cd covariant_derivative(const GaugeCase& gc, int mu, const Spinor& psi, double r,
                                      double u) {
  if (mu != 0 && mu != 1) throw std::invalid_argument("covariant_derivative: mu must be 0 or 1");
  const GaugePotential pot = gauge_potential(gc);
  const SpinMatrix a = mu == 0 ? pot.A0() : pot.A1(r);
  return psi.d1(mu, r, u) + a * psi.value(r, u);
}

SpinMatrix field_strength(const GaugeCase& gc, double r) {
  const GaugePotential pot = gauge_potential(gc);
  const SpinMatrix a0 = pot.A0();
  const SpinMatrix a1 = pot.A1(r);
  return pot.dA1(r) + a0 * a1 - a1 * a0;
}

namespace {

SpinMatrix comm(const SpinMatrix& a, const SpinMatrix& b) { return a * b - b * a; }

struct Refs {
  SpinMatrix F, d0F, d1F;
};

Refs bracket_refs(const GaugeCase& gc, double r) {
  const double s = gc.sign == GaugeSign::minus ? 1.0 : -1.0;
  const SpinMatrix e1 = pauli_rep(1), e2 = pauli_rep(2), e3 = pauli_rep(3);
  const double c = 2.0 * std::numbers::sqrt2 / 3.0;
  Refs refs;
  if (gc.id == GaugeCaseId::A) {
    switch (gc.variant) {
      case GaugeVariant::complex_form: {
        const Cplx p = std::exp(-s * kI * r / 3.0);
        refs.F = c * p * e3;
        refs.d0F = c * p * e1 - s * (c / 3.0) * kI * p * e3;
        refs.d1F = -std::exp(-s * 2.0 * kI * r / 3.0) * e2;
        break;
      }
      case GaugeVariant::real_form: {
        const double cr = std::cos(r / 3.0), sr = std::sin(r / 3.0);
        refs.F = c * cr * e3;
        refs.d0F = c * cr * e1 - (c / 3.0) * sr * e3;
        refs.d1F = -cr * cr * e2;
        break;
      }
      case GaugeVariant::sign_reversed: {
        const Cplx p = std::exp(-s * kI * r / 3.0);
        refs.F = c * p * e3;
        refs.d0F = -c * p * e1 - s * (c / 3.0) * kI * p * e3;
        refs.d1F = std::exp(-s * 2.0 * kI * r / 3.0) * e2;
        break;
      }
    }
  } else {
    const double w = 2.0 * std::numbers::sqrt2;
    switch (gc.variant) {
      case GaugeVariant::complex_form: {
        const Cplx q = std::exp(-s * 3.0 * kI * r);
        refs.F = w * kI * q * e3;
        refs.d0F = w * kI * q * e1 + s * 3.0 * w * q * e3;
        refs.d1F = -std::exp(-s * 6.0 * kI * r) * e2;
        break;
      }
      case GaugeVariant::real_form: {
        const double cr = std::cos(3.0 * r), sr = std::sin(3.0 * r);
        refs.F = w * cr * e3;
        refs.d0F = w * cr * e1 - 3.0 * w * sr * e3;
        refs.d1F = cr * cr * e2;
        break;
      }
      case GaugeVariant::sign_reversed:
        throw UnsupportedCase("gauge: the sign-reversed connection is a case A construction");
    }
  }
  return refs;
}

double max_entry_residual(std::initializer_list<std::pair<SpinMatrix, SpinMatrix>> pairs) {
  double worst = 0.0;
  for (const auto& [got, want] : pairs)
    worst = std::max(worst, (got - want).cwiseAbs().maxCoeff());
  return worst;
}

}  // namespace

BracketTable bracket_table(const GaugeCase& gc, double r) {
  const GaugePotential pot = gauge_potential(gc);
  const SpinMatrix a0 = pot.A0();
  const SpinMatrix a1 = pot.A1(r);

  BracketTable t;
  t.F = pot.dA1(r) + comm(a0, a1);
  const SpinMatrix dF = pot.ddA1(r) + comm(a0, pot.dA1(r));  // d/dr of the computed F
  t.d0F = dF + comm(a0, t.F);
  t.d1F = comm(a1, t.F);

  const Refs refs = bracket_refs(gc, r);
  t.F_ref = refs.F;
  t.d0F_ref = refs.d0F;
  t.d1F_ref = refs.d1F;
  t.max_residual =
      max_entry_residual({{t.F, t.F_ref}, {t.d0F, t.d0F_ref}, {t.d1F, t.d1F_ref}});
  return t;
}

RescaledBrackets rescaled_brackets(const GaugeCase& gc, double r) {
  if (gc.id != GaugeCaseId::A || gc.variant != GaugeVariant::complex_form)
    throw UnsupportedCase("rescaled_brackets: only the case A complex connection is rescaled");
  const double s = gc.sign == GaugeSign::minus ? 1.0 : -1.0;
  const GaugePotential pot = gauge_potential(gc);
  const SpinMatrix a0 = pot.A0();
  const SpinMatrix a1 = pot.A1(r);

  const Cplx h = 3.0 * kInvTwoSqrt2 * std::exp(s * kI * r / 3.0);
  const Cplx dh = s * (kI / 3.0) * h;

  const SpinMatrix F = pot.dA1(r) + comm(a0, a1);
  const SpinMatrix dF = pot.ddA1(r) + comm(a0, pot.dA1(r));

  RescaledBrackets t;
  t.F = h * F;
  t.d0F = h * (dh * F + h * dF + h * comm(a0, F));
  t.d1F = h * comm(a1, F);

  t.F_ref = pauli_rep(3);
  const double amp = 3.0 * std::numbers::sqrt2 / 4.0;
  t.d0F_ref = amp * std::exp(s * kI * r / 3.0) * pauli_rep(1);
  t.d1F_ref = -amp * std::exp(-s * kI * r / 3.0) * pauli_rep(2);
  t.max_residual =
      max_entry_residual({{t.F, t.F_ref}, {t.d0F, t.d0F_ref}, {t.d1F, t.d1F_ref}});
  return t;
}

}  // namespace su2pf
