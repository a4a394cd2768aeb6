#include <doctest.h>

#include <numbers>

#include "su2pf/gauge.hpp"
#include "su2pf/manifold.hpp"
#include "su2pf/sampling.hpp"

using namespace su2pf;

namespace {
const Cplx I(0.0, 1.0);
const double kSqrt2 = std::numbers::sqrt2;

double mat_dist(const SpinMatrix& a, const SpinMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}
}  // namespace

TEST_CASE("Pauli identification: generator matrices, commutators, structure") {
  const SpinMatrix e1 = pauli_rep(1), e2 = pauli_rep(2), e3 = pauli_rep(3);

  SpinMatrix want3;
  want3 << 0.5 * I, 0.0, 0.0, -0.5 * I;
  CHECK(mat_dist(e3, want3) == 0.0);

  CHECK(mat_dist(e1 * e2 - e2 * e1, -e3) == 0.0);
  CHECK(mat_dist(e2 * e3 - e3 * e2, -e1) == 0.0);
  CHECK(mat_dist(e3 * e1 - e1 * e3, -e2) == 0.0);

  for (const auto& e : {e1, e2, e3}) {
    CHECK(std::abs(e.trace()) == 0.0);
    CHECK(mat_dist(e.adjoint(), -e) == 0.0);
  }
  CHECK_THROWS_AS(pauli_rep(4), std::invalid_argument);
}

TEST_CASE("gauge potentials: pinned components") {
  const GaugePotential pa = gauge_potential({GaugeCaseId::A, GaugeSign::minus,
                                             GaugeVariant::complex_form});
  CHECK(std::abs(pa.w02 - Cplx(-1.0)) == 0.0);
  CHECK(std::abs(pa.w11(0.0) - Cplx(-3.0 / (2.0 * kSqrt2))) < 1e-15);
  CHECK(std::abs(pa.w11(0.0) - Cplx(-1.0606601717798212)) < 1e-12);
  // W_13 = +(i/3) f on the upper branch
  CHECK(std::abs(pa.w13(0.7) - (I / 3.0) * pa.w11(0.7)) < 1e-15);
  CHECK(std::abs(pa.w(0, 2, 0.3) - Cplx(-1.0)) == 0.0);
  CHECK(std::abs(pa.w(1, 2, 0.3)) == 0.0);

  const GaugePotential pb =
      gauge_potential({GaugeCaseId::B, GaugeSign::minus, GaugeVariant::complex_form});
  // W_13(0) = +-3i f(0) = -+ 3/(2 sqrt 2): upper branch gives -3/(2 sqrt 2)
  CHECK(std::abs(pb.w13(0.0) - Cplx(-3.0 / (2.0 * kSqrt2))) < 1e-15);
  const GaugePotential pbp =
      gauge_potential({GaugeCaseId::B, GaugeSign::plus, GaugeVariant::complex_form});
  CHECK(std::abs(pbp.w13(0.0) - Cplx(3.0 / (2.0 * kSqrt2))) < 1e-15);
}

TEST_CASE("hand derivatives of the potentials agree with forward AD duplicates") {
  struct Dup {
    GaugeCase gc;
    RFunc w11, w13;
  };
  const Cplx fA = Cplx(-3.0 / (2.0 * kSqrt2));
  const Cplx fB = I / (2.0 * kSqrt2);
  std::vector<Dup> dups;
  dups.push_back({{GaugeCaseId::A, GaugeSign::minus, GaugeVariant::complex_form},
                  RFunc([fA](const auto& r) { return fA * exp((-I / 3.0) * r); }),
                  RFunc([fA](const auto& r) { return (I / 3.0) * fA * exp((-I / 3.0) * r); })});
  dups.push_back({{GaugeCaseId::B, GaugeSign::plus, GaugeVariant::complex_form},
                  RFunc([fB](const auto& r) { return fB * exp((3.0 * I) * r); }),
                  RFunc([fB](const auto& r) { return -3.0 * I * fB * exp((3.0 * I) * r); })});
  dups.push_back({{GaugeCaseId::A, GaugeSign::minus, GaugeVariant::real_form},
                  RFunc([fA](const auto& r) { return fA * cos(r / 3.0); }),
                  RFunc([](const auto& r) {
                    return Cplx(-1.0 / (2.0 * kSqrt2)) * sin(r / 3.0);
                  })});
  dups.push_back({{GaugeCaseId::B, GaugeSign::minus, GaugeVariant::real_form},
                  RFunc([](const auto& r) { return Cplx(1.0 / (2.0 * kSqrt2)) * cos(3.0 * r); }),
                  RFunc([](const auto& r) {
                    return Cplx(3.0 / (2.0 * kSqrt2)) * sin(3.0 * r);
                  })});

  PointSampler sampler(81);
  for (const auto& dup : dups) {
    const GaugePotential pot = gauge_potential(dup.gc);
    for (int n = 0; n < 20; ++n) {
      const Cplx r(sampler.next_r());
      CHECK(std::abs(pot.w11(r.real()) - dup.w11(r)) < 1e-14);
      CHECK(std::abs(pot.w13(r.real()) - dup.w13(r)) < 1e-14);
      CHECK(std::abs(pot.dw11(r.real()) - dup.w11.d1(r)) < 1e-13);
      CHECK(std::abs(pot.dw13(r.real()) - dup.w13.d1(r)) < 1e-13);
      CHECK(std::abs(pot.ddw11(r.real()) - dup.w11.d2(r)) < 1e-13);
      CHECK(std::abs(pot.ddw13(r.real()) - dup.w13.d2(r)) < 1e-13);
    }
  }
}

TEST_CASE("covariant derivative on spinor doublets") {
  const GaugeCase gc{GaugeCaseId::A, GaugeSign::minus, GaugeVariant::complex_form};

  // constant (1, 0): D_0 psi = A_0 (1,0) = (0, 1/2)
  const Spinor e_up = Spinor::constant(1.0, 0.0);
  const Eigen::Vector2cd d0 = covariant_derivative(gc, 0, e_up, 0.4, 0.1);
  CHECK(std::abs(d0(0)) < 1e-15);
  CHECK(std::abs(d0(1) - Cplx(0.5)) < 1e-15);

  // zero spinor maps to zero
  const Spinor zero = Spinor::constant(0.0, 0.0);
  CHECK(covariant_derivative(gc, 1, zero, 0.4, 0.1).cwiseAbs().maxCoeff() == 0.0);

  // constant (0, 1) under D_1 at r=0: f (i/2, 1/6) with f = -3/(2 sqrt 2)
  const Spinor e_dn = Spinor::constant(0.0, 1.0);
  const Eigen::Vector2cd d1 = covariant_derivative(gc, 1, e_dn, 0.0, 0.0);
  const Cplx f0(-3.0 / (2.0 * kSqrt2));
  CHECK(std::abs(d1(0) - f0 * (I / 2.0)) < 1e-15);
  CHECK(std::abs(d1(1) - f0 * (1.0 / 6.0)) < 1e-15);

  // a non-constant doublet picks up the partial-derivative term
  const Spinor wave([](const auto& x) {
    using T = std::remove_cvref_t<decltype(x[0])>;
    return std::array<T, 2>{exp(x[0]), sin(x[1])};
  });
  const Eigen::Vector2cd dw = covariant_derivative(gc, 0, wave, 0.2, 0.3);
  const GaugePotential pot = gauge_potential(gc);
  const Eigen::Vector2cd expect =
      Eigen::Vector2cd(std::exp(0.2), 0.0) +
      pot.A0() * Eigen::Vector2cd(std::exp(0.2), std::sin(0.3));
  CHECK((dw - expect).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("field strength at r = 0, pinned values") {
  const double c = 2.0 * kSqrt2 / 3.0;
  CHECK(mat_dist(field_strength({GaugeCaseId::A, GaugeSign::minus, GaugeVariant::complex_form},
                                0.0),
                 c * pauli_rep(3)) < 1e-15);
  CHECK(mat_dist(field_strength({GaugeCaseId::B, GaugeSign::minus, GaugeVariant::complex_form},
                                0.0),
                 2.0 * kSqrt2 * I * pauli_rep(3)) < 1e-15);
  // real case B vanishes at r = pi/6 (cos(pi/2) = 0)
  CHECK(field_strength({GaugeCaseId::B, GaugeSign::minus, GaugeVariant::real_form},
                       std::numbers::pi / 6.0)
            .cwiseAbs()
            .maxCoeff() < 1e-15);
}

TEST_CASE("bracket tables match the closed forms") {
  const std::vector<GaugeCase> cases = {
      {GaugeCaseId::A, GaugeSign::minus, GaugeVariant::complex_form},
      {GaugeCaseId::A, GaugeSign::plus, GaugeVariant::complex_form},
      {GaugeCaseId::A, GaugeSign::minus, GaugeVariant::real_form},
      {GaugeCaseId::A, GaugeSign::minus, GaugeVariant::sign_reversed},
      {GaugeCaseId::A, GaugeSign::plus, GaugeVariant::sign_reversed},
      {GaugeCaseId::B, GaugeSign::minus, GaugeVariant::complex_form},
      {GaugeCaseId::B, GaugeSign::plus, GaugeVariant::complex_form},
      {GaugeCaseId::B, GaugeSign::minus, GaugeVariant::real_form},
  };
  PointSampler sampler(82);
  for (const auto& gc : cases)
    for (int n = 0; n < 50; ++n) CHECK(bracket_table(gc, sampler.next_r()).max_residual < 1e-10);
}

TEST_CASE("pinned bracket values at r = 0") {
  // case A minus: [D1, F] = -E^2
  const auto ta = bracket_table({GaugeCaseId::A, GaugeSign::minus, GaugeVariant::complex_form},
                                0.0);
  CHECK(mat_dist(ta.d1F, -pauli_rep(2)) < 1e-15);

  // case A real: [D0, F] = (2 sqrt2/3) E^1 at r = 0
  const auto tr = bracket_table({GaugeCaseId::A, GaugeSign::minus, GaugeVariant::real_form}, 0.0);
  CHECK(mat_dist(tr.d0F, (2.0 * kSqrt2 / 3.0) * pauli_rep(1)) < 1e-15);

  // sign-reversed case A at r = 0: [d0, F] = -(2 sqrt2/3) E^1 -+ (2 sqrt2/9) i E^3
  for (const auto sign : {GaugeSign::minus, GaugeSign::plus}) {
    const double s = sign == GaugeSign::minus ? 1.0 : -1.0;
    const auto ts = bracket_table({GaugeCaseId::A, sign, GaugeVariant::sign_reversed}, 0.0);
    const SpinMatrix want =
        -(2.0 * kSqrt2 / 3.0) * pauli_rep(1) - s * (2.0 * kSqrt2 / 9.0) * I * pauli_rep(3);
    CHECK(mat_dist(ts.d0F, want) < 1e-15);
  }
}

TEST_CASE("rescaled relations: [Dt0, Dt1] = E^3 exactly and the phase brackets") {
  PointSampler sampler(83);
  for (const auto sign : {GaugeSign::minus, GaugeSign::plus}) {
    const GaugeCase gc{GaugeCaseId::A, sign, GaugeVariant::complex_form};
    for (int n = 0; n < 50; ++n) {
      const auto t = rescaled_brackets(gc, sampler.next_r());
      CHECK(t.max_residual < 1e-10);
      CHECK(mat_dist(t.F, pauli_rep(3)) < 1e-12);
    }
    const auto t0 = rescaled_brackets(gc, 0.0);
    const double amp = 3.0 * kSqrt2 / 4.0;
    CHECK(mat_dist(t0.d0F, amp * pauli_rep(1)) < 1e-12);
    CHECK(mat_dist(t0.d1F, -amp * pauli_rep(2)) < 1e-12);
  }
  CHECK_THROWS_AS(
      rescaled_brackets({GaugeCaseId::B, GaugeSign::minus, GaugeVariant::complex_form}, 0.0),
      UnsupportedCase);
  CHECK_THROWS_AS(
      rescaled_brackets({GaugeCaseId::A, GaugeSign::minus, GaugeVariant::real_form}, 0.0),
      UnsupportedCase);
}

TEST_CASE("sign-reversed case B is not a supported construction") {
  GaugeCase gc{GaugeCaseId::B, GaugeSign::minus, GaugeVariant::sign_reversed};
  CHECK_THROWS_AS(gc.validate(), UnsupportedCase);
  CHECK_THROWS_AS(gauge_potential(gc), UnsupportedCase);
}

TEST_CASE("field strength agrees with the manifold Lie bracket through the Pauli map") {
  // D0 = d/dr - E^2 and D1 = d/du + w11(r) E^1 + w13(r) E^3 as vector fields
  // on S^3 x Sigma^2; sigma_i(bracket) projects onto the Pauli generators.
  const std::vector<GaugeCase> cases = {
      {GaugeCaseId::A, GaugeSign::minus, GaugeVariant::complex_form},
      {GaugeCaseId::A, GaugeSign::plus, GaugeVariant::complex_form},
      {GaugeCaseId::B, GaugeSign::minus, GaugeVariant::complex_form},
      {GaugeCaseId::A, GaugeSign::minus, GaugeVariant::real_form},
      {GaugeCaseId::B, GaugeSign::minus, GaugeVariant::real_form},
  };
  PointSampler sampler(84);
  for (const auto& gc : cases) {
    const double s = gc.sign == GaugeSign::minus ? 1.0 : -1.0;
    const VectorField5 d0([](const auto& x) {
      using T = std::remove_cvref_t<decltype(x[0])>;
      const auto frame = su2_frame_rows(x);
      std::array<T, 5> v{};
      for (int j = 0; j < 5; ++j) v[j] = -frame[1][j];
      v[kR] += T(1.0);
      return v;
    });
    const VectorField5 d1([gc, s](const auto& x) {
      using T = std::remove_cvref_t<decltype(x[0])>;
      const auto frame = su2_frame_rows(x);
      const Cplx i(0.0, 1.0);
      T w11, w13;
      if (gc.id == GaugeCaseId::A) {
        if (gc.variant == GaugeVariant::complex_form) {
          const T ph = exp((-s * i / 3.0) * x[kR]);
          w11 = Cplx(-3.0 / (2.0 * kSqrt2)) * ph;
          w13 = s * (i / 3.0) * Cplx(-3.0 / (2.0 * kSqrt2)) * ph;
        } else {
          w11 = Cplx(-3.0 / (2.0 * kSqrt2)) * cos(x[kR] / 3.0);
          w13 = Cplx(-1.0 / (2.0 * kSqrt2)) * sin(x[kR] / 3.0);
        }
      } else {
        if (gc.variant == GaugeVariant::complex_form) {
          const T ph = exp((-s * 3.0 * i) * x[kR]);
          w11 = (i / (2.0 * kSqrt2)) * ph;
          w13 = -s * Cplx(3.0 / (2.0 * kSqrt2)) * ph;
        } else {
          w11 = Cplx(1.0 / (2.0 * kSqrt2)) * cos(3.0 * x[kR]);
          w13 = Cplx(3.0 / (2.0 * kSqrt2)) * sin(3.0 * x[kR]);
        }
      }
      std::array<T, 5> v{};
      for (int j = 0; j < 5; ++j) v[j] = w11 * frame[0][j] + w13 * frame[2][j];
      v[kU] += T(1.0);
      return v;
    });

    for (int n = 0; n < 10; ++n) {
      const Point5 p = sampler.next();
      const Row5c br = lie_bracket(d0, d1, p);
      // project to the frame components and map through the Pauli matrices
      const auto sig = su2_coframe(p);
      SpinMatrix projected = SpinMatrix::Zero();
      for (int a = 0; a < 3; ++a) {
        Cplx comp(0.0);
        for (int j = 0; j < 5; ++j) comp += sig[a][j] * br[j];
        projected += comp * pauli_rep(a + 1);
      }
      CHECK(std::abs(br[kR]) < 1e-11);
      CHECK(std::abs(br[kU]) < 1e-11);
      CHECK(mat_dist(projected, field_strength(gc, p.r.real())) < 1e-9);
    }
  }
}

TEST_CASE("Jacobi identity for the operator triple") {
  const std::vector<GaugeCase> cases = {
      {GaugeCaseId::A, GaugeSign::minus, GaugeVariant::complex_form},
      {GaugeCaseId::B, GaugeSign::plus, GaugeVariant::complex_form},
      {GaugeCaseId::B, GaugeSign::minus, GaugeVariant::real_form},
  };
  PointSampler sampler(85);
  for (const auto& gc : cases) {
    const GaugePotential pot = gauge_potential(gc);
    for (int n = 0; n < 20; ++n) {
      const double r = sampler.next_r();
      const SpinMatrix a0 = pot.A0();
      const SpinMatrix a1 = pot.A1(r);
      const SpinMatrix F = pot.dA1(r) + a0 * a1 - a1 * a0;
      const SpinMatrix dF = pot.ddA1(r) + a0 * pot.dA1(r) - pot.dA1(r) * a0;
      // [[D0,D1],F] = 0; [[D1,F],D0] = -(d/dr)[A1,F] + [[A1,F],A0];
      // [[F,D0],D1] = [N, A1] with N = -(dF + [A0,F]).
      const SpinMatrix m1 = a1 * F - F * a1;
      const SpinMatrix dm1 =
          pot.dA1(r) * F - F * pot.dA1(r) + a1 * dF - dF * a1;
      const SpinMatrix term2 = -dm1 + (m1 * a0 - a0 * m1);
      const SpinMatrix nmat = -(dF + (a0 * F - F * a0));
      const SpinMatrix term3 = nmat * a1 - a1 * nmat;
      CHECK((term2 + term3).cwiseAbs().maxCoeff() < 1e-9);
    }
  }
}
