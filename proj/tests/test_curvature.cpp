#include <doctest.h>

#include <numbers>

#include "su2pf/curvature.hpp"
#include "su2pf/nurowski.hpp"

using namespace su2pf;

namespace {
const Cplx I(0.0, 1.0);

MetricField<2> flat_plane() {
  return MetricField<2>([](const auto& x) {
    using T = std::remove_cvref_t<decltype(x[0])>;
    (void)x;
    std::array<T, 4> g{};
    g[0] = T(1.0);
    g[3] = T(1.0);
    return g;
  });
}
}  // namespace

TEST_CASE("flat 5-metric has vanishing curvature tensors") {
  const MetricField<5> flat([](const auto& x) {
    using T = std::remove_cvref_t<decltype(x[0])>;
    (void)x;
    std::array<T, 25> g{};
    for (int i = 0; i < 5; ++i) g[i * 5 + i] = T(1.0);
    return g;
  });
  const auto t = curvature_at(flat, std::array<Cplx, 5>{0.1, 1.0, 0.2, 0.3, 0.4});
  CHECK(weyl_norm_inf(t) == 0.0);
  CHECK(std::abs(t.scalar) == 0.0);
  for (int r = 0; r < 5; ++r)
    for (int m = 0; m < 5; ++m)
      for (int n = 0; n < 5; ++n) CHECK(std::abs(t.gamma[r][m][n]) == 0.0);
}

TEST_CASE("2D polar coordinates: Gamma^r_uu = -r and zero curvature") {
  const MetricField<2> polar([](const auto& x) {
    using T = std::remove_cvref_t<decltype(x[0])>;
    std::array<T, 4> g{};
    g[0] = T(1.0);
    g[3] = x[0] * x[0];
    return g;
  });
  const auto t = curvature_at(polar, std::array<Cplx, 2>{0.7, 0.3});
  CHECK(std::abs(t.gamma[0][1][1] - Cplx(-0.7)) < 1e-12);
  CHECK(std::abs(t.gamma[1][0][1] - Cplx(1.0 / 0.7)) < 1e-12);
  CHECK(std::abs(gauss_curvature(polar, {0.7, 0.3})) < 1e-12);
}

TEST_CASE("second-derivative accuracy: Christoffels of diag(1, e^{2r}) and K = -1") {
  const MetricField<2> hyp([](const auto& x) {
    using T = std::remove_cvref_t<decltype(x[0])>;
    std::array<T, 4> g{};
    g[0] = T(1.0);
    g[3] = exp(Cplx(2.0) * x[0]);
    return g;
  });
  const double r = 0.4;
  const auto t = curvature_at(hyp, std::array<Cplx, 2>{r, 0.1});
  // hand formulas: Gamma^r_{uu} = -e^{2r}, Gamma^u_{ru} = 1
  CHECK(std::abs(t.gamma[0][1][1] - Cplx(-std::exp(2.0 * r))) < 1e-10);
  CHECK(std::abs(t.gamma[1][0][1] - Cplx(1.0)) < 1e-10);
  CHECK(std::abs(gauss_curvature(hyp, {r, 0.1}) - Cplx(-1.0)) < 1e-10);
}

TEST_CASE("round unit 2-sphere has K = +1 under the documented convention") {
  const MetricField<2> sphere([](const auto& x) {
    using T = std::remove_cvref_t<decltype(x[0])>;
    std::array<T, 4> g{};
    g[0] = T(1.0);
    const T s = sin(x[0]);
    g[3] = s * s;
    return g;
  });
  CHECK(std::abs(gauss_curvature(sphere, {1.1, 0.3}) - Cplx(1.0)) < 1e-12);
}

TEST_CASE("Gauss curvature of the two surface-of-revolution metrics and the flat plane") {
  const MetricField<2> ga = surface_metric(CaseId::A);
  const MetricField<2> gb = surface_metric(CaseId::B);
  PointSampler sampler(61);
  for (int n = 0; n < 50; ++n) {
    const double ra = sampler.next_r();
    CHECK(std::abs(gauss_curvature(ga, {Cplx(ra), Cplx(0.2)}) - Cplx(1.0 / 9.0)) < 1e-9);
    double rb = sampler.next_r();
    while (std::abs(std::cos(3.0 * rb)) < 0.1) rb = sampler.next_r();
    CHECK(std::abs(gauss_curvature(gb, {Cplx(rb), Cplx(0.2)}) - Cplx(9.0)) < 1e-9);
  }
  // oracle: K = -h''/h for dr^2 + h(r)^2 du^2, by hand differentiation
  // h = (3/(2 sqrt 2)) cos(r/3): h'' = -(1/9) h -> K = 1/9; similarly 9 for cos(3r).
  CHECK(std::abs(gauss_curvature(flat_plane(), {0.5, 0.1})) < 1e-14);
}

TEST_CASE("r1m metric is Weyl-flat; generic parameters are not") {
  const MetricField<5> r1m =
      case_metric({CaseId::A, SignBranch::minus, Variant::real_form, SystemKind::standard});
  const auto scan = weyl_flat(r1m, 25, 1e-7, 62);
  CHECK(scan.flat);

  const auto generic = SystemParams::make(0, 1, 0, 1, 0, 1, 1);
  const auto scan2 = weyl_flat(nurowski_metric_gtilde(generic), 10, 1e-7, 63);
  CHECK_FALSE(scan2.flat);
  CHECK(scan2.max_abs > 1e-3);
}

TEST_CASE("the plus-branch case metrics are conformally flat too") {
  for (const CaseId id : {CaseId::A, CaseId::B})
    for (const SystemKind sys : {SystemKind::standard, SystemKind::sign_reversed}) {
      const CaseSpec spec{id, SignBranch::plus, Variant::complex_form, sys};
      CHECK(weyl_flat(case_metric(spec), 10, 1e-7, 72).flat);
    }
}

TEST_CASE("Weyl zero loci of gtilde") {
  for (const Cplx c2 : {I / 3.0, -I / 3.0, 3.0 * I, -3.0 * I}) {
    const auto params = SystemParams::make(0, 1, 0, 1, 0, c2, 1);
    const auto scan = weyl_flat(nurowski_metric_gtilde(params), 25, 1e-7, 64);
    CHECK(scan.flat);
  }
}

TEST_CASE("W_2424 matches the closed form on the omega-normalized duals") {
  PointSampler sampler(65);
  const Point5 p = sampler.next();

  const auto params10 = SystemParams::make(0, 1, 0, 1, 0, 0, 1);
  const Cplx w10 = weyl_frame_component(nurowski_metric_g(params10), omega_coframe(params10),
                                        {2, 4, 2, 4}, p);
  CHECK(std::abs(std::abs(w10) - 0.03) < 1e-8);

  const auto params13 = SystemParams::make(0, 1, 0, 1, 0, 3, 1);
  const Cplx w13c = weyl_frame_component(nurowski_metric_g(params13), omega_coframe(params13),
                                         {2, 4, 2, 4}, p);
  CHECK(std::abs(std::abs(w13c) - 1.05998) < 1e-4);
  CHECK(std::abs(std::abs(w13c) - std::abs(weyl_component_closed_form(1, 3))) < 1e-10);

  // convention-independent ratio test
  const auto params11 = SystemParams::make(0, 1, 0, 1, 0, 1, 1);
  const Cplx w11 = weyl_frame_component(nurowski_metric_g(params11), omega_coframe(params11),
                                        {2, 4, 2, 4}, p);
  const Cplx ratio = w11 / w10;
  const Cplx ratio_ref = weyl_component_closed_form(1, 1) / weyl_component_closed_form(1, 0);
  CHECK(std::abs(ratio - ratio_ref) / std::abs(ratio_ref) < 1e-6);
}

TEST_CASE("theta-frame component carries the lambda^2 scaling of theta4") {
  PointSampler sampler(66);
  const Point5 p = sampler.next();
  const auto params = SystemParams::make(0, 1, 0, 1, 0, 1, 1);
  const auto ac = adapted_constants(params);
  const MetricField<5> g = nurowski_metric_g(params);
  const Cplx w_theta = weyl_frame_component(g, adapted_coframe(ac), {2, 4, 2, 4}, p);
  const Cplx w_omega = weyl_frame_component(g, omega_coframe(params), {2, 4, 2, 4}, p);
  CHECK(std::abs(w_theta - ac.lambda * ac.lambda * w_omega) < 1e-12);
}

TEST_CASE("Ricci-flat conformal representative: the phase factor works, the identity does not") {
  const MetricField<5> gm =
      case_metric({CaseId::A, SignBranch::minus, Variant::complex_form, SystemKind::standard});
  const ScalarField5 phase([](const auto& x) { return exp((I / 3.0) * x[kR]); });
  CHECK(max_ricci_residual(conformal_rescale(gm, phase), 15, 67) < 1e-7);

  const ScalarField5 one([](const auto& x) {
    using T = std::remove_cvref_t<decltype(x[0])>;
    (void)x;
    return T(1.0);
  });
  CHECK(max_ricci_residual(conformal_rescale(gm, one), 5, 68) > 1e-3);

  // constant rescaling of a Ricci-flat metric stays Ricci-flat
  const ScalarField5 twice([](const auto& x) { return Cplx(2.0) * exp((I / 3.0) * x[kR]); });
  CHECK(max_ricci_residual(conformal_rescale(gm, twice), 10, 69) < 1e-7);
}

TEST_CASE("Riemann symmetries, Bianchi, trace-free Weyl on a generic metric") {
  const auto params = SystemParams::make(0, 1, 0, 1, 0, 1, 1);
  const MetricField<5> g = nurowski_metric_gtilde(params);
  PointSampler sampler(70);
  for (int n = 0; n < 10; ++n) {
    const auto t = curvature_at(g, sampler.next().coords());
    CHECK(riemann_symmetry_residual(t) < 1e-8);
    CHECK(first_bianchi_residual(t) < 1e-8);
    CHECK(weyl_trace_residual(t) < 1e-8);
  }
}

TEST_CASE("(1,3) Weyl is invariant under conformal rescaling") {
  const auto params = SystemParams::make(0, 1, 0, 1, 0, 1, 1);
  const MetricField<5> g = nurowski_metric_gtilde(params);
  const ScalarField5 c2([](const auto& x) {
    using T = std::remove_cvref_t<decltype(x[0])>;
    (void)x;
    return T(2.0);
  });
  const MetricField<5> g2 = conformal_rescale(g, c2);
  PointSampler sampler(71);
  for (int n = 0; n < 5; ++n) {
    const auto x = sampler.next().coords();
    const auto w1 = weyl13(curvature_at(g, x));
    const auto w2 = weyl13(curvature_at(g2, x));
    double worst = 0.0;
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b)
        for (int c = 0; c < 5; ++c)
          for (int d = 0; d < 5; ++d)
            worst = std::max(worst, std::abs(w1[a][b][c][d] - w2[a][b][c][d]));
    CHECK(worst < 1e-8);
  }
}

TEST_CASE("singular metrics are rejected") {
  const MetricField<2> degenerate([](const auto& x) {
    using T = std::remove_cvref_t<decltype(x[0])>;
    (void)x;
    std::array<T, 4> g{};
    g[0] = T(1.0);
    g[3] = T(0.0);
    return g;
  });
  CHECK_THROWS_AS(curvature_at(degenerate, std::array<Cplx, 2>{0.3, 0.1}), SingularMetric);
}
