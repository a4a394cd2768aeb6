#include "su2pf/curvature.hpp"

#include <cmath>

namespace su2pf {

template <int N>
CurvatureTensors<N> curvature_at(const MetricField<N>& gf,
                                 const typename MetricField<N>::Coords& x) {
  using MatN = typename CurvatureTensors<N>::MatN;
  CurvatureTensors<N> t{};

  t.metric = gf.value(x);
  Eigen::PartialPivLU<MatN> lu(t.metric);
  if (std::abs(lu.determinant()) < 1e-12)
    throw SingularMetric("curvature_at: |det g| below 1e-12");
  t.metric_inv = lu.inverse();

  std::array<MatN, N> dg;
  for (int a = 0; a < N; ++a) dg[a] = gf.d1(x, a);
  std::array<std::array<MatN, N>, N> ddg;
  for (int a = 0; a < N; ++a)
    for (int b = a; b < N; ++b) {
      ddg[a][b] = gf.d2(x, a, b);
      if (b != a) ddg[b][a] = ddg[a][b];
    }

  // Christoffel symbols and their exact coordinate derivatives.
  for (int r = 0; r < N; ++r)
    for (int m = 0; m < N; ++m)
      for (int n = 0; n < N; ++n) {
        Cplx s(0.0);
        for (int l = 0; l < N; ++l)
          s += t.metric_inv(r, l) * (dg[m](l, n) + dg[n](l, m) - dg[l](m, n));
        t.gamma[r][m][n] = 0.5 * s;
      }

  std::array<MatN, N> dginv;
  for (int a = 0; a < N; ++a) dginv[a] = -t.metric_inv * dg[a] * t.metric_inv;

  // dgamma[s][r][m][n] = d_s Gamma^r_{mn}
  typename CurvatureTensors<N>::T4 dgamma{};
  for (int s = 0; s < N; ++s)
    for (int r = 0; r < N; ++r)
      for (int m = 0; m < N; ++m)
        for (int n = 0; n < N; ++n) {
          Cplx acc(0.0);
          for (int l = 0; l < N; ++l) {
            acc += dginv[s](r, l) * (dg[m](l, n) + dg[n](l, m) - dg[l](m, n));
            acc += t.metric_inv(r, l) * (ddg[s][m](l, n) + ddg[s][n](l, m) - ddg[s][l](m, n));
          }
          dgamma[s][r][m][n] = 0.5 * acc;
        }

  // (1,3) Riemann, then lower the first index.
  typename CurvatureTensors<N>::T4 riem13{};
  for (int r = 0; r < N; ++r)
    for (int s = 0; s < N; ++s)
      for (int m = 0; m < N; ++m)
        for (int n = 0; n < N; ++n) {
          Cplx acc = dgamma[m][r][n][s] - dgamma[n][r][m][s];
          for (int l = 0; l < N; ++l)
            acc += t.gamma[r][m][l] * t.gamma[l][n][s] - t.gamma[r][n][l] * t.gamma[l][m][s];
          riem13[r][s][m][n] = acc;
        }

  for (int r = 0; r < N; ++r)
    for (int s = 0; s < N; ++s)
      for (int m = 0; m < N; ++m)
        for (int n = 0; n < N; ++n) {
          Cplx acc(0.0);
          for (int l = 0; l < N; ++l) acc += t.metric(r, l) * riem13[l][s][m][n];
          t.riem[r][s][m][n] = acc;
        }

  for (int s = 0; s < N; ++s)
    for (int n = 0; n < N; ++n) {
      Cplx acc(0.0);
      for (int m = 0; m < N; ++m) acc += riem13[m][s][m][n];
      t.ricci(s, n) = acc;
    }

  t.scalar = Cplx(0.0);
  for (int s = 0; s < N; ++s)
    for (int n = 0; n < N; ++n) t.scalar += t.metric_inv(s, n) * t.ricci(s, n);

  if constexpr (N > 2) {
    t.schouten =
        (t.ricci - (t.scalar / (2.0 * (N - 1))) * t.metric) * (1.0 / static_cast<double>(N - 2));
    // Weyl = Riem - g (ku-no) P
    for (int r = 0; r < N; ++r)
      for (int s = 0; s < N; ++s)
        for (int m = 0; m < N; ++m)
          for (int n = 0; n < N; ++n) {
            const Cplx kn = t.metric(r, m) * t.schouten(s, n) + t.metric(s, n) * t.schouten(r, m) -
                            t.metric(r, n) * t.schouten(s, m) - t.metric(s, m) * t.schouten(r, n);
            t.weyl[r][s][m][n] = t.riem[r][s][m][n] - kn;
          }
  } else {
    t.schouten.setZero();
  }
  return t;
}

template CurvatureTensors<2> curvature_at(const MetricField<2>&, const std::array<Cplx, 2>&);
template CurvatureTensors<5> curvature_at(const MetricField<5>&, const std::array<Cplx, 5>&);

Cplx weyl_frame_component(const MetricField<5>& gf, const Coframe5& frame,
                          const std::array<int, 4>& idx, const Point5& p) {
  const auto x = p.coords();
  const Mat5c rows = frame.value(x);
  Eigen::PartialPivLU<Mat5c> lu(rows);
  if (std::abs(lu.determinant()) < 1e-12)
    throw SingularCoframe("weyl_frame_component: coframe determinant below 1e-12");
  const Mat5c inv = lu.inverse();  // column j = dual frame vector of row j

  const auto t = curvature_at(gf, x);
  const int i0 = idx[0] - 1, i1 = idx[1] - 1, i2 = idx[2] - 1, i3 = idx[3] - 1;
  Cplx acc(0.0);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c)
        for (int d = 0; d < 5; ++d)
          acc += t.weyl[a][b][c][d] * inv(a, i0) * inv(b, i1) * inv(c, i2) * inv(d, i3);
  return acc;
}

Cplx weyl_component_closed_form(Cplx a2, Cplx c2) {
  const Cplx a2sq = a2 * a2, c2sq = c2 * c2;
  return -(1.0 / 300.0) * (9.0 * a2sq + c2sq) * (a2sq + 9.0 * c2sq) /
         (std::pow(a2, 8.0 / 3.0) * std::pow(a2sq + c2sq, 2.0 / 3.0));
}

FlatnessScan weyl_flat(const MetricField<5>& gf, int npoints, double tol, std::uint64_t seed,
                       const PointFilter& keep) {
  PointSampler sampler(seed);
  FlatnessScan scan;
  for (int n = 0; n < npoints; ++n) {
    const Point5 p = keep ? sampler.next_where(keep) : sampler.next();
    const auto t = curvature_at(gf, p.coords());
    scan.max_abs = std::max(scan.max_abs, weyl_norm_inf(t));
  }
  scan.flat = scan.max_abs < tol;
  return scan;
}

double max_ricci_residual(const MetricField<5>& gf, int npoints, std::uint64_t seed,
                          const PointFilter& keep) {
  PointSampler sampler(seed);
  double worst = 0.0;
  for (int n = 0; n < npoints; ++n) {
    const Point5 p = keep ? sampler.next_where(keep) : sampler.next();
    const auto t = curvature_at(gf, p.coords());
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) worst = std::max(worst, std::abs(t.ricci(i, j)));
  }
  return worst;
}

MetricField<5> conformal_rescale(const MetricField<5>& gf, const ScalarField5& omega) {
  return MetricField<5>([gf, omega](const auto& x) {
    auto g = gf.eval(x);
    const auto w = omega.eval(x);
    const auto w2 = w * w;
    for (auto& e : g) e = w2 * e;
    return g;
  });
}

Cplx gauss_curvature(const MetricField<2>& gf, const std::array<Cplx, 2>& x) {
  return 0.5 * curvature_at(gf, x).scalar;
}

template <int N>
double riemann_symmetry_residual(const CurvatureTensors<N>& t) {
  double worst = 0.0;
  for (int r = 0; r < N; ++r)
    for (int s = 0; s < N; ++s)
      for (int m = 0; m < N; ++m)
        for (int n = 0; n < N; ++n) {
          const Cplx v = t.riem[r][s][m][n];
          worst = std::max(worst, std::abs(v + t.riem[s][r][m][n]));
          worst = std::max(worst, std::abs(v + t.riem[r][s][n][m]));
          worst = std::max(worst, std::abs(v - t.riem[m][n][r][s]));
        }
  return worst;
}

template <int N>
double first_bianchi_residual(const CurvatureTensors<N>& t) {
  double worst = 0.0;
  for (int r = 0; r < N; ++r)
    for (int s = 0; s < N; ++s)
      for (int m = 0; m < N; ++m)
        for (int n = 0; n < N; ++n)
          worst = std::max(
              worst, std::abs(t.riem[r][s][m][n] + t.riem[r][m][n][s] + t.riem[r][n][s][m]));
  return worst;
}

template double riemann_symmetry_residual(const CurvatureTensors<2>&);
template double riemann_symmetry_residual(const CurvatureTensors<5>&);
template double first_bianchi_residual(const CurvatureTensors<2>&);
template double first_bianchi_residual(const CurvatureTensors<5>&);

double weyl_trace_residual(const CurvatureTensors<5>& t) {
  double worst = 0.0;
  // Contract every index pair with the inverse metric; all must vanish.
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      Cplx tr13(0.0), tr14(0.0), tr23(0.0), tr24(0.0), tr12(0.0), tr34(0.0);
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
          tr13 += t.metric_inv(i, j) * t.weyl[i][a][j][b];
          tr14 += t.metric_inv(i, j) * t.weyl[i][a][b][j];
          tr23 += t.metric_inv(i, j) * t.weyl[a][i][j][b];
          tr24 += t.metric_inv(i, j) * t.weyl[a][i][b][j];
          tr12 += t.metric_inv(i, j) * t.weyl[i][j][a][b];
          tr34 += t.metric_inv(i, j) * t.weyl[a][b][i][j];
        }
      for (const Cplx& v : {tr13, tr14, tr23, tr24, tr12, tr34})
        worst = std::max(worst, std::abs(v));
    }
  return worst;
}

double weyl_norm_inf(const CurvatureTensors<5>& t) {
  double worst = 0.0;
  for (int r = 0; r < 5; ++r)
    for (int s = 0; s < 5; ++s)
      for (int m = 0; m < 5; ++m)
        for (int n = 0; n < 5; ++n) worst = std::max(worst, std::abs(t.weyl[r][s][m][n]));
  return worst;
}

CurvatureTensors<5>::T4 weyl13(const CurvatureTensors<5>& t) {
  CurvatureTensors<5>::T4 out{};
  for (int r = 0; r < 5; ++r)
    for (int s = 0; s < 5; ++s)
      for (int m = 0; m < 5; ++m)
        for (int n = 0; n < 5; ++n) {
          Cplx acc(0.0);
          for (int l = 0; l < 5; ++l) acc += t.metric_inv(r, l) * t.weyl[l][s][m][n];
          out[r][s][m][n] = acc;
        }
  return out;
}

}  // namespace su2pf
