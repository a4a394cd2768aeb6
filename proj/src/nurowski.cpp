#include "su2pf/nurowski.hpp"

#include <cmath>
#include <numbers>

namespace su2pf {

namespace {
constexpr double kEps = 1e-14;
const double kInvTwoSqrt2 = 1.0 / (2.0 * std::numbers::sqrt2);
}  // namespace

AdaptedCoframe adapted_constants(const SystemParams& params) {
  if (std::abs(params.a2.imag()) > kEps || params.a2.real() <= 0.0)
    throw BranchRestriction("adapted_constants: a2 must be real and positive");
  if (!params.simplified())
    throw BranchRestriction("adapted_constants: requires the simplified system (a1=c1=b2=0)");
  const Cplx a2sq = params.a2 * params.a2;
  const Cplx csq = params.c2 * params.c2;
  if (std::abs(a2sq + csq) < kEps)
    throw DegenerateParams("adapted_constants: a2^2 + c2^2 = 0");

  AdaptedCoframe ac;
  ac.params = params;
  ac.lambda = std::pow(a2sq / (a2sq + csq), 1.0 / 3.0);
  ac.Q = -(0.1) * (7.0 * a2sq + 3.0 * csq) /
         (std::pow(params.a2, 2.0 / 3.0) * std::pow(a2sq + csq, 2.0 / 3.0));
  ac.S = -ac.Q;
  ac.P = ac.R = ac.T = ac.U = Cplx(0.0);
  return ac;
}

Coframe5 adapted_coframe(const AdaptedCoframe& ac) {
  return Coframe5([ac](const auto& x) {
    using T = std::remove_cvref_t<decltype(x[0])>;
    const auto w = omega_rows(ac.params, x);
    const Cplx li = Cplx(1.0) / ac.lambda;
    std::array<std::array<T, 5>, 5> th;
    for (int j = 0; j < 5; ++j) {
      th[0][j] = w[0][j];
      th[1][j] = w[1][j];
      th[2][j] = ac.lambda * w[2][j];
      th[3][j] = li * w[3][j] + ac.P * w[0][j] + ac.Q * w[1][j] + ac.R * w[2][j];
      th[4][j] = li * w[4][j] + ac.S * w[0][j] + ac.T * w[1][j] + ac.U * w[2][j];
    }
    std::array<T, 25> flat;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) flat[i * 5 + j] = th[i][j];
    return flat;
  });
}

ConnectionSolution solve_connection_forms(const Coframe5& theta, const Point5& p) {
  // Unknowns x[j*5 + m]: theta_{m+1}-coefficient of Omega_{j+1}.
  // Equations: the 10 wedge coefficients of each of the five structure
  // equations, with the inhomogeneous theta_i ^ theta_j terms moved to the
  // right-hand side.
  struct Term {
    int eq, s, j;
    double coef;
  };
  static const Term terms[] = {
      {0, 0, 0, 2.0}, {0, 0, 3, 1.0}, {0, 1, 1, 1.0},
      {1, 0, 2, 1.0}, {1, 1, 0, 1.0}, {1, 1, 3, 2.0},
      {2, 0, 4, 1.0}, {2, 1, 5, 1.0}, {2, 2, 0, 1.0}, {2, 2, 3, 1.0},
      {3, 0, 6, 1.0}, {3, 2, 5, 4.0 / 3.0}, {3, 3, 0, 1.0}, {3, 4, 1, 1.0},
      {4, 1, 6, 1.0}, {4, 2, 4, -4.0 / 3.0}, {4, 3, 2, 1.0}, {4, 4, 3, 1.0},
  };

  const auto x = p.coords();
  const Mat5c rows = theta.value(x);

  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(50, 35);
  Eigen::VectorXcd b = Eigen::VectorXcd::Zero(50);

  for (int i = 0; i < 5; ++i) {
    const TwoForm dth = exterior_derivative(theta.row(i), p);
    const auto coeffs = decompose_two_form(rows, dth);
    for (int kk = 0; kk < 10; ++kk) b(i * 10 + kk) = coeffs[kk];
  }
  b(0 * 10 + pair_index(2, 3)) -= 1.0;  // theta3 ^ theta4 in d theta1
  b(1 * 10 + pair_index(2, 4)) -= 1.0;  // theta3 ^ theta5 in d theta2
  b(2 * 10 + pair_index(3, 4)) -= 1.0;  // theta4 ^ theta5 in d theta3

  for (const Term& t : terms) {
    for (int m = 0; m < 5; ++m) {
      if (m == t.s) continue;
      const int row = t.eq * 10 + (t.s < m ? pair_index(t.s, m) : pair_index(m, t.s));
      const double sign = t.s < m ? 1.0 : -1.0;
      A(row, t.j * 5 + m) += t.coef * sign;
    }
  }

  ConnectionSolution sol;
  const Eigen::VectorXcd xsol = A.completeOrthogonalDecomposition().solve(b);
  const Eigen::VectorXcd res = A * xsol - b;
  sol.residual = res.cwiseAbs().maxCoeff();
  for (int j = 0; j < 7; ++j)
    for (int m = 0; m < 5; ++m) sol.omega_conn(j, m) = xsol(j * 5 + m);
  return sol;
}

MetricField<5> nurowski_metric_g(const SystemParams& params) {
  const AdaptedCoframe ac = adapted_constants(params);
  const Coframe5 theta = adapted_coframe(ac);
  return MetricField<5>([theta](const auto& x) {
    using T = std::remove_cvref_t<decltype(x[0])>;
    const auto flat = theta.eval(x);
    std::array<std::array<T, 5>, 5> th;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) th[i][j] = flat[i * 5 + j];
    std::array<T, 25> g{};
    add_sym_product(g, Cplx(2.0), th[0], th[4]);
    add_sym_product(g, Cplx(-2.0), th[1], th[3]);
    add_sym_product(g, Cplx(4.0 / 3.0), th[2], th[2]);
    return g;
  });
}

MetricField<5> nurowski_metric_gtilde(const SystemParams& params) {
  const Cplx a2sq = params.a2 * params.a2;
  const Cplx csq = params.c2 * params.c2;
  if (std::abs(a2sq + csq) < kEps)
    throw DegenerateParams("nurowski_metric_gtilde: a2^2 + c2^2 = 0");
  const Cplx mu = a2sq / (a2sq + csq);
  const Cplx c33 = (4.0 / 3.0) * mu;
  const Cplx c11 = (1.0 / 5.0) * mu * (7.0 * a2sq + 3.0 * csq) / a2sq;
  return MetricField<5>([params, c33, c11](const auto& x) {
    using T = std::remove_cvref_t<decltype(x[0])>;
    const auto w = omega_rows(params, x);
    std::array<T, 25> g{};
    add_sym_product(g, Cplx(2.0), w[0], w[4]);
    add_sym_product(g, Cplx(-2.0), w[1], w[3]);
    add_sym_product(g, c33, w[2], w[2]);
    add_sym_product(g, c11, w[0], w[0]);
    add_sym_product(g, c11, w[1], w[1]);
    return g;
  });
}

namespace {

// Standard rows omega_1..omega_5 of the case systems.
template <class T>
std::array<std::array<T, 5>, 5> case_rows_standard(const CaseSpec& spec,
                                                   const std::array<T, 5>& x) {
  const auto sig = su2_sigma_rows(x);
  const double s = spec.sign == SignBranch::minus ? 1.0 : -1.0;  // upper/lower sign branch
  const T& r = x[kR];
  const Cplx im(0.0, 1.0);

  std::array<std::array<T, 5>, 5> rows{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 5; ++j) rows[i][j] = sig[i][j];
  rows[1][kR] += T(1.0);  // omega2 = sigma2 + dr
  rows[3][kR] = T(1.0);   // omega4 = dr

  if (spec.id == CaseId::A) {
    if (spec.variant == Variant::complex_form) {
      const T phase = exp((-s * im / 3.0) * r);
      rows[0][kU] += (3.0 * kInvTwoSqrt2) * phase;
      rows[2][kU] += (s * im * kInvTwoSqrt2) * phase;
      rows[4][kU] = (-3.0 * kInvTwoSqrt2) * phase;
    } else {
      rows[0][kU] += (3.0 * kInvTwoSqrt2) * cos(r / 3.0);
      rows[2][kU] += kInvTwoSqrt2 * sin(r / 3.0);
      rows[4][kU] = (-3.0 * kInvTwoSqrt2) * cos(r / 3.0);
    }
  } else {
    if (spec.variant == Variant::complex_form) {
      const T phase = exp((-s * 3.0 * im) * r);
      rows[0][kU] += (-im * kInvTwoSqrt2) * phase;
      rows[2][kU] += (s * 3.0 * kInvTwoSqrt2) * phase;
      rows[4][kU] = (im * kInvTwoSqrt2) * phase;
    } else {
      rows[0][kU] += -kInvTwoSqrt2 * cos(3.0 * r);
      rows[2][kU] += (-3.0 * kInvTwoSqrt2) * sin(3.0 * r);
      rows[4][kU] = kInvTwoSqrt2 * cos(3.0 * r);
    }
  }
  return rows;
}

// Sign-reversed rows: bar1 = sigma1 + omega5, bar2 = sigma2 - omega4,
// bar3 = omega3; omega4, omega5 unchanged.
template <class T>
std::array<std::array<T, 5>, 5> case_rows_reversed(const std::array<std::array<T, 5>, 5>& std_rows,
                                                   const std::array<T, 5>& x) {
  const auto sig = su2_sigma_rows(x);
  std::array<std::array<T, 5>, 5> rows = std_rows;
  for (int j = 0; j < 5; ++j) {
    rows[0][j] = sig[0][j] + std_rows[4][j];
    rows[1][j] = sig[1][j] - std_rows[3][j];
  }
  return rows;
}

}  // namespace

Coframe5 case_coframe(const CaseSpec& spec) {
  return Coframe5([spec](const auto& x) {
    using T = std::remove_cvref_t<decltype(x[0])>;
    auto rows = case_rows_standard(spec, x);
    if (spec.system == SystemKind::sign_reversed) rows = case_rows_reversed(rows, x);
    std::array<T, 25> flat;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) flat[i * 5 + j] = rows[i][j];
    return flat;
  });
}

MetricField<5> case_metric(const CaseSpec& spec) {
  return MetricField<5>([spec](const auto& x) {
    using T = std::remove_cvref_t<decltype(x[0])>;
    const auto w = case_rows_standard(spec, x);
    const auto wb = case_rows_reversed(w, x);
    std::array<T, 25> g{};
    add_sym_product(g, Cplx(-2.0), w[3], w[3]);
    add_sym_product(g, Cplx(-2.0), w[4], w[4]);
    const auto& primary = spec.system == SystemKind::standard ? wb : w;
    const auto& secondary = spec.system == SystemKind::standard ? w : wb;
    if (spec.id == CaseId::A) {
      for (int i = 0; i < 3; ++i) {
        add_sym_product(g, Cplx(0.5), primary[i], primary[i]);
        add_sym_product(g, Cplx(1.0), secondary[i], secondary[i]);
      }
    } else {
      add_sym_product(g, Cplx(0.5), primary[0], primary[0]);
      add_sym_product(g, Cplx(0.5), primary[1], primary[1]);
      add_sym_product(g, Cplx(-1.0 / 6.0), primary[2], primary[2]);
    }
    return g;
  });
}

std::pair<MetricField<5>, MetricField<5>> case_metric_forms(const CaseSpec& spec) {
  if (spec.system != SystemKind::standard)
    throw UnsupportedCase("case_metric_forms: both closed forms exist for the standard system only");
  MetricField<5> specialised([spec](const auto& x) {
    using T = std::remove_cvref_t<decltype(x[0])>;
    const auto w = case_rows_standard(spec, x);
    std::array<T, 25> g{};
    add_sym_product(g, Cplx(2.0), w[0], w[4]);
    add_sym_product(g, Cplx(-2.0), w[1], w[3]);
    if (spec.id == CaseId::A) {
      add_sym_product(g, Cplx(1.5), w[2], w[2]);
      add_sym_product(g, Cplx(1.5), w[0], w[0]);
      add_sym_product(g, Cplx(1.5), w[1], w[1]);
    } else {
      add_sym_product(g, Cplx(-1.0 / 6.0), w[2], w[2]);
      add_sym_product(g, Cplx(0.5), w[0], w[0]);
      add_sym_product(g, Cplx(0.5), w[1], w[1]);
    }
    return g;
  });
  return {std::move(specialised), case_metric(spec)};
}

MetricField<2> surface_metric(CaseId id) {
  return MetricField<2>([id](const auto& x) {
    using T = std::remove_cvref_t<decltype(x[0])>;
    const T& r = x[0];
    std::array<T, 4> g{};
    g[0] = T(1.0);
    if (id == CaseId::A) {
      const T c = cos(r / 3.0);
      g[3] = (9.0 / 8.0) * c * c;
    } else {
      const T c = cos(3.0 * r);
      g[3] = (1.0 / 8.0) * c * c;
    }
    return g;
  });
}

PointFilter case_point_filter(const CaseSpec& spec) {
  if (spec.id == CaseId::B && spec.variant == Variant::real_form)
    return [](const Point5& p) { return std::abs(std::cos(3.0 * p.r.real())) > 0.3; };
  return {};
}

}  // namespace su2pf
