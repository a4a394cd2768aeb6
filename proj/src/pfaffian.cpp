#include "su2pf/pfaffian.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace su2pf {

namespace {
constexpr double kParamEps = 1e-14;
}

SystemParams SystemParams::make(Cplx a1, Cplx b1, Cplx c1, Cplx a2, Cplx b2, Cplx c2, Cplx k) {
  SystemParams p;
  p.a1 = a1;
  p.b1 = b1;
  p.c1 = c1;
  p.a2 = a2;
  p.b2 = b2;
  p.c2 = c2;
  p.k = k;
  if (std::abs(p.norm1()) < kParamEps || std::abs(p.norm2()) < kParamEps)
    throw DegenerateParams("SystemParams: a square-root normalizer vanishes");
  if (std::abs(a2) < kParamEps)
    throw DegenerateParams("SystemParams: a2 = 0 (default profile undefined)");
  if (std::abs(k) < kParamEps) throw DegenerateParams("SystemParams: k = 0");
  const Cplx rate = (c2 / a2) * p.sign_b1();
  p.f = RFunc([k, rate](const auto& r) { return k * exp(-rate * r); });
  return p;
}

bool SystemParams::simplified() const {
  return std::abs(a1) < kParamEps && std::abs(c1) < kParamEps && std::abs(b2) < kParamEps &&
         std::abs(sign_b1() - Cplx(1.0)) < kParamEps;
}

MetricField<5> gsplit_metric(const SystemParams& params) {
  return MetricField<5>([params](const auto& x) {
    using T = std::remove_cvref_t<decltype(x[0])>;
    const auto sig = su2_sigma_rows(x);
    const T fr = params.f(x[kR]);
    std::array<T, 25> g{};
    for (int i = 0; i < 3; ++i) add_sym_product(g, Cplx(1.0), sig[i], sig[i]);
    g[kR * 5 + kR] -= T(1.0);
    g[kU * 5 + kU] -= fr * fr;
    return g;
  });
}

Coframe5 omega_coframe(const SystemParams& params) {
  return Coframe5([params](const auto& x) {
    using T = std::remove_cvref_t<decltype(x[0])>;
    const auto rows = omega_rows(params, x);
    std::array<T, 25> flat;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) flat[i * 5 + j] = rows[i][j];
    return flat;
  });
}

VectorField5 distribution_field(const SystemParams& params, int which) {
  if (which != 1 && which != 2)
    throw std::invalid_argument("distribution_field: which must be 1 or 2");
  return VectorField5([params, which](const auto& x) {
    using T = std::remove_cvref_t<decltype(x[0])>;
    const auto frame = su2_frame_rows(x);
    std::array<T, 5> v{};
    if (which == 1) {
      const Cplx coef[3] = {params.a1, params.b1, params.c1};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 5; ++j) v[j] += coef[i] * frame[i][j];
      v[kR] -= params.norm1();
    } else {
      const Cplx coef[3] = {params.a2, params.b2, params.c2};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 5; ++j) v[j] += coef[i] * frame[i][j];
      v[kU] -= params.norm2() / params.f(x[kR]);
    }
    return v;
  });
}

namespace {

// Expected coefficient pattern of d omega_i in the omega wedge basis for the
// simplified system (b1 = 1, a1 = c1 = b2 = 0, profile satisfying the ODE).
std::array<std::array<Cplx, 10>, 5> simplified_patterns(const SystemParams& p) {
  const Cplx q = p.c2 / p.a2;
  std::array<std::array<Cplx, 10>, 5> pat{};
  pat[0][pair_index(1, 2)] = 1.0;   // omega2 ^ omega3
  pat[0][pair_index(1, 4)] = q;     // omega2 ^ omega5
  pat[0][pair_index(2, 3)] = 1.0;   // omega3 ^ omega4
  pat[1][pair_index(0, 2)] = -1.0;  // omega3 ^ omega1
  pat[1][pair_index(0, 4)] = -q;
  pat[1][pair_index(2, 4)] = 1.0;  // omega3 ^ omega5
  pat[2][pair_index(0, 1)] = 1.0;  // omega1 ^ omega2
  pat[2][pair_index(0, 3)] = -1.0;
  pat[2][pair_index(1, 4)] = -1.0;
  pat[2][pair_index(3, 4)] = (p.a2 * p.a2 + p.c2 * p.c2) / (p.a2 * p.a2);
  pat[4][pair_index(3, 4)] = -q;
  return pat;
}

}  // namespace

StructureReport check_structure_equations(const SystemParams& params, int npoints, double tol,
                                          std::uint64_t seed) {
  StructureReport rep;
  const bool expl = params.simplified();
  const Coframe5 cf = omega_coframe(params);
  std::array<OneFormField, 5> rows;
  for (int i = 0; i < 5; ++i) rows[i] = cf.row(i);

  const auto pat = expl ? simplified_patterns(params) : std::array<std::array<Cplx, 10>, 5>{};
  PointSampler sampler(seed);
  bool have_h = false;
  double lead1_min = 0.0, lead2_min = 0.0, h_min = 0.0;

  for (int n = 0; n < npoints; ++n) {
    const Point5 p = sampler.next();
    const Mat5c m = cf.value(p.coords());
    std::array<std::array<Cplx, 10>, 5> d;
    for (int i = 0; i < 5; ++i) d[i] = decompose_two_form(m, exterior_derivative(rows[i], p));

    const Cplx h_pt = d[2][pair_index(3, 4)];
    if (!have_h) {
      rep.H = h_pt;
      lead1_min = std::abs(d[0][pair_index(2, 3)]);
      lead2_min = std::abs(d[1][pair_index(2, 4)]);
      h_min = std::abs(h_pt);
      have_h = true;
    } else {
      lead1_min = std::min(lead1_min, std::abs(d[0][pair_index(2, 3)]));
      lead2_min = std::min(lead2_min, std::abs(d[1][pair_index(2, 4)]));
      h_min = std::min(h_min, std::abs(h_pt));
    }

    if (expl) {
      for (int i = 0; i < 5; ++i) {
        double res = 0.0;
        for (int kk = 0; kk < 10; ++kk) res = std::max(res, std::abs(d[i][kk] - pat[i][kk]));
        auto& slot = rep.residuals["domega" + std::to_string(i + 1)];
        slot = std::max(slot, res);
      }
      auto& hc = rep.residuals["H_constancy"];
      hc = std::max(hc, std::abs(h_pt - rep.H));
    } else {
      // mod-ideal pattern: coefficients on wedge elements outside the ideal
      // of {omega1, omega2} other than the designated one must vanish.
      auto& r1 = rep.residuals["domega1_mod"];
      r1 = std::max({r1, std::abs(d[0][pair_index(2, 4)]), std::abs(d[0][pair_index(3, 4)])});
      auto& r2 = rep.residuals["domega2_mod"];
      r2 = std::max({r2, std::abs(d[1][pair_index(2, 3)]), std::abs(d[1][pair_index(3, 4)])});
    }
  }

  bool ok = h_min > tol && lead1_min > tol && lead2_min > tol;
  for (const auto& [label, res] : rep.residuals) ok = ok && res < tol;
  rep.pass = ok;
  return rep;
}

namespace {

int rank_of_rows(const std::vector<Row5c>& rows, double rank_tol) {
  Eigen::MatrixXcd m(static_cast<int>(rows.size()), 5);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < 5; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][j];
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  const double cutoff = rank_tol * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return rank;
}

}  // namespace

std::array<int, 3> growth_vector(const VectorField5& x1, const VectorField5& x2, const Point5& p,
                                 double rank_tol) {
  const auto c = p.coords();
  std::vector<Row5c> rows = {x1.value(c), x2.value(c)};
  const int r1 = rank_of_rows(rows, rank_tol);

  const VectorField5 x3 = lie_bracket_field(x1, x2);
  rows.push_back(x3.value(c));
  const int r2 = rank_of_rows(rows, rank_tol);

  rows.push_back(lie_bracket(x3, x1, p));
  rows.push_back(lie_bracket(x3, x2, p));
  const int r3 = rank_of_rows(rows, rank_tol);
  return {r1, r2, r3};
}

std::array<int, 3> growth_vector(const SystemParams& params, const Point5& p, double rank_tol) {
  return growth_vector(distribution_field(params, 1), distribution_field(params, 2), p, rank_tol);
}

}  // namespace su2pf
