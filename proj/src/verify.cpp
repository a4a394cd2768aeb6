#include "su2pf/verify.hpp"

#include <chrono>
#include <functional>
#include <limits>
#include <sstream>
#include <vector>

#include "su2pf/curvature.hpp"
#include "su2pf/forms.hpp"

namespace su2pf {

namespace {

const Cplx kI(0.0, 1.0);

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

SystemParams reference_params() {
  return SystemParams::make(0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 1.0);
}

ScalarField5 phase_factor(Cplx rate) {
  return ScalarField5([rate](const auto& x) { return exp(rate * x[kR]); });
}

ScalarField5 unit_factor() {
  return ScalarField5([](const auto& x) {
    using T = std::remove_cvref_t<decltype(x[0])>;
    (void)x;
    return T(1.0);
  });
}

// ---------------------------------------------------------------- checks --

CheckResult check_maurer_cartan(const RunConfig& cfg) {
  CheckResult res{"01_maurer_cartan", "satisfy the relations", false, 0.0, "", "", 0};
  const double tol = cfg.check_tol(1e-9);
  const OneFormField sig[3] = {sigma_field(1), sigma_field(2), sigma_field(3)};
  PointSampler sampler(cfg.seed + 1);
  double worst = 0.0;
  const int n = cfg.scaled(200);
  for (int i = 0; i < n; ++i) {
    const Point5 p = sampler.next();
    const auto rows = su2_coframe(p);
    for (int a = 0; a < 3; ++a) {
      const int b = (a + 1) % 3, c = (a + 2) % 3;
      const TwoForm resid = exterior_derivative(sig[a], p) - wedge(rows[b], rows[c]);
      worst = std::max(worst, resid.norm_inf());
    }
  }
  res.max_residual = worst;
  res.pass = worst < tol;
  res.expected = "max residual < " + fmt(tol) + " at " + std::to_string(n) + " points";
  res.observed = fmt(worst);
  return res;
}

CheckResult check_structure_valid(const RunConfig& cfg) {
  CheckResult res{"02a_bracket_generation_valid", "we require $a_1=0$, $c_1=0$, $b_2=0$",
                  false, 0.0, "", "", 0};
  const double tol = cfg.check_tol(1e-9);
  const auto rep = check_structure_equations(reference_params(), cfg.scaled(20), tol, cfg.seed + 2);
  double worst = std::abs(rep.H - Cplx(2.0));
  for (const auto& [label, r] : rep.residuals) worst = std::max(worst, r);
  res.max_residual = worst;
  res.pass = rep.pass && std::abs(rep.H - Cplx(2.0)) < tol;
  res.expected = "pass with H = 2 +- " + fmt(tol);
  res.observed = std::string(rep.pass ? "pass" : "fail") + ", H = " + format_complex(rep.H);
  return res;
}

CheckResult check_structure_perturbed(const RunConfig& cfg) {
  CheckResult res{"02b_bracket_generation_perturbed", "we require $a_1=0$, $c_1=0$, $b_2=0$",
                  false, 0.0, "", "", 0};
  const double tol = 1e-9;
  std::vector<SystemParams> bad;
  bad.push_back(SystemParams::make(0.5, 1.0, 0.0, 1.0, 0.0, 1.0, 1.0));
  bad.push_back(SystemParams::make(0.0, 1.0, 0.5, 1.0, 0.0, 1.0, 1.0));
  bad.push_back(SystemParams::make(0.0, 1.0, 0.0, 1.0, 0.5, 1.0, 1.0));
  bad.push_back(reference_params().with_profile([](const auto& r) { return exp(r); }));

  int failed_as_expected = 0;
  for (std::size_t i = 0; i < bad.size(); ++i) {
    const auto rep =
        check_structure_equations(bad[i], cfg.scaled(10), tol, cfg.seed + 3 + static_cast<int>(i));
    if (!rep.pass) ++failed_as_expected;
  }
  res.pass = failed_as_expected == 4;
  res.expected = "all 4 perturbed systems fail";
  res.observed = std::to_string(failed_as_expected) + "/4 fail";
  return res;
}

CheckResult check_growth_vector(const RunConfig& cfg) {
  CheckResult res{"03_growth_vector", "maximally non-integrable bracket generating rank 2",
                  false, 0.0, "", "", 0};
  const std::vector<SystemParams> systems = {
      reference_params(), SystemParams::make(0.0, 1.0, 0.0, 1.0, 0.0, kI / 3.0, 1.0)};
  PointSampler sampler(cfg.seed + 4);
  const int n = cfg.scaled(20);
  bool ok = true;
  for (const auto& params : systems)
    for (int i = 0; i < n; ++i) {
      const auto gv = growth_vector(params, sampler.next(), 1e-7);
      ok = ok && gv == std::array<int, 3>{2, 3, 5};
    }
  res.pass = ok;
  res.expected = "(2,3,5) at " + std::to_string(n) + " points, incl. c2 = i/3";
  res.observed = ok ? "(2,3,5)" : "rank defect found";
  return res;
}

CheckResult check_connection_forms(const RunConfig& cfg) {
  CheckResult res{"04a_connection_forms", "the Cartan's structure equations", false, 0.0, "", "",
                  0};
  const double tol = cfg.check_tol(1e-9);
  PointSampler sampler(cfg.seed + 5);
  double worst = 0.0;
  const int n = cfg.scaled(50);
  for (const double a2 : {0.5, 1.0, 2.0})
    for (const double c2 : {0.0, 1.0}) {
      const auto params = SystemParams::make(0.0, 1.0, 0.0, a2, 0.0, c2, 1.0);
      const Coframe5 theta = adapted_coframe(adapted_constants(params));
      for (int i = 0; i < n; ++i)
        worst = std::max(worst, solve_connection_forms(theta, sampler.next()).residual);
    }
  res.max_residual = worst;
  res.pass = worst < tol;
  res.expected = "least-squares residual < " + fmt(tol) + " on the (a2, c2) grid";
  res.observed = fmt(worst);
  return res;
}

CheckResult check_connection_perturbed(const RunConfig& cfg) {
  CheckResult res{"04b_connection_forms_perturbed", "the Cartan's structure equations", false, 0.0,
                  "", "", 0};
  auto ac = adapted_constants(reference_params());
  ac.Q = Cplx(0.0);
  ac.S = Cplx(0.0);
  const Coframe5 theta = adapted_coframe(ac);
  PointSampler sampler(cfg.seed + 6);
  double smallest = std::numeric_limits<double>::infinity();
  const int n = cfg.scaled(10);
  for (int i = 0; i < n; ++i)
    smallest = std::min(smallest, solve_connection_forms(theta, sampler.next()).residual);
  res.max_residual = smallest;
  res.pass = smallest > 1e-3;
  res.expected = "residual > 1.000e-03 with Q zeroed";
  res.observed = fmt(smallest);
  return res;
}

CheckResult check_weyl_component(const RunConfig& cfg) {
  CheckResult res{"05_weyl_component", "one of its components, taken to be", false, 0.0, "", "", 0};
  const double tol = cfg.check_tol(1e-6);
  PointSampler sampler(cfg.seed + 7);

  struct Node {
    double a2, c2;
    Cplx w_pipe, w_ref;
  };
  std::vector<Node> grid;
  for (const double a2 : {0.5, 1.0, 2.0})
    for (const double c2 : {0.0, 1.0}) grid.push_back({a2, c2, Cplx(0.0), Cplx(0.0)});

  double worst_rel = 0.0;
  int global_sign = 0;
  bool signs_consistent = true;
  for (auto& node : grid) {
    const auto params = SystemParams::make(0.0, 1.0, 0.0, node.a2, 0.0, node.c2, 1.0);
    // Contract against the omega-normalized duals: the theta-frame component
    // carries an extra lambda^2 from the theta_3..theta_5 scalings.
    const MetricField<5> g = nurowski_metric_g(params);
    node.w_pipe = weyl_frame_component(g, omega_coframe(params), {2, 4, 2, 4}, sampler.next());
    node.w_ref = weyl_component_closed_form(node.a2, node.c2);
    const double rel = std::abs(std::abs(node.w_pipe) - std::abs(node.w_ref)) / std::abs(node.w_ref);
    worst_rel = std::max(worst_rel, rel);
    const int sgn = std::real(node.w_pipe / node.w_ref) > 0.0 ? 1 : -1;
    if (global_sign == 0)
      global_sign = sgn;
    else
      signs_consistent = signs_consistent && sgn == global_sign;
  }

  // Convention-independent ratio test between two grid nodes.
  const Node* n11 = nullptr;
  const Node* n10 = nullptr;
  for (const auto& node : grid) {
    if (node.a2 == 1.0 && node.c2 == 1.0) n11 = &node;
    if (node.a2 == 1.0 && node.c2 == 0.0) n10 = &node;
  }
  const Cplx ratio_pipe = n11->w_pipe / n10->w_pipe;
  const Cplx ratio_ref = n11->w_ref / n10->w_ref;
  const double ratio_rel = std::abs(ratio_pipe - ratio_ref) / std::abs(ratio_ref);

  res.max_residual = std::max(worst_rel, ratio_rel);
  res.pass = worst_rel < tol && ratio_rel < tol && signs_consistent;
  res.expected = "|W_2424| matches the closed form to " + fmt(tol) + " rel.; one global sign";
  std::ostringstream obs;
  obs << "max rel err " << fmt(worst_rel) << ", ratio err " << fmt(ratio_rel) << ", global sign "
      << (global_sign > 0 ? "+1" : "-1");
  res.observed = obs.str();
  return res;
}

CheckResult check_weyl_zero_loci(const RunConfig& cfg) {
  CheckResult res{"06_weyl_zero_loci", "the vanishing of the Weyl tensor of $g$ is guaranteed",
                  false, 0.0, "", "", 0};
  const double tol = cfg.check_tol(1e-7);
  const int n = cfg.scaled(50);
  double worst_flat = 0.0;
  bool ok = true;
  int k = 0;
  for (const Cplx c2 : {kI / 3.0, -kI / 3.0, 3.0 * kI, -3.0 * kI}) {
    const auto params = SystemParams::make(0.0, 1.0, 0.0, 1.0, 0.0, c2, 1.0);
    const auto scan = weyl_flat(nurowski_metric_gtilde(params), n, tol, cfg.seed + 8 + k++);
    worst_flat = std::max(worst_flat, scan.max_abs);
    ok = ok && scan.flat;
  }
  const auto generic =
      weyl_flat(nurowski_metric_gtilde(reference_params()), cfg.scaled(10), tol, cfg.seed + 20);
  ok = ok && generic.max_abs > 1e-3;
  res.max_residual = worst_flat;
  res.pass = ok;
  res.expected = "max |Weyl| < " + fmt(tol) + " on both loci; > 1.000e-03 at (1, 1)";
  res.observed = "loci max " + fmt(worst_flat) + ", generic max " + fmt(generic.max_abs);
  return res;
}

const std::vector<std::pair<std::string, CaseSpec>>& flat_case_metrics() {
  static const std::vector<std::pair<std::string, CaseSpec>> metrics = {
      {"caseA_complex", {CaseId::A, SignBranch::minus, Variant::complex_form, SystemKind::standard}},
      {"caseA_real", {CaseId::A, SignBranch::minus, Variant::real_form, SystemKind::standard}},
      {"caseB_complex", {CaseId::B, SignBranch::minus, Variant::complex_form, SystemKind::standard}},
      {"caseB_complex_rev",
       {CaseId::B, SignBranch::minus, Variant::complex_form, SystemKind::sign_reversed}},
      {"caseB_real", {CaseId::B, SignBranch::minus, Variant::real_form, SystemKind::standard}},
      {"caseB_real_rev",
       {CaseId::B, SignBranch::minus, Variant::real_form, SystemKind::sign_reversed}},
  };
  return metrics;
}

CheckResult check_case_metrics_flat(const RunConfig& cfg) {
  CheckResult res{"07_case_metrics_conformally_flat", "is conformally flat", false, 0.0, "", "",
                  0};
  const double tol = cfg.check_tol(1e-7);
  const int n = cfg.scaled(50);
  double worst = 0.0;
  bool ok = true;
  int k = 0;
  for (const auto& [label, spec] : flat_case_metrics()) {
    const auto scan =
        weyl_flat(case_metric(spec), n, tol, cfg.seed + 30 + k++, case_point_filter(spec));
    worst = std::max(worst, scan.max_abs);
    ok = ok && scan.flat;
  }
  res.max_residual = worst;
  res.pass = ok;
  res.expected = "max |Weyl| < " + fmt(tol) + " for all six case metrics";
  res.observed = fmt(worst);
  return res;
}

CheckResult check_ricci_flat_phase(const RunConfig& cfg) {
  CheckResult res{"08_ricci_flat_phase", "admits a Ricci-flat representative", false, 0.0, "", "",
                  0};
  const double tol = cfg.check_tol(1e-7);
  const int n = cfg.scaled(25);

  const MetricField<5> g_minus =
      case_metric({CaseId::A, SignBranch::minus, Variant::complex_form, SystemKind::standard});
  const MetricField<5> g_plus =
      case_metric({CaseId::A, SignBranch::plus, Variant::complex_form, SystemKind::standard});

  const double r1 =
      max_ricci_residual(conformal_rescale(g_minus, phase_factor(kI / 3.0)), n, cfg.seed + 40);
  const double r2 =
      max_ricci_residual(conformal_rescale(g_plus, phase_factor(-kI / 3.0)), n, cfg.seed + 41);
  const double r_unit =
      max_ricci_residual(conformal_rescale(g_minus, unit_factor()), cfg.scaled(5), cfg.seed + 42);

  res.max_residual = std::max(r1, r2);
  res.pass = r1 < tol && r2 < tol && r_unit > 1e-3;
  res.expected = "|Ric| < " + fmt(tol) + " with the phase factor; > 1.000e-03 without";
  res.observed = "phased " + fmt(std::max(r1, r2)) + ", unphased " + fmt(r_unit);
  return res;
}

CheckResult check_gauss_curvature(const RunConfig& cfg) {
  CheckResult res{"09_gauss_curvature", "constant Gauss curvature of", false, 0.0, "", "", 0};
  const double tol = cfg.check_tol(1e-9);
  const int n = cfg.scaled(50);

  PointSampler sampler(cfg.seed + 50);
  const MetricField<2> ga = surface_metric(CaseId::A);
  const MetricField<2> gb = surface_metric(CaseId::B);
  double worst_a = 0.0, worst_b = 0.0;
  for (int i = 0; i < n; ++i) {
    const double ra = sampler.next_r();
    worst_a = std::max(worst_a,
                       std::abs(gauss_curvature(ga, {Cplx(ra), Cplx(0.2)}) - Cplx(1.0 / 9.0)));
    double rb = sampler.next_r();
    while (std::abs(std::cos(3.0 * rb)) < 0.1) rb = sampler.next_r();
    worst_b =
        std::max(worst_b, std::abs(gauss_curvature(gb, {Cplx(rb), Cplx(0.2)}) - Cplx(9.0)));
  }
  res.max_residual = std::max(worst_a, worst_b);
  res.pass = worst_a < tol && worst_b < tol;
  res.expected = "K = 1/9 and K = 9, each +- " + fmt(tol);
  res.observed = "case A dev " + fmt(worst_a) + ", case B dev " + fmt(worst_b);
  return res;
}

CheckResult check_gauge_brackets(const RunConfig& cfg) {
  CheckResult res{"10_gauge_bracket_tables", "The commutator gives the field strength", false, 0.0,
                  "", "", 0};
  const double tol = cfg.check_tol(1e-10);
  const int n = cfg.scaled(50);

  const std::vector<GaugeCase> cases = {
      {GaugeCaseId::A, GaugeSign::minus, GaugeVariant::complex_form},
      {GaugeCaseId::A, GaugeSign::plus, GaugeVariant::complex_form},
      {GaugeCaseId::A, GaugeSign::minus, GaugeVariant::sign_reversed},
      {GaugeCaseId::A, GaugeSign::plus, GaugeVariant::sign_reversed},
      {GaugeCaseId::A, GaugeSign::minus, GaugeVariant::real_form},
      {GaugeCaseId::B, GaugeSign::minus, GaugeVariant::complex_form},
      {GaugeCaseId::B, GaugeSign::plus, GaugeVariant::complex_form},
      {GaugeCaseId::B, GaugeSign::minus, GaugeVariant::real_form},
  };

  PointSampler sampler(cfg.seed + 60);
  double worst = 0.0;
  for (const auto& gc : cases)
    for (int i = 0; i < n; ++i)
      worst = std::max(worst, bracket_table(gc, sampler.next_r()).max_residual);

  for (const auto sign : {GaugeSign::minus, GaugeSign::plus}) {
    const GaugeCase gc{GaugeCaseId::A, sign, GaugeVariant::complex_form};
    for (int i = 0; i < n; ++i)
      worst = std::max(worst, rescaled_brackets(gc, sampler.next_r()).max_residual);
  }

  res.max_residual = worst;
  res.pass = worst < tol;
  res.expected = "every closed-form bracket matches to " + fmt(tol);
  res.observed = fmt(worst);
  return res;
}

CheckResult check_polarisation(const RunConfig& cfg) {
  CheckResult res{"11_polarisation_identities", "Using the polarisation identities", false, 0.0,
                  "", "", 0};
  const double tol = cfg.check_tol(1e-10);
  const int n = cfg.scaled(100);

  const std::vector<CaseSpec> specs = {
      {CaseId::A, SignBranch::minus, Variant::complex_form, SystemKind::standard},
      {CaseId::A, SignBranch::plus, Variant::complex_form, SystemKind::standard},
      {CaseId::A, SignBranch::minus, Variant::real_form, SystemKind::standard},
      {CaseId::B, SignBranch::minus, Variant::complex_form, SystemKind::standard},
      {CaseId::B, SignBranch::plus, Variant::complex_form, SystemKind::standard},
      {CaseId::B, SignBranch::minus, Variant::real_form, SystemKind::standard},
  };

  double worst = 0.0;
  int k = 0;
  for (const auto& spec : specs) {
    const auto [form1, form2] = case_metric_forms(spec);
    PointSampler sampler(cfg.seed + 70 + k++);
    const auto keep = case_point_filter(spec);
    for (int i = 0; i < n; ++i) {
      const Point5 p = keep ? sampler.next_where(keep) : sampler.next();
      const Mat5c diff = form1.value(p.coords()) - form2.value(p.coords());
      worst = std::max(worst, diff.cwiseAbs().maxCoeff());
    }
  }
  res.max_residual = worst;
  res.pass = worst < tol;
  res.expected = "the two closed forms agree entrywise to " + fmt(tol);
  res.observed = fmt(worst);
  return res;
}

CheckResult check_d_squared(const RunConfig& cfg) {
  CheckResult res{"12a_exterior_d_squared", "satisfy the relations", false, 0.0, "", "", 0};
  const double tol = cfg.check_tol(1e-8);
  const int n = cfg.scaled(100);

  std::vector<OneFormField> forms = {sigma_field(1), sigma_field(2), sigma_field(3)};
  const Coframe5 cf = omega_coframe(reference_params());
  for (int i = 0; i < 5; ++i) forms.push_back(cf.row(i));

  PointSampler sampler(cfg.seed + 80);
  double worst = 0.0;
  std::vector<TwoFormField> dfields;
  dfields.reserve(forms.size());
  for (const auto& alpha : forms) dfields.push_back(derivative_field(alpha));
  for (int i = 0; i < n; ++i) {
    const Point5 p = sampler.next();
    for (const auto& df : dfields) worst = std::max(worst, d_two_form(df, p).norm_inf());
  }
  res.max_residual = worst;
  res.pass = worst < tol;
  res.expected = "||d(d alpha)|| < " + fmt(tol) + " for the coframe one-forms";
  res.observed = fmt(worst);
  return res;
}

// Metrics exercised by the tensor-property checks: the six flat case metrics,
// the generic rescaled representative and the split product metric.
std::vector<std::pair<MetricField<5>, PointFilter>> property_metrics() {
  std::vector<std::pair<MetricField<5>, PointFilter>> out;
  out.emplace_back(nurowski_metric_gtilde(reference_params()), PointFilter{});
  out.emplace_back(gsplit_metric(reference_params()), PointFilter{});
  for (const auto& [label, spec] : flat_case_metrics()) {
    (void)label;
    out.emplace_back(case_metric(spec), case_point_filter(spec));
  }
  return out;
}

CheckResult check_riemann_properties(const RunConfig& cfg) {
  CheckResult res{"12b_riemann_symmetries", "A computation of the Weyl tensor", false, 0.0, "", "",
                  0};
  const double tol = cfg.check_tol(1e-8);
  const int n = cfg.scaled(10);
  double worst = 0.0;
  int k = 0;
  for (const auto& [g, keep] : property_metrics()) {
    PointSampler sampler(cfg.seed + 90 + k++);
    for (int i = 0; i < n; ++i) {
      const Point5 p = keep ? sampler.next_where(keep) : sampler.next();
      const auto t = curvature_at(g, p.coords());
      worst = std::max(worst, riemann_symmetry_residual(t));
      worst = std::max(worst, first_bianchi_residual(t));
    }
  }
  res.max_residual = worst;
  res.pass = worst < tol;
  res.expected = "index symmetries and first Bianchi < " + fmt(tol);
  res.observed = fmt(worst);
  return res;
}

CheckResult check_weyl_trace_free(const RunConfig& cfg) {
  CheckResult res{"12c_weyl_trace_free", "A computation of the Weyl tensor", false, 0.0, "", "", 0};
  const double tol = cfg.check_tol(1e-8);
  const int n = cfg.scaled(10);
  double worst = 0.0;
  int k = 0;
  for (const auto& [g, keep] : property_metrics()) {
    PointSampler sampler(cfg.seed + 100 + k++);
    for (int i = 0; i < n; ++i) {
      const Point5 p = keep ? sampler.next_where(keep) : sampler.next();
      worst = std::max(worst, weyl_trace_residual(curvature_at(g, p.coords())));
    }
  }
  res.max_residual = worst;
  res.pass = worst < tol;
  res.expected = "all single traces of Weyl < " + fmt(tol);
  res.observed = fmt(worst);
  return res;
}

CheckResult check_conformal_invariance(const RunConfig& cfg) {
  CheckResult res{"12d_weyl_conformal_invariance", "A computation of the Weyl tensor", false, 0.0,
                  "", "", 0};
  const double tol_const = cfg.check_tol(1e-8);
  const double tol_phase = cfg.check_tol(1e-7);
  const int n = cfg.scaled(5);

  const MetricField<5> g = nurowski_metric_gtilde(reference_params());
  const ScalarField5 two = ScalarField5([](const auto& x) {
    using T = std::remove_cvref_t<decltype(x[0])>;
    (void)x;
    return T(2.0);
  });
  const MetricField<5> g_scaled = conformal_rescale(g, two);

  const MetricField<5> ga =
      case_metric({CaseId::A, SignBranch::minus, Variant::complex_form, SystemKind::standard});
  const MetricField<5> ga_phased = conformal_rescale(ga, phase_factor(kI / 3.0));

  PointSampler sampler(cfg.seed + 110);
  double worst_const = 0.0, worst_phase = 0.0;
  for (int i = 0; i < n; ++i) {
    const Point5 p = sampler.next();
    const auto w1 = weyl13(curvature_at(g, p.coords()));
    const auto w2 = weyl13(curvature_at(g_scaled, p.coords()));
    const auto w3 = weyl13(curvature_at(ga, p.coords()));
    const auto w4 = weyl13(curvature_at(ga_phased, p.coords()));
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b)
        for (int c = 0; c < 5; ++c)
          for (int d = 0; d < 5; ++d) {
            worst_const = std::max(worst_const, std::abs(w1[a][b][c][d] - w2[a][b][c][d]));
            worst_phase = std::max(worst_phase, std::abs(w3[a][b][c][d] - w4[a][b][c][d]));
          }
  }
  res.max_residual = std::max(worst_const, worst_phase);
  res.pass = worst_const < tol_const && worst_phase < tol_phase;
  res.expected = "(1,3)-Weyl invariant under c^2 g and Omega^2 g rescalings";
  res.observed = "constant " + fmt(worst_const) + ", phase " + fmt(worst_phase);
  return res;
}

using CheckFn = std::function<CheckResult(const RunConfig&)>;

const std::vector<CheckFn>& battery_checks() {
  static const std::vector<CheckFn> checks = {
      check_maurer_cartan,   check_structure_valid,    check_structure_perturbed,
      check_growth_vector,   check_connection_forms,   check_connection_perturbed,
      check_weyl_component,  check_weyl_zero_loci,     check_case_metrics_flat,
      check_ricci_flat_phase, check_gauss_curvature,   check_gauge_brackets,
      check_polarisation,    check_d_squared,          check_riemann_properties,
      check_weyl_trace_free, check_conformal_invariance,
  };
  return checks;
}

CheckResult timed(const CheckFn& fn, const RunConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult res = fn(cfg);
  const auto t1 = std::chrono::steady_clock::now();
  res.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return res;
}

}  // namespace

Report run_battery(const RunConfig& cfg) {
  cfg.validate();
  Report rep;
  for (const auto& fn : battery_checks()) rep.checks.push_back(timed(fn, cfg));
  if (cfg.params) {
    rep.checks.push_back(timed(
        [](const RunConfig& c) {
          CheckResult res{"00_structure_params_override",
                          "the system satisfies the structure equations", false, 0.0, "", "", 0};
          const auto r =
              check_structure_equations(*c.params, c.scaled(20), c.check_tol(1e-9), c.seed);
          double worst = 0.0;
          for (const auto& [label, v] : r.residuals) worst = std::max(worst, v);
          res.max_residual = worst;
          res.pass = r.pass;
          res.expected = "structure equations hold for the supplied constants";
          res.observed = std::string(r.pass ? "pass" : "fail") + ", H = " + format_complex(r.H);
          return res;
        },
        cfg));
  }
  rep.sort_by_name();
  return rep;
}

Report weyl_report(Cplx a2, Cplx c2, const RunConfig& cfg) {
  cfg.validate();
  if (std::abs(a2) < 1e-14) throw ConfigError("weyl: a2 must be nonzero");
  Report rep;

  const bool real_path = std::abs(a2.imag()) < 1e-14 && std::abs(c2.imag()) < 1e-14 &&
                         a2.real() > 0.0;
  const auto t0 = std::chrono::steady_clock::now();
  if (real_path) {
    CheckResult res{"weyl_component", "one of its components, taken to be", false, 0.0, "", "", 0};
    const double tol = cfg.check_tol(1e-6);
    const auto params = SystemParams::make(0.0, 1.0, 0.0, a2, 0.0, c2, 1.0);
    PointSampler sampler(cfg.seed);
    const Cplx w = weyl_frame_component(nurowski_metric_g(params), omega_coframe(params),
                                        {2, 4, 2, 4}, sampler.next());
    const Cplx ref = weyl_component_closed_form(a2, c2);
    const double rel = std::abs(std::abs(w) - std::abs(ref)) / std::abs(ref);
    res.max_residual = rel;
    res.pass = rel < tol;
    res.expected = "|W_2424| = " + fmt(std::abs(ref));
    res.observed = "W_2424 = " + format_complex(w);
    const auto t1 = std::chrono::steady_clock::now();
    res.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    rep.checks.push_back(std::move(res));
  } else {
    CheckResult res{"weyl_flatness", "the vanishing of the Weyl tensor of $g$ is guaranteed",
                    false, 0.0, "", "", 0};
    const double tol = cfg.check_tol(1e-7);
    const auto params = SystemParams::make(0.0, 1.0, 0.0, a2, 0.0, c2, 1.0);
    const Cplx l1 = 9.0 * a2 * a2 + c2 * c2;
    const Cplx l2 = a2 * a2 + 9.0 * c2 * c2;
    const bool on_locus = std::abs(l1) < 1e-10 || std::abs(l2) < 1e-10;
    const auto scan = weyl_flat(nurowski_metric_gtilde(params), cfg.scaled(50), tol, cfg.seed);
    res.max_residual = scan.max_abs;
    res.pass = scan.flat == on_locus;
    res.expected = on_locus ? "flat (parameters on a zero locus)" : "not flat";
    res.observed = std::string(scan.flat ? "flat" : "not flat") + ", max |Weyl| " +
                   fmt(scan.max_abs);
    const auto t1 = std::chrono::steady_clock::now();
    res.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    rep.checks.push_back(std::move(res));
  }
  return rep;
}

Report gauss_report(CaseId id, const RunConfig& cfg) {
  cfg.validate();
  Report rep;
  CheckResult res{"gauss_curvature", "constant Gauss curvature of", false, 0.0, "", "", 0};
  const auto t0 = std::chrono::steady_clock::now();
  const double tol = cfg.check_tol(1e-9);
  const Cplx expected = id == CaseId::A ? Cplx(1.0 / 9.0) : Cplx(9.0);
  const MetricField<2> g = surface_metric(id);
  PointSampler sampler(cfg.seed);
  double worst = 0.0;
  Cplx last(0.0);
  for (int i = 0; i < cfg.scaled(50); ++i) {
    double r = sampler.next_r();
    if (id == CaseId::B)
      while (std::abs(std::cos(3.0 * r)) < 0.1) r = sampler.next_r();
    last = gauss_curvature(g, {Cplx(r), Cplx(0.2)});
    worst = std::max(worst, std::abs(last - expected));
  }
  res.max_residual = worst;
  res.pass = worst < tol;
  res.expected = "K = " + format_complex(expected) + " +- " + fmt(tol);
  res.observed = "K = " + format_complex(last) + ", max dev " + fmt(worst);
  const auto t1 = std::chrono::steady_clock::now();
  res.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  rep.checks.push_back(std::move(res));
  return rep;
}

namespace {

std::string format_spin_matrix(const SpinMatrix& m) {
  std::ostringstream os;
  os << "[[" << format_complex(m(0, 0)) << ", " << format_complex(m(0, 1)) << "], ["
     << format_complex(m(1, 0)) << ", " << format_complex(m(1, 1)) << "]]";
  return os.str();
}

}  // namespace

Report gauge_report(const GaugeCase& gc, double r, const RunConfig& cfg) {
  cfg.validate();
  gc.validate();
  Report rep;
  const double tol = cfg.check_tol(1e-10);

  const auto t0 = std::chrono::steady_clock::now();
  const BracketTable t = bracket_table(gc, r);
  CheckResult res{"gauge_brackets", "The commutator gives the field strength", false, 0.0, "", "",
                  0};
  res.max_residual = t.max_residual;
  res.pass = t.max_residual < tol;
  res.expected = "F = " + format_spin_matrix(t.F_ref);
  res.observed = "F = " + format_spin_matrix(t.F) + "; [D0,F], [D1,F] residual " +
                 fmt(t.max_residual);
  const auto t1 = std::chrono::steady_clock::now();
  res.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  rep.checks.push_back(std::move(res));

  if (gc.id == GaugeCaseId::A && gc.variant == GaugeVariant::complex_form) {
    const auto s0 = std::chrono::steady_clock::now();
    const RescaledBrackets rt = rescaled_brackets(gc, r);
    CheckResult rres{"gauge_brackets_rescaled", "we could rescale them so that", false, 0.0, "",
                     "", 0};
    rres.max_residual = rt.max_residual;
    rres.pass = rt.max_residual < tol;
    rres.expected = "[Dt0, Dt1] = E^3 exactly";
    rres.observed = "residual " + fmt(rt.max_residual);
    const auto s1 = std::chrono::steady_clock::now();
    rres.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(s1 - s0).count();
    rep.checks.push_back(std::move(rres));
  }
  return rep;
}

Report structure_report(const SystemParams& params, const RunConfig& cfg) {
  cfg.validate();
  Report rep;
  CheckResult res{"structure_equations", "the system satisfies the structure equations", false,
                  0.0, "", "", 0};
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = check_structure_equations(params, cfg.scaled(20), cfg.check_tol(1e-9), cfg.seed);
  double worst = 0.0;
  std::ostringstream obs;
  obs << (r.pass ? "pass" : "fail") << ", H = " << format_complex(r.H);
  for (const auto& [label, v] : r.residuals) {
    worst = std::max(worst, v);
    obs << ", " << label << " = " << fmt(v);
  }
  res.max_residual = worst;
  res.pass = r.pass;
  res.expected = "bracket-generating structure equations hold";
  res.observed = obs.str();
  const auto t1 = std::chrono::steady_clock::now();
  res.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  rep.checks.push_back(std::move(res));
  return rep;
}

}  // namespace su2pf
