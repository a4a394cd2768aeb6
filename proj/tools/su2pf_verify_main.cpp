#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "su2pf/verify.hpp"

namespace {

using su2pf::Cplx;

int emit(const su2pf::Report& rep, const su2pf::RunConfig& cfg) {
  const std::string text = su2pf::render(rep, cfg);
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.out);
    if (!out) throw su2pf::ConfigError("cannot write to " + cfg.out);
    out << text;
  }
  return rep.all_pass() ? 0 : 1;
}

void add_common_options(CLI::App* cmd, su2pf::RunConfig& cfg, std::string& tol_text) {
  cmd->add_option("--tol", tol_text, "tighten per-check tolerances to at most this value");
  cmd->add_option("--points", cfg.points, "sample-count scale (100 = reference counts)");
  cmd->add_option("--seed", cfg.seed, "sampling seed");
  cmd->add_option("--format", cfg.format, "report format: json or markdown");
  cmd->add_option("--out", cfg.out, "write the report to this path instead of stdout");
  cmd->add_flag("--timings", cfg.timings, "include runtime_ms (report no longer byte-stable)");
}

void finalize_config(su2pf::RunConfig& cfg, const std::string& tol_text) {
  if (!tol_text.empty()) {
    try {
      std::size_t used = 0;
      cfg.tol = std::stod(tol_text, &used);
      if (used != tol_text.size()) throw std::invalid_argument(tol_text);
    } catch (const std::exception&) {
      throw su2pf::ConfigError("bad --tol value: " + tol_text);
    }
    cfg.tol_explicit = true;
  }
  cfg.validate();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of SU(2)-symmetric (2,3,5) Pfaffian systems,\n"
               "their conformal metrics and the associated gauge connections"};
  app.require_subcommand(1);

  su2pf::RunConfig cfg;
  std::string tol_text;
  std::string params_path;
  std::string a2_text = "1", c2_text = "0";
  std::string case_text = "A";
  std::string sign_text = "minus", variant_text = "complex";
  double gauge_r = 0.0;

  CLI::App* cmd_all = app.add_subcommand("verify-all", "run the full verification battery");
  add_common_options(cmd_all, cfg, tol_text);
  cmd_all->add_option("--params", params_path, "JSON file with system constants to check as well");

  CLI::App* cmd_weyl =
      app.add_subcommand("weyl", "Weyl component (real constants) or flatness verdict (complex)");
  add_common_options(cmd_weyl, cfg, tol_text);
  cmd_weyl->add_option("--a2", a2_text, "a2 (number, \"i/3\", \"3i\" or [re,im])")->required();
  cmd_weyl->add_option("--c2", c2_text, "c2 (same formats)")->required();

  CLI::App* cmd_gauss = app.add_subcommand("gauss", "Gauss curvature of the surface metrics");
  add_common_options(cmd_gauss, cfg, tol_text);
  cmd_gauss->add_option("--case", case_text, "A or B")->required();

  CLI::App* cmd_gauge = app.add_subcommand("gauge", "field strength and bracket table at one r");
  add_common_options(cmd_gauge, cfg, tol_text);
  cmd_gauge->add_option("--case", case_text, "A or B")->required();
  cmd_gauge->add_option("--sign", sign_text, "minus or plus");
  cmd_gauge->add_option("--variant", variant_text, "complex, real or sign-reversed");
  cmd_gauge->add_option("--r", gauge_r, "radial coordinate");

  CLI::App* cmd_structure =
      app.add_subcommand("structure", "structure equations for constants from a params file");
  add_common_options(cmd_structure, cfg, tol_text);
  cmd_structure->add_option("--params", params_path, "JSON params file")->required();

  try {
    app.parse(argc, argv);
    finalize_config(cfg, tol_text);

    if (*cmd_all) {
      if (!params_path.empty()) cfg.params = su2pf::load_params_file(params_path);
      return emit(su2pf::run_battery(cfg), cfg);
    }
    if (*cmd_weyl) {
      const Cplx a2 = su2pf::parse_complex(a2_text);
      const Cplx c2 = su2pf::parse_complex(c2_text);
      return emit(su2pf::weyl_report(a2, c2, cfg), cfg);
    }
    if (*cmd_gauss) {
      if (case_text != "A" && case_text != "B") throw su2pf::ConfigError("case must be A or B");
      const auto id = case_text == "A" ? su2pf::CaseId::A : su2pf::CaseId::B;
      return emit(su2pf::gauss_report(id, cfg), cfg);
    }
    if (*cmd_gauge) {
      if (case_text != "A" && case_text != "B") throw su2pf::ConfigError("case must be A or B");
      su2pf::GaugeCase gc;
      gc.id = case_text == "A" ? su2pf::GaugeCaseId::A : su2pf::GaugeCaseId::B;
      if (sign_text == "minus")
        gc.sign = su2pf::GaugeSign::minus;
      else if (sign_text == "plus")
        gc.sign = su2pf::GaugeSign::plus;
      else
        throw su2pf::ConfigError("sign must be minus or plus");
      if (variant_text == "complex")
        gc.variant = su2pf::GaugeVariant::complex_form;
      else if (variant_text == "real")
        gc.variant = su2pf::GaugeVariant::real_form;
      else if (variant_text == "sign-reversed")
        gc.variant = su2pf::GaugeVariant::sign_reversed;
      else
        throw su2pf::ConfigError("variant must be complex, real or sign-reversed");
      try {
        gc.validate();
      } catch (const su2pf::UnsupportedCase& e) {
        throw su2pf::ConfigError(e.what());
      }
      return emit(su2pf::gauge_report(gc, gauge_r, cfg), cfg);
    }
    if (*cmd_structure) {
      const auto params = su2pf::load_params_file(params_path);
      return emit(su2pf::structure_report(params, cfg), cfg);
    }
    return 2;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  } catch (const su2pf::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
