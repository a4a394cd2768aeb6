#ifndef SU2PF_REPORT_HPP
#define SU2PF_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "su2pf/errors.hpp"
#include "su2pf/pfaffian.hpp"

namespace su2pf {

struct RunConfig {
  double tol = 1e-7;
  bool tol_explicit = false;  // --tol was given; tightens per-check tolerances
  int points = 100;           // reference scale for per-check sample counts
  std::uint64_t seed = 42;
  std::optional<SystemParams> params;  // override for the structure checks
  std::string format = "json";         // json | markdown
  std::string out;                     // empty = stdout
  bool timings = false;                // include runtime_ms (breaks byte-stability)

  void validate() const {
    if (tol <= 0.0) throw ConfigError("tol must be positive");
    if (points < 1) throw ConfigError("points must be >= 1");
    if (format != "json" && format != "markdown") throw ConfigError("format must be json or markdown");
  }

  // Per-check tolerance: the check's own default, tightened by an explicit
  // --tol (never loosened).
  double check_tol(double spec_default) const {
    return tol_explicit ? std::min(spec_default, tol) : spec_default;
  }
  int scaled(int reference_count) const {
    const long long n = static_cast<long long>(reference_count) * points / 100;
    return static_cast<int>(std::max(1LL, n));
  }
};

struct CheckResult {
  std::string name;
  std::string paper_anchor;
  bool pass = false;
  double max_residual = 0.0;
  std::string expected, observed;
  long long runtime_ms = 0;
};

struct Report {
  std::vector<CheckResult> checks;

  int total() const { return static_cast<int>(checks.size()); }
  int passed() const {
    int n = 0;
    for (const auto& c : checks) n += c.pass ? 1 : 0;
    return n;
  }
  int failed() const { return total() - passed(); }
  bool all_pass() const { return failed() == 0; }
  void sort_by_name();
};

std::string render_json(const Report& rep, const RunConfig& cfg);
std::string render_markdown(const Report& rep, const RunConfig& cfg);
std::string render(const Report& rep, const RunConfig& cfg);

// Accepts plain reals ("1", "-0.25"), the shorthands "i", "3i", "i/3",
// "-i/3", and two-element arrays "[re,im]".
Cplx parse_complex(const std::string& text);

// JSON object with keys a1,b1,c1,a2,b2,c2,k; values as [re,im] arrays,
// numbers or shorthand strings.  Throws ConfigError on malformed input.
SystemParams load_params_file(const std::string& path);

std::string format_complex(const Cplx& z);

}  // namespace su2pf

#endif  // SU2PF_REPORT_HPP
