#ifndef SU2PF_VERIFY_HPP
#define SU2PF_VERIFY_HPP

#include "su2pf/gauge.hpp"
#include "su2pf/nurowski.hpp"
#include "su2pf/report.hpp"

namespace su2pf {

// The full verification battery: one CheckResult per acceptance criterion
// group, deterministic for a fixed (seed, tol, points).
Report run_battery(const RunConfig& cfg);

// Targeted commands.
Report weyl_report(Cplx a2, Cplx c2, const RunConfig& cfg);
Report gauss_report(CaseId id, const RunConfig& cfg);
Report gauge_report(const GaugeCase& gc, double r, const RunConfig& cfg);
Report structure_report(const SystemParams& params, const RunConfig& cfg);

}  // namespace su2pf

#endif  // SU2PF_VERIFY_HPP
