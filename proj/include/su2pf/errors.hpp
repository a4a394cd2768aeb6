#ifndef SU2PF_ERRORS_HPP
#define SU2PF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace su2pf {

struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Euler chart degenerates at sin(theta) = 0.
struct ChartDegenerate : GeometryError {
  using GeometryError::GeometryError;
};

struct SingularCoframe : GeometryError {
  using GeometryError::GeometryError;
};

struct SingularMetric : GeometryError {
  using GeometryError::GeometryError;
};

// Fractional powers of the parameters are only taken for real a2 > 0.
struct BranchRestriction : GeometryError {
  using GeometryError::GeometryError;
};

struct DegenerateParams : GeometryError {
  using GeometryError::GeometryError;
};

struct UnsupportedCase : GeometryError {
  using GeometryError::GeometryError;
};

// CLI / params-file problems; maps to process exit status 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace su2pf

#endif  // SU2PF_ERRORS_HPP
