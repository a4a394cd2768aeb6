#ifndef SU2PF_SAMPLING_HPP
#define SU2PF_SAMPLING_HPP

#include <cstdint>
#include <functional>
#include <numbers>
#include <random>

#include "su2pf/manifold.hpp"

namespace su2pf {

using PointFilter = std::function<bool(const Point5&)>;

// Random points in the Euler chart, theta kept in [band, pi - band] away
// from the chart degeneracy.  Deterministic for a fixed seed.
class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed, double theta_band = 0.3, double r_max = 1.0)
      : rng_(seed),
        angle_(0.0, 2.0 * std::numbers::pi),
        theta_(theta_band, std::numbers::pi - theta_band),
        r_(-r_max, r_max) {}

  Point5 next() {
    Point5 p;
    p.psi = angle_(rng_);
    p.theta = theta_(rng_);
    p.phi = angle_(rng_);
    p.r = r_(rng_);
    p.u = r_(rng_);
    return p;
  }

  // Rejection sampling for metrics that degenerate on part of the r range.
  Point5 next_where(const std::function<bool(const Point5&)>& keep) {
    for (int tries = 0; tries < 10000; ++tries) {
      Point5 p = next();
      if (keep(p)) return p;
    }
    throw std::runtime_error("PointSampler: predicate rejected 10000 consecutive points");
  }

  double next_r() { return r_(rng_); }

 private:
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> angle_;
  std::uniform_real_distribution<double> theta_;
  std::uniform_real_distribution<double> r_;
};

}  // namespace su2pf

#endif  // SU2PF_SAMPLING_HPP
