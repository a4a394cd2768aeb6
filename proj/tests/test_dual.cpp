#include <doctest.h>

#include "su2pf/dual.hpp"
#include "su2pf/fields.hpp"

using namespace su2pf;

namespace {
const Cplx I(0.0, 1.0);
}

TEST_CASE("dual arithmetic propagates first derivatives") {
  const Dual1 x(Cplx(0.7), Cplx(1.0));
  const Dual1 y = x * x + Cplx(2.0) * x - 1.0;
  CHECK(std::abs(y.v() - Cplx(0.7 * 0.7 + 1.4 - 1.0)) < 1e-15);
  CHECK(std::abs(y.d() - Cplx(2.0 * 0.7 + 2.0)) < 1e-15);

  const Dual1 q = Cplx(1.0) / x;
  CHECK(std::abs(q.d() - Cplx(-1.0 / (0.7 * 0.7))) < 1e-15);
}

TEST_CASE("dual trig and exp match hand derivatives") {
  const double r = 0.37;
  const Dual1 x(Cplx(r), Cplx(1.0));

  const Dual1 s = sin(x);
  CHECK(std::abs(s.v() - std::sin(Cplx(r))) < 1e-15);
  CHECK(std::abs(s.d() - std::cos(Cplx(r))) < 1e-15);

  const Dual1 e = exp((-I / 3.0) * x);
  CHECK(std::abs(e.d() - (-I / 3.0) * std::exp(-I * r / 3.0)) < 1e-15);
}

TEST_CASE("nested duals give exact second derivatives") {
  // h(r) = e^{2r} sin(r): h'' = e^{2r}(4 sin r + 4 cos r - sin r)
  const double r = 0.9;
  const Dual2 x(Dual1(Cplx(r), Cplx(1.0)), Dual1(Cplx(1.0), Cplx(0.0)));
  const Dual2 h = exp(Cplx(2.0) * x) * sin(x);
  const Cplx expect = std::exp(2.0 * r) * (3.0 * std::sin(r) + 4.0 * std::cos(r));
  CHECK(std::abs(h.d().d() - expect) < 1e-13);
}

TEST_CASE("complex seed directions differentiate complex exponentials exactly") {
  const double r = 0.21;
  const Dual1 x(Cplx(r), Cplx(1.0));
  const Dual1 f = exp(-I * 3.0 * x);
  CHECK(std::abs(f.d() - (-3.0 * I) * std::exp(-3.0 * I * r)) < 1e-15);
}

TEST_CASE("smooth map yields gradients and hessians") {
  const SmoothMap<1, 2> m([](const auto& x) {
    using T = std::remove_cvref_t<decltype(x[0])>;
    return std::array<T, 1>{sin(x[0]) * exp(x[1])};
  });
  const std::array<Cplx, 2> x{Cplx(0.3), Cplx(-0.2)};
  CHECK(std::abs(m.d1(x, 0)[0] - std::cos(0.3) * std::exp(-0.2)) < 1e-15);
  CHECK(std::abs(m.d1(x, 1)[0] - std::sin(0.3) * std::exp(-0.2)) < 1e-15);
  CHECK(std::abs(m.d2(x, 0, 1)[0] - std::cos(0.3) * std::exp(-0.2)) < 1e-15);
  CHECK(std::abs(m.d2(x, 0, 0)[0] + std::sin(0.3) * std::exp(-0.2)) < 1e-15);
}

TEST_CASE("depth-1 maps refuse second derivatives") {
  const SmoothMap<1, 1> m(depth1, [](const auto& x) {
    using T = std::remove_cvref_t<decltype(x[0])>;
    return std::array<T, 1>{x[0] * x[0]};
  });
  CHECK(std::abs(m.d1({Cplx(2.0)}, 0)[0] - Cplx(4.0)) < 1e-15);
  CHECK_THROWS_AS(m.d2({Cplx(2.0)}, 0, 0), std::logic_error);
}
