#include "su2pf/manifold.hpp"

namespace su2pf {

std::array<Row5c, 3> su2_coframe(const Point5& p) { return su2_sigma_rows(p.coords()); }

std::array<Row5c, 3> su2_frame(const Point5& p) { return su2_frame_rows(p.coords()); }

OneFormField sigma_field(int i) {
  return OneFormField([i](const auto& x) { return su2_sigma_rows(x)[i - 1]; });
}

VectorField5 frame_field(int i) {
  return VectorField5([i](const auto& x) { return su2_frame_rows(x)[i - 1]; });
}

Row5c lie_bracket(const VectorField5& x, const VectorField5& y, const Point5& p) {
  const auto c = p.coords();
  const Row5c xv = x.value(c);
  const Row5c yv = y.value(c);
  Row5c out{};
  for (int a = 0; a < 5; ++a) {
    const Row5c dy = y.d1(c, a);
    const Row5c dx = x.d1(c, a);
    for (int k = 0; k < 5; ++k) out[k] += xv[a] * dy[k] - yv[a] * dx[k];
  }
  return out;
}

VectorField5 lie_bracket_field(const VectorField5& x, const VectorField5& y) {
  return VectorField5(depth1, [x, y](const auto& c) {
    using T = std::remove_cvref_t<decltype(c[0])>;
    std::array<Dual<T>, 5> seeded;
    const auto xv = x.eval(c);
    const auto yv = y.eval(c);
    std::array<T, 5> out{};
    for (int a = 0; a < 5; ++a) {
      for (int i = 0; i < 5; ++i) seeded[i] = Dual<T>(c[i], T(i == a ? 1.0 : 0.0));
      const auto dy = y.eval(seeded);
      const auto dx = x.eval(seeded);
      for (int k = 0; k < 5; ++k) out[k] += xv[a] * dy[k].d() - yv[a] * dx[k].d();
    }
    return out;
  });
}

}  // namespace su2pf
