#include "su2pf/forms.hpp"

#include <Eigen/Dense>

namespace su2pf {

TwoForm wedge(const Row5c& alpha, const Row5c& beta) {
  TwoForm w;
  for (int k = 0; k < 10; ++k) {
    const auto [a, b] = kPairs[k];
    w.c[k] = alpha[a] * beta[b] - alpha[b] * beta[a];
  }
  return w;
}

TwoForm exterior_derivative(const OneFormField& alpha, const Point5& p) {
  const auto x = p.coords();
  std::array<Row5c, 5> grad;  // grad[a][b] = d_a alpha_b
  for (int a = 0; a < 5; ++a) grad[a] = alpha.d1(x, a);
  TwoForm w;
  for (int k = 0; k < 10; ++k) {
    const auto [a, b] = kPairs[k];
    w.c[k] = grad[a][b] - grad[b][a];
  }
  return w;
}

TwoFormField derivative_field(const OneFormField& alpha) {
  return TwoFormField(depth1, [alpha](const auto& x) {
    using T = std::remove_cvref_t<decltype(x[0])>;
    std::array<std::array<T, 5>, 5> grad;
    std::array<Dual<T>, 5> seeded;
    for (int a = 0; a < 5; ++a) {
      for (int i = 0; i < 5; ++i) seeded[i] = Dual<T>(x[i], T(i == a ? 1.0 : 0.0));
      const auto ys = alpha.eval(seeded);
      for (int b = 0; b < 5; ++b) grad[a][b] = ys[b].d();
    }
    std::array<T, 10> out;
    for (int k = 0; k < 10; ++k) {
      const auto [a, b] = kPairs[k];
      out[k] = grad[a][b] - grad[b][a];
    }
    return out;
  });
}

ThreeForm d_two_form(const TwoFormField& beta, const Point5& p) {
  const auto x = p.coords();
  std::array<std::array<Cplx, 10>, 5> grad;  // grad[a][pair]
  for (int a = 0; a < 5; ++a) grad[a] = beta.d1(x, a);
  auto at = [&grad](int a, int i, int j) {
    return i < j ? grad[a][pair_index(i, j)] : -grad[a][pair_index(j, i)];
  };
  ThreeForm out;
  for (int t = 0; t < 10; ++t) {
    const auto [a, b, c] = kTriples[t];
    out.c[t] = at(a, b, c) - at(b, a, c) + at(c, a, b);
  }
  return out;
}

namespace {

// Dual frame vectors as columns of rows^{-1}; throws on degenerate rows.
Mat5c dual_frame(const Mat5c& coframe_rows) {
  Eigen::PartialPivLU<Mat5c> lu(coframe_rows);
  if (std::abs(lu.determinant()) < 1e-12)
    throw SingularCoframe("decompose_two_form: coframe determinant below 1e-12");
  return lu.inverse();
}

}  // namespace

std::array<Cplx, 10> decompose_two_form(const Mat5c& coframe_rows, const TwoForm& omega2) {
  const Mat5c inv = dual_frame(coframe_rows);  // column j = dual vector of row j
  std::array<Cplx, 10> out;
  for (int k = 0; k < 10; ++k) {
    const auto [a, b] = kPairs[k];
    Cplx s(0.0);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) s += omega2.coeff(i, j) * inv(i, a) * inv(j, b);
    out[k] = s;
  }
  return out;
}

TwoForm reconstruct_two_form(const Mat5c& coframe_rows, const std::array<Cplx, 10>& coeffs) {
  TwoForm acc;
  for (int k = 0; k < 10; ++k) {
    const auto [a, b] = kPairs[k];
    Row5c ra, rb;
    for (int j = 0; j < 5; ++j) {
      ra[j] = coframe_rows(a, j);
      rb[j] = coframe_rows(b, j);
    }
    const TwoForm w = wedge(ra, rb);
    for (int m = 0; m < 10; ++m) acc.c[m] += coeffs[k] * w.c[m];
  }
  return acc;
}

}  // namespace su2pf
