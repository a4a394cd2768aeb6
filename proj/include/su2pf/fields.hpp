#ifndef SU2PF_FIELDS_HPP
#define SU2PF_FIELDS_HPP

#include <array>
#include <functional>
#include <stdexcept>

#include <Eigen/Dense>

#include "su2pf/dual.hpp"

namespace su2pf {

using Row5c = std::array<Cplx, 5>;
using Mat5c = Eigen::Matrix<Cplx, 5, 5>;

// Type-erased smooth map  C^N -> C^K  stored as three instantiations of one
// generic callable: plain complex, dual (first derivatives) and nested dual
// (second derivatives).  Fields built by differentiating another field lose
// one level and are tagged depth-1; asking them for second derivatives
// throws.
struct depth1_t {
  explicit depth1_t() = default;
};
inline constexpr depth1_t depth1{};

template <int K, int N>
class SmoothMap {
 public:
  SmoothMap() = default;

  template <class F>
  explicit SmoothMap(F f) : f0_(f), f1_(f), f2_(f) {}

  template <class F>
  SmoothMap(depth1_t, F f) : f0_(f), f1_(f) {}

  std::array<Cplx, K> eval(const std::array<Cplx, N>& x) const { return f0_(x); }
  std::array<Dual1, K> eval(const std::array<Dual1, N>& x) const { return f1_(x); }
  std::array<Dual2, K> eval(const std::array<Dual2, N>& x) const {
    if (!f2_) throw std::logic_error("SmoothMap: second derivatives unavailable (depth-1 field)");
    return f2_(x);
  }

  std::array<Cplx, K> value(const std::array<Cplx, N>& x) const { return f0_(x); }

  // d/dx_a of every component.
  std::array<Cplx, K> d1(const std::array<Cplx, N>& x, int a) const {
    std::array<Dual1, N> xs;
    for (int i = 0; i < N; ++i) xs[i] = Dual1(x[i], Cplx(i == a ? 1.0 : 0.0));
    auto ys = f1_(xs);
    std::array<Cplx, K> out;
    for (int k = 0; k < K; ++k) out[k] = ys[k].d();
    return out;
  }

  // d2/(dx_a dx_b) of every component.
  std::array<Cplx, K> d2(const std::array<Cplx, N>& x, int a, int b) const {
    if (!f2_) throw std::logic_error("SmoothMap: second derivatives unavailable (depth-1 field)");
    std::array<Dual2, N> xs;
    for (int i = 0; i < N; ++i)
      xs[i] = Dual2(Dual1(x[i], Cplx(i == b ? 1.0 : 0.0)),
                    Dual1(Cplx(i == a ? 1.0 : 0.0), Cplx(0.0)));
    auto ys = f2_(xs);
    std::array<Cplx, K> out;
    for (int k = 0; k < K; ++k) out[k] = ys[k].d().d();
    return out;
  }

 private:
  std::function<std::array<Cplx, K>(const std::array<Cplx, N>&)> f0_;
  std::function<std::array<Dual1, K>(const std::array<Dual1, N>&)> f1_;
  std::function<std::array<Dual2, K>(const std::array<Dual2, N>&)> f2_;
};

// Coefficient row field over the five coordinates (psi, theta, phi, r, u).
class RowField5 {
 public:
  RowField5() = default;
  template <class F>
  explicit RowField5(F f) : map_(f) {}
  template <class F>
  RowField5(depth1_t, F f) : map_(depth1, f) {}

  template <class T>
  std::array<T, 5> eval(const std::array<T, 5>& x) const {
    return map_.eval(x);
  }
  Row5c value(const std::array<Cplx, 5>& x) const { return map_.value(x); }
  Row5c d1(const std::array<Cplx, 5>& x, int a) const { return map_.d1(x, a); }
  Row5c d2(const std::array<Cplx, 5>& x, int a, int b) const { return map_.d2(x, a, b); }

 private:
  SmoothMap<5, 5> map_;
};

// One-forms and vector fields share the row representation but are distinct
// types; mixing them is always a bug.
class OneFormField : public RowField5 {
 public:
  using RowField5::RowField5;
};

class VectorField5 : public RowField5 {
 public:
  using RowField5::RowField5;
};

class ScalarField5 {
 public:
  ScalarField5() = default;
  template <class F>
  explicit ScalarField5(F f)
      : map_([f](const auto& x) {
          using T = std::remove_cvref_t<decltype(x[0])>;
          return std::array<T, 1>{f(x)};
        }) {}

  template <class T>
  T eval(const std::array<T, 5>& x) const {
    return map_.eval(x)[0];
  }
  Cplx value(const std::array<Cplx, 5>& x) const { return map_.value(x)[0]; }
  Cplx d1(const std::array<Cplx, 5>& x, int a) const { return map_.d1(x, a)[0]; }
  Cplx d2(const std::array<Cplx, 5>& x, int a, int b) const { return map_.d2(x, a, b)[0]; }

 private:
  SmoothMap<1, 5> map_;
};

// Smooth function of one variable (profiles f(r), conformal factors).
class RFunc {
 public:
  RFunc() = default;
  template <class F>
  explicit RFunc(F f)
      : map_([f](const auto& x) {
          using T = std::remove_cvref_t<decltype(x[0])>;
          return std::array<T, 1>{f(x[0])};
        }) {}

  template <class T>
  T operator()(const T& r) const {
    return map_.eval(std::array<T, 1>{r})[0];
  }
  Cplx d1(const Cplx& r) const { return map_.d1({r}, 0)[0]; }
  Cplx d2(const Cplx& r) const { return map_.d2({r}, 0, 0)[0]; }

 private:
  SmoothMap<1, 1> map_;
};

// A full coframe: five one-form rows as one smooth field.  Rows are stored
// row-major in a flat array of 25 coefficients.
class Coframe5 {
 public:
  Coframe5() = default;
  template <class F>
  explicit Coframe5(F f) : map_(f) {}

  template <class T>
  std::array<T, 25> eval(const std::array<T, 5>& x) const {
    return map_.eval(x);
  }

  Mat5c value(const std::array<Cplx, 5>& x) const { return to_mat(map_.value(x)); }
  Mat5c d1(const std::array<Cplx, 5>& x, int a) const { return to_mat(map_.d1(x, a)); }

  // Row i (0-based) as a standalone one-form field.
  OneFormField row(int i) const {
    return OneFormField([m = map_, i](const auto& x) {
      using T = std::remove_cvref_t<decltype(x[0])>;
      auto all = m.eval(x);
      std::array<T, 5> out;
      for (int j = 0; j < 5; ++j) out[j] = all[i * 5 + j];
      return out;
    });
  }

 private:
  static Mat5c to_mat(const std::array<Cplx, 25>& flat) {
    Mat5c m;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) m(i, j) = flat[i * 5 + j];
    return m;
  }
  SmoothMap<25, 5> map_;
};

// Symmetric metric coefficient field in N coordinates, with exact first and
// second derivatives (the curvature pipeline consumes all three).
template <int N>
class MetricField {
 public:
  static constexpr int dim = N;
  using MatN = Eigen::Matrix<Cplx, N, N>;
  using Coords = std::array<Cplx, N>;

  MetricField() = default;
  template <class F>
  explicit MetricField(F f) : map_(f) {}

  template <class T>
  std::array<T, N * N> eval(const std::array<T, N>& x) const {
    return map_.eval(x);
  }
  MatN value(const std::array<Cplx, N>& x) const { return to_mat(map_.value(x)); }
  MatN d1(const std::array<Cplx, N>& x, int a) const { return to_mat(map_.d1(x, a)); }
  MatN d2(const std::array<Cplx, N>& x, int a, int b) const { return to_mat(map_.d2(x, a, b)); }

 private:
  static MatN to_mat(const std::array<Cplx, N * N>& flat) {
    MatN m;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) m(i, j) = flat[i * N + j];
    return m;
  }
  SmoothMap<N * N, N> map_;
};

// g[i][j] += coef * (A_i B_j + A_j B_i)/2, the symmetrized product of two
// one-form rows.
template <class T, class S, std::size_t N>
void add_sym_product(std::array<T, N * N>& g, const S& coef, const std::array<T, N>& a,
                     const std::array<T, N>& b) {
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) g[i * N + j] += coef * (a[i] * b[j] + a[j] * b[i]) * 0.5;
}

}  // namespace su2pf

#endif  // SU2PF_FIELDS_HPP
