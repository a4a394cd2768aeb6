#ifndef SU2PF_DUAL_HPP
#define SU2PF_DUAL_HPP

#include <cmath>
#include <complex>
#include <concepts>
#include <type_traits>
#include <utility>

namespace su2pf {

using Cplx = std::complex<double>;

// First-order forward-mode dual number over a scalar ring T.
// Dual<Cplx> carries one exact directional derivative; Dual<Dual<Cplx>>
// carries exact second derivatives.  All coefficient functions in this
// library are evaluated on these types, so derivatives are algorithmic,
// never finite-differenced.
template <class T>
class Dual {
 public:
  constexpr Dual() = default;

  template <class U>
    requires(std::constructible_from<T, U> &&
             !std::same_as<std::remove_cvref_t<U>, Dual>)
  constexpr Dual(U&& value) : v_(std::forward<U>(value)) {}

  constexpr Dual(T value, T deriv) : v_(std::move(value)), d_(std::move(deriv)) {}

  constexpr const T& v() const { return v_; }
  constexpr const T& d() const { return d_; }

  friend constexpr Dual operator+(const Dual& a, const Dual& b) {
    return {a.v_ + b.v_, a.d_ + b.d_};
  }
  friend constexpr Dual operator-(const Dual& a, const Dual& b) {
    return {a.v_ - b.v_, a.d_ - b.d_};
  }
  friend constexpr Dual operator*(const Dual& a, const Dual& b) {
    return {a.v_ * b.v_, a.v_ * b.d_ + a.d_ * b.v_};
  }
  friend constexpr Dual operator/(const Dual& a, const Dual& b) {
    return {a.v_ / b.v_, (a.d_ * b.v_ - a.v_ * b.d_) / (b.v_ * b.v_)};
  }
  friend constexpr Dual operator-(const Dual& a) { return {-a.v_, -a.d_}; }
  friend constexpr Dual operator+(const Dual& a) { return a; }

  Dual& operator+=(const Dual& b) { return *this = *this + b; }
  Dual& operator-=(const Dual& b) { return *this = *this - b; }
  Dual& operator*=(const Dual& b) { return *this = *this * b; }
  Dual& operator/=(const Dual& b) { return *this = *this / b; }

 private:
  T v_{};
  T d_{};
};

template <class T>
Dual<T> sin(const Dual<T>& x) {
  using std::cos;
  using std::sin;
  return {sin(x.v()), cos(x.v()) * x.d()};
}

template <class T>
Dual<T> cos(const Dual<T>& x) {
  using std::cos;
  using std::sin;
  return {cos(x.v()), -sin(x.v()) * x.d()};
}

template <class T>
Dual<T> exp(const Dual<T>& x) {
  using std::exp;
  T e = exp(x.v());
  return {e, e * x.d()};
}

using Dual1 = Dual<Cplx>;
using Dual2 = Dual<Dual1>;

// Underlying complex value of an arbitrarily nested dual.
inline const Cplx& leaf_value(const Cplx& x) { return x; }
template <class T>
const Cplx& leaf_value(const Dual<T>& x) {
  return leaf_value(x.v());
}

}  // namespace su2pf

#endif  // SU2PF_DUAL_HPP
