#ifndef SU2PF_FORMS_HPP
#define SU2PF_FORMS_HPP

#include <algorithm>
#include <array>
#include <utility>

#include "su2pf/errors.hpp"
#include "su2pf/fields.hpp"
#include "su2pf/manifold.hpp"

namespace su2pf {

// Index of the pair (a, b), a < b, in the lexicographic list of the
// C(5,2) = 10 strict pairs.
constexpr int pair_index(int a, int b) {
  // offsets 0, 4, 7, 9 for a = 0..3
  return 4 * a - a * (a - 1) / 2 + (b - a - 1);
}

constexpr std::array<std::pair<int, int>, 10> kPairs = {{
    {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4},
}};

// Index of the triple (a, b, c), a < b < c, among the C(5,3) = 10 triples.
constexpr std::array<std::array<int, 3>, 10> kTriples = {{
    {0, 1, 2},
    {0, 1, 3},
    {0, 1, 4},
    {0, 2, 3},
    {0, 2, 4},
    {0, 3, 4},
    {1, 2, 3},
    {1, 2, 4},
    {1, 3, 4},
    {2, 3, 4},
}};

// Strictly upper-triangular storage: antisymmetry is structural.
struct TwoForm {
  std::array<Cplx, 10> c{};

  Cplx coeff(int a, int b) const {
    if (a == b) return Cplx(0.0);
    return a < b ? c[pair_index(a, b)] : -c[pair_index(b, a)];
  }
  double norm_inf() const {
    double m = 0.0;
    for (const auto& z : c) m = std::max(m, std::abs(z));
    return m;
  }
  friend TwoForm operator-(const TwoForm& x, const TwoForm& y) {
    TwoForm out;
    for (int k = 0; k < 10; ++k) out.c[k] = x.c[k] - y.c[k];
    return out;
  }
};

struct ThreeForm {
  std::array<Cplx, 10> c{};

  double norm_inf() const {
    double m = 0.0;
    for (const auto& z : c) m = std::max(m, std::abs(z));
    return m;
  }
};

// Degree-2 coefficient field (10 components over the pair basis).
class TwoFormField {
 public:
  TwoFormField() = default;
  template <class F>
  explicit TwoFormField(F f) : map_(f) {}
  template <class F>
  TwoFormField(depth1_t, F f) : map_(depth1, f) {}

  TwoForm value(const std::array<Cplx, 5>& x) const { return TwoForm{map_.value(x)}; }
  std::array<Cplx, 10> d1(const std::array<Cplx, 5>& x, int a) const { return map_.d1(x, a); }

 private:
  SmoothMap<10, 5> map_;
};

// (alpha ^ beta)_{ab} = alpha_a beta_b - alpha_b beta_a.
TwoForm wedge(const Row5c& alpha, const Row5c& beta);

// (d alpha)_{ab} = d_a alpha_b - d_b alpha_a, derivatives exact.
TwoForm exterior_derivative(const OneFormField& alpha, const Point5& p);

// d alpha as a field (depth-1), for d(d alpha) checks.
TwoFormField derivative_field(const OneFormField& alpha);

// (d beta)_{abc} = d_a beta_{bc} - d_b beta_{ac} + d_c beta_{ab}.
ThreeForm d_two_form(const TwoFormField& beta, const Point5& p);

// Coefficients c_{ab} with  omega2 = sum_{a<b} c_{ab} e_a ^ e_b  for the
// given coframe rows.  Exact linear solve via the dual frame.
std::array<Cplx, 10> decompose_two_form(const Mat5c& coframe_rows, const TwoForm& omega2);

// sum_{a<b} c_{ab} e_a ^ e_b.
TwoForm reconstruct_two_form(const Mat5c& coframe_rows, const std::array<Cplx, 10>& coeffs);

}  // namespace su2pf

#endif  // SU2PF_FORMS_HPP
