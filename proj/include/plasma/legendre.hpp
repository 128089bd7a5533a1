#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

namespace plasma {

// Coulomb potential on the sphere in the Legendre basis, l >= 1.
inline BigRational coulomb_v(long l) {
  if (l < 1) throw std::invalid_argument("coulomb_v: l must be at least 1");
  return make_rational(2 * l + 1, 2 * l * (l + 1));
}

// Chain-resummed kernel -Gamma (2l+1) / (2l(l+1) + N Gamma), l >= 0.
inline BigRational kernel_K(long l, long N, long gamma) {
  if (l < 0) throw std::invalid_argument("kernel_K: l must be non-negative");
  return make_rational(-gamma * (2 * l + 1), 2 * l * (l + 1) + N * gamma);
}

inline double kernel_K_double(long l, double x, double gamma) {
  return -gamma * static_cast<double>(2 * l + 1) / (2.0 * static_cast<double>(l) * static_cast<double>(l + 1) + x);
}

namespace detail {

// Coefficient of P_lpp in P_l P_lp, evaluated in arithmetic type T.
template <class T>
T product_coeff(long l, long lp, int lpp) {
  const T L(l), one(1);
  auto off2 = [](const T& a) -> T { return T(5) / 4 * (6 * (a + 1) * (a + 2)) / ((2 * a + 1) * (2 * a + 3) * (2 * a + 5)); };
  switch (lpp) {
    case 1:
      if (lp == l + 1) return T(3) / 2 * (2 * (L + 1)) / ((2 * L + 1) * (2 * L + 3));
      if (lp == l - 1) return T(3) / 2 * (2 * L) / ((2 * L - 1) * (2 * L + 1));
      return T(0);
    case 2:
      if (lp == l + 2) return off2(L);
      if (l == lp + 2) return off2(T(lp));
      if (l == lp) return T(5 * L * (L + 1)) / ((2 * L - 1) * (2 * L + 1) * (2 * L + 3));
      return T(0);
    case 3: {
      T pre = T(7) / (2 * (2 * L + 1));
      if (lp == l - 3) return pre * (5 * L * (L - 1) * (L - 2)) / ((2 * L - 1) * (2 * L - 3) * (2 * L - 5));
      if (lp == l - 1) return pre * (3 * L * (L * L - 1)) / ((2 * L - 3) * (2 * L + 3) * (2 * L - 1));
      if (lp == l + 3) return pre * (5 * (L + 1) * (L + 2) * (L + 3)) / ((2 * L + 3) * (2 * L + 5) * (2 * L + 7));
      if (lp == l + 1) return pre * (3 * (L + 1) * ((L + 1) * (L + 1) - one)) / ((2 * L - 1) * (2 * L + 5) * (2 * L + 3));
      return T(0);
    }
    default:
      throw std::invalid_argument("legendre product coefficient: lpp must be 1, 2 or 3");
  }
}

}  // namespace detail

// Coefficient of P_lpp in P_l P_lp, for lpp in {1, 2, 3}.
inline BigRational legendre_product_coeff(long l, long lp, int lpp) {
  if (l < 0 || lp < 0) throw std::invalid_argument("legendre_product_coeff: negative degree");
  BigRational r = detail::product_coeff<BigRational>(l, lp, lpp);
  r.canonicalize();
  return r;
}

inline double legendre_product_coeff_double(long l, long lp, int lpp) {
  if (l < 0 || lp < 0) throw std::invalid_argument("legendre_product_coeff: negative degree");
  return detail::product_coeff<double>(l, lp, lpp);
}

inline BigRational m1_closed(long N, long gamma) { return make_rational(3 * gamma, 2 * N); }

inline BigRational m3_closed(long N, long gamma) {
  return make_rational(7 * (2 + 3 * N * gamma) * gamma, 2 * N * (12 + 3 * N * gamma));
}

struct SeriesResult {
  double value;
  double tail_bound;  // analytic bound on the neglected tail
  long terms;
};

inline constexpr long max_series_terms = 10'000'000;

namespace detail {

// Bounds C with |term_l| <= C Gamma^2 / l^3, so the tail past L is below C Gamma^2 / (2 L^2).
inline double series_tail_constant(int lpp) {
  switch (lpp) {
    case 1: return 3.0;          // both orderings of the (l, l+1) pair
    case 2: return 5.0;          // 2 * 5/2
    case 3: return 77.0 / 8.0;   // 2 * 77/16
    default: throw std::invalid_argument("series_tail_constant: lpp must be 1, 2 or 3");
  }
}

// f-form of m_2: each summand is below (5/2)/l^3 for l >= 2.
inline constexpr double m2_tail_constant = 2.5;

inline long terms_for_constant(double c_tail, double gamma, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("series tolerance must be positive");
  double c = c_tail * gamma * gamma;
  double L = std::ceil(std::sqrt(c / (2.0 * tol)));
  if (L > static_cast<double>(max_series_terms))
    throw ConvergenceError("series needs more than 1e7 terms for the requested tolerance");
  return std::max(2L, static_cast<long>(L));
}

inline long terms_for_tolerance(int lpp, double gamma, double tol) {
  return terms_for_constant(series_tail_constant(lpp), gamma, tol);
}

}  // namespace detail

// Partial double sum  sum_{l <= L} sum_{l'} K_l K_l' p^{l l'}_{lpp}.
inline SeriesResult m_series_partial(int lpp, long N, long gamma, long L) {
  const double x = static_cast<double>(N) * gamma, g = static_cast<double>(gamma);
  CompensatedSum sum;
  for (long l = 0; l <= L; ++l) {
    for (long lp = std::max(0L, l - lpp); lp <= l + lpp; ++lp) {
      double p = legendre_product_coeff_double(l, lp, lpp);
      if (p == 0.0) continue;
      sum.add(kernel_K_double(l, x, g) * kernel_K_double(lp, x, g) * p);
    }
  }
  return {sum.value(), detail::series_tail_constant(lpp) * g * g / (2.0 * static_cast<double>(L * L)), L};
}

// The same double sum, truncated where the analytic tail bound drops below tol.
inline SeriesResult m_series(int lpp, long N, long gamma, double tol = 1e-12) {
  return m_series_partial(lpp, N, gamma, detail::terms_for_tolerance(lpp, static_cast<double>(gamma), tol));
}

// m_2 = Gamma^2 f(N Gamma), summed term by term with compensated summation.
inline SeriesResult m2_series(long N, long gamma, double tol = 1e-12) {
  const double g = static_cast<double>(gamma), x = static_cast<double>(N) * g;
  const long L = detail::terms_for_constant(detail::m2_tail_constant, g, tol);
  CompensatedSum f;
  for (long li = 0; li <= L; ++li) {
    const double l = static_cast<double>(li);
    const double a = 2.0 * l * (l + 1) + x;
    const double b = 2.0 * (l + 2) * (l + 3) + x;
    f.add(15.0 * (l + 1) * (l + 2) / (a * b * (2 * l + 3)));
    f.add(5.0 * (2 * l + 1) * l * (l + 1) / (a * a * (2 * l - 1) * (2 * l + 3)));
  }
  return {g * g * f.value(), detail::m2_tail_constant * g * g / (2.0 * static_cast<double>(L * L)), L};
}

namespace detail {

inline BigRational oz_total(const BigRational& c, long N, long l, long gamma) {
  BigRational den = 1 - BigRational(N) * c / (2 * l + 1);
  if (den == 0)
    throw PoleError("OZ denominator vanishes for N=" + std::to_string(N) + ", Gamma=" + std::to_string(gamma) +
                    ", l=" + std::to_string(l));
  return c / den;
}

}  // namespace detail

// h_l from c_l = -Gamma v_l + m_l/2, exact for l = 1 and l = 3.
inline BigRational h_approx_exact(long N, long gamma, int l) {
  BigRational m;
  if (l == 1)
    m = m1_closed(N, gamma);
  else if (l == 3)
    m = m3_closed(N, gamma);
  else
    throw std::invalid_argument("h_approx_exact: l must be 1 or 3");
  BigRational c = -BigRational(gamma) * coulomb_v(l) + m / 2;
  return detail::oz_total(c, N, l, gamma);
}

// Rational form of h_3 obtained by clearing denominators in the OZ relation.
inline BigRational h3_closed(long N, long gamma) {
  BigRational num = -7 * (-4 + N * (4 - 6 * gamma) + N * N * gamma) * gamma;
  BigRational den = N * (96 + 4 * (7 * N - 1) * gamma + (N - 6) * N * gamma * gamma);
  if (den == 0) throw PoleError("h3_closed: vanishing denominator");
  return num / den;
}

inline double h_approx(long N, long gamma, int l, double tol = 1e-12) {
  if (l == 1 || l == 3) return to_double(h_approx_exact(N, gamma, l));
  if (l != 2) throw std::invalid_argument("h_approx: l must be 1, 2 or 3");
  const double m2 = m2_series(N, gamma, tol).value;
  const double c = -static_cast<double>(gamma) * 5.0 / 12.0 + m2 / 2.0;
  const double den = 1.0 - static_cast<double>(N) * c / 5.0;
  if (den == 0.0)
    throw PoleError("OZ denominator vanishes for N=" + std::to_string(N) + ", Gamma=" + std::to_string(gamma) + ", l=2");
  return c / den;
}

inline double i4_approx(long N, long gamma, double tol = 1e-12) {
  const double x = static_cast<double>(N) * gamma;
  const double h2 = h_approx(N, gamma, 2, tol);
  return x * x / 24.0 * (static_cast<double>(N) * h2 / 5.0 + 1.0 + 12.0 / (static_cast<double>(gamma) - x - 4.0));
}

inline double i6_approx(long N, long gamma, double tol = 1e-12) {
  const double x = static_cast<double>(N) * gamma, n = static_cast<double>(N);
  const double h2 = h_approx(N, gamma, 2, tol);
  const double h3 = h_approx(N, gamma, 3, tol);
  return x * x * x *
         (-n * h3 / 1120.0 + n * h2 / 160.0 + 1.0 / 40.0 + 9.0 / (40.0 * (static_cast<double>(gamma) - x - 4.0)));
}

struct LegendreCoefficients {
  long N;
  long gamma;
  long max_degree;
  std::vector<BigRational> v;  // v[0] unused (l = 0 excluded)
  std::vector<BigRational> K;
  std::map<int, double> m;
  std::map<int, double> h_approx;
};

inline LegendreCoefficients legendre_coefficients(long N, long gamma, long max_degree, double tol = 1e-12) {
  LegendreCoefficients c{N, gamma, max_degree, {}, {}, {}, {}};
  c.v.emplace_back(0);
  for (long l = 1; l <= max_degree; ++l) c.v.push_back(coulomb_v(l));
  for (long l = 0; l <= max_degree; ++l) c.K.push_back(kernel_K(l, N, gamma));
  c.m[1] = to_double(m1_closed(N, gamma));
  c.m[2] = m2_series(N, gamma, tol).value;
  c.m[3] = to_double(m3_closed(N, gamma));
  for (int l = 1; l <= 3; ++l) c.h_approx[l] = h_approx(N, gamma, l, tol);
  return c;
}

}  // namespace plasma
