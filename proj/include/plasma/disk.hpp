#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "detail/weights.hpp"
#include "numeric.hpp"
#include "sphere.hpp"
#include "vandermonde.hpp"

namespace plasma {

namespace detail {

// c^2 N!/prod m_i! * prod_l mu_l!
inline BigInt soft_weight(const CoefficientTable& t, size_t idx) {
  auto mu = t.parts(idx);
  BigInt w = t.coefficient(idx) * t.coefficient(idx) * orbit_size(mu);
  for (Part m : mu) w *= factorial(static_cast<unsigned>(m));
  return w;
}

}  // namespace detail

// Soft-disk partition function (up to N-independent constant factors).
inline BigRational z_soft(const CoefficientTable& t) {
  BigInt s = 0;
  for (size_t i = 0; i < t.size(); ++i) s += detail::soft_weight(t, i);
  return ratio(s, factorial(static_cast<unsigned>(t.N())));
}

// Scaled moment M_N = (N Gamma/2)^{-n} < sum_j |r_j|^{2n} >.
inline BigRational m_moment(const CoefficientTable& t, int n) {
  if (n < 0) throw std::invalid_argument("m_moment: n must be non-negative");
  const size_t N = static_cast<size_t>(t.N());
  BigInt z = 0, s = 0;
  for (size_t i = 0; i < t.size(); ++i) {
    BigInt w = detail::soft_weight(t, i);
    z += w;
    s += w * detail::rising_sum(t.parts(i), N, static_cast<unsigned>(n));
  }
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(N) * static_cast<unsigned long>(t.params().half_gamma()),
                static_cast<unsigned long>(n));
  BigRational r(s, z * scale);
  r.canonicalize();
  return r;
}

using DiskMoment = MomentRecord;

inline DiskMoment disk_moment(const CoefficientTable& t, int n) {
  auto v = m_moment(t, n);
  return {t.N(), t.params().gamma, n, v, Decimal::exact(v)};
}

// Gamma = 2: N (N+n)! / (N^n (1+n) N!)
inline BigRational m_gamma2_closed(int N, int n) {
  BigInt Nn;
  mpz_ui_pow_ui(Nn.get_mpz_t(), static_cast<unsigned long>(N), static_cast<unsigned long>(n));
  BigRational r(N * factorial(static_cast<unsigned>(N + n)), Nn * (n + 1) * factorial(static_cast<unsigned>(N)));
  r.canonicalize();
  return r;
}

// n = 1 holds for every N and Gamma: N/2 + (2/Gamma)(1 - Gamma/4).
inline BigRational m1_exact(long N, long gamma) {
  return make_rational(N, 2) + make_rational(2, gamma) * (1 - make_rational(gamma, 4));
}

// Characteristic function of R^2 = (N Gamma/2)^{-1} sum_j |r_j|^2.
inline std::complex<double> char_fn_r2(int N, int gamma, double k) {
  const double g = gamma;
  const double expo = -(N + g * N * (N - 1) / 4.0);
  return std::pow(std::complex<double>(1.0, -2.0 * k / (g * N)), expo);
}

struct Cumulants {
  double mean;
  double variance;
};

inline BigRational cumulant_mean_closed(long N, long gamma) { return m1_exact(N, gamma); }

// A (2/(Gamma N))^2 with A = N + Gamma N (N-1)/4.
inline BigRational cumulant_variance_closed(long N, long gamma) {
  BigRational a = BigRational(N) + make_rational(gamma * N * (N - 1), 4);
  BigRational s = make_rational(2, gamma * N);
  return a * s * s;
}

// First two cumulants by central differences of log phi with one Richardson step.
inline Cumulants cumulants_numeric(int N, int gamma, double h = 1e-4) {
  auto L = [&](double k) { return std::log(char_fn_r2(N, gamma, k)); };
  auto d1 = [&](double s) { return (L(s) - L(-s)) / (2.0 * s); };
  auto d2 = [&](double s) { return (L(s) - 2.0 * L(0.0) + L(-s)) / (s * s); };
  std::complex<double> first = (4.0 * d1(h / 2) - d1(h)) / 3.0;
  std::complex<double> second = (4.0 * d2(h / 2) - d2(h)) / 3.0;
  // log phi = i k kappa1 - k^2 kappa2 / 2 + ...
  return {first.imag(), -second.real()};
}

// Large-N prediction for M_N at moment order m: 2N/(m+2) + (m/Gamma)(1 - Gamma/4).
inline BigRational mean_o1_prediction(long N, long gamma, long m) {
  if (m <= 0 || m % 2 != 0) throw std::invalid_argument("mean_o1_prediction: m must be even and positive");
  return make_rational(2 * N, m + 2) + make_rational(m, gamma) * (1 - make_rational(gamma, 4));
}

}  // namespace plasma
