#pragma once

#include <stdexcept>
#include <utility>

#include "detail/weights.hpp"
#include "numeric.hpp"
#include "vandermonde.hpp"

namespace plasma {

struct MomentRecord {
  int N;
  int gamma;
  int n;
  BigRational exact;
  Decimal decimal;
};

namespace detail {

// (N-1) Gamma / 2: the largest single-particle degree on the sphere.
inline unsigned sphere_degree(const CoefficientTable& t) {
  return static_cast<unsigned>((t.N() - 1) * t.params().half_gamma());
}

// c^2 N!/prod m_i! * prod_{l < upto} mu_l! (K - mu_l)!
inline BigInt sphere_weight(const CoefficientTable& t, size_t idx, size_t upto) {
  const unsigned K = sphere_degree(t);
  auto mu = t.parts(idx);
  BigInt w = t.coefficient(idx) * t.coefficient(idx) * orbit_size(mu);
  for (size_t l = 0; l < upto; ++l) w *= factorial(static_cast<unsigned>(mu[l])) * factorial(K - mu[l]);
  return w;
}

}  // namespace detail

// Sphere partition function (up to N-independent constant factors).
inline BigRational z_sphere(const CoefficientTable& t) {
  BigInt s = 0;
  for (size_t i = 0; i < t.size(); ++i) s += detail::sphere_weight(t, i, static_cast<size_t>(t.N()));
  return ratio(s, factorial(static_cast<unsigned>(t.N())));
}

namespace detail {

// Sum over entries with mu_N = 0 of the reduced weight times sum_{k<N} (mu_k+n)!/mu_k!,
// scaled by N!. With n = 0 the inner sum is N-1.
inline BigInt restricted_sum(const CoefficientTable& t, unsigned n) {
  const size_t N = static_cast<size_t>(t.N());
  BigInt s = 0;
  for (size_t i = 0; i < t.size(); ++i) {
    auto mu = t.parts(i);
    if (mu[N - 1] != 0) continue;
    s += sphere_weight(t, i, N - 1) * rising_sum(mu, N - 1, n);
  }
  return s;
}

inline BigInt restricted_weight_sum(const CoefficientTable& t) {
  const size_t N = static_cast<size_t>(t.N());
  BigInt s = 0;
  for (size_t i = 0; i < t.size(); ++i)
    if (t.parts(i)[N - 1] == 0) s += sphere_weight(t, i, N - 1);
  return s;
}

}  // namespace detail

// Scaled even moment of the one-body density on the sphere.
inline BigRational i_hat(const CoefficientTable& t, int n) {
  if (n < 1) throw std::invalid_argument("i_hat: n must be at least 1");
  const int N = t.N();
  const unsigned K = detail::sphere_degree(t);
  BigInt z_scaled = 0;
  for (size_t i = 0; i < t.size(); ++i) z_scaled += detail::sphere_weight(t, i, static_cast<size_t>(N));
  BigInt s = detail::restricted_sum(t, static_cast<unsigned>(n));
  const BigInt& fk = factorial(K + 1);
  BigRational bracket(fk * fk * s, N * factorial(K + 1 + static_cast<unsigned>(n)) * z_scaled);
  bracket.canonicalize();
  bracket -= make_rational(N, n + 1);
  BigInt pref;  // (N Gamma/2)^n
  mpz_ui_pow_ui(pref.get_mpz_t(), static_cast<unsigned long>(N) * static_cast<unsigned long>(t.params().half_gamma()),
                static_cast<unsigned long>(n));
  return pref * bracket;
}

using SphereMoment = MomentRecord;

inline SphereMoment sphere_moment(const CoefficientTable& t, int n) {
  auto v = i_hat(t, n);
  return {t.N(), t.params().gamma, n, v, Decimal::exact(v)};
}

// Second moment for any N, Gamma: N Gamma / (Gamma - N Gamma - 4).
inline BigRational i_hat2_exact(long N, long gamma) { return make_rational(N * gamma, gamma - N * gamma - 4); }

// Gamma = 2: -N^n n! N! / (N+n)!
inline BigRational i_hat_gamma2_closed(int N, int n) {
  BigInt num = factorial(static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(N));
  BigInt Nn;
  mpz_ui_pow_ui(Nn.get_mpz_t(), static_cast<unsigned long>(N), static_cast<unsigned long>(n));
  BigRational r(Nn * num, factorial(static_cast<unsigned>(N + n)));
  r.canonicalize();
  return -r;
}

// Large-N limits of (I4, I6) as functions of Gamma.
inline std::pair<BigRational, BigRational> thermo_reference(long gamma) {
  BigRational g(gamma);
  return {g - 4, make_rational(3, 4) * (g - 6) * (8 - 3 * g)};
}

// Uniform density on the sphere, written as an identity between polynomials
// in y = x^2:  N (1+y)^K Z/(K+1)! = sum_mu w(mu) sum_k y^mu_k / (mu_k! (K-mu_k)!).
// Returns the largest absolute coefficient difference (zero when it holds).
inline BigRational density_constancy_deviation(const CoefficientTable& t) {
  const size_t N = static_cast<size_t>(t.N());
  const unsigned K = detail::sphere_degree(t);
  std::vector<BigInt> rhs(K + 1);
  BigInt z_scaled = 0;
  for (size_t i = 0; i < t.size(); ++i) {
    BigInt w = detail::sphere_weight(t, i, N);
    z_scaled += w;
    auto mu = t.parts(i);
    for (size_t k = 0; k < N; ++k) rhs[mu[k]] += w;
  }
  BigRational worst = 0;
  for (unsigned s = 0; s <= K; ++s) {
    BigInt binom;
    mpz_bin_uiui(binom.get_mpz_t(), K, s);
    BigRational lhs(static_cast<long>(N) * binom * z_scaled, factorial(K + 1));
    lhs.canonicalize();
    BigRational r(rhs[s], factorial(s) * factorial(K - s));
    r.canonicalize();
    BigRational d = abs(lhs - r);
    if (d > worst) worst = d;
  }
  return worst;
}

// The density identity at x = 0: N Z = (K+1)! * sum over mu_N = 0 of the reduced weight.
inline bool restricted_identity_holds(const CoefficientTable& t) {
  const unsigned K = detail::sphere_degree(t);
  BigInt z_scaled = 0;
  for (size_t i = 0; i < t.size(); ++i) z_scaled += detail::sphere_weight(t, i, static_cast<size_t>(t.N()));
  return t.N() * z_scaled == factorial(K + 1) * detail::restricted_weight_sum(t);
}

}  // namespace plasma
