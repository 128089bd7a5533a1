#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "disk.hpp"
#include "errors.hpp"
#include "numeric.hpp"

namespace plasma {

namespace detail {

inline BigRational ldexp_q(const BigInt& num, unsigned long neg_exp) {
  BigRational q(num);
  mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), neg_exp);
  return q;
}

}  // namespace detail

// I(k1, k2) = sum_{l=0}^{k1} 2^{-k2-l-1} (k2+l)! k1! / l!
inline BigRational calI(unsigned k1, unsigned k2) {
  BigRational s = 0;
  for (unsigned l = 0; l <= k1; ++l) {
    BigInt num = factorial(k2 + l) * factorial(k1);
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), factorial(l).get_mpz_t());
    s += detail::ldexp_q(num, k2 + l + 1);
  }
  return s;
}

// (1/2) erfc((k2 - k1)/sqrt(2(k1 + k2))), the large-k form of I/(k1! k2!).
inline double calI_asymptotic(unsigned k1, unsigned k2) {
  if (k1 + k2 < 1) throw std::invalid_argument("calI_asymptotic: k1 + k2 must be positive");
  const double d = static_cast<double>(k2) - static_cast<double>(k1);
  return 0.5 * erfc(d / std::sqrt(2.0 * (static_cast<double>(k1) + k2)));
}

// Exact I(k1, k2) for 0 <= k1, k2 <= max_k.
class CalITable {
 public:
  explicit CalITable(unsigned max_k) : max_k_(max_k), values_((max_k + 1) * (max_k + 1)) {
    // I(k1,k2) = k1! B(k1) / 2^{k1+k2+1} with B(k1) = 2 B(k1-1) + (k1+k2)!/k1!
    for (unsigned k2 = 0; k2 <= max_k; ++k2) {
      BigInt b = 0;
      for (unsigned k1 = 0; k1 <= max_k; ++k1) {
        BigInt term = factorial(k1 + k2);
        mpz_divexact(term.get_mpz_t(), term.get_mpz_t(), factorial(k1).get_mpz_t());
        b = 2 * b + term;
        values_[index(k1, k2)] = detail::ldexp_q(factorial(k1) * b, k1 + k2 + 1);
      }
    }
  }

  unsigned max_k() const { return max_k_; }
  const BigRational& operator()(unsigned k1, unsigned k2) const {
    if (k1 > max_k_ || k2 > max_k_) throw std::out_of_range("CalITable index beyond max_k");
    return values_[index(k1, k2)];
  }

 private:
  size_t index(unsigned k1, unsigned k2) const { return static_cast<size_t>(k1) * (max_k_ + 1) + k2; }

  unsigned max_k_;
  std::vector<BigRational> values_;
};

// (k1+n)!/k1! J(k1,k2) - J(k1+n,k2), reduced to I:  -sum_l (k1+n)!/(k1+1+l)! I(k1+l, k2).
inline BigRational j_reduced_difference(unsigned k1, unsigned k2, unsigned n) {
  BigRational s = 0;
  for (unsigned l = 0; l < n; ++l) {
    BigInt f = factorial(k1 + n);
    mpz_divexact(f.get_mpz_t(), f.get_mpz_t(), factorial(k1 + 1 + l).get_mpz_t());
    s -= f * calI(k1 + l, k2);
  }
  return s;
}

struct MTilde {
  BigRational m1, m2, m3;
  BigRational sum() const { return m1 + m2 + m3; }
};

inline constexpr int default_exact_mtilde_limit = 64;

// The three first-order coefficients in exact arithmetic.
inline MTilde m_tilde(int N, int n, int exact_limit = default_exact_mtilde_limit) {
  if (N < 1 || n < 0) throw std::invalid_argument("m_tilde: need N >= 1 and n >= 0");
  if (N > exact_limit)
    throw ResourceError("m_tilde: N=" + std::to_string(N) + " above the exact limit " + std::to_string(exact_limit));
  const unsigned un = static_cast<unsigned>(n), uN = static_cast<unsigned>(N);
  CalITable I(uN - 1 + un);
  auto rising = [](unsigned k, unsigned m) { return rising_ratio(k, m); };  // (k+m)!/k!

  BigRational s1 = 0;  // sum_k1 n (k1+n)!/k1!
  for (unsigned k1 = 0; k1 < uN; ++k1) s1 += n * rising(k1, un);

  BigRational s1b = 0, s2 = 0, s3 = 0;
  for (unsigned k1 = 0; k1 < uN; ++k1) {
    const BigInt& f1 = factorial(k1);
    const BigInt r1n = rising(k1, un);
    // sum_l (k1+n)!/(k1!(k1+1+l))
    BigRational inner1 = 0;
    for (unsigned l = 0; l < un; ++l) inner1 += ratio(r1n, k1 + 1 + l);
    for (unsigned k2 = 0; k2 < uN; ++k2) {
      if (k2 == k1) continue;
      BigInt f12 = f1 * factorial(k2);
      const BigRational& i12 = I(k1, k2);
      s1b += inner1 * i12 / f12;
      BigRational inner2 = 0;
      for (unsigned l = 0; l < un; ++l) {
        BigInt c = factorial(k1 + un);
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), factorial(k1 + 1 + l).get_mpz_t());
        inner2 += c * (I(k1 + l, k2) - rising(k1, l) * i12);
      }
      s2 += inner2 / f12;
      if (k2 > k1) {
        BigRational num = r1n * i12 - I(k1 + un, k2) + rising(k2, un) * i12 - I(k1, k2 + un);
        s3 += num / (f12 * (k2 - k1));
      }
    }
  }
  BigInt Nn;
  mpz_ui_pow_ui(Nn.get_mpz_t(), uN, un);
  BigRational scale(1, Nn);
  scale.canonicalize();
  return {scale / 2 * (s1 - s1b), -scale / 2 * s2, scale * s3};
}

// m~1 through the split into a diagonal sum and an upper-triangle sum.
inline std::pair<BigRational, BigRational> m_tilde1_split(int N, int n) {
  const unsigned un = static_cast<unsigned>(n), uN = static_cast<unsigned>(N);
  CalITable I(uN == 0 ? 0 : uN - 1);
  BigRational a = 0, b = 0;
  auto inner = [&](unsigned k) {
    BigRational s = 0;
    BigInt r = rising_ratio(k, un);
    for (unsigned l = 0; l < un; ++l) s += ratio(r, k + 1 + l);
    return s;
  };
  for (unsigned k1 = 0; k1 < uN; ++k1) {
    BigRational in1 = inner(k1);
    a += n * BigRational(rising_ratio(k1, un)) - k1 * in1;
    for (unsigned k2 = k1 + 1; k2 < uN; ++k2)
      b += I(k1, k2) / (factorial(k1) * factorial(k2)) * (in1 - inner(k2));
  }
  BigInt Nn;
  mpz_ui_pow_ui(Nn.get_mpz_t(), uN, un);
  BigRational scale(1, Nn);
  scale.canonicalize();
  return {scale / 2 * a, -scale / 2 * b};
}

struct MTildeFloat {
  double m1, m2, m3;
  double error_bound;  // bound on the absolute rounding error of each component
  double sum() const { return m1 + m2 + m3; }
};

// Double-precision evaluation for large N. Works with the ratios
// R(a,b) = I(a,b)/(a! b!) = sum_{t<=a} C(b+t,t) 2^{-b-t-1}, and writes every
// difference of R values as a sum of positive terms, so no cancellation
// occurs inside a summand. The bound is 8 eps times the sum of absolute
// values of all summands, times the deepest accumulation count.
inline MTildeFloat m_tilde_float(int N, int n) {
  if (N < 1 || n < 0) throw std::invalid_argument("m_tilde_float: need N >= 1 and n >= 0");
  const int maxk = N - 1 + n;
  if (maxk > 1000) throw ResourceError("m_tilde_float: N too large for double-precision ratios");
  const size_t W = static_cast<size_t>(maxk + 1);
  // pmf(t, b) = C(b+t, t) 2^{-b-t-1}
  std::vector<double> pmf(W * W), R(W * W);
  for (int b = 0; b <= maxk; ++b) {
    double v = std::ldexp(1.0, -b - 1), acc = 0.0;
    for (int t = 0; t <= maxk; ++t) {
      if (t > 0) v *= static_cast<double>(b + t) / (2.0 * t);
      pmf[static_cast<size_t>(t) * W + static_cast<size_t>(b)] = v;
      acc += v;
      R[static_cast<size_t>(t) * W + static_cast<size_t>(b)] = acc;
    }
  }
  auto P = [&](int t, int b) { return pmf[static_cast<size_t>(t) * W + static_cast<size_t>(b)]; };
  auto Rv = [&](int a, int b) { return R[static_cast<size_t>(a) * W + static_cast<size_t>(b)]; };
  const double dN = N;
  // (k+n)!/k! N^{-n}
  auto scaled_rising = [&](int k) {
    double r = 1.0;
    for (int i = 1; i <= n; ++i) r *= (k + i) / dN;
    return r;
  };
  auto inner = [&](int k) {  // N^{-n} sum_l (k+n)!/(k!(k+1+l))
    double s = 0.0, r = scaled_rising(k);
    for (int l = 0; l < n; ++l) s += r / (k + 1 + l);
    return s;
  };

  CompensatedSum m1a, m1b, m2, m3;
  double abs1 = 0, abs2 = 0, abs3 = 0;
  for (int k1 = 0; k1 < N; ++k1) {
    double t = n * scaled_rising(k1) - k1 * inner(k1);
    m1a.add(t);
    abs1 += std::fabs(n * scaled_rising(k1)) + std::fabs(k1 * inner(k1));
  }
  for (int k1 = 0; k1 < N; ++k1) {
    const double in1 = inner(k1), r1 = scaled_rising(k1);
    for (int k2 = 0; k2 < N; ++k2) {
      if (k2 == k1) continue;
      if (k2 > k1) {
        double t = Rv(k1, k2) * (in1 - inner(k2));
        m1b.add(t);
        abs1 += std::fabs(Rv(k1, k2)) * (std::fabs(in1) + std::fabs(inner(k2)));
        // m~3 summand: (A1 + A2)/(k2 - k1)
        double d1 = 0, d2 = 0;
        for (int s = k1 + 1; s <= k1 + n; ++s) d1 += P(s, k2);
        for (int s = k2 + 1; s <= k2 + n; ++s) d2 += P(s, k1);
        double a1 = -r1 * d1, a2 = scaled_rising(k2) * d2;
        m3.add((a1 + a2) / (k2 - k1));
        abs3 += (std::fabs(a1) + std::fabs(a2)) / (k2 - k1);
      }
      // m~2 summand: sum_l (k1+n)!/(k1!(k1+1+l)) [R(k1+l,k2) - R(k1,k2)]
      double acc = 0.0, d = 0.0;
      for (int l = 0; l < n; ++l) {
        if (l > 0) d += P(k1 + l, k2);
        acc += r1 / (k1 + 1 + l) * d;
      }
      m2.add(acc);
      abs2 += std::fabs(acc);
    }
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const double depth = 4.0 * (n + 2);
  double bound = 8.0 * eps * depth * std::max({abs1, abs2, abs3}) / 2.0;
  return {0.5 * (m1a.value() - m1b.value()), -0.5 * m2.value(), m3.value(), bound};
}

inline double m_tilde_sum(int N, int n, int exact_limit = default_exact_mtilde_limit) {
  if (N <= exact_limit) return to_double(m_tilde(N, n, exact_limit).sum());
  return m_tilde_float(N, n).sum();
}

// M_N at Gamma near 2 to first order: M|_{Gamma=2} - (Gamma-2)(m~1 + m~2 + m~3).
inline double m_moment_linearized(int N, int n, double gamma, int exact_limit = default_exact_mtilde_limit) {
  double base = to_double(m_gamma2_closed(N, n));
  if (gamma == 2.0) return base;
  return base - (gamma - 2.0) * m_tilde_sum(N, n, exact_limit);
}

}  // namespace plasma
