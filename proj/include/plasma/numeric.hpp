#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace plasma {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigRational make_rational(long num, long den = 1) {
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

inline BigRational ratio(const BigInt& num, const BigInt& den) {
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

// Process-wide factorial cache. Entries are never moved once created, so the
// returned references stay valid while the cache grows.
class FactorialCache {
 public:
  static FactorialCache& instance() {
    static FactorialCache cache;
    return cache;
  }

  const BigInt& get(unsigned n) {
    {
      std::shared_lock lock(mutex_);
      if (n < values_.size()) return values_[n];
    }
    std::unique_lock lock(mutex_);
    while (values_.size() <= n) {
      BigInt next = values_.back() * static_cast<unsigned long>(values_.size());
      values_.push_back(std::move(next));
    }
    return values_[n];
  }

 private:
  FactorialCache() { values_.emplace_back(1); }

  std::shared_mutex mutex_;
  std::deque<BigInt> values_;
};

inline const BigInt& factorial(unsigned n) { return FactorialCache::instance().get(n); }

inline BigInt factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  return factorial(static_cast<unsigned>(n));
}

// (a+n)!/a! as an integer.
inline BigInt rising_ratio(unsigned a, unsigned n) {
  BigInt r = 1;
  for (unsigned k = 1; k <= n; ++k) r *= static_cast<unsigned long>(a + k);
  return r;
}

inline BigInt pow10(unsigned e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

namespace detail {

// Round a non-negative rational to the nearest integer, ties away from zero.
inline BigInt round_half_up(const BigRational& a) {
  BigInt twice_num = 2 * a.get_num() + a.get_den();
  BigInt den2 = 2 * a.get_den();
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), twice_num.get_mpz_t(), den2.get_mpz_t());
  return q;
}

// Largest E with 10^E <= a, for a > 0.
inline long decimal_exponent(const BigRational& a) {
  long e = static_cast<long>(mpz_sizeinbase(a.get_num().get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(a.get_den().get_mpz_t(), 10));
  auto pow10q = [](long k) {
    if (k >= 0) return BigRational(pow10(static_cast<unsigned>(k)));
    return BigRational(BigInt(1), pow10(static_cast<unsigned>(-k)));
  };
  while (pow10q(e) > a) --e;
  while (pow10q(e + 1) <= a) ++e;
  return e;
}

}  // namespace detail

// Correctly rounded decimal rendering with `sig` significant digits, laid out
// like printf's %g (trailing zeros dropped).
inline std::string render_decimal(const BigRational& q, int sig = 15) {
  if (sig < 1) throw std::invalid_argument("render_decimal: sig must be positive");
  if (q == 0) return "0";
  BigRational a = abs(q);
  long e = detail::decimal_exponent(a);
  long shift = sig - 1 - e;
  BigRational scaled = a;
  if (shift >= 0)
    scaled *= pow10(static_cast<unsigned>(shift));
  else
    scaled /= pow10(static_cast<unsigned>(-shift));
  BigInt m = detail::round_half_up(scaled);
  if (m == pow10(static_cast<unsigned>(sig))) {
    m /= 10;
    ++e;
  }
  std::string digits = m.get_str();
  std::string out = q < 0 ? "-" : "";
  auto strip = [](std::string s) {
    if (s.find('.') == std::string::npos) return s;
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
  };
  if (e < -4 || e >= sig) {
    std::string mant = digits.substr(0, 1) + "." + digits.substr(1);
    out += strip(mant);
    char buf[32];
    std::snprintf(buf, sizeof buf, "e%c%02ld", e < 0 ? '-' : '+', e < 0 ? -e : e);
    out += buf;
  } else if (e < 0) {
    out += strip("0." + std::string(static_cast<size_t>(-e - 1), '0') + digits);
  } else {
    auto int_len = static_cast<size_t>(e + 1);
    out += strip(digits.substr(0, int_len) + "." + digits.substr(int_len));
  }
  return out;
}

// Nearest double (within one ulp) to an exact rational.
inline double to_double(const BigRational& q) {
  return std::strtod(render_decimal(q, 17).c_str(), nullptr);
}

// Exact value of a decimal literal such as "-1.25e-3".
inline BigRational parse_decimal(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  size_t pos = 0;
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  s = s.substr(pos);
  if (s.empty()) throw std::invalid_argument("empty decimal literal");
  bool neg = false;
  size_t i = 0;
  if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
  std::string digits;
  long frac = 0;
  bool seen_point = false, any_digit = false;
  for (; i < s.size() && s[i] != 'e' && s[i] != 'E'; ++i) {
    if (s[i] == '.') {
      if (seen_point) throw std::invalid_argument("bad decimal literal: " + s);
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits += s[i];
      any_digit = true;
      if (seen_point) ++frac;
    } else {
      throw std::invalid_argument("bad decimal literal: " + s);
    }
  }
  if (!any_digit) throw std::invalid_argument("bad decimal literal: " + s);
  long exp10 = 0;
  if (i < s.size()) {
    std::string e = s.substr(i + 1);
    char* end = nullptr;
    exp10 = std::strtol(e.c_str(), &end, 10);
    if (e.empty() || *end != '\0') throw std::invalid_argument("bad decimal literal: " + s);
  }
  BigRational q{BigInt(digits, 10)};
  long net = exp10 - frac;
  if (net >= 0)
    q *= pow10(static_cast<unsigned>(net));
  else
    q /= pow10(static_cast<unsigned>(-net));
  q.canonicalize();
  return neg ? BigRational(-q) : q;
}

enum class DecimalOrigin { Exact, Truncated, Approximate };

struct Decimal {
  double value = 0.0;
  DecimalOrigin origin = DecimalOrigin::Approximate;
  std::string text;

  static Decimal exact(const BigRational& q) {
    return {to_double(q), DecimalOrigin::Exact, render_decimal(q, 15)};
  }
  static Decimal approximate(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return {v, DecimalOrigin::Approximate, buf};
  }
};

// Complementary error function. Positive-term series below x = 2, Lentz
// continued fraction above; absolute error well under 1e-12.
inline double erfc(double x) {
  if (std::isnan(x)) return x;
  if (x < 0) return 2.0 - erfc(-x);
  constexpr double inv_sqrt_pi = std::numbers::inv_sqrtpi;
  if (x < 2.0) {
    // erf(x) = 2/sqrt(pi) exp(-x^2) sum 2^n x^(2n+1) / (2n+1)!!
    double term = x, sum = x;
    double x2 = x * x;
    for (int n = 1; n < 200; ++n) {
      term *= 2.0 * x2 / (2 * n + 1);
      sum += term;
      if (term < 1e-18 * sum) break;
    }
    return 1.0 - 2.0 * inv_sqrt_pi * std::exp(-x2) * sum;
  }
  if (x > 27.0) return 0.0;
  // erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
  constexpr double tiny = 1e-300;
  double f = x, c = x, d = 0.0;
  for (int k = 1; k < 500; ++k) {
    double a = 0.5 * k;
    d = x + a * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = x + a / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-x * x) * inv_sqrt_pi / f;
}

// Neumaier compensated summation.
class CompensatedSum {
 public:
  void add(double v) {
    double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace plasma
