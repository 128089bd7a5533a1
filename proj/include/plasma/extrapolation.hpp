#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "numeric.hpp"

namespace plasma {

enum class FitBasis { InversePowers, DiskMean };

inline std::string to_string(FitBasis b) { return b == FitBasis::InversePowers ? "inverse-powers" : "disk-mean"; }

struct FitPoint {
  int N;
  BigRational value;
};

struct FitResult {
  FitBasis basis;
  int anchorN;
  std::array<double, 4> coefficients;
  double residual;  // largest relative miss at the input points

  double predict(double N) const {
    const auto& c = coefficients;
    if (basis == FitBasis::InversePowers) return c[0] + c[1] / N + c[2] / (N * N) + c[3] / (N * N * N);
    return c[0] * N + c[1] + c[2] / std::sqrt(N) + c[3] / N;
  }
};

class SingularFitError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline constexpr mp_bitcnt_t fit_precision_bits = 512;

// Gaussian elimination with pivoting on the largest magnitude.
template <class T>
std::array<T, 4> solve4(std::array<std::array<T, 4>, 4> a, std::array<T, 4> b) {
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (abs(a[r][col]) > abs(a[piv][col])) piv = r;
    if (a[piv][col] == 0) throw SingularFitError("fit4: singular system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (int r = col + 1; r < 4; ++r) {
      T f = a[r][col] / a[col][col];
      for (int k = col; k < 4; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  std::array<T, 4> x = b;  // copies keep the working precision
  for (int r = 3; r >= 0; --r) {
    T s = b[r];
    for (int k = r + 1; k < 4; ++k) s -= a[r][k] * x[k];
    x[r] = s / a[r][r];
  }
  return x;
}

template <class T>
double relative_residual(const std::array<std::array<T, 4>, 4>& a, const std::array<T, 4>& b,
                         const std::array<T, 4>& x) {
  double worst = 0;
  for (int r = 0; r < 4; ++r) {
    T p = b[r];
    p = 0;
    for (int k = 0; k < 4; ++k) p += a[r][k] * x[k];
    T miss = abs(p - b[r]);
    T scale = abs(b[r]);
    double rel = scale == 0 ? miss.get_d() : T(miss / scale).get_d();
    worst = std::max(worst, rel);
  }
  return worst;
}

inline void check_points(std::span<const FitPoint> pts) {
  if (pts.size() != 4) throw std::invalid_argument("fit4: exactly 4 points required");
  std::set<int> seen;
  for (const auto& p : pts) {
    if (p.N < 1) throw std::invalid_argument("fit4: N must be positive");
    if (!seen.insert(p.N).second) throw std::invalid_argument("fit4: N values must be distinct");
  }
}

}  // namespace detail

// Exact interpolation through 4 points. Inverse powers are solved in rationals;
// the disk-mean basis has 1/sqrt(N) and is solved in 512-bit floating point.
inline FitResult fit4(std::span<const FitPoint> pts, FitBasis basis) {
  detail::check_points(pts);
  int anchor = 0;
  for (const auto& p : pts) anchor = std::max(anchor, p.N);
  FitResult out{basis, anchor, {}, 0.0};
  if (basis == FitBasis::InversePowers) {
    std::array<std::array<BigRational, 4>, 4> a;
    std::array<BigRational, 4> b;
    for (int r = 0; r < 4; ++r) {
      BigRational inv = make_rational(1, pts[r].N);
      a[r] = {BigRational(1), inv, inv * inv, inv * inv * inv};
      b[r] = pts[r].value;
    }
    auto x = detail::solve4(a, b);
    for (int k = 0; k < 4; ++k) out.coefficients[k] = to_double(x[k]);
    out.residual = detail::relative_residual(a, b, x);
  } else {
    using F = mpf_class;
    const auto prec = detail::fit_precision_bits;
    std::array<std::array<F, 4>, 4> a;
    std::array<F, 4> b;
    for (int r = 0; r < 4; ++r) {
      F n(pts[r].N, prec);
      F rt(0, prec);
      mpf_sqrt(rt.get_mpf_t(), n.get_mpf_t());
      a[r] = {n, F(1, prec), F(1 / rt, prec), F(1 / n, prec)};
      b[r] = F(pts[r].value, prec);
    }
    auto x = detail::solve4(a, b);
    for (int k = 0; k < 4; ++k) out.coefficients[k] = x[k].get_d();
    out.residual = detail::relative_residual(a, b, x);
  }
  return out;
}

inline FitResult fit4(const std::vector<FitPoint>& pts, FitBasis basis) {
  return fit4(std::span<const FitPoint>(pts), basis);
}

// Row-wise fits as laid out in the tables: row i uses points i-3..i, so the
// first three rows have no fit.
inline std::vector<std::optional<FitResult>> fit_rows(const std::vector<FitPoint>& seq, FitBasis basis) {
  std::vector<std::optional<FitResult>> rows(seq.size());
  for (size_t i = 3; i < seq.size(); ++i) rows[i] = fit4(std::span<const FitPoint>(seq.data() + i - 3, 4), basis);
  return rows;
}

}  // namespace plasma
