#pragma once

#include <span>

#include "../numeric.hpp"
#include "../partitions.hpp"

namespace plasma::detail {

// N!/prod_i m_i! for a sorted part sequence (zeros count as a value).
inline BigInt orbit_size(std::span<const Part> mu) {
  BigInt r = factorial(static_cast<unsigned>(mu.size()));
  size_t run = 1;
  for (size_t i = 1; i <= mu.size(); ++i) {
    if (i < mu.size() && mu[i] == mu[i - 1]) {
      ++run;
    } else {
      if (run > 1) r /= factorial(static_cast<unsigned>(run));
      run = 1;
    }
  }
  return r;
}

// sum_k (mu_k + n)!/mu_k! over the first `count` parts
inline BigInt rising_sum(std::span<const Part> mu, size_t count, unsigned n) {
  BigInt s = 0;
  for (size_t k = 0; k < count; ++k) s += rising_ratio(mu[k], n);
  return s;
}

}  // namespace plasma::detail
