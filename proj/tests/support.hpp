#pragma once

#include <plasma/vandermonde.hpp>

#include <filesystem>
#include <map>
#include <mutex>
#include <string_view>
#include <utility>

namespace testsupport {

// Tables shared across the suite through an on-disk cache in the build tree.
inline const plasma::CoefficientTable& table(int N, int gamma) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, plasma::CoefficientTable> memo;
  std::lock_guard lock(mu);
  auto key = std::make_pair(N, gamma);
  auto it = memo.find(key);
  if (it == memo.end())
    it = memo.emplace(key, plasma::cached_expand(plasma::PlasmaParams::make(N, gamma), PLASMA_TEST_CACHE_DIR)).first;
  return it->second;
}

// Significant digits in a printed decimal, ignoring sign, point and exponent.
inline int significant_digits(std::string_view s) {
  int count = 0;
  bool started = false;
  for (char c : s) {
    if (c == 'e' || c == 'E') break;
    if (c < '0' || c > '9') continue;
    if (c != '0') started = true;
    if (started) ++count;
  }
  return count;
}

// Largest N per Gamma for which tables are built in the test suite.
inline int max_test_N(int gamma) {
  switch (gamma) {
    case 2: return 12;
    case 4: return 10;
    case 6: return 9;
    case 8: return 7;
    default: return 4;
  }
}

}  // namespace testsupport
