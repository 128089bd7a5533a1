#pragma once

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

namespace plasma {

using Part = std::uint8_t;

enum class Kind { Symmetric, Antisymmetric };

inline Kind kind_for_half_gamma(int half_gamma) {
  return half_gamma % 2 == 0 ? Kind::Symmetric : Kind::Antisymmetric;
}

inline const char* to_string(Kind k) { return k == Kind::Symmetric ? "symmetric" : "antisymmetric"; }

// Non-increasing sequence of non-negative integers of fixed length.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw std::invalid_argument("partition parts must be non-negative");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be non-increasing");
    }
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::span<const Part> parts) : parts_(parts.begin(), parts.end()) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](size_t i) const { return parts_[i]; }

  long weight() const {
    long w = 0;
    for (int p : parts_) w += p;
    return w;
  }

  bool strictly_decreasing() const {
    for (size_t i = 1; i < parts_.size(); ++i)
      if (parts_[i] == parts_[i - 1]) return false;
    return true;
  }

  // value -> number of parts equal to it (zeros included)
  std::map<int, int> frequencies() const {
    std::map<int, int> m;
    for (int p : parts_) ++m[p];
    return m;
  }

  // prod_i m_i!
  BigInt multiplicity_factorial() const {
    BigInt r = 1;
    for (auto [value, count] : frequencies()) r *= factorial(static_cast<unsigned>(count));
    return r;
  }

  std::string to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// c * (N-1, N-2, ..., 0)
inline Partition staircase(int N, int c) {
  std::vector<int> p(static_cast<size_t>(N));
  for (int i = 0; i < N; ++i) p[static_cast<size_t>(i)] = c * (N - 1 - i);
  return Partition(std::move(p));
}

// a <= b in dominance order. Shorter partitions are padded with zeros.
inline bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight())
    throw WeightMismatchError("dominance_leq: weights differ (" + std::to_string(a.weight()) + " vs " +
                              std::to_string(b.weight()) + ")");
  long sa = 0, sb = 0;
  size_t n = std::max(a.parts().size(), b.parts().size());
  for (size_t i = 0; i < n; ++i) {
    sa += i < a.parts().size() ? a[i] : 0;
    sb += i < b.parts().size() ? b[i] : 0;
    if (sa > sb) return false;
  }
  return true;
}

namespace detail {

// Visit every partition mu obtained from rho by moving r units from part j to
// part i (i < j, 1 <= r <= rho_j), re-sorted. For the antisymmetric kind moves
// producing repeated parts are skipped and `sign` is the parity of the sort.
// The callback receives (mu, i, j, r, sign); mu points to scratch storage.
template <class F>
void for_each_squeeze_source(const Part* rho, int N, Kind kind, Part* scratch, F&& f) {
  const bool strict = kind == Kind::Antisymmetric;
  for (int i = 0; i < N; ++i) {
    for (int j = i + 1; j < N; ++j) {
      const int ri = rho[i], rj = rho[j];
      for (int r = 1; r <= rj; ++r) {
        const int a = ri + r, b = rj - r;
        // a moves left past smaller entries before i
        int li = i;
        while (li > 0 && rho[li - 1] < a) --li;
        if (strict && li > 0 && rho[li - 1] == a) continue;
        // b moves right past larger entries after j
        int lj = j;
        while (lj + 1 < N && rho[lj + 1] > b) ++lj;
        if (strict && lj + 1 < N && rho[lj + 1] == b) continue;
        int pos = 0;
        for (int k = 0; k < li; ++k) scratch[pos++] = rho[k];
        scratch[pos++] = static_cast<Part>(a);
        for (int k = li; k < i; ++k) scratch[pos++] = rho[k];
        for (int k = i + 1; k < j; ++k) scratch[pos++] = rho[k];
        for (int k = j + 1; k <= lj; ++k) scratch[pos++] = rho[k];
        scratch[pos++] = static_cast<Part>(b);
        for (int k = lj + 1; k < N; ++k) scratch[pos++] = rho[k];
        const int inversions = (i - li) + (lj - j);
        const int sign = strict && (inversions & 1) ? -1 : 1;
        f(static_cast<const Part*>(scratch), i, j, r, sign);
      }
    }
  }
}

}  // namespace detail

namespace detail {

// Binary search in flat storage sorted in reverse lexicographic order.
inline std::optional<size_t> find_flat(const std::vector<Part>& flat, int N, const Part* p) {
  const auto n = static_cast<size_t>(N);
  size_t lo = 0, hi = n == 0 ? 0 : flat.size() / n;
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    int c = std::memcmp(flat.data() + mid * n, p, n);
    if (c == 0) return mid;
    if (c > 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  return std::nullopt;
}

inline std::optional<std::vector<Part>> to_parts(const Partition& p) {
  std::vector<Part> buf(p.parts().size());
  for (size_t i = 0; i < buf.size(); ++i) {
    if (p[i] > 255) return std::nullopt;
    buf[i] = static_cast<Part>(p[i]);
  }
  return buf;
}

}  // namespace detail

// Admissible partitions for a given particle number and Gamma/2, stored flat
// in reverse lexicographic order (the top partition first). Reverse lex
// order extends dominance, so dominating members always come first.
class AdmissibleSet {
 public:
  AdmissibleSet(int N, int half_gamma, std::vector<Part> flat)
      : N_(N), half_gamma_(half_gamma), flat_(std::move(flat)) {}

  int N() const { return N_; }
  int half_gamma() const { return half_gamma_; }
  Kind kind() const { return kind_for_half_gamma(half_gamma_); }
  size_t size() const { return N_ == 0 ? 0 : flat_.size() / static_cast<size_t>(N_); }

  std::span<const Part> parts(size_t i) const {
    return {flat_.data() + i * static_cast<size_t>(N_), static_cast<size_t>(N_)};
  }
  Partition member(size_t i) const { return Partition(parts(i)); }
  Partition top() const { return staircase(N_, half_gamma_); }

  std::optional<size_t> index_of(const Part* p) const { return detail::find_flat(flat_, N_, p); }

  std::optional<size_t> index_of(const Partition& p) const {
    if (p.length() != N_) return std::nullopt;
    auto buf = detail::to_parts(p);
    if (!buf) return std::nullopt;
    return index_of(buf->data());
  }

  const std::vector<Part>& flat() const { return flat_; }

 private:
  int N_;
  int half_gamma_;
  std::vector<Part> flat_;
};

inline constexpr std::uint64_t default_member_limit = 50'000'000;

namespace detail {

struct AdmissibleShape {
  int N;
  bool strict;
  long weight;
  std::vector<long> prefix_bound;  // prefix sums of the top partition
  int max_part;
};

inline AdmissibleShape admissible_shape(int N, int half_gamma) {
  if (N < 1) throw std::invalid_argument("N must be at least 1");
  if (half_gamma < 1) throw std::invalid_argument("Gamma/2 must be at least 1");
  AdmissibleShape s{N, kind_for_half_gamma(half_gamma) == Kind::Antisymmetric, 0, {}, half_gamma * (N - 1)};
  long acc = 0;
  for (int i = 0; i < N; ++i) {
    acc += static_cast<long>(half_gamma) * (N - 1 - i);
    s.prefix_bound.push_back(acc);
  }
  s.weight = acc;
  return s;
}

// Largest sum reachable by `rem` further parts, each at most `cap` (strictly
// decreasing below `cap + 1` in the strict case).
inline long max_fill(int rem, int cap, bool strict) {
  if (!strict) return static_cast<long>(rem) * cap;
  long s = 0;
  for (int k = 0; k < rem && cap - k > 0; ++k) s += cap - k;
  return s;
}

inline long min_fill(int rem, bool strict) { return strict ? static_cast<long>(rem) * (rem - 1) / 2 : 0; }

}  // namespace detail

// Number of admissible partitions, without materialising them.
inline std::uint64_t count_admissible(int N, int half_gamma) {
  auto s = detail::admissible_shape(N, half_gamma);
  // memo keyed on (position, previous part, prefix sum)
  std::map<std::tuple<int, int, long>, std::uint64_t> memo;
  auto rec = [&](auto&& self, int k, int prev, long sum) -> std::uint64_t {
    if (k == N) return sum == s.weight ? 1 : 0;
    auto key = std::make_tuple(k, prev, sum);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    int cap = s.strict ? prev - 1 : prev;
    int rem = N - k - 1;
    for (int v = cap; v >= 0; --v) {
      long ns = sum + v;
      if (ns > s.prefix_bound[static_cast<size_t>(k)]) continue;
      if (ns + detail::max_fill(rem, s.strict ? v - 1 : v, false) < s.weight) break;
      if (s.strict && v < rem) break;
      total += self(self, k + 1, v, ns);
    }
    memo.emplace(key, total);
    return total;
  };
  return rec(rec, 0, s.max_part + (s.strict ? 1 : 0), 0);
}

// All admissible partitions for (N, Gamma/2) in reverse lexicographic order.
// Throws ResourceError when the count exceeds member_limit.
inline AdmissibleSet enumerate_admissible(int N, int half_gamma, std::uint64_t member_limit = default_member_limit) {
  auto s = detail::admissible_shape(N, half_gamma);
  if (s.max_part > 255) throw ResourceError("enumerate_admissible: parts exceed 255");
  const std::uint64_t count = count_admissible(N, half_gamma);
  if (count > member_limit)
    throw ResourceError("admissible set for N=" + std::to_string(N) + ", Gamma=" + std::to_string(2 * half_gamma) +
                        " has " + std::to_string(count) + " members, above the limit of " +
                        std::to_string(member_limit));
  std::vector<Part> flat;
  flat.reserve(count * static_cast<size_t>(N));
  std::vector<Part> cur(static_cast<size_t>(N));
  auto rec = [&](auto&& self, int k, int prev, long sum) -> void {
    if (k == N) {
      if (sum == s.weight) flat.insert(flat.end(), cur.begin(), cur.end());
      return;
    }
    int cap = s.strict ? prev - 1 : prev;
    int rem = N - k - 1;
    for (int v = cap; v >= 0; --v) {
      long ns = sum + v;
      if (ns > s.prefix_bound[static_cast<size_t>(k)]) continue;
      if (ns + detail::max_fill(rem, s.strict ? v - 1 : v, false) < s.weight) break;
      if (s.strict && v < rem) break;
      cur[static_cast<size_t>(k)] = static_cast<Part>(v);
      self(self, k + 1, v, ns);
    }
  };
  rec(rec, 0, s.max_part + (s.strict ? 1 : 0), 0);
  return AdmissibleSet(N, half_gamma, std::move(flat));
}

struct SqueezeMove {
  Partition source;  // the more dominant partition feeding the recursion
  int r;
  int i;  // 0-based positions in the target partition
  int j;
  int sign;
};

// Partitions dominated by `top` whose coefficients feed that of `mu`.
inline std::vector<SqueezeMove> squeeze_predecessors(const Partition& mu, const Partition& top, Kind kind) {
  const int N = mu.length();
  if (top.length() != N) throw std::invalid_argument("squeeze_predecessors: length mismatch");
  std::vector<Part> rho(static_cast<size_t>(N)), scratch(static_cast<size_t>(N));
  for (int k = 0; k < N; ++k) {
    if (mu[static_cast<size_t>(k)] > 255) throw std::invalid_argument("squeeze_predecessors: part exceeds 255");
    rho[static_cast<size_t>(k)] = static_cast<Part>(mu[static_cast<size_t>(k)]);
  }
  std::vector<SqueezeMove> out;
  detail::for_each_squeeze_source(rho.data(), N, kind, scratch.data(),
                                  [&](const Part* src, int i, int j, int r, int sign) {
                                    Partition p(std::span<const Part>(src, static_cast<size_t>(N)));
                                    if (dominance_leq(p, top)) out.push_back({std::move(p), r, i, j, sign});
                                  });
  return out;
}

}  // namespace plasma
