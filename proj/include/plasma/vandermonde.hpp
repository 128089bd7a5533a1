#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"
#include "partitions.hpp"

namespace plasma {

struct PlasmaParams {
  int N = 1;
  int gamma = 2;

  static PlasmaParams make(int N, int gamma) {
    if (N < 1) throw std::invalid_argument("N must be at least 1");
    if (gamma < 2 || gamma % 2 != 0) throw std::invalid_argument("Gamma must be an even integer >= 2");
    return {N, gamma};
  }

  int half_gamma() const { return gamma / 2; }
  Kind kind() const { return kind_for_half_gamma(half_gamma()); }
  int p() const { return kind() == Kind::Symmetric ? gamma / 4 : (gamma - 2) / 4; }
  // Jack parameter: -2/(2p-1) for Gamma = 4p, -2/(2p+1) for Gamma = 4p+2.
  BigRational alpha() const {
    return kind() == Kind::Symmetric ? make_rational(-2, 2 * p() - 1) : make_rational(-2, 2 * p() + 1);
  }
  Partition top() const { return staircase(N, half_gamma()); }
};

// sum_i k_i (k_i - 1 - (2/alpha)(i-1))
inline BigRational eigenvalue_symmetric(const Partition& k, const BigRational& alpha) {
  BigRational two_over = 2 / alpha;
  BigRational e = 0;
  for (int i = 0; i < k.length(); ++i) {
    long ki = k[static_cast<size_t>(i)];
    e += BigRational(ki) * (BigRational(ki - 1) - two_over * i);
  }
  return e;
}

// sum_i k_i (k_i + 2 i (1 - 1/alpha)), i counted from 1
inline BigRational eigenvalue_antisymmetric(const Partition& k, const BigRational& alpha) {
  BigRational c = 1 - 1 / alpha;
  BigRational e = 0;
  for (int i = 0; i < k.length(); ++i) {
    long ki = k[static_cast<size_t>(i)];
    e += BigRational(ki) * (BigRational(ki) + 2 * (i + 1) * c);
  }
  return e;
}

// Sum of |c| reduced modulo 2^61 - 1.
inline BigInt coefficient_checksum(const std::vector<BigInt>& coeffs) {
  BigInt m = (BigInt(1) << 61) - 1;
  BigInt s = 0;
  for (const auto& c : coeffs) s += abs(c);
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), s.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Nonzero expansion coefficients keyed by partition, in reverse lex order.
class CoefficientTable {
 public:
  CoefficientTable(PlasmaParams params, std::vector<Part> flat, std::vector<BigInt> coeffs)
      : params_(params), flat_(std::move(flat)), coeffs_(std::move(coeffs)) {
    if (flat_.size() != coeffs_.size() * static_cast<size_t>(params_.N))
      throw std::invalid_argument("CoefficientTable: storage size mismatch");
  }

  const PlasmaParams& params() const { return params_; }
  int N() const { return params_.N; }
  size_t size() const { return coeffs_.size(); }

  std::span<const Part> parts(size_t i) const {
    return {flat_.data() + i * static_cast<size_t>(params_.N), static_cast<size_t>(params_.N)};
  }
  Partition partition(size_t i) const { return Partition(parts(i)); }
  const BigInt& coefficient(size_t i) const { return coeffs_[i]; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  std::optional<BigInt> find(const Partition& p) const {
    if (p.length() != params_.N) return std::nullopt;
    auto buf = detail::to_parts(p);
    if (!buf) return std::nullopt;
    if (auto idx = detail::find_flat(flat_, params_.N, buf->data())) return coeffs_[*idx];
    return std::nullopt;
  }

  BigInt checksum() const { return coefficient_checksum(coeffs_); }

  bool operator==(const CoefficientTable& o) const {
    return params_.N == o.params_.N && params_.gamma == o.params_.gamma && flat_ == o.flat_ && coeffs_ == o.coeffs_;
  }

 private:
  PlasmaParams params_;
  std::vector<Part> flat_;
  std::vector<BigInt> coeffs_;
};

// Expansion coefficients through the eigenvalue recursion.
//
// Symmetric kind: monomial coefficients of the Jack polynomial at alpha,
//   c_rho = (2/alpha)/(e_top - e_rho) * sum (rho_i - rho_j + 2r) c_mu.
// Antisymmetric kind: the same recursion in the antisymmetrized basis with
// factor (rho_i - rho_j) * sign, prefactor 2/alpha and diagonal taken from the
// antisymmetric eigenvalue at alpha/(1 + alpha).
inline CoefficientTable expand(const PlasmaParams& params, std::uint64_t member_limit = default_member_limit) {
  const int N = params.N;
  const Kind kind = params.kind();
  AdmissibleSet set = enumerate_admissible(N, params.half_gamma(), member_limit);
  const size_t n = set.size();

  // Everything is integral: 2/alpha = -(2p-1) or -(2p+1).
  const long slope = kind == Kind::Symmetric ? 2L * params.p() - 1 : 2L * params.p() + 1;  // = -2/alpha
  auto eigen = [&](std::span<const Part> r) {
    long e = 0;
    for (int i = 0; i < N; ++i) {
      long ri = r[static_cast<size_t>(i)];
      if (kind == Kind::Symmetric)
        e += ri * (ri - 1) + slope * i * ri;
      else
        e += ri * ri + slope * i * ri;
    }
    return e;
  };

  std::vector<BigInt> c(n);
  c[0] = 1;
  const long e_top = eigen(set.parts(0));
  std::vector<Part> scratch(static_cast<size_t>(N));
  BigInt acc, num;
  for (size_t idx = 1; idx < n; ++idx) {
    auto rho = set.parts(idx);
    acc = 0;
    detail::for_each_squeeze_source(rho.data(), N, kind, scratch.data(), [&](const Part* mu, int i, int j, int r, int sign) {
      auto src = set.index_of(mu);
      if (!src) return;
      const BigInt& cm = c[*src];
      if (cm == 0) return;
      unsigned long f = kind == Kind::Symmetric ? static_cast<unsigned long>(rho[i] - rho[j] + 2 * r)
                                                : static_cast<unsigned long>(rho[i] - rho[j]);
      if (sign > 0)
        mpz_addmul_ui(acc.get_mpz_t(), cm.get_mpz_t(), f);
      else
        mpz_submul_ui(acc.get_mpz_t(), cm.get_mpz_t(), f);
    });
    const long delta = e_top - eigen(rho);
    if (delta == 0) {
      throw DegenerateEigenvalueError("degenerate eigenvalue at partition " + set.member(idx).to_string() +
                                      " for N=" + std::to_string(N) + ", Gamma=" + std::to_string(params.gamma));
    }
    num = -slope * acc;
    BigInt d = delta;
    if (!mpz_divisible_p(num.get_mpz_t(), d.get_mpz_t()))
      throw IntegralityError("non-integral coefficient at partition " + set.member(idx).to_string());
    mpz_divexact(c[idx].get_mpz_t(), num.get_mpz_t(), d.get_mpz_t());
  }

  std::vector<Part> flat;
  std::vector<BigInt> coeffs;
  flat.reserve(set.flat().size());
  coeffs.reserve(n);
  for (size_t idx = 0; idx < n; ++idx) {
    if (c[idx] == 0) continue;
    auto p = set.parts(idx);
    flat.insert(flat.end(), p.begin(), p.end());
    coeffs.push_back(std::move(c[idx]));
  }
  return CoefficientTable(params, std::move(flat), std::move(coeffs));
}

struct BruteForceLimits {
  int max_N = 6;
  int max_gamma = 8;
};

// Direct multiplication of the Vandermonde power over exponent vectors. The
// coefficient of the sorted monomial z^mu is c_mu in either basis. The table
// is normalised so the top coefficient is +1.
inline CoefficientTable brute_force_expand(const PlasmaParams& params, BruteForceLimits limits = {}) {
  const int N = params.N;
  const int h = params.half_gamma();
  if (N > limits.max_N || params.gamma > limits.max_gamma)
    throw ResourceError("brute_force_expand: N=" + std::to_string(N) + ", Gamma=" + std::to_string(params.gamma) +
                        " beyond the oracle limits");
  const int max_exp = h * (N - 1);
  int bits = 1;
  while ((1 << bits) <= max_exp) ++bits;
  if (bits * N > 64) throw ResourceError("brute_force_expand: exponent vector does not fit 64 bits");

  using Poly = std::unordered_map<std::uint64_t, BigInt>;
  Poly poly{{0, BigInt(1)}};
  // binomial coefficients of (z_k - z_j)^h
  std::vector<BigInt> binom(static_cast<size_t>(h + 1));
  for (int t = 0; t <= h; ++t) mpz_bin_uiui(binom[static_cast<size_t>(t)].get_mpz_t(), h, t);

  for (int j = 0; j < N; ++j) {
    for (int k = j + 1; k < N; ++k) {
      // (z_k - z_j)^h = sum_t C(h,t) z_k^t (-z_j)^(h-t)
      Poly next;
      next.reserve(poly.size() * static_cast<size_t>(h + 1));
      const std::uint64_t unit_k = std::uint64_t{1} << (bits * k);
      const std::uint64_t unit_j = std::uint64_t{1} << (bits * j);
      for (const auto& [key, coef] : poly) {
        for (int t = 0; t <= h; ++t) {
          std::uint64_t nk = key + unit_k * static_cast<std::uint64_t>(t) + unit_j * static_cast<std::uint64_t>(h - t);
          BigInt& slot = next[nk];
          if ((h - t) % 2 == 0)
            mpz_addmul(slot.get_mpz_t(), coef.get_mpz_t(), binom[static_cast<size_t>(t)].get_mpz_t());
          else
            mpz_submul(slot.get_mpz_t(), coef.get_mpz_t(), binom[static_cast<size_t>(t)].get_mpz_t());
        }
      }
      poly.clear();
      for (auto& [key, coef] : next)
        if (coef != 0) poly.emplace(key, std::move(coef));
    }
  }

  const bool strict = params.kind() == Kind::Antisymmetric;
  const std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
  std::vector<std::pair<std::vector<Part>, BigInt>> entries;
  for (const auto& [key, coef] : poly) {
    std::vector<Part> e(static_cast<size_t>(N));
    bool sorted = true;
    for (int i = 0; i < N; ++i) {
      e[static_cast<size_t>(i)] = static_cast<Part>((key >> (bits * i)) & mask);
      if (i > 0) {
        if (e[static_cast<size_t>(i)] > e[static_cast<size_t>(i - 1)]) sorted = false;
        if (strict && e[static_cast<size_t>(i)] == e[static_cast<size_t>(i - 1)]) sorted = false;
      }
    }
    if (sorted) entries.emplace_back(std::move(e), coef);
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  if (entries.empty()) throw std::logic_error("brute_force_expand: empty expansion");
  const int sign = entries.front().second < 0 ? -1 : 1;
  std::vector<Part> flat;
  std::vector<BigInt> coeffs;
  for (auto& [e, coef] : entries) {
    flat.insert(flat.end(), e.begin(), e.end());
    coeffs.push_back(sign * coef);
  }
  return CoefficientTable(params, std::move(flat), std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Cache files

inline std::string cache_file_name(int N, int gamma) {
  return "vdm_N" + std::to_string(N) + "_G" + std::to_string(gamma) + ".txt";
}

inline void write_table(std::ostream& os, const CoefficientTable& t) {
  os << "#vdm-coeff v1 N=" << t.N() << " gamma=" << t.params().gamma << " count=" << t.size()
     << " checksum=" << t.checksum().get_str() << '\n';
  for (size_t i = 0; i < t.size(); ++i) {
    auto p = t.parts(i);
    for (size_t k = 0; k < p.size(); ++k) {
      if (k) os << ',';
      os << static_cast<int>(p[k]);
    }
    os << '\t' << t.coefficient(i).get_str() << '\n';
  }
}

inline CoefficientTable read_table(std::istream& in) {
  std::string content{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (content.empty()) throw FormatError("cache file is empty");
  // Every line ends in LF, so a missing final newline means the file was cut short.
  const bool truncated = content.back() != '\n';
  std::istringstream is(content);
  std::string header;
  std::getline(is, header);
  if (truncated && is.eof()) throw ChecksumError("cache file truncated in the header");
  std::istringstream hs(header);
  std::string magic, version;
  hs >> magic >> version;
  if (magic != "#vdm-coeff") throw FormatError("not a coefficient cache file");
  if (version != "v1") throw VersionError("unsupported cache version '" + version + "'");
  long N = -1, gamma = -1;
  std::uint64_t count = 0;
  std::string checksum;
  bool have_count = false;
  for (std::string field; hs >> field;) {
    auto eq = field.find('=');
    if (eq == std::string::npos) throw FormatError("malformed header field '" + field + "'");
    std::string key = field.substr(0, eq), val = field.substr(eq + 1);
    try {
      if (key == "N")
        N = std::stol(val);
      else if (key == "gamma")
        gamma = std::stol(val);
      else if (key == "count") {
        count = std::stoull(val);
        have_count = true;
      } else if (key == "checksum")
        checksum = val;
    } catch (const std::exception&) {
      throw FormatError("malformed header value '" + field + "'");
    }
  }
  if (N < 1 || gamma < 2 || !have_count || checksum.empty()) throw FormatError("incomplete cache header");
  auto params = PlasmaParams::make(static_cast<int>(N), static_cast<int>(gamma));

  std::vector<Part> flat;
  std::vector<BigInt> coeffs;
  std::vector<Part> prev;
  for (std::string line; std::getline(is, line);) {
    if (line.empty()) continue;
    if (truncated && is.eof()) throw ChecksumError("cache file truncated");
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw FormatError("cache line without tab");
    std::vector<Part> parts;
    std::istringstream ps(line.substr(0, tab));
    for (std::string tok; std::getline(ps, tok, ',');) {
      int v = 0;
      try {
        v = std::stoi(tok);
      } catch (const std::exception&) {
        throw FormatError("bad partition entry '" + tok + "'");
      }
      if (v < 0 || v > 255) throw FormatError("partition entry out of range");
      parts.push_back(static_cast<Part>(v));
    }
    if (static_cast<long>(parts.size()) != N) throw FormatError("partition length differs from N");
    if (!prev.empty() && !(parts < prev)) throw FormatError("cache entries out of canonical order");
    BigInt c;
    if (c.set_str(line.substr(tab + 1), 10) != 0) throw FormatError("bad coefficient");
    flat.insert(flat.end(), parts.begin(), parts.end());
    coeffs.push_back(std::move(c));
    prev = std::move(parts);
  }
  if (coeffs.size() != count)
    throw ChecksumError("cache holds " + std::to_string(coeffs.size()) + " entries, header says " +
                        std::to_string(count));
  if (coefficient_checksum(coeffs).get_str() != checksum) throw ChecksumError("cache checksum mismatch");
  return CoefficientTable(params, std::move(flat), std::move(coeffs));
}

// Written to a sibling temporary and renamed, so readers never see a partial file.
inline void save_table(const CoefficientTable& t, const std::filesystem::path& path) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::random_device rd;
  auto tmp = path;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open '" + tmp.string() + "' for writing");
    write_table(os, t);
    os.flush();
    if (!os) {
      std::filesystem::remove(tmp, ec);
      throw IoError("write to '" + tmp.string() + "' failed");
    }
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move cache file into '" + path.string() + "'");
  }
}

inline CoefficientTable load_table(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open '" + path.string() + "'");
  return read_table(is);
}

// Load from `dir` when a valid cache exists, otherwise expand and write it.
inline CoefficientTable cached_expand(const PlasmaParams& params, const std::filesystem::path& dir,
                                      std::uint64_t member_limit = default_member_limit) {
  auto path = dir / cache_file_name(params.N, params.gamma);
  if (std::filesystem::exists(path)) {
    try {
      auto t = load_table(path);
      if (t.N() == params.N && t.params().gamma == params.gamma) return t;
    } catch (const FormatError&) {
      // fall through and recompute
    }
  }
  auto t = expand(params, member_limit);
  save_table(t, path);
  return t;
}

}  // namespace plasma
