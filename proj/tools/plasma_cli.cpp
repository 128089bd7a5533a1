// Command-line front end for the plasma library.

#include <plasma/plasma.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace plasma;

namespace {

enum Exit { ok = 0, generic_failure = 1, verification_failed = 2, resource_limit = 3, usage = 64, io_failure = 74 };

struct RunConfig {
  std::string command;
  int N = 0;
  std::string N_range;
  int first = 0, last = 0;
  int gamma = 0;
  std::vector<int> n_list;
  double tolerance = 1e-12;
  std::string cache_dir;
  std::string output = "csv";
  std::string out;
  std::uint64_t member_limit = default_member_limit;
  std::string surface = "sphere";
  bool fit = false;
  bool check_bruteforce = false;
};

struct Records {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string real15(double v) { return fmt("%.15g", v); }
std::string real6(double v) { return fmt("%.6g", v); }

std::filesystem::path cache_dir(const RunConfig& cfg) {
  if (!cfg.cache_dir.empty()) return cfg.cache_dir;
  if (const char* env = std::getenv("PLASMA_CACHE_DIR"); env && *env) return env;
  return "plasma_cache";
}

CoefficientTable load(const RunConfig& cfg, int N, int gamma) {
  return cached_expand(PlasmaParams::make(N, gamma), cache_dir(cfg), cfg.member_limit);
}

std::vector<int> N_values(const RunConfig& cfg) {
  std::vector<int> v;
  for (int N = cfg.first; N <= cfg.last; ++N) v.push_back(N);
  return v;
}

// ---------------------------------------------------------------------------

Records run_expand(const RunConfig& cfg) {
  Records r{{"N", "gamma", "count", "checksum", "oracle"}, {}};
  for (int N : N_values(cfg)) {
    auto params = PlasmaParams::make(N, cfg.gamma);
    auto t = load(cfg, N, cfg.gamma);
    std::string oracle;
    if (cfg.check_bruteforce) {
      auto bf = brute_force_expand(params);
      bool same = bf.size() == t.size();
      for (size_t i = 0; same && i < t.size(); ++i)
        same = bf.partition(i) == t.partition(i) && abs(bf.coefficient(i)) == abs(t.coefficient(i));
      oracle = same ? "PASS" : "FAIL";
    }
    std::cerr << "N=" << N << " Gamma=" << cfg.gamma << " count=" << t.size()
              << " cache=" << (cache_dir(cfg) / cache_file_name(N, cfg.gamma)).string();
    if (!oracle.empty()) std::cerr << " oracle check " << oracle;
    std::cerr << '\n';
    r.rows.push_back({std::to_string(N), std::to_string(cfg.gamma), std::to_string(t.size()), t.checksum().get_str(), oracle});
  }
  return r;
}

Records run_moments(const RunConfig& cfg, bool sphere) {
  Records r{{"N", "n", sphere ? "I2n" : "M"}, {}};
  if (cfg.fit)
    for (const char* h : {"fit_a", "fit_b", "fit_c", "fit_d"}) r.header.push_back(h);
  std::vector<CoefficientTable> tables;
  for (int N : N_values(cfg)) tables.push_back(load(cfg, N, cfg.gamma));
  for (int n : cfg.n_list) {
    std::vector<FitPoint> seq;
    for (const auto& t : tables) seq.push_back({t.N(), sphere ? i_hat(t, n) : m_moment(t, n)});
    std::vector<std::optional<FitResult>> fits(seq.size());
    if (cfg.fit && seq.size() >= 4) fits = fit_rows(seq, sphere ? FitBasis::InversePowers : FitBasis::DiskMean);
    for (size_t i = 0; i < seq.size(); ++i) {
      std::vector<std::string> row{std::to_string(seq[i].N), std::to_string(n), render_decimal(seq[i].value)};
      if (cfg.fit)
        for (int k = 0; k < 4; ++k) row.push_back(fits[i] ? real6(fits[i]->coefficients[k]) : "");
      r.rows.push_back(std::move(row));
    }
  }
  return r;
}

Records run_diagrams(const RunConfig& cfg) {
  Records r{{"N", "I4", "I4_approx", "I4_error_pct", "I6", "I6_approx", "I6_error_pct"}, {}};
  for (int N : N_values(cfg)) {
    double a4 = i4_approx(N, cfg.gamma, cfg.tolerance), a6 = i6_approx(N, cfg.gamma, cfg.tolerance);
    std::vector<std::string> row{std::to_string(N), "", real15(a4), "", "", real15(a6), ""};
    // exact columns only where the table fits under the member limit
    if (count_admissible(N, cfg.gamma / 2) <= cfg.member_limit) {
      auto t = load(cfg, N, cfg.gamma);
      BigRational e4 = i_hat(t, 2), e6 = i_hat(t, 3);
      row[1] = render_decimal(e4);
      row[4] = render_decimal(e6);
      if (e4 != 0) row[3] = real6(std::fabs(a4 - to_double(e4)) / std::fabs(to_double(e4)) * 100);
      if (e6 != 0) row[6] = real6(std::fabs(a6 - to_double(e6)) / std::fabs(to_double(e6)) * 100);
    }
    r.rows.push_back(std::move(row));
  }
  return r;
}

Records run_perturbation(const RunConfig& cfg) {
  Records r{{"N", "n", "m1", "m2", "m3", "sum", "method", "error_bound"}, {}};
  for (int n : cfg.n_list)
    for (int N : N_values(cfg)) {
      if (N <= default_exact_mtilde_limit) {
        auto m = m_tilde(N, n);
        r.rows.push_back({std::to_string(N), std::to_string(n), render_decimal(m.m1), render_decimal(m.m2),
                          render_decimal(m.m3), render_decimal(m.sum()), "exact", "0"});
      } else {
        auto m = m_tilde_float(N, n);
        r.rows.push_back({std::to_string(N), std::to_string(n), real15(m.m1), real15(m.m2), real15(m.m3), real15(m.sum()),
                          "float", fmt("%.3g", m.error_bound)});
      }
    }
  return r;
}

Records run_fit(const RunConfig& cfg) {
  const bool sphere = cfg.surface == "sphere";
  const FitBasis basis = sphere ? FitBasis::InversePowers : FitBasis::DiskMean;
  Records r{{"N", "n", "basis", "a", "b", "c", "d", "residual"}, {}};
  std::vector<CoefficientTable> tables;
  for (int N : N_values(cfg)) tables.push_back(load(cfg, N, cfg.gamma));
  if (tables.size() < 4) throw CLI::ValidationError("--N-range", "a fit needs at least four values of N");
  for (int n : cfg.n_list) {
    std::vector<FitPoint> seq;
    for (const auto& t : tables) seq.push_back({t.N(), sphere ? i_hat(t, n) : m_moment(t, n)});
    for (const auto& f : fit_rows(seq, basis)) {
      if (!f) continue;
      std::vector<std::string> row{std::to_string(f->anchorN), std::to_string(n), to_string(basis)};
      for (double c : f->coefficients) row.push_back(real15(c));
      row.push_back(fmt("%.3g", f->residual));
      r.rows.push_back(std::move(row));
    }
  }
  return r;
}

Records run_verify(const RunConfig& cfg) {
  Records r{{"check", "N", "gamma", "result"}, {}};
  int failed = 0;
  auto add = [&](const std::string& name, int N, int gamma, bool pass) {
    failed += !pass;
    r.rows.push_back({name, N > 0 ? std::to_string(N) : "", gamma > 0 ? std::to_string(gamma) : "", pass ? "PASS" : "FAIL"});
  };
  for (int N : N_values(cfg)) {
    auto t = load(cfg, N, cfg.gamma);
    add("i2_sum_rule", N, cfg.gamma, i_hat(t, 1) == i_hat2_exact(N, cfg.gamma));
    add("density_constancy", N, cfg.gamma, density_constancy_deviation(t) == 0);
    add("restricted_identity", N, cfg.gamma, restricted_identity_holds(t));
    add("disk_n1_identity", N, cfg.gamma, m_moment(t, 1) == m1_exact(N, cfg.gamma));
    add("disk_n0_identity", N, cfg.gamma, m_moment(t, 0) == N);
    auto g2 = load(cfg, N, 2);
    bool closed = true;
    for (int n = 1; n <= 4; ++n)
      closed = closed && i_hat(g2, n) == i_hat_gamma2_closed(N, n) && m_moment(g2, n) == m_gamma2_closed(N, n);
    add("gamma2_closed_forms", N, 2, closed);
    BruteForceLimits limits;
    if (N <= 5 && cfg.gamma <= limits.max_gamma) {
      auto bf = brute_force_expand(PlasmaParams::make(N, cfg.gamma));
      bool same = bf.size() == t.size();
      for (size_t i = 0; same && i < t.size(); ++i)
        same = bf.partition(i) == t.partition(i) && abs(bf.coefficient(i)) == abs(t.coefficient(i));
      add("bruteforce_oracle", N, cfg.gamma, same);
    }
  }
  CalITable I(60);
  bool table_ok = true;
  for (unsigned a = 0; a <= 60; ++a)
    for (unsigned b = 0; b <= 60; ++b) {
      table_ok = table_ok && I(a, b) + I(b, a) == factorial(a) * factorial(b);
      if (a < 60) table_ok = table_ok && I(a + 1, b) - (a + 1) * I(a, b) == detail::ldexp_q(factorial(a + b + 1), a + b + 2);
    }
  add("calI_identities", 0, 0, table_ok);
  std::cerr << (failed ? "verification FAILED: " + std::to_string(failed) + " of " : "verification PASS: all ")
            << r.rows.size() << " checks\n";
  return r;
}

// ---------------------------------------------------------------------------

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void emit(const Records& r, const RunConfig& cfg) {
  std::ostringstream os;
  if (cfg.output == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) {
      nlohmann::ordered_json obj;
      for (size_t k = 0; k < r.header.size(); ++k) obj[r.header[k]] = row[k];
      arr.push_back(std::move(obj));
    }
    os << arr.dump(2) << '\n';
  } else {
    for (size_t k = 0; k < r.header.size(); ++k) os << (k ? "," : "") << r.header[k];
    os << '\n';
    for (const auto& row : r.rows) {
      for (size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << csv_cell(row[k]);
      os << '\n';
    }
  }
  if (cfg.out.empty()) {
    std::cout << os.str() << std::flush;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + cfg.out + "' for writing");
  f << os.str();
  f.flush();
  if (!f) throw IoError("write to '" + cfg.out + "' failed");
}

// expand and verify mark failed checks with a FAIL cell
bool any_failed(const Records& r) {
  for (const auto& row : r.rows)
    for (const auto& cell : row)
      if (cell == "FAIL") return true;
  return false;
}

void parse_range(RunConfig& cfg) {
  if (cfg.N > 0 && !cfg.N_range.empty()) throw CLI::ValidationError("--N", "give either --N or --N-range, not both");
  if (cfg.N > 0) {
    cfg.first = cfg.last = cfg.N;
    return;
  }
  if (cfg.N_range.empty()) throw CLI::ValidationError("--N-range", "an N or N-range is required");
  auto dots = cfg.N_range.find("..");
  try {
    if (dots == std::string::npos) throw std::invalid_argument("missing ..");
    size_t used = 0;
    cfg.first = std::stoi(cfg.N_range.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument("trailing characters");
    std::string tail = cfg.N_range.substr(dots + 2);
    cfg.last = std::stoi(tail, &used);
    if (used != tail.size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw CLI::ValidationError("--N-range", "expected a..b, got '" + cfg.N_range + "'");
  }
  if (cfg.first < 1 || cfg.last < cfg.first) throw CLI::ValidationError("--N-range", "range must satisfy 1 <= a <= b");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact moments of the two-dimensional one-component plasma"};
  app.require_subcommand(1);
  RunConfig cfg;

  const CLI::Validator even_gamma(
      [](std::string& s) -> std::string {
        int g = 0;
        try {
          g = std::stoi(s);
        } catch (const std::exception&) {
          return "Gamma must be an integer";
        }
        return g >= 2 && g % 2 == 0 ? "" : "Gamma must be an even integer >= 2";
      },
      "EVEN>=2");

  struct Command {
    const char* name;
    const char* help;
    bool n_list, fit, bruteforce, surface;
  };
  const Command commands[] = {
      {"expand", "compute or load coefficient tables", false, false, true, false},
      {"sphere-moments", "scaled sphere moments I_2n", true, true, false, false},
      {"disk-moments", "scaled soft-disk moments M_N", true, true, false, false},
      {"diagrams", "Legendre-diagram approximations of I_4 and I_6", false, false, false, false},
      {"perturbation", "first-order coefficients around Gamma = 2", true, false, false, false},
      {"fit", "four-point finite-size fits", true, false, false, true},
      {"verify", "run every exact invariant", false, false, false, false},
  };
  for (const auto& s : commands) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->callback([&cfg, name = std::string(s.name)] { cfg.command = name; });
    sub->add_option("--N", cfg.N, "single system size")->check(CLI::PositiveNumber);
    sub->add_option("--N-range", cfg.N_range, "inclusive range a..b");
    if (s.name != std::string("perturbation"))
      sub->add_option("--gamma", cfg.gamma, "coupling, even integer")->required()->check(even_gamma);
    if (s.n_list) sub->add_option("--n-list", cfg.n_list, "moment orders")->delimiter(',')->check(CLI::NonNegativeNumber);
    sub->add_option("--tolerance", cfg.tolerance, "series tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--cache-dir", cfg.cache_dir, "coefficient cache directory");
    sub->add_option("--output", cfg.output, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", cfg.out, "write records to this path instead of stdout");
    sub->add_option("--member-limit", cfg.member_limit, "largest admissible set to enumerate")->check(CLI::PositiveNumber);
    if (s.fit) sub->add_flag("--fit", cfg.fit, "add four-point fit coefficients");
    if (s.bruteforce) sub->add_flag("--check-bruteforce", cfg.check_bruteforce, "compare against direct expansion");
    if (s.surface) sub->add_option("--surface", cfg.surface, "sphere or disk")->check(CLI::IsMember({"sphere", "disk"}));
  }

  try {
    app.parse(argc, argv);
    parse_range(cfg);
    if (cfg.n_list.empty()) cfg.n_list = cfg.command == "perturbation" ? std::vector<int>{1, 2, 3, 4} : std::vector<int>{2, 3, 4};
    if (cfg.command == "sphere-moments" || (cfg.command == "fit" && cfg.surface == "sphere"))
      for (int n : cfg.n_list)
        if (n < 1) throw CLI::ValidationError("--n-list", "sphere moments need n >= 1");
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return usage;
  }

  try {
    Records r;
    if (cfg.command == "expand")
      r = run_expand(cfg);
    else if (cfg.command == "sphere-moments")
      r = run_moments(cfg, true);
    else if (cfg.command == "disk-moments")
      r = run_moments(cfg, false);
    else if (cfg.command == "diagrams")
      r = run_diagrams(cfg);
    else if (cfg.command == "perturbation")
      r = run_perturbation(cfg);
    else if (cfg.command == "fit")
      r = run_fit(cfg);
    else
      r = run_verify(cfg);
    emit(r, cfg);
    if (any_failed(r)) return verification_failed;
    return ok;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return resource_limit;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return io_failure;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return io_failure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return generic_failure;
  }
}
