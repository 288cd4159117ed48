// Command-line front end. Talks to the library only through llspec.h.
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "llspec/llspec.h"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitCheck = 3;

struct Failure {
  int code;
  std::string message;
};

void ok(llspec_status s) {
  if (s == LLSPEC_OK) return;
  const int code = (s == LLSPEC_E_CONVERGENCE || s == LLSPEC_E_INTERNAL) ? 1 : kExitUsage;
  throw Failure{code, std::string(llspec_status_name(s)) + ": " + llspec_last_error()};
}

std::string real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string take(char* s) {
  std::string r = s ? s : "";
  llspec_string_free(s);
  return r;
}

using MuPtr = std::unique_ptr<llspec_mu, decltype(&llspec_mu_free)>;
using MeasurePtr = std::unique_ptr<llspec_measure, decltype(&llspec_measure_free)>;
using DosPtr = std::unique_ptr<llspec_dos, decltype(&llspec_dos_free)>;

MuPtr parse_mu(const std::string& text) {
  llspec_mu* m = nullptr;
  ok(llspec_mu_parse(text.c_str(), &m));
  return MuPtr(m, llspec_mu_free);
}

// "lo:hi:count" or a comma-separated list.
std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  auto num = [&](const std::string& s) {
    std::size_t pos = 0;
    double v = 0;
    try {
      v = std::stod(s, &pos);
    } catch (...) {
      pos = 0;
    }
    if (pos != s.size() || s.empty() || !std::isfinite(v))
      throw Failure{kExitUsage, "bad grid value '" + s + "'"};
    return v;
  };
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 3) throw Failure{kExitUsage, "grid must be lo:hi:count"};
    const double lo = num(parts[0]), hi = num(parts[1]);
    const double cnt = num(parts[2]);
    if (cnt < 1 || cnt != std::floor(cnt) || cnt > 1e7) throw Failure{kExitUsage, "bad grid count"};
    const int n = static_cast<int>(cnt);
    for (int i = 0; i < n; ++i) out.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
  } else {
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ',');) out.push_back(num(p));
  }
  if (out.empty()) throw Failure{kExitUsage, "empty grid"};
  return out;
}

void emit(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Failure{kExitUsage, "cannot open " + path};
  f << data;
}

struct Config {
  std::string mu = "float:0";
  int level = 4;
  int depth = -1;
  std::string grid;
  std::uint64_t seed = 1;
  std::size_t sites = 100000;
  std::string out;
  std::string format;
  bool check = false;
  double tol = -1;
  unsigned workers = 0;
  std::optional<double> lambda;
  bool strict = false;
};

double tol_or(const Config& c, double d) { return c.tol > 0 ? c.tol : d; }

std::vector<std::pair<double, int>> dense_clusters(int n, double mu) {
  std::vector<double> ev(std::size_t{1} << n);
  ok(llspec_dense_eigs(n, mu, ev.data(), ev.size()));
  std::vector<std::pair<double, int>> cl;
  for (double x : ev) {
    if (!cl.empty() && x - cl.back().first <= 1e-7)
      ++cl.back().second;
    else
      cl.emplace_back(x, 1);
  }
  return cl;
}

int cmd_char_poly(const Config& c) {
  const auto mu = parse_mu(c.mu);
  const auto grid = parse_grid(c.grid.empty() ? "-8:8:33" : c.grid);
  const bool json = c.format == "json";
  std::ostringstream os;
  os << (json ? "[\n" : "lambda,phi_det,phi_factorized,rel_err\n");
  double worst = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double l = grid[i];
    int sd, sf;
    double ld, lf;
    ok(llspec_phi_det(c.level, l, llspec_mu_value(mu.get()), &sd, &ld));
    ok(llspec_phi_factorized(c.level, l, llspec_mu_value(mu.get()), &sf, &lf));
    const double vd = sd * std::exp(ld), vf = sf * std::exp(lf);
    std::string err = "-";
    if (sd != 0 && sf != 0) {
      // |d - f| / |f| from the log forms, so overflow does not matter.
      const double e = sd == sf ? std::fabs(std::expm1(ld - lf)) : 1 + std::exp(ld - lf);
      worst = std::max(worst, e);
      err = real(e);
    }
    if (json) {
      os << "  {\"lambda\": " << real(l) << ", \"phi_det\": " << real(vd)
         << ", \"phi_factorized\": " << real(vf) << ", \"rel_err\": "
         << (err == "-" ? "null" : err) << "}" << (i + 1 < grid.size() ? ",\n" : "\n");
    } else {
      os << real(l) << ',' << real(vd) << ',' << real(vf) << ',' << err << '\n';
    }
  }
  if (json) os << "]\n";
  emit(c.out, os.str());
  return c.check && worst > tol_or(c, 1e-8) ? kExitCheck : 0;
}

int cmd_eigs(const Config& c) {
  const auto mu = parse_mu(c.mu);
  const auto cl = dense_clusters(c.level, llspec_mu_value(mu.get()));
  std::ostringstream os;
  os << "eigenvalue,multiplicity\n";
  for (const auto& [x, m] : cl) os << real(x) << ',' << m << '\n';
  emit(c.out, os.str());
  return 0;
}

int cmd_zeros(const Config& c) {
  const auto mu = parse_mu(c.mu);
  const double m = llspec_mu_value(mu.get());
  if (c.level < 1) throw Failure{kExitUsage, "zeros needs --level >= 1"};
  std::vector<double> z(static_cast<std::size_t>(c.level));
  ok(llspec_g_zeros(c.level, m, z.data(), z.size()));
  std::ostringstream os;
  os << "index,lambda,region\n";
  for (std::size_t i = 0; i < z.size(); ++i)
    os << i + 1 << ',' << real(z[i]) << ',' << (std::fabs(z[i] + m) <= 4 ? "inside" : "outside")
       << '\n';
  emit(c.out, os.str());
  return 0;
}

int cmd_spectrum(const Config& c) {
  const auto mu = parse_mu(c.mu);
  const double m = llspec_mu_value(mu.get());
  double lo, hi, pt, jpt, mass;
  int has, jhas;
  ok(llspec_pencil_spectrum(m, &lo, &hi, &has, &pt));
  ok(llspec_jstar_isolated(m, &jhas, &jpt, &mass));
  char* s = nullptr;
  ok(llspec_mu_to_string(mu.get(), &s));
  const std::string tag = take(s);
  std::ostringstream os;
  os << "{\n  \"mu\": \"" << tag << "\",\n  \"mu_value\": " << real(m) << ",\n";
  os << "  \"band\": [" << real(lo) << ", " << real(hi) << "],\n";
  os << "  \"accumulation_point\": " << (has ? real(pt) : "null") << ",\n";
  os << "  \"jstar_band\": [" << real(-2 + m / 2) << ", " << real(2 + m / 2) << "],\n";
  os << "  \"jstar_isolated\": " << (jhas ? real(jpt) : "null") << ",\n";
  os << "  \"jstar_isolated_mass\": " << real(mass) << ",\n";
  int crit = 0;
  if (std::fabs(m) > 1) ok(llspec_critical_index(mu.get(), &crit));
  os << "  \"critical_index\": " << (crit ? std::to_string(crit) : "null") << "\n}\n";
  emit(c.out, os.str());
  return 0;
}

std::string class_name(int cls) {
  static const char* names[] = {"generic", "delta_mu", "B1_merged", "B2_merged", "B3_endpoint"};
  return cls >= 0 && cls < 5 ? names[cls] : "unknown";
}

int cmd_measure(const Config& c) {
  const auto mu = parse_mu(c.mu);
  llspec_measure* raw = nullptr;
  ok(llspec_measure_new(mu.get(), c.depth > 0 ? c.depth : 12, &raw));
  MeasurePtr m(raw, llspec_measure_free);
  std::string data;
  if (c.format == "csv") {
    std::ostringstream os;
    os << "position,mass,class\n";
    for (std::size_t i = 0; i < llspec_measure_atom_count(m.get()); ++i) {
      double pos;
      char* mass;
      int cls;
      ok(llspec_measure_atom(m.get(), i, &pos, &mass, &cls));
      os << real(pos) << ',' << take(mass) << ',' << class_name(cls) << '\n';
    }
    data = os.str();
  } else {
    char* s = nullptr;
    ok(llspec_measure_json(m.get(), &s));
    data = take(s);
  }
  emit(c.out, data);
  return c.check && !llspec_measure_is_normalized(m.get()) ? kExitCheck : 0;
}

int cmd_multiplicity(const Config& c) {
  const auto mu = parse_mu(c.mu);
  const double m = llspec_mu_value(mu.get());
  std::ostringstream os;
  bool mismatch = false;
  if (c.lambda) {
    int mult = 0;
    ok(llspec_multiplicity(c.level, *c.lambda, mu.get(), c.strict, &mult));
    os << "lambda,multiplicity\n" << real(*c.lambda) << ',' << mult << '\n';
  } else {
    os << "lambda,dense_count,multiplicity\n";
    for (const auto& [x, count] : dense_clusters(c.level, m)) {
      int mult = 0;
      ok(llspec_multiplicity(c.level, x, mu.get(), c.strict, &mult));
      mismatch |= mult != count;
      os << real(x) << ',' << count << ',' << mult << '\n';
    }
  }
  emit(c.out, os.str());
  return c.check && mismatch ? kExitCheck : 0;
}

int cmd_joint_spectrum(const Config& c) {
  const auto grid = parse_grid(c.grid.empty() ? "-3:3:61" : c.grid);
  std::ostringstream os;
  os << "mu,k,lambda,region\n";
  for (double m : grid)
    for (int k = 1; k <= c.level; ++k) {
      std::vector<double> z(static_cast<std::size_t>(k));
      ok(llspec_g_zeros(k, m, z.data(), z.size()));
      for (double x : z)
        os << real(m) << ',' << k << ',' << real(x) << ','
           << (std::fabs(x + m) <= 4 ? "inside" : "outside") << '\n';
    }
  emit(c.out, os.str());
  return 0;
}

int cmd_dos(const Config& c) {
  const auto mu = parse_mu(c.mu);
  const double m = llspec_mu_value(mu.get());
  llspec_dos* draw = nullptr;
  ok(llspec_dos_run(m, c.sites, c.seed, c.workers, &draw));
  DosPtr d(draw, llspec_dos_free);
  llspec_measure* mraw = nullptr;
  ok(llspec_measure_new(mu.get(), c.depth > 0 ? c.depth : 12, &mraw));
  MeasurePtr meas(mraw, llspec_measure_free);
  double dev = 0;
  char* js = nullptr;
  ok(llspec_dos_compare(d.get(), meas.get(), 50, &dev, &js));
  std::string report = take(js);
  std::size_t outside = 0, unexplained = 0;
  ok(llspec_dos_support(d.get(), 1e-6, &outside, &unexplained));
  if (c.format == "csv") {
    char* csv = nullptr;
    ok(llspec_dos_csv(d.get(), &csv));
    emit(c.out, take(csv));
  } else {
    // Splice the support summary into the report object.
    auto end = report.rfind('}');
    while (end > 0 && std::isspace(static_cast<unsigned char>(report[end - 1]))) --end;
    report.replace(end, std::string::npos,
                   ",\n  \"outside_band\": " + std::to_string(outside) +
                       ",\n  \"unexplained_outside\": " + std::to_string(unexplained) + "\n}\n");
    emit(c.out, report);
  }
  std::cerr << "sup deviation " << real(dev) << "\n";
  return c.check && (dev >= tol_or(c, 0.02) || unexplained > 0) ? kExitCheck : 0;
}

int cmd_ns(const Config& c) {
  const auto mu = parse_mu(c.mu);
  const double m = llspec_mu_value(mu.get());
  const int M = c.depth > 0 ? c.depth : 60;
  double rate, closed, emp;
  char* csv = nullptr;
  char* js = nullptr;
  ok(llspec_ns_run(m, M, &rate, &closed, &emp, &csv, &js));
  const std::string csv_s = take(csv), js_s = take(js);
  emit(c.out, c.format == "csv" ? csv_s : js_s);
  const bool bad_rate = std::fabs(rate * m * m - 1) > tol_or(c, 0.02);
  const bool bad_ns = std::fabs(emp / closed - 1) > 0.05;
  return c.check && (bad_rate || bad_ns) ? kExitCheck : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra of the lamplighter pencil a+a^-1+b+b^-1-mu c"};
  app.require_subcommand(1);
  Config cfg;

  auto add_mu = [&](CLI::App* s) {
    s->add_option("--mu", cfg.mu, "float:x | rat:p/q | b1:p/q:n | b2:j/k | bare number");
  };
  auto add_out = [&](CLI::App* s, const char* def_fmt) {
    s->add_option("--out", cfg.out, "output file (default stdout)");
    s->add_option("--format", cfg.format, std::string("csv or json (default ") + def_fmt + ")")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  auto* cp = app.add_subcommand("char-poly", "Phi_n by determinant and by product formula");
  add_mu(cp);
  cp->add_option("--level", cfg.level, "level n");
  cp->add_option("--grid", cfg.grid, "lambda grid lo:hi:count or list");
  cp->add_flag("--check", cfg.check, "exit 3 if rel_err exceeds --tol (1e-8)");
  cp->add_option("--tol", cfg.tol);
  add_out(cp, "csv");

  auto* eg = app.add_subcommand("eigs", "dense eigenvalues of M_n(mu), clustered");
  add_mu(eg);
  eg->add_option("--level", cfg.level);
  add_out(eg, "csv");

  auto* zs = app.add_subcommand("zeros", "zeros of G_k(., mu), k = --level");
  add_mu(zs);
  zs->add_option("--level", cfg.level);
  add_out(zs, "csv");

  auto* sp = app.add_subcommand("spectrum", "band, accumulation point, critical index");
  add_mu(sp);
  add_out(sp, "json");

  auto* ms = app.add_subcommand("measure", "truncated spectral measure with exact masses");
  add_mu(ms);
  ms->add_option("--depth", cfg.depth, "truncation depth K (default 12)");
  ms->add_flag("--check", cfg.check, "exit 3 unless masses + tail = 1");
  add_out(ms, "json");

  auto* mu = app.add_subcommand("multiplicity", "root multiplicities of Phi_n(., mu)");
  add_mu(mu);
  mu->add_option("--level", cfg.level);
  mu->add_option("--lambda", cfg.lambda, "single root; default is every dense cluster");
  mu->add_flag("--strict", cfg.strict, "refuse closed forms whose assumptions fail");
  mu->add_flag("--check", cfg.check, "exit 3 if a rule disagrees with the dense count");
  add_out(mu, "csv");

  auto* js = app.add_subcommand("joint-spectrum", "zeros of G_1..G_n over a mu grid");
  js->add_option("--level", cfg.level, "largest k");
  js->add_option("--grid", cfg.grid, "mu grid lo:hi:count or list");
  add_out(js, "csv");

  auto* ds = app.add_subcommand("dos", "random Jacobi density of states vs the measure");
  add_mu(ds);
  ds->add_option("--sites", cfg.sites);
  ds->add_option("--seed", cfg.seed);
  ds->add_option("--depth", cfg.depth, "truncation depth K (default 12)");
  ds->add_option("--workers", cfg.workers, "threads, 0 = all cores");
  ds->add_flag("--check", cfg.check, "exit 3 if deviation >= --tol (0.02)");
  ds->add_option("--tol", cfg.tol);
  add_out(ds, "json");

  auto* ns = app.add_subcommand("ns", "gap decay at mu + 2/mu and the Novikov-Shubin invariant");
  add_mu(ns);
  ns->add_option("--depth", cfg.depth, "largest m (default 60)");
  ns->add_flag("--check", cfg.check, "exit 3 if rate or invariant is off");
  ns->add_option("--tol", cfg.tol, "relative tolerance on the decay rate (0.02)");
  add_out(ns, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int r = app.exit(e);
    return r == 0 ? 0 : kExitUsage;
  }

  try {
    if (*cp) return cmd_char_poly(cfg);
    if (*eg) return cmd_eigs(cfg);
    if (*zs) return cmd_zeros(cfg);
    if (*sp) return cmd_spectrum(cfg);
    if (*ms) return cmd_measure(cfg);
    if (*mu) return cmd_multiplicity(cfg);
    if (*js) return cmd_joint_spectrum(cfg);
    if (*ds) return cmd_dos(cfg);
    if (*ns) return cmd_ns(cfg);
  } catch (const Failure& f) {
    std::cerr << "llspec: " << f.message << "\n";
    return f.code;
  }
  return 0;
}
