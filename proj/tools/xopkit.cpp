// xopkit: generate exceptional polynomials, run the exact verification
// suites, export recurrence matrices and print numerical spectra.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "xopkit/bispectral.hpp"
#include "xopkit/exceptional.hpp"
#include "xopkit/families.hpp"
#include "xopkit/numerics.hpp"
#include "xopkit/suites.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace xop;

namespace {

constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  int lo = 0;
  int hi = 0;
};

// "3" or "1..4"
Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    Range r{std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    if (r.lo > r.hi) throw UsageError("empty range '" + text + "'");
    return r;
  } catch (const std::logic_error&) {
    throw UsageError("bad range '" + text + "'");
  }
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

json rational_json(const Rational& q) { return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}}; }

struct ParamArgs {
  std::string family;
  int ell = 1;
  std::string g;
  std::string h;

  void attach(CLI::App* app, bool family_required = true) {
    auto* f = app->add_option("--family", family, "L1, L2, J1 or J2");
    if (family_required) f->required();
    app->add_option("--ell", ell, "deformation degree ell >= 1");
    app->add_option("--g", g, "coupling g (rational, e.g. 3/2)");
    app->add_option("--h", h, "coupling h (J families)");
  }

  FamilyParams params() const {
    FamilyParams p;
    try {
      p.family = parse_family(family);
      p.ell = ell;
      if (g.empty()) throw UsageError("--g is required");
      p.g = parse_rational(g);
      if (is_jacobi(p.family)) {
        if (h.empty()) throw UsageError("--h is required for J families");
        p.h = parse_rational(h);
      }
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (auto v = violation(p)) throw UsageError(*v);
    return p;
  }
};

json params_json(const FamilyParams& p) {
  json j{{"family", std::string(to_string(p.family))}, {"ell", p.ell}, {"g", p.g.get_str()}};
  if (is_jacobi(p.family)) j["h"] = p.h.get_str();
  return j;
}

// ------------------------------------------------------------------- gen

int cmd_gen(const ParamArgs& args, const std::string& nrange, const std::string& format) {
  const FamilyParams p = args.params();
  const Range r = parse_range(nrange);
  if (r.lo < 0) throw UsageError("n must be nonnegative");
  if (format == "json") {
    json rows = json::array();
    for (int n = r.lo; n <= r.hi; ++n) {
      const UniPoly q = exceptional_poly(p, n);
      json coeffs = json::array();
      for (const auto& c : q.coefficients()) coeffs.push_back(rational_json(c));
      rows.push_back({{"n", n}, {"degree", q.degree()}, {"eigenvalue_os", rational_json(eigenvalue(p, n, Tier::os))},
                      {"coefficients", coeffs}});
    }
    json doc = params_json(p);
    doc["variable"] = "eta";
    doc["rows"] = rows;
    std::cout << doc.dump(2) << '\n';
  } else if (format == "csv") {
    const int maxdeg = r.hi + p.ell;
    std::cout << "n,degree,eigenvalue_os";
    for (int k = 0; k <= maxdeg; ++k) std::cout << ",coeff_" << k << "_num,coeff_" << k << "_den";
    std::cout << '\n';
    for (int n = r.lo; n <= r.hi; ++n) {
      const UniPoly q = exceptional_poly(p, n);
      std::cout << n << ',' << q.degree() << ',' << to_string(eigenvalue(p, n, Tier::os));
      for (int k = 0; k <= maxdeg; ++k) {
        const Rational c = q.coeff(k);
        std::cout << ',' << c.get_num().get_str() << ',' << c.get_den().get_str();
      }
      std::cout << '\n';
    }
  } else {
    throw UsageError("unknown format '" + format + "'");
  }
  return 0;
}

// ----------------------------------------------------------------- check

struct CheckArgs {
  std::string suite = "all";
  std::vector<std::string> families;
  std::string ell = "1..3";
  int nmax = 8;
  int matrix_dim = 12;
  std::vector<std::string> perturb;
  std::string out;
  std::string g;
  std::string h;
};

int cmd_check(const CheckArgs& a) {
  std::vector<Suite> suites;
  if (a.suite == "all") {
    suites = all_suites();
  } else if (auto s = parse_suite(a.suite)) {
    suites = {*s};
  } else {
    throw UsageError("unknown suite '" + a.suite + "'");
  }
  std::set<Suite> perturbed;
  for (const auto& name : a.perturb) {
    auto s = parse_suite(name);
    if (!s) throw UsageError("unknown suite '" + name + "' for --perturb");
    perturbed.insert(*s);
  }
  std::vector<Family> families;
  try {
    if (a.families.empty() || (a.families.size() == 1 && a.families[0] == "all"))
      families = {Family::L1, Family::L2, Family::J1, Family::J2};
    else
      for (const auto& f : a.families) families.push_back(parse_family(f));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const Range ells = parse_range(a.ell);
  if (ells.lo < 1) throw UsageError("requires ell>=1");
  if (a.nmax < 0) throw UsageError("nmax must be nonnegative");

  std::vector<FamilyParams> cells;
  for (Family f : families)
    for (int l = ells.lo; l <= ells.hi; ++l) {
      if (a.g.empty()) {
        for (const auto& p : default_points(f, l)) cells.push_back(p);
        continue;
      }
      ParamArgs pa{std::string(to_string(f)), l, a.g, a.h};
      cells.push_back(pa.params());
    }

  SuiteOptions opt;
  opt.nmax = a.nmax;
  opt.ladder_nmax = std::min(a.nmax, 6);
  opt.matrix_dim = a.matrix_dim;
  const auto results = run_checks(suites, cells, opt, perturbed, thread_budget());

  const CheckEntry* first = nullptr;
  const CellResult* first_cell = nullptr;
  std::size_t total = 0;
  std::size_t failed = 0;
  for (const auto& c : results) {
    const auto fails = c.report.failures();
    total += c.report.size();
    failed += fails;
    std::cout << (fails == 0 ? "PASS " : "FAIL ") << to_string(c.suite) << ' ' << describe(c.params) << " ("
              << c.report.size() - fails << '/' << c.report.size() << ")\n";
    if (fails && !first) {
      first = &*c.report.first_failure();
      first_cell = &c;
    }
  }
  std::cout << total - failed << '/' << total << " checks passed\n";
  if (first) {
    std::cout << "first failure: suite=" << to_string(first_cell->suite) << " family=" << to_string(first_cell->params.family)
              << " ell=" << first_cell->params.ell << " n=" << first->n << " identity=\"" << first->identity << "\"";
    if (!first->detail.empty()) std::cout << " detail=\"" << first->detail << "\"";
    std::cout << '\n';
  }

  if (!a.out.empty()) {
    fs::create_directories(a.out);
    json cells_json = json::array();
    for (const auto& c : results) {
      json entries = json::array();
      for (const auto& e : c.report.entries())
        entries.push_back({{"identity", e.identity}, {"n", e.n}, {"pass", e.pass}, {"detail", e.detail}, {"context", e.context}});
      json cell = params_json(c.params);
      cell["suite"] = std::string(to_string(c.suite));
      cell["pass"] = c.report.all_passed();
      cell["checks"] = entries;
      cells_json.push_back(cell);
    }
    json doc{{"total", total}, {"failed", failed}, {"cells", cells_json}};
    std::ofstream(fs::path(a.out) / "report.json") << doc.dump(2) << '\n';
  }
  return failed == 0 ? 0 : kVerifyFailed;
}

// ----------------------------------------------------------------- recur

int cmd_recur(const ParamArgs& args, int N, const std::string& out) {
  const FamilyParams p = args.params();
  if (N < 2 * p.ell + 1) throw UsageError("requires N>=2*ell+1");
  const BispectralMatrices m = bispectral_matrices(p, N);
  fs::create_directories(out);
  std::ofstream(fs::path(out) / "K.csv") << to_csv(m.k);
  std::ofstream(fs::path(out) / "Xi.csv") << to_csv(m.xi);
  std::ofstream(fs::path(out) / "H.csv") << to_csv(m.h);

  json basis;
  if (const auto* l = std::get_if<LaguerreKind>(&m.basis.kind)) {
    basis = {{"kind", "laguerre"}, {"alpha", l->alpha.get_str()}, {"offset", {m.basis.offset_a}}};
  } else {
    const auto& j = std::get<JacobiKind>(m.basis.kind);
    basis = {{"kind", "jacobi"}, {"a", j.a.get_str()}, {"b", j.b.get_str()}, {"offset", {m.basis.offset_a, m.basis.offset_b}}};
  }
  basis["candidates"] = m.basis.candidates;
  auto band = [](const BandMatrix& b) { return json{{"declared", b.declared_bandwidth()}, {"observed", b.bandwidth()}}; };
  json meta = params_json(p);
  meta["N"] = N;
  meta["basis"] = basis;
  meta["bandwidth"] = {{"K", band(m.k)}, {"Xi", band(m.xi)}, {"H", band(m.h)}};
  std::ofstream(fs::path(out) / "meta.json") << meta.dump(2) << '\n';
  std::cout << "wrote K.csv Xi.csv H.csv meta.json to " << out << '\n';
  return 0;
}

// ------------------------------------------------------- spectrum, ortho

int cmd_spectrum(const ParamArgs& args, const std::string& side_name, int grid, int levels) {
  const FamilyParams p = args.params();
  Tier side;
  try {
    side = parse_tier(side_name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (side == Tier::os) throw UsageError("side must be plus or minus");
  if (grid < 1000) throw UsageError("requires grid>=1000");
  if (levels < 1) throw UsageError("requires levels>=1");
  const SpectrumResult s = fd_spectrum(p, side, grid, levels);
  std::cout << "level,eigenvalue,exact\n";
  for (int n = 0; n < levels; ++n)
    std::cout << n << ',' << fmt_double(s.eigenvalues[n]) << ',' << fmt_double(eigenvalue(p, n, Tier::plus).get_d()) << '\n';
  return 0;
}

int cmd_ortho(const ParamArgs& args, int nmax, int order, double tol) {
  const FamilyParams p = args.params();
  if (nmax < 0) throw UsageError("nmax must be nonnegative");
  if (order < 1) throw UsageError("requires order>=1");
  const OrthogonalityResult r = orthogonality_residual(p, nmax, order);
  std::cout << "n,m,gram,residual\n";
  for (int n = 0; n <= nmax; ++n)
    for (int m = 0; m <= nmax; ++m)
      std::cout << n << ',' << m << ',' << fmt_double(r.gram[n][m]) << ',' << fmt_double(r.residual[n][m]) << '\n';
  std::cerr << "max residual " << fmt_double(r.max_offdiag) << '\n';
  if (tol > 0 && !(r.max_offdiag < tol)) return kVerifyFailed;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exceptional Laguerre and Jacobi polynomials: generation and exact verification"};
  app.set_help_flag("--help", "print this help and exit");  // -h would clash with --h
  app.require_subcommand(1);

  ParamArgs gen_p;
  std::string gen_n = "0..4";
  std::string gen_format = "json";
  auto* gen = app.add_subcommand("gen", "coefficients of P_{ell,n} in eta");
  gen_p.attach(gen);
  gen->add_option("--n", gen_n, "index or range a..b");
  gen->add_option("--format", gen_format, "json or csv");

  CheckArgs chk;
  auto* check = app.add_subcommand("check", "run exact verification suites");
  check->add_option("--suite", chk.suite, "classical, hamiltonian, sl, bispectral or all");
  check->add_option("--family", chk.families, "family tags (default all)");
  check->add_option("--ell", chk.ell, "ell or range a..b");
  check->add_option("--nmax", chk.nmax, "highest n");
  check->add_option("--N", chk.matrix_dim, "matrix truncation for the bispectral suite");
  check->add_option("--g", chk.g, "override the default coupling grid");
  check->add_option("--h", chk.h, "coupling h with --g for J families");
  check->add_option("--perturb", chk.perturb, "suite to run with a perturbed coefficient (negative control)");
  check->add_option("--out", chk.out, "directory for report.json");

  ParamArgs rec_p;
  int rec_n = 12;
  std::string rec_out = ".";
  auto* recur = app.add_subcommand("recur", "export Xi, H and K as sparse CSV");
  rec_p.attach(recur);
  recur->add_option("--N", rec_n, "truncation size");
  recur->add_option("--out", rec_out, "output directory");

  ParamArgs sp_p;
  std::string sp_side = "plus";
  int sp_grid = 8000;
  int sp_levels = 4;
  auto* spectrum = app.add_subcommand("spectrum", "finite-difference eigenvalues");
  sp_p.attach(spectrum);
  spectrum->add_option("--side", sp_side, "plus or minus");
  spectrum->add_option("--grid", sp_grid, "grid intervals (>= 1000)");
  spectrum->add_option("--levels", sp_levels, "number of eigenvalues");

  ParamArgs or_p;
  int or_nmax = 6;
  int or_order = 200;
  double or_tol = 0;
  auto* ortho = app.add_subcommand("ortho", "Gram matrix of P_{ell,n} by Gauss quadrature");
  or_p.attach(ortho);
  ortho->add_option("--nmax", or_nmax, "highest n");
  ortho->add_option("--order", or_order, "quadrature order");
  ortho->add_option("--tol", or_tol, "exit 1 if the max residual is not below this");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen) return cmd_gen(gen_p, gen_n, gen_format);
    if (*check) return cmd_check(chk);
    if (*recur) return cmd_recur(rec_p, rec_n, rec_out);
    if (*spectrum) return cmd_spectrum(sp_p, sp_side, sp_grid, sp_levels);
    if (*ortho) return cmd_ortho(or_p, or_nmax, or_order, or_tol);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kUsage;
}
