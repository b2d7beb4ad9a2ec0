#include "xopkit/suites.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

#include "xopkit/bispectral.hpp"
#include "xopkit/classical.hpp"
#include "xopkit/darboux.hpp"
#include "xopkit/exceptional.hpp"

namespace xop {

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::classical: return "classical";
    case Suite::hamiltonian: return "hamiltonian";
    case Suite::sl: return "sl";
    case Suite::bispectral: return "bispectral";
  }
  return "?";
}

std::optional<Suite> parse_suite(std::string_view text) {
  for (Suite s : all_suites())
    if (to_string(s) == text) return s;
  return std::nullopt;
}

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> v{Suite::classical, Suite::hamiltonian, Suite::sl, Suite::bispectral};
  return v;
}

std::vector<FamilyParams> default_points(Family f, int ell) {
  switch (f) {
    case Family::L1: return {{f, ell, 2, 0}, {f, ell, Rational(3, 2), 0}};
    case Family::L2: return {{f, ell, 2, 0}, {f, ell, Rational(-1, 4), 0}};
    case Family::J1: return {{f, ell, 3, 1}, {f, ell, Rational(5, 2), Rational(1, 2)}};
    case Family::J2: return {{f, ell, 1, 3}, {f, ell, Rational(1, 2), Rational(5, 2)}};
  }
  return {};
}

Report run_suite(Suite s, const FamilyParams& p, const SuiteOptions& opt, bool perturb) {
  Report rep(std::string(to_string(s)), describe(p));
  switch (s) {
    case Suite::classical:
      rep.merge(verify_classical_identities(undeformed_basis(p), opt.nmax, perturb));
      rep.merge(verify_classical_identities(discover_basis(p).kind, opt.nmax, perturb));
      break;
    case Suite::hamiltonian:
      rep.merge(verify_hamiltonian_identities(p, perturb));
      rep.merge(verify_darboux_pair(p, opt.nmax, perturb));
      rep.merge(verify_match_darboux(p, opt.nmax, perturb));
      rep.merge(shape_invariance_check(p, perturb));
      rep.merge(verify_ladders(p, opt.ladder_nmax, perturb));
      break;
    case Suite::sl:
      rep.merge(xi_structure_check(p).report);
      rep.merge(verify_sl_eigen(p, opt.nmax, perturb));
      rep.merge(invariant_subspace_check(p, opt.nmax, perturb));
      rep.merge(verify_degree_structure(p, opt.nmax, perturb));
      break;
    case Suite::bispectral:
      rep.merge(verify_bispectral(p, opt.matrix_dim, perturb));
      break;
  }
  return rep;
}

std::vector<CellResult> run_checks(const std::vector<Suite>& suites, const std::vector<FamilyParams>& cells,
                                   const SuiteOptions& opt, const std::set<Suite>& perturbed, int threads) {
  std::vector<CellResult> out;
  for (Suite s : suites)
    for (const auto& p : cells) out.push_back({s, p, Report()});

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < out.size(); i = next++) {
      CellResult& c = out[i];
      try {
        c.report = run_suite(c.suite, c.params, opt, perturbed.count(c.suite) > 0);
      } catch (const std::exception& e) {
        c.report = Report(std::string(to_string(c.suite)), describe(c.params));
        c.report.check("suite ran without error", false, -1, e.what());
      }
    }
  };
  const int n = std::clamp(threads, 1, static_cast<int>(std::max<std::size_t>(out.size(), 1)));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

int thread_budget() {
  if (const char* env = std::getenv("XOPKIT_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace xop
