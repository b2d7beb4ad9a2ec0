#ifndef XOPKIT_SUITES_HPP
#define XOPKIT_SUITES_HPP

// Grouping of the exact verifications into named suites, run over a grid of
// (family, ell, coupling) cells.

#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "xopkit/families.hpp"
#include "xopkit/report.hpp"

namespace xop {

enum class Suite { classical, hamiltonian, sl, bispectral };

std::string_view to_string(Suite s);
std::optional<Suite> parse_suite(std::string_view text);
const std::vector<Suite>& all_suites();

struct SuiteOptions {
  int nmax = 8;         // highest n in eigen-equation and Darboux checks
  int ladder_nmax = 6;  // highest n for the ladder operators
  int matrix_dim = 12;  // truncation size of the recurrence matrices
};

/// Two valid rational coupling points per family.
std::vector<FamilyParams> default_points(Family f, int ell);

/// classical: identities of the undeformed and banded bases.
/// hamiltonian: potentials, Darboux pair, match with P_{ell,n}, shape
///   invariance, ladders.
/// sl: xi structure, Fuchsian eigen-equation, invariant subspaces, degrees.
/// bispectral: expansions, K two ways, pi^2(J) = H Xi, mirror ratios.
Report run_suite(Suite s, const FamilyParams& p, const SuiteOptions& opt, bool perturb = false);

struct CellResult {
  Suite suite;
  FamilyParams params;
  Report report;
};

/// Every (suite, cell) pair, in a deterministic order. Suites listed in
/// `perturbed` run with their negative-control perturbation. Cells run on up
/// to `threads` workers.
std::vector<CellResult> run_checks(const std::vector<Suite>& suites, const std::vector<FamilyParams>& cells,
                                   const SuiteOptions& opt, const std::set<Suite>& perturbed, int threads);

/// Worker count from XOPKIT_THREADS, else the hardware concurrency.
int thread_budget();

}  // namespace xop

#endif  // XOPKIT_SUITES_HPP
