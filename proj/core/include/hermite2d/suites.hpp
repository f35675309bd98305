#pragma once

#include "hermite2d/determinant.hpp"
#include "hermite2d/integrate.hpp"
#include "hermite2d/report.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace hermite2d {

/// Named verification suites; each maps to one identity family (the
/// mapping table lives in the README).
enum class SuiteId {
  gf,
  rodrigues_routes,
  swap_index,
  orthogonality,
  orthogonality_condition,
  moment_rep,
  wigner,
  wigner_deformed,
  translation,
  real_basis,
  gram,
  determinants,
  determinant_oracle,
  real_hermite,
  at_zero,
};

const std::vector<SuiteId>& all_suites();
std::string_view suite_name(SuiteId id);
std::optional<SuiteId> suite_from_name(std::string_view name);

struct RunConfig {
  /// Overrides the suite's primary sweep bound (documented per suite).
  std::optional<int> max_degree;
  /// Overrides the largest Hankel size for the determinant suites.
  std::optional<int> hankel_size;
  std::vector<GMatrix> g_set;            // empty -> default_g_set()
  std::vector<GaussianRational> points;  // empty -> default_points()
  int jobs = 0;                          // 0 -> hardware concurrency
};

/// The versioned deformation-matrix test set: identity, swap, diagonal,
/// upper-triangular, and a hermitian-pair matrix with complex entries.
const std::vector<GMatrix>& default_g_set();

/// Hermitian-pair subset used by the determinant suites.
const std::vector<GMatrix>& hermitian_pair_g_set();

const std::vector<GaussianRational>& default_points();

/// Five fixed rational points (z = 0 included) for determinant sweeps.
const std::vector<GaussianRational>& determinant_points();

/// Runs every case of the suite; report order is fixed by the case
/// enumeration and independent of the worker count.
std::vector<VerificationReport> run_suite(SuiteId id, const RunConfig& cfg);

}  // namespace hermite2d
