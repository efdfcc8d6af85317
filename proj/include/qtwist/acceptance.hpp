#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qtwist/cache.hpp"
#include "qtwist/fixtures.hpp"
#include "qtwist/lvalue.hpp"

namespace qtwist {

struct CriterionResult {
  std::string id;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Tolerances used when comparing against published tables.
struct TableTolerances {
  long double rel_L = 1e-5L;      // |L_standard - L_published| / L_published
  long double zero_L = 1e-6L;     // |L_standard| on rows printed as 0
  long double abs_k = 1e-9L;      // |khat * lambda^2 - k_published|
};

struct TableComparison {
  bool pass = false;
  Rational lambda = 0;           // our c / published c
  long double k_scaled = 0;      // khat * lambda^2
  long double max_rel_L = 0;
  std::size_t rows = 0;
  std::string detail;
};

TableComparison compare_table(const fixtures::TwistTable& table, const VerificationReport& report,
                              const TableTolerances& tol = {});

/// Report for one published table, computed with the default base point and the table's psi.
VerificationReport table_report(const fixtures::TwistTable& table, const Cache* cache, int threads);

struct BenchResult {
  std::vector<std::int64_t> bounds;
  std::vector<double> seconds;  // theta coefficient time per bound
  double slope = 0;
  std::int64_t compare_bound = 0;
  std::size_t discriminants = 0;
  double theta_seconds = 0;
  double standard_seconds = 0;
  double speedup = 0;
};

/// Timing of Theta_{-3}(e_f) for 11A at the given bounds, and theta-versus-standard
/// evaluation of all admissible central values up to compare_bound.
BenchResult run_bench(const std::vector<std::int64_t>& bounds, std::int64_t compare_bound, const Cache* cache,
                      int threads);

/// Counts of vectors per norm by scanning the bounding box (test oracle).
std::vector<std::int64_t> box_scan_counts(const GramMatrix& g, std::int64_t bound);

struct AcceptanceOptions {
  const Cache* cache = nullptr;
  int threads = 1;
  /// Criterion id ("AC-4") or form label ("37A"); empty runs everything.
  std::string only;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace qtwist
