#pragma once

// Verification suites over parameter grids, reported as JSON with a fixed
// key order: {suite, claim, seed, status, cases: [{params, assertion,
// status, counterexamples, stats}]}.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "grasscode/grassmannian.hpp"
#include "grasscode/morphisms.hpp"

namespace grasscode {

using Json = nlohmann::ordered_json;

struct GridPoint {
  int q = 0;
  int n = 0;
  int k = 0;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

struct SuiteConfig {
  /// Unset fields fall back to the suite's default grid.
  std::optional<int> q, n, k;
  std::uint64_t seed = 1;
  int jobs = 1;
  bool long_run = false;  // adds the (2,9,2) distance case
  std::uint64_t vertex_budget = kDefaultVertexBudget;
  double time_budget_seconds = 0;  // 0: unlimited
  int samples = 50;                // random maps per point (automorphisms)
  int scramblings = 100;           // per point (linalg)
};

struct SuiteResult {
  Json report;
  bool pass = false;
  bool budget_exceeded = false;  // a time budget ran out before a verdict
};

/// counts, star-formula, prop-star, prop-top, connectivity, distance, census,
/// automorphisms, orthocomplement, counterexample, linalg.
const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);

/// q ∈ {2,3}, 4 <= n <= 6, 2 <= k <= n-2.
std::vector<GridPoint> default_grid();
/// Points a suite visits: the default grid, filtered by any given q/n/k; an
/// explicit point when nothing matches and n is given; empty otherwise.
std::vector<GridPoint> suite_points(std::string_view suite, const SuiteConfig& config);

/// Throws Error for an unknown suite, BudgetExceeded when a vertex budget is hit.
SuiteResult run_suite(std::string_view suite, const SuiteConfig& config);
/// Runs every suite; report is {suites: [...], status}.
SuiteResult run_all(const SuiteConfig& config);

/// Path distance equals Grassmann distance on Γ(n,k)_q exactly below this n.
int distance_threshold(int q, int k);

Json to_json(const VertexMapVerdict& v, std::string_view map_kind, const GridPoint& p);

}  // namespace grasscode
