#pragma once

// Stars, tops and lines of Γ_k(V), their restrictions to non-degenerate
// codes, and executable checks of the maximal-clique statements.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grasscode/code_graph.hpp"

namespace grasscode {

enum class CliqueKind { star, top, star_restricted, top_restricted, line };

std::string_view to_string(CliqueKind kind);

struct CliqueDescriptor {
  CliqueKind kind;
  std::optional<Subspace> lower;  // X, dim k-1 (stars, lines)
  std::optional<Subspace> upper;  // Y, dim k+1 (tops, lines)
  std::vector<Subspace> members;  // canonical enumeration order
};

/// All k-subspaces containing X, k = dim X + 1.
CliqueDescriptor star(const Subspace& x);
/// All k-subspaces of Y, k = dim Y - 1.
CliqueDescriptor top(const Subspace& y);
CliqueDescriptor star_restricted(const Subspace& x);
CliqueDescriptor top_restricted(const Subspace& y);
/// S(X) ∩ T(Y); requires dim Y = dim X + 2 and X ⊂ Y.
CliqueDescriptor line(const Subspace& x, const Subspace& y);

/// |S^c(X)| = (q-1)^(c-1) q^(n-k-c+1) for 0 < c(X) <= n-k+1, k = dim X + 1.
/// Throws for c(X) = 0, where S^c(X) = S(X) has [n-k+1]_q elements.
std::uint64_t star_restricted_size_formula(const Subspace& x);

/// Vertex ids of the members that are vertices of g, sorted.
std::vector<VertexId> member_ids(const CliqueDescriptor& clique, const Graph& g);

/// True iff no vertex outside `members` is adjacent to all of them. Throws
/// when `members` is not a clique of g. An empty set is never maximal.
bool is_maximal_clique(const std::vector<VertexId>& members, const Graph& g);
bool is_maximal_clique(const std::vector<Subspace>& members, const Graph& g);

// ---------------------------------------------------------------- suites

struct CliqueViolation {
  std::string assertion;
  Subspace anchor;
  std::string detail;
};

struct SizeFormulaReport {
  int n = 0, k = 0, q = 0;
  std::uint64_t stars_checked = 0;
  std::uint64_t restricted_stars_checked = 0;  // anchors with c(X) >= 1
  std::uint64_t tops_checked = 0;
  std::uint64_t restricted_tops_checked = 0;   // non-degenerate Y
  std::uint64_t lines_checked = 0;
  std::vector<CliqueViolation> violations;
  bool pass() const { return violations.empty(); }
};

/// Exhaustive size checks for stars, tops, lines and their restrictions.
SizeFormulaReport check_size_formulas(const GrassmannianParams& params);

struct PropStarReport {
  int n = 0, k = 0, q = 0;
  std::uint64_t anchors = 0;
  std::uint64_t maximal = 0;
  /// c(X) -> (maximal count, non-maximal count)
  std::map<int, std::pair<std::uint64_t, std::uint64_t>> by_c;
  std::uint64_t two_element_stars = 0;  // q = 2, c = n-k, |S^c| = 2
  std::uint64_t one_element_stars = 0;  // q = 2, c = n-k+1, |S^c| = 1
  std::uint64_t top_coincidence_checks = 0;
  std::vector<CliqueViolation> violations;
  bool pass() const { return violations.empty(); }
};

/// Checks, for every (k-1)-dim X: q >= 3 => S^c(X) maximal; q = 2 =>
/// maximal iff c(X) <= n-k-1 (with the two small non-maximal cases); and a
/// maximal S^c(X) is never equal to some T^c(Y). Requires 1 < k < n-1.
PropStarReport check_prop_star(const GrassmannianParams& params);

struct TopDefect {
  Subspace y;
  std::size_t size = 0;
  bool empty = false;
  std::optional<Subspace> containing_star;  // X with T^c(Y) ⊊ S^c(X)
};

struct PropTopReport {
  int n = 0, k = 0, q = 0;
  std::uint64_t tops = 0;  // |C(n,k+1)_q|
  std::uint64_t maximal = 0;
  std::uint64_t empty = 0;
  bool all_maximal = false;
  bool inequality = false;  // [k+1]_q - (q+1) > n
  std::optional<TopDefect> defect;
  std::vector<CliqueViolation> violations;  // size-formula mismatches
  bool equivalent() const { return all_maximal == inequality; }
  bool pass() const { return equivalent() && violations.empty() && (inequality || defect.has_value()); }
};

PropTopReport check_prop_top(const GrassmannianParams& params);

struct CensusReport {
  std::size_t vertex_count = 0;
  std::uint64_t maximal_cliques = 0;
  std::uint64_t matched_star = 0;
  std::uint64_t matched_top = 0;
  std::vector<std::vector<VertexId>> unmatched;
  bool pass() const { return unmatched.empty(); }
};

inline constexpr std::size_t kCensusVertexCap = 1000;

/// Bron–Kerbosch with pivoting over g; each maximal clique must equal some
/// S^c(X) or T^c(Y). Throws BudgetExceeded above `vertex_cap`.
CensusReport maximal_clique_census(const Graph& g, std::size_t vertex_cap = kCensusVertexCap);

/// Calls fn(clique) for every maximal clique, ids sorted.
void for_each_maximal_clique(const Graph& g, const std::function<void(const std::vector<VertexId>&)>& fn);

}  // namespace grasscode
