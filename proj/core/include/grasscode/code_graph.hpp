#pragma once

// Non-degenerate codes, coordinate-hyperplane combinatorics and the
// materialized graphs Γ_k(V), Γ(n,k)_q and the dual variant.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grasscode/grassmannian.hpp"

namespace grasscode {

enum class Variant { full, nondeg, dual_nondeg, custom };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view s);

using VertexId = std::uint32_t;

/// Materialized vertex list plus sorted neighbor lists. Immutable once built.
class Graph {
 public:
  /// Adjacency must be symmetric without self-loops; lists are sorted here.
  /// `custom` graphs may carry a non-induced edge set.
  Graph(GrassmannianParams params, Variant variant, std::vector<Subspace> vertices,
        std::vector<std::vector<VertexId>> adjacency);

  const GrassmannianParams& params() const { return params_; }
  Variant variant() const { return variant_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const Subspace& vertex(VertexId v) const { return vertices_[v]; }
  const std::vector<Subspace>& vertices() const { return vertices_; }
  const std::vector<VertexId>& neighbors(VertexId v) const { return adjacency_[v]; }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
  std::uint64_t edge_count() const { return edge_count_; }

  bool has_edge(VertexId u, VertexId v) const;
  std::optional<VertexId> index_of(const Subspace& x) const;
  /// Edges (u, v) with u < v, sorted.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

 private:
  GrassmannianParams params_;
  Variant variant_;
  std::vector<Subspace> vertices_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::uint64_t edge_count_ = 0;
  std::optional<GrassmannianIndex> index_;
  std::vector<std::int32_t> slot_;  // Grassmannian rank -> vertex id, -1 if absent
};

struct CoordinateProfile {
  int c = 0;                  // coordinate hyperplanes containing X
  std::optional<int> weight;  // set for 1-dimensional X only
  std::vector<int> support;   // nonzero columns, 0-based
};

bool is_nondegenerate(const Subspace& x);
CoordinateProfile coordinate_profile(const Subspace& x);
/// C_i = kernel of the i-th coordinate functional (0-based i).
Subspace coordinate_hyperplane(const Field& field, int n, int i);
/// Number of distinct subspaces among Y ∩ C_1, ..., Y ∩ C_n. Throws for a
/// degenerate Y.
int n_count(const Subspace& y);
/// |C(n,k)_q| by inclusion–exclusion over coordinate subspaces.
std::int64_t count_codes(int n, int k, int q);
/// Number of RREF columns with exactly one nonzero entry.
int unit_column_count(const Subspace& x);

/// Builds the graph; vertex ids follow the canonical enumeration order.
Graph build_graph(const GrassmannianParams& params, Variant variant);
/// Induced subgraph of Γ_k(V) on an arbitrary vertex list (kept in the given order).
Graph build_induced_graph(const GrassmannianParams& params, std::vector<Subspace> vertices);

/// Number of connected components (0 for the empty graph).
int connectivity(const Graph& g);

struct DistanceWitness {
  VertexId source = 0;
  VertexId target = 0;
  int path_distance = -1;  // -1: unreachable
  int grassmann_distance = 0;
};

struct DistanceOptions {
  bool stop_at_first_witness = true;
  /// Sources ordered by descending unit_column_count (ties by id).
  bool guided_order = true;
  double time_budget_seconds = 0;  // 0: unlimited
  int jobs = 1;
  /// Scan one source per orbit of the monomial semilinear group. Only used
  /// for the full and nondeg variants, whose vertex sets are invariant.
  bool orbit_reduction = false;
};

struct DistanceReport {
  bool coincides = true;
  std::optional<DistanceWitness> witness;
  std::uint64_t sources_scanned = 0;
  std::uint64_t pairs_checked = 0;
  std::size_t vertex_count = 0;
  std::size_t source_count = 0;  // candidate sources after orbit reduction
  bool timed_out = false;
};

/// Smallest vertex id of each orbit of the monomial semilinear group on the
/// vertex set, ascending. Throws for variants whose vertex set is not invariant.
std::vector<VertexId> monomial_orbit_representatives(const Graph& g);

/// BFS from every vertex of `g` and compares path distance to Grassmann
/// distance. Stops early on the first witness when requested.
DistanceReport distance_coincidence(const Graph& g, const DistanceOptions& options = {});
/// Builds Γ(n,k)_q and runs distance_coincidence on it.
DistanceReport distance_coincidence_report(const GrassmannianParams& params,
                                           const DistanceOptions& options = {});

}  // namespace grasscode
