#pragma once

// Enumeration and counting of G_k(F_q^n), adjacency and Grassmann distance.

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "grasscode/linalg.hpp"

namespace grasscode {

inline constexpr std::uint64_t kDefaultVertexBudget = 2'000'000;

/// Thrown when an enumeration would exceed the configured vertex budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget);
  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

struct GrassmannianParams {
  int n = 0;
  int k = 0;
  const Field* field = nullptr;
  std::uint64_t vertex_budget = kDefaultVertexBudget;

  static GrassmannianParams make(int n, int k, int q,
                                 std::uint64_t vertex_budget = kDefaultVertexBudget);
  int q() const { return field->q(); }
  /// Throws unless 1 <= k <= n <= 64.
  void validate() const;
  /// Throws BudgetExceeded when |G_k| is over budget.
  void require_budget() const;
};

/// [m]_q = (q^m - 1)/(q - 1).
std::uint64_t gaussian_number(int m, int q);
/// Number of k-dimensional subspaces of F_q^m. Throws on 64-bit overflow.
std::uint64_t gaussian_binomial(int m, int k, int q);
std::uint64_t ipow(std::uint64_t base, int exp);

/// k-subsets of {0..n-1} in colexicographic order.
std::vector<std::vector<int>> pivot_sets_colex(int n, int k);
/// Number of free RREF cells for a pivot set.
int free_cell_count(int n, const std::vector<int>& pivots);

/// Bijection between G_k(F_q^n) and [0, gaussian_binomial) following the
/// canonical enumeration order: pivot sets in colex order, then free cells
/// (row-major) read as a base-q number, first cell most significant.
class GrassmannianIndex {
 public:
  GrassmannianIndex(int n, int k, const Field& field);

  std::uint64_t size() const { return total_; }
  std::uint64_t rank(const Subspace& x) const;
  Subspace unrank(std::uint64_t index) const;

 private:
  int n_;
  int k_;
  const Field* field_;
  std::vector<std::vector<int>> pivot_sets_;
  std::vector<std::uint64_t> offsets_;
  std::unordered_map<std::uint64_t, std::size_t> by_mask_;
  std::uint64_t total_ = 0;
};

/// Streams every k-dimensional subspace once, in canonical order.
void for_each_subspace(const GrassmannianParams& params,
                       const std::function<void(const Subspace&)>& fn);
std::vector<Subspace> enumerate_grassmannian(const GrassmannianParams& params);

/// All d-dimensional subspaces containing X (d > dim X).
void for_each_superspace(const Subspace& x, int d, const std::function<void(const Subspace&)>& fn);
/// All d-dimensional subspaces of Y (1 <= d <= dim Y).
void for_each_subspace_of(const Subspace& y, int d, const std::function<void(const Subspace&)>& fn);

bool is_adjacent(const Subspace& x, const Subspace& y);
int grassmann_distance(const Subspace& x, const Subspace& y);

}  // namespace grasscode
