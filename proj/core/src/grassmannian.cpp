#include "grasscode/grassmannian.hpp"

#include <limits>

namespace grasscode {

BudgetExceeded::BudgetExceeded(std::uint64_t required, std::uint64_t budget)
    : Error("vertex budget exceeded: requires " + std::to_string(required) + ", budget " +
            std::to_string(budget)),
      required_(required),
      budget_(budget) {}

GrassmannianParams GrassmannianParams::make(int n, int k, int q, std::uint64_t vertex_budget) {
  GrassmannianParams p{n, k, &Field::get(q), vertex_budget};
  p.validate();
  return p;
}

void GrassmannianParams::validate() const {
  if (field == nullptr) throw Error("missing field");
  if (n < 1 || n > kMaxAmbient) throw Error("ambient dimension must be in [1, 64]");
  if (k < 1 || k > n) throw Error("subspace dimension must satisfy 1 <= k <= n");
  if (vertex_budget == 0) throw Error("vertex budget must be positive");
}

void GrassmannianParams::require_budget() const {
  validate();
  std::uint64_t need;
  try {
    need = gaussian_binomial(n, k, q());
  } catch (const Error&) {
    throw BudgetExceeded(std::numeric_limits<std::uint64_t>::max(), vertex_budget);
  }
  if (need > vertex_budget) throw BudgetExceeded(need, vertex_budget);
}

std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i)
    if (__builtin_mul_overflow(r, base, &r)) throw Error("integer overflow");
  return r;
}

std::uint64_t gaussian_number(int m, int q) {
  if (m < 0) throw Error("negative dimension");
  // q^{m-1} + ... + q + 1
  std::uint64_t r = 0;
  for (int i = 0; i < m; ++i)
    if (__builtin_add_overflow(r, ipow(q, i), &r)) throw Error("integer overflow");
  return r;
}

std::uint64_t gaussian_binomial(int m, int k, int q) {
  if (k < 0 || k > m) throw Error("gaussian binomial requires 0 <= k <= m");
  // gauss(m, j) = gauss(m, j-1) * (q^{m-j+1} - 1) / (q^j - 1), exact at each step
  __extension__ using u128 = unsigned __int128;
  u128 r = 1;
  for (int j = 1; j <= k; ++j) {
    r = r * (ipow(q, m - j + 1) - 1) / (ipow(q, j) - 1);
    if (r > std::numeric_limits<std::uint64_t>::max()) throw Error("integer overflow");
  }
  return static_cast<std::uint64_t>(r);
}

std::vector<std::vector<int>> pivot_sets_colex(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k > n || k < 0) return out;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    int i = 0;
    while (i < k && c[i] + 1 == (i + 1 < k ? c[i + 1] : n)) ++i;
    if (i == k) break;
    ++c[i];
    for (int j = 0; j < i; ++j) c[j] = j;
  }
  return out;
}

int free_cell_count(int n, const std::vector<int>& pivots) {
  const int k = static_cast<int>(pivots.size());
  int count = 0;
  for (int r = 0; r < k; ++r) count += n - pivots[r] - 1 - (k - 1 - r);
  return count;
}

namespace {

std::uint64_t pivot_mask(const std::vector<int>& pivots) {
  std::uint64_t m = 0;
  for (int p : pivots) m |= std::uint64_t{1} << p;
  return m;
}

// Free cells of a pivot set in row-major order.
std::vector<std::pair<int, int>> free_cells(int n, const std::vector<int>& pivots) {
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < static_cast<int>(pivots.size()); ++r)
    for (int c = pivots[r] + 1; c < n; ++c)
      if (!is_pivot[c]) cells.emplace_back(r, c);
  return cells;
}

}  // namespace

GrassmannianIndex::GrassmannianIndex(int n, int k, const Field& field)
    : n_(n), k_(k), field_(&field), pivot_sets_(pivot_sets_colex(n, k)) {
  for (std::size_t i = 0; i < pivot_sets_.size(); ++i) {
    offsets_.push_back(total_);
    by_mask_.emplace(pivot_mask(pivot_sets_[i]), i);
    total_ += ipow(field.q(), free_cell_count(n, pivot_sets_[i]));
  }
}

std::uint64_t GrassmannianIndex::rank(const Subspace& x) const {
  if (x.ambient() != n_ || x.dim() != k_ || x.field().q() != field_->q())
    throw Error("subspace does not belong to this Grassmannian");
  const auto it = by_mask_.find(pivot_mask(x.pivots()));
  std::uint64_t value = 0;
  for (auto [r, c] : free_cells(n_, x.pivots())) value = value * field_->q() + x.at(r, c);
  return offsets_[it->second] + value;
}

Subspace GrassmannianIndex::unrank(std::uint64_t index) const {
  if (index >= total_) throw Error("index out of range");
  std::size_t set = 0;
  while (set + 1 < offsets_.size() && offsets_[set + 1] <= index) ++set;
  std::uint64_t value = index - offsets_[set];
  const auto& piv = pivot_sets_[set];
  const auto cells = free_cells(n_, piv);
  std::vector<Elem> entries(static_cast<std::size_t>(k_) * n_, 0);
  for (int r = 0; r < k_; ++r) entries[r * n_ + piv[r]] = 1;
  for (auto it = cells.rbegin(); it != cells.rend(); ++it) {
    entries[it->first * n_ + it->second] = static_cast<Elem>(value % field_->q());
    value /= field_->q();
  }
  return Subspace::from_canonical_unchecked(*field_, n_, k_, std::move(entries));
}

void for_each_subspace(const GrassmannianParams& params,
                       const std::function<void(const Subspace&)>& fn) {
  params.require_budget();
  const int n = params.n;
  const int k = params.k;
  const int q = params.q();
  for (const auto& piv : pivot_sets_colex(n, k)) {
    const auto cells = free_cells(n, piv);
    std::vector<Elem> entries(static_cast<std::size_t>(k) * n, 0);
    for (int r = 0; r < k; ++r) entries[r * n + piv[r]] = 1;
    std::vector<int> digits(cells.size(), 0);
    while (true) {
      fn(Subspace::from_canonical_unchecked(*params.field, n, k, entries));
      // odometer, last cell fastest
      int i = static_cast<int>(cells.size()) - 1;
      while (i >= 0 && digits[i] == q - 1) {
        digits[i] = 0;
        entries[cells[i].first * n + cells[i].second] = 0;
        --i;
      }
      if (i < 0) break;
      ++digits[i];
      entries[cells[i].first * n + cells[i].second] = static_cast<Elem>(digits[i]);
    }
  }
}

std::vector<Subspace> enumerate_grassmannian(const GrassmannianParams& params) {
  params.require_budget();
  std::vector<Subspace> out;
  out.reserve(gaussian_binomial(params.n, params.k, params.q()));
  for_each_subspace(params, [&](const Subspace& s) { out.push_back(s); });
  return out;
}

void for_each_superspace(const Subspace& x, int d, const std::function<void(const Subspace&)>& fn) {
  const int n = x.ambient();
  const int j = x.dim();
  if (d <= j || d > n) throw Error("superspace dimension out of range");
  const Field& f = x.field();
  std::vector<int> complement;
  {
    std::vector<bool> is_pivot(n, false);
    for (int p : x.pivots()) is_pivot[p] = true;
    for (int c = 0; c < n; ++c)
      if (!is_pivot[c]) complement.push_back(c);
  }
  const int m = n - j;
  GrassmannianParams coeff{m, d - j, &f, std::numeric_limits<std::uint64_t>::max()};
  for_each_subspace(coeff, [&](const Subspace& c) {
    Matrix rows(f, d, n);
    for (int r = 0; r < j; ++r)
      for (int col = 0; col < n; ++col) rows.at(r, col) = x.at(r, col);
    for (int r = 0; r < c.dim(); ++r)
      for (int t = 0; t < m; ++t) rows.at(j + r, complement[t]) = c.at(r, t);
    fn(canonicalize(rows));
  });
}

void for_each_subspace_of(const Subspace& y, int d, const std::function<void(const Subspace&)>& fn) {
  if (d < 1 || d > y.dim()) throw Error("subspace dimension out of range");
  const Matrix basis = y.basis();
  GrassmannianParams coeff{y.dim(), d, &y.field(), std::numeric_limits<std::uint64_t>::max()};
  for_each_subspace(coeff, [&](const Subspace& c) { fn(canonicalize(c.basis() * basis)); });
}

bool is_adjacent(const Subspace& x, const Subspace& y) {
  if (x.dim() != y.dim()) throw Error("dimension mismatch");
  return sum_dim(x, y) == x.dim() + 1;
}

int grassmann_distance(const Subspace& x, const Subspace& y) {
  if (x.dim() != y.dim()) throw Error("dimension mismatch");
  return sum_dim(x, y) - x.dim();
}

}  // namespace grasscode
