#include "grasscode/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace grasscode {

namespace {

void require_same(const Subspace& x, const Subspace& y) {
  if (x.ambient() != y.ambient() || x.field().q() != y.field().q())
    throw Error("ambient mismatch: " + std::to_string(x.ambient()) + " vs " +
                std::to_string(y.ambient()));
}

void check_ambient(int n) {
  if (n < 1 || n > kMaxAmbient) throw Error("ambient dimension must be in [1, 64]");
}

// In-place RREF of a rows x cols block using only the first `pivot_cols`
// columns for pivot selection; row operations act on every column.
int rref(const Field& f, Elem* data, int rows, int cols, int pivot_cols,
         std::vector<int>* pivots) {
  int r = 0;
  for (int c = 0; c < pivot_cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (data[i * cols + c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      std::swap_ranges(data + sel * cols, data + (sel + 1) * cols, data + r * cols);
    Elem* prow = data + r * cols;
    const Elem lead = prow[c];
    if (lead != 1) {
      const Elem li = f.inv(lead);
      for (int j = 0; j < cols; ++j) prow[j] = f.mul(prow[j], li);
    }
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      Elem* row = data + i * cols;
      const Elem factor = row[c];
      if (factor == 0) continue;
      const Elem nf = f.neg(factor);
      for (int j = c; j < cols; ++j) row[j] = f.add(row[j], f.mul(nf, prow[j]));
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

std::uint64_t pack_row(std::span<const Elem> row) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < row.size(); ++i)
    if (row[i]) m |= std::uint64_t{1} << i;
  return m;
}

int rank_gf2(std::uint64_t* rows, int count) {
  int r = 0;
  for (int i = 0; i < count; ++i) {
    std::uint64_t v = rows[i];
    for (int j = 0; j < r; ++j) {
      // rows[0..r) are kept with distinct lowest set bits
      if (v & (rows[j] & (~rows[j] + 1))) v ^= rows[j];
    }
    if (v) {
      // reduce existing rows by v's lowest bit to keep the invariant
      const std::uint64_t low = v & (~v + 1);
      for (int j = 0; j < r; ++j)
        if (rows[j] & low) rows[j] ^= v;
      rows[r++] = v;
    }
  }
  return r;
}

}  // namespace

// ---------------------------------------------------------------- Vector

Vector::Vector(const Field& field, std::vector<Elem> entries)
    : field_(&field), entries_(std::move(entries)) {
  check_ambient(size());
  for (Elem e : entries_)
    if (e >= field.q()) throw Error("vector entry out of range");
}

Vector::Vector(const Field& field, std::initializer_list<int> entries) : field_(&field) {
  for (int e : entries) {
    if (e < 0 || e >= field.q()) throw Error("vector entry out of range");
    entries_.push_back(static_cast<Elem>(e));
  }
  check_ambient(size());
}

Vector Vector::zero(const Field& field, int n) { return Vector(field, std::vector<Elem>(n, 0)); }

Vector Vector::unit(const Field& field, int n, int i) {
  std::vector<Elem> v(n, 0);
  v.at(i) = 1;
  return Vector(field, std::move(v));
}

bool Vector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Elem e) { return e == 0; });
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(const Field& field, int rows, int cols)
    : field_(&field), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw Error("negative matrix shape");
}

Matrix::Matrix(const Field& field, const std::vector<std::vector<int>>& rows)
    : field_(&field), rows_(static_cast<int>(rows.size())), cols_(rows.empty() ? 0 : static_cast<int>(rows[0].size())) {
  data_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_) throw Error("matrix is not rectangular");
    for (int e : row) {
      if (e < 0 || e >= field.q()) throw Error("matrix entry out of range");
      data_.push_back(static_cast<Elem>(e));
    }
  }
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) throw Error("empty row list");
  Matrix m(rows[0].field(), static_cast<int>(rows.size()), rows[0].size());
  for (int r = 0; r < m.rows_; ++r) {
    if (rows[r].size() != m.cols_) throw Error("matrix is not rectangular");
    std::copy(rows[r].entries().begin(), rows[r].entries().end(), m.data_.begin() + r * m.cols_);
  }
  return m;
}

Matrix Matrix::identity(const Field& field, int n) {
  Matrix m(field, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error("matrix shape mismatch");
  if (field_->q() != rhs.field_->q()) throw Error("field mismatch");
  const Field& f = *field_;
  Matrix out(f, rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int l = 0; l < cols_; ++l) {
      const Elem a = at(i, l);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) = f.add(out.at(i, j), f.mul(a, rhs.at(l, j)));
    }
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(*field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

int rank(const Matrix& m) {
  std::vector<Elem> data(m.data().begin(), m.data().end());
  return rref(m.field(), data.data(), m.rows(), m.cols(), m.cols(), nullptr);
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("inverse of non-square matrix");
  const int n = m.rows();
  std::vector<Elem> aug(static_cast<std::size_t>(n) * 2 * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i * 2 * n + j] = m.at(i, j);
    aug[i * 2 * n + n + i] = 1;
  }
  if (rref(m.field(), aug.data(), n, 2 * n, n, nullptr) < n) return std::nullopt;
  Matrix out(m.field(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = aug[i * 2 * n + n + j];
  return out;
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(const Field& field, int n, int k, std::vector<Elem> entries)
    : field_(&field), n_(n), k_(k), entries_(std::move(entries)) {
  pivots_.reserve(k);
  for (int r = 0; r < k; ++r) {
    int c = 0;
    while (c < n && entries_[r * n + c] == 0) ++c;
    pivots_.push_back(c);
  }
}

Subspace Subspace::from_canonical_unchecked(const Field& field, int n, int k,
                                            std::vector<Elem> entries) {
  return Subspace(field, n, k, std::move(entries));
}

Matrix Subspace::basis() const {
  Matrix m(*field_, k_, n_);
  for (int r = 0; r < k_; ++r)
    for (int c = 0; c < n_; ++c) m.at(r, c) = at(r, c);
  return m;
}

Vector Subspace::row_vector(int r) const {
  auto row_span = row(r);
  return Vector(*field_, std::vector<Elem>(row_span.begin(), row_span.end()));
}

std::string Subspace::to_string() const {
  std::string s;
  s.reserve(static_cast<std::size_t>(k_) * (n_ + 1));
  for (int r = 0; r < k_; ++r) {
    if (r) s.push_back(',');
    for (int c = 0; c < n_; ++c) s.push_back(digit_char(at(r, c)));
  }
  return s;
}

std::string Subspace::to_text_block() const {
  std::string s;
  for (int r = 0; r < k_; ++r) {
    for (int c = 0; c < n_; ++c) s.push_back(digit_char(at(r, c)));
    s.push_back('\n');
  }
  return s;
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.field_->q() <=> b.field_->q(); c != 0) return c;
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.k_ <=> b.k_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(),
                                                b.entries_.begin(), b.entries_.end());
}

Subspace canonicalize(const Matrix& rows) {
  if (rows.rows() == 0) throw Error("zero subspace not representable");
  check_ambient(rows.cols());
  std::vector<Elem> data(rows.data().begin(), rows.data().end());
  const int r = rref(rows.field(), data.data(), rows.rows(), rows.cols(), rows.cols(), nullptr);
  if (r == 0) throw Error("zero subspace not representable");
  data.resize(static_cast<std::size_t>(r) * rows.cols());
  return Subspace(rows.field(), rows.cols(), r, std::move(data));
}

Subspace canonicalize(const std::vector<Vector>& rows) { return canonicalize(Matrix::from_rows(rows)); }

Subspace span_of(const Vector& v) { return canonicalize(std::vector<Vector>{v}); }

Subspace parse_subspace(const Field& field, std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::vector<int> cur;
  auto flush = [&] {
    if (!cur.empty()) rows.push_back(std::move(cur));
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == '\n' || ch == '\r' || ch == ' ') {
      flush();
      continue;
    }
    const int v = digit_value(ch);
    if (v < 0 || v >= field.q()) throw Error(std::string("bad subspace digit '") + ch + "'");
    cur.push_back(v);
  }
  flush();
  if (rows.empty()) throw Error("empty subspace text");
  return canonicalize(Matrix(field, rows));
}

int sum_dim(const Subspace& x, const Subspace& y) {
  require_same(x, y);
  const Field& f = x.field();
  const int n = x.ambient();
  if (f.q() == 2) {
    std::uint64_t rows[2 * kMaxAmbient];
    int count = 0;
    for (int r = 0; r < x.dim(); ++r) rows[count++] = pack_row(x.row(r));
    for (int r = 0; r < y.dim(); ++r) rows[count++] = pack_row(y.row(r));
    return rank_gf2(rows, count);
  }
  // reduce y's rows by x's pivots, then rank the residuals
  std::vector<Elem> resid(y.entries().begin(), y.entries().end());
  const auto& piv = x.pivots();
  for (int r = 0; r < y.dim(); ++r) {
    Elem* row = resid.data() + r * n;
    for (int i = 0; i < x.dim(); ++i) {
      const Elem factor = row[piv[i]];
      if (factor == 0) continue;
      const Elem nf = f.neg(factor);
      auto xr = x.row(i);
      for (int c = piv[i]; c < n; ++c) row[c] = f.add(row[c], f.mul(nf, xr[c]));
    }
  }
  return x.dim() + rref(f, resid.data(), y.dim(), n, n, nullptr);
}

Subspace sum(const Subspace& x, const Subspace& y) {
  require_same(x, y);
  Matrix m(x.field(), x.dim() + y.dim(), x.ambient());
  for (int r = 0; r < x.dim(); ++r)
    for (int c = 0; c < x.ambient(); ++c) m.at(r, c) = x.at(r, c);
  for (int r = 0; r < y.dim(); ++r)
    for (int c = 0; c < x.ambient(); ++c) m.at(x.dim() + r, c) = y.at(r, c);
  return canonicalize(m);
}

Intersection intersect(const Subspace& x, const Subspace& y) {
  require_same(x, y);
  const Field& f = x.field();
  const int n = x.ambient();
  const int a = x.dim();
  const int b = y.dim();
  const int rows = a + b;
  const int cols = n + rows;
  // [X; Y | I]: rows whose left block reduces to zero carry left-kernel
  // coefficients (u, w) with uX + wY = 0, so uX spans X ∩ Y.
  std::vector<Elem> aug(static_cast<std::size_t>(rows) * cols, 0);
  for (int r = 0; r < a; ++r)
    for (int c = 0; c < n; ++c) aug[r * cols + c] = x.at(r, c);
  for (int r = 0; r < b; ++r)
    for (int c = 0; c < n; ++c) aug[(a + r) * cols + c] = y.at(r, c);
  for (int r = 0; r < rows; ++r) aug[r * cols + n + r] = 1;
  const int rk = rref(f, aug.data(), rows, cols, n, nullptr);

  Intersection out;
  out.dim = rows - rk;
  if (out.dim == 0) return out;
  Matrix vecs(f, out.dim, n);
  for (int i = 0; i < out.dim; ++i) {
    const Elem* coeff = aug.data() + (rk + i) * cols + n;
    for (int r = 0; r < a; ++r) {
      if (coeff[r] == 0) continue;
      for (int c = 0; c < n; ++c) vecs.at(i, c) = f.add(vecs.at(i, c), f.mul(coeff[r], x.at(r, c)));
    }
  }
  out.subspace = canonicalize(vecs);
  return out;
}

Subspace orthocomplement(const Subspace& x) {
  const Field& f = x.field();
  const int n = x.ambient();
  const int k = x.dim();
  if (k == n) throw Error("zero subspace not representable");
  std::vector<bool> is_pivot(n, false);
  for (int p : x.pivots()) is_pivot[p] = true;
  Matrix m(f, n - k, n);
  int r = 0;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    m.at(r, free) = 1;
    for (int i = 0; i < k; ++i) m.at(r, x.pivots()[i]) = f.neg(x.at(i, free));
    ++r;
  }
  return canonicalize(m);
}

bool contains(const Subspace& x, const Vector& v) {
  if (v.size() != x.ambient() || v.field().q() != x.field().q()) throw Error("ambient mismatch");
  const Field& f = x.field();
  std::vector<Elem> w(v.entries().begin(), v.entries().end());
  for (int i = 0; i < x.dim(); ++i) {
    const int p = x.pivots()[i];
    const Elem factor = w[p];
    if (factor == 0) continue;
    const Elem nf = f.neg(factor);
    for (int c = p; c < x.ambient(); ++c) w[c] = f.add(w[c], f.mul(nf, x.at(i, c)));
  }
  return std::all_of(w.begin(), w.end(), [](Elem e) { return e == 0; });
}

bool contains(const Subspace& x, const Subspace& y) {
  require_same(x, y);
  if (y.dim() > x.dim()) return false;
  return sum_dim(x, y) == x.dim();
}

char digit_char(Elem e) { return static_cast<char>(e < 10 ? '0' + e : 'a' + (e - 10)); }

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  return -1;
}

}  // namespace grasscode

std::size_t std::hash<grasscode::Subspace>::operator()(const grasscode::Subspace& s) const noexcept {
  std::size_t h = static_cast<std::size_t>(s.ambient()) * 1315423911u + s.dim();
  for (auto e : s.entries()) h = h * 1099511628211ull + e + 1;
  return h;
}
