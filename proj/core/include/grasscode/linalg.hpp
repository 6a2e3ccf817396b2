#pragma once

// Vectors, matrices and subspaces over GF(q).
//
// A Subspace is always held in reduced row echelon form, so two values are
// equal exactly when they describe the same subspace. Ambient dimension is
// limited to 64 (the GF(2) kernels pack a row into one machine word).

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grasscode/field.hpp"

namespace grasscode {

inline constexpr int kMaxAmbient = 64;

class Vector {
 public:
  Vector(const Field& field, std::vector<Elem> entries);
  Vector(const Field& field, std::initializer_list<int> entries);
  static Vector zero(const Field& field, int n);
  /// Standard basis vector e_{i+1} (0-based index i).
  static Vector unit(const Field& field, int n, int i);

  const Field& field() const { return *field_; }
  int size() const { return static_cast<int>(entries_.size()); }
  Elem operator[](int i) const { return entries_[i]; }
  std::span<const Elem> entries() const { return entries_; }
  bool is_zero() const;

  friend bool operator==(const Vector& a, const Vector& b) {
    return a.field_->q() == b.field_->q() && a.entries_ == b.entries_;
  }

 private:
  const Field* field_;
  std::vector<Elem> entries_;
};

class Matrix {
 public:
  Matrix(const Field& field, int rows, int cols);
  Matrix(const Field& field, const std::vector<std::vector<int>>& rows);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix identity(const Field& field, int n);

  const Field& field() const { return *field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Elem at(int r, int c) const { return data_[r * cols_ + c]; }
  Elem& at(int r, int c) { return data_[r * cols_ + c]; }
  std::span<const Elem> row(int r) const { return {data_.data() + r * cols_, static_cast<std::size_t>(cols_)}; }
  std::span<const Elem> data() const { return data_; }

  Matrix operator*(const Matrix& rhs) const;
  Matrix transposed() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_->q() == b.field_->q() && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
  }

 private:
  const Field* field_;
  int rows_;
  int cols_;
  std::vector<Elem> data_;
};

int rank(const Matrix& m);
/// Inverse of a square matrix; std::nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

class Subspace {
 public:
  /// Trusted constructor for data already in RREF (enumeration hot path).
  /// `entries` is the k x n basis in row-major order.
  static Subspace from_canonical_unchecked(const Field& field, int n, int k,
                                           std::vector<Elem> entries);

  const Field& field() const { return *field_; }
  int ambient() const { return n_; }
  int dim() const { return k_; }
  Elem at(int r, int c) const { return entries_[r * n_ + c]; }
  std::span<const Elem> row(int r) const { return {entries_.data() + r * n_, static_cast<std::size_t>(n_)}; }
  std::span<const Elem> entries() const { return entries_; }
  const std::vector<int>& pivots() const { return pivots_; }
  Matrix basis() const;
  Vector row_vector(int r) const;

  /// One-line form: k rows joined by ',', one base-36 digit per entry.
  std::string to_string() const;
  /// k lines of n digits, RREF row order.
  std::string to_text_block() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.field_->q() == b.field_->q() &&
           a.entries_ == b.entries_;
  }
  /// Lexicographic on (q, n, k, RREF entries).
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

 private:
  Subspace(const Field& field, int n, int k, std::vector<Elem> entries);

  const Field* field_;
  int n_;
  int k_;
  std::vector<Elem> entries_;
  std::vector<int> pivots_;

  friend Subspace canonicalize(const Matrix& rows);
};

/// Row-reduces to RREF and drops zero rows. Throws for an all-zero input.
Subspace canonicalize(const Matrix& rows);
Subspace canonicalize(const std::vector<Vector>& rows);
Subspace span_of(const Vector& v);
/// Parses the one-line or multi-line text form.
Subspace parse_subspace(const Field& field, std::string_view text);

Subspace sum(const Subspace& x, const Subspace& y);

struct Intersection {
  int dim = 0;
  std::optional<Subspace> subspace;  // empty when dim == 0
};
/// X ∩ Y from the left kernel of the stacked bases.
Intersection intersect(const Subspace& x, const Subspace& y);

/// dim(X + Y) without building the sum.
int sum_dim(const Subspace& x, const Subspace& y);
inline int intersection_dim(const Subspace& x, const Subspace& y) {
  return x.dim() + y.dim() - sum_dim(x, y);
}

/// Orthogonal complement under the standard dot product. Throws when X is
/// the whole space (the zero subspace has no Subspace value).
Subspace orthocomplement(const Subspace& x);

bool contains(const Subspace& x, const Vector& v);
/// Y ⊆ X.
bool contains(const Subspace& x, const Subspace& y);

/// Entry-wise application of a field map to every basis entry, re-canonicalized.
template <typename Fn>
Subspace map_entries(const Subspace& x, Fn&& fn) {
  Matrix m(x.field(), x.dim(), x.ambient());
  for (int r = 0; r < x.dim(); ++r)
    for (int c = 0; c < x.ambient(); ++c) m.at(r, c) = fn(x.at(r, c));
  return canonicalize(m);
}

char digit_char(Elem e);
int digit_value(char c);

}  // namespace grasscode

template <>
struct std::hash<grasscode::Subspace> {
  std::size_t operator()(const grasscode::Subspace& s) const noexcept;
};
