#pragma once

// Exact arithmetic in GF(q), q = p^e, backed by precomputed tables.
//
// Elements are stored as an index in [0, q) whose base-p digits are the
// coefficients of the residue polynomial (digit i = coefficient of x^i).
// Index 0 is the additive identity and index 1 the multiplicative one.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace grasscode {

/// Raw field element index, interpreted against a Field.
using Elem = std::uint8_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FieldSpec {
  int p = 2;
  int e = 1;
  int q = 2;
  /// Coefficients c_0..c_e of a monic degree-e polynomial over GF(p).
  /// Empty (and ignored) when e == 1.
  std::vector<int> modulus;

  /// The fixed construction data for a supported order.
  static FieldSpec for_order(int q);

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Orders with a built-in modulus table.
std::span<const int> supported_orders();

class FieldElem;
class FieldAutomorphism;

class Field {
 public:
  /// Builds the tables for an arbitrary spec. Throws grasscode::Error when
  /// p is not prime, q != p^e, e > 4, or the modulus is reducible.
  explicit Field(FieldSpec spec);

  /// Shared instance for a supported order; lives for the whole program.
  static const Field& get(int q);

  const FieldSpec& spec() const { return spec_; }
  int p() const { return spec_.p; }
  int e() const { return spec_.e; }
  int q() const { return spec_.q; }

  Elem add(Elem a, Elem b) const { return add_[a * q() + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q() + neg_[b]]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q() + b]; }
  /// Throws grasscode::Error("no inverse") for a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  /// a^(p^power), power taken modulo e.
  Elem frobenius(Elem a, int power) const;

  FieldElem elem(int index) const;
  FieldElem zero() const;
  FieldElem one() const;

  /// The e Frobenius powers x -> x^(p^i), i = 0..e-1, identity first.
  std::vector<FieldAutomorphism> automorphisms() const;

  /// Base-p digit vector (c_0..c_{e-1}) of an element.
  std::vector<int> digits(Elem a) const;

 private:
  FieldSpec spec_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
  std::vector<Elem> frob_;  // e rows of q entries
};

/// Element bound to its field. Arithmetic across different fields throws.
class FieldElem {
 public:
  FieldElem(const Field& field, Elem value);

  const Field& field() const { return *field_; }
  Elem index() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  FieldElem inv() const;

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  friend bool operator==(const FieldElem& a, const FieldElem& b);

 private:
  const Field* field_;
  Elem value_;
};

/// Frobenius power x -> x^(p^power).
class FieldAutomorphism {
 public:
  FieldAutomorphism(const Field& field, int power);

  const Field& field() const { return *field_; }
  int power() const { return power_; }
  bool is_identity() const { return power_ == 0; }

  Elem operator()(Elem a) const { return field_->frobenius(a, power_); }
  FieldElem operator()(const FieldElem& a) const;

  /// (this o other)(x) = this(other(x)).
  FieldAutomorphism after(const FieldAutomorphism& other) const;
  FieldAutomorphism inverse() const;

  friend bool operator==(const FieldAutomorphism& a, const FieldAutomorphism& b) {
    return a.field_ == b.field_ && a.power_ == b.power_;
  }

 private:
  const Field* field_;
  int power_;
};

}  // namespace grasscode
