#include "grasscode/field.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>

namespace grasscode {

namespace {

constexpr std::array<int, 12> kSupported = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27};

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

using Poly = std::vector<int>;  // coefficients, low degree first

int degree(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

int inv_mod(int a, int p) {
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  throw Error("no inverse");
}

// Remainder of a modulo b over GF(p); b must be nonzero.
Poly poly_mod(Poly a, const Poly& b, int p) {
  const int db = degree(b);
  const int lead_inv = inv_mod(b[db], p);
  for (int da = degree(a); da >= db; da = degree(a)) {
    const int factor = a[da] * lead_inv % p;
    for (int i = 0; i <= db; ++i) {
      int& c = a[da - db + i];
      c = ((c - factor * b[i]) % p + p) % p;
    }
  }
  return a;
}

bool is_irreducible(const Poly& modulus, int p) {
  const int e = degree(modulus);
  for (int d = 1; 2 * d <= e; ++d) {
    // all monic polynomials of degree d
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
      Poly divisor(d + 1, 0);
      int c = code;
      for (int i = 0; i < d; ++i) {
        divisor[i] = c % p;
        c /= p;
      }
      divisor[d] = 1;
      if (degree(poly_mod(modulus, divisor, p)) < 0) return false;
    }
  }
  return true;
}

}  // namespace

std::span<const int> supported_orders() { return kSupported; }

FieldSpec FieldSpec::for_order(int q) {
  switch (q) {
    case 2: case 3: case 5: case 7: case 11: case 13:
      return {q, 1, q, {}};
    case 4: return {2, 2, 4, {1, 1, 1}};      // x^2 + x + 1
    case 8: return {2, 3, 8, {1, 1, 0, 1}};   // x^3 + x + 1
    case 9: return {3, 2, 9, {1, 0, 1}};      // x^2 + 1
    case 16: return {2, 4, 16, {1, 1, 0, 0, 1}};  // x^4 + x + 1
    case 25: return {5, 2, 25, {1, 1, 1}};    // x^2 + x + 1
    case 27: return {3, 3, 27, {1, 2, 0, 1}};  // x^3 + 2x + 1
    default:
      throw Error("unsupported field order q=" + std::to_string(q));
  }
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  const int p = spec_.p;
  const int e = spec_.e;
  if (!is_prime(p)) throw Error("characteristic " + std::to_string(p) + " is not prime");
  if (e < 1 || e > 4) throw Error("extension degree must be in [1, 4]");
  int q = 1;
  for (int i = 0; i < e; ++i) q *= p;
  if (q != spec_.q) throw Error("q must equal p^e");
  if (q > 256) throw Error("field order too large");
  if (e > 1) {
    if (static_cast<int>(spec_.modulus.size()) != e + 1 || spec_.modulus[e] != 1)
      throw Error("modulus must be monic of degree e");
    for (int c : spec_.modulus)
      if (c < 0 || c >= p) throw Error("modulus coefficient out of range");
    if (!is_irreducible(spec_.modulus, p)) throw Error("modulus is reducible");
  }

  auto to_poly = [&](int index) {
    Poly a(e, 0);
    for (int i = 0; i < e; ++i) {
      a[i] = index % p;
      index /= p;
    }
    return a;
  };
  auto to_index = [&](const Poly& a) {
    int index = 0;
    for (int i = e - 1; i >= 0; --i) index = index * p + (i < static_cast<int>(a.size()) ? a[i] : 0);
    return index;
  };

  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    const Poly pa = to_poly(a);
    Poly na(e);
    for (int i = 0; i < e; ++i) na[i] = (p - pa[i]) % p;
    neg_[a] = static_cast<Elem>(to_index(na));
    for (int b = 0; b < q; ++b) {
      const Poly pb = to_poly(b);
      Poly sum(e);
      for (int i = 0; i < e; ++i) sum[i] = (pa[i] + pb[i]) % p;
      add_[a * q + b] = static_cast<Elem>(to_index(sum));

      Poly prod(2 * e - 1, 0);
      for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
      if (e > 1) prod = poly_mod(prod, spec_.modulus, p);
      mul_[a * q + b] = static_cast<Elem>(to_index(prod));
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) inv_[a] = static_cast<Elem>(b);

  frob_.resize(e * q);
  for (int a = 0; a < q; ++a) frob_[a] = static_cast<Elem>(a);
  for (int i = 1; i < e; ++i) {
    for (int a = 0; a < q; ++a) {
      // x^(p^i) = (x^(p^(i-1)))^p
      Elem base = frob_[(i - 1) * q + a];
      Elem r = 1;
      for (int j = 0; j < p; ++j) r = mul_[r * q + base];
      frob_[i * q + a] = r;
    }
  }
}

const Field& Field::get(int q) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<Field>> registry;
  std::lock_guard lock(mutex);
  auto& slot = registry[q];
  if (!slot) slot = std::make_unique<Field>(FieldSpec::for_order(q));
  return *slot;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error("no inverse");
  return inv_[a];
}

Elem Field::frobenius(Elem a, int power) const {
  power %= e();
  if (power < 0) power += e();
  return frob_[power * q() + a];
}

FieldElem Field::elem(int index) const {
  if (index < 0 || index >= q()) throw Error("element index out of range");
  return FieldElem(*this, static_cast<Elem>(index));
}

FieldElem Field::zero() const { return FieldElem(*this, 0); }
FieldElem Field::one() const { return FieldElem(*this, 1); }

std::vector<FieldAutomorphism> Field::automorphisms() const {
  std::vector<FieldAutomorphism> out;
  for (int i = 0; i < e(); ++i) out.emplace_back(*this, i);
  return out;
}

std::vector<int> Field::digits(Elem a) const {
  std::vector<int> d(e());
  int v = a;
  for (int i = 0; i < e(); ++i) {
    d[i] = v % p();
    v /= p();
  }
  return d;
}

FieldElem::FieldElem(const Field& field, Elem value) : field_(&field), value_(value) {
  if (value >= field.q()) throw Error("element index out of range");
}

namespace {
const Field& common_field(const FieldElem& a, const FieldElem& b) {
  if (&a.field() != &b.field() && a.field().spec() != b.field().spec())
    throw Error("field mismatch");
  return a.field();
}
}  // namespace

FieldElem FieldElem::inv() const { return FieldElem(*field_, field_->inv(value_)); }

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  const Field& f = common_field(a, b);
  return FieldElem(f, f.add(a.value_, b.value_));
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  const Field& f = common_field(a, b);
  return FieldElem(f, f.sub(a.value_, b.value_));
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  const Field& f = common_field(a, b);
  return FieldElem(f, f.mul(a.value_, b.value_));
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
  const Field& f = common_field(a, b);
  return FieldElem(f, f.div(a.value_, b.value_));
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  return a.field_->spec() == b.field_->spec() && a.value_ == b.value_;
}

FieldAutomorphism::FieldAutomorphism(const Field& field, int power) : field_(&field) {
  power_ = ((power % field.e()) + field.e()) % field.e();
}

FieldElem FieldAutomorphism::operator()(const FieldElem& a) const {
  if (&a.field() != field_) throw Error("field mismatch");
  return FieldElem(*field_, (*this)(a.index()));
}

FieldAutomorphism FieldAutomorphism::after(const FieldAutomorphism& other) const {
  if (other.field_ != field_) throw Error("field mismatch");
  return FieldAutomorphism(*field_, power_ + other.power_);
}

FieldAutomorphism FieldAutomorphism::inverse() const {
  return FieldAutomorphism(*field_, -power_);
}

}  // namespace grasscode
