#include <doctest.h>

#include <set>

#include "grasscode/field.hpp"

using namespace grasscode;

namespace {

// Polynomial product mod the field's modulus, coefficients low degree first.
int poly_mul_index(const FieldSpec& s, int a, int b) {
  std::vector<int> pa(s.e), pb(s.e), prod(2 * s.e, 0);
  for (int i = 0; i < s.e; ++i, a /= s.p, b /= s.p) {
    pa[i] = a % s.p;
    pb[i] = b % s.p;
  }
  for (int i = 0; i < s.e; ++i)
    for (int j = 0; j < s.e; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % s.p;
  for (int d = 2 * s.e - 1; d >= s.e; --d) {
    const int c = prod[d];
    if (!c) continue;
    for (int i = 0; i <= s.e; ++i) prod[d - s.e + i] = ((prod[d - s.e + i] - c * s.modulus[i]) % s.p + s.p) % s.p;
  }
  int idx = 0;
  for (int i = s.e - 1; i >= 0; --i) idx = idx * s.p + prod[i];
  return idx;
}

}  // namespace

TEST_CASE("small prime field arithmetic") {
  const Field& f2 = Field::get(2);
  const Field& f3 = Field::get(3);
  const Field& f5 = Field::get(5);
  CHECK(f2.add(1, 1) == 0);
  CHECK(f3.add(2, 2) == 1);
  CHECK(f2.mul(1, 1) == 1);
  CHECK(f5.mul(3, 4) == 2);
  CHECK(f2.inv(1) == 1);
  CHECK(f3.inv(2) == 2);
  CHECK(f5.sub(1, 3) == 3);
  CHECK(f5.neg(2) == 3);
}

TEST_CASE("GF(4) with modulus x^2+x+1") {
  const Field& f = Field::get(4);
  CHECK(f.elem(2) + f.elem(3) == f.elem(1));
  CHECK(f.elem(2) * f.elem(2) == f.elem(3));
  CHECK(f.elem(2).inv() == f.elem(3));
  CHECK(f.digits(3) == std::vector<int>{1, 1});
}

TEST_CASE("extension field tables agree with polynomial multiplication") {
  for (int q : supported_orders()) {
    const Field& f = Field::get(q);
    if (f.e() == 1) continue;
    CAPTURE(q);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) REQUIRE(f.mul(a, b) == poly_mul_index(f.spec(), a, b));
  }
  // x^3 = x + 1 in GF(8); x^2 = -1 in GF(9); x^3 = x + 2 in GF(27)
  CHECK(Field::get(8).mul(2, 4) == 3);
  CHECK(Field::get(9).mul(3, 3) == 2);
  CHECK(Field::get(27).mul(3, 9) == 5);
}

TEST_CASE("field axioms hold exhaustively") {
  for (int q : supported_orders()) {
    const Field& f = Field::get(q);
    CAPTURE(q);
    for (int a = 0; a < q; ++a) {
      REQUIRE(f.add(a, 0) == a);
      REQUIRE(f.mul(a, 1) == a);
      REQUIRE(f.add(a, f.neg(a)) == 0);
      if (a) REQUIRE(f.mul(a, f.inv(a)) == 1);
      for (int b = 0; b < q; ++b) {
        REQUIRE(f.add(a, b) == f.add(b, a));
        REQUIRE(f.mul(a, b) == f.mul(b, a));
        REQUIRE(f.sub(f.add(a, b), b) == a);
        if (b) REQUIRE(f.mul(f.div(a, b), b) == a);
        for (int c = 0; c < q; ++c) {
          REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("multiplicative group is cyclic") {
  for (int q : supported_orders()) {
    const Field& f = Field::get(q);
    bool found = false;
    for (int g = 1; g < q && !found; ++g) {
      std::set<int> powers;
      Elem x = 1;
      for (int i = 0; i < q - 1; ++i, x = f.mul(x, g)) powers.insert(x);
      found = static_cast<int>(powers.size()) == q - 1;
    }
    CHECK_MESSAGE(found, "q=" << q);
  }
}

TEST_CASE("Frobenius automorphisms") {
  CHECK(Field::get(2).automorphisms().size() == 1);
  CHECK(Field::get(3).automorphisms().size() == 1);
  const auto autos4 = Field::get(4).automorphisms();
  REQUIRE(autos4.size() == 2);
  CHECK(autos4[0].is_identity());
  CHECK(autos4[1](Elem{2}) == 3);  // x -> x^2 = x + 1

  for (int q : supported_orders()) {
    const Field& f = Field::get(q);
    const auto autos = f.automorphisms();
    REQUIRE(static_cast<int>(autos.size()) == f.e());
    for (const auto& s : autos) {
      std::set<int> image;
      for (int a = 0; a < q; ++a) {
        image.insert(s(static_cast<Elem>(a)));
        for (int b = 0; b < q; ++b) {
          REQUIRE(s(f.add(a, b)) == f.add(s(a), s(b)));
          REQUIRE(s(f.mul(a, b)) == f.mul(s(a), s(b)));
        }
      }
      REQUIRE(static_cast<int>(image.size()) == q);
      for (int a = 0; a < q; ++a) REQUIRE(s.inverse()(s(static_cast<Elem>(a))) == a);
      for (const auto& t : autos)
        for (int a = 0; a < q; ++a) REQUIRE(s.after(t)(static_cast<Elem>(a)) == s(t(static_cast<Elem>(a))));
    }
  }
}

TEST_CASE("field errors") {
  CHECK_THROWS_WITH_AS(Field::get(4).inv(0), "no inverse", Error);
  CHECK_THROWS_AS(Field::get(6), Error);
  CHECK_THROWS_AS(Field::get(32), Error);
  CHECK_THROWS_AS(Field::get(2).elem(1) + Field::get(3).elem(1), Error);
  // x^2 + 1 = (x + 1)^2 over GF(2)
  CHECK_THROWS_AS(Field(FieldSpec{2, 2, 4, {1, 0, 1}}), Error);
  CHECK_THROWS_AS(Field(FieldSpec{4, 1, 4, {}}), Error);
  CHECK_THROWS_AS(Field(FieldSpec{2, 2, 8, {1, 1, 1}}), Error);
}

TEST_CASE("custom modulus builds an isomorphic field") {
  // x^2 + 2x + 2 is irreducible over GF(3)
  const Field f(FieldSpec{3, 2, 9, {2, 2, 1}});
  for (int a = 1; a < 9; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
}
