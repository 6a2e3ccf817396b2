#include <doctest.h>

#include <set>

#include "grasscode/grassmannian.hpp"
#include "oracle.hpp"

using namespace grasscode;

TEST_CASE("gaussian numbers and binomials") {
  CHECK(gaussian_number(3, 2) == 7);
  CHECK(gaussian_number(0, 5) == 0);
  CHECK(gaussian_number(2, 3) == 4);
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(4, 2, 3) == 130);
  CHECK(gaussian_binomial(7, 0, 3) == 1);
  CHECK(gaussian_binomial(6, 3, 3) == 33880);
  CHECK(gaussian_binomial(9, 2, 2) == 43435);
  CHECK_THROWS_AS(gaussian_binomial(3, 4, 2), Error);
  CHECK_THROWS_AS(gaussian_binomial(64, 32, 27), Error);
  CHECK_THROWS_AS(ipow(27, 40), Error);
}

TEST_CASE("gaussian binomial matches brute-force subspace counts") {
  CHECK(oracle::all_subspaces(Field::get(2), 4, 2).size() == 35);
  CHECK(oracle::all_subspaces(Field::get(3), 4, 2).size() == 130);
  CHECK(oracle::all_subspaces(Field::get(2), 5, 2).size() == gaussian_binomial(5, 2, 2));
  CHECK(oracle::all_subspaces(Field::get(4), 3, 1).size() == gaussian_binomial(3, 1, 4));
}

TEST_CASE("enumeration order") {
  const auto v = enumerate_grassmannian(GrassmannianParams::make(2, 1, 2));
  REQUIRE(v.size() == 3);
  CHECK(v[0].to_string() == "10");
  CHECK(v[1].to_string() == "11");
  CHECK(v[2].to_string() == "01");

  const auto full = enumerate_grassmannian(GrassmannianParams::make(3, 3, 2));
  REQUIRE(full.size() == 1);
  CHECK(full[0].to_string() == "100,010,001");

  CHECK(pivot_sets_colex(4, 2) ==
        std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}});
  CHECK(free_cell_count(4, {0, 2}) == 3);
}

TEST_CASE("enumeration covers each subspace exactly once") {
  for (auto [q, n, k] : std::vector<std::array<int, 3>>{{2, 4, 2}, {3, 4, 2}, {2, 5, 3}, {4, 3, 2}}) {
    CAPTURE(q);
    CAPTURE(n);
    CAPTURE(k);
    const auto expected = oracle::all_subspaces(Field::get(q), n, k);
    std::set<oracle::SpanSet> seen;
    for (const auto& x : enumerate_grassmannian(GrassmannianParams::make(n, k, q)))
      REQUIRE(seen.insert(oracle::span_of(x)).second);
    CHECK(seen == expected);
  }
}

TEST_CASE("rank and unrank are inverse and follow enumeration order") {
  for (auto [q, n, k] : std::vector<std::array<int, 3>>{{2, 4, 2}, {3, 5, 2}, {2, 6, 3}, {9, 3, 1}}) {
    const auto params = GrassmannianParams::make(n, k, q);
    GrassmannianIndex index(n, k, Field::get(q));
    CHECK(index.size() == gaussian_binomial(n, k, q));
    std::uint64_t pos = 0;
    for_each_subspace(params, [&](const Subspace& x) {
      REQUIRE(index.rank(x) == pos);
      REQUIRE(index.unrank(pos) == x);
      ++pos;
    });
    CHECK(pos == index.size());
  }
  GrassmannianIndex index(4, 2, Field::get(2));
  CHECK_THROWS_AS(index.unrank(35), Error);
}

TEST_CASE("vertex budget") {
  const auto params = GrassmannianParams::make(6, 3, 3, 1000);
  try {
    params.require_budget();
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.required() == 33880);
    CHECK(e.budget() == 1000);
    CHECK(std::string(e.what()).find("33880") != std::string::npos);
  }
  CHECK_THROWS_AS(enumerate_grassmannian(params), BudgetExceeded);
  CHECK_THROWS_AS(GrassmannianParams::make(4, 5, 2), Error);
  CHECK_THROWS_AS(GrassmannianParams::make(4, 0, 2), Error);
  CHECK_THROWS_AS(GrassmannianParams::make(65, 2, 2), Error);
  CHECK_THROWS_AS(GrassmannianParams::make(4, 2, 6), Error);
  CHECK_THROWS_AS(GrassmannianParams::make(4, 2, 2, 0), Error);
}

TEST_CASE("adjacency and Grassmann distance") {
  const Field& f = Field::get(2);
  const Subspace e12 = canonicalize(Matrix(f, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
  const Subspace e13 = canonicalize(Matrix(f, {{1, 0, 0, 0}, {0, 0, 1, 0}}));
  const Subspace e34 = canonicalize(Matrix(f, {{0, 0, 1, 0}, {0, 0, 0, 1}}));
  CHECK_FALSE(is_adjacent(e12, e12));
  CHECK(is_adjacent(e12, e13));
  CHECK_FALSE(is_adjacent(e12, e34));
  CHECK(grassmann_distance(e12, e12) == 0);
  CHECK(grassmann_distance(e12, e13) == 1);
  CHECK(grassmann_distance(e12, e34) == 2);
  CHECK_THROWS_AS(is_adjacent(e12, span_of(Vector::unit(f, 4, 0))), Error);
  CHECK_THROWS_AS(grassmann_distance(e12, span_of(Vector::unit(f, 4, 0))), Error);

  // adjacency against the oracle on G_2(F_3^4)
  const auto all = enumerate_grassmannian(GrassmannianParams::make(4, 2, 3));
  std::vector<oracle::SpanSet> spans;
  for (const auto& x : all) spans.push_back(oracle::span_of(x));
  for (std::size_t i = 0; i < all.size(); i += 7)
    for (std::size_t j = 0; j < all.size(); ++j) {
      REQUIRE(is_adjacent(all[i], all[j]) == oracle::adjacent(spans[i], spans[j], 3));
      REQUIRE(grassmann_distance(all[i], all[j]) == 2 - oracle::dim_of(oracle::meet(spans[i], spans[j]), 3));
    }
}

TEST_CASE("superspaces and subspaces of a fixed space") {
  const auto params = GrassmannianParams::make(5, 2, 3);
  for_each_subspace(params, [&](const Subspace& x) {
    std::set<Subspace> up;
    for_each_superspace(x, 3, [&](const Subspace& y) {
      REQUIRE(contains(y, x));
      up.insert(y);
    });
    REQUIRE(up.size() == gaussian_binomial(3, 1, 3));
    std::set<Subspace> down;
    for_each_subspace_of(x, 1, [&](const Subspace& z) {
      REQUIRE(contains(x, z));
      down.insert(z);
    });
    REQUIRE(down.size() == gaussian_number(2, 3));
  });
  const Subspace y = canonicalize(Matrix(Field::get(2), {{1, 0, 0, 0, 1}, {0, 1, 0, 1, 0}, {0, 0, 1, 1, 1}}));
  std::uint64_t count = 0;
  for_each_subspace_of(y, 2, [&](const Subspace& z) {
    CHECK(contains(y, z));
    ++count;
  });
  CHECK(count == 7);
}
