#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>

#include "grasscode/cliques.hpp"
#include "oracle.hpp"

using namespace grasscode;

namespace {

const Field& F2 = Field::get(2);
const Field& F3 = Field::get(3);

Subspace sp(const Field& f, std::vector<std::vector<int>> rows) { return canonicalize(Matrix(f, rows)); }

}  // namespace

TEST_CASE("star, top and line sizes") {
  const Subspace x = span_of(Vector(F2, {1, 0, 1, 0, 0}));
  const Subspace y = sp(F2, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}});
  CHECK(star(x).members.size() == 15);
  CHECK(top(y).members.size() == 7);
  const Subspace xl = span_of(Vector(F2, {1, 0, 0, 0, 0}));
  const auto l = line(xl, y);
  CHECK(l.members.size() == 3);
  for (const auto& m : l.members) {
    CHECK(contains(m, xl));
    CHECK(contains(y, m));
  }
  CHECK(line(span_of(Vector(F3, {1, 0, 0, 0})), sp(F3, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}})).members.size() == 4);

  CHECK_THROWS_AS(line(span_of(Vector(F2, {0, 0, 0, 1, 1})), y), Error);  // X ⊄ Y
  CHECK_THROWS_AS(line(xl, sp(F2, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}})), Error);
  CHECK_THROWS_AS(top(xl), Error);
  CHECK_THROWS_AS(star(sp(F2, {{1, 0}, {0, 1}})), Error);

  const auto s = star(x);
  CHECK(std::is_sorted(s.members.begin(), s.members.end()));
  CHECK(s.kind == CliqueKind::star);
  CHECK(to_string(CliqueKind::top_restricted) == "top-restricted");
}

TEST_CASE("restricted star formula") {
  // c(X) = 1 at q = 2, n = 5, k = 2
  const Subspace x2 = span_of(Vector(F2, {1, 1, 1, 1, 0}));
  CHECK(coordinate_profile(x2).c == 1);
  CHECK(star_restricted_size_formula(x2) == 8);
  CHECK(star_restricted(x2).members.size() == 8);

  const Subspace x3 = span_of(Vector(F3, {1, 2, 1, 1, 0}));
  CHECK(star_restricted_size_formula(x3) == 27);
  CHECK(star_restricted(x3).members.size() == 27);

  // c(X) = n-k+1 leaves one member at q = 2
  const Subspace x1 = span_of(Vector::unit(F2, 5, 0));
  CHECK(star_restricted_size_formula(x1) == 1);
  CHECK(star_restricted(x1).members.size() == 1);

  CHECK_THROWS_WITH_AS(star_restricted_size_formula(span_of(Vector(F2, {1, 1, 1, 1, 1}))),
                       "formula inapplicable; use [n-k+1]_q", Error);
}

TEST_CASE("restricted top size is [k+1]_q - n(Y) by direct filtering") {
  for (int q : {2, 3}) {
    for_each_subspace(GrassmannianParams::make(5, 3, q), [&](const Subspace& y) {
      if (!is_nondegenerate(y)) return;
      std::uint64_t direct = 0;
      for_each_subspace_of(y, 2, [&](const Subspace& z) { direct += oracle::nondegenerate(oracle::span_of(z), 5, q); });
      REQUIRE(direct == gaussian_number(3, q) - n_count(y));
      REQUIRE(top_restricted(y).members.size() == direct);
    });
  }
}

TEST_CASE("maximal clique tests") {
  const auto params = GrassmannianParams::make(4, 2, 2);
  const Graph full = build_graph(params, Variant::full);
  for_each_subspace(GrassmannianParams::make(4, 1, 2), [&](const Subspace& x) {
    CHECK(is_maximal_clique(star(x).members, full));
  });
  for_each_subspace(GrassmannianParams::make(4, 3, 2), [&](const Subspace& y) {
    CHECK(is_maximal_clique(top(y).members, full));
  });
  const VertexId a = 0;
  const VertexId b = full.neighbors(0).front();
  CHECK_FALSE(is_maximal_clique(std::vector<VertexId>{a, b}, full));
  CHECK_FALSE(is_maximal_clique(std::vector<VertexId>{}, full));
  VertexId far = 0;
  while (far == a || full.has_edge(a, far)) ++far;
  CHECK_THROWS_AS(is_maximal_clique(std::vector<VertexId>{a, far}, full), Error);
  CHECK_THROWS_AS(is_maximal_clique(std::vector<Subspace>{sp(F2, {{1, 0, 0}, {0, 1, 0}})}, full), Error);

  // q = 2, c(X) = n-k: two members, not maximal
  const Graph nondeg = build_graph(params, Variant::nondeg);
  const Subspace x = span_of(Vector(F2, {1, 1, 0, 0}));
  CHECK(coordinate_profile(x).c == 2);
  const auto members = member_ids(star(x), nondeg);
  CHECK(members.size() == 2);
  CHECK_FALSE(is_maximal_clique(members, nondeg));
}

TEST_CASE("size formula suite") {
  for (auto [q, n, k] : std::vector<std::array<int, 3>>{{2, 4, 2}, {2, 5, 3}, {3, 5, 2}}) {
    const auto rep = check_size_formulas(GrassmannianParams::make(n, k, q));
    CHECK(rep.pass());
    CHECK(rep.stars_checked == gaussian_binomial(n, k - 1, q));
    CHECK(rep.tops_checked == gaussian_binomial(n, k + 1, q));
    CHECK(rep.restricted_tops_checked == static_cast<std::uint64_t>(count_codes(n, k + 1, q)));
  }
  CHECK_THROWS_AS(check_size_formulas(GrassmannianParams::make(4, 1, 2)), Error);
  CHECK_THROWS_AS(check_size_formulas(GrassmannianParams::make(4, 3, 2)), Error);
}

TEST_CASE("restricted stars: maximality") {
  const auto r3 = check_prop_star(GrassmannianParams::make(5, 2, 3));
  CHECK(r3.pass());
  CHECK(r3.maximal == r3.anchors);

  const auto r2 = check_prop_star(GrassmannianParams::make(5, 2, 2));
  CHECK(r2.pass());
  for (const auto& [c, counts] : r2.by_c) {
    CAPTURE(c);
    // maximal exactly when c(X) <= n-k-1 = 2
    if (c <= 2) CHECK(counts.second == 0);
    else CHECK(counts.first == 0);
  }

  const auto r4 = check_prop_star(GrassmannianParams::make(4, 2, 2));
  CHECK(r4.pass());
  CHECK(r4.two_element_stars > 0);
  CHECK(r4.one_element_stars > 0);
}

TEST_CASE("restricted tops: maximality") {
  const auto good = check_prop_top(GrassmannianParams::make(5, 3, 2));
  CHECK(good.inequality);
  CHECK(good.all_maximal);
  CHECK(good.pass());

  const auto bad = check_prop_top(GrassmannianParams::make(6, 2, 2));
  CHECK_FALSE(bad.inequality);
  CHECK_FALSE(bad.all_maximal);
  REQUIRE(bad.defect);
  CHECK(bad.pass());
  const Graph g = build_graph(GrassmannianParams::make(6, 2, 2), Variant::nondeg);
  const auto members = member_ids(top_restricted(bad.defect->y), g);
  CHECK(members.size() == bad.defect->size);
  if (!bad.defect->empty) {
    REQUIRE(bad.defect->containing_star);
    const auto star_members = member_ids(star_restricted(*bad.defect->containing_star), g);
    CHECK(star_members.size() > members.size());
    CHECK(std::includes(star_members.begin(), star_members.end(), members.begin(), members.end()));
  }
}

TEST_CASE("maximal clique census") {
  const Graph g = build_graph(GrassmannianParams::make(4, 2, 2), Variant::nondeg);
  const auto rep = maximal_clique_census(g);
  CHECK(rep.pass());
  CHECK(rep.maximal_cliques == rep.matched_star + rep.matched_top);

  // Bron–Kerbosch against brute force over all vertex subsets of Γ(4,2)_2
  std::set<std::vector<VertexId>> bk;
  for_each_maximal_clique(g, [&](const std::vector<VertexId>& c) { bk.insert(c); });
  std::set<std::vector<VertexId>> brute;
  const std::size_t n = g.vertex_count();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<VertexId> s;
    for (VertexId v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(v);
    bool clique = true;
    for (std::size_t i = 0; i < s.size() && clique; ++i)
      for (std::size_t j = i + 1; j < s.size() && clique; ++j) clique = g.has_edge(s[i], s[j]);
    if (!clique) continue;
    bool maximal = true;
    for (VertexId v = 0; v < n && maximal; ++v) {
      if (mask >> v & 1) continue;
      bool all = true;
      for (VertexId u : s) all = all && g.has_edge(u, v);
      maximal = !all;
    }
    if (maximal) brute.insert(s);
  }
  CHECK(bk == brute);

  CHECK_THROWS_AS(maximal_clique_census(g, 10), BudgetExceeded);
}
