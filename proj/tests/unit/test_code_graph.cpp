#include <doctest.h>

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

#include "grasscode/code_graph.hpp"
#include "oracle.hpp"

using namespace grasscode;

namespace {

const Field& F2 = Field::get(2);

Subspace sp(const Field& f, std::vector<std::vector<int>> rows) { return canonicalize(Matrix(f, rows)); }

// Edge set by a pairwise scan of the span oracle.
std::set<std::pair<VertexId, VertexId>> oracle_edges(const Graph& g) {
  const int q = g.params().q();
  std::vector<oracle::SpanSet> spans;
  for (const auto& v : g.vertices()) spans.push_back(oracle::span_of(v));
  std::set<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    for (VertexId v = u + 1; v < g.vertex_count(); ++v)
      if (oracle::adjacent(spans[u], spans[v], q)) out.emplace(u, v);
  return out;
}

std::set<std::pair<VertexId, VertexId>> edge_set(const Graph& g) {
  const auto e = g.edges();
  return {e.begin(), e.end()};
}

}  // namespace

TEST_CASE("non-degeneracy and coordinate profile") {
  CHECK(is_nondegenerate(span_of(Vector(F2, {1, 1, 1, 1}))));
  CHECK_FALSE(is_nondegenerate(sp(F2, {{1, 0, 0, 0}, {0, 1, 0, 0}})));

  auto p = coordinate_profile(span_of(Vector(F2, {1, 1, 1, 1, 1})));
  CHECK(p.c == 0);
  CHECK(p.weight == 5);
  p = coordinate_profile(span_of(Vector::unit(F2, 4, 0)));
  CHECK(p.c == 3);
  CHECK(p.weight == 1);
  p = coordinate_profile(span_of(Vector(F2, {0, 0, 1, 1, 1})));
  CHECK(p.c == 2);
  CHECK(p.weight == 3);
  CHECK(p.support == std::vector<int>{2, 3, 4});
  CHECK_FALSE(coordinate_profile(sp(F2, {{1, 0, 0}, {0, 1, 0}})).weight);

  CHECK(coordinate_hyperplane(F2, 3, 1) == sp(F2, {{1, 0, 0}, {0, 0, 1}}));
  CHECK(unit_column_count(sp(F2, {{1, 0, 1, 1}, {0, 1, 0, 1}})) == 3);
}

TEST_CASE("n(Y)") {
  CHECK(n_count(sp(F2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
  CHECK(n_count(sp(Field::get(3), {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})) == 4);
  // coordinates 1 and 2 agree on Y, so Y ∩ C_1 = Y ∩ C_2
  const Subspace y = sp(F2, {{1, 1, 1, 0}, {0, 0, 1, 1}});
  CHECK(is_nondegenerate(y));
  CHECK(n_count(y) == 3);
  CHECK_THROWS_AS(n_count(sp(F2, {{1, 0, 0}, {0, 1, 0}})), Error);
  CHECK_THROWS_AS(n_count(span_of(Vector(F2, {1, 1, 1}))), Error);
}

TEST_CASE("count_codes") {
  CHECK(count_codes(4, 2, 2) == 35 - 4 * 7 + 6 * 1);
  CHECK(count_codes(4, 2, 2) == 13);
  for (int n = 1; n <= 6; ++n) CHECK(count_codes(n, n, 3) == 1);
  for (int n = 4; n <= 6; ++n) CHECK(count_codes(n, 1, 2) == 1);
  CHECK(count_codes(5, 2, 2) == 40);
  CHECK(count_codes(8, 2, 2) == 1093);
  CHECK(count_codes(9, 2, 2) == 3280);
  CHECK(count_codes(5, 2, 3) == 680);
  CHECK(count_codes(6, 3, 3) == 27200);
  for (int q : {2, 3, 4})
    for (int n = 1; n <= 5; ++n)
      for (int k = 1; k <= n; ++k) {
        std::int64_t filtered = 0;
        for (const auto& s : oracle::all_subspaces(Field::get(q), n, k)) filtered += oracle::nondegenerate(s, n, q);
        REQUIRE(count_codes(n, k, q) == filtered);
      }
  CHECK_THROWS_AS(count_codes(3, 4, 2), Error);
}

TEST_CASE("graph variants") {
  const auto params = GrassmannianParams::make(4, 2, 2);
  const Graph full = build_graph(params, Variant::full);
  CHECK(full.vertex_count() == 35);
  for (VertexId v = 0; v < full.vertex_count(); ++v) CHECK(full.degree(v) == 18);
  CHECK(full.edge_count() == 35 * 18 / 2);

  const Graph nondeg = build_graph(params, Variant::nondeg);
  CHECK(nondeg.vertex_count() == 13);
  for (const auto& v : nondeg.vertices()) CHECK(is_nondegenerate(v));

  const Graph dual = build_graph(params, Variant::dual_nondeg);
  CHECK(dual.vertex_count() == 13);
  CHECK(dual.edge_count() == nondeg.edge_count());
  for (VertexId u = 0; u < nondeg.vertex_count(); ++u) {
    const auto pu = dual.index_of(orthocomplement(nondeg.vertex(u)));
    REQUIRE(pu);
    for (VertexId v : nondeg.neighbors(u)) CHECK(dual.has_edge(*pu, *dual.index_of(orthocomplement(nondeg.vertex(v)))));
  }

  CHECK_THROWS_AS(build_graph(GrassmannianParams::make(5, 2, 2), Variant::dual_nondeg), Error);
  CHECK_THROWS_AS(build_graph(params, Variant::custom), Error);
  CHECK(parse_variant("dual-nondeg") == Variant::dual_nondeg);
  CHECK(to_string(Variant::dual_nondeg) == "dual-nondeg");
  CHECK_THROWS_AS(parse_variant("sparse"), Error);
}

TEST_CASE("edges agree with an oracle pair scan (pairwise and star builders)") {
  for (auto [q, n, k] : std::vector<std::array<int, 3>>{{2, 4, 2}, {2, 5, 2}, {3, 4, 2}, {2, 5, 3}, {2, 4, 1}}) {
    CAPTURE(q);
    CAPTURE(n);
    CAPTURE(k);
    const auto params = GrassmannianParams::make(n, k, q);
    for (Variant v : {Variant::full, Variant::nondeg}) {
      const Graph g = build_graph(params, v);
      REQUIRE(edge_set(g) == oracle_edges(g));
    }
  }
}

TEST_CASE("graph invariants and lookups") {
  const Graph g = build_graph(GrassmannianParams::make(5, 2, 2), Variant::nondeg);
  CHECK(g.vertex_count() == 40);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    CHECK(g.index_of(g.vertex(v)) == v);
    CHECK(std::is_sorted(g.neighbors(v).begin(), g.neighbors(v).end()));
  }
  CHECK_FALSE(g.index_of(sp(F2, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}})));
  CHECK_FALSE(g.index_of(span_of(Vector(F2, {1, 1, 1, 1, 1}))));
  // vertex order follows the canonical enumeration
  for (VertexId v = 1; v < g.vertex_count(); ++v) {
    GrassmannianIndex index(5, 2, F2);
    CHECK(index.rank(g.vertex(v - 1)) < index.rank(g.vertex(v)));
  }
}

TEST_CASE("Graph constructor validation") {
  const auto params = GrassmannianParams::make(3, 1, 2);
  const auto vs = enumerate_grassmannian(params);
  std::vector<std::vector<VertexId>> adj(vs.size());
  adj[0] = {1};
  CHECK_THROWS_AS(Graph(params, Variant::custom, vs, adj), Error);  // asymmetric
  adj[1] = {0, 0};
  CHECK_THROWS_AS(Graph(params, Variant::custom, vs, adj), Error);  // duplicate
  adj.assign(vs.size(), {});
  adj[2] = {2};
  CHECK_THROWS_AS(Graph(params, Variant::custom, vs, adj), Error);  // loop
  adj.assign(vs.size(), {});
  auto dup = vs;
  dup[1] = dup[0];
  CHECK_THROWS_AS(Graph(params, Variant::custom, dup, adj), Error);
}

TEST_CASE("connectivity") {
  CHECK(connectivity(build_graph(GrassmannianParams::make(4, 2, 2), Variant::nondeg)) == 1);
  CHECK(connectivity(build_graph(GrassmannianParams::make(4, 2, 2), Variant::full)) == 1);
  const Graph single = build_graph(GrassmannianParams::make(3, 3, 2), Variant::nondeg);
  CHECK(single.vertex_count() == 1);
  CHECK(connectivity(single) == 1);
  const auto params = GrassmannianParams::make(3, 1, 2);
  const Graph empty_edges(params, Variant::custom, enumerate_grassmannian(params),
                          std::vector<std::vector<VertexId>>(7));
  CHECK(connectivity(empty_edges) == 7);
}

TEST_CASE("monomial orbit representatives match a brute-force orbit count") {
  // q = 2: the monomial group is S_n acting on coordinates
  const Graph g = build_graph(GrassmannianParams::make(5, 2, 2), Variant::nondeg);
  std::vector<int> perm(5);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<Subspace> reps_oracle;
  for (const auto& v : g.vertices()) {
    Subspace best = v;
    std::vector<int> p = perm;
    do {
      Matrix m(F2, 2, 5);
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 5; ++c) m.at(r, p[c]) = v.at(r, c);
      best = std::min(best, canonicalize(m));
    } while (std::next_permutation(p.begin(), p.end()));
    reps_oracle.insert(best);
  }
  const auto reps = monomial_orbit_representatives(g);
  CHECK(reps.size() == reps_oracle.size());
  CHECK(reps.front() == 0);
  CHECK(std::is_sorted(reps.begin(), reps.end()));

  const Graph custom = build_induced_graph(GrassmannianParams::make(5, 2, 2), g.vertices());
  CHECK_THROWS_AS(monomial_orbit_representatives(custom), Error);
}

TEST_CASE("distance coincidence below the threshold") {
  const Graph g = build_graph(GrassmannianParams::make(5, 2, 2), Variant::nondeg);
  DistanceOptions plain;
  plain.guided_order = false;
  const auto full = distance_coincidence(g, plain);
  CHECK(full.coincides);
  CHECK_FALSE(full.witness);
  CHECK(full.sources_scanned == 40);
  CHECK(full.pairs_checked == 40 * 39);

  DistanceOptions reduced;
  reduced.orbit_reduction = true;
  const auto r = distance_coincidence(g, reduced);
  CHECK(r.coincides);
  CHECK(r.source_count < 40);

  DistanceOptions par = plain;
  par.jobs = 3;
  const auto rp = distance_coincidence(g, par);
  CHECK(rp.pairs_checked == full.pairs_checked);
  CHECK(rp.sources_scanned == full.sources_scanned);
}

TEST_CASE("distance witness at n = 9") {
  const auto params = GrassmannianParams::make(9, 2, 2);
  const Graph g = build_graph(params, Variant::nondeg);
  CHECK(g.vertex_count() == 3280);
  DistanceOptions opts;
  opts.orbit_reduction = true;
  const auto r1 = distance_coincidence(g, opts);
  REQUIRE(r1.witness);
  CHECK_FALSE(r1.coincides);
  const auto& w = *r1.witness;
  CHECK(w.path_distance > w.grassmann_distance);

  // independent check: no common non-degenerate neighbour exists
  const auto sx = oracle::span_of(g.vertex(w.source));
  const auto sy = oracle::span_of(g.vertex(w.target));
  CHECK(oracle::dim_of(oracle::meet(sx, sy), 2) == 0);
  bool common = false;
  for (VertexId z = 0; z < g.vertex_count(); ++z)
    common = common || (is_adjacent(g.vertex(z), g.vertex(w.source)) && is_adjacent(g.vertex(z), g.vertex(w.target)));
  CHECK_FALSE(common);

  opts.jobs = 2;
  const auto r2 = distance_coincidence(g, opts);
  REQUIRE(r2.witness);
  CHECK(r2.witness->source == w.source);
  CHECK(r2.witness->target == w.target);
  CHECK(r2.sources_scanned == r1.sources_scanned);
  CHECK(r2.pairs_checked == r1.pairs_checked);
}
