#include "grasscode/suites.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <random>

#include "grasscode/cliques.hpp"
#include "grasscode/code_graph.hpp"
#include "grasscode/parallel.hpp"

namespace grasscode {

namespace {

const char* status(bool pass) { return pass ? "pass" : "fail"; }

Json params_json(const GridPoint& p) { return Json{{"q", p.q}, {"n", p.n}, {"k", p.k}}; }

Json make_case(const GridPoint& p, std::string assertion, bool pass, Json counterexamples, Json stats) {
  Json c;
  c["params"] = params_json(p);
  c["assertion"] = std::move(assertion);
  c["status"] = status(pass);
  c["counterexamples"] = counterexamples.is_null() ? Json::array() : std::move(counterexamples);
  c["stats"] = std::move(stats);
  return c;
}

GrassmannianParams params_of(const GridPoint& p, const SuiteConfig& cfg) {
  return GrassmannianParams::make(p.n, p.k, p.q, cfg.vertex_budget);
}

Json violations_json(const std::vector<CliqueViolation>& vs) {
  Json out = Json::array();
  for (const auto& v : vs)
    out.push_back(Json{{"assertion", v.assertion}, {"anchor", v.anchor.to_string()}, {"detail", v.detail}});
  return out;
}

const char* regime(const GridPoint& p) {
  return (p.k == 1 || p.k == p.n - 1) ? "complete-graph" : "general";
}

std::mt19937_64 point_rng(std::uint64_t seed, const GridPoint& p) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(p.q), static_cast<std::uint32_t>(p.n),
                    static_cast<std::uint32_t>(p.k)};
  return std::mt19937_64(seq);
}

struct CaseResult {
  Json json;
  bool pass = false;
  bool budget_exceeded = false;
};

// ---------------------------------------------------------------- cases

CaseResult run_counts(const GridPoint& p, bool with_nondeg) {
  // streaming only, nothing is materialized
  GrassmannianParams params{p.n, p.k, &Field::get(p.q), std::numeric_limits<std::uint64_t>::max()};
  params.validate();
  std::uint64_t all = 0, nondeg = 0;
  for_each_subspace(params, [&](const Subspace& x) {
    ++all;
    if (with_nondeg) nondeg += is_nondegenerate(x);
  });
  const std::uint64_t expect = gaussian_binomial(p.n, p.k, p.q);
  bool pass = all == expect;
  Json stats{{"enumerated", all}, {"gaussian_binomial", expect}};
  Json cx = Json::array();
  std::string assertion = "enumerated count = gaussian_binomial(n,k,q)";
  if (!pass) cx.push_back(Json{{"enumerated", all}, {"expected", expect}});
  if (with_nondeg) {
    const std::int64_t ie = count_codes(p.n, p.k, p.q);
    stats["nondeg_filter"] = nondeg;
    stats["nondeg_inclusion_exclusion"] = ie;
    assertion += "; non-degenerate filter count = inclusion-exclusion count";
    if (static_cast<std::int64_t>(nondeg) != ie) {
      pass = false;
      cx.push_back(Json{{"nondeg_filter", nondeg}, {"nondeg_inclusion_exclusion", ie}});
    }
  }
  return {make_case(p, assertion, pass, cx, stats), pass};
}

CaseResult run_star_formula(const GridPoint& p, const SuiteConfig& cfg) {
  const auto rep = check_size_formulas(params_of(p, cfg));
  Json stats{{"stars", rep.stars_checked},
             {"restricted_stars", rep.restricted_stars_checked},
             {"tops", rep.tops_checked},
             {"restricted_tops", rep.restricted_tops_checked},
             {"lines", rep.lines_checked}};
  return {make_case(p,
                    "|S(X)| = [n-k+1]_q, |T(Y)| = [k+1]_q, |line| = q+1, |T^c(Y)| = [k+1]_q - n(Y), "
                    "|S^c(X)| = (q-1)^(c-1) q^(n-k-c+1) for c(X) >= 1",
                    rep.pass(), violations_json(rep.violations), stats),
          rep.pass()};
}

CaseResult run_prop_star(const GridPoint& p, const SuiteConfig& cfg) {
  const auto rep = check_prop_star(params_of(p, cfg));
  Json by_c = Json::object();
  for (const auto& [c, counts] : rep.by_c)
    by_c[std::to_string(c)] = Json{{"maximal", counts.first}, {"non_maximal", counts.second}};
  Json stats{{"anchors", rep.anchors},
             {"maximal", rep.maximal},
             {"by_c", by_c},
             {"two_element_stars", rep.two_element_stars},
             {"one_element_stars", rep.one_element_stars},
             {"top_coincidence_checks", rep.top_coincidence_checks}};
  return {make_case(p,
                    "(i) q >= 3: every nonempty S^c(X) is maximal; (ii) q = 2: S^c(X) maximal iff "
                    "c(X) <= n-k-1, with |S^c(X)| = 2 at c = n-k and 1 at c = n-k+1; (iii) a maximal "
                    "S^c(X) is no T^c(Y)",
                    rep.pass(), violations_json(rep.violations), stats),
          rep.pass()};
}

CaseResult run_prop_top(const GridPoint& p, const SuiteConfig& cfg) {
  const auto rep = check_prop_top(params_of(p, cfg));
  Json cx = violations_json(rep.violations);
  if (!rep.equivalent())
    cx.push_back(Json{{"assertion", "equivalence"},
                      {"all_maximal", rep.all_maximal},
                      {"inequality", rep.inequality}});
  if (!rep.inequality && !rep.defect)
    cx.push_back(Json{{"assertion", "defective Y exhibited"}, {"detail", "none found"}});
  Json stats{{"tops", rep.tops},
             {"maximal", rep.maximal},
             {"empty", rep.empty},
             {"all_maximal", rep.all_maximal},
             {"inequality", rep.inequality},
             {"equivalent", rep.equivalent()}};
  if (rep.defect) {
    Json d{{"Y", rep.defect->y.to_string()}, {"size", rep.defect->size}, {"empty", rep.defect->empty}};
    d["containing_star"] = rep.defect->containing_star ? Json(rep.defect->containing_star->to_string()) : Json();
    stats["defect"] = d;
  } else {
    stats["defect"] = Json();
  }
  return {make_case(p, "every T^c(Y) is maximal iff [k+1]_q - (q+1) > n; otherwise a defective Y exists",
                    rep.pass(), cx, stats),
          rep.pass()};
}

CaseResult run_connectivity(const GridPoint& p, const SuiteConfig& cfg) {
  const Graph g = build_graph(params_of(p, cfg), Variant::nondeg);
  const int components = connectivity(g);
  const bool pass = components == 1;
  Json stats{{"vertices", g.vertex_count()},
             {"edges", g.edge_count()},
             {"components", components},
             {"regime", regime(p)}};
  Json cx = Json::array();
  if (!pass) cx.push_back(Json{{"components", components}});
  return {make_case(p, "Γ(n,k)_q is connected", pass, cx, stats), pass};
}

CaseResult run_distance(const GridPoint& p, const SuiteConfig& cfg) {
  const Graph g = build_graph(params_of(p, cfg), Variant::nondeg);
  DistanceOptions opts;
  opts.jobs = cfg.jobs;
  opts.time_budget_seconds = cfg.time_budget_seconds;
  opts.orbit_reduction = true;
  const auto rep = distance_coincidence(g, opts);
  const int threshold = distance_threshold(p.q, p.k);
  const bool expect = p.n < threshold;
  const bool inconclusive = rep.timed_out && !rep.witness;
  const bool pass = !inconclusive && rep.coincides == expect;
  Json cx = Json::array();
  if (rep.witness) {
    const auto& w = *rep.witness;
    cx.push_back(Json{{"X", g.vertex(w.source).to_string()},
                      {"Y", g.vertex(w.target).to_string()},
                      {"path_distance", w.path_distance},
                      {"grassmann_distance", w.grassmann_distance}});
  }
  Json stats{{"vertices", rep.vertex_count},
             {"edges", g.edge_count()},
             {"source_orbits", rep.source_count},
             {"sources_scanned", rep.sources_scanned},
             {"pairs_checked", rep.pairs_checked},
             {"threshold", threshold},
             {"expected_coincidence", expect},
             {"coincides", rep.coincides},
             {"timed_out", rep.timed_out},
             {"regime", regime(p)}};
  return {make_case(p, "path distance = Grassmann distance for all pairs iff n < (q+1)^2 + k - 2", pass, cx,
                    stats),
          pass, inconclusive};
}

CaseResult run_census(const GridPoint& p, const SuiteConfig& cfg) {
  const Graph g = build_graph(params_of(p, cfg), Variant::nondeg);
  const auto rep = maximal_clique_census(g);
  Json cx = Json::array();
  for (const auto& clique : rep.unmatched) {
    if (cx.size() >= 10) break;
    Json members = Json::array();
    for (VertexId v : clique) members.push_back(g.vertex(v).to_string());
    cx.push_back(Json{{"clique", members}});
  }
  Json stats{{"vertices", rep.vertex_count},
             {"maximal_cliques", rep.maximal_cliques},
             {"matched_star", rep.matched_star},
             {"matched_top", rep.matched_top},
             {"unmatched", rep.unmatched.size()}};
  return {make_case(p, "every maximal clique of Γ(n,k)_q is some S^c(X) or T^c(Y)", rep.pass(), cx, stats),
          rep.pass()};
}

CaseResult run_automorphisms(const GridPoint& p, const SuiteConfig& cfg) {
  const Graph g = build_graph(params_of(p, cfg), Variant::nondeg);
  auto rng = point_rng(cfg.seed, p);
  const Field& f = Field::get(p.q);
  Json cx = Json::array();
  int passed = 0;
  for (int s = 0; s < cfg.samples; ++s) {
    const auto m = MonomialMap::random(f, p.n, rng);
    const auto v = verify_automorphism(m, g);
    if (v.onto_vertex_set && v.injective && v.adjacency_both) {
      ++passed;
    } else if (cx.size() < 10) {
      Json entry = to_json(v, "monomial-semilinear", p);
      entry["map"] = m.describe();
      cx.push_back(std::move(entry));
    }
  }
  const bool pass = passed == cfg.samples;
  Json stats{{"maps", cfg.samples}, {"automorphisms", passed}, {"vertices", g.vertex_count()},
             {"edges", g.edge_count()}};
  return {make_case(p, "random monomial semilinear maps are automorphisms of Γ(n,k)_q", pass, cx, stats), pass};
}

CaseResult run_orthocomplement(const GridPoint& p, const SuiteConfig& cfg) {
  const auto rep = orthocomplement_map_check(params_of(p, cfg));
  Json cx = Json::array();
  if (rep.counterexample) cx.push_back(Json{{"detail", *rep.counterexample}});
  Json stats{{"bijective", rep.bijective},
             {"involution", rep.involution},
             {"forward", rep.forward},
             {"backward", rep.backward},
             {"edges_checked", rep.edges_checked},
             {"dual_checked", rep.dual_checked},
             {"dual_image_matches", rep.dual_image_matches},
             {"dual_isomorphic", rep.dual_isomorphic}};
  return {make_case(p,
                    "X -> X^⊥ is a bijection G_k -> G_{n-k} preserving adjacency both ways; for n = 2k it "
                    "maps Γ(2k,k)_q isomorphically onto the dual graph",
                    rep.pass(), cx, stats),
          rep.pass()};
}

Json subspace_pair_json(const OneDirectionWitness& w) {
  return Json{{"X", w.x.to_string()}, {"Y", w.y.to_string()}, {"hX", w.hx.to_string()}, {"hY", w.hy.to_string()}};
}

CaseResult run_counterexample(const GridPoint& p, const SuiteConfig&) {
  if (p.q != 2 || p.k != 2) throw Error("the counterexample suite is defined for q = 2, k = 2");
  const auto rep = verify_counterexample(p.n);
  Json cx = Json::array();
  if (rep.verdict.witness_onedir) cx.push_back(subspace_pair_json(*rep.verdict.witness_onedir));
  Json stats{{"class_a", rep.class_a},
             {"class_b", rep.class_b},
             {"class_c", rep.class_c},
             {"images_well_defined", rep.images_well_defined},
             {"meet_is_union_line", rep.meet_is_union_line},
             {"classes_disjoint", rep.classes_disjoint},
             {"designated_pair_valid", rep.designated_pair_valid},
             {"verdict", to_json(rep.verdict, "h", p)}};
  Json repaired;
  if (rep.repaired)
    repaired = Json{{"vertices", rep.repaired->vertex_count()},
                    {"edges", rep.repaired->edge_count()},
                    {"is_subgraph", rep.repaired_is_subgraph},
                    {"isomorphic_via_h", rep.repaired_isomorphic},
                    {"removed_edges", rep.induced_extra_edges}};
  stats["repaired"] = repaired;
  return {make_case(p,
                    "h is well defined, injective and preserves adjacency forward only; the designated "
                    "nonadjacent pair has adjacent images; the repaired image graph is isomorphic via h",
                    rep.pass(), cx, stats),
          rep.pass()};
}

// ---------------------------------------------------------------- linalg

Subspace random_subspace(const Field& f, int n, int d, std::mt19937_64& rng) {
  GrassmannianIndex index(n, d, f);
  return index.unrank(rng() % index.size());
}

Matrix random_invertible(const Field& f, int d, std::mt19937_64& rng) {
  while (true) {
    Matrix m(f, d, d);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) m.at(r, c) = static_cast<Elem>(rng() % f.q());
    if (rank(m) == d) return m;
  }
}

// d-dimensional subspace of z
Subspace random_subspace_of(const Subspace& z, int d, std::mt19937_64& rng) {
  const Field& f = z.field();
  Matrix coeff(f, d, z.dim());
  do {
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < z.dim(); ++c) coeff.at(r, c) = static_cast<Elem>(rng() % f.q());
  } while (rank(coeff) != d);
  return canonicalize(coeff * z.basis());
}

std::optional<Subspace> sum_opt(const Subspace& x, const std::optional<Subspace>& y) {
  return y ? sum(x, *y) : x;
}

CaseResult run_linalg(const GridPoint& p, const SuiteConfig& cfg) {
  const Field& f = Field::get(p.q);
  auto rng = point_rng(cfg.seed, p);
  const int n = p.n;
  std::uint64_t modular = 0, double_perp = 0, orbit = 0, dims = 0;
  Json cx = Json::array();
  auto fail = [&](std::string law, std::string detail) {
    if (cx.size() < 10) cx.push_back(Json{{"law", std::move(law)}, {"detail", std::move(detail)}});
  };
  for (int s = 0; s < cfg.scramblings; ++s) {
    const Subspace x = random_subspace(f, n, p.k, rng);

    // canonical form is invariant under invertible row operations and
    // redundant rows in any order
    {
      const Matrix g = random_invertible(f, p.k, rng);
      const Matrix scrambled = g * x.basis();
      std::vector<Vector> rows;
      for (int r = 0; r < p.k; ++r) rows.emplace_back(f, std::vector<Elem>(scrambled.row(r).begin(), scrambled.row(r).end()));
      const int extra = 1 + static_cast<int>(rng() % 3);
      for (int e = 0; e < extra; ++e) {
        std::vector<Elem> v(n, 0);
        for (int r = 0; r < p.k; ++r) {
          const Elem a = static_cast<Elem>(rng() % f.q());
          for (int c = 0; c < n; ++c) v[c] = f.add(v[c], f.mul(a, x.at(r, c)));
        }
        rows.emplace_back(f, std::move(v));
      }
      for (int i = static_cast<int>(rows.size()) - 1; i > 0; --i)
        std::swap(rows[i], rows[rng() % static_cast<std::uint64_t>(i + 1)]);
      bool all_zero = true;
      for (const auto& r : rows) all_zero = all_zero && r.is_zero();
      ++orbit;
      if (all_zero || canonicalize(rows) != x) fail("canonical form invariance", x.to_string());
    }

    // (X^⊥)^⊥ = X
    ++double_perp;
    if (orthocomplement(orthocomplement(x)) != x) fail("double orthocomplement", x.to_string());

    // X ⊆ Z  =>  X + (Y ∩ Z) = (X + Y) ∩ Z
    {
      const int dz = p.k + static_cast<int>(rng() % static_cast<std::uint64_t>(n - p.k + 1));
      const Subspace z = dz == p.k ? x : sum(x, random_subspace(f, n, dz - p.k, rng));
      const Subspace x_in_z = z.dim() > p.k ? random_subspace_of(z, p.k, rng) : z;
      const int dy = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
      const Subspace y = random_subspace(f, n, dy, rng);
      const auto lhs = sum_opt(x_in_z, intersect(y, z).subspace);
      const auto rhs = intersect(sum(x_in_z, y), z).subspace;
      ++modular;
      if (lhs != rhs) fail("modular law", "X=" + x_in_z.to_string() + " Y=" + y.to_string() + " Z=" + z.to_string());

      // dim(X+Y) + dim(X∩Y) = dim X + dim Y
      ++dims;
      if (sum(x, y).dim() + intersect(x, y).dim != x.dim() + y.dim() ||
          sum_dim(x, y) != sum(x, y).dim())
        fail("dimension formula", "X=" + x.to_string() + " Y=" + y.to_string());
    }
  }
  const bool pass = cx.empty();
  Json stats{{"scramblings", cfg.scramblings},
             {"canonical_form", orbit},
             {"double_orthocomplement", double_perp},
             {"modular_law", modular},
             {"dimension_formula", dims}};
  return {make_case(p,
                    "modular law, (X^⊥)^⊥ = X, dim(X+Y) + dim(X∩Y) = dim X + dim Y, canonical form invariant "
                    "under row operations",
                    pass, cx, stats),
          pass};
}

// ---------------------------------------------------------------- registry

struct SuiteDef {
  const char* name;
  const char* claim;
};

const SuiteDef kSuites[] = {
    {"counts", "The Grassmannian enumeration has gaussian_binomial(n,k,q) members, and filtering for "
               "non-degenerate codes agrees with inclusion-exclusion over coordinate subspaces."},
    {"star-formula", "Stars, tops and lines of Γ_k(V) and their non-degenerate restrictions have the closed-form sizes."},
    {"prop-star", "A nonempty restricted star S^c(X) is a maximal clique of Γ(n,k)_q for q >= 3; for q = 2 exactly "
                  "when c(X) <= n-k-1. A maximal restricted star is never a restricted top."},
    {"prop-top", "Every restricted top T^c(Y) is a maximal clique of Γ(n,k)_q exactly when [k+1]_q - (q+1) > n."},
    {"connectivity", "Γ(n,k)_q is connected."},
    {"distance", "Path distance in Γ(n,k)_q agrees with Grassmann distance exactly when n < (q+1)^2 + k - 2."},
    {"census", "Every maximal clique of Γ(n,k)_q is a restricted star or a restricted top."},
    {"automorphisms", "Monomial semilinear maps induce automorphisms of Γ(n,k)_q."},
    {"orthocomplement", "Orthocomplementation is an isomorphism Γ_k(V) -> Γ_{n-k}(V); for n = 2k it carries "
                        "Γ(2k,k)_q onto the graph of duals of non-degenerate codes."},
    {"counterexample", "For q = k = 2 the map h on C(n,2)_2 is injective and adjacency preserving in one direction "
                       "only, so it extends to no automorphism of Γ_2(V)."},
    {"linalg", "Subspace operations satisfy the modular law, double orthocomplementation and the dimension "
               "formula; the canonical form depends only on the subspace."},
};

const SuiteDef& find_suite(std::string_view name) {
  for (const auto& s : kSuites)
    if (name == s.name) return s;
  throw Error("unknown suite '" + std::string(name) + "'");
}

std::vector<GridPoint> default_points(std::string_view suite, bool long_run) {
  std::vector<GridPoint> pts;
  if (suite == "counts") {
    for (int q : {2, 3, 4, 5})
      for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) pts.push_back({q, n, k});
  } else if (suite == "distance") {
    pts = default_grid();
    pts.push_back({2, 7, 2});
    pts.push_back({2, 8, 2});
    if (long_run) pts.push_back({2, 9, 2});
  } else if (suite == "census") {
    pts = {{2, 4, 2}, {2, 5, 2}, {3, 5, 2}};
  } else if (suite == "counterexample") {
    pts = {{2, 4, 2}, {2, 5, 2}, {2, 6, 2}};
  } else if (suite == "linalg") {
    pts = {{2, 4, 2}, {2, 6, 3}, {3, 5, 2}, {4, 5, 3}, {9, 4, 2}};
  } else {
    pts = default_grid();
  }
  return pts;
}

CaseResult run_case(std::string_view suite, const GridPoint& p, const SuiteConfig& cfg, bool explicit_point) {
  if (suite == "counts") return run_counts(p, explicit_point || p.q <= 3);
  if (suite == "star-formula") return run_star_formula(p, cfg);
  if (suite == "prop-star") return run_prop_star(p, cfg);
  if (suite == "prop-top") return run_prop_top(p, cfg);
  if (suite == "connectivity") return run_connectivity(p, cfg);
  if (suite == "distance") return run_distance(p, cfg);
  if (suite == "census") return run_census(p, cfg);
  if (suite == "automorphisms") return run_automorphisms(p, cfg);
  if (suite == "orthocomplement") return run_orthocomplement(p, cfg);
  if (suite == "counterexample") return run_counterexample(p, cfg);
  if (suite == "linalg") return run_linalg(p, cfg);
  throw Error("unknown suite '" + std::string(suite) + "'");
}

bool matches(const GridPoint& p, const SuiteConfig& cfg) {
  return (!cfg.q || *cfg.q == p.q) && (!cfg.n || *cfg.n == p.n) && (!cfg.k || *cfg.k == p.k);
}

bool explicit_config(const SuiteConfig& cfg) { return cfg.q || cfg.n || cfg.k; }

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : kSuites) out.emplace_back(s.name);
    return out;
  }();
  return names;
}

bool is_suite(std::string_view name) {
  return std::any_of(std::begin(kSuites), std::end(kSuites), [&](const SuiteDef& s) { return name == s.name; });
}

std::vector<GridPoint> default_grid() {
  std::vector<GridPoint> pts;
  for (int q : {2, 3})
    for (int n = 4; n <= 6; ++n)
      for (int k = 2; k <= n - 2; ++k) pts.push_back({q, n, k});
  return pts;
}

int distance_threshold(int q, int k) { return (q + 1) * (q + 1) + k - 2; }

std::vector<GridPoint> suite_points(std::string_view suite, const SuiteConfig& config) {
  find_suite(suite);
  if (!explicit_config(config)) return default_points(suite, config.long_run);
  std::vector<GridPoint> pts;
  for (const auto& p : default_points(suite, true))
    if (matches(p, config)) pts.push_back(p);
  if (!pts.empty()) return pts;
  if (!config.n) return {};
  return {GridPoint{config.q.value_or(2), *config.n, config.k.value_or(2)}};
}

Json to_json(const VertexMapVerdict& v, std::string_view map_kind, const GridPoint& p) {
  Json j;
  j["map_kind"] = map_kind;
  j["params"] = params_json(p);
  j["injective"] = v.injective;
  j["adjacency_forward"] = v.adjacency_forward;
  j["adjacency_both"] = v.adjacency_both;
  j["witness"] = v.witness_onedir ? subspace_pair_json(*v.witness_onedir) : Json();
  j["conclusion"] = to_string(v.conclusion);
  return j;
}

SuiteResult run_suite(std::string_view suite, const SuiteConfig& config) {
  const SuiteDef& def = find_suite(suite);
  if (config.vertex_budget == 0) throw Error("vertex budget must be positive");
  if (config.time_budget_seconds < 0) throw Error("time budget must be positive");
  if (config.jobs < 1) throw Error("jobs must be positive");
  const auto points = suite_points(suite, config);
  if (points.empty()) throw Error("no grid point of suite '" + std::string(suite) + "' matches; give --n");
  const bool explicit_point = explicit_config(config);

  std::vector<CaseResult> results(points.size());
  std::vector<std::exception_ptr> errors(points.size());
  auto one = [&](std::size_t i) {
    try {
      results[i] = run_case(suite, points[i], config, explicit_point);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (suite == "distance") {
    // parallel over sources inside each case
    for (std::size_t i = 0; i < points.size(); ++i) one(i);
  } else {
    parallel_for(points.size(), config.jobs, [&](int, std::size_t i) { one(i); });
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  SuiteResult out;
  out.pass = true;
  Json cases = Json::array();
  for (auto& r : results) {
    out.pass = out.pass && r.pass;
    out.budget_exceeded = out.budget_exceeded || r.budget_exceeded;
    cases.push_back(std::move(r.json));
  }
  out.report["suite"] = def.name;
  out.report["claim"] = def.claim;
  out.report["seed"] = config.seed;
  out.report["status"] = status(out.pass);
  out.report["cases"] = std::move(cases);
  return out;
}

SuiteResult run_all(const SuiteConfig& config) {
  SuiteResult out;
  out.pass = true;
  Json suites = Json::array();
  for (const auto& s : kSuites) {
    if (suite_points(s.name, config).empty()) continue;
    auto r = run_suite(s.name, config);
    out.pass = out.pass && r.pass;
    out.budget_exceeded = out.budget_exceeded || r.budget_exceeded;
    suites.push_back(std::move(r.report));
  }
  out.report["suite"] = "all";
  out.report["seed"] = config.seed;
  out.report["status"] = status(out.pass);
  out.report["suites"] = std::move(suites);
  return out;
}

}  // namespace grasscode
