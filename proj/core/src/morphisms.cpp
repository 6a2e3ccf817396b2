#include "grasscode/morphisms.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace grasscode {

// ---------------------------------------------------------------- maps

SemilinearMap::SemilinearMap(Matrix matrix, FieldAutomorphism sigma)
    : matrix_(std::move(matrix)), sigma_(sigma) {
  if (matrix_.rows() != matrix_.cols()) throw Error("semilinear map needs a square matrix");
  if (matrix_.field().q() != sigma_.field().q()) throw Error("field mismatch");
  if (rank(matrix_) != matrix_.rows()) throw Error("singular matrix");
}

SemilinearMap SemilinearMap::identity(const Field& field, int n) {
  return SemilinearMap(Matrix::identity(field, n), FieldAutomorphism(field, 0));
}

Vector SemilinearMap::apply(const Vector& x) const {
  if (x.size() != dim()) throw Error("ambient mismatch");
  const Field& f = matrix_.field();
  std::vector<Elem> out(dim(), 0);
  for (int i = 0; i < dim(); ++i) {
    const Elem s = sigma_(x[i]);
    if (s == 0) continue;
    for (int j = 0; j < dim(); ++j) out[j] = f.add(out[j], f.mul(matrix_.at(j, i), s));
  }
  return Vector(f, std::move(out));
}

SemilinearMap SemilinearMap::after(const SemilinearMap& first) const {
  if (first.dim() != dim()) throw Error("ambient mismatch");
  Matrix twisted = first.matrix_;
  for (int r = 0; r < dim(); ++r)
    for (int c = 0; c < dim(); ++c) twisted.at(r, c) = sigma_(twisted.at(r, c));
  return SemilinearMap(matrix_ * twisted, sigma_.after(first.sigma_));
}

MonomialMap::MonomialMap(std::vector<int> perm, std::vector<Elem> scalars, FieldAutomorphism sigma)
    : perm_(std::move(perm)), scalars_(std::move(scalars)), sigma_(sigma) {
  const int n = dim();
  if (static_cast<int>(scalars_.size()) != n) throw Error("scalar count mismatch");
  std::vector<bool> hit(n, false);
  for (int p : perm_) {
    if (p < 0 || p >= n || hit[p]) throw Error("not a permutation");
    hit[p] = true;
  }
  for (Elem a : scalars_)
    if (a == 0 || a >= sigma_.field().q()) throw Error("monomial scalars must be nonzero");
}

MonomialMap MonomialMap::random(const Field& field, int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  // Fisher–Yates on raw engine output keeps runs reproducible across standard libraries
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng() % static_cast<std::uint64_t>(i + 1)]);
  std::vector<Elem> scalars(n);
  for (auto& a : scalars) a = static_cast<Elem>(1 + rng() % static_cast<std::uint64_t>(field.q() - 1));
  const int power = static_cast<int>(rng() % static_cast<std::uint64_t>(field.e()));
  return MonomialMap(std::move(perm), std::move(scalars), FieldAutomorphism(field, power));
}

SemilinearMap MonomialMap::to_semilinear() const {
  const Field& f = sigma_.field();
  Matrix a(f, dim(), dim());
  for (int i = 0; i < dim(); ++i) a.at(perm_[i], i) = scalars_[i];
  return SemilinearMap(std::move(a), sigma_);
}

MonomialMap MonomialMap::after(const MonomialMap& first) const {
  if (first.dim() != dim()) throw Error("ambient mismatch");
  const Field& f = sigma_.field();
  std::vector<int> perm(dim());
  std::vector<Elem> scalars(dim());
  for (int i = 0; i < dim(); ++i) {
    const int mid = first.perm_[i];
    perm[i] = perm_[mid];
    scalars[i] = f.mul(sigma_(first.scalars_[i]), scalars_[mid]);
  }
  return MonomialMap(std::move(perm), std::move(scalars), sigma_.after(first.sigma_));
}

std::string MonomialMap::describe() const {
  std::string s = "perm=[";
  for (int i = 0; i < dim(); ++i) s += (i ? "," : "") + std::to_string(perm_[i]);
  s += "] scalars=[";
  for (int i = 0; i < dim(); ++i) s += (i ? "," : "") + std::to_string(scalars_[i]);
  return s + "] sigma=" + std::to_string(sigma_.power());
}

Subspace apply_map(const SemilinearMap& m, const Subspace& x) {
  if (x.ambient() != m.dim()) throw Error("ambient mismatch");
  const Field& f = x.field();
  const int n = x.ambient();
  Matrix rows(f, x.dim(), n);
  for (int r = 0; r < x.dim(); ++r)
    for (int i = 0; i < n; ++i) {
      const Elem s = m.sigma()(x.at(r, i));
      if (s == 0) continue;
      for (int j = 0; j < n; ++j) rows.at(r, j) = f.add(rows.at(r, j), f.mul(m.matrix().at(j, i), s));
    }
  return canonicalize(rows);
}

Subspace apply_map(const MonomialMap& m, const Subspace& x) {
  if (x.ambient() != m.dim()) throw Error("ambient mismatch");
  const Field& f = x.field();
  const int n = x.ambient();
  Matrix rows(f, x.dim(), n);
  for (int r = 0; r < x.dim(); ++r)
    for (int i = 0; i < n; ++i) rows.at(r, m.perm()[i]) = f.mul(m.scalars()[i], m.sigma()(x.at(r, i)));
  return canonicalize(rows);
}

std::string_view to_string(Extendability e) {
  return e == Extendability::provably_not_extendable ? "provably-not-extendable" : "extendable-candidate";
}

// ---------------------------------------------------------------- verdicts

VertexMapVerdict verify_vertex_map(const Graph& g, const std::vector<Subspace>& images) {
  const std::size_t count = g.vertex_count();
  if (images.size() != count) throw Error("image count mismatch");
  VertexMapVerdict v;
  v.onto_vertex_set = std::all_of(images.begin(), images.end(),
                                  [&](const Subspace& s) { return g.index_of(s).has_value(); });
  {
    std::vector<Subspace> sorted = images;
    std::sort(sorted.begin(), sorted.end());
    v.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }
  v.adjacency_forward = true;
  v.adjacency_both = true;
  for (VertexId a = 0; a < count; ++a)
    for (VertexId b = a + 1; b < count; ++b) {
      const bool before = g.has_edge(a, b);
      const bool after = is_adjacent(images[a], images[b]);
      if (before && !after) v.adjacency_forward = false;
      if (before != after) v.adjacency_both = false;
      if (!before && after) {
        ++v.one_direction_pairs;
        if (!v.witness_onedir) v.witness_onedir = OneDirectionWitness{g.vertex(a), g.vertex(b), images[a], images[b]};
      }
    }
  v.conclusion = v.witness_onedir ? Extendability::provably_not_extendable : Extendability::extendable_candidate;
  return v;
}

namespace {

template <typename Map>
VertexMapVerdict verify_self_map(const Map& m, const Graph& g) {
  const std::size_t count = g.vertex_count();
  std::vector<Subspace> images;
  images.reserve(count);
  std::vector<VertexId> target(count);
  bool onto = true;
  for (VertexId u = 0; u < count; ++u) {
    images.push_back(apply_map(m, g.vertex(u)));
    if (auto id = g.index_of(images.back())) target[u] = *id;
    else onto = false;
  }
  if (!onto) return verify_vertex_map(g, images);

  VertexMapVerdict v;
  v.onto_vertex_set = true;
  std::vector<char> hit(count, 0);
  v.injective = true;
  for (VertexId u = 0; u < count; ++u) {
    if (hit[target[u]]) v.injective = false;
    hit[target[u]] = 1;
  }
  if (!v.injective) return verify_vertex_map(g, images);

  // For a bijection: π(N(u)) ⊆ N(π(u)) with equal degrees gives equality,
  // so non-edges go to non-edges as well.
  std::vector<std::uint32_t> stamp(count, 0);
  v.adjacency_forward = true;
  bool degrees_match = true;
  for (VertexId u = 0; u < count; ++u) {
    const VertexId pu = target[u];
    for (VertexId w : g.neighbors(pu)) stamp[w] = u + 1;
    for (VertexId w : g.neighbors(u))
      if (stamp[target[w]] != u + 1) v.adjacency_forward = false;
    if (g.degree(u) != g.degree(pu)) degrees_match = false;
  }
  v.adjacency_both = v.adjacency_forward && degrees_match;
  if (!v.adjacency_both) return verify_vertex_map(g, images);
  v.conclusion = Extendability::extendable_candidate;
  return v;
}

// Calls fn(a, b) once for every adjacent pair of Γ_k(V).
void for_each_adjacent_pair(const GrassmannianParams& p, const std::function<void(const Subspace&, const Subspace&)>& fn) {
  if (p.k == 1) {
    auto all = enumerate_grassmannian(p);
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j) fn(all[i], all[j]);
    return;
  }
  GrassmannianParams lower{p.n, p.k - 1, p.field, std::numeric_limits<std::uint64_t>::max()};
  std::vector<Subspace> members;
  for_each_subspace(lower, [&](const Subspace& x) {
    members.clear();
    for_each_superspace(x, p.k, [&](const Subspace& z) { members.push_back(z); });
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) fn(members[i], members[j]);
  });
}

}  // namespace

VertexMapVerdict verify_automorphism(const SemilinearMap& m, const Graph& g) { return verify_self_map(m, g); }
VertexMapVerdict verify_automorphism(const MonomialMap& m, const Graph& g) { return verify_self_map(m, g); }

OrthocomplementReport orthocomplement_map_check(const GrassmannianParams& params) {
  params.require_budget();
  const int n = params.n, k = params.k;
  if (k < 1 || k > n - 1) throw Error("orthocomplement check requires 1 <= k <= n-1");
  OrthocomplementReport rep;
  rep.n = n, rep.k = k, rep.q = params.q();
  GrassmannianParams dual{n, n - k, params.field, params.vertex_budget};
  dual.require_budget();

  GrassmannianIndex dual_index(n, n - k, *params.field);
  std::vector<char> hit(dual_index.size(), 0);
  rep.bijective = dual_index.size() == gaussian_binomial(n, k, params.q());
  rep.involution = true;
  for_each_subspace(params, [&](const Subspace& x) {
    const Subspace perp = orthocomplement(x);
    auto& h = hit[dual_index.rank(perp)];
    if (h) rep.bijective = false;
    h = 1;
    if (orthocomplement(perp) != x) {
      rep.involution = false;
      if (!rep.counterexample) rep.counterexample = "involution fails at " + x.to_string();
    }
  });

  auto check_edges = [&](const GrassmannianParams& side, bool& flag) {
    flag = true;
    for_each_adjacent_pair(side, [&](const Subspace& a, const Subspace& b) {
      ++rep.edges_checked;
      if (!is_adjacent(orthocomplement(a), orthocomplement(b))) {
        flag = false;
        if (!rep.counterexample) rep.counterexample = "adjacency lost for " + a.to_string() + " ~ " + b.to_string();
      }
    });
  };
  check_edges(params, rep.forward);
  check_edges(dual, rep.backward);

  if (n == 2 * k) {
    rep.dual_checked = true;
    const Graph nondeg = build_graph(params, Variant::nondeg);
    const Graph dual_graph = build_graph(params, Variant::dual_nondeg);
    std::vector<VertexId> target(nondeg.vertex_count());
    rep.dual_image_matches = nondeg.vertex_count() == dual_graph.vertex_count();
    std::vector<char> used(dual_graph.vertex_count(), 0);
    for (VertexId u = 0; u < nondeg.vertex_count() && rep.dual_image_matches; ++u) {
      auto id = dual_graph.index_of(orthocomplement(nondeg.vertex(u)));
      if (!id || used[*id]) {
        rep.dual_image_matches = false;
        break;
      }
      used[*id] = 1;
      target[u] = *id;
    }
    if (rep.dual_image_matches) {
      rep.dual_isomorphic = nondeg.edge_count() == dual_graph.edge_count();
      for (auto [a, b] : nondeg.edges())
        if (!dual_graph.has_edge(target[a], target[b])) rep.dual_isomorphic = false;
    }
  }
  return rep;
}

// ---------------------------------------------------------------- q = 2, k = 2

namespace {

Vector indicator(const std::vector<int>& indices, int n) {
  const Field& f = Field::get(2);
  std::vector<Elem> v(n, 0);
  for (int i : indices) {
    if (i < 0 || i >= n) throw Error("index out of range");
    v[i] = 1;
  }
  return Vector(f, std::move(v));
}

Vector add_gf2(const Vector& a, const Vector& b) {
  std::vector<Elem> v(a.size());
  for (int i = 0; i < a.size(); ++i) v[i] = a[i] ^ b[i];
  return Vector(a.field(), std::move(v));
}

std::vector<int> range_with(int n, std::initializer_list<int> head, int from) {
  std::vector<int> out(head);
  for (int i = from; i < n; ++i) out.push_back(i);
  return out;
}

}  // namespace

Subspace p_subspace(const std::vector<int>& indices, int n) {
  if (indices.empty()) throw Error("P_I requires a nonempty index set");
  return span_of(indicator(indices, n));
}

Subspace hyperplane_H(int n) {
  if (n < 4) throw Error("H requires n >= 4");
  std::vector<Vector> gens;
  for (int skip = 0; skip < n - 1; ++skip) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (i != skip) idx.push_back(i);
    gens.push_back(indicator(idx, n));
  }
  Subspace h = canonicalize(gens);
  if (h.dim() != n - 1) throw Error("H is not a hyperplane");
  return h;
}

std::string_view to_string(AbcClass c) {
  switch (c) {
    case AbcClass::A: return "A";
    case AbcClass::B: return "B";
    case AbcClass::C: return "C";
  }
  return "?";
}

CounterexampleMap::CounterexampleMap(int n)
    : n_(n), h_(hyperplane_H(n)), ones_(indicator(range_with(n, {}, 0), n)) {
  if (contains(h_, ones_)) throw Error("all-ones vector lies in H");
}

AbcClass CounterexampleMap::classify(const Subspace& x) const {
  if (x.field().q() != 2 || x.dim() != 2 || x.ambient() != n_) throw Error("expected a 2-dim subspace of F_2^n");
  if (!is_nondegenerate(x)) throw Error("degenerate subspace");
  if (contains(x, ones_)) return AbcClass::A;
  if (contains(h_, x)) return AbcClass::B;
  return AbcClass::C;
}

Subspace CounterexampleMap::complement(const Subspace& x) const {
  if (classify(x) != AbcClass::C) throw Error("X^c is defined for class C only");
  const Vector a = x.row_vector(0);
  const Vector b = x.row_vector(1);
  std::vector<Vector> outside;
  for (const Vector& v : {a, b, add_gf2(a, b)})
    if (!contains(h_, v)) outside.push_back(v);
  if (outside.size() != 2) throw Error("class C vertex must meet H in a line");
  const Vector ic = add_gf2(ones_, outside[0]);
  const Vector jc = add_gf2(ones_, outside[1]);
  Subspace xc = canonicalize(std::vector<Vector>{ic, jc});
  if (xc.dim() != 2 || !contains(h_, xc) || is_nondegenerate(xc))
    throw Error("X^c postcondition failed for " + x.to_string());
  return xc;
}

Subspace CounterexampleMap::apply(const Subspace& x) const {
  return classify(x) == AbcClass::C ? complement(x) : x;
}

std::pair<Subspace, Subspace> CounterexampleMap::witness_pair() const {
  const int n = n_;
  Subspace x = canonicalize(std::vector<Vector>{indicator(range_with(n, {0}, 2), n), indicator(range_with(n, {}, 1), n)});
  Subspace y = canonicalize(std::vector<Vector>{indicator(range_with(n, {0, 1}, 3), n), indicator(range_with(n, {}, 2), n)});
  return {std::move(x), std::move(y)};
}

AbcClass classify_abc(const Subspace& x) { return CounterexampleMap(x.ambient()).classify(x); }
Subspace x_complement(const Subspace& x) { return CounterexampleMap(x.ambient()).complement(x); }
Subspace h_map(const Subspace& x) { return CounterexampleMap(x.ambient()).apply(x); }

CounterexampleReport verify_counterexample(int n) {
  if (n < 4) throw Error("counterexample requires n >= 4");
  const CounterexampleMap h(n);
  const auto params = GrassmannianParams::make(n, 2, 2);
  const Graph g = build_graph(params, Variant::nondeg);
  CounterexampleReport rep;
  rep.n = n;

  std::vector<Subspace> images;
  images.reserve(g.vertex_count());
  rep.images_well_defined = true;
  rep.meet_is_union_line = true;
  rep.classes_disjoint = true;
  for (const auto& x : g.vertices()) {
    if (contains(x, h.all_ones()) && contains(h.hyperplane(), x)) rep.classes_disjoint = false;
    switch (h.classify(x)) {
      case AbcClass::A: ++rep.class_a; images.push_back(x); break;
      case AbcClass::B: ++rep.class_b; images.push_back(x); break;
      case AbcClass::C: {
        ++rep.class_c;
        Subspace xc = h.complement(x);
        if (is_nondegenerate(xc) || !contains(h.hyperplane(), xc)) rep.images_well_defined = false;
        // X ∩ X^c must be the line of X inside H, i.e. P_{I^c ∪ J^c}
        const auto meet = intersect(x, xc);
        const auto in_h = intersect(x, h.hyperplane());
        if (meet.dim != 1 || in_h.dim != 1 || *meet.subspace != *in_h.subspace) rep.meet_is_union_line = false;
        images.push_back(std::move(xc));
        break;
      }
    }
  }

  rep.verdict = verify_vertex_map(g, images);

  const auto [px, py] = h.witness_pair();
  const Subspace hx = h.apply(px);
  const Subspace hy = h.apply(py);
  rep.designated_pair_valid = is_nondegenerate(px) && is_nondegenerate(py) && h.classify(px) == AbcClass::B &&
                              h.classify(py) == AbcClass::C && !is_adjacent(px, py) && is_adjacent(hx, hy);
  if (rep.designated_pair_valid) rep.verdict.witness_onedir = OneDirectionWitness{px, py, hx, hy};
  rep.verdict.conclusion = rep.verdict.witness_onedir ? Extendability::provably_not_extendable
                                                      : Extendability::extendable_candidate;

  if (rep.verdict.injective) {
    // restriction of Γ_2(V) to the image, minus edges whose preimages are
    // not adjacent; vertex i is h(vertex i of Γ(n,2)_2)
    const Graph induced = build_induced_graph(params, images);
    std::vector<std::vector<VertexId>> adj(induced.vertex_count());
    for (auto [a, b] : induced.edges())
      if (g.has_edge(a, b)) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
    rep.repaired.emplace(params, Variant::custom, images, std::move(adj));
    rep.repaired_is_subgraph = true;
    for (auto [a, b] : rep.repaired->edges())
      if (!is_adjacent(rep.repaired->vertex(a), rep.repaired->vertex(b))) rep.repaired_is_subgraph = false;
    rep.repaired_isomorphic = rep.repaired->edges() == g.edges();
    rep.induced_extra_edges = induced.edge_count() - rep.repaired->edge_count();
  }
  return rep;
}

}  // namespace grasscode
