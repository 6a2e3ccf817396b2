#include "grasscode/cliques.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace grasscode {

std::string_view to_string(CliqueKind kind) {
  switch (kind) {
    case CliqueKind::star: return "star";
    case CliqueKind::top: return "top";
    case CliqueKind::star_restricted: return "star-restricted";
    case CliqueKind::top_restricted: return "top-restricted";
    case CliqueKind::line: return "line";
  }
  return "?";
}

namespace {

// d-dimensional Z with X ⊆ Z ⊆ Y.
void for_each_between(const Subspace& x, const Subspace& y, int d,
                      const std::function<void(const Subspace&)>& fn) {
  const Field& f = x.field();
  const int n = x.ambient();
  std::vector<Vector> extension;
  Subspace acc = x;
  for (int r = 0; r < y.dim() && acc.dim() < y.dim(); ++r) {
    Vector v = y.row_vector(r);
    if (contains(acc, v)) continue;
    extension.push_back(v);
    acc = sum(acc, span_of(v));
  }
  const int m = static_cast<int>(extension.size());
  GrassmannianParams coeff{m, d - x.dim(), &f, std::numeric_limits<std::uint64_t>::max()};
  for_each_subspace(coeff, [&](const Subspace& c) {
    Matrix rows(f, d, n);
    for (int r = 0; r < x.dim(); ++r)
      for (int col = 0; col < n; ++col) rows.at(r, col) = x.at(r, col);
    for (int r = 0; r < c.dim(); ++r)
      for (int t = 0; t < m; ++t) {
        const Elem a = c.at(r, t);
        if (a == 0) continue;
        for (int col = 0; col < n; ++col)
          rows.at(x.dim() + r, col) = f.add(rows.at(x.dim() + r, col), f.mul(a, extension[t][col]));
      }
    fn(canonicalize(rows));
  });
}

CliqueDescriptor finish(CliqueDescriptor d) {
  std::sort(d.members.begin(), d.members.end());
  return d;
}

std::vector<VertexId> ids_of(const Graph& g, const std::function<void(const std::function<void(const Subspace&)>&)>& walk) {
  std::vector<VertexId> ids;
  walk([&](const Subspace& z) {
    if (auto id = g.index_of(z)) ids.push_back(*id);
  });
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<VertexId> star_ids(const Subspace& x, const Graph& g) {
  return ids_of(g, [&](const auto& emit) { for_each_superspace(x, x.dim() + 1, emit); });
}

std::vector<VertexId> top_ids(const Subspace& y, const Graph& g) {
  return ids_of(g, [&](const auto& emit) { for_each_subspace_of(y, y.dim() - 1, emit); });
}

// Vertices outside `members` adjacent to every member (sorted intersection).
std::vector<VertexId> common_neighbors(const std::vector<VertexId>& members, const Graph& g) {
  if (members.empty()) return {};
  std::vector<VertexId> cand = g.neighbors(members[0]);
  std::vector<VertexId> tmp;
  for (std::size_t i = 1; i < members.size() && !cand.empty(); ++i) {
    const auto& nb = g.neighbors(members[i]);
    tmp.clear();
    std::set_intersection(cand.begin(), cand.end(), nb.begin(), nb.end(), std::back_inserter(tmp));
    cand.swap(tmp);
  }
  // members are never their own neighbors, so cand is already disjoint from them
  return cand;
}

void require_middle_k(const GrassmannianParams& p) {
  p.validate();
  if (!(1 < p.k && p.k < p.n - 1)) throw Error("clique analysis requires 1 < k < n-1");
}

}  // namespace

CliqueDescriptor star(const Subspace& x) {
  if (x.dim() >= x.ambient()) throw Error("star anchor must have dimension < n");
  CliqueDescriptor d{CliqueKind::star, x, std::nullopt, {}};
  for_each_superspace(x, x.dim() + 1, [&](const Subspace& z) { d.members.push_back(z); });
  return finish(std::move(d));
}

CliqueDescriptor top(const Subspace& y) {
  if (y.dim() < 2) throw Error("top anchor must have dimension >= 2");
  CliqueDescriptor d{CliqueKind::top, std::nullopt, y, {}};
  for_each_subspace_of(y, y.dim() - 1, [&](const Subspace& z) { d.members.push_back(z); });
  return finish(std::move(d));
}

CliqueDescriptor star_restricted(const Subspace& x) {
  CliqueDescriptor d = star(x);
  d.kind = CliqueKind::star_restricted;
  std::erase_if(d.members, [](const Subspace& z) { return !is_nondegenerate(z); });
  return d;
}

CliqueDescriptor top_restricted(const Subspace& y) {
  CliqueDescriptor d = top(y);
  d.kind = CliqueKind::top_restricted;
  std::erase_if(d.members, [](const Subspace& z) { return !is_nondegenerate(z); });
  return d;
}

CliqueDescriptor line(const Subspace& x, const Subspace& y) {
  if (y.dim() != x.dim() + 2) throw Error("line anchors must satisfy dim Y = dim X + 2");
  if (!contains(y, x)) throw Error("line requires X ⊂ Y");
  CliqueDescriptor d{CliqueKind::line, x, y, {}};
  for_each_between(x, y, x.dim() + 1, [&](const Subspace& z) { d.members.push_back(z); });
  return finish(std::move(d));
}

std::uint64_t star_restricted_size_formula(const Subspace& x) {
  const int n = x.ambient();
  const int k = x.dim() + 1;
  const int q = x.field().q();
  const int c = coordinate_profile(x).c;
  if (c == 0) throw Error("formula inapplicable; use [n-k+1]_q");
  if (c > n - k + 1) throw Error("c(X) out of range");
  return ipow(q - 1, c - 1) * ipow(q, n - k - c + 1);
}

std::vector<VertexId> member_ids(const CliqueDescriptor& clique, const Graph& g) {
  std::vector<VertexId> ids;
  for (const auto& m : clique.members)
    if (auto id = g.index_of(m)) ids.push_back(*id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

bool is_maximal_clique(const std::vector<VertexId>& members, const Graph& g) {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!g.has_edge(members[i], members[j])) throw Error("members do not form a clique");
  if (members.empty()) return false;
  return common_neighbors(members, g).empty();
}

bool is_maximal_clique(const std::vector<Subspace>& members, const Graph& g) {
  std::vector<VertexId> ids;
  for (const auto& m : members) {
    auto id = g.index_of(m);
    if (!id) throw Error("clique member is not a vertex of the graph");
    ids.push_back(*id);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return is_maximal_clique(ids, g);
}

// ---------------------------------------------------------------- sizes

SizeFormulaReport check_size_formulas(const GrassmannianParams& params) {
  require_middle_k(params);
  const int n = params.n, k = params.k, q = params.q();
  SizeFormulaReport rep;
  rep.n = n, rep.k = k, rep.q = q;
  const std::uint64_t star_size = gaussian_number(n - k + 1, q);
  const std::uint64_t top_size = gaussian_number(k + 1, q);
  auto fail = [&](std::string assertion, const Subspace& anchor, std::string detail) {
    rep.violations.push_back({std::move(assertion), anchor, std::move(detail)});
  };

  GrassmannianParams lower{n, k - 1, params.field, params.vertex_budget};
  for_each_subspace(lower, [&](const Subspace& x) {
    std::uint64_t all = 0, nondeg = 0;
    for_each_superspace(x, k, [&](const Subspace& z) {
      ++all;
      nondeg += is_nondegenerate(z);
    });
    ++rep.stars_checked;
    if (all != star_size)
      fail("|S(X)| = [n-k+1]_q", x, std::to_string(all) + " != " + std::to_string(star_size));
    const int c = coordinate_profile(x).c;
    if (c == 0) {
      if (nondeg != star_size) fail("S^c(X) = S(X) when c(X) = 0", x, std::to_string(nondeg));
    } else {
      ++rep.restricted_stars_checked;
      const auto expect = star_restricted_size_formula(x);
      if (nondeg != expect)
        fail("|S^c(X)| = (q-1)^(c-1) q^(n-k-c+1)", x,
             "c=" + std::to_string(c) + ": " + std::to_string(nondeg) + " != " + std::to_string(expect));
    }
  });

  GrassmannianParams upper{n, k + 1, params.field, params.vertex_budget};
  for_each_subspace(upper, [&](const Subspace& y) {
    std::uint64_t all = 0, nondeg = 0;
    for_each_subspace_of(y, k, [&](const Subspace& z) {
      ++all;
      nondeg += is_nondegenerate(z);
    });
    ++rep.tops_checked;
    if (all != top_size)
      fail("|T(Y)| = [k+1]_q", y, std::to_string(all) + " != " + std::to_string(top_size));
    if (is_nondegenerate(y)) {
      ++rep.restricted_tops_checked;
      const auto expect = top_size - static_cast<std::uint64_t>(n_count(y));
      if (nondeg != expect)
        fail("|T^c(Y)| = [k+1]_q - n(Y)", y, std::to_string(nondeg) + " != " + std::to_string(expect));
    } else if (nondeg != 0) {
      fail("T^c(Y) empty for degenerate Y", y, std::to_string(nondeg));
    }
    for_each_subspace_of(y, k - 1, [&](const Subspace& x) {
      std::uint64_t size = 0;
      for_each_between(x, y, k, [&](const Subspace&) { ++size; });
      ++rep.lines_checked;
      if (size != static_cast<std::uint64_t>(q + 1))
        fail("|line(X,Y)| = q+1", y, "X=" + x.to_string() + ": " + std::to_string(size));
    });
  });
  return rep;
}

// ---------------------------------------------------------------- star maximality

PropStarReport check_prop_star(const GrassmannianParams& params) {
  require_middle_k(params);
  const int n = params.n, k = params.k, q = params.q();
  const Graph g = build_graph(params, Variant::nondeg);
  PropStarReport rep;
  rep.n = n, rep.k = k, rep.q = q;
  auto fail = [&](std::string assertion, const Subspace& anchor, std::string detail) {
    rep.violations.push_back({std::move(assertion), anchor, std::move(detail)});
  };

  GrassmannianParams lower{n, k - 1, params.field, params.vertex_budget};
  for_each_subspace(lower, [&](const Subspace& x) {
    const auto members = star_ids(x, g);
    if (members.empty()) return;
    ++rep.anchors;
    const int c = coordinate_profile(x).c;
    const bool maximal = is_maximal_clique(members, g);
    rep.maximal += maximal;
    auto& bucket = rep.by_c[c];
    (maximal ? bucket.first : bucket.second) += 1;

    if (q >= 3 && !maximal) fail("(i) q >= 3 => S^c(X) maximal", x, "c=" + std::to_string(c));
    if (q == 2) {
      const bool expect = c <= n - k - 1;
      if (maximal != expect)
        fail("(ii) q = 2: S^c(X) maximal <=> c(X) <= n-k-1", x,
             "c=" + std::to_string(c) + " maximal=" + (maximal ? "true" : "false"));
      if (!maximal) {
        if (c == n - k) {
          if (members.size() == 2) ++rep.two_element_stars;
          else fail("q = 2, c = n-k => |S^c(X)| = 2", x, std::to_string(members.size()));
        } else if (c == n - k + 1) {
          if (members.size() == 1) ++rep.one_element_stars;
          else fail("q = 2, c = n-k+1 => |S^c(X)| = 1", x, std::to_string(members.size()));
        }
      }
    }

    if (maximal) {
      // (iii) any Y with T^c(Y) = S^c(X) contains every member
      auto check_y = [&](const Subspace& y) {
        ++rep.top_coincidence_checks;
        if (top_ids(y, g) == members)
          fail("(iii) maximal S^c(X) is not a T^c(Y)", x, "Y=" + y.to_string());
      };
      if (members.size() >= 2) {
        const Subspace y = sum(g.vertex(members[0]), g.vertex(members[1]));
        bool all_inside = true;
        for (VertexId m : members) all_inside = all_inside && contains(y, g.vertex(m));
        if (all_inside) check_y(y);
      } else {
        for_each_superspace(g.vertex(members[0]), k + 1, check_y);
      }
    }
  });
  return rep;
}

// ---------------------------------------------------------------- top maximality

PropTopReport check_prop_top(const GrassmannianParams& params) {
  require_middle_k(params);
  const int n = params.n, k = params.k, q = params.q();
  const Graph g = build_graph(params, Variant::nondeg);
  PropTopReport rep;
  rep.n = n, rep.k = k, rep.q = q;
  const std::uint64_t top_size = gaussian_number(k + 1, q);
  rep.inequality = static_cast<std::int64_t>(top_size) - (q + 1) > n;

  GrassmannianParams upper{n, k + 1, params.field, params.vertex_budget};
  for_each_subspace(upper, [&](const Subspace& y) {
    if (!is_nondegenerate(y)) return;
    ++rep.tops;
    const auto members = top_ids(y, g);
    const auto expect = top_size - static_cast<std::uint64_t>(n_count(y));
    if (members.size() != expect)
      rep.violations.push_back({"|T^c(Y)| = [k+1]_q - n(Y)", y,
                                std::to_string(members.size()) + " != " + std::to_string(expect)});
    if (members.empty()) {
      ++rep.empty;
      if (!rep.defect) rep.defect = TopDefect{y, 0, true, std::nullopt};
      return;
    }
    if (is_maximal_clique(members, g)) {
      ++rep.maximal;
      return;
    }
    if (rep.defect) return;
    TopDefect defect{y, members.size(), false, std::nullopt};
    // a star S^c(X) strictly containing T^c(Y): X is the meet of a member
    // with any common neighbor
    const auto extra = common_neighbors(members, g);
    const auto meet = intersect(g.vertex(members[0]), g.vertex(extra.front()));
    if (meet.subspace && meet.dim == k - 1) {
      const auto star_members = star_ids(*meet.subspace, g);
      if (star_members.size() > members.size() &&
          std::includes(star_members.begin(), star_members.end(), members.begin(), members.end()))
        defect.containing_star = *meet.subspace;
    }
    rep.defect = std::move(defect);
  });
  rep.all_maximal = rep.maximal == rep.tops;
  return rep;
}

// ---------------------------------------------------------------- census

void for_each_maximal_clique(const Graph& g, const std::function<void(const std::vector<VertexId>&)>& fn) {
  const std::size_t count = g.vertex_count();
  const std::size_t words = (count + 63) / 64;
  using Bits = std::vector<std::uint64_t>;
  std::vector<Bits> nb(count, Bits(words, 0));
  for (VertexId u = 0; u < count; ++u)
    for (VertexId v : g.neighbors(u)) nb[u][v / 64] |= std::uint64_t{1} << (v % 64);

  std::vector<VertexId> current;
  auto any = [&](const Bits& b) {
    return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
  };

  std::function<void(Bits, Bits)> expand = [&](Bits p, Bits x) {
    if (!any(p)) {
      if (!any(x)) {
        auto clique = current;
        std::sort(clique.begin(), clique.end());
        fn(clique);
      }
      return;
    }
    // pivot: vertex of P ∪ X with the most neighbors in P
    VertexId pivot = 0;
    int best = -1;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = p[w] | x[w];
      while (bits) {
        const VertexId u = static_cast<VertexId>(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
        int c = 0;
        for (std::size_t i = 0; i < words; ++i) c += std::popcount(p[i] & nb[u][i]);
        if (c > best) {
          best = c;
          pivot = u;
        }
      }
    }
    Bits cand(words);
    for (std::size_t w = 0; w < words; ++w) cand[w] = p[w] & ~nb[pivot][w];
    for (std::size_t w = 0; w < words; ++w) {
      while (cand[w]) {
        const VertexId v = static_cast<VertexId>(w * 64 + std::countr_zero(cand[w]));
        cand[w] &= cand[w] - 1;
        Bits np(words), nx(words);
        for (std::size_t i = 0; i < words; ++i) {
          np[i] = p[i] & nb[v][i];
          nx[i] = x[i] & nb[v][i];
        }
        current.push_back(v);
        expand(std::move(np), std::move(nx));
        current.pop_back();
        p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        x[v / 64] |= std::uint64_t{1} << (v % 64);
      }
    }
  };

  Bits all(words, 0);
  for (VertexId v = 0; v < count; ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
  expand(all, Bits(words, 0));
}

CensusReport maximal_clique_census(const Graph& g, std::size_t vertex_cap) {
  if (g.vertex_count() > vertex_cap) throw BudgetExceeded(g.vertex_count(), vertex_cap);
  const int k = g.params().k;
  CensusReport rep;
  rep.vertex_count = g.vertex_count();
  for_each_maximal_clique(g, [&](const std::vector<VertexId>& clique) {
    ++rep.maximal_cliques;
    const Subspace& first = g.vertex(clique[0]);
    bool star_match = false, top_match = false;
    if (clique.size() >= 2) {
      const Subspace& second = g.vertex(clique[1]);
      const auto meet = intersect(first, second);
      if (meet.dim == k - 1 && meet.subspace) star_match = star_ids(*meet.subspace, g) == clique;
      if (!star_match && k + 1 <= first.ambient()) top_match = top_ids(sum(first, second), g) == clique;
    } else {
      if (k >= 2)
        for_each_subspace_of(first, k - 1, [&](const Subspace& x) {
          star_match = star_match || star_ids(x, g) == clique;
        });
      if (!star_match && k + 1 <= first.ambient())
        for_each_superspace(first, k + 1, [&](const Subspace& y) {
          top_match = top_match || top_ids(y, g) == clique;
        });
    }
    if (star_match) ++rep.matched_star;
    else if (top_match) ++rep.matched_top;
    else rep.unmatched.push_back(clique);
  });
  return rep;
}

}  // namespace grasscode
