#include "grasscode/code_graph.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <numeric>
#include <set>

#include "grasscode/parallel.hpp"

namespace grasscode {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::full: return "full";
    case Variant::nondeg: return "nondeg";
    case Variant::dual_nondeg: return "dual-nondeg";
    case Variant::custom: return "custom";
  }
  return "?";
}

Variant parse_variant(std::string_view s) {
  if (s == "full") return Variant::full;
  if (s == "nondeg") return Variant::nondeg;
  if (s == "dual-nondeg") return Variant::dual_nondeg;
  if (s == "custom") return Variant::custom;
  throw Error("unknown graph variant '" + std::string(s) + "'");
}

// ---------------------------------------------------------------- Graph

Graph::Graph(GrassmannianParams params, Variant variant, std::vector<Subspace> vertices,
             std::vector<std::vector<VertexId>> adjacency)
    : params_(params), variant_(variant), vertices_(std::move(vertices)), adjacency_(std::move(adjacency)) {
  if (adjacency_.size() != vertices_.size()) throw Error("adjacency size mismatch");
  for (VertexId v = 0; v < adjacency_.size(); ++v) {
    auto& nb = adjacency_[v];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) throw Error("duplicate edge");
    for (VertexId u : nb) {
      if (u >= vertices_.size()) throw Error("neighbor out of range");
      if (u == v) throw Error("self-loop");
    }
    edge_count_ += nb.size();
  }
  for (VertexId v = 0; v < adjacency_.size(); ++v)
    for (VertexId u : adjacency_[v])
      if (!std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v))
        throw Error("adjacency is not symmetric");
  edge_count_ /= 2;

  if (!vertices_.empty()) {
    const Subspace& first = vertices_.front();
    index_.emplace(first.ambient(), first.dim(), first.field());
    if (index_->size() <= params_.vertex_budget) {
      slot_.assign(index_->size(), -1);
      for (VertexId v = 0; v < vertices_.size(); ++v) {
        if (vertices_[v].dim() != first.dim()) throw Error("vertices of mixed dimension");
        auto& s = slot_[index_->rank(vertices_[v])];
        if (s >= 0) throw Error("duplicate vertex");
        s = static_cast<std::int32_t>(v);
      }
    }
  }
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<VertexId> Graph::index_of(const Subspace& x) const {
  if (!index_ || x.dim() != vertices_.front().dim() || x.ambient() != vertices_.front().ambient())
    return std::nullopt;
  if (!slot_.empty()) {
    const std::int32_t s = slot_[index_->rank(x)];
    if (s < 0) return std::nullopt;
    return static_cast<VertexId>(s);
  }
  auto it = std::find(vertices_.begin(), vertices_.end(), x);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<VertexId>(it - vertices_.begin());
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < adjacency_.size(); ++u)
    for (VertexId v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

// ---------------------------------------------------------------- profiles

bool is_nondegenerate(const Subspace& x) {
  for (int c = 0; c < x.ambient(); ++c) {
    bool nonzero = false;
    for (int r = 0; r < x.dim() && !nonzero; ++r) nonzero = x.at(r, c) != 0;
    if (!nonzero) return false;
  }
  return true;
}

CoordinateProfile coordinate_profile(const Subspace& x) {
  CoordinateProfile p;
  for (int c = 0; c < x.ambient(); ++c) {
    bool nonzero = false;
    for (int r = 0; r < x.dim() && !nonzero; ++r) nonzero = x.at(r, c) != 0;
    if (nonzero)
      p.support.push_back(c);
    else
      ++p.c;
  }
  if (x.dim() == 1) p.weight = static_cast<int>(p.support.size());
  return p;
}

Subspace coordinate_hyperplane(const Field& field, int n, int i) {
  if (n < 2 || i < 0 || i >= n) throw Error("coordinate hyperplane index out of range");
  std::vector<Vector> rows;
  for (int j = 0; j < n; ++j)
    if (j != i) rows.push_back(Vector::unit(field, n, j));
  return canonicalize(rows);
}

int n_count(const Subspace& y) {
  if (!is_nondegenerate(y)) throw Error("n(Y) requires a non-degenerate subspace");
  if (y.dim() < 2) throw Error("n(Y) requires dim Y >= 2");
  std::set<Subspace> distinct;
  for (int i = 0; i < y.ambient(); ++i) {
    auto meet = intersect(y, coordinate_hyperplane(y.field(), y.ambient(), i));
    distinct.insert(*meet.subspace);
  }
  return static_cast<int>(distinct.size());
}

std::int64_t count_codes(int n, int k, int q) {
  if (k < 1 || k > n) throw Error("count_codes requires 1 <= k <= n");
  std::int64_t total = 0;
  std::int64_t binom = 1;  // C(n, j)
  for (int j = 0; j <= n - k; ++j) {
    const auto term = binom * static_cast<std::int64_t>(gaussian_binomial(n - j, k, q));
    total += (j % 2 == 0) ? term : -term;
    binom = binom * (n - j) / (j + 1);
  }
  return total;
}

int unit_column_count(const Subspace& x) {
  int count = 0;
  for (int c = 0; c < x.ambient(); ++c) {
    int nz = 0;
    for (int r = 0; r < x.dim(); ++r) nz += x.at(r, c) != 0;
    count += nz == 1;
  }
  return count;
}

// ---------------------------------------------------------------- builders

namespace {

// Adjacency of the induced subgraph of Γ_k(V) on `vertices`. Every adjacent
// pair shares exactly one (k-1)-dimensional intersection, so walking the
// stars emits each edge once.
std::vector<std::vector<VertexId>> induced_adjacency(const GrassmannianParams& params,
                                                     const std::vector<Subspace>& vertices) {
  const std::size_t count = vertices.size();
  std::vector<std::vector<VertexId>> adj(count);
  if (count == 0) return adj;
  const int n = params.n;
  const int k = params.k;
  const int q = params.q();

  const double pair_cost = 0.5 * static_cast<double>(count) * static_cast<double>(count);
  const double star_cost = (k == 1) ? std::numeric_limits<double>::infinity()
                                    : static_cast<double>(gaussian_binomial(n, k - 1, q)) *
                                          static_cast<double>(gaussian_number(n - k + 1, q));
  if (pair_cost <= star_cost) {
    for (VertexId u = 0; u < count; ++u)
      for (VertexId v = u + 1; v < count; ++v)
        if (is_adjacent(vertices[u], vertices[v])) {
          adj[u].push_back(v);
          adj[v].push_back(u);
        }
    return adj;
  }

  GrassmannianIndex index(n, k, *params.field);
  std::vector<std::int32_t> slot(index.size(), -1);
  for (VertexId v = 0; v < count; ++v) slot[index.rank(vertices[v])] = static_cast<std::int32_t>(v);

  GrassmannianParams lower{n, k - 1, params.field, std::numeric_limits<std::uint64_t>::max()};
  std::vector<VertexId> members;
  for_each_subspace(lower, [&](const Subspace& x) {
    members.clear();
    for_each_superspace(x, k, [&](const Subspace& z) {
      const std::int32_t s = slot[index.rank(z)];
      if (s >= 0) members.push_back(static_cast<VertexId>(s));
    });
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        adj[members[i]].push_back(members[j]);
        adj[members[j]].push_back(members[i]);
      }
  });
  return adj;
}

}  // namespace

Graph build_induced_graph(const GrassmannianParams& params, std::vector<Subspace> vertices) {
  params.validate();
  for (const auto& v : vertices)
    if (v.ambient() != params.n || v.dim() != params.k || v.field().q() != params.q())
      throw Error("vertex does not belong to G_k(V)");
  auto adj = induced_adjacency(params, vertices);
  return Graph(params, Variant::custom, std::move(vertices), std::move(adj));
}

Graph build_graph(const GrassmannianParams& params, Variant variant) {
  params.require_budget();
  std::vector<Subspace> vertices;
  switch (variant) {
    case Variant::full:
      vertices = enumerate_grassmannian(params);
      break;
    case Variant::nondeg:
      for_each_subspace(params, [&](const Subspace& x) {
        if (is_nondegenerate(x)) vertices.push_back(x);
      });
      break;
    case Variant::dual_nondeg: {
      if (params.n != 2 * params.k) throw Error("dual-nondeg variant requires n = 2k");
      GrassmannianIndex index(params.n, params.k, *params.field);
      std::vector<std::pair<std::uint64_t, Subspace>> ranked;
      for_each_subspace(params, [&](const Subspace& x) {
        if (!is_nondegenerate(x)) return;
        Subspace perp = orthocomplement(x);
        ranked.emplace_back(index.rank(perp), std::move(perp));
      });
      std::sort(ranked.begin(), ranked.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      for (auto& [rank, s] : ranked) vertices.push_back(std::move(s));
      break;
    }
    case Variant::custom:
      throw Error("custom graphs are built from an explicit vertex list");
  }
  auto adj = induced_adjacency(params, vertices);
  return Graph(params, variant, std::move(vertices), std::move(adj));
}

int connectivity(const Graph& g) {
  const std::size_t count = g.vertex_count();
  std::vector<char> seen(count, 0);
  std::vector<VertexId> stack;
  int components = 0;
  for (VertexId s = 0; s < count; ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId u = stack.back();
      stack.pop_back();
      for (VertexId v : g.neighbors(u))
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
  }
  return components;
}

// ---------------------------------------------------------------- distances

namespace {

class BitRows {
 public:
  explicit BitRows(const Graph& g)
      : words_((g.vertex_count() + 63) / 64), bits_(g.vertex_count() * words_, 0) {
    for (VertexId u = 0; u < g.vertex_count(); ++u)
      for (VertexId v : g.neighbors(u)) bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  }
  std::size_t words() const { return words_; }
  const std::uint64_t* row(VertexId u) const { return bits_.data() + u * words_; }

 private:
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

// Level-synchronous BFS over bit rows; dist[v] = -1 when unreachable.
void bfs_levels(const BitRows& rows, std::size_t count, VertexId source, std::vector<int>& dist,
                std::vector<std::uint64_t>& visited, std::vector<std::uint64_t>& frontier,
                std::vector<std::uint64_t>& next) {
  const std::size_t w = rows.words();
  std::fill(dist.begin(), dist.end(), -1);
  std::fill(visited.begin(), visited.end(), 0);
  std::fill(frontier.begin(), frontier.end(), 0);
  visited[source / 64] |= std::uint64_t{1} << (source % 64);
  frontier[source / 64] |= std::uint64_t{1} << (source % 64);
  dist[source] = 0;
  for (int level = 1;; ++level) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t fw = 0; fw < w; ++fw) {
      std::uint64_t bits = frontier[fw];
      while (bits) {
        const VertexId u = static_cast<VertexId>(fw * 64 + std::countr_zero(bits));
        bits &= bits - 1;
        const std::uint64_t* r = rows.row(u);
        for (std::size_t i = 0; i < w; ++i) next[i] |= r[i];
      }
    }
    bool any = false;
    for (std::size_t i = 0; i < w; ++i) {
      next[i] &= ~visited[i];
      visited[i] |= next[i];
      any |= next[i] != 0;
    }
    if (!any) break;
    for (std::size_t i = 0; i < w; ++i) {
      std::uint64_t bits = next[i];
      while (bits) {
        const std::size_t v = i * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        if (v < count) dist[v] = level;
      }
    }
    frontier.swap(next);
  }
}

}  // namespace

std::vector<VertexId> monomial_orbit_representatives(const Graph& g) {
  if (g.variant() != Variant::full && g.variant() != Variant::nondeg)
    throw Error("orbit reduction needs the full or nondeg vertex set");
  const std::size_t count = g.vertex_count();
  std::vector<VertexId> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto unite = [&](VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[a] = b;
  };
  if (count == 0) return {};
  const Field& f = g.vertex(0).field();
  const int n = g.vertex(0).ambient();
  const int k = g.vertex(0).dim();
  Elem primitive = 1;
  for (Elem a = 1; a < f.q(); ++a) {
    int order = 1;
    for (Elem x = a; x != 1; x = f.mul(x, a)) ++order;
    if (order == f.q() - 1) {
      primitive = a;
      break;
    }
  }
  // generators: adjacent transpositions, scaling of the first coordinate, Frobenius
  Matrix rows(f, k, n);
  auto image_of = [&](const Subspace& x, int gen) {
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < n; ++c) {
        int src = c;
        if (gen < n - 1 && (c == gen || c == gen + 1)) src = c == gen ? gen + 1 : gen;
        Elem a = x.at(r, src);
        if (gen == n - 1 && c == 0) a = f.mul(a, primitive);
        if (gen == n) a = f.frobenius(a, 1);
        rows.at(r, c) = a;
      }
    return canonicalize(rows);
  };
  const int generators = n + (f.e() > 1 ? 1 : 0);
  for (VertexId v = 0; v < count; ++v)
    for (int gen = 0; gen < generators; ++gen) {
      auto id = g.index_of(image_of(g.vertex(v), gen));
      if (!id) throw Error("vertex set is not closed under monomial maps");
      unite(v, *id);
    }
  std::vector<VertexId> reps;
  for (VertexId v = 0; v < count; ++v)
    if (find(v) == v) reps.push_back(v);
  return reps;
}

DistanceReport distance_coincidence(const Graph& g, const DistanceOptions& options) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const std::size_t count = g.vertex_count();
  DistanceReport report;
  report.vertex_count = count;
  if (count == 0) return report;

  std::vector<VertexId> order;
  if (options.orbit_reduction && (g.variant() == Variant::full || g.variant() == Variant::nondeg)) {
    order = monomial_orbit_representatives(g);
  } else {
    order.resize(count);
    std::iota(order.begin(), order.end(), 0);
  }
  const std::size_t sources = order.size();
  report.source_count = sources;
  if (options.guided_order) {
    std::vector<int> key(count);
    for (VertexId v = 0; v < count; ++v) key[v] = unit_column_count(g.vertex(v));
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return key[a] > key[b]; });
  }

  const BitRows rows(g);
  const int jobs = std::max(1, options.jobs);
  // Position in `order` of the earliest source with a witness found so far.
  std::atomic<std::size_t> best{sources};
  std::atomic<bool> timed_out{false};
  std::vector<std::optional<DistanceWitness>> found(sources);
  std::vector<std::uint64_t> pairs(sources, 0);
  std::vector<char> scanned(sources, 0);

  struct Scratch {
    std::vector<int> dist;
    std::vector<std::uint64_t> visited, frontier, next;
  };
  std::vector<Scratch> scratch(jobs);
  for (auto& s : scratch) {
    s.dist.resize(count);
    s.visited.resize(rows.words());
    s.frontier.resize(rows.words());
    s.next.resize(rows.words());
  }

  parallel_for(sources, jobs, [&](int worker, std::size_t pos) {
    if (options.stop_at_first_witness && pos > best.load()) return;
    if (timed_out.load()) return;
    if (options.time_budget_seconds > 0 &&
        std::chrono::duration<double>(Clock::now() - start).count() > options.time_budget_seconds) {
      timed_out = true;
      return;
    }
    Scratch& s = scratch[worker];
    const VertexId source = order[pos];
    bfs_levels(rows, count, source, s.dist, s.visited, s.frontier, s.next);
    scanned[pos] = 1;
    for (VertexId v = 0; v < count; ++v) {
      if (v == source) continue;
      ++pairs[pos];
      const int gd = grassmann_distance(g.vertex(source), g.vertex(v));
      if (s.dist[v] != gd) {
        found[pos] = DistanceWitness{source, v, s.dist[v], gd};
        std::size_t cur = best.load();
        while (pos < cur && !best.compare_exchange_weak(cur, pos)) {
        }
        break;
      }
    }
  });

  for (std::size_t pos = 0; pos < sources; ++pos)
    if (found[pos]) {
      report.witness = found[pos];
      report.coincides = false;
      break;
    }
  report.timed_out = timed_out.load();
  // with early stop, only the prefix up to the witness source is deterministic
  const std::size_t limit = (options.stop_at_first_witness && report.witness) ? best.load() + 1 : sources;
  for (std::size_t pos = 0; pos < limit; ++pos) {
    report.pairs_checked += pairs[pos];
    report.sources_scanned += scanned[pos];
  }
  return report;
}

DistanceReport distance_coincidence_report(const GrassmannianParams& params, const DistanceOptions& options) {
  return distance_coincidence(build_graph(params, Variant::nondeg), options);
}

}  // namespace grasscode
