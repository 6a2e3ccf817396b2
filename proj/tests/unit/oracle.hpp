#pragma once

// Brute-force reference model used by the unit tests: a subspace is the
// sorted set of all its vectors, each vector encoded as a base-q integer.
// Nothing here goes through row reduction.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "grasscode/field.hpp"
#include "grasscode/linalg.hpp"

namespace oracle {

using grasscode::Elem;
using grasscode::Field;
using Vec = std::vector<Elem>;
using SpanSet = std::vector<std::uint64_t>;

inline std::uint64_t encode(const Vec& v, int q) {
  std::uint64_t code = 0;
  for (Elem e : v) code = code * q + e;
  return code;
}

inline Vec decode(std::uint64_t code, int n, int q) {
  Vec v(n);
  for (int i = n - 1; i >= 0; --i) {
    v[i] = static_cast<Elem>(code % q);
    code /= q;
  }
  return v;
}

/// All linear combinations of the generators.
inline SpanSet span(const Field& f, const std::vector<Vec>& gens, int n) {
  std::set<Vec> current{Vec(n, 0)};
  for (const auto& g : gens) {
    std::set<Vec> next;
    for (const auto& base : current)
      for (int a = 0; a < f.q(); ++a) {
        Vec v(n);
        for (int i = 0; i < n; ++i) v[i] = f.add(base[i], f.mul(static_cast<Elem>(a), g[i]));
        next.insert(std::move(v));
      }
    current = std::move(next);
  }
  SpanSet out;
  for (const auto& v : current) out.push_back(encode(v, f.q()));
  std::sort(out.begin(), out.end());
  return out;
}

inline SpanSet span_of(const grasscode::Subspace& x) {
  std::vector<Vec> gens;
  for (int r = 0; r < x.dim(); ++r) gens.emplace_back(x.row(r).begin(), x.row(r).end());
  return span(x.field(), gens, x.ambient());
}

inline int dim_of(const SpanSet& s, int q) {
  int d = 0;
  for (std::uint64_t size = 1; size < s.size(); size *= q) ++d;
  return d;
}

inline SpanSet meet(const SpanSet& a, const SpanSet& b) {
  SpanSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool adjacent(const SpanSet& a, const SpanSet& b, int q) {
  const int k = dim_of(a, q);
  return a != b && dim_of(meet(a, b), q) == k - 1;
}

/// No coordinate vanishes on every vector.
inline bool nondegenerate(const SpanSet& s, int n, int q) {
  for (int i = 0; i < n; ++i) {
    bool nonzero = false;
    for (auto code : s) nonzero = nonzero || decode(code, n, q)[i] != 0;
    if (!nonzero) return false;
  }
  return true;
}

/// Span of a subspace S and one more vector: the union of the cosets S + a v.
inline SpanSet extend(const Field& f, const SpanSet& s, const Vec& v, int n) {
  SpanSet out;
  out.reserve(s.size() * f.q());
  for (auto code : s) {
    const Vec base = decode(code, n, f.q());
    for (int a = 0; a < f.q(); ++a) {
      Vec w(n);
      for (int i = 0; i < n; ++i) w[i] = f.add(base[i], f.mul(static_cast<Elem>(a), v[i]));
      out.push_back(encode(w, f.q()));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Every k-dimensional subspace of F_q^n, grown one dimension at a time: each
/// d-dimensional span is extended by one vector from every coset line it misses.
inline std::set<SpanSet> all_subspaces(const Field& f, int n, int k) {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= f.q();
  std::set<SpanSet> level{SpanSet{0}};
  for (int d = 0; d < k; ++d) {
    std::set<SpanSet> next;
    for (const auto& s : level) {
      std::vector<bool> covered(total, false);
      for (auto c : s) covered[c] = true;
      for (std::uint64_t c = 1; c < total; ++c) {
        if (covered[c]) continue;
        SpanSet t = extend(f, s, decode(c, n, f.q()), n);
        for (auto u : t) covered[u] = true;
        next.insert(std::move(t));
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace oracle
