#pragma once

// Explicit maps on subspaces: semilinear and monomial automorphisms of V,
// orthocomplementation, and the map h on C(n,2)_2 that preserves adjacency
// in one direction only.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "grasscode/code_graph.hpp"

namespace grasscode {

/// l(x) = A σ(x) for column vectors x; σ acts entry-wise.
class SemilinearMap {
 public:
  /// Throws when the matrix is singular or not square.
  SemilinearMap(Matrix matrix, FieldAutomorphism sigma);
  static SemilinearMap identity(const Field& field, int n);

  const Matrix& matrix() const { return matrix_; }
  const FieldAutomorphism& sigma() const { return sigma_; }
  int dim() const { return matrix_.rows(); }

  Vector apply(const Vector& x) const;
  /// (this ∘ first)(x) = A σ(A' σ'(x)) = A σ(A') (σσ')(x).
  SemilinearMap after(const SemilinearMap& first) const;

 private:
  Matrix matrix_;
  FieldAutomorphism sigma_;
};

/// Sends e_i to scalars[i] · e_{perm[i]} (0-based), σ-semilinearly.
class MonomialMap {
 public:
  MonomialMap(std::vector<int> perm, std::vector<Elem> scalars, FieldAutomorphism sigma);
  /// Uniform permutation, nonzero scalars and Frobenius power.
  static MonomialMap random(const Field& field, int n, std::mt19937_64& rng);

  const std::vector<int>& perm() const { return perm_; }
  const std::vector<Elem>& scalars() const { return scalars_; }
  const FieldAutomorphism& sigma() const { return sigma_; }
  int dim() const { return static_cast<int>(perm_.size()); }

  SemilinearMap to_semilinear() const;
  MonomialMap after(const MonomialMap& first) const;
  std::string describe() const;

 private:
  std::vector<int> perm_;
  std::vector<Elem> scalars_;
  FieldAutomorphism sigma_;
};

Subspace apply_map(const SemilinearMap& m, const Subspace& x);
Subspace apply_map(const MonomialMap& m, const Subspace& x);

enum class Extendability { extendable_candidate, provably_not_extendable };
std::string_view to_string(Extendability e);

struct OneDirectionWitness {
  Subspace x, y, hx, hy;
};

struct VertexMapVerdict {
  /// Every image is a vertex of the source graph (self-map check).
  bool onto_vertex_set = false;
  bool injective = false;
  bool adjacency_forward = false;
  bool adjacency_both = false;
  std::optional<OneDirectionWitness> witness_onedir;
  /// provably_not_extendable exactly when witness_onedir is present.
  Extendability conclusion = Extendability::extendable_candidate;
  /// Nonadjacent pairs with adjacent images.
  std::uint64_t one_direction_pairs = 0;
};

/// Generic check of a vertex map g.vertex(i) -> images[i] into Γ_k(V):
/// pairwise adjacency of images against edges of g.
VertexMapVerdict verify_vertex_map(const Graph& g, const std::vector<Subspace>& images);

/// Checks m permutes the vertex set of g and preserves adjacency both ways.
VertexMapVerdict verify_automorphism(const SemilinearMap& m, const Graph& g);
VertexMapVerdict verify_automorphism(const MonomialMap& m, const Graph& g);

struct OrthocomplementReport {
  int n = 0, k = 0, q = 0;
  bool bijective = false;        // G_k -> G_{n-k}
  bool involution = false;       // (X^⊥)^⊥ = X everywhere
  bool forward = false;          // edges of Γ_k map to edges of Γ_{n-k}
  bool backward = false;         // and conversely
  std::uint64_t edges_checked = 0;
  // n = 2k only
  bool dual_checked = false;
  bool dual_image_matches = false;  // ⊥(C(2k,k)_q) = dual-nondeg vertex set
  bool dual_isomorphic = false;
  std::optional<std::string> counterexample;
  bool pass() const {
    return bijective && involution && forward && backward &&
           (!dual_checked || (dual_image_matches && dual_isomorphic));
  }
};

/// Requires 1 <= k <= n-1.
OrthocomplementReport orthocomplement_map_check(const GrassmannianParams& params);

// ---------------------------------------------------------------- q = 2, k = 2

/// P_I: span of the indicator vector of I (0-based indices), over GF(2).
Subspace p_subspace(const std::vector<int>& indices, int n);
/// Hyperplane spanned by P_I for the (n-1)-subsets I containing the last
/// coordinate. Requires n >= 4.
Subspace hyperplane_H(int n);

enum class AbcClass { A, B, C };
std::string_view to_string(AbcClass c);

/// Split of C(n,2)_2 by the all-ones line and H, and the map h.
class CounterexampleMap {
 public:
  explicit CounterexampleMap(int n);

  int n() const { return n_; }
  const Subspace& hyperplane() const { return h_; }
  const Vector& all_ones() const { return ones_; }

  /// A: contains the all-ones line; B: inside H; C: the rest. Throws for
  /// degenerate or non-2-dimensional input.
  AbcClass classify(const Subspace& x) const;
  /// X^c = P_{I^c} + P_{J^c} for the two lines P_I, P_J of X outside H.
  /// Throws unless X is in class C.
  Subspace complement(const Subspace& x) const;
  /// Identity on A ∪ B, X -> X^c on C.
  Subspace apply(const Subspace& x) const;

  /// The pair X = P_{1,3..n} + P_{2..n}, Y = P_{1,2,4..n} + P_{3..n} (1-based).
  std::pair<Subspace, Subspace> witness_pair() const;

 private:
  int n_;
  Subspace h_;
  Vector ones_;
};

AbcClass classify_abc(const Subspace& x);
Subspace x_complement(const Subspace& x);
Subspace h_map(const Subspace& x);

struct CounterexampleReport {
  int n = 0;
  std::uint64_t class_a = 0, class_b = 0, class_c = 0;
  bool images_well_defined = false;   // class-C images degenerate and inside H
  bool meet_is_union_line = false;    // X ∩ X^c = P_{I^c ∪ J^c}
  bool classes_disjoint = false;      // A ∩ B empty
  VertexMapVerdict verdict;
  bool designated_pair_valid = false;      // X ∈ B, Y ∈ C, nonadjacent, images adjacent
  /// Image vertices with edges pulled back through h (vertex i = h(vertex i of Γ(n,2)_2)).
  std::optional<Graph> repaired;
  bool repaired_is_subgraph = false;  // every repaired edge is an edge of Γ_2(V)
  bool repaired_isomorphic = false;   // h is an isomorphism Γ(n,2)_2 -> repaired
  std::uint64_t induced_extra_edges = 0;
  bool pass() const {
    return images_well_defined && meet_is_union_line && classes_disjoint && verdict.injective &&
           verdict.adjacency_forward && !verdict.adjacency_both && designated_pair_valid &&
           repaired_is_subgraph && repaired_isomorphic &&
           verdict.conclusion == Extendability::provably_not_extendable;
  }
};

/// Requires n >= 4.
CounterexampleReport verify_counterexample(int n);

}  // namespace grasscode
