#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "expc/bitset.hpp"
#include "expc/ideal.hpp"

namespace expc {

// Ranks of reduced homology over the rationals, keyed by degree (>= -1).
// Degrees not present have rank zero.
struct HomologyProfile {
  std::map<int, std::int64_t> ranks;

  std::int64_t rank(int degree) const {
    const auto it = ranks.find(degree);
    return it == ranks.end() ? 0 : it->second;
  }
  bool acyclic() const;
  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

// A simplicial complex on the vertex labels 0..n-1, stored by its facets.
// The complex {∅} has the single facet ∅; the void complex is rejected.
class SimplicialComplex {
 public:
  // Throws ValidationError if a facet contains another, a vertex is out of
  // range, or the facet list is empty.
  SimplicialComplex(int num_vertices, std::vector<VertexSet> facets);

  // Keeps only the maximal members of `faces`.
  static SimplicialComplex from_faces(int num_vertices, std::vector<VertexSet> faces);
  static SimplicialComplex simplex(int num_vertices);
  // All subsets of size <= max_size.
  static SimplicialComplex skeleton(int num_vertices, int max_size);
  static SimplicialComplex empty_face(int num_vertices);

  int num_vertices() const { return num_vertices_; }
  const std::vector<VertexSet>& facets() const { return facets_; }

  int dimension() const;
  bool contains(VertexSet face) const;
  bool is_pure() const;

  // faces_of_size()[k] lists the faces with k vertices, sorted by mask.
  const std::vector<std::vector<VertexSet>>& faces_of_size() const;
  std::vector<std::uint64_t> f_vector() const;

  std::string to_string() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.num_vertices_ == b.num_vertices_ && a.facets_ == b.facets_;
  }
  friend bool operator<(const SimplicialComplex& a, const SimplicialComplex& b);

 private:
  struct FaceCache;

  int num_vertices_;
  std::vector<VertexSet> facets_;
  std::shared_ptr<FaceCache> cache_;
};

int dimension(const SimplicialComplex& complex);
std::vector<std::uint64_t> f_vector(const SimplicialComplex& complex);

// {τ : σ∪τ ∈ Δ, σ∩τ = ∅}; DomainError if σ is not a face.
SimplicialComplex link(const SimplicialComplex& complex, VertexSet face);

// Exact reduced homology over Q. A modular computation is used first and
// accepted when it is nonzero in at most one degree (universal coefficients
// plus the Euler characteristic pin the rational ranks down); otherwise the
// ranks are recomputed with fraction-free integer elimination.
HomologyProfile reduced_homology(const SimplicialComplex& complex);
HomologyProfile reduced_homology_exact(const SimplicialComplex& complex);
HomologyProfile reduced_homology_mod_p(const SimplicialComplex& complex);

std::int64_t reduced_euler_characteristic(const SimplicialComplex& complex);

struct ReisnerWitness {
  VertexSet face;
  int degree;  // H̃_degree(lk face) != 0 with degree < dim lk face
};

struct ComplexCmResult {
  bool cohen_macaulay = false;
  std::optional<ReisnerWitness> witness;
};

// Reisner's criterion over Q: every link has vanishing reduced homology below
// its dimension. Faces are scanned by size, so the witness has a minimal face.
ComplexCmResult is_cohen_macaulay_complex(const SimplicialComplex& complex);

// Minimal non-faces as a squarefree ideal. DomainError for a full simplex,
// whose ideal is zero.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex);

// The complex whose faces are the supports avoiding every generator support;
// for a squarefree ideal this inverts stanley_reisner_ideal.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal);

}  // namespace expc
