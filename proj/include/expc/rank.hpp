#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "expc/bitset.hpp"
#include "expc/grading.hpp"
#include "expc/ideal.hpp"
#include "expc/linalg.hpp"
#include "expc/simplicial.hpp"

namespace expc {

// C(m, k), zero when m < 0, k < 0 or k > m.
std::int64_t binomial(std::int64_t m, std::int64_t k);

// Facets F^0 of a complex together with the target dimension d. An element
// s of F^p is a (p+1)-subset of facet indices; σ(s) is the intersection of
// those facets.
class FacetLattice {
 public:
  // Requires every facet to have at most d vertices.
  FacetLattice(const SimplicialComplex& complex, int d);

  int d() const { return d_; }
  int num_facets() const { return static_cast<int>(facets_.size()); }
  const std::vector<VertexSet>& facets() const { return facets_; }

  VertexSet sigma(FacetSet s) const;
  // κ(S) = max(0, d - |∪_{s∈S} σ(s)|)
  int kappa(const std::vector<FacetSet>& family) const;
  int kappa(FacetSet s) const { return kappa(std::vector<FacetSet>{s}); }
  int kappa_of_union(VertexSet vertices) const;

  // F^p in increasing mask order; G^p = {s ∈ F^p : κ(s) >= p+1}.
  std::vector<FacetSet> level(int p) const;
  std::vector<FacetSet> g_level(int p) const;

 private:
  std::vector<VertexSet> facets_;
  int d_;
};

// A minimal linear dependency among the coboundary vectors δ(s*) of p-faces
// s of the simplex Ω on `omega_vertices` vertices, supported on every member.
struct CircuitCertificate {
  std::vector<FacetSet> members;
  FacetSet target;
  RationalVector coefficients;  // aligned with members, target coefficient 1
};

// Returns a certificate iff `members` is a circuit (minimally dependent with
// a dependency that is nonzero on every member). DomainError if the target
// is not a member or the members are not distinct faces of one dimension.
std::optional<CircuitCertificate> is_circuit(int omega_vertices, const std::vector<FacetSet>& members,
                                             FacetSet target);

// All circuits for `target` inside `ground` (target ∈ ground), as member
// sets.
std::vector<std::vector<FacetSet>> circuits_for(int omega_vertices, const std::vector<FacetSet>& ground,
                                                FacetSet target);

// ψ^p for G^p listed in the given order (a permutation of g_level(p)).
std::int64_t psi(int p, const FacetLattice& lattice, const std::vector<FacetSet>& order);
std::int64_t psi(int p, const FacetLattice& lattice);

// dim Q[θ]/(I_Δ + <E>) from the closed combinatorial formula.
std::int64_t rank_squarefree_closed(const SimplicialComplex& complex, int d);

// The same dimension from the alternating sum over the first page of the
// spectral sequence plus the image dimensions of its p-q = -1 differentials.
std::int64_t rank_squarefree_spectral(const SimplicialComplex& complex, int d);

// Points of V(Ĩ + <E - β>), sorted.
std::vector<RationalVector> exponents_of(const MonomialIdeal& ideal, const GradingMatrix& grading,
                                         const RationalVector& beta);

struct ExponentContribution {
  RationalVector point;
  SimplicialComplex complex;
  std::int64_t closed;
  std::int64_t spectral;
};

// Per-exponent breakdown of rank_general.
std::vector<ExponentContribution> rank_contributions(const MonomialIdeal& ideal, const GradingMatrix& grading,
                                                     const RationalVector& beta);

// Σ over exponents b of rank_squarefree_closed(Δ_b(I), d).
std::int64_t rank_general(const MonomialIdeal& ideal, const GradingMatrix& grading, const RationalVector& beta);

}  // namespace expc
