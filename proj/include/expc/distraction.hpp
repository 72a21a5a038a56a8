#pragma once

#include <optional>
#include <string>
#include <vector>

#include "expc/bitset.hpp"
#include "expc/ideal.hpp"
#include "expc/linalg.hpp"
#include "expc/simplicial.hpp"

namespace expc {

// One linear factor (θ_variable - shift) of a distraction generator.
struct DistractionFactor {
  int variable;  // 0-based
  int shift;
  friend bool operator==(const DistractionFactor&, const DistractionFactor&) = default;
};

// [θ]_u = Π_i Π_{j<u_i} (θ_i - j), kept in factored form.
using FactoredGenerator = std::vector<DistractionFactor>;

std::vector<FactoredGenerator> distraction_generators(const MonomialIdeal& ideal);
std::string format_factored(const FactoredGenerator& gen);

// Irreducible component base + C^sigma of V(Ĩ). base vanishes on sigma.
struct Component {
  VertexSet sigma;
  std::vector<int> base;

  friend bool operator==(const Component&, const Component&) = default;
  friend bool operator<(const Component& a, const Component& b) {
    if (a.sigma != b.sigma) return a.sigma < b.sigma;
    return a.base < b.base;
  }
};

// Every generator u has some i outside sigma with base_i < u_i.
bool covers(const MonomialIdeal& ideal, VertexSet sigma, const std::vector<int>& base);

// All maximal (sigma, base) pairs, sorted. Bases are searched in the box
// 0 <= base_i < join_i off sigma.
std::vector<Component> components(const MonomialIdeal& ideal);

// b_i == base_i for every coordinate outside sigma.
bool contains_point(const Component& component, const RationalVector& point);

// Facets are the sigma of the components through the point. DomainError
// when the point is not on V(Ĩ).
SimplicialComplex exponent_complex_at(const MonomialIdeal& ideal, const RationalVector& point);
std::optional<SimplicialComplex> exponent_complex_at(int num_vars, const std::vector<Component>& comps,
                                                     const RationalVector& point);

struct CatalogEntry {
  SimplicialComplex complex;
  std::vector<int> witness;  // first lattice point (lexicographic scan) realizing it
};

// Distinct exponent complexes over the lattice box [-1, join_i], sorted by
// complex. A coordinate equal to -1 can only sit on a free coordinate.
std::vector<CatalogEntry> exponent_catalog(const MonomialIdeal& ideal);

// Number of components of top dimension krull_dimension(I).
int degree(const MonomialIdeal& ideal);
bool is_unmixed(const MonomialIdeal& ideal);

}  // namespace expc
