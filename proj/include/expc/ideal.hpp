#pragma once

#include <string>
#include <vector>

#include "expc/bitset.hpp"

namespace expc {

// Exponent of a monomial, one nonnegative entry per variable.
using ExponentVector = std::vector<int>;

bool divides(const ExponentVector& u, const ExponentVector& v);
VertexSet support(const ExponentVector& u);
int total_degree(const ExponentVector& u);

// A proper nonzero monomial ideal, stored by its minimal generators in
// lexicographic order. Immutable once built.
class MonomialIdeal {
 public:
  // Keeps the divisibility-minimal vectors of `raw`. Rejects an empty list,
  // a length mismatch, negative entries and the zero vector (unit ideal).
  static MonomialIdeal minimalize(std::vector<ExponentVector> raw, int num_vars);

  int num_vars() const { return num_vars_; }
  const std::vector<ExponentVector>& generators() const { return generators_; }

  // "x1^2*x2" style rendering of one generator.
  std::string monomial_string(std::size_t i, const std::string& var = "x") const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  MonomialIdeal(int num_vars, std::vector<ExponentVector> gens)
      : num_vars_(num_vars), generators_(std::move(gens)) {}

  int num_vars_;
  std::vector<ExponentVector> generators_;
};

MonomialIdeal radical(const MonomialIdeal& ideal);

// Coordinatewise maximum of the generators (exponent of their lcm).
ExponentVector join(const MonomialIdeal& ideal);

bool is_squarefree(const MonomialIdeal& ideal);

// Largest |sigma| such that every generator has support outside sigma.
int krull_dimension(const MonomialIdeal& ideal);

}  // namespace expc
