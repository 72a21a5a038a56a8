#pragma once

#include <cstdint>
#include <vector>

#include "expc/grading.hpp"
#include "expc/ideal.hpp"
#include "expc/polynomial.hpp"

namespace expc {

// [θ]_u expanded into dense polynomials, one per minimal generator.
std::vector<RationalPolynomial> expand_distraction(const MonomialIdeal& ideal);

// E_i - β_i as polynomials.
std::vector<RationalPolynomial> euler_polynomials(const GradingMatrix& grading, const RationalVector& beta);

// Monomials outside the leading-term ideal of a Gröbner basis. DomainError
// if some variable has no pure power among the leading terms (infinite
// count).
std::int64_t count_standard_monomials(const std::vector<RationalPolynomial>& basis, int num_vars);

// dim_Q Q[θ]/<gens>, via a degrevlex Gröbner basis.
std::int64_t buchberger_dimension(const std::vector<RationalPolynomial>& gens, int num_vars);

// dim Q[θ]/(J + <E>) for a squarefree J and the homogeneous forms E_i of the
// grading, summed degree by degree with exact ranks.
std::int64_t graded_artinian_dimension(const MonomialIdeal& squarefree, const GradingMatrix& grading);

// dim Q[θ]/(Ĩ + <E - β>) by Buchberger.
std::int64_t rank_oracle(const MonomialIdeal& ideal, const GradingMatrix& grading, const RationalVector& beta);

// A random rational parameter with large numerators, reproducible from the
// seed.
RationalVector generic_parameter(int rows, std::uint64_t seed);

struct ExceptionalParameter {
  RationalVector beta;
  std::int64_t rank;
  std::int64_t jump;  // rank - deg(I)
};

// Oracle ranks at β = A·b for every lattice point b of the catalog box lying
// on V(Ĩ), plus one generic β; keeps the parameters where the rank exceeds
// deg(I). Sound but not complete for the full exceptional set.
std::vector<ExceptionalParameter> exceptional_scan(const MonomialIdeal& ideal, const GradingMatrix& grading,
                                                   std::uint64_t seed = 0);

}  // namespace expc
