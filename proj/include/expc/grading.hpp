#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "expc/linalg.hpp"

namespace expc {

// Outcome of checking the three grading conditions separately.
struct GradingValidation {
  bool lattice_ok = false;  // columns span Z^d (Smith invariants all 1)
  bool pointed_ok = false;  // some rational w has w·a_j >= 1 for all j
  bool generic_ok = false;  // every d-subset of columns is independent
  std::vector<std::string> violations;

  bool ok() const { return lattice_ok && pointed_ok && generic_ok; }
};

GradingValidation validate(int rows, int cols, const std::vector<std::int64_t>& entries);

// A d x n integer matrix that passed validate(). Columns a_1..a_n.
class GradingMatrix {
 public:
  // Throws ValidationError naming each violated condition.
  GradingMatrix(int rows, int cols, std::vector<std::int64_t> entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t operator()(int r, int c) const { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
  const std::vector<std::int64_t>& entries() const { return entries_; }

  RationalMatrix to_rational() const;
  // Submatrix on the given columns.
  RationalMatrix columns(const std::vector<int>& cols) const;

  friend bool operator==(const GradingMatrix&, const GradingMatrix&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<std::int64_t> entries_;
};

// Nonzero diagonal of the Smith normal form (with trailing zeros for rank
// deficiency), so the list always has `rows` entries.
std::vector<Integer> smith_invariant_factors(int rows, int cols, const std::vector<std::int64_t>& entries);

// A rational w with w·a_j >= 1 for every column, found by Fourier-Motzkin
// elimination and back substitution; nullopt if none exists.
std::optional<RationalVector> pointing_functional(int rows, int cols, const std::vector<std::int64_t>& entries);

// First row all ones, the rest drawn from 1..4n, resampled until valid.
// Deterministic in the seed on every platform.
GradingMatrix generate_generic(int num_vars, int rows, std::uint64_t seed);

// The linear forms E_i - β_i with E_i = Σ_j a_ij θ_j.
struct EulerSystem {
  GradingMatrix grading;
  RationalVector beta;

  std::string to_string() const;
};

EulerSystem euler_operators(const GradingMatrix& grading, const RationalVector& beta);

// β = A·b.
RationalVector degree_of_point(const GradingMatrix& grading, const RationalVector& point);

}  // namespace expc
