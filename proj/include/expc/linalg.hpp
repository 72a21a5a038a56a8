#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace expc {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Parses "3", "-7", "1/2". Throws ValidationError on anything else or a zero
// denominator.
Rational parse_rational(std::string_view text);
// Canonical "p/q" form; integers print without a denominator.
std::string format_rational(const Rational& q);
// Comma-separated rationals, e.g. "1/2,0".
RationalVector parse_rational_list(std::string_view text);

RationalVector to_rational(const std::vector<int>& v);

// Dense matrix over the rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transposed() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m);

std::size_t rank(RationalMatrix m);

// Basis of {x : m x = 0}.
std::vector<RationalVector> nullspace(RationalMatrix m);

// Some solution of m x = rhs, or nullopt if inconsistent. Free variables are
// set to zero.
std::optional<RationalVector> solve(RationalMatrix m, const RationalVector& rhs);

}  // namespace expc
