#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "expc/linalg.hpp"

namespace expc {

// Exponent vector of a monomial in θ with a cached total degree. Capacity
// is fixed so monomials stay trivially copyable.
class Monomial {
 public:
  static constexpr int kMaxVars = 16;

  Monomial() = default;
  explicit Monomial(const std::vector<int>& exps);

  int operator[](int i) const { return exps_[i]; }
  int degree() const { return degree_; }
  void set(int i, int e);

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Exact quotient; requires divisor | *this.
  Monomial operator/(const Monomial& divisor) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint8_t, kMaxVars> exps_{};
  int degree_ = 0;
};

// Degree reverse lexicographic order: true when a > b.
bool degrevlex_greater(const Monomial& a, const Monomial& b);

struct Term {
  Monomial monomial;
  Rational coeff;
};

// Polynomial over Q with terms in strictly decreasing degrevlex order and no
// zero coefficients.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  static RationalPolynomial constant(const Rational& c);
  static RationalPolynomial variable(int i);
  // Σ coeffs[i] θ_i + constant
  static RationalPolynomial linear(const RationalVector& coeffs, const Rational& constant_term);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }

  RationalPolynomial operator+(const RationalPolynomial& other) const;
  RationalPolynomial operator-(const RationalPolynomial& other) const;
  RationalPolynomial operator*(const RationalPolynomial& other) const;
  RationalPolynomial scaled(const Rational& c, const Monomial& m) const;
  void make_monic();

  std::string to_string(int num_vars, const std::string& var = "θ") const;

  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b);

 private:
  explicit RationalPolynomial(std::vector<Term> terms) : terms_(std::move(terms)) {}
  // a + c*m*b, merged
  static RationalPolynomial axpy(const RationalPolynomial& a, const Rational& c, const Monomial& m,
                                 const RationalPolynomial& b);

  std::vector<Term> terms_;

  friend RationalPolynomial normal_form(const RationalPolynomial&, const std::vector<RationalPolynomial>&);
};

// Full reduction of f by a list of polynomials.
RationalPolynomial normal_form(const RationalPolynomial& f, const std::vector<RationalPolynomial>& basis);

// Reduced Gröbner basis under degrevlex (Buchberger, normal selection
// strategy, coprime and chain criteria).
std::vector<RationalPolynomial> groebner_basis(std::vector<RationalPolynomial> gens, int num_vars);

}  // namespace expc
