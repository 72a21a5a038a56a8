#include "expc/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "expc/distraction.hpp"
#include "expc/errors.hpp"

namespace expc {

std::vector<RationalPolynomial> expand_distraction(const MonomialIdeal& ideal) {
  std::vector<RationalPolynomial> out;
  for (const auto& gen : distraction_generators(ideal)) {
    RationalPolynomial p = RationalPolynomial::constant(Rational(1));
    for (const auto& f : gen) {
      p = p * (RationalPolynomial::variable(f.variable) - RationalPolynomial::constant(Rational(f.shift)));
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<RationalPolynomial> euler_polynomials(const GradingMatrix& grading, const RationalVector& beta) {
  const EulerSystem system = euler_operators(grading, beta);
  std::vector<RationalPolynomial> out;
  for (int i = 0; i < grading.rows(); ++i) {
    RationalVector row(grading.cols());
    for (int j = 0; j < grading.cols(); ++j) row[j] = Rational(static_cast<long>(grading(i, j)));
    out.push_back(RationalPolynomial::linear(row, -system.beta[i]));
  }
  return out;
}

std::int64_t count_standard_monomials(const std::vector<RationalPolynomial>& basis, int num_vars) {
  std::vector<Monomial> leads;
  for (const auto& g : basis) leads.push_back(g.leading().monomial);
  for (const auto& m : leads) {
    if (m.degree() == 0) return 0;  // unit ideal
  }
  std::vector<int> bound(num_vars, -1);
  for (const auto& m : leads) {
    int var = -1;
    for (int i = 0; i < num_vars; ++i) {
      if (m[i] == 0) continue;
      var = var < 0 ? i : -2;
    }
    if (var >= 0 && (bound[var] < 0 || m[var] < bound[var])) bound[var] = m[var];
  }
  for (int i = 0; i < num_vars; ++i) {
    if (bound[i] < 0) throw DomainError("quotient is not zero-dimensional (no pure power of θ" +
                                        std::to_string(i + 1) + " among leading terms)");
  }
  std::int64_t count = 0;
  Monomial current;
  std::function<void(int)> walk = [&](int var) {
    if (var == num_vars) {
      ++count;
      return;
    }
    for (int e = 0; e < bound[var]; ++e) {
      current.set(var, e);
      // once divisible, every larger exponent in this variable is too
      bool blocked = false;
      for (const auto& m : leads) {
        bool div = true;
        for (int i = 0; i <= var && div; ++i) div = m[i] <= current[i];
        for (int i = var + 1; i < num_vars && div; ++i) div = m[i] == 0;
        if (div) {
          blocked = true;
          break;
        }
      }
      if (blocked) break;
      walk(var + 1);
    }
    current.set(var, 0);
  };
  walk(0);
  return count;
}

std::int64_t buchberger_dimension(const std::vector<RationalPolynomial>& gens, int num_vars) {
  return count_standard_monomials(groebner_basis(gens, num_vars), num_vars);
}

namespace {

// Monomials of total degree `degree` whose support contains no generator
// support of the squarefree ideal.
std::vector<std::vector<int>> standard_monomials_of_degree(const MonomialIdeal& squarefree, int degree) {
  const int n = squarefree.num_vars();
  std::vector<VertexSet> nonfaces;
  for (const auto& u : squarefree.generators()) nonfaces.push_back(support(u));
  std::vector<std::vector<int>> out;
  std::vector<int> exps(n, 0);
  std::function<void(int, int, VertexSet)> rec = [&](int var, int left, VertexSet supp) {
    if (var == n - 1) {
      exps[var] = left;
      VertexSet s = supp;
      if (left > 0) s.insert(var);
      if (std::none_of(nonfaces.begin(), nonfaces.end(), [s](VertexSet g) { return g.subset_of(s); })) {
        out.push_back(exps);
      }
      exps[var] = 0;
      return;
    }
    for (int e = left; e >= 0; --e) {
      exps[var] = e;
      VertexSet s = supp;
      if (e > 0) s.insert(var);
      if (std::none_of(nonfaces.begin(), nonfaces.end(), [s](VertexSet g) { return g.subset_of(s); })) {
        rec(var + 1, left - e, s);
      }
    }
    exps[var] = 0;
  };
  rec(0, degree, VertexSet());
  return out;
}

}  // namespace

std::int64_t graded_artinian_dimension(const MonomialIdeal& squarefree, const GradingMatrix& grading) {
  if (!is_squarefree(squarefree)) throw ValidationError("graded_artinian_dimension needs a squarefree ideal");
  const int n = squarefree.num_vars();
  if (grading.cols() != n) throw ValidationError("grading matrix width does not match the ideal");
  std::int64_t total = 1;  // degree 0
  std::vector<std::vector<int>> previous = standard_monomials_of_degree(squarefree, 0);
  for (int t = 1;; ++t) {
    if (t > n + 1) throw DomainError("J + <E> is not Artinian: quotient survives past degree n+1");
    const auto current = standard_monomials_of_degree(squarefree, t);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t k = 0; k < current.size(); ++k) index.emplace(current[k], k);
    RationalMatrix m(previous.size() * grading.rows(), current.size());
    std::size_t row = 0;
    for (const auto& mono : previous) {
      for (int i = 0; i < grading.rows(); ++i, ++row) {
        for (int j = 0; j < n; ++j) {
          if (grading(i, j) == 0) continue;
          auto shifted = mono;
          ++shifted[j];
          const auto it = index.find(shifted);
          if (it != index.end()) m(row, it->second) += Rational(static_cast<long>(grading(i, j)));
        }
      }
    }
    const auto dim_t = static_cast<std::int64_t>(current.size() - rank(std::move(m)));
    if (dim_t == 0) return total;
    total += dim_t;
    previous = current;
  }
}

std::int64_t rank_oracle(const MonomialIdeal& ideal, const GradingMatrix& grading, const RationalVector& beta) {
  if (grading.cols() != ideal.num_vars()) throw ValidationError("grading matrix width does not match the ideal");
  auto gens = euler_polynomials(grading, beta);
  for (auto& p : expand_distraction(ideal)) gens.push_back(std::move(p));
  return buchberger_dimension(gens, ideal.num_vars());
}

RationalVector generic_parameter(int rows, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  RationalVector beta(rows);
  for (auto& b : beta) {
    const long num = static_cast<long>(rng() % 2000001) - 1000000;
    const long den = 1 + static_cast<long>(rng() % 997);
    b = Rational(num, den);
    b.canonicalize();
  }
  return beta;
}

std::vector<ExceptionalParameter> exceptional_scan(const MonomialIdeal& ideal, const GradingMatrix& grading,
                                                   std::uint64_t seed) {
  const int n = ideal.num_vars();
  if (grading.cols() != n) throw ValidationError("grading matrix width does not match the ideal");
  if (grading.rows() != krull_dimension(ideal)) {
    throw ValidationError("grading matrix has " + std::to_string(grading.rows()) + " rows but the ideal has dimension " +
                          std::to_string(krull_dimension(ideal)));
  }
  const auto comps = components(ideal);
  const ExponentVector top = join(ideal);
  std::set<RationalVector> candidates;
  std::vector<int> b(n, -1);
  while (true) {
    const RationalVector point = to_rational(b);
    if (std::any_of(comps.begin(), comps.end(), [&](const Component& c) { return contains_point(c, point); })) {
      candidates.insert(degree_of_point(grading, point));
    }
    int k = n - 1;
    for (; k >= 0; --k) {
      if (++b[k] <= top[k]) break;
      b[k] = -1;
    }
    if (k < 0) break;
  }
  candidates.insert(generic_parameter(grading.rows(), seed));

  const std::int64_t deg = degree(ideal);
  std::vector<ExceptionalParameter> out;
  for (const auto& beta : candidates) {
    const std::int64_t r = rank_oracle(ideal, grading, beta);
    if (r > deg) out.push_back({beta, r, r - deg});
  }
  return out;
}

}  // namespace expc
