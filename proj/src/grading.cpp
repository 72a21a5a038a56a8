#include "expc/grading.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>

#include "expc/errors.hpp"

namespace expc {

std::vector<Integer> smith_invariant_factors(int rows, int cols, const std::vector<std::int64_t>& entries) {
  std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m[r][c] = Integer(static_cast<long>(entries[r * cols + c]));

  std::vector<Integer> diag;
  const int steps = std::min(rows, cols);
  for (int t = 0; t < steps; ++t) {
    while (true) {
      // smallest nonzero entry of the trailing block becomes the pivot
      int pr = -1, pc = -1;
      for (int r = t; r < rows; ++r)
        for (int c = t; c < cols; ++c)
          if (m[r][c] != 0 && (pr < 0 || abs(m[r][c]) < abs(m[pr][pc]))) pr = r, pc = c;
      if (pr < 0) break;
      std::swap(m[t], m[pr]);
      for (int r = 0; r < rows; ++r) std::swap(m[r][t], m[r][pc]);

      bool clean = true;
      for (int r = t + 1; r < rows; ++r) {
        const Integer q = m[r][t] / m[t][t];
        for (int c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
        clean = clean && m[r][t] == 0;
      }
      for (int c = t + 1; c < cols; ++c) {
        const Integer q = m[t][c] / m[t][t];
        for (int r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
        clean = clean && m[t][c] == 0;
      }
      if (!clean) continue;
      // enforce the divisibility chain
      int bad_r = -1;
      for (int r = t + 1; r < rows && bad_r < 0; ++r)
        for (int c = t + 1; c < cols; ++c)
          if (m[r][c] % m[t][t] != 0) {
            bad_r = r;
            break;
          }
      if (bad_r < 0) break;
      for (int c = t; c < cols; ++c) m[t][c] += m[bad_r][c];
    }
    diag.push_back(abs(m[t][t]));
  }
  while (static_cast<int>(diag.size()) < rows) diag.emplace_back(0);
  return diag;
}

namespace {

// c·w >= rhs
struct Inequality {
  RationalVector coeffs;
  Rational rhs;
};

}  // namespace

std::optional<RationalVector> pointing_functional(int rows, int cols, const std::vector<std::int64_t>& entries) {
  std::vector<Inequality> system;
  for (int j = 0; j < cols; ++j) {
    Inequality ineq{RationalVector(rows), Rational(1)};
    for (int i = 0; i < rows; ++i) ineq.coeffs[i] = Rational(static_cast<long>(entries[i * cols + j]));
    system.push_back(std::move(ineq));
  }
  // stages[k] holds the system before variable k is eliminated
  std::vector<std::vector<Inequality>> stages;
  for (int k = 0; k < rows; ++k) {
    stages.push_back(system);
    std::vector<Inequality> lower, upper, next;
    for (auto& q : system) {
      if (q.coeffs[k] > 0) {
        lower.push_back(q);
      } else if (q.coeffs[k] < 0) {
        upper.push_back(q);
      } else {
        next.push_back(q);
      }
    }
    for (const auto& lo : lower) {
      for (const auto& hi : upper) {
        // scale so the w_k coefficients cancel
        const Rational a = -hi.coeffs[k];
        const Rational b = lo.coeffs[k];
        Inequality combo{RationalVector(rows), a * lo.rhs + b * hi.rhs};
        for (int i = 0; i < rows; ++i) combo.coeffs[i] = a * lo.coeffs[i] + b * hi.coeffs[i];
        combo.coeffs[k] = 0;
        next.push_back(std::move(combo));
      }
    }
    system = std::move(next);
  }
  for (const auto& q : system) {
    if (q.rhs > 0) return std::nullopt;
  }
  RationalVector w(rows);
  for (int k = rows - 1; k >= 0; --k) {
    std::optional<Rational> lo, hi;
    for (const auto& q : stages[k]) {
      if (q.coeffs[k] == 0) continue;
      Rational rest = q.rhs;
      for (int i = k + 1; i < rows; ++i) rest -= q.coeffs[i] * w[i];
      const Rational bound = rest / q.coeffs[k];
      if (q.coeffs[k] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    w[k] = lo ? *lo : (hi ? *hi : Rational(0));
  }
  return w;
}

GradingValidation validate(int rows, int cols, const std::vector<std::int64_t>& entries) {
  if (rows < 1 || cols < rows) throw ValidationError("grading matrix needs 1 <= d <= n");
  if (static_cast<int>(entries.size()) != rows * cols) {
    throw ValidationError("grading matrix has " + std::to_string(entries.size()) + " entries, expected " +
                          std::to_string(rows * cols));
  }
  GradingValidation v;
  const auto factors = smith_invariant_factors(rows, cols, entries);
  v.lattice_ok = std::all_of(factors.begin(), factors.end(), [](const Integer& f) { return f == 1; });
  if (!v.lattice_ok) v.violations.push_back("lattice: columns do not generate Z^d (Smith invariants not all 1)");

  v.pointed_ok = pointing_functional(rows, cols, entries).has_value();
  if (!v.pointed_ok) v.violations.push_back("pointedness: NA ∩ -NA != 0 (no w with w·a_j >= 1 for all j)");

  v.generic_ok = true;
  std::vector<int> pick(rows);
  for (int i = 0; i < rows; ++i) pick[i] = i;
  while (v.generic_ok) {
    RationalMatrix sub(rows, rows);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < rows; ++c) sub(r, c) = Rational(static_cast<long>(entries[r * cols + pick[c]]));
    if (rank(sub) < static_cast<std::size_t>(rows)) {
      std::string cols_text;
      for (int c : pick) cols_text += (cols_text.empty() ? "" : ",") + std::to_string(c + 1);
      v.violations.push_back("genericity: columns {" + cols_text + "} are linearly dependent");
      v.generic_ok = false;
      break;
    }
    int i = rows - 1;
    while (i >= 0 && pick[i] == cols - rows + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < rows; ++j) pick[j] = pick[j - 1] + 1;
  }
  return v;
}

GradingMatrix::GradingMatrix(int rows, int cols, std::vector<std::int64_t> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  const auto v = validate(rows_, cols_, entries_);
  if (!v.ok()) {
    std::string msg = "invalid grading matrix:";
    for (const auto& s : v.violations) msg += " " + s + ";";
    throw ValidationError(msg);
  }
}

RationalMatrix GradingMatrix::to_rational() const {
  RationalMatrix m(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m(r, c) = Rational(static_cast<long>((*this)(r, c)));
  return m;
}

RationalMatrix GradingMatrix::columns(const std::vector<int>& cols) const {
  RationalMatrix m(rows_, cols.size());
  for (int r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) m(r, c) = Rational(static_cast<long>((*this)(r, cols[c])));
  return m;
}

GradingMatrix generate_generic(int num_vars, int rows, std::uint64_t seed) {
  if (rows < 1 || rows > num_vars) throw ValidationError("generate_generic needs 1 <= d <= n");
  std::mt19937_64 rng(seed);
  const std::uint64_t widest = 4 * static_cast<std::uint64_t>(num_vars);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    // Square or nearly square matrices rarely have unit minors with wide
    // entries, so the range cycles through 1..k for k = 2..4n.
    const std::uint64_t span = 2 + static_cast<std::uint64_t>(attempt) % (widest - 1);
    std::vector<std::int64_t> entries(static_cast<std::size_t>(rows) * num_vars, 1);
    for (std::size_t k = num_vars; k < entries.size(); ++k) entries[k] = 1 + static_cast<std::int64_t>(rng() % span);
    if (validate(rows, num_vars, entries).ok()) return GradingMatrix(rows, num_vars, std::move(entries));
  }
  throw std::runtime_error("generate_generic: no valid matrix after 1000 attempts");
}

std::string EulerSystem::to_string() const {
  std::string out;
  for (int i = 0; i < grading.rows(); ++i) {
    std::string row;
    for (int j = 0; j < grading.cols(); ++j) {
      const auto a = grading(i, j);
      if (a == 0) continue;
      const std::string var = "θ" + std::to_string(j + 1);
      const std::string mag = (a == 1 || a == -1) ? var : std::to_string(a < 0 ? -a : a) + var;
      if (row.empty()) {
        row = (a < 0 ? "-" : "") + mag;
      } else {
        row += (a < 0 ? " - " : " + ") + mag;
      }
    }
    if (beta[i] > 0) row += " - " + format_rational(beta[i]);
    if (beta[i] < 0) row += " + " + format_rational(-beta[i]);
    out += (out.empty() ? "" : "; ") + row;
  }
  return out;
}

EulerSystem euler_operators(const GradingMatrix& grading, const RationalVector& beta) {
  if (static_cast<int>(beta.size()) != grading.rows()) {
    throw ValidationError("β has length " + std::to_string(beta.size()) + " but the grading matrix has " +
                          std::to_string(grading.rows()) + " rows");
  }
  return EulerSystem{grading, beta};
}

RationalVector degree_of_point(const GradingMatrix& grading, const RationalVector& point) {
  if (static_cast<int>(point.size()) != grading.cols()) {
    throw ValidationError("point length does not match the grading matrix");
  }
  RationalVector beta(grading.rows());
  for (int i = 0; i < grading.rows(); ++i)
    for (int j = 0; j < grading.cols(); ++j) beta[i] += Rational(static_cast<long>(grading(i, j))) * point[j];
  return beta;
}

}  // namespace expc
