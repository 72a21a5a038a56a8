#include "expc/linalg.hpp"

#include <cctype>
#include <utility>

#include "expc/errors.hpp"

namespace expc {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = slash == std::string_view::npos ? s : s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw ValidationError("not a rational number: '" + std::string(text) + "'");
  }
  std::string num_str(num);
  if (num_str.front() == '+') num_str.erase(0, 1);
  Integer p(num_str, 10);
  Integer q(std::string(den), 10);
  if (q == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

RationalVector parse_rational_list(std::string_view text) {
  RationalVector out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    out.push_back(parse_rational(text.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

RationalVector to_rational(const std::vector<int>& v) {
  RationalVector out;
  out.reserve(v.size());
  for (int x : v) out.emplace_back(x);
  return out;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::vector<std::size_t> row_reduce(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    }
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(RationalMatrix m) { return row_reduce(m).size(); }

std::vector<RationalVector> nullspace(RationalMatrix m) {
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve(RationalMatrix m, const RationalVector& rhs) {
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = rhs[r];
  }
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  RationalVector x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

}  // namespace expc
