#include "expc/polynomial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "expc/errors.hpp"

namespace expc {

Monomial::Monomial(const std::vector<int>& exps) {
  if (exps.size() > kMaxVars) throw ValidationError("too many variables for the polynomial engine");
  for (std::size_t i = 0; i < exps.size(); ++i) set(static_cast<int>(i), exps[i]);
}

void Monomial::set(int i, int e) {
  if (e < 0 || e > 255) throw DomainError("exponent out of range for the polynomial engine");
  degree_ += e - exps_[i];
  exps_[i] = static_cast<std::uint8_t>(e);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (int i = 0; i < kMaxVars; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (int i = 0; i < kMaxVars; ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  for (int i = 0; i < kMaxVars; ++i) {
    const int e = exps_[i] + other.exps_[i];
    if (e > 255) throw DomainError("exponent overflow in the polynomial engine");
    out.exps_[i] = static_cast<std::uint8_t>(e);
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial out;
  for (int i = 0; i < kMaxVars; ++i) out.exps_[i] = static_cast<std::uint8_t>(exps_[i] - divisor.exps_[i]);
  out.degree_ = degree_ - divisor.degree_;
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (int i = 0; i < kMaxVars; ++i) {
    out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    out.degree_ += out.exps_[i];
  }
  return out;
}

bool degrevlex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  for (int i = Monomial::kMaxVars - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
  if (c == 0) return {};
  return RationalPolynomial({Term{Monomial(), c}});
}

RationalPolynomial RationalPolynomial::variable(int i) {
  Monomial m;
  m.set(i, 1);
  return RationalPolynomial({Term{m, Rational(1)}});
}

RationalPolynomial RationalPolynomial::linear(const RationalVector& coeffs, const Rational& constant_term) {
  std::vector<Term> terms;
  // θ_1 > θ_2 > ... > θ_n > 1 in degrevlex
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    Monomial m;
    m.set(static_cast<int>(i), 1);
    terms.push_back({m, coeffs[i]});
  }
  if (constant_term != 0) terms.push_back({Monomial(), constant_term});
  return RationalPolynomial(std::move(terms));
}

RationalPolynomial RationalPolynomial::axpy(const RationalPolynomial& a, const Rational& c, const Monomial& m,
                                            const RationalPolynomial& b) {
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size()) {
      out.push_back(a.terms_[i++]);
      continue;
    }
    const Monomial bm = b.terms_[j].monomial * m;
    if (i == a.terms_.size() || degrevlex_greater(bm, a.terms_[i].monomial)) {
      out.push_back({bm, c * b.terms_[j].coeff});
      ++j;
    } else if (a.terms_[i].monomial == bm) {
      Rational v = a.terms_[i].coeff + c * b.terms_[j].coeff;
      if (v != 0) out.push_back({bm, std::move(v)});
      ++i;
      ++j;
    } else {
      out.push_back(a.terms_[i++]);
    }
  }
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& other) const {
  return axpy(*this, Rational(1), Monomial(), other);
}

RationalPolynomial RationalPolynomial::operator-(const RationalPolynomial& other) const {
  return axpy(*this, Rational(-1), Monomial(), other);
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& other) const {
  RationalPolynomial out;
  for (const auto& t : terms_) out = axpy(out, t.coeff, t.monomial, other);
  return out;
}

RationalPolynomial RationalPolynomial::scaled(const Rational& c, const Monomial& m) const {
  return axpy(RationalPolynomial(), c, m, *this);
}

void RationalPolynomial::make_monic() {
  if (terms_.empty()) return;
  const Rational inv = 1 / terms_.front().coeff;
  for (auto& t : terms_) t.coeff *= inv;
}

std::string RationalPolynomial::to_string(int num_vars, const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    std::string mono;
    for (int i = 0; i < num_vars; ++i) {
      if (t.monomial[i] == 0) continue;
      mono += var + std::to_string(i + 1);
      if (t.monomial[i] > 1) mono += "^" + std::to_string(t.monomial[i]);
    }
    if (mono.empty()) {
      out += format_rational(c);
    } else {
      out += (c == 1 ? "" : format_rational(c)) + mono;
    }
  }
  return out;
}

bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

RationalPolynomial normal_form(const RationalPolynomial& f, const std::vector<RationalPolynomial>& basis) {
  std::vector<Term> remainder;
  RationalPolynomial p = f;
  while (!p.is_zero()) {
    const Term& lt = p.leading();
    const RationalPolynomial* reducer = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && g.leading().monomial.divides(lt.monomial)) {
        reducer = &g;
        break;
      }
    }
    if (reducer) {
      const Rational c = -lt.coeff / reducer->leading().coeff;
      p = RationalPolynomial::axpy(p, c, lt.monomial / reducer->leading().monomial, *reducer);
    } else {
      remainder.push_back(lt);
      p.terms_.erase(p.terms_.begin());
    }
  }
  return RationalPolynomial(std::move(remainder));
}

std::vector<RationalPolynomial> groebner_basis(std::vector<RationalPolynomial> gens, int num_vars) {
  if (num_vars > Monomial::kMaxVars) throw ValidationError("too many variables for the polynomial engine");
  std::vector<RationalPolynomial> basis;
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  auto add = [&](RationalPolynomial h) {
    h.make_monic();
    const std::size_t k = basis.size();
    basis.push_back(std::move(h));
    for (std::size_t i = 0; i < k; ++i) pairs.insert({i, k});
  };
  for (auto& g : gens) {
    RationalPolynomial h = normal_form(g, basis);
    if (!h.is_zero()) add(std::move(h));
  }

  while (!pairs.empty()) {
    // normal strategy: smallest lcm first
    auto best = pairs.begin();
    Monomial best_lcm = Monomial::lcm(basis[best->first].leading().monomial, basis[best->second].leading().monomial);
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
      const Monomial l = Monomial::lcm(basis[it->first].leading().monomial, basis[it->second].leading().monomial);
      if (degrevlex_greater(best_lcm, l)) {
        best = it;
        best_lcm = l;
      }
    }
    const auto [i, j] = *best;
    pairs.erase(best);
    const Monomial& li = basis[i].leading().monomial;
    const Monomial& lj = basis[j].leading().monomial;
    if (li.coprime(lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j || basis[k].is_zero()) continue;
      if (!basis[k].leading().monomial.divides(best_lcm)) continue;
      const auto pik = std::make_pair(std::min(i, k), std::max(i, k));
      const auto pjk = std::make_pair(std::min(j, k), std::max(j, k));
      chain = !pairs.count(pik) && !pairs.count(pjk);
    }
    if (chain) continue;
    const RationalPolynomial s = basis[i].scaled(Rational(1), best_lcm / li) -
                                 basis[j].scaled(Rational(1), best_lcm / lj);
    RationalPolynomial h = normal_form(s, basis);
    if (!h.is_zero()) add(std::move(h));
  }

  // minimal basis, then interreduce
  std::vector<RationalPolynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& mi = basis[i].leading().monomial;
      const Monomial& mj = basis[j].leading().monomial;
      redundant = mj.divides(mi) && (!(mi == mj) || j < i);
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<RationalPolynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    minimal[i] = normal_form(minimal[i], others);
    minimal[i].make_monic();
  }
  std::sort(minimal.begin(), minimal.end(), [](const RationalPolynomial& a, const RationalPolynomial& b) {
    return degrevlex_greater(b.leading().monomial, a.leading().monomial);
  });
  return minimal;
}

}  // namespace expc
