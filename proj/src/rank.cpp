#include "expc/rank.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "expc/distraction.hpp"
#include "expc/errors.hpp"

namespace expc {

std::int64_t binomial(std::int64_t m, std::int64_t k) {
  if (m < 0 || k < 0 || k > m) return 0;
  k = std::min(k, m - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (m - k + i) / i;
  return r;
}

// ---- FacetLattice ------------------------------------------------------------

FacetLattice::FacetLattice(const SimplicialComplex& complex, int d) : facets_(complex.facets()), d_(d) {
  if (d < 0) throw ValidationError("target dimension d must be nonnegative");
  for (VertexSet f : facets_) {
    if (f.size() > d) {
      throw DomainError("facet " + f.to_string() + " has more than d = " + std::to_string(d) + " vertices");
    }
  }
  if (facets_.size() > static_cast<std::size_t>(FacetSet::kCapacity) - 1) {
    throw DomainError("too many facets for the rank formula");
  }
}

VertexSet FacetLattice::sigma(FacetSet s) const {
  VertexSet out = VertexSet(~std::uint64_t{0});
  for (int i : s.indices()) out = out & facets_[i];
  return out;
}

int FacetLattice::kappa_of_union(VertexSet vertices) const { return std::max(0, d_ - vertices.size()); }

int FacetLattice::kappa(const std::vector<FacetSet>& family) const {
  VertexSet u;
  for (FacetSet s : family) u = u | sigma(s);
  return kappa_of_union(u);
}

std::vector<FacetSet> FacetLattice::level(int p) const {
  std::vector<FacetSet> out;
  if (p < 0 || p + 1 > num_facets()) return out;
  // masks with p+1 bits below 2^m, in increasing order
  const std::uint64_t limit = FacetSet::range(num_facets()).bits();
  std::uint64_t mask = FacetSet::range(p + 1).bits();
  while (true) {
    out.push_back(FacetSet(mask));
    const std::uint64_t low = mask & (~mask + 1);
    const std::uint64_t ripple = mask + low;
    if (ripple == 0 || ripple > limit) break;
    mask = ripple | (((mask ^ ripple) >> 2) / low);
    if (mask > limit) break;
  }
  return out;
}

std::vector<FacetSet> FacetLattice::g_level(int p) const {
  std::vector<FacetSet> out;
  for (FacetSet s : level(p)) {
    if (kappa(s) >= p + 1) out.push_back(s);
  }
  return out;
}

// ---- circuits ------------------------------------------------------------------

namespace {

// Columns are δ(s*) for s in `faces`, expressed in the (p+1)-cochains of Ω.
RationalMatrix coboundary_matrix(int omega_vertices, const std::vector<FacetSet>& faces) {
  std::map<std::uint64_t, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, int>>> cols;
  for (FacetSet s : faces) {
    std::vector<std::pair<std::size_t, int>> col;
    for (int v = 0; v < omega_vertices; ++v) {
      if (s.contains(v)) continue;
      const FacetSet up = s | FacetSet::singleton(v);
      const int below = (s & FacetSet::range(v)).size();
      const auto [it, fresh] = row_of.try_emplace(up.bits(), row_of.size());
      col.emplace_back(it->second, below % 2 == 0 ? 1 : -1);
    }
    cols.push_back(std::move(col));
  }
  RationalMatrix m(row_of.size(), faces.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [r, v] : cols[c]) m(r, c) = v;
  return m;
}

void check_faces(int omega_vertices, const std::vector<FacetSet>& faces) {
  if (faces.empty()) throw DomainError("a circuit needs at least one member");
  const int size = faces.front().size();
  std::set<std::uint64_t> seen;
  for (FacetSet s : faces) {
    if (s.size() != size || s.empty()) throw DomainError("circuit members must be faces of one dimension");
    if (!s.subset_of(FacetSet::range(omega_vertices))) throw DomainError("circuit member outside Ω");
    if (!seen.insert(s.bits()).second) throw DomainError("circuit members must be distinct");
  }
}

}  // namespace

std::optional<CircuitCertificate> is_circuit(int omega_vertices, const std::vector<FacetSet>& members,
                                             FacetSet target) {
  check_faces(omega_vertices, members);
  const auto pos = std::find(members.begin(), members.end(), target);
  if (pos == members.end()) throw DomainError("circuit target is not a member");
  const auto kernel = nullspace(coboundary_matrix(omega_vertices, members));
  if (kernel.size() != 1) return std::nullopt;
  const RationalVector& v = kernel.front();
  if (std::any_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; })) return std::nullopt;
  const Rational scale = 1 / v[pos - members.begin()];
  CircuitCertificate cert{members, target, {}};
  for (const auto& x : v) cert.coefficients.push_back(x * scale);
  return cert;
}

std::vector<std::vector<FacetSet>> circuits_for(int omega_vertices, const std::vector<FacetSet>& ground,
                                                FacetSet target) {
  check_faces(omega_vertices, ground);
  const auto tpos = std::find(ground.begin(), ground.end(), target);
  if (tpos == ground.end()) throw DomainError("circuit target is not in the ground set");
  const std::size_t t = static_cast<std::size_t>(tpos - ground.begin());
  const std::size_t g = ground.size();

  // Circuits are the minimal supports of the kernel of the coboundary
  // columns. Walk the coordinates, either forcing each one to zero or
  // requiring it in the support; a path ends once the constrained kernel is
  // a line.
  using Basis = std::vector<RationalVector>;
  std::vector<std::vector<FacetSet>> out;
  auto column_nonzero = [](const Basis& b, std::size_t e) {
    return std::any_of(b.begin(), b.end(), [e](const RationalVector& r) { return r[e] != 0; });
  };
  std::function<void(const Basis&, std::size_t, const std::vector<std::size_t>&)> walk =
      [&](const Basis& basis, std::size_t next, const std::vector<std::size_t>& required) {
        if (basis.empty() || !column_nonzero(basis, t)) return;
        for (std::size_t r : required) {
          if (!column_nonzero(basis, r)) return;
        }
        if (basis.size() == 1) {
          std::vector<FacetSet> members;
          for (std::size_t e = 0; e < g; ++e) {
            if (basis.front()[e] != 0) members.push_back(ground[e]);
          }
          out.push_back(std::move(members));
          return;
        }
        std::size_t e = next;
        while (e < g && (e == t || !column_nonzero(basis, e))) ++e;
        if (e == g) return;
        // force coordinate e to zero
        Basis reduced = basis;
        const auto piv = std::find_if(reduced.begin(), reduced.end(), [e](const RationalVector& r) { return r[e] != 0; });
        const RationalVector pivot = *piv;
        reduced.erase(piv);
        for (auto& row : reduced) {
          if (row[e] == 0) continue;
          const Rational f = row[e] / pivot[e];
          for (std::size_t k = 0; k < g; ++k) row[k] -= f * pivot[k];
        }
        walk(reduced, e + 1, required);
        // or keep it in the support
        auto with_e = required;
        with_e.push_back(e);
        walk(basis, e + 1, with_e);
      };
  walk(nullspace(coboundary_matrix(omega_vertices, ground)), 0, {});
  return out;
}

// ---- ψ and the two rank formulas --------------------------------------------

std::int64_t psi(int p, const FacetLattice& lattice, const std::vector<FacetSet>& order) {
  const int m = lattice.num_facets();
  if (order.size() < 2) return 0;
  const int bound = lattice.d() - p - 1;  // live circuits have |∪σ| <= bound
  std::int64_t total = 0;
  for (std::size_t j = 1; j < order.size(); ++j) {
    const FacetSet target = order[j];
    const VertexSet target_sigma = lattice.sigma(target);
    // Circuits whose σ-union exceeds the bound give C(κ, p+1) = 0 for every
    // family containing them, so the ground set can be trimmed up front.
    std::vector<FacetSet> ground;
    for (std::size_t i = 0; i <= j; ++i) {
      if ((lattice.sigma(order[i]) | target_sigma).size() <= bound) ground.push_back(order[i]);
    }
    if (target_sigma.size() > bound || ground.size() < 2) continue;
    std::vector<VertexSet> unions;
    for (const auto& circuit : circuits_for(m, ground, target)) {
      VertexSet u;
      for (FacetSet s : circuit) u = u | lattice.sigma(s);
      if (u.size() <= bound) unions.push_back(u);
    }
    if (unions.empty()) continue;
    // Inclusion-exclusion over nonempty families Λ of circuits; the summand
    // only depends on the union of the σ's, so fold families by that union.
    std::map<std::uint64_t, std::int64_t> weight{{0, 1}};  // Σ (-1)^|Λ|
    for (VertexSet u : unions) {
      auto next = weight;
      for (const auto& [mask, w] : weight) next[mask | u.bits()] -= w;
      weight = std::move(next);
    }
    std::int64_t signed_sum = 0;
    for (const auto& [mask, w] : weight) {
      signed_sum += w * binomial(lattice.kappa_of_union(VertexSet(mask)), p + 1);
    }
    signed_sum -= binomial(lattice.kappa_of_union(VertexSet()), p + 1);  // empty family
    total += -signed_sum;
  }
  return total;
}

std::int64_t psi(int p, const FacetLattice& lattice) { return psi(p, lattice, lattice.g_level(p)); }

std::int64_t rank_squarefree_closed(const SimplicialComplex& complex, int d) {
  const FacetLattice lattice(complex, d);
  const int m = lattice.num_facets();
  if (m == 1) return 1;
  std::int64_t deg = 0;
  for (FacetSet s : lattice.level(0)) deg += lattice.kappa(s) == 0 ? 1 : 0;
  const std::int64_t top = binomial(lattice.kappa(FacetSet::range(m)) - 1, m - 1);
  std::int64_t correction = 0;
  std::int64_t psi_total = 0;
  for (int p = 0; p <= m - 2; ++p) {
    for (FacetSet s : lattice.g_level(p)) correction += binomial(lattice.kappa(s) - 1, p + 1);
    psi_total += psi(p, lattice);
  }
  return deg + top - correction + psi_total;
}

std::int64_t rank_squarefree_spectral(const SimplicialComplex& complex, int d) {
  const FacetLattice lattice(complex, d);
  const int m = lattice.num_facets();
  std::int64_t alternating = 0;
  for (int p = 0; p < m; ++p) {
    const auto fp = lattice.level(p);
    for (int q = 0; q <= std::min(p, d); ++q) {
      std::int64_t page = 0;
      for (FacetSet s : fp) page += binomial(lattice.kappa(s), q);
      alternating += ((p - q) % 2 == 0 ? 1 : -1) * page;
    }
  }
  std::int64_t images = 0;
  for (int p = 0; p <= m - 2; ++p) {
    std::int64_t image = -psi(p, lattice);
    for (FacetSet s : lattice.g_level(p)) image += binomial(lattice.kappa(s), p + 1);
    images += image;
  }
  return alternating - images;
}

// ---- general monomial ideals ------------------------------------------------------

std::vector<RationalVector> exponents_of(const MonomialIdeal& ideal, const GradingMatrix& grading,
                                         const RationalVector& beta) {
  const int n = ideal.num_vars();
  if (grading.cols() != n) throw ValidationError("grading matrix width does not match the ideal");
  if (grading.rows() != krull_dimension(ideal)) {
    throw ValidationError("grading matrix has " + std::to_string(grading.rows()) +
                          " rows but the ideal has Krull dimension " + std::to_string(krull_dimension(ideal)));
  }
  euler_operators(grading, beta);  // length check
  std::set<RationalVector> points;
  for (const auto& c : components(ideal)) {
    RationalVector rhs = beta;
    const RationalVector shift = degree_of_point(grading, to_rational(c.base));
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] -= shift[i];
    const auto free = c.sigma.indices();
    const auto t = solve(grading.columns(free), rhs);
    if (!t) continue;
    RationalVector point = to_rational(c.base);
    for (std::size_t k = 0; k < free.size(); ++k) point[free[k]] = (*t)[k];
    points.insert(std::move(point));
  }
  return {points.begin(), points.end()};
}

std::vector<ExponentContribution> rank_contributions(const MonomialIdeal& ideal, const GradingMatrix& grading,
                                                     const RationalVector& beta) {
  const auto comps = components(ideal);
  std::vector<ExponentContribution> out;
  for (auto& point : exponents_of(ideal, grading, beta)) {
    auto complex = *exponent_complex_at(ideal.num_vars(), comps, point);
    const auto closed = rank_squarefree_closed(complex, grading.rows());
    const auto spectral = rank_squarefree_spectral(complex, grading.rows());
    out.push_back({std::move(point), std::move(complex), closed, spectral});
  }
  return out;
}

std::int64_t rank_general(const MonomialIdeal& ideal, const GradingMatrix& grading, const RationalVector& beta) {
  std::int64_t total = 0;
  const auto comps = components(ideal);
  for (const auto& point : exponents_of(ideal, grading, beta)) {
    total += rank_squarefree_closed(*exponent_complex_at(ideal.num_vars(), comps, point), grading.rows());
  }
  return total;
}

}  // namespace expc
