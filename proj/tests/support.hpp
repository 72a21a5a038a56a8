#pragma once

// Builders and independent brute-force oracles shared by the unit tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "expc/distraction.hpp"
#include "expc/ideal.hpp"
#include "expc/linalg.hpp"
#include "expc/simplicial.hpp"

namespace testing {

using namespace expc;

// Complex from 1-based facet lists; {{}} is the complex {∅}.
inline SimplicialComplex cx(int n, const std::vector<std::vector<int>>& facets) {
  std::vector<VertexSet> fs;
  for (const auto& f : facets) {
    VertexSet s;
    for (int v : f) s.insert(v - 1);
    fs.push_back(s);
  }
  return SimplicialComplex(n, fs);
}

inline MonomialIdeal ideal(int n, std::vector<ExponentVector> gens) {
  return MonomialIdeal::minimalize(std::move(gens), n);
}

// Ideals of the worked examples.
inline MonomialIdeal ex_small() { return ideal(2, {{3, 1}, {2, 2}}); }
inline MonomialIdeal ex_main() { return ideal(3, {{2, 2, 1}, {1, 2, 2}}); }
inline MonomialIdeal ex_radcm() {
  return ideal(5, {{1, 0, 0, 1, 0}, {0, 1, 0, 1, 0}, {0, 1, 1, 0, 0}, {1, 0, 1, 0, 1}, {0, 0, 0, 0, 2}});
}
// m_i = Π_{j≠i} x_j^k
inline MonomialIdeal ex_family(int n, int k) {
  std::vector<ExponentVector> gens;
  for (int i = 0; i < n; ++i) {
    ExponentVector u(n, k);
    u[i] = 0;
    gens.push_back(u);
  }
  return ideal(n, gens);
}

inline std::vector<std::vector<int>> facet_labels(const SimplicialComplex& c) {
  std::vector<std::vector<int>> out;
  for (VertexSet f : c.facets()) out.push_back(f.labels());
  std::sort(out.begin(), out.end());
  return out;
}

// All faces by brute force over the 2^n vertex subsets.
inline std::vector<std::vector<VertexSet>> faces_by_size(const SimplicialComplex& c) {
  std::vector<std::vector<VertexSet>> out(c.num_vertices() + 1);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << c.num_vertices()); ++m) {
    const VertexSet s(m);
    if (std::any_of(c.facets().begin(), c.facets().end(), [s](VertexSet f) { return s.subset_of(f); })) {
      out[s.size()].push_back(s);
    }
  }
  return out;
}

// Dense rank over Q with a plain elimination, independent of the library's
// linear algebra.
inline long dense_rank(std::vector<std::vector<mpq_class>> m) {
  long rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<long>(m.size()); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Reduced homology ranks from dense boundary matrices, degrees -1..dim.
inline std::vector<long> brute_homology(const SimplicialComplex& c) {
  const auto faces = faces_by_size(c);
  const int top = c.dimension();
  std::vector<long> boundary_rank(faces.size() + 1, 0);  // rank of ∂ from size k to size k-1
  for (std::size_t k = 1; k < faces.size(); ++k) {
    if (faces[k].empty() || faces[k - 1].empty()) continue;
    std::vector<std::vector<mpq_class>> m(faces[k - 1].size(), std::vector<mpq_class>(faces[k].size()));
    for (std::size_t j = 0; j < faces[k].size(); ++j) {
      int sign = 1;
      for (int v : faces[k][j].indices()) {
        VertexSet down = faces[k][j];
        down.erase(v);
        const auto pos = std::find(faces[k - 1].begin(), faces[k - 1].end(), down) - faces[k - 1].begin();
        m[pos][j] = sign;
        sign = -sign;
      }
    }
    boundary_rank[k] = dense_rank(m);
  }
  std::vector<long> out;
  for (int deg = -1; deg <= top; ++deg) {
    const std::size_t k = deg + 1;
    out.push_back(static_cast<long>(faces[k].size()) - boundary_rank[k] - boundary_rank[k + 1]);
  }
  return out;
}

// σ ∈ Δ_b iff every generator u has some i ∉ σ with b_i an integer in
// [0, u_i). Facets of that family, as 1-based lists.
inline std::vector<std::vector<int>> direct_exponent_facets(const MonomialIdeal& I, const std::vector<int>& b) {
  const int n = I.num_vars();
  std::vector<VertexSet> faces;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    const VertexSet s(m);
    bool ok = true;
    for (const auto& u : I.generators()) {
      bool hit = false;
      for (int i = 0; i < n && !hit; ++i) hit = !s.contains(i) && b[i] >= 0 && b[i] < u[i];
      ok = ok && hit;
    }
    if (ok) faces.push_back(s);
  }
  std::vector<std::vector<int>> out;
  for (VertexSet f : faces) {
    const bool maximal = std::none_of(faces.begin(), faces.end(), [f](VertexSet g) { return g != f && f.subset_of(g); });
    if (maximal) out.push_back(f.labels());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Components by brute force: every covering (σ, base) pair in the box, kept
// when no other covering pair's set strictly contains it.
inline std::vector<Component> brute_components(const MonomialIdeal& I) {
  const int n = I.num_vars();
  const auto top = join(I);
  std::vector<Component> cover;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    const VertexSet sigma(m);
    std::vector<int> base(n, 0);
    while (true) {
      if (covers(I, sigma, base)) cover.push_back({sigma, base});
      int k = n - 1;
      for (; k >= 0; --k) {
        if (sigma.contains(k)) continue;
        if (++base[k] < std::max(top[k], 1)) break;
        base[k] = 0;
      }
      if (k < 0) break;
    }
  }
  auto inside = [](const Component& a, const Component& b) {
    if (!a.sigma.subset_of(b.sigma)) return false;
    for (std::size_t i = 0; i < a.base.size(); ++i) {
      if (!b.sigma.contains(static_cast<int>(i)) && a.base[i] != b.base[i]) return false;
    }
    return true;
  };
  std::vector<Component> out;
  for (const auto& a : cover) {
    const bool maximal = std::none_of(cover.begin(), cover.end(), [&](const Component& b) { return !(a == b) && inside(a, b); });
    if (maximal) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace testing
