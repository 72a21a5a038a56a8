#include "expc/simplicial.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "expc/errors.hpp"
#include "expc/linalg.hpp"

namespace expc {

struct SimplicialComplex::FaceCache {
  std::once_flag once;
  std::vector<std::vector<VertexSet>> faces;
};

bool HomologyProfile::acyclic() const {
  return std::all_of(ranks.begin(), ranks.end(), [](const auto& kv) { return kv.second == 0; });
}

namespace {

std::vector<VertexSet> maximal_members(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  // Sorted by size, so only later members can contain earlier ones.
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool covered = false;
    for (std::size_t j = i + 1; j < sets.size() && !covered; ++j) covered = sets[i].subset_of(sets[j]);
    if (!covered) out.push_back(sets[i]);
  }
  return out;
}

// ---- sparse column elimination -------------------------------------------

template <class Coef>
using SparseColumn = std::vector<std::pair<int, Coef>>;  // ascending rows

struct ModPField {
  using value = std::uint64_t;
  static constexpr std::uint64_t kPrime = 2147483629ULL;  // < 2^31

  static value from_int(int x) { return x >= 0 ? value(x) % kPrime : kPrime - (value(-x) % kPrime); }
  static value mul(value a, value b) { return a * b % kPrime; }
  static value sub(value a, value b) { return a >= b ? a - b : a + kPrime - b; }
  static value inverse(value a) {
    value result = 1, base = a, e = kPrime - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
  static bool is_zero(const value& a) { return a == 0; }

  // col -= (col[low] / piv[low]) * piv, where piv is normalized to low 1.
  static void eliminate(SparseColumn<value>& col, const SparseColumn<value>& piv) {
    const value factor = col.back().second;
    SparseColumn<value> out;
    out.reserve(col.size() + piv.size());
    std::size_t i = 0, j = 0;
    while (i < col.size() || j < piv.size()) {
      if (j == piv.size() || (i < col.size() && col[i].first < piv[j].first)) {
        out.push_back(col[i++]);
      } else if (i == col.size() || piv[j].first < col[i].first) {
        out.emplace_back(piv[j].first, sub(0, mul(factor, piv[j].second)));
        ++j;
      } else {
        const value v = sub(col[i].second, mul(factor, piv[j].second));
        if (v != 0) out.emplace_back(col[i].first, v);
        ++i;
        ++j;
      }
    }
    col = std::move(out);
  }
  static void normalize(SparseColumn<value>& col) {
    const value inv = inverse(col.back().second);
    for (auto& [row, v] : col) v = mul(v, inv);
  }
};

// Fraction-free elimination over Z: col := a*col - b*piv, then divide by
// the content so entries stay small.
struct IntegerField {
  using value = Integer;

  static value from_int(int x) { return value(x); }
  static bool is_zero(const value& a) { return a == 0; }

  static void eliminate(SparseColumn<value>& col, const SparseColumn<value>& piv) {
    const value a = piv.back().second;
    const value b = col.back().second;
    SparseColumn<value> out;
    out.reserve(col.size() + piv.size());
    std::size_t i = 0, j = 0;
    while (i < col.size() || j < piv.size()) {
      if (j == piv.size() || (i < col.size() && col[i].first < piv[j].first)) {
        out.emplace_back(col[i].first, a * col[i].second);
        ++i;
      } else if (i == col.size() || piv[j].first < col[i].first) {
        out.emplace_back(piv[j].first, -b * piv[j].second);
        ++j;
      } else {
        value v = a * col[i].second - b * piv[j].second;
        if (v != 0) out.emplace_back(col[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    Integer g = 0;
    for (const auto& e : out) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
    if (g > 1) {
      for (auto& e : out) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
    }
    col = std::move(out);
  }
  static void normalize(SparseColumn<value>&) {}
};

template <class Field>
std::int64_t sparse_rank(std::vector<SparseColumn<typename Field::value>> cols, std::size_t num_rows) {
  std::vector<int> pivot_of_row(num_rows, -1);
  std::int64_t rank = 0;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    auto& col = cols[c];
    while (!col.empty()) {
      const int low = col.back().first;
      const int p = pivot_of_row[low];
      if (p < 0) break;
      Field::eliminate(col, cols[p]);
    }
    if (!col.empty()) {
      Field::normalize(col);
      pivot_of_row[col.back().first] = static_cast<int>(c);
      ++rank;
    }
  }
  return rank;
}

// Rank of the boundary map from faces with k+1 vertices to faces with k.
template <class Field>
std::int64_t boundary_rank(const std::vector<std::vector<VertexSet>>& faces, std::size_t k_plus_1) {
  if (k_plus_1 == 0 || k_plus_1 >= faces.size()) return 0;
  const auto& top = faces[k_plus_1];
  const auto& low = faces[k_plus_1 - 1];
  if (top.empty() || low.empty()) return 0;
  std::vector<SparseColumn<typename Field::value>> cols;
  cols.reserve(top.size());
  auto by_mask = [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); };
  for (VertexSet face : top) {
    SparseColumn<typename Field::value> col;
    int sign = 1;
    for (int v : face.indices()) {
      VertexSet sub = face;
      sub.erase(v);
      const auto it = std::lower_bound(low.begin(), low.end(), sub, by_mask);
      col.emplace_back(static_cast<int>(it - low.begin()), Field::from_int(sign));
      sign = -sign;
    }
    std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    cols.push_back(std::move(col));
  }
  return sparse_rank<Field>(std::move(cols), low.size());
}

template <class Field>
HomologyProfile homology_over(const SimplicialComplex& complex) {
  const auto& faces = complex.faces_of_size();
  const int top = complex.dimension();
  // ranks[k] = rank of the map C_k -> C_{k-1}, faces of size k+1 to size k.
  std::vector<std::int64_t> boundary(faces.size() + 1, 0);
  for (std::size_t s = 1; s < faces.size(); ++s) boundary[s] = boundary_rank<Field>(faces, s);
  HomologyProfile profile;
  for (int k = -1; k <= top; ++k) {
    const std::size_t s = static_cast<std::size_t>(k + 1);
    const std::int64_t chains = static_cast<std::int64_t>(faces[s].size());
    const std::int64_t out_rank = boundary[s];
    const std::int64_t in_rank = s + 1 < faces.size() ? boundary[s + 1] : 0;
    profile.ranks[k] = chains - out_rank - in_rank;
  }
  return profile;
}

}  // namespace

// ---- SimplicialComplex -----------------------------------------------------

SimplicialComplex::SimplicialComplex(int num_vertices, std::vector<VertexSet> facets)
    : num_vertices_(num_vertices), cache_(std::make_shared<FaceCache>()) {
  if (num_vertices < 0 || num_vertices > VertexSet::kCapacity) {
    throw ValidationError("vertex count out of range");
  }
  if (facets.empty()) throw ValidationError("the void complex (no faces) is not representable");
  const VertexSet all = VertexSet::range(num_vertices);
  for (VertexSet f : facets) {
    if (!f.subset_of(all)) throw ValidationError("facet " + f.to_string() + " uses an unknown vertex");
  }
  std::sort(facets.begin(), facets.end());
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (std::size_t j = 0; j < facets.size(); ++j) {
      if (i != j && facets[i].subset_of(facets[j])) {
        throw ValidationError("facet " + facets[i].to_string() + " is contained in " + facets[j].to_string());
      }
    }
  }
  facets_ = std::move(facets);
}

SimplicialComplex SimplicialComplex::from_faces(int num_vertices, std::vector<VertexSet> faces) {
  return SimplicialComplex(num_vertices, maximal_members(std::move(faces)));
}

SimplicialComplex SimplicialComplex::simplex(int num_vertices) {
  return SimplicialComplex(num_vertices, {VertexSet::range(num_vertices)});
}

SimplicialComplex SimplicialComplex::skeleton(int num_vertices, int max_size) {
  std::vector<VertexSet> facets;
  for_each_subset(VertexSet::range(num_vertices), [&](VertexSet s) {
    if (s.size() == max_size) facets.push_back(s);
  });
  if (facets.empty()) return simplex(num_vertices);
  return SimplicialComplex(num_vertices, std::move(facets));
}

SimplicialComplex SimplicialComplex::empty_face(int num_vertices) {
  return SimplicialComplex(num_vertices, {VertexSet()});
}

int SimplicialComplex::dimension() const { return facets_.back().size() - 1; }

bool SimplicialComplex::contains(VertexSet face) const {
  return std::any_of(facets_.begin(), facets_.end(), [face](VertexSet f) { return face.subset_of(f); });
}

bool SimplicialComplex::is_pure() const { return facets_.front().size() == facets_.back().size(); }

const std::vector<std::vector<VertexSet>>& SimplicialComplex::faces_of_size() const {
  std::call_once(cache_->once, [this] {
    const int top = facets_.back().size();
    std::vector<std::vector<VertexSet>> levels(top + 1);
    for (VertexSet f : facets_) levels[f.size()].push_back(f);
    auto by_mask = [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); };
    for (int k = top; k >= 0; --k) {
      auto& level = levels[k];
      std::sort(level.begin(), level.end(), by_mask);
      level.erase(std::unique(level.begin(), level.end()), level.end());
      if (k == 0) break;
      for (VertexSet f : level) {
        for (std::uint64_t b = f.bits(); b != 0; b &= b - 1) {
          levels[k - 1].push_back(VertexSet(f.bits() & ~(b & -b)));
        }
      }
    }
    cache_->faces = std::move(levels);
  });
  return cache_->faces;
}

std::vector<std::uint64_t> SimplicialComplex::f_vector() const {
  std::vector<std::uint64_t> f;
  for (const auto& level : faces_of_size()) f.push_back(level.size());
  return f;
}

std::string SimplicialComplex::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    if (i) s += ",";
    s += facets_[i].to_string();
  }
  return s + "]";
}

bool operator<(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.num_vertices_ != b.num_vertices_) return a.num_vertices_ < b.num_vertices_;
  return std::lexicographical_compare(a.facets_.begin(), a.facets_.end(), b.facets_.begin(), b.facets_.end());
}

int dimension(const SimplicialComplex& complex) { return complex.dimension(); }

std::vector<std::uint64_t> f_vector(const SimplicialComplex& complex) { return complex.f_vector(); }

SimplicialComplex link(const SimplicialComplex& complex, VertexSet face) {
  std::vector<VertexSet> facets;
  for (VertexSet f : complex.facets()) {
    if (face.subset_of(f)) facets.push_back(f - face);
  }
  if (facets.empty()) throw DomainError("face " + face.to_string() + " is not in the complex");
  return SimplicialComplex(complex.num_vertices(), std::move(facets));
}

// ---- homology ----------------------------------------------------------------

HomologyProfile reduced_homology_mod_p(const SimplicialComplex& complex) {
  return homology_over<ModPField>(complex);
}

HomologyProfile reduced_homology_exact(const SimplicialComplex& complex) {
  return homology_over<IntegerField>(complex);
}

HomologyProfile reduced_homology(const SimplicialComplex& complex) {
  HomologyProfile modular = reduced_homology_mod_p(complex);
  const auto nonzero = std::count_if(modular.ranks.begin(), modular.ranks.end(),
                                     [](const auto& kv) { return kv.second != 0; });
  if (nonzero <= 1) return modular;
  return reduced_homology_exact(complex);
}

std::int64_t reduced_euler_characteristic(const SimplicialComplex& complex) {
  std::int64_t chi = 0;
  int sign = -1;  // f_{-1} sits in degree -1
  for (auto f : complex.f_vector()) {
    chi += sign * static_cast<std::int64_t>(f);
    sign = -sign;
  }
  return chi;
}

ComplexCmResult is_cohen_macaulay_complex(const SimplicialComplex& complex) {
  ComplexCmResult result;
  for (const auto& level : complex.faces_of_size()) {
    for (VertexSet face : level) {
      std::vector<VertexSet> star;
      VertexSet common = VertexSet::range(complex.num_vertices());
      for (VertexSet f : complex.facets()) {
        if (face.subset_of(f)) {
          star.push_back(f - face);
          common = common & (f - face);
        }
      }
      // A cone (or {∅}) has nothing to check below its dimension.
      if (star.size() == 1 || !common.empty()) continue;
      const SimplicialComplex lk(complex.num_vertices(), std::move(star));
      const int top = lk.dimension();
      const HomologyProfile h = reduced_homology(lk);
      for (int i = -1; i < top; ++i) {
        if (h.rank(i) != 0) {
          result.witness = ReisnerWitness{face, i};
          return result;
        }
      }
    }
  }
  if (!complex.is_pure()) throw std::logic_error("Reisner check passed on a non-pure complex");
  result.cohen_macaulay = true;
  return result;
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex) {
  const int n = complex.num_vertices();
  const VertexSet all = VertexSet::range(n);
  if (complex.facets().size() == 1 && complex.facets().front() == all) {
    throw DomainError("a full simplex has the zero Stanley-Reisner ideal");
  }
  // I_Δ is the intersection over facets of the primes generated by the
  // variables off each facet; intersect one facet at a time.
  std::vector<VertexSet> gens;
  bool first = true;
  for (VertexSet facet : complex.facets()) {
    const VertexSet off = all - facet;
    std::vector<VertexSet> next;
    if (first) {
      for (int v : off.indices()) next.push_back(VertexSet::singleton(v));
      first = false;
    } else {
      for (VertexSet g : gens) {
        if (g.intersects(off)) {
          next.push_back(g);
        } else {
          for (int v : off.indices()) next.push_back(g | VertexSet::singleton(v));
        }
      }
    }
    // keep inclusion-minimal sets
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    gens.clear();
    for (VertexSet g : next) {
      if (std::none_of(gens.begin(), gens.end(), [g](VertexSet h) { return h.subset_of(g); })) gens.push_back(g);
    }
  }
  std::vector<ExponentVector> exps;
  for (VertexSet g : gens) {
    ExponentVector u(n, 0);
    for (int v : g.indices()) u[v] = 1;
    exps.push_back(std::move(u));
  }
  return MonomialIdeal::minimalize(std::move(exps), n);
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal) {
  const int n = ideal.num_vars();
  // Facets are complements of minimal transversals of the generator
  // supports (Berge's incremental algorithm).
  std::vector<VertexSet> transversals{VertexSet()};
  for (const auto& u : ideal.generators()) {
    const VertexSet edge = support(u);
    std::vector<VertexSet> next;
    for (VertexSet t : transversals) {
      if (t.intersects(edge)) {
        next.push_back(t);
      } else {
        for (int v : edge.indices()) next.push_back(t | VertexSet::singleton(v));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    transversals.clear();
    for (VertexSet t : next) {
      if (std::none_of(transversals.begin(), transversals.end(), [t](VertexSet h) { return h.subset_of(t); })) {
        transversals.push_back(t);
      }
    }
  }
  std::vector<VertexSet> facets;
  for (VertexSet t : transversals) facets.push_back(VertexSet::range(n) - t);
  return SimplicialComplex::from_faces(n, std::move(facets));
}

}  // namespace expc
