#include "expc/distraction.hpp"

#include <algorithm>
#include <map>

#include "expc/errors.hpp"

namespace expc {

std::vector<FactoredGenerator> distraction_generators(const MonomialIdeal& ideal) {
  std::vector<FactoredGenerator> out;
  for (const auto& u : ideal.generators()) {
    FactoredGenerator g;
    for (int i = 0; i < ideal.num_vars(); ++i)
      for (int j = 0; j < u[i]; ++j) g.push_back({i, j});
    out.push_back(std::move(g));
  }
  return out;
}

std::string format_factored(const FactoredGenerator& gen) {
  std::string s;
  for (const auto& f : gen) {
    const std::string var = "θ" + std::to_string(f.variable + 1);
    s += f.shift == 0 ? var : "(" + var + "-" + std::to_string(f.shift) + ")";
  }
  return s;
}

bool covers(const MonomialIdeal& ideal, VertexSet sigma, const std::vector<int>& base) {
  for (const auto& u : ideal.generators()) {
    bool hit = false;
    for (int i = 0; i < ideal.num_vars() && !hit; ++i) hit = !sigma.contains(i) && base[i] < u[i];
    if (!hit) return false;
  }
  return true;
}

std::vector<Component> components(const MonomialIdeal& ideal) {
  const int n = ideal.num_vars();
  const ExponentVector bound = join(ideal);
  std::vector<Component> out;
  for_each_subset(VertexSet::range(n), [&](VertexSet sigma) {
    std::vector<int> fixed;
    for (int i = 0; i < n; ++i) {
      if (!sigma.contains(i)) fixed.push_back(i);
    }
    if (std::any_of(fixed.begin(), fixed.end(), [&](int i) { return bound[i] == 0; })) return;
    std::vector<int> base(n, 0);
    while (true) {
      if (covers(ideal, sigma, base)) {
        // Maximal iff freeing any single fixed coordinate breaks covering.
        bool maximal = true;
        for (int i : fixed) {
          std::vector<int> widened = base;
          widened[i] = 0;
          VertexSet bigger = sigma;
          bigger.insert(i);
          if (covers(ideal, bigger, widened)) {
            maximal = false;
            break;
          }
        }
        if (maximal) out.push_back({sigma, base});
      }
      // odometer over 0 <= base_i < bound_i on fixed coordinates
      std::size_t k = 0;
      for (; k < fixed.size(); ++k) {
        if (++base[fixed[k]] < bound[fixed[k]]) break;
        base[fixed[k]] = 0;
      }
      if (k == fixed.size()) break;
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool contains_point(const Component& component, const RationalVector& point) {
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (!component.sigma.contains(static_cast<int>(i)) && point[i] != component.base[i]) return false;
  }
  return true;
}

std::optional<SimplicialComplex> exponent_complex_at(int num_vars, const std::vector<Component>& comps,
                                                     const RationalVector& point) {
  if (static_cast<int>(point.size()) != num_vars) {
    throw ValidationError("point has length " + std::to_string(point.size()) + ", expected " +
                          std::to_string(num_vars));
  }
  std::vector<VertexSet> facets;
  for (const auto& c : comps) {
    if (contains_point(c, point)) facets.push_back(c.sigma);
  }
  if (facets.empty()) return std::nullopt;
  return SimplicialComplex(num_vars, std::move(facets));
}

SimplicialComplex exponent_complex_at(const MonomialIdeal& ideal, const RationalVector& point) {
  auto complex = exponent_complex_at(ideal.num_vars(), components(ideal), point);
  if (!complex) throw DomainError("b ∉ V(Ĩ): the point lies on no component");
  return *std::move(complex);
}

std::vector<CatalogEntry> exponent_catalog(const MonomialIdeal& ideal) {
  const int n = ideal.num_vars();
  const auto comps = components(ideal);
  const ExponentVector top = join(ideal);
  std::map<SimplicialComplex, std::vector<int>> seen;
  std::vector<int> b(n, -1);
  while (true) {
    RationalVector point = to_rational(b);
    if (auto complex = exponent_complex_at(n, comps, point)) seen.try_emplace(*std::move(complex), b);
    // lexicographic odometer, last coordinate fastest
    int k = n - 1;
    for (; k >= 0; --k) {
      if (++b[k] <= top[k]) break;
      b[k] = -1;
    }
    if (k < 0) break;
  }
  std::vector<CatalogEntry> out;
  for (auto& [complex, witness] : seen) out.push_back({complex, witness});
  return out;
}

int degree(const MonomialIdeal& ideal) {
  const int d = krull_dimension(ideal);
  const auto comps = components(ideal);
  return static_cast<int>(
      std::count_if(comps.begin(), comps.end(), [d](const Component& c) { return c.sigma.size() == d; }));
}

bool is_unmixed(const MonomialIdeal& ideal) {
  const int d = krull_dimension(ideal);
  const auto comps = components(ideal);
  return std::all_of(comps.begin(), comps.end(), [d](const Component& c) { return c.sigma.size() == d; });
}

}  // namespace expc
