#include "expc/ideal.hpp"

#include <algorithm>
#include <numeric>

#include "expc/errors.hpp"

namespace expc {

bool divides(const ExponentVector& u, const ExponentVector& v) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > v[i]) return false;
  }
  return true;
}

VertexSet support(const ExponentVector& u) {
  VertexSet s;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != 0) s.insert(static_cast<int>(i));
  }
  return s;
}

int total_degree(const ExponentVector& u) { return std::accumulate(u.begin(), u.end(), 0); }

MonomialIdeal MonomialIdeal::minimalize(std::vector<ExponentVector> raw, int num_vars) {
  if (num_vars < 1 || num_vars > VertexSet::kCapacity) {
    throw ValidationError("variable count must be in 1.." + std::to_string(VertexSet::kCapacity));
  }
  if (raw.empty()) throw ValidationError("ideal has no generators (zero ideal)");
  for (const auto& u : raw) {
    if (static_cast<int>(u.size()) != num_vars) {
      throw ValidationError("generator of length " + std::to_string(u.size()) + " in an ideal with " +
                            std::to_string(num_vars) + " variables");
    }
    if (std::any_of(u.begin(), u.end(), [](int e) { return e < 0; })) {
      throw ValidationError("negative exponent in generator");
    }
    if (std::all_of(u.begin(), u.end(), [](int e) { return e == 0; })) {
      throw ValidationError("zero exponent vector generates the unit ideal");
    }
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<ExponentVector> minimal;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < raw.size() && !redundant; ++j) {
      redundant = j != i && divides(raw[j], raw[i]);
    }
    if (!redundant) minimal.push_back(raw[i]);
  }
  return MonomialIdeal(num_vars, std::move(minimal));
}

std::string MonomialIdeal::monomial_string(std::size_t i, const std::string& var) const {
  std::string out;
  const auto& u = generators_.at(i);
  for (int v = 0; v < num_vars_; ++v) {
    if (u[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += var + std::to_string(v + 1);
    if (u[v] > 1) out += "^" + std::to_string(u[v]);
  }
  return out;
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<ExponentVector> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& u : ideal.generators()) {
    ExponentVector s(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) s[i] = u[i] > 0 ? 1 : 0;
    gens.push_back(std::move(s));
  }
  return MonomialIdeal::minimalize(std::move(gens), ideal.num_vars());
}

ExponentVector join(const MonomialIdeal& ideal) {
  ExponentVector out(ideal.num_vars(), 0);
  for (const auto& u : ideal.generators())
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = std::max(out[i], u[i]);
  return out;
}

bool is_squarefree(const MonomialIdeal& ideal) {
  return std::all_of(ideal.generators().begin(), ideal.generators().end(), [](const ExponentVector& u) {
    return std::all_of(u.begin(), u.end(), [](int e) { return e <= 1; });
  });
}

int krull_dimension(const MonomialIdeal& ideal) {
  std::vector<VertexSet> supports;
  for (const auto& u : ideal.generators()) supports.push_back(support(u));
  // Faces of the Stanley-Reisner complex of the radical are the sets
  // containing no generator support; the dimension is the largest one.
  const int n = ideal.num_vars();
  int best = 0;
  for_each_subset(VertexSet::range(n), [&](VertexSet sigma) {
    if (sigma.size() <= best) return;
    for (auto s : supports) {
      if (s.subset_of(sigma)) return;
    }
    best = sigma.size();
  });
  return best;
}

}  // namespace expc
