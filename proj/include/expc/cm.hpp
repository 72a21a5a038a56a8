#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "expc/ideal.hpp"
#include "expc/simplicial.hpp"

namespace expc {

// One exponent complex that fails the criterion: either Reisner's condition
// breaks at `reisner`, or the dimension is wrong and `note` says how.
struct CmWitness {
  std::vector<int> point;  // catalog witness b
  SimplicialComplex complex;
  std::optional<ReisnerWitness> reisner;
  std::string note;
};

struct CmReport {
  bool verdict = false;
  std::vector<CmWitness> witnesses;  // nonempty when verdict is false
  std::size_t catalog_size = 0;
  double seconds = 0;
};

struct CmOptions {
  bool full = false;  // report every failing complex instead of the first
  int jobs = 1;
};

// True iff every exponent complex of I is Cohen-Macaulay of dimension d-1.
CmReport is_cohen_macaulay_ideal(const MonomialIdeal& ideal, const CmOptions& options = {});

struct RadicalComparison {
  bool radical_cm = false;
  bool ideal_cm = false;
};

RadicalComparison radical_comparison(const MonomialIdeal& ideal, const CmOptions& options = {});

struct Polarization {
  MonomialIdeal ideal;
  // names[k] = (variable, occurrence), both 1-based, for new variable k.
  std::vector<std::pair<int, int>> names;
};

// Occurrence j of variable i becomes its own variable; new variables are laid
// out by i, then j. Variables absent from every generator get no slot.
Polarization polarize(const MonomialIdeal& ideal);

// Reisner verdict for the Stanley-Reisner complex of the polarization.
ComplexCmResult polarization_cm(const MonomialIdeal& ideal);

struct BenchmarkReport {
  bool criterion_verdict = false;
  bool polarization_verdict = false;
  double criterion_seconds = 0;
  double polarization_seconds = 0;
  std::size_t catalog_size = 0;
  int polarized_vars = 0;
  std::vector<std::uint64_t> f_vector;  // of the polarization's complex
  bool agree() const { return criterion_verdict == polarization_verdict; }
};

BenchmarkReport benchmark_cm(const MonomialIdeal& ideal, const CmOptions& options = {});

// Plain-text table of a benchmark.
std::string format_benchmark(const BenchmarkReport& report);

}  // namespace expc
