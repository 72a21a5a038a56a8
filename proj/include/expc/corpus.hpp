#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string_view>
#include <vector>

#include "expc/grading.hpp"
#include "expc/ideal.hpp"
#include "expc/linalg.hpp"
#include "expc/simplicial.hpp"

namespace expc {

// Shape of a random ideal corpus: n in 2..max_vars, 1..max_gens generators of
// total degree 1..max_degree.
struct CorpusSpec {
  int max_vars = 4;
  int max_degree = 3;
  int max_gens = 5;
  int count = 50;
};

// "n,maxdeg,maxgens,count"; ValidationError on anything else.
CorpusSpec parse_corpus_spec(std::string_view text);

// Independent stream for item `index` of a run seeded with `seed`, so results
// do not depend on scheduling.
std::mt19937_64 corpus_rng(std::uint64_t seed, std::uint64_t index);

// A random ideal of positive Krull dimension.
MonomialIdeal random_ideal(std::mt19937_64& rng, const CorpusSpec& spec);

// A random complex on at most max_vertices vertices (at least one).
SimplicialComplex random_complex(std::mt19937_64& rng, int max_vertices);

struct CorpusInstance {
  MonomialIdeal ideal;
  GradingMatrix grading;
  std::vector<RationalVector> betas;  // two from catalog witnesses, one generic
};

CorpusInstance make_instance(const CorpusSpec& spec, std::uint64_t seed, std::uint64_t index);

struct VerifyRecord {
  std::size_t instance = 0;
  RationalVector beta;
  std::int64_t closed = 0;    // rank_general
  std::int64_t spectral = 0;  // Σ_b rank_squarefree_spectral(Δ_b, d)
  std::int64_t oracle = 0;
  bool agree() const { return closed == spectral && closed == oracle; }
};

struct VerifyReport {
  std::vector<CorpusInstance> instances;
  std::vector<VerifyRecord> records;  // grouped by instance, in β order
  std::size_t mismatches() const;
};

// Builds the corpus and compares the three rank evaluations on every
// (instance, β). Work is spread over `jobs` threads; the report does not
// depend on jobs.
VerifyReport verify_corpus(const CorpusSpec& spec, std::uint64_t seed, int jobs = 1);

// Runs fn(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace expc
