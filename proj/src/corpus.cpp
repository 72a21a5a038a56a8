#include "expc/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "expc/distraction.hpp"
#include "expc/errors.hpp"
#include "expc/oracle.hpp"
#include "expc/rank.hpp"

namespace expc {

CorpusSpec parse_corpus_spec(std::string_view text) {
  std::vector<int> fields;
  std::stringstream in{std::string(text)};
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      fields.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError("corpus spec field '" + item + "' is not an integer");
    }
  }
  if (fields.size() != 4) throw ValidationError("corpus spec must be \"n,maxdeg,maxgens,count\"");
  CorpusSpec spec{fields[0], fields[1], fields[2], fields[3]};
  if (spec.max_vars < 2 || spec.max_vars > 16) throw ValidationError("corpus n must lie in 2..16");
  if (spec.max_degree < 1 || spec.max_gens < 1 || spec.count < 0) {
    throw ValidationError("corpus maxdeg and maxgens must be positive and count nonnegative");
  }
  return spec;
}

std::mt19937_64 corpus_rng(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer
  std::uint64_t z = seed * 0x9e3779b97f4a7c15ULL + index + 0x632be59bd9b4e019ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return std::mt19937_64(z ^ (z >> 31));
}

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

MonomialIdeal random_ideal(std::mt19937_64& rng, const CorpusSpec& spec) {
  while (true) {
    const int n = uniform(rng, 2, spec.max_vars);
    const int gens = uniform(rng, 1, spec.max_gens);
    std::vector<ExponentVector> raw;
    for (int g = 0; g < gens; ++g) {
      ExponentVector u(n, 0);
      const int deg = uniform(rng, 1, spec.max_degree);
      for (int k = 0; k < deg; ++k) ++u[uniform(rng, 0, n - 1)];
      raw.push_back(std::move(u));
    }
    MonomialIdeal ideal = MonomialIdeal::minimalize(raw, n);
    if (krull_dimension(ideal) > 0) return ideal;
  }
}

SimplicialComplex random_complex(std::mt19937_64& rng, int max_vertices) {
  const int n = uniform(rng, 1, max_vertices);
  const int count = uniform(rng, 1, 2 * n);
  std::vector<VertexSet> faces;
  for (int k = 0; k < count; ++k) faces.push_back(VertexSet(rng() & VertexSet::range(n).bits()));
  return SimplicialComplex::from_faces(n, std::move(faces));
}

CorpusInstance make_instance(const CorpusSpec& spec, std::uint64_t seed, std::uint64_t index) {
  auto rng = corpus_rng(seed, index);
  MonomialIdeal ideal = random_ideal(rng, spec);
  GradingMatrix grading = generate_generic(ideal.num_vars(), krull_dimension(ideal), rng());
  const auto catalog = exponent_catalog(ideal);
  std::vector<RationalVector> betas;
  for (int k = 0; k < 2; ++k) {
    const auto& entry = catalog[rng() % catalog.size()];
    betas.push_back(degree_of_point(grading, to_rational(entry.witness)));
  }
  betas.push_back(generic_parameter(grading.rows(), rng()));
  return {std::move(ideal), std::move(grading), std::move(betas)};
}

std::size_t VerifyReport::mismatches() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const VerifyRecord& r) { return !r.agree(); }));
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, jobs)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_lock);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

VerifyReport verify_corpus(const CorpusSpec& spec, std::uint64_t seed, int jobs) {
  VerifyReport report;
  report.instances.reserve(spec.count);
  for (int i = 0; i < spec.count; ++i) report.instances.push_back(make_instance(spec, seed, i));
  std::vector<std::vector<VerifyRecord>> per(report.instances.size());
  parallel_for(report.instances.size(), jobs, [&](std::size_t i) {
    const auto& inst = report.instances[i];
    for (const auto& beta : inst.betas) {
      VerifyRecord rec{i, beta, 0, 0, 0};
      for (const auto& c : rank_contributions(inst.ideal, inst.grading, beta)) {
        rec.closed += c.closed;
        rec.spectral += c.spectral;
      }
      rec.oracle = rank_oracle(inst.ideal, inst.grading, beta);
      per[i].push_back(std::move(rec));
    }
  });
  for (auto& group : per)
    for (auto& rec : group) report.records.push_back(std::move(rec));
  return report;
}

}  // namespace expc
