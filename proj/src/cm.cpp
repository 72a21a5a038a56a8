#include "expc/cm.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "expc/corpus.hpp"
#include "expc/distraction.hpp"

namespace expc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::optional<CmWitness> check_entry(const CatalogEntry& entry, int d) {
  const int dim = dimension(entry.complex);
  if (dim != d - 1) {
    return CmWitness{entry.witness, entry.complex, std::nullopt,
                     "dimension " + std::to_string(dim) + " != d-1 = " + std::to_string(d - 1)};
  }
  auto reisner = is_cohen_macaulay_complex(entry.complex);
  if (reisner.cohen_macaulay) return std::nullopt;
  return CmWitness{entry.witness, entry.complex, reisner.witness, ""};
}

}  // namespace

CmReport is_cohen_macaulay_ideal(const MonomialIdeal& ideal, const CmOptions& options) {
  const auto start = Clock::now();
  const int d = krull_dimension(ideal);
  const auto catalog = exponent_catalog(ideal);
  CmReport report;
  report.catalog_size = catalog.size();
  std::vector<std::optional<CmWitness>> found(catalog.size());
  if (options.full || options.jobs > 1) {
    parallel_for(catalog.size(), options.jobs, [&](std::size_t i) { found[i] = check_entry(catalog[i], d); });
  } else {
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      found[i] = check_entry(catalog[i], d);
      if (found[i]) break;
    }
  }
  // Catalog order keeps the witness list independent of scheduling.
  for (auto& w : found) {
    if (!w) continue;
    report.witnesses.push_back(std::move(*w));
    if (!options.full) break;
  }
  report.verdict = report.witnesses.empty();
  report.seconds = seconds_since(start);
  return report;
}

RadicalComparison radical_comparison(const MonomialIdeal& ideal, const CmOptions& options) {
  RadicalComparison out{is_cohen_macaulay_ideal(radical(ideal), options).verdict,
                        is_cohen_macaulay_ideal(ideal, options).verdict};
  if (out.ideal_cm && !out.radical_cm) throw std::logic_error("Cohen-Macaulay ideal with non-Cohen-Macaulay radical");
  return out;
}

Polarization polarize(const MonomialIdeal& ideal) {
  const int n = ideal.num_vars();
  const ExponentVector top = join(ideal);
  std::vector<int> offset(n, 0);
  Polarization out{ideal, {}};
  for (int i = 0; i < n; ++i) {
    offset[i] = static_cast<int>(out.names.size());
    for (int j = 1; j <= top[i]; ++j) out.names.emplace_back(i + 1, j);
  }
  const int m = static_cast<int>(out.names.size());
  std::vector<ExponentVector> gens;
  for (const auto& u : ideal.generators()) {
    ExponentVector v(m, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < u[i]; ++j) v[offset[i] + j] = 1;
    gens.push_back(std::move(v));
  }
  out.ideal = MonomialIdeal::minimalize(gens, m);
  return out;
}

ComplexCmResult polarization_cm(const MonomialIdeal& ideal) {
  return is_cohen_macaulay_complex(stanley_reisner_complex(polarize(ideal).ideal));
}

BenchmarkReport benchmark_cm(const MonomialIdeal& ideal, const CmOptions& options) {
  BenchmarkReport out;
  auto start = Clock::now();
  const CmReport criterion = is_cohen_macaulay_ideal(ideal, options);
  out.criterion_seconds = seconds_since(start);
  out.criterion_verdict = criterion.verdict;
  out.catalog_size = criterion.catalog_size;

  start = Clock::now();
  const Polarization pol = polarize(ideal);
  const SimplicialComplex complex = stanley_reisner_complex(pol.ideal);
  out.polarization_verdict = is_cohen_macaulay_complex(complex).cohen_macaulay;
  out.polarization_seconds = seconds_since(start);
  out.polarized_vars = pol.ideal.num_vars();
  out.f_vector = f_vector(complex);
  return out;
}

std::string format_benchmark(const BenchmarkReport& r) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(6);
  out << "method          verdict  seconds\n";
  out << "exponent-cat    " << (r.criterion_verdict ? "CM     " : "not CM ") << "  " << r.criterion_seconds << '\n';
  out << "polarization    " << (r.polarization_verdict ? "CM     " : "not CM ") << "  " << r.polarization_seconds
      << '\n';
  out << "catalog size: " << r.catalog_size << '\n';
  out << "polarized vars: " << r.polarized_vars << '\n';
  out << "f-vector: (";
  for (std::size_t i = 0; i < r.f_vector.size(); ++i) out << (i ? "," : "") << r.f_vector[i];
  out << ")\n";
  out << "verdicts " << (r.agree() ? "agree" : "DISAGREE") << '\n';
  return out.str();
}

}  // namespace expc
