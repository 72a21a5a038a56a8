#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "expc/cm.hpp"
#include "expc/corpus.hpp"
#include "expc/distraction.hpp"
#include "expc/errors.hpp"
#include "expc/io.hpp"
#include "expc/oracle.hpp"
#include "expc/rank.hpp"

using namespace expc;

namespace {

struct Options {
  std::string ideal_path;
  std::string matrix_path;
  std::optional<std::uint64_t> auto_a;
  std::string beta;
  bool oracle = false;
  bool full = false;
  int jobs = 1;
  std::uint64_t seed = 0;
  std::string random_spec;
  std::string out_path;
};

GradingMatrix grading_for(const Options& opt, const MonomialIdeal& ideal) {
  if (!opt.matrix_path.empty() && opt.auto_a) throw ValidationError("give either --A or --auto-A, not both");
  if (!opt.matrix_path.empty()) return parse_matrix(read_file(opt.matrix_path));
  if (opt.auto_a) return generate_generic(ideal.num_vars(), krull_dimension(ideal), *opt.auto_a);
  throw ValidationError("a grading matrix is required (--A FILE or --auto-A SEED)");
}

bool g_pretty = false;

int emit(const Json& doc) {
  std::cout << doc.dump(g_pretty ? 2 : -1) << '\n';
  return 0;
}

int run(const std::string& command, const Options& opt) {
  const CmOptions cm_opt{opt.full, opt.jobs};
  if (command == "verify") {
    if (opt.random_spec.empty()) throw ValidationError("verify needs --random \"n,maxdeg,maxgens,count\"");
    const CorpusSpec spec = parse_corpus_spec(opt.random_spec);
    const VerifyReport report = verify_corpus(spec, opt.seed, opt.jobs);
    Json inputs = {{"random", opt.random_spec}};
    emit(report_document(command, nullptr, inputs, to_json(report), opt.seed));
    return report.mismatches() == 0 ? 0 : 1;
  }

  const MonomialIdeal ideal = parse_ideal(read_file(opt.ideal_path));
  const Json ideal_json = to_json(ideal);
  auto doc = [&](const Json& inputs, const Json& results) {
    return report_document(command, ideal_json, inputs, results, opt.seed);
  };

  if (command == "components") {
    Json list = Json::array();
    for (const auto& c : components(ideal)) list.push_back(to_json(c));
    return emit(doc(nullptr, {{"count", list.size()}, {"components", list}}));
  }
  if (command == "catalog") {
    Json list = Json::array();
    for (const auto& e : exponent_catalog(ideal)) {
      list.push_back({{"complex", to_json(e.complex)}, {"witness_b", e.witness}, {"dimension", dimension(e.complex)}});
    }
    return emit(doc(nullptr, {{"count", list.size()}, {"complexes", list}}));
  }
  if (command == "is-cm") return emit(doc(nullptr, to_json(is_cohen_macaulay_ideal(ideal, cm_opt))));
  if (command == "degree") {
    return emit(doc(nullptr, {{"degree", degree(ideal)}, {"d", krull_dimension(ideal)}, {"unmixed", is_unmixed(ideal)}}));
  }
  if (command == "rank") {
    const GradingMatrix grading = grading_for(opt, ideal);
    if (opt.beta.empty()) throw ValidationError("rank needs --beta");
    const RationalVector beta = parse_rational_list(opt.beta);
    Json exponents = Json::array();
    std::int64_t formula = 0;
    for (const auto& c : rank_contributions(ideal, grading, beta)) {
      exponents.push_back({{"b", to_json(c.point)}, {"complex", to_json(c.complex)}, {"rank", c.closed}});
      formula += c.closed;
    }
    Json results = {{"formula", formula}};
    bool agree = true;
    if (opt.oracle) {
      const std::int64_t oracle = rank_oracle(ideal, grading, beta);
      agree = oracle == formula;
      results["oracle"] = oracle;
      results["agree"] = agree;
    }
    results["exponents"] = exponents;
    emit(doc({{"A", to_json(grading)}, {"beta", to_json(beta)}}, results));
    return agree ? 0 : 1;
  }
  if (command == "exceptional") {
    const GradingMatrix grading = grading_for(opt, ideal);
    Json list = Json::array();
    for (const auto& e : exceptional_scan(ideal, grading, opt.seed)) {
      list.push_back({{"beta", to_json(e.beta)}, {"rank", e.rank}, {"jump", e.jump}});
    }
    return emit(doc({{"A", to_json(grading)}}, {{"degree", degree(ideal)}, {"exceptional", list}}));
  }
  if (command == "polarize") {
    const Polarization pol = polarize(ideal);
    const std::string text = serialize_ideal(pol.ideal);
    if (!opt.out_path.empty()) {
      std::ofstream out(opt.out_path);
      if (!out) throw ValidationError("cannot write " + opt.out_path);
      out << text;
    }
    Json names = Json::array();
    for (const auto& [var, occ] : pol.names) names.push_back({var, occ});
    return emit(doc(nullptr, {{"ideal", to_json(pol.ideal)},
                              {"ideal_file", text},
                              {"names", names},
                              {"f_vector", f_vector(stanley_reisner_complex(pol.ideal))}}));
  }
  if (command == "benchmark") {
    const BenchmarkReport report = benchmark_cm(ideal, cm_opt);
    std::cerr << format_benchmark(report);
    emit(doc(nullptr, to_json(report)));
    return report.agree() ? 0 : 1;
  }
  throw ValidationError("unknown command " + command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monomial ideals through their distractions: components, exponent complexes, "
               "Cohen-Macaulayness and rank."};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "seed for random choices");
  app.add_flag("--full", opt.full, "report every failing exponent complex");
  app.add_flag("--pretty", g_pretty, "indent the JSON report");

  auto with_file = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("FILE", opt.ideal_path, "ideal file")->required();
    return sub;
  };
  with_file("components", "irreducible components of the distraction");
  with_file("catalog", "distinct exponent complexes with witness points");
  with_file("is-cm", "Cohen-Macaulay test through exponent complexes");
  with_file("degree", "degree, Krull dimension and unmixedness");
  for (const char* name : {"rank", "exceptional"}) {
    auto* sub = with_file(name, std::string(name) == "rank" ? "rank at a parameter via the closed formula"
                                                            : "parameters where the rank jumps (sampled)");
    sub->add_option("--A", opt.matrix_path, "grading matrix file");
    sub->add_option("--auto-A", opt.auto_a, "generate a valid grading matrix from this seed");
    if (std::string(name) == "rank") {
      sub->add_option("--beta", opt.beta, "comma-separated rationals, e.g. \"3\" or \"1/2,0\"");
      sub->add_flag("--oracle", opt.oracle, "also compute the rank by Buchberger");
    }
  }
  with_file("polarize", "polarization and its Stanley-Reisner f-vector")
      ->add_option("--out", opt.out_path, "write the polarized ideal file here");
  with_file("benchmark", "criterion versus Reisner on the polarization");
  app.add_subcommand("verify", "random corpus: formula, spectral path and oracle")
      ->add_option("--random", opt.random_spec, "\"n,maxdeg,maxgens,count\"")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, opt);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
