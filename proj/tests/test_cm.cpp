#include <doctest.h>

#include "expc/cm.hpp"
#include "expc/corpus.hpp"
#include "expc/distraction.hpp"
#include "expc/oracle.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("Cohen-Macaulay criterion on the worked examples") {
  const auto main = is_cohen_macaulay_ideal(ex_main());
  CHECK_FALSE(main.verdict);
  REQUIRE(main.witnesses.size() == 1);
  CHECK(main.catalog_size == 9);

  const auto full = is_cohen_macaulay_ideal(ex_main(), {true, 1});
  bool h0 = false;
  for (const auto& w : full.witnesses) {
    if (!w.reisner) continue;
    CHECK(w.reisner->face.empty());
    CHECK(w.reisner->degree == 0);
    h0 = h0 || reduced_homology(w.complex).rank(0) > 0;
  }
  CHECK(h0);
  CHECK(full.witnesses.size() >= 2);

  const auto small = is_cohen_macaulay_ideal(ex_small());
  CHECK_FALSE(small.verdict);
  REQUIRE(small.witnesses.size() == 1);
  CHECK(small.witnesses[0].point == std::vector<int>{2, 1});
  CHECK(small.witnesses[0].note == "dimension -1 != d-1 = 0");
  CHECK_FALSE(small.witnesses[0].reisner);

  const auto radcm = is_cohen_macaulay_ideal(ex_radcm());
  CHECK_FALSE(radcm.verdict);
  REQUIRE(radcm.witnesses[0].reisner);
  CHECK(facet_labels(radcm.witnesses[0].complex) == std::vector<std::vector<int>>{{1, 2}, {3, 4}});

  for (int k = 1; k <= 4; ++k) {
    CAPTURE(k);
    const auto r = is_cohen_macaulay_ideal(ex_family(4, k));
    CHECK(r.verdict);
    CHECK(r.witnesses.empty());
  }
}

TEST_CASE("radical comparison") {
  const auto radcm = radical_comparison(ex_radcm());
  CHECK(radcm.radical_cm);
  CHECK_FALSE(radcm.ideal_cm);
  const auto family = radical_comparison(ex_family(4, 1));
  CHECK(family.radical_cm);
  CHECK(family.ideal_cm);
  const auto small = radical_comparison(ex_small());
  CHECK(small.radical_cm);
  CHECK_FALSE(small.ideal_cm);
}

TEST_CASE("polarization") {
  const auto sq = polarize(ideal(2, {{1, 1}}));
  CHECK(sq.ideal == ideal(2, {{1, 1}}));
  CHECK(sq.names == std::vector<std::pair<int, int>>{{1, 1}, {2, 1}});
  const auto pure = polarize(ideal(1, {{2}}));
  CHECK(pure.ideal == ideal(2, {{1, 1}}));
  CHECK(pure.names == std::vector<std::pair<int, int>>{{1, 1}, {1, 2}});

  const auto big = polarize(ex_family(4, 4));
  CHECK(big.ideal.num_vars() == 16);
  CHECK(big.ideal.generators().size() == 4);
  CHECK(is_squarefree(big.ideal));
  for (const auto& g : big.ideal.generators()) CHECK(total_degree(g) == 12);
  const auto rebuilt = ideal(2, {{3, 1}, {2, 2}});
  const auto pol = polarize(rebuilt);
  // x1^3 x2 -> y11 y12 y13 y21, x1^2 x2^2 -> y11 y12 y21 y22
  CHECK(pol.ideal == ideal(5, {{1, 1, 1, 1, 0}, {1, 1, 0, 1, 1}}));
}

TEST_CASE("benchmark on small fixtures") {
  const auto radcm = benchmark_cm(ex_radcm());
  CHECK(radcm.agree());
  CHECK_FALSE(radcm.criterion_verdict);
  const auto sq = benchmark_cm(ideal(3, {{1, 1, 0}}));
  CHECK(sq.agree());
  CHECK(sq.polarized_vars == 2);
  const auto fam = benchmark_cm(ex_family(4, 2));
  CHECK(fam.agree());
  CHECK(fam.criterion_verdict);
  CHECK(fam.polarized_vars == 8);
  CHECK(format_benchmark(fam).find("agree") != std::string::npos);
}

TEST_CASE("property: criterion, rank jumps and polarization agree") {
  CorpusSpec spec{4, 3, 4, 0};
  for (std::uint64_t i = 0; i < 60; ++i) {
    const auto inst = make_instance(spec, 23, i);
    const auto& I = inst.ideal;
    int width = 0;
    for (int e : join(I)) width += e;
    const auto report = is_cohen_macaulay_ideal(I);
    CAPTURE(i);
    CHECK(report.verdict == exceptional_scan(I, inst.grading, i).empty());
    if (report.verdict) CHECK(is_unmixed(I));
    if (width <= 12) CHECK(report.verdict == polarization_cm(I).cohen_macaulay);
    CHECK(report.verdict == is_cohen_macaulay_ideal(I, {false, 3}).verdict);
  }
}
