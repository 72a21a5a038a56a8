#include <doctest.h>

#include "expc/corpus.hpp"
#include "expc/distraction.hpp"
#include "expc/errors.hpp"
#include "support.hpp"

using namespace testing;

namespace {

Component comp(const std::vector<int>& sigma_labels, std::vector<int> base) {
  VertexSet s;
  for (int v : sigma_labels) s.insert(v - 1);
  return {s, std::move(base)};
}

std::vector<Component> sorted(std::vector<Component> v) {
  std::sort(v.begin(), v.end());
  return v;
}

RationalVector rv(const std::vector<int>& v) { return to_rational(v); }

bool in_catalog(const std::vector<CatalogEntry>& catalog, const SimplicialComplex& c) {
  return std::any_of(catalog.begin(), catalog.end(), [&](const CatalogEntry& e) { return e.complex == c; });
}

}  // namespace

TEST_CASE("distraction generators") {
  const auto gens = distraction_generators(ex_small());
  REQUIRE(gens.size() == 2);
  std::vector<std::string> text;
  for (const auto& g : gens) text.push_back(format_factored(g));
  std::sort(text.begin(), text.end());
  CHECK(text == std::vector<std::string>{"θ1(θ1-1)(θ1-2)θ2", "θ1(θ1-1)θ2(θ2-1)"});
  const auto sq = distraction_generators(ideal(2, {{1, 1}}));
  REQUIRE(sq.size() == 1);
  CHECK(sq[0] == FactoredGenerator{{0, 0}, {1, 0}});
  const auto pure = distraction_generators(ideal(1, {{2}}));
  CHECK(pure[0] == FactoredGenerator{{0, 0}, {0, 1}});
}

TEST_CASE("components of the worked examples") {
  CHECK(components(ex_main()) == sorted({comp({1, 2}, {0, 0, 0}), comp({2, 3}, {0, 0, 0}), comp({1, 3}, {0, 0, 0}),
                                         comp({1, 3}, {0, 1, 0}), comp({2}, {1, 0, 1})}));
  CHECK(components(ex_radcm()) ==
        sorted({comp({1, 2}, {0, 0, 0, 0, 0}), comp({1, 3}, {0, 0, 0, 0, 0}), comp({3, 4}, {0, 0, 0, 0, 0}),
                comp({1, 2}, {0, 0, 0, 0, 1}), comp({3, 4}, {0, 0, 0, 0, 1})}));
  CHECK(components(ex_small()) ==
        sorted({comp({1}, {0, 0}), comp({2}, {0, 0}), comp({2}, {1, 0}), comp({}, {2, 1})}));
}

TEST_CASE("point containment") {
  CHECK(contains_point(comp({1}, {0, 0}), rv({1, 0})));
  CHECK(contains_point(comp({2}, {1, 0}), rv({1, 0})));
  CHECK_FALSE(contains_point(comp({}, {2, 1}), rv({1, 0})));
  CHECK(contains_point(comp({1}, {0, 0}), RationalVector{Rational(1, 2), 0}));
  CHECK_FALSE(contains_point(comp({1}, {0, 0}), RationalVector{0, Rational(1, 2)}));
}

TEST_CASE("exponent complexes at points") {
  CHECK(facet_labels(exponent_complex_at(ex_small(), rv({1, 0}))) == std::vector<std::vector<int>>{{1}, {2}});
  CHECK(exponent_complex_at(ex_small(), rv({2, 1})) == SimplicialComplex::empty_face(2));
  CHECK(facet_labels(exponent_complex_at(ex_radcm(), rv({0, 0, 0, 0, 1}))) ==
        std::vector<std::vector<int>>{{1, 2}, {3, 4}});
  CHECK_THROWS_AS(exponent_complex_at(ex_small(), rv({3, 3})), DomainError);
}

TEST_CASE("exponent catalog") {
  const auto sq = exponent_catalog(ideal(2, {{1, 1}}));
  CHECK(sq.size() == 3);
  CHECK(in_catalog(sq, cx(2, {{1}, {2}})));
  CHECK(in_catalog(sq, cx(2, {{1}})));
  CHECK(in_catalog(sq, cx(2, {{2}})));
  for (const auto& e : sq) {
    RationalVector b = to_rational(e.witness);
    // witnesses with -1 stand for generic values; check them at 1/2
    for (auto& x : b)
      if (x == -1) x = Rational(1, 2);
    CHECK(exponent_complex_at(ideal(2, {{1, 1}}), b) == e.complex);
  }
  const auto main_catalog = exponent_catalog(ex_main());
  CHECK(main_catalog.size() == 9);
  CHECK(in_catalog(main_catalog, cx(3, {{2}, {1, 3}})));
  for (int k = 2; k <= 3; ++k) {
    std::vector<SimplicialComplex> a, b;
    for (const auto& e : exponent_catalog(ex_family(4, 1))) a.push_back(e.complex);
    for (const auto& e : exponent_catalog(ex_family(4, k))) b.push_back(e.complex);
    CAPTURE(k);
    CHECK(a == b);
  }
}

TEST_CASE("degree and unmixedness") {
  CHECK(degree(ex_small()) == 3);
  CHECK(degree(ex_main()) == 4);
  CHECK(degree(ex_radcm()) == 5);
  CHECK(is_unmixed(ex_radcm()));
  CHECK_FALSE(is_unmixed(ex_small()));
  CHECK(is_unmixed(stanley_reisner_ideal(cx(4, {{1, 2}, {2, 3}, {3, 4}}))));
}

TEST_CASE("property: components match the brute-force enumeration") {
  CorpusSpec spec{4, 3, 4, 0};
  for (std::uint64_t i = 0; i < 150; ++i) {
    auto rng = corpus_rng(99, i);
    const auto I = random_ideal(rng, spec);
    CAPTURE(i);
    const auto comps = components(I);
    CHECK(comps == brute_components(I));
    for (const auto& c : comps) {
      CHECK(covers(I, c.sigma, c.base));
      // every point of the component kills every distraction generator
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<int> b = c.base;
        for (int v : c.sigma.indices()) b[v] = static_cast<int>(rng() % 7);
        for (const auto& g : distraction_generators(I)) {
          bool zero = false;
          for (const auto& f : g) zero = zero || b[f.variable] == f.shift;
          CHECK(zero);
        }
      }
    }
  }
}

TEST_CASE("property: exponent complexes follow the direct membership rule") {
  CorpusSpec spec{4, 3, 4, 0};
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto rng = corpus_rng(17, i);
    const auto I = random_ideal(rng, spec);
    const auto top = join(I);
    std::vector<int> b(I.num_vars());
    for (int k = 0; k < I.num_vars(); ++k) b[k] = static_cast<int>(rng() % (top[k] + 1));
    CAPTURE(i);
    const auto expected = direct_exponent_facets(I, b);
    if (expected.empty()) {
      CHECK_THROWS_AS(exponent_complex_at(I, to_rational(b)), DomainError);
    } else {
      CHECK(facet_labels(exponent_complex_at(I, to_rational(b))) == expected);
    }
  }
}

TEST_CASE("property: degree, radical and catalog completeness") {
  CorpusSpec spec{4, 3, 4, 0};
  for (std::uint64_t i = 0; i < 80; ++i) {
    auto rng = corpus_rng(5, i);
    const auto I = random_ideal(rng, spec);
    CAPTURE(i);
    const auto sr = stanley_reisner_complex(radical(I));
    CHECK(exponent_complex_at(I, RationalVector(I.num_vars())) == sr);
    int top_facets = 0;
    for (VertexSet f : sr.facets()) top_facets += f.size() == krull_dimension(I);
    CHECK(degree(radical(I)) == top_facets);

    const auto catalog = exponent_catalog(I);
    const auto comps = components(I);
    for (int trial = 0; trial < 10; ++trial) {
      const auto& c = comps[rng() % comps.size()];
      RationalVector b = to_rational(c.base);
      for (int v : c.sigma.indices()) b[v] = Rational(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 3));
      CHECK(in_catalog(catalog, exponent_complex_at(I, b)));
    }
  }
}
