#include <doctest.h>

#include "expc/corpus.hpp"
#include "expc/errors.hpp"
#include "expc/rank.hpp"
#include "expc/simplicial.hpp"
#include "support.hpp"

using namespace testing;

namespace {

std::vector<long> profile_vector(const HomologyProfile& h, int top) {
  std::vector<long> out;
  for (int deg = -1; deg <= top; ++deg) out.push_back(h.rank(deg));
  return out;
}

}  // namespace

TEST_CASE("construction") {
  CHECK_THROWS_AS(cx(3, {{1, 2}, {1}}), ValidationError);
  CHECK_THROWS_AS(cx(2, {{3}}), ValidationError);
  CHECK_THROWS_AS(SimplicialComplex(2, {}), ValidationError);
  CHECK(SimplicialComplex::from_faces(3, {VertexSet(1), VertexSet(3), VertexSet(4)}) == cx(3, {{1, 2}, {3}}));
}

TEST_CASE("dimension and f-vector") {
  CHECK(dimension(cx(4, {{1, 2}, {3, 4}})) == 1);
  CHECK(dimension(SimplicialComplex::empty_face(3)) == -1);
  CHECK(dimension(SimplicialComplex::simplex(4)) == 3);
  CHECK(f_vector(SimplicialComplex::empty_face(2)) == std::vector<std::uint64_t>{1});
  CHECK(f_vector(cx(4, {{1, 2}, {3, 4}})) == std::vector<std::uint64_t>{1, 4, 2});
  CHECK(f_vector(SimplicialComplex::simplex(3)) == std::vector<std::uint64_t>{1, 3, 3, 1});
}

TEST_CASE("links") {
  const auto two_edges = cx(4, {{1, 2}, {3, 4}});
  CHECK(link(two_edges, VertexSet()) == two_edges);
  CHECK(facet_labels(link(two_edges, VertexSet::singleton(0))) == std::vector<std::vector<int>>{{2}});
  CHECK_THROWS_AS(link(two_edges, VertexSet::from_indices({0, 2})), DomainError);
  for (int n = 4; n <= 6; ++n) {
    const auto skel = SimplicialComplex::skeleton(n, n - 2);
    const VertexSet sigma = VertexSet::from_indices({0, 1});
    const auto lk = link(skel, sigma);
    for (VertexSet f : lk.facets()) {
      CHECK_FALSE(f.intersects(sigma));
      CHECK(f.size() == n - 4);
    }
    CHECK(lk.facets().size() == static_cast<std::size_t>(binomial(n - 2, n - 4)));
  }
}

TEST_CASE("reduced homology of small complexes") {
  const auto two_edges = reduced_homology(cx(4, {{1, 2}, {3, 4}}));
  CHECK(two_edges.rank(0) == 1);
  CHECK(two_edges.rank(1) == 0);
  CHECK(reduced_homology(cx(3, {{1, 2}, {1, 3}, {2, 3}})).rank(1) == 1);
  CHECK(reduced_homology(SimplicialComplex::empty_face(2)).rank(-1) == 1);
  CHECK(reduced_homology(SimplicialComplex::simplex(4)).acyclic());
  for (int n = 4; n <= 6; ++n) {
    const auto h = reduced_homology(SimplicialComplex::skeleton(n, n - 2));
    CAPTURE(n);
    CHECK(h.rank(n - 3) == n - 1);
    for (int deg = -1; deg < n - 3; ++deg) CHECK(h.rank(deg) == 0);
  }
}

TEST_CASE("homology spread over several degrees") {
  // a circle, an isolated point and a hollow tetrahedron: nonzero in degrees
  // 0, 1 and 2, which the modular pass cannot certify on its own
  const auto c = cx(8, {{1, 2}, {2, 3}, {1, 3}, {4}, {5, 6, 7}, {5, 6, 8}, {5, 7, 8}, {6, 7, 8}});
  const auto h = reduced_homology(c);
  CHECK(h.rank(0) == 2);
  CHECK(h.rank(1) == 1);
  CHECK(h.rank(2) == 1);
  CHECK(h == reduced_homology_exact(c));
  CHECK(profile_vector(h, 2) == brute_homology(c));
  // RP^2 is acyclic over Q
  const auto rp2 = cx(6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6}, {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
  CHECK(reduced_homology(rp2).acyclic());
  CHECK(profile_vector(reduced_homology(rp2), 2) == brute_homology(rp2));
}

TEST_CASE("property: homology agrees with dense brute force and Euler characteristic") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto c = random_complex(rng, 7);
    CAPTURE(c.to_string());
    const auto h = reduced_homology(c);
    const auto brute = brute_homology(c);
    CHECK(profile_vector(h, c.dimension()) == brute);
    CHECK(h == reduced_homology_exact(c));
    std::int64_t alternating = 0;
    for (int deg = -1; deg <= c.dimension(); ++deg) alternating += (deg % 2 == 0 ? 1 : -1) * h.rank(deg);
    CHECK(alternating == reduced_euler_characteristic(c));
  }
}

TEST_CASE("property: cones are acyclic") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto base = random_complex(rng, 6);
    const int apex = base.num_vertices();
    std::vector<VertexSet> facets;
    for (VertexSet f : base.facets()) facets.push_back(f | VertexSet::singleton(apex));
    const SimplicialComplex cone(apex + 1, facets);
    CAPTURE(cone.to_string());
    CHECK(reduced_homology(cone).acyclic());
  }
}

TEST_CASE("Reisner criterion") {
  for (int n = 4; n <= 6; ++n) CHECK(is_cohen_macaulay_complex(SimplicialComplex::skeleton(n, n - 2)).cohen_macaulay);
  const auto two_edges = is_cohen_macaulay_complex(cx(4, {{1, 2}, {3, 4}}));
  REQUIRE_FALSE(two_edges.cohen_macaulay);
  REQUIRE(two_edges.witness);
  CHECK(two_edges.witness->face.empty());
  CHECK(two_edges.witness->degree == 0);
  CHECK(is_cohen_macaulay_complex(SimplicialComplex::simplex(5)).cohen_macaulay);
  CHECK(is_cohen_macaulay_complex(SimplicialComplex::empty_face(3)).cohen_macaulay);
  // pinched: two triangles sharing a vertex are pure but not CM
  const auto bowtie = is_cohen_macaulay_complex(cx(5, {{1, 2, 3}, {3, 4, 5}}));
  REQUIRE_FALSE(bowtie.cohen_macaulay);
  CHECK(bowtie.witness->face == VertexSet::singleton(2));
}

TEST_CASE("property: Reisner against brute-force link homology") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = random_complex(rng, 6);
    bool expected = true;
    for (const auto& level : faces_by_size(c)) {
      for (VertexSet f : level) {
        const auto lk = link(c, f);
        const auto h = brute_homology(lk);
        for (int deg = -1; deg < lk.dimension(); ++deg) expected = expected && h[deg + 1] == 0;
      }
    }
    const auto got = is_cohen_macaulay_complex(c);
    CAPTURE(c.to_string());
    CHECK(got.cohen_macaulay == expected);
    if (got.cohen_macaulay) CHECK(c.is_pure());
    if (!got.cohen_macaulay) {
      REQUIRE(got.witness);
      const auto lk = link(c, got.witness->face);
      CHECK(got.witness->degree < lk.dimension());
      CHECK(brute_homology(lk)[got.witness->degree + 1] != 0);
    }
  }
}

TEST_CASE("Stanley-Reisner ideals") {
  CHECK(stanley_reisner_ideal(cx(2, {{1}, {2}})) == ideal(2, {{1, 1}}));
  CHECK(stanley_reisner_ideal(SimplicialComplex::empty_face(2)) == ideal(2, {{1, 0}, {0, 1}}));
  CHECK(stanley_reisner_ideal(cx(5, {{1, 2}, {3, 4}})) ==
        ideal(5, {{1, 0, 1, 0, 0}, {1, 0, 0, 1, 0}, {0, 1, 1, 0, 0}, {0, 1, 0, 1, 0}, {0, 0, 0, 0, 1}}));
  CHECK_THROWS_AS(stanley_reisner_ideal(SimplicialComplex::simplex(3)), DomainError);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = random_complex(rng, 7);
    if (c.facets().size() == 1 && c.facets()[0] == VertexSet::range(c.num_vertices())) continue;
    const auto I = stanley_reisner_ideal(c);
    CAPTURE(c.to_string());
    CHECK(stanley_reisner_complex(I) == c);
    CHECK(facet_labels(exponent_complex_at(I, RationalVector(c.num_vertices()))) == facet_labels(c));
  }
}
