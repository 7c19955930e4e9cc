#include <doctest.h>

#include "crystal/blambda.hpp"
#include "crystal/bridge.hpp"
#include "crystal/errors.hpp"

using namespace crystal;

namespace {

Multisegment ms(int n, std::vector<Segment> s) { return Multisegment(n, std::move(s)); }

}  // namespace

TEST_SUITE("bridge") {
  TEST_CASE("column (1,5,8,10)") {
    const Tableau column{{{1}, {5}, {8}, {10}}};
    const auto m = tableau_to_multisegment(column, 9);
    CHECK(m == ms(9, {{4, 9}, {3, 7}, {2, 4}}));
    CHECK(multisegment_to_tableau(m, {0, 0, 0, 1, 0, 0, 0, 0, 0}) == column);
  }

  TEST_CASE("two-box examples") {
    CHECK(tableau_to_multisegment(Tableau{{{1, 2}, {3}}}, 2) == ms(2, {{1, 1}, {2, 2}}));
    CHECK(tableau_to_multisegment(Tableau{{{1, 3}, {2}}}, 2) == ms(2, {{1, 2}}));
    CHECK(multisegment_to_tableau(ms(2, {{1, 1}, {2, 2}}), {1, 1}) == Tableau{{{1, 2}, {3}}});
    for (const Partition& shape : {Partition{3, 1}, Partition{2, 2, 1}, Partition{4}})
      CHECK(tableau_to_multisegment(highest_weight_tableau(shape), 3).empty());
    CHECK(multisegment_to_tableau(Multisegment(2), {1, 1}) == Tableau{{{1, 1}, {2}}});
  }

  TEST_CASE("round trips on every tableau of small shapes") {
    for (int n = 1; n <= 3; ++n) {
      const auto d = RootDatum::type_a(n);
      for (const auto& wv : enumerate_dimvecs(n, 3)) {
        const auto shape = shape_of_weight(d, Weight(wv));
        for (const auto& t : enumerate_ssyt(shape, n)) {
          const auto m = tableau_to_multisegment(t, n);
          CHECK(multisegment_to_tableau(m, wv) == t);
          CHECK(weight_tab(t, n) == Weight(wv) - root_combination(d, m.dimvec()));
        }
      }
    }
  }

  TEST_CASE("non-stable inputs are rejected") {
    CHECK_THROWS_AS(multisegment_to_tableau(ms(2, {{1, 1}, {1, 1}}), {1, 0}), DomainError);
    CHECK_THROWS_AS(multisegment_to_tableau(ms(2, {{2, 2}}), {1, 0}), DomainError);
    CHECK_THROWS_AS(multisegment_to_tableau(ms(3, {{1, 3}, {2, 2}}), {0, 1, 0}), DomainError);
    CHECK_THROWS_AS(tableau_to_multisegment(Tableau{{{2, 1}}}, 2), DomainError);
  }

  TEST_CASE("isomorphism check") {
    const auto d = RootDatum::type_a(2);
    const auto g = generate_tableau_crystal(d, {2, 1}).graph;
    const auto self = crystal_isomorphic(g, g);
    CHECK(self.isomorphic);
    CHECK(self.matching.size() == 8);
    const GeometricBinf model(2);
    const auto geo = generate_blambda(model, {1, 1});
    const auto tab = generate_tableau_crystal(d, {2, 1});
    const auto iso = crystal_isomorphic(geo.graph, tab.graph);
    CHECK(iso.isomorphic);
    CHECK(iso.matching.size() == 8);
    for (const auto& [a, b] : iso.matching) CHECK(tableau_to_multisegment(tab.elements[b], 2) == geo.elements[a]);
    const auto w1 = generate_blambda(model, {1, 0}).graph, w2 = generate_blambda(model, {0, 1}).graph;
    const auto no = crystal_isomorphic(w1, w2);
    CHECK_FALSE(no.isomorphic);
    CHECK_FALSE(no.mismatch.empty());
    CHECK_FALSE(crystal_isomorphic(g, w1).isomorphic);
  }
}
