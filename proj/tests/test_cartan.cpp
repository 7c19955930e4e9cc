#include <doctest.h>

#include "crystal/cartan.hpp"
#include "crystal/errors.hpp"
#include "oracles.hpp"

using namespace crystal;

TEST_SUITE("cartan") {
  TEST_CASE("weyl_dim counts semistandard tableaux") {
    for (int n = 1; n <= 3; ++n) {
      const auto d = RootDatum::type_a(n);
      for (int size = 0; size <= 6; ++size)
        for (const auto& lambda : {Partition{size}, Partition{size, size / 2}, Partition{size, 1, 1}}) {
          Partition p = lambda;
          p.resize(n, 0);
          if (static_cast<int>(lambda.size()) > n) continue;
          if (!std::is_sorted(p.rbegin(), p.rend())) continue;
          const auto w = weight_of_partition(d, p);
          CHECK(weyl_dim(d, w) == oracle::brute_ssyt(p, n + 1).size());
        }
    }
  }

  TEST_CASE("cartan matrix") {
    const auto d = RootDatum::type_a(4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        CHECK(d.cartan[i][j] == d.cartan[j][i]);
        CHECK(d.cartan[i][j] == (i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0)));
      }
    CHECK(RootDatum::parse("A3").n == 3);
    CHECK_THROWS_AS(RootDatum::parse("D4"), DomainError);
    CHECK_THROWS_AS(RootDatum::parse("A0"), DomainError);
  }

  TEST_CASE("pairing") {
    const auto a2 = RootDatum::type_a(2), a3 = RootDatum::type_a(3);
    CHECK(pairing(a2, 1, simple_root(a2, 1)) == 2);
    CHECK(pairing(a2, 1, fundamental_weight(a2, 1) + fundamental_weight(a2, 2)) == 1);
    CHECK(pairing(a3, 2, simple_root(a3, 1)) == -1);
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) {
        CHECK(pairing(a3, i, fundamental_weight(a3, j)) == (i == j));
        CHECK(pairing(a3, i, simple_root(a3, j)) == a3.cartan[i - 1][j - 1]);
      }
    CHECK_THROWS_AS(pairing(a2, 3, Weight::zero(2)), DomainError);
  }

  TEST_CASE("partitions") {
    const auto a2 = RootDatum::type_a(2), a3 = RootDatum::type_a(3);
    CHECK(partition_of_weight(a2, Weight({1, 1})) == Partition{2, 1});
    CHECK(partition_of_weight(a2, Weight({0, 0})) == Partition{0, 0});
    CHECK(partition_of_weight(a3, Weight({2, 0, 0})) == Partition{2, 0, 0});
    CHECK_THROWS_AS(partition_of_weight(a2, Weight({1, -1})), DomainError);
    CHECK(weyl_dim(a2, Weight({1, 1})) == 8);
    CHECK(weyl_dim(a2, Weight({1, 0})) == 3);
    for (int k = 0; k < 8; ++k) CHECK(weyl_dim(RootDatum::type_a(1), Weight({k})) == static_cast<unsigned>(k + 1));
  }

  TEST_CASE("epsilon basis round trip") {
    for (const auto& c : {std::vector<int>{3, -1, 2}, {0, 0, 0}, {-5, 4, 1}}) {
      const Weight w(c);
      CHECK(from_epsilon(to_epsilon(w)) == w);
    }
    // shifting every epsilon coordinate is invisible
    CHECK(from_epsilon({2, 1, 0}) == from_epsilon({3, 2, 1}));
    CHECK(from_epsilon({2, 1, 0}) == Weight({1, 1}));
  }
}
