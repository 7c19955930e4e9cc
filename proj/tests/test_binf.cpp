#include <doctest.h>

#include <map>

#include "crystal/binf.hpp"
#include "crystal/errors.hpp"
#include "oracles.hpp"

using namespace crystal;

namespace {

// Flattened Omega-bar part of each basis vector of a fiber, as columns.
Matrix fiber_columns(const ConormalFiber& fib) {
  std::size_t len = 0;
  std::vector<std::size_t> offset;
  for (const auto& m : fib.base.maps) {
    offset.push_back(len);
    len += m.rows() * m.cols();
  }
  Matrix out(len, fib.dimension());
  for (std::size_t b = 0; b < fib.dimension(); ++b)
    for (const auto& e : fib.basis[b]) out(offset[e.arrow] + e.row * fib.base.maps[e.arrow].cols() + e.col, b) = e.value;
  return out;
}

Multisegment ms(int n, std::vector<Segment> s) { return Multisegment(n, std::move(s)); }

}  // namespace

TEST_SUITE("binf") {
  TEST_CASE("block fiber equals the dense fiber") {
    for (int n = 1; n <= 3; ++n)
      for (const auto& m : enumerate_multisegments_up_to(n, 5)) {
        const auto block = conormal_fiber(m), dense = conormal_fiber_dense(m);
        CHECK(block.dimension() == dense.dimension());
        const Matrix a = fiber_columns(block), b = fiber_columns(dense);
        const Matrix both = Matrix::hstack(a.rows(), std::vector<Matrix>{a, b});
        CHECK(rank(a) == a.cols());
        CHECK(rank(both) == rank(b));
        for (std::size_t k = 0; k < block.dimension(); ++k) {
          std::vector<Rational> unit(block.dimension());
          unit[k] = 1;
          CHECK(moment_map_vanishes(block.point(unit)));
        }
      }
  }

  TEST_CASE("component counts follow the Kostant partition function") {
    for (int n = 1; n <= 3; ++n)
      for (const auto& v : enumerate_dimvecs(n, 6))
        CHECK(enumerate_multisegments(n, v).size() == static_cast<std::size_t>(oracle::kostant(v)));
  }

  TEST_CASE("conormal fiber examples") {
    CHECK(conormal_fiber(ms(2, {{1, 2}})).dimension() == 0);
    CHECK(conormal_fiber(ms(2, {{1, 1}, {2, 2}})).dimension() == 1);
    // nested-staircase pair: x-bar may send the lower segment into the upper one
    const auto fib = conormal_fiber(ms(3, {{2, 3}, {1, 2}}));
    CHECK(fib.dimension() >= 1);
    auto rng = stream(1, "fiber");
    const auto p = fib.sample(rng, 100);
    CHECK_FALSE(p.map("a1bar").is_zero());
    // reversed nesting allows nothing
    CHECK(conormal_fiber(ms(3, {{1, 3}, {2, 2}})).dimension() == 0);
  }

  TEST_CASE("epsilon on components") {
    const GeometricBinf a2(2);
    CHECK(a2.epsilons(Multisegment(2)) == std::vector<int>{0, 0});
    CHECK(a2.epsilon(ms(2, {{1, 1}, {2, 2}}), 1) == 1);
    CHECK(a2.epsilon(ms(2, {{1, 1}, {2, 2}}), 2) == 0);
    CHECK(a2.epsilon(ms(2, {{1, 2}}), 1) == 0);
    CHECK(a2.epsilon(ms(2, {{1, 2}}), 2) == 1);
    CHECK_THROWS_AS(a2.epsilon(Multisegment(2), 3), DomainError);
  }

  TEST_CASE("epsilon does not move with more samples") {
    for (int n = 1; n <= 3; ++n) {
      const GeometricBinf five(n, Genericity{11, 5, 1000}), twenty(n, Genericity{12, 20, 1000});
      for (const auto& m : enumerate_multisegments_up_to(n, 6)) CHECK(five.epsilons(m) == twenty.epsilons(m));
    }
  }

  TEST_CASE("e_max examples") {
    const GeometricBinf a2(2);
    const auto m = ms(2, {{1, 1}, {2, 2}});
    CHECK(a2.e_max(ms(2, {{1, 2}}), 1) == std::pair{ms(2, {{1, 2}}), 0});
    CHECK(a2.e_max(m, 1) == std::pair{ms(2, {{2, 2}}), 1});
    CHECK(a2.e_max(ms(2, {{1, 1}}), 1) == std::pair{Multisegment(2), 1});
  }

  TEST_CASE("f and e examples") {
    const GeometricBinf a1(1), a2(2);
    CHECK(a2.f(Multisegment(2), 1) == ms(2, {{1, 1}}));
    Multisegment m(1);
    for (int k = 1; k <= 5; ++k) {
      m = a1.f(m, 1);
      CHECK(m == Multisegment(1, std::vector<Segment>(k, {1, 1})));
    }
    CHECK(a2.f(ms(2, {{1, 1}}), 2) == ms(2, {{1, 2}}));
    CHECK_FALSE(a2.e(Multisegment(2), 1));
    CHECK(a2.e(ms(2, {{1, 1}}), 1) == Multisegment(2));
    CHECK(a2.e(ms(2, {{1, 2}}), 2) == ms(2, {{1, 1}}));
  }

  TEST_CASE("e inverts f and the stratum round trip closes") {
    for (int n = 1; n <= 3; ++n) {
      const GeometricBinf model(n);
      for (const auto& m : enumerate_multisegments_up_to(n, 5))
        for (int i = 1; i <= n; ++i) {
          const auto up = model.f(m, i);
          CHECK(model.e(up, i) == m);
          CHECK(model.epsilon(up, i) == model.epsilon(m, i) + 1);
          if (model.epsilon(m, i) == 0) {
            Multisegment x = m;
            for (int c = 1; c <= 3; ++c) {
              x = model.f(x, i);
              CHECK(model.e_max(x, i) == std::pair{m, c});
            }
          }
        }
      CHECK(model.fallback_count() == 0);
    }
  }

  TEST_CASE("generated B(infinity) graphs") {
    const GeometricBinf a1(1), a2(2), a3(3);
    const auto g1 = generate_binf(a1, 3);
    CHECK(g1.graph.nodes().size() == 4);
    CHECK(g1.graph.edges().size() == 3);
    const auto d1 = generate_binf(a2, 1);
    CHECK(d1.graph.nodes().size() == 3);
    CHECK(d1.graph.edges().size() == 2);
    const auto d2 = generate_binf(a2, 2);
    CHECK(d2.graph.nodes().size() == enumerate_multisegments_up_to(2, 2).size());
    CHECK(d2.graph.nodes().size() == 7);
    for (const auto* model : {&a1, &a2, &a3}) {
      const auto g = generate_binf(*model, 5);
      CHECK(g.graph.nodes().size() == enumerate_multisegments_up_to(model->rank(), 5).size());
      const auto bad = check_crystal_axioms(g.graph, model->datum(), {false});
      CHECK_MESSAGE(bad.empty(), (bad.empty() ? "" : bad.front()));
    }
    CHECK_THROWS_AS(generate_binf(a2, -1), DomainError);
    CHECK_THROWS_AS(generate_binf(a2, 6, {1, 10}), DomainError);
  }

  TEST_CASE("graph output does not depend on the job count") {
    const GeometricBinf one(3), four(3);
    CHECK(generate_binf(one, 5, {1}).graph.to_json() == generate_binf(four, 5, {4}).graph.to_json());
  }

  TEST_CASE("fast rule") {
    std::map<int, GeometricBinf> models;
    for (int n = 1; n <= 3; ++n) models.emplace(std::piecewise_construct, std::forward_as_tuple(n), std::forward_as_tuple(n));
    const auto report = calibrate_fast_rule([&](int n) -> const GeometricBinf& { return models.at(n); });
    const auto& rule = report.rule;
    CHECK(report.spot_checks == 500);
    CHECK(report.survivors.size() + report.rejected.size() == 32);
    // reading the word backwards swaps the brackets and the pick, so every
    // rule appears twice; the table pins it down up to that mirror
    const FastRule mirror{rule.right_ends, !rule.ascending, !rule.movable_first, !rule.movable_opens, !rule.leftmost};
    CHECK(report.survivors == std::vector<std::string>{rule.describe(), mirror.describe()});
    MESSAGE("calibrated: " << rule.describe());

    for (int i = 1; i <= 3; ++i) CHECK(rule.f(Multisegment(3), i) == ms(3, {{i, i}}));
    for (const auto& v : enumerate_dimvecs(2, 4)) {
      if (v[0] > 2 || v[1] > 2) continue;
      for (const auto& m : enumerate_multisegments(2, v))
        for (int i = 1; i <= 2; ++i) {
          CHECK(rule.f(m, i) == models.at(2).f(m, i));
          CHECK(rule.e(m, i) == models.at(2).e(m, i));
          CHECK(rule.epsilon(m, i) == models.at(2).epsilon(m, i));
        }
    }
    auto rng = stream(2, "fast-inverse");
    for (int trial = 0; trial < 500; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 3);
      Multisegment m(n);
      const int total = static_cast<int>(rng() % 9);
      while (m.total() < total) {
        const int i = 1 + static_cast<int>(rng() % n);
        m = m.with({i, i + static_cast<int>(rng() % (n - i + 1))});
      }
      const int i = 1 + static_cast<int>(rng() % n);
      CHECK(rule.e(rule.f(m, i), i) == m);
    }
    const auto fast = generate_binf_fast(models.at(3).datum(), rule, 5);
    const auto geo = generate_binf(models.at(3), 5);
    CHECK(fast.graph.to_json() == geo.graph.to_json());
  }

  TEST_CASE("every convention is enumerated once") {
    const auto all = FastRule::all();
    CHECK(all.size() == 32);
    std::set<std::string> names;
    for (const auto& r : all) names.insert(r.describe());
    CHECK(names.size() == 32);
  }
}
