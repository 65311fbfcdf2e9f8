#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mosoo/errors.hpp"
#include "mosoo/indicators.hpp"
#include "mosoo/problems.hpp"
#include "oracles.hpp"

using namespace mosoo;

TEST_CASE("additive epsilon basics") {
  CHECK(additive_epsilon({{0, 1}, {1, 0}}, {{0, 0}}) == 1.0);
  CHECK(additive_epsilon({{0, 0}}, {{1, 1}}) == -1.0);
  CHECK(additive_epsilon({{0, 1}, {1, 0}}, {{0, 1}, {1, 0}}) == 0.0);
  CHECK_THROWS_AS(additive_epsilon({}, {{0, 0}}), usage_error);
  CHECK_THROWS_AS(additive_epsilon({{0, 0}}, {{0, 0, 0}}), usage_error);
}

TEST_CASE("additive epsilon equals the spelled-out triple loop") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t m = 1 + rng() % 3;
    auto a = oracle::random_vectors(rng, 1 + rng() % 40, m, -1.0, 1.0);
    auto b = oracle::random_vectors(rng, 1 + rng() % 40, m, -1.0, 1.0);
    CHECK(additive_epsilon(a, b) == oracle::additive_epsilon(a, b));
  }
}

TEST_CASE("additive epsilon shrinks when the candidate set grows") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = oracle::random_vectors(rng, 10, 2, 0.0, 1.0);
    auto extra = oracle::random_vectors(rng, 5, 2, 0.0, 1.0);
    auto b = oracle::random_vectors(rng, 10, 2, 0.0, 1.0);
    auto grown = a;
    grown.insert(grown.end(), extra.begin(), extra.end());
    CHECK(additive_epsilon(grown, b) <= additive_epsilon(a, b));
    CHECK(additive_epsilon(a, a) == 0.0);
  }
}

TEST_CASE("hypervolume worked cases") {
  CHECK(hypervolume_2d({{0, 2}, {2, 0}}, {3, 3}) == 5.0);
  CHECK(hypervolume_2d({{1, 1}, {2, 2}}, {3, 3}) == 4.0);  // (2,2) adds nothing
  CHECK(hypervolume_2d({{1, 1}}, {3, 3}) == 4.0);

  std::size_t dropped = 0;
  CHECK(hypervolume_2d({{1, 1}, {4, 0}, {3, 1}}, {3, 3}, &dropped) == 4.0);
  CHECK(dropped == 2);  // outside and on the boundary both discarded

  CHECK(hypervolume_2d({{5, 5}}, {3, 3}) == 0.0);
  CHECK_THROWS_AS(hypervolume_2d({{1, 1, 1}}, {3, 3, 3}), usage_error);
  CHECK_THROWS_AS(hypervolume_2d({}, {3, 3}), usage_error);
}

TEST_CASE("hypervolume is invariant to dominated clutter") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    auto pts = oracle::random_vectors(rng, 25, 2, 0.0, 1.0);
    ObjectiveVector ref = {1.2, 1.2};
    double full = hypervolume_2d(pts, ref);
    double filtered = hypervolume_2d(nd_filter(pts), ref);
    CHECK(full == filtered);
  }
}

TEST_CASE("hypervolume agrees with a Monte Carlo estimate") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 8; ++trial) {
    auto pts = oracle::random_vectors(rng, 30, 2, 0.0, 1.0);
    ObjectiveVector ref = {1.1, 1.1};
    double exact = hypervolume_2d(pts, ref);
    auto mc = oracle::mc_hypervolume_2d(pts, ref, 200000, rng());
    CHECK(std::abs(exact - mc.estimate) <= 3.0 * mc.stderr_ + 1e-12);
  }
}

TEST_CASE("sampled reference fronts are deterministic and non-dominated") {
  Problem p = worked_example();
  ReferenceFront a = sample_reference_front(p, 20000, 42);
  ReferenceFront b = sample_reference_front(p, 20000, 42);
  CHECK(a.members == b.members);
  CHECK(a.provenance == ReferenceFront::Provenance::sampled);
  CHECK(a.sample_count == 20000);
  CHECK(a.seed == 42);

  CHECK(a.members == nd_filter(a.members));
  ObjectiveVector ideal = empirical_ideal(a.members);
  CHECK(ideal[0] <= 2e-2);
  CHECK(ideal[1] <= 2e-2);
  CHECK_THROWS_AS(sample_reference_front(p, 0, 1), usage_error);
}

TEST_CASE("sampled front of the holder line hugs the analytic front") {
  Problem p = holder_family(1, 2.0, 2.0, 0.25, 0.75);
  ReferenceFront f = sample_reference_front(p, 5000, 9);
  // between the optima, sqrt(f1) + sqrt(f2) = 0.5 identically; samples just
  // outside the interval survive the filter with a small positive excess
  for (const auto& y : f.members) {
    double s = std::sqrt(y[0]) + std::sqrt(y[1]);
    CHECK(s >= 0.5 - 1e-12);
    CHECK(s <= 0.5 + 5e-3);
  }
}

TEST_CASE("front extrema from metadata and from a front") {
  Problem p = worked_example();
  ApproximationSet ex = front_extrema(p);
  REQUIRE(ex.size() == 2);
  CHECK(ex[0][0] == 0.0);
  CHECK(ex[0][1] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(ex[1][0] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(ex[1][1] == 0.0);

  ApproximationSet schaffer_ex = front_extrema(classic_problem("schaffer"));
  CHECK(schaffer_ex == ApproximationSet{{0.0, 4.0}, {4.0, 0.0}});

  ReferenceFront front = analytic_front({{0.0, 1.0}, {0.5, 0.5}, {1.0, 0.0}});
  CHECK(front_extrema(front) == ApproximationSet{{0.0, 1.0}, {1.0, 0.0}});

  Problem bare("bare", Box{{0.0}, {1.0}}, 2,
               [](const std::vector<double>& x) -> ObjectiveVector { return {x[0], 1 - x[0]}; });
  CHECK_THROWS_AS(front_extrema(bare), usage_error);
}

TEST_CASE("conflict dimension") {
  ReferenceFront tight = analytic_front({{0.0, 1.0}, {1.0, 0.0}});
  CHECK(conflict_dimension({{0.0, 1.0}, {1.0, 0.0}}, tight) == 0.0);

  ReferenceFront wide = analytic_front({{0.0, 1.0}, {0.4, 0.4}, {1.0, 0.0}});
  CHECK(conflict_dimension({{0.0, 1.0}, {1.0, 0.0}}, wide) == doctest::Approx(0.6));

  ReferenceFront solo = analytic_front({{0.3, 0.3}});
  CHECK(conflict_dimension({{0.3, 0.3}}, solo) == 0.0);
  // estimates a hair above the true front clamp to zero instead of going negative
  CHECK(conflict_dimension({{0.0, 0.0}}, solo) == 0.0);
}

TEST_CASE("epsilon curve tracks the exact indicator over growing prefixes") {
  std::mt19937_64 rng(13);
  auto front_pts = nd_filter(oracle::random_vectors(rng, 60, 2, 0.0, 1.0));
  ReferenceFront front = analytic_front(front_pts);
  EpsilonCurve curve(front);
  CHECK_THROWS_AS((void)curve.value(), usage_error);

  std::vector<ObjectiveVector> prefix;
  for (int i = 0; i < 80; ++i) {
    auto y = oracle::random_vector(rng, 2, 0.0, 1.0);
    prefix.push_back(y);
    curve.add_point(y);
    CHECK(curve.value() == additive_epsilon(prefix, front.members));
  }

  // values never increase as coverage grows
  EpsilonCurve mono(front);
  double prev = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 50; ++i) {
    mono.add_point(oracle::random_vector(rng, 2, 0.0, 1.0));
    CHECK(mono.value() <= prev);
    prev = mono.value();
  }
}
