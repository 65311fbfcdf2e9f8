#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mosoo/errors.hpp"
#include "mosoo/problems.hpp"

using namespace mosoo;

TEST_CASE("worked example values") {
  Problem p = worked_example();
  CHECK(p.n() == 2);
  CHECK(p.m() == 2);
  auto y0 = p.evaluate({0.0, 0.0});
  CHECK(y0[0] == doctest::Approx(0.4981).epsilon(1e-14));
  CHECK(y0[1] == doctest::Approx(0.4981).epsilon(1e-14));
  auto y1 = p.evaluate({-2.0 / 3.0, 0.0});
  CHECK(y1[0] == doctest::Approx(1.2758777777777778).epsilon(1e-14));
  CHECK(y1[1] == doctest::Approx(0.6092111111111111).epsilon(1e-14));
  // each objective vanishes at its own optimum
  CHECK(p.evaluate({0.25, 0.66})[0] == 0.0);
  CHECK(p.evaluate({-0.25, 0.66})[1] == 0.0);
  REQUIRE(p.metadata().ideal.has_value());
  CHECK(*p.metadata().ideal == ObjectiveVector{0.0, 0.0});
  REQUIRE(p.metadata().optima.size() == 2);
}

TEST_CASE("holder family evaluates the sup-norm power distances") {
  Problem p = holder_family(2, 2.0, 3.0, 0.25, 0.75);
  auto y = p.evaluate({0.25, 0.25});
  CHECK(y[0] == 0.0);
  CHECK(y[1] == doctest::Approx(std::pow(0.5, 3.0)).epsilon(1e-14));
  auto z = p.evaluate({1.0, 0.0});
  // sup distance to (0.25,0.25) is 0.75, to (0.75,0.75) is 0.75
  CHECK(z[0] == doctest::Approx(0.75 * 0.75).epsilon(1e-14));
  CHECK(z[1] == doctest::Approx(std::pow(0.75, 3.0)).epsilon(1e-14));

  CHECK_THROWS_AS(holder_family(0, 2.0, 2.0, 0.1, 0.9), usage_error);
  CHECK_THROWS_AS(holder_family(1, 0.5, 2.0, 0.1, 0.9), usage_error);
  CHECK_THROWS_AS(holder_family(1, 2.0, 2.0, -0.1, 0.9), usage_error);
  CHECK_THROWS_AS(holder_family(2, 2.0, 2.0, std::vector<double>{0.1}, {0.9, 0.9}),
                  usage_error);
}

TEST_CASE("classic problems") {
  Problem s = classic_problem("schaffer");
  CHECK(s.evaluate({0.0}) == ObjectiveVector{0.0, 4.0});
  CHECK(s.evaluate({2.0}) == ObjectiveVector{4.0, 0.0});
  CHECK(s.evaluate({1.0}) == ObjectiveVector{1.0, 1.0});

  Problem f = classic_problem("fonseca2");
  const double c = 1.0 / std::sqrt(2.0);
  CHECK(f.evaluate({c, c})[0] == 0.0);
  CHECK(f.evaluate({-c, -c})[1] == 0.0);

  Problem q = classic_problem("quadratic1d");
  CHECK(q.m() == 1);
  CHECK(q.evaluate({0.25}) == ObjectiveVector{0.0});

  CHECK_THROWS_AS(classic_problem("nope"), usage_error);
}

TEST_CASE("registry instantiates every id") {
  for (const auto& id : registry_ids()) {
    Problem p = make_registry_problem(id);
    CHECK(p.n() >= 1);
    CHECK(p.m() >= 1);
    // spot check finiteness across the box
    std::mt19937_64 rng(31);
    for (int i = 0; i < 2000; ++i) {
      std::vector<double> x(p.n());
      for (int d = 0; d < p.n(); ++d) {
        double u = double(rng() >> 11) * 0x1.0p-53;
        x[d] = p.box().lower[d] + u * (p.box().upper[d] - p.box().lower[d]);
      }
      auto y = p.evaluate(x);
      CHECK(int(y.size()) == p.m());
    }
  }
  CHECK_THROWS_AS(make_registry_problem("missing"), usage_error);
}

TEST_CASE("evaluate rejects points outside the box") {
  Problem p = worked_example();
  CHECK_THROWS_AS(p.evaluate({2.0, 0.0}), usage_error);
  CHECK_THROWS_AS(p.evaluate({0.0}), usage_error);
}

TEST_CASE("non-finite objectives are reported with the point") {
  Problem bad("bad", Box{{0.0}, {1.0}}, 1, [](const std::vector<double>& x) -> ObjectiveVector {
    return {x[0] < 0.5 ? 1.0 : std::numeric_limits<double>::quiet_NaN()};
  });
  CHECK(bad.evaluate({0.1}) == ObjectiveVector{1.0});
  CHECK_THROWS_WITH_AS(bad.evaluate({0.75}), doctest::Contains("0.75"), numeric_error);
}

TEST_CASE("budgeted evaluator throws exactly on call cap+1") {
  Problem p = worked_example();
  BudgetedEvaluator eval(p, 3);
  CHECK(eval.remaining() == 3);
  eval({0.0, 0.0});
  eval({0.5, 0.5});
  eval({-0.5, 0.5});
  CHECK(eval.used() == 3);
  CHECK(eval.remaining() == 0);
  CHECK_THROWS_AS(eval({0.1, 0.1}), budget_exhausted);
  CHECK(eval.used() == 3);  // the failed call did not evaluate

  const auto& log = eval.log();
  REQUIRE(log.size() == 3);
  CHECK(log[0].index == 0);
  CHECK(log[2].index == 2);
  CHECK(log[1].x == std::vector<double>{0.5, 0.5});
  CHECK(log[1].y == p.evaluate({0.5, 0.5}));
}
