#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mosoo/errors.hpp"
#include "mosoo/theory.hpp"

using namespace mosoo;

namespace {

BoundModel flat_model(double c_pack, std::size_t mult) {
  // one objective, geometric decay, d = 0, fixed multiplier
  BoundModel model;
  model.objectives.push_back({DeltaSequence::geometric(1.0, 0.5), c_pack, 0.0});
  model.recorded_multipliers.assign(4096, mult);
  return model;
}

}  // namespace

TEST_CASE("decay sequences") {
  CHECK(delta_from_holder(1.0, 3, 1, 0) == 0.5);
  CHECK(delta_from_holder(1.0, 3, 1, 1) == doctest::Approx(0.5 / 27.0).epsilon(1e-15));
  CHECK(delta_from_holder(2.0, 3, 2, 1) == 0.25);  // floor(1/2) = 0 rounds
  CHECK(delta_from_holder(2.0, 3, 2, 2) == doctest::Approx(0.25 * std::pow(3.0, -6.0)));

  DeltaSequence diam = DeltaSequence::holder_step(2.0, 3, 1, 1);
  CHECK(diam(0) == 0.25);
  CHECK(diam(1) == doctest::Approx(0.25 / 9.0).epsilon(1e-15));
  CHECK(diam(2) == doctest::Approx(0.25 / 81.0).epsilon(1e-15));

  DeltaSequence geo = DeltaSequence::geometric(2.0, 0.25);
  CHECK(geo(0) == 2.0);
  CHECK(geo(3) == doctest::Approx(2.0 * std::pow(0.25, 3.0)));

  for (const DeltaSequence& s : {diam, geo, DeltaSequence::holder_step(1.5, 3, 2, 3)}) {
    double prev = s(0);
    for (int h = 1; h < 60; ++h) {
      CHECK(s(h) <= prev);
      prev = s(h);
    }
    CHECK(s(59) < 1e-3);
  }

  CHECK_THROWS_AS(DeltaSequence::geometric(0.0, 0.5), usage_error);
  CHECK_THROWS_AS(DeltaSequence::geometric(1.0, 1.0), usage_error);
  CHECK_THROWS_AS(DeltaSequence::holder_step(0.5, 3, 1, 1), usage_error);
  CHECK_THROWS_AS(diam(-1), usage_error);
}

TEST_CASE("near optimality dimension") {
  CHECK(near_optimality_dimension(2.0, 2.0, 1) == 0.0);
  CHECK(near_optimality_dimension(4.0, 2.0, 2) == doctest::Approx(0.5));
  CHECK(near_optimality_dimension(3.0, 1.0, 1) == doctest::Approx(2.0 / 3.0));
  CHECK_THROWS_AS(near_optimality_dimension(2.0, 3.0, 1), usage_error);
  CHECK_THROWS_AS(near_optimality_dimension(2.0, 0.5, 1), usage_error);
  CHECK_THROWS_AS(near_optimality_dimension(2.0, 2.0, 0), usage_error);
}

TEST_CASE("depth reached by iteration t, unit constants") {
  BoundModel model = flat_model(1.0, 1);
  for (std::size_t t : {1ull, 2ull, 7ull, 100ull, 5000ull})
    CHECK(h_of_t(t, model) == int(t) - 1);
}

TEST_CASE("depth reached matches the closed form for constant terms") {
  BoundModel model;
  model.objectives.push_back({DeltaSequence::geometric(1.0, 0.5), 2.0, 0.0});
  model.objectives.push_back({DeltaSequence::geometric(1.0, 0.25), 1.5, 0.0});
  model.nominal = HMaxPolicy::power(0.5);
  // terms are max(2.0, 1.5) = 2.0 for every level
  for (std::size_t t = 1; t <= 3000; ++t) {
    std::size_t mult = std::size_t(model.nominal(t));
    int expect = int(std::ceil(double(t) / (2.0 * double(mult)))) - 1;
    CHECK(h_of_t(t, model) == expect);
  }
}

TEST_CASE("depth reached is non-decreasing in t") {
  BoundModel model = flat_model(2.0, 3);
  int prev = h_of_t(1, model);
  for (std::size_t t = 2; t < 800; ++t) {
    int h = h_of_t(t, model);
    CHECK(h >= prev);
    prev = h;
  }
}

TEST_CASE("multiplier sources") {
  BoundModel rec = flat_model(1.0, 4);
  rec.recorded_multipliers = {2, 3, 5};
  CHECK(rec.multiplier(1) == 2);
  CHECK(rec.multiplier(3) == 5);
  CHECK(rec.multiplier(10) == 5);  // clamped to the last recorded sweep
  CHECK_THROWS_AS(rec.multiplier(0), usage_error);

  BoundModel nom;
  nom.objectives.push_back({DeltaSequence::geometric(1.0, 0.5), 1.0, 0.0});
  nom.nominal = HMaxPolicy::power(0.5);
  CHECK(nom.multiplier(9) == 3);
  CHECK(nom.multiplier(1) == 1);
  nom.nominal = HMaxPolicy::unbounded();
  CHECK_THROWS_AS(nom.multiplier(5), usage_error);
}

TEST_CASE("loss bound starts at delta(0) and caps at hmax plus one") {
  BoundModel model = flat_model(1.0, 1);
  ObjectiveVector first = loss_bound(1, model, 10);
  CHECK(first == ObjectiveVector{1.0});

  // h(64) = 63 but a cap of 4 pins the depth at 5
  ObjectiveVector capped = loss_bound(64, model, 4);
  CHECK(capped[0] == doctest::Approx(std::pow(0.5, 5.0)));

  // unbounded cap saturates instead of overflowing
  ObjectiveVector free = loss_bound(64, model, std::numeric_limits<int>::max());
  CHECK(free[0] == doctest::Approx(std::pow(0.5, 63.0)));

  CHECK_THROWS_AS(loss_bound(1, model, -1), usage_error);
}

TEST_CASE("loss bound is non-increasing in t for a fixed cap") {
  BoundModel model = flat_model(2.0, 2);
  double prev = loss_bound(1, model, 20)[0];
  for (std::size_t t = 2; t < 400; ++t) {
    double b = loss_bound(t, model, 20)[0];
    CHECK(b <= prev);
    prev = b;
  }
}

TEST_CASE("indicator bound composes psi with the packed gap term") {
  // two identical objectives with c = 2 and d = 0 give psi + 5 * delta(hhat)
  BoundModel model;
  model.objectives.push_back({DeltaSequence::geometric(1.0, 0.5), 2.0, 0.0});
  model.objectives.push_back({DeltaSequence::geometric(1.0, 0.5), 2.0, 0.0});
  model.psi = 0.125;
  model.recorded_multipliers.assign(1024, 1);
  // terms are 2 per level, so h(t) = ceil(t/2) - 1
  std::size_t t = 8;
  int hhat = h_of_t(t, model);
  CHECK(hhat == 3);
  CHECK(indicator_bound(t, model, 100) ==
        doctest::Approx(0.125 + 5.0 * std::pow(0.5, 3.0)).epsilon(1e-15));

  // as t grows the bound settles at psi
  CHECK(indicator_bound(2000, model, 10000) == doctest::Approx(0.125).epsilon(1e-9));
}

TEST_CASE("zero near-optimality dimension decays like a stretched exponential") {
  BoundModel model;
  model.objectives.push_back({DeltaSequence::geometric(1.0, 0.5), 1.0, 0.0});
  model.nominal = HMaxPolicy::power(0.5);
  for (std::size_t t : {16ull, 64ull, 256ull, 1024ull, 4096ull}) {
    int cap = model.nominal(t);
    double bound = loss_bound(t, model, cap)[0];
    CHECK(bound <= std::pow(0.5, 0.4 * std::sqrt(double(t))));
  }
}

TEST_CASE("positive near-optimality dimension decays polynomially") {
  // d = 0.5 with the t^0.5 cap should give roughly 1/t decay
  BoundModel model;
  model.objectives.push_back({DeltaSequence::geometric(1.0, 0.5), 1.0, 0.5});
  model.nominal = HMaxPolicy::power(0.5);
  for (std::size_t t : {64ull, 256ull, 1024ull, 4096ull, 16384ull}) {
    int cap = model.nominal(t);
    double bound = loss_bound(t, model, cap)[0];
    CHECK(bound <= 30.0 / double(t));
    CHECK(bound >= 0.001 / double(t));  // and not absurdly tighter
  }
}

TEST_CASE("depth grows logarithmically when d is positive") {
  BoundModel model;
  model.objectives.push_back({DeltaSequence::geometric(1.0, 0.5), 1.0, 0.5});
  model.recorded_multipliers.assign(1 << 20, 1);
  double a = 2.0 / std::log(2.0);  // slope of the analytic inverse
  for (std::size_t t : {10ull, 100ull, 1000ull, 100000ull}) {
    int h = h_of_t(t, model);
    CHECK(double(h) <= a * std::log(double(t)) + 5.0);
  }
  CHECK(h_of_t(1000, model) > h_of_t(10, model));
}
