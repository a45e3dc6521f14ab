#include <array>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "osmotic/rng.hpp"
#include "osmotic/selection.hpp"

using namespace osmotic;

TEST_CASE("roulette distribution normalizes fitness values") {
  const std::array<double, 3> f{1.0, 2.0, 3.0};
  const auto dist = roulette_distribution(std::span<const double>(f));
  REQUIRE(dist.entries.size() == 3);
  CHECK(dist.entries[0].probability == doctest::Approx(1.0 / 6.0));
  CHECK(dist.entries[1].probability == doctest::Approx(2.0 / 6.0));
  CHECK(dist.entries[2].probability == doctest::Approx(3.0 / 6.0));
  double sum = 0;
  for (const auto& e : dist.entries) sum += e.probability;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("equal fitness values select uniformly; a single service is certain") {
  const std::array<double, 4> equal{2.5, 2.5, 2.5, 2.5};
  for (const auto& e : roulette_distribution(std::span<const double>(equal)).entries) {
    CHECK(e.probability == doctest::Approx(0.25));
  }
  const std::array<double, 1> one{7.0};
  CHECK(roulette_distribution(std::span<const double>(one)).entries[0].probability ==
        doctest::Approx(1.0));
}

TEST_CASE("degenerate roulette inputs are rejected, not silently uniformed") {
  const std::array<double, 3> zeros{0.0, 0.0, 0.0};
  CHECK_THROWS_AS(roulette_distribution(std::span<const double>(zeros)), DomainError);
  const std::array<double, 2> negative{1.0, -0.5};
  CHECK_THROWS_AS(roulette_distribution(std::span<const double>(negative)), DomainError);
  CHECK_THROWS_AS(roulette_distribution({}), DomainError);
}

TEST_CASE("order preservation: higher fitness never gets lower probability") {
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> f;
    const auto n = uniform_int(rng, 1, 12);
    for (std::int64_t i = 0; i < n; ++i) f.push_back(uniform_double(rng, 0.0, 10.0));
    f[0] += 0.1;  // ensure not all zero
    const auto dist = roulette_distribution(std::span<const double>(f));
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = 0; j < f.size(); ++j) {
        if (f[i] >= f[j]) {
          REQUIRE(dist.entries[i].probability >= dist.entries[j].probability - 1e-12);
        }
      }
    }
  }
}

TEST_CASE("layer selection probabilities") {
  const auto p0 = layer_selection_probabilities(0.0, 5.0, 10.0);
  CHECK(p0.osmotic_raw == doctest::Approx(0.0));
  CHECK(p0.public_raw == doctest::Approx(0.0));

  const auto pe = layer_selection_probabilities(2.0, 8.0, 8.0);
  CHECK(pe.osmotic_raw == doctest::Approx(pe.public_raw));

  // With the public threshold sum above the osmotic one, the osmotic score
  // dominates for any service fitness.
  std::mt19937_64 rng(65);
  for (int i = 0; i < 1000; ++i) {
    const double f = uniform_double(rng, 0.0, 10.0);
    const double th_osm = uniform_double(rng, 0.1, 5.0);
    const double th_pub = th_osm + uniform_double(rng, 0.0, 5.0);
    const auto p = layer_selection_probabilities(f, th_osm, th_pub);
    REQUIRE(p.osmotic_raw >= p.public_raw - 1e-12);
    REQUIRE(p.osmotic <= 1.0);
    REQUIRE(p.public_cloud <= 1.0);
  }

  CHECK_THROWS_AS(layer_selection_probabilities(1.0, 0.0, 1.0), DomainError);
}

TEST_CASE("raw layer scores can exceed 1 and the capped values report that") {
  const auto p = layer_selection_probabilities(6.0, 2.0, 4.0);
  CHECK(p.osmotic_raw == doctest::Approx(3.0));
  CHECK(p.public_raw == doctest::Approx(1.5));
  CHECK(p.osmotic == doctest::Approx(1.0));
  CHECK(p.public_cloud == doctest::Approx(1.0));
}

TEST_CASE("selection-probability sandwich in and out of its regime") {
  // Total fitness exactly midway between the bounds.
  const std::array<double, 4> f{1.0, 2.0, 3.0, 4.0};  // sum 10
  CHECK(check_theorem1_bounds(std::span<const double>(f), 5.0, 15.0) ==
        Theorem1Result::Holds);
  // Boundary: total equals the osmotic threshold sum.
  CHECK(check_theorem1_bounds(std::span<const double>(f), 10.0, 15.0) ==
        Theorem1Result::Holds);
  // Outside the regime the check is not applicable rather than failed.
  CHECK(check_theorem1_bounds(std::span<const double>(f), 11.0, 15.0) ==
        Theorem1Result::NotApplicable);
  CHECK(check_theorem1_bounds(std::span<const double>(f), 5.0, 9.0) ==
        Theorem1Result::NotApplicable);
}

TEST_CASE("the sandwich holds on every random instance inside the regime") {
  std::mt19937_64 rng(4242);
  int applicable = 0;
  for (int i = 0; i < 10000; ++i) {
    std::vector<double> f;
    const auto n = uniform_int(rng, 1, 16);
    double total = 0;
    for (std::int64_t j = 0; j < n; ++j) {
      f.push_back(uniform_double(rng, 0.01, 10.0));
      total += f.back();
    }
    const double th_osm = total * uniform_double(rng, 0.2, 1.0);
    const double th_pub = total * uniform_double(rng, 1.0, 5.0);
    const auto result = check_theorem1_bounds(std::span<const double>(f), th_osm, th_pub);
    REQUIRE(result != Theorem1Result::Violated);
    if (result == Theorem1Result::Holds) ++applicable;
  }
  CHECK(applicable == 10000);
}

TEST_CASE("sampling follows the distribution and is reproducible") {
  const std::array<double, 3> f{1.0, 2.0, 3.0};
  const auto dist = roulette_distribution(std::span<const double>(f));

  SUBCASE("a single-entry distribution always returns that entry") {
    const std::array<double, 1> one{4.0};
    const auto single = roulette_distribution(std::span<const double>(one));
    std::mt19937_64 rng(1);
    for (int i = 0; i < 100; ++i) CHECK(sample(single, rng) == 0);
  }

  SUBCASE("same seed, same draw sequence") {
    std::mt19937_64 a(9), b(9);
    for (int i = 0; i < 1000; ++i) REQUIRE(sample(dist, a) == sample(dist, b));
  }

  SUBCASE("empirical frequencies stay within 3 sigma over 1e5 draws") {
    std::mt19937_64 rng(31415);
    constexpr int kDraws = 100000;
    std::array<int, 3> counts{};
    for (int i = 0; i < kDraws; ++i) counts[sample(dist, rng)]++;
    for (std::size_t i = 0; i < 3; ++i) {
      const double p = dist.entries[i].probability;
      const double sigma = std::sqrt(kDraws * p * (1.0 - p));
      CHECK(std::fabs(counts[i] - kDraws * p) <= 3.0 * sigma);
    }
  }

  SUBCASE("a fifty-fifty split stays within 3 sigma") {
    const std::array<double, 2> half{1.0, 1.0};
    const auto coin = roulette_distribution(std::span<const double>(half));
    std::mt19937_64 rng(2718);
    constexpr int kDraws = 100000;
    int heads = 0;
    for (int i = 0; i < kDraws; ++i) heads += sample(coin, rng) == 0 ? 1 : 0;
    const double sigma = std::sqrt(kDraws * 0.25);
    CHECK(std::fabs(heads - kDraws * 0.5) <= 3.0 * sigma);
  }
}

TEST_CASE("sample_id returns the drawn entry's service id") {
  const std::array<double, 2> f{1.0, 3.0};
  const std::array<ServiceId, 2> ids{"alpha", "beta"};
  const auto dist = roulette_distribution(std::span<const double>(f),
                                          std::span<const ServiceId>(ids));
  std::mt19937_64 a(17), b(17);
  for (int i = 0; i < 200; ++i) {
    const auto idx = sample(dist, a);
    CHECK(sample_id(dist, b) == dist.entries[idx].id);
  }
}
