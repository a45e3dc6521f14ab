#include <random>

#include "doctest.h"
#include "osmotic/fitness.hpp"
#include "osmotic/osmosis.hpp"
#include "osmotic/rng.hpp"
#include "osmotic/types.hpp"

using namespace osmotic;

namespace {

ServerNode make_server(double la, double lt, double ec, double et, double tp, double tt,
                       int slots = 10) {
  ServerNode s;
  s.id = 0;
  s.load_current = la;
  s.load_total = lt;
  s.energy_consumed = ec;
  s.energy_total = et;
  s.time_used = tp;
  s.time_total = tt;
  s.concurrent_capacity = slots;
  return s;
}

}  // namespace

TEST_CASE("remaining_capacity on a fresh server returns the totals") {
  const auto s = make_server(0, 10, 0, 2000, 0, 100);
  const auto r = remaining_capacity(s);
  CHECK(r.load == doctest::Approx(10.0));
  CHECK(r.energy == doctest::Approx(2000.0));
  CHECK(r.time == doctest::Approx(100.0));
}

TEST_CASE("remaining_capacity on a fully consumed server is zero") {
  const auto s = make_server(10, 10, 2000, 2000, 100, 100);
  const auto r = remaining_capacity(s);
  CHECK(r.load == doctest::Approx(0.0));
  CHECK(r.energy == doctest::Approx(0.0));
  CHECK(r.time == doctest::Approx(0.0));
}

TEST_CASE("remaining_capacity subtracts consumption per component") {
  const auto s = make_server(4, 10, 1.5, 2000, 5, 100);
  const auto r = remaining_capacity(s);
  CHECK(r.load == doctest::Approx(6.0));
  CHECK(r.energy == doctest::Approx(1998.5));
  CHECK(r.time == doctest::Approx(95.0));
}

TEST_CASE("consuming resources never increases remaining capacity") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    auto s = make_server(0, 50, 0, 5000, 0, 500, 100);
    auto prev = s.remaining();
    for (int i = 0; i < 20; ++i) {
      ResourceDemand d{uniform_double(rng, 0.0, 2.0), uniform_double(rng, 0.0, 100.0),
                       uniform_double(rng, 0.0, 10.0)};
      if (!s.can_host(d)) break;
      s.host("s" + std::to_string(i), d);
      const auto now = s.remaining();
      CHECK(now.load <= prev.load + 1e-12);
      CHECK(now.energy <= prev.energy + 1e-12);
      CHECK(now.time <= prev.time + 1e-12);
      prev = now;
    }
  }
}

TEST_CASE("a server refuses demands beyond capacity or concurrency") {
  auto s = make_server(0, 10, 0, 2000, 0, 100, 3);
  CHECK_FALSE(s.can_host({11, 1, 1}));
  CHECK_FALSE(s.can_host({1, 2001, 1}));
  CHECK_FALSE(s.can_host({1, 1, 101}));
  s.host("a", {1, 1, 1});
  s.host("b", {1, 1, 1});
  s.host("c", {1, 1, 1});
  CHECK_FALSE(s.has_free_slot());
  CHECK_FALSE(s.can_host({1, 1, 1}));
  CHECK_THROWS_AS(s.host("d", {1, 1, 1}), DomainError);
}

TEST_CASE("service demand validity requires at least one positive component") {
  CHECK(ResourceDemand{1, 0, 0}.valid_for_service());
  CHECK(ResourceDemand{0, 0.5, 0}.valid_for_service());
  CHECK_FALSE(ResourceDemand{0, 0, 0}.valid_for_service());
  CHECK_FALSE(ResourceDemand{-1, 1, 1}.valid_for_service());
}

TEST_CASE("split children conserve the parent demand component-wise") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 500; ++trial) {
    ServiceRequest parent;
    parent.id = "p" + std::to_string(trial);
    parent.divisible = true;
    parent.demand = {uniform_double(rng, 0.1, 50.0), uniform_double(rng, 0.1, 50.0),
                     uniform_double(rng, 0.1, 50.0)};
    const int parts = static_cast<int>(uniform_int(rng, 2, 7));
    const auto children = split_service(parent, parts);
    REQUIRE(children.size() == static_cast<std::size_t>(parts));
    ResourceDemand sum;
    for (const auto& c : children) {
      sum = sum + c.demand;
      REQUIRE(c.parent_id.has_value());
      CHECK(*c.parent_id == parent.id);
      CHECK(c.user_id == parent.user_id);
    }
    CHECK(std::fabs(sum.load - parent.demand.load) < 1e-9);
    CHECK(std::fabs(sum.energy - parent.demand.energy) < 1e-9);
    CHECK(std::fabs(sum.time - parent.demand.time) < 1e-9);
  }
}

TEST_CASE("split children carry suffixed ids in order") {
  ServiceRequest parent;
  parent.id = "s7";
  parent.divisible = true;
  parent.demand = {10, 20, 40};
  const auto children = split_service(parent, 2);
  CHECK(children[0].id == "s7.1");
  CHECK(children[1].id == "s7.2");
  CHECK(children[0].demand.load == doctest::Approx(5.0));
  CHECK(children[0].demand.energy == doctest::Approx(10.0));
  CHECK(children[0].demand.time == doctest::Approx(20.0));
}
