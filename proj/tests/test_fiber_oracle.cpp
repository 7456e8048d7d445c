#include <doctest.h>

#include "manakov/errors.hpp"
#include "manakov/fiber_oracle.hpp"

using namespace manakov;

namespace {

FiberOracleOptions light() {
  FiberOracleOptions o;
  o.samples = 1'000'000;
  return o;
}

}  // namespace

TEST_CASE("interior probes land in their regions") {
  const EMDiagram d = build_diagram(4, 3);
  for (Region r : {Region::I, Region::II, Region::III, Region::IV}) {
    const Point2 p = interior_probe(d, r);
    CHECK(classify_point(d, p.x(), p.y()).region == r);
  }
}

TEST_CASE("component counts per region at (4,3)") {
  const EMDiagram d = build_diagram(4, 3);
  for (Region r : {Region::I, Region::II, Region::III, Region::IV}) {
    CAPTURE(region_name(r));
    const Point2 p = interior_probe(d, r);
    const FiberOracleResult res = fiber_component_oracle(d, p.x(), p.y(), light());
    REQUIRE(res.status == OracleStatus::conclusive);
    CHECK(res.components == *component_count(r));
    CHECK(res.retained >= 200);
  }
}

TEST_CASE("outside the image nothing is retained") {
  const EMDiagram d = build_diagram(4, 3);
  const FiberOracleResult res = fiber_component_oracle(d, 0.0, 0.1, light());
  CHECK(res.status == OracleStatus::inconclusive);
  CHECK(res.retained == 0);
}

TEST_CASE("probes on the critical set are rejected") {
  const EMDiagram d = build_diagram(4, 3);
  CHECK_THROWS_AS(fiber_component_oracle(d, 0.0, -12.0, light()), ValidationError);
  FiberOracleOptions bad = light();
  bad.delta = 0.0;
  CHECK_THROWS_AS(fiber_component_oracle(d, 0.0, -17.0, bad), ValidationError);
}

TEST_CASE("results do not depend on the thread count") {
  const EMDiagram d = build_diagram(4, 3);
  FiberOracleOptions one = light();
  one.threads = 1;
  FiberOracleOptions many = light();
  many.threads = 4;
  const auto a = fiber_component_oracle(d, 0.0, -10.0, one);
  const auto b = fiber_component_oracle(d, 0.0, -10.0, many);
  CHECK(a.retained == b.retained);
  CHECK(a.component_sizes == b.component_sizes);
  CHECK(a.median_nn == b.median_nn);
}

TEST_CASE("limiting parameters give two components") {
  const EMDiagram d = build_diagram(2, 1);
  const FiberOracleResult res = fiber_component_oracle(d, 0.0, -0.5, light());
  REQUIRE(res.status == OracleStatus::conclusive);
  CHECK(res.components == 2);
}
