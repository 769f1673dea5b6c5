#include <random>

#include "doctest.h"
#include "backstrom/classify.hpp"
#include "backstrom/oracle.hpp"
#include "support.hpp"

using namespace backstrom;
using namespace testing_support;

namespace {

struct Verdicts {
  bool fgd, ig, gor, sg;
  bool operator==(const Verdicts&) const = default;
};

Verdicts verdicts(const ValuedQuiver& q) {
  return {finite_gldim(q).value, iwanaga_gorenstein(q).value, gorenstein(q).value, sg_hom_finite(q).value};
}

ValuedQuiver valued_loop() {
  ValuedQuiver q;
  q.add_vertex(1, 3);
  q.add_arrow(0, 0, {2, 2});
  return q;
}

}  // namespace

TEST_CASE("small quivers") {
  CHECK(verdicts(ValuedQuiver{}) == Verdicts{true, true, true, true});
  CHECK(verdicts(quiver_of(1, {})) == Verdicts{true, true, false, true});
  CHECK(self_injective_pattern(quiver_of(1, {})).value);
  CHECK(verdicts(quiver_of(1, {{1, 1}})) == Verdicts{false, true, true, true});
  CHECK(verdicts(quiver_of(3, {{1, 2}, {2, 3}, {3, 1}})) == Verdicts{false, true, true, true});
  CHECK(verdicts(quiver_of(3, {{1, 2}, {1, 3}})) == Verdicts{true, true, false, true});
  // loop with an adjoined source: not IG, but stripping leaves the loop
  CHECK(verdicts(quiver_of(2, {{2, 1}, {1, 1}})) == Verdicts{false, false, false, true});
  // two loops joined by an arrow: core vertex 1 has out-degree 2
  CHECK(verdicts(quiver_of(2, {{1, 1}, {2, 2}, {1, 2}})) == Verdicts{false, false, false, false});
  CHECK(verdicts(valued_loop()) == Verdicts{false, false, false, false});
}

TEST_CASE("witnesses accompany negative verdicts") {
  const auto q = quiver_of(3, {{1, 2}, {2, 1}, {3, 1}});
  const auto f = finite_gldim(q);
  REQUIRE(f.witness);
  CHECK(f.witness->kind == Witness::Kind::kCycle);
  CHECK(f.witness->vertices.size() == 2);
  const auto g = gorenstein(q);
  REQUIRE(g.witness);
  CHECK(g.witness->kind == Witness::Kind::kBadComponent);
  CHECK(gorenstein(quiver_of(1, {})).witness->kind == Witness::Kind::kSimpleComponent);
  CHECK(iwanaga_gorenstein(valued_loop()).witness->kind == Witness::Kind::kValuedCycle);
  const auto s = sg_hom_finite(quiver_of(2, {{1, 1}, {2, 2}, {1, 2}}));
  REQUIRE(s.witness);
  CHECK(s.witness->kind == Witness::Kind::kStrippedCore);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto r = random_quiver(rng, 5, i % 2 == 0);
    CHECK(finite_gldim(r).value == !finite_gldim(r).witness.has_value());
    CHECK(iwanaga_gorenstein(r).value == !iwanaga_gorenstein(r).witness.has_value());
    CHECK(gorenstein(r).value == !gorenstein(r).witness.has_value());
    CHECK(sg_hom_finite(r).value == !sg_hom_finite(r).witness.has_value());
  }
}

TEST_CASE("stripping keeps the cycles") {
  // 4 -> 1 -> 2 -> 1, 2 -> 3
  const auto q = quiver_of(4, {{4, 1}, {1, 2}, {2, 1}, {2, 3}});
  const auto s = sg_hom_finite(q);
  CHECK(s.value);
  CHECK(s.core == std::vector<std::size_t>{0, 1});
  CHECK(gproj_nonprojective_vertices(q).empty());
  CHECK(gproj_nonprojective_vertices(quiver_of(3, {{1, 2}, {2, 1}})) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("classification of orders") {
  const auto two_cycle = classify(make_order({2}, {{1, 2}}));
  CHECK(two_cycle.hereditary == false);
  CHECK(two_cycle.gorenstein.value);
  CHECK_FALSE(two_cycle.finite_gldim.value);
  CHECK(two_cycle.indec_cm_count == 3);
  CHECK(two_cycle.j_prime == std::vector<int>{1, 2});
  CHECK(two_cycle.gproj_vertices == std::vector<int>{1, 2});

  const auto hereditary = classify(make_order({3}, {{1}, {2}, {3}}));
  CHECK(hereditary.hereditary == true);
  CHECK(hereditary.a_quiver.size() == 0);
  CHECK(hereditary.finite_gldim.value);

  const auto wild = classify(local_product(4));
  REQUIRE(wild.finite_cm_type);
  CHECK_FALSE(wild.finite_cm_type->value);
  CHECK(wild.finite_cm_type->witness->kind == Witness::Kind::kNotDynkin);
  CHECK_FALSE(wild.indec_cm_count);

  const auto bare = classify_quiver(valued_loop());
  CHECK_FALSE(bare.hereditary);
  CHECK_FALSE(bare.finite_cm_type);
  ValuedQuiver broken = quiver_of(1, {});
  broken.arrows.push_back({0, 5, {}});
  CHECK_THROWS_AS(classify_quiver(broken), InvalidInput);
}

TEST_CASE("hierarchy check rejects an inconsistent report") {
  auto r = classify_quiver(quiver_of(1, {{1, 1}}));
  CHECK_NOTHROW(check_hierarchy(r));
  r.iwanaga_gorenstein.value = false;
  CHECK_THROWS_AS(check_hierarchy(r), InternalError);
  auto h = classify(make_order({2}, {{1}, {2}}));
  h.finite_gldim.value = false;
  CHECK_THROWS_AS(check_hierarchy(h), InternalError);
}

TEST_CASE("verdicts are invariant under reversal") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const auto q = random_quiver(rng, 6, true);
    CHECK(verdicts(q) == verdicts(reversed(q)));
  }
}
