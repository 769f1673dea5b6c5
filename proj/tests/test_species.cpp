#include <functional>

#include "doctest.h"
#include "backstrom/species.hpp"
#include "support.hpp"

using namespace backstrom;
using testing_support::make_order;

namespace {

struct E {
  std::size_t u, v;
  int duv = 1, dvu = 1;
};

ValuedGraph graph(std::size_t n, const std::vector<E>& edges) {
  ValuedGraph g;
  for (std::size_t i = 0; i < n; ++i) g.vertices.push_back({std::to_string(i + 1), 1});
  for (const auto& e : edges) g.edges.push_back({e.u, e.v, e.duv, e.dvu});
  return g;
}

std::variant<DynkinType, NotDynkin> single_kind(const ValuedGraph& g) {
  const auto comps = dynkin_components(g);
  REQUIRE(comps.size() == 1);
  return comps.front().kind;
}

DynkinType dynkin(const ValuedGraph& g) {
  const auto k = single_kind(g);
  REQUIRE(std::holds_alternative<DynkinType>(k));
  return std::get<DynkinType>(k);
}

NotDynkin::Reason failure(const ValuedGraph& g) {
  const auto k = single_kind(g);
  REQUIRE(std::holds_alternative<NotDynkin>(k));
  return std::get<NotDynkin>(k).reason;
}

// simply-laced positive roots as the positive integer solutions of
// q(x) = sum x_i^2 - sum_{edges} x_u x_v = 1 with entries <= bound
std::size_t tits_root_count(const ValuedGraph& g, long bound) {
  const std::size_t n = g.vertices.size();
  std::vector<long> x(n, 0);
  std::size_t count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      bool nonzero = false;
      long q = 0;
      for (long v : x) {
        q += v * v;
        nonzero = nonzero || v != 0;
      }
      for (const auto& e : g.edges) q -= x[e.u] * x[e.v];
      if (nonzero && q == 1) ++count;
      return;
    }
    for (long v = 0; v <= bound; ++v) {
      x[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return count;
}

std::vector<E> path(std::size_t n) {
  std::vector<E> out;
  for (std::size_t i = 0; i + 1 < n; ++i) out.push_back({i, i + 1});
  return out;
}

}  // namespace

TEST_CASE("recognizes simply-laced Dynkin graphs") {
  CHECK(dynkin(graph(1, {})) == DynkinType{DynkinFamily::A, 1});
  CHECK(dynkin(graph(5, path(5))) == DynkinType{DynkinFamily::A, 5});
  CHECK(dynkin(graph(4, {{0, 1}, {0, 2}, {0, 3}})) == DynkinType{DynkinFamily::D, 4});
  CHECK(dynkin(graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}})) == DynkinType{DynkinFamily::D, 6});
  // arms 1, 2, 2 / 1, 2, 3 / 1, 2, 4 around vertex 0
  CHECK(dynkin(graph(6, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}})) == DynkinType{DynkinFamily::E6, 6});
  CHECK(dynkin(graph(7, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}})) ==
        DynkinType{DynkinFamily::E7, 7});
  CHECK(dynkin(graph(8, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}, {6, 7}})) ==
        DynkinType{DynkinFamily::E8, 8});
}

TEST_CASE("recognizes non-simply-laced Dynkin graphs") {
  const auto b = dynkin(graph(3, {{0, 1}, {1, 2, 1, 2}}));
  const auto c = dynkin(graph(3, {{0, 1}, {1, 2, 2, 1}}));
  CHECK(b.rank == 3);
  CHECK(c.rank == 3);
  CHECK(b.family != c.family);
  CHECK((b.family == DynkinFamily::B || b.family == DynkinFamily::C));
  CHECK(dynkin(graph(4, {{0, 1}, {1, 2, 1, 2}, {2, 3}})) == DynkinType{DynkinFamily::F4, 4});
  CHECK(dynkin(graph(2, {{0, 1, 1, 3}})) == DynkinType{DynkinFamily::G2, 2});
}

TEST_CASE("rejects non-Dynkin graphs with a reason") {
  CHECK(failure(graph(1, {{0, 0}})) == NotDynkin::Reason::kLoop);
  CHECK(failure(graph(3, {{0, 1}, {1, 2}, {2, 0}})) == NotDynkin::Reason::kCycle);
  CHECK(failure(graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})) == NotDynkin::Reason::kHighDegree);
  // affine D5: two branch vertices
  CHECK(failure(graph(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}})) == NotDynkin::Reason::kBadBranch);
  // affine E6: arms 2, 2, 2
  CHECK(failure(graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}})) ==
        NotDynkin::Reason::kBadBranch);
  CHECK(failure(graph(3, {{0, 1, 1, 3}, {1, 2}})) == NotDynkin::Reason::kBadValuation);
  CHECK(failure(graph(2, {{0, 1, 2, 2}})) == NotDynkin::Reason::kBadValuation);
}

TEST_CASE("positive root counts match the Tits form") {
  struct Case {
    ValuedGraph g;
    long bound;
  };
  const std::vector<Case> cases{
      {graph(1, {}), 1},
      {graph(4, path(4)), 2},
      {graph(5, path(5)), 2},
      {graph(4, {{0, 1}, {0, 2}, {0, 3}}), 3},
      {graph(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}}), 3},
      {graph(6, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}}), 4},
  };
  for (const auto& c : cases) {
    CHECK(positive_roots(cartan_data(c.g)).size() == tits_root_count(c.g, c.bound));
  }
}

TEST_CASE("positive root counts for every family") {
  for (std::size_t n = 1; n <= 8; ++n) {
    CHECK(positive_roots(cartan_of({DynkinFamily::A, n})).size() == n * (n + 1) / 2);
  }
  for (std::size_t n = 2; n <= 6; ++n) {
    CHECK(positive_roots(cartan_of({DynkinFamily::B, n})).size() == n * n);
    CHECK(positive_roots(cartan_of({DynkinFamily::C, n})).size() == n * n);
  }
  for (std::size_t n = 4; n <= 7; ++n) {
    CHECK(positive_roots(cartan_of({DynkinFamily::D, n})).size() == n * (n - 1));
  }
  CHECK(positive_roots(cartan_of({DynkinFamily::E6, 6})).size() == 36);
  CHECK(positive_roots(cartan_of({DynkinFamily::E7, 7})).size() == 63);
  CHECK(positive_roots(cartan_of({DynkinFamily::E8, 8})).size() == 120);
  CHECK(positive_roots(cartan_of({DynkinFamily::F4, 4})).size() == 24);
  CHECK(positive_roots(cartan_of({DynkinFamily::G2, 2})).size() == 6);
}

TEST_CASE("root closure stops on infinite type") {
  CHECK_THROWS_AS(positive_roots(cartan_data(graph(3, {{0, 1}, {1, 2}, {2, 0}}))), NotFiniteType);
  CHECK_THROWS_AS(positive_roots(cartan_data(graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}))), NotFiniteType);
}

TEST_CASE("H-quiver of a glued two-cycle is A3") {
  const auto o = make_order({2}, {{1, 2}});
  const auto h = build_h(o);
  CHECK(h.lambda_vertices.size() == 1);
  CHECK(h.gamma_vertices.size() == 2);
  CHECK(h.arrows.size() == 2);
  CHECK(dynkin(underlying_valued_graph(h)) == DynkinType{DynkinFamily::A, 3});
  CHECK(count_indec_cm(o) == 3);
}

TEST_CASE("indecomposable CM counts of glued local blocks") {
  // one part of size n: H is the star K_{1,n}
  CHECK(count_indec_cm(testing_support::local_product(1)) == 1);  // A2
  CHECK(count_indec_cm(testing_support::local_product(2)) == 3);
  CHECK(count_indec_cm(testing_support::local_product(3)) == 8);
  CHECK_FALSE(count_indec_cm(testing_support::local_product(4)).has_value());
  CHECK_FALSE(is_finite_cm_type(testing_support::local_product(4)).finite);
}

TEST_CASE("CM counts add over components") {
  // parts {1,2} and {3,4} in a 4-cycle: two A3 components
  CHECK(count_indec_cm(make_order({4}, {{1, 2}, {3, 4}})) == 6);
  // hereditary: one A2 per node
  CHECK(count_indec_cm(make_order({3}, {{1}, {2}, {3}})) == 3);
}
