#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "doctest.h"
#include "backstrom/dsg.hpp"
#include "backstrom/oracle.hpp"
#include "support.hpp"

using namespace backstrom;
using namespace testing_support;
using boost::multiprecision::cpp_int;

namespace {

using BigVec = std::vector<cpp_int>;

BigVec big_apply(const SyzygyOperator& op, const BigVec& v) {
  BigVec out(op.size(), 0);
  for (std::size_t x = 0; x < op.size(); ++x) {
    for (auto [y, m] : op.images[x]) out[y] += v[x] * m;
  }
  return out;
}

BigVec unit(std::size_t n, std::size_t i) {
  BigVec v(n, 0);
  v[i] = 1;
  return v;
}

// x survives in the colimit iff it has an Omega-walk of length n
std::vector<bool> alive(const SyzygyOperator& op) {
  std::vector<bool> out(op.size());
  for (std::size_t x = 0; x < op.size(); ++x) {
    BigVec v = unit(op.size(), x);
    for (std::size_t k = 0; k < op.size(); ++k) v = big_apply(op, v);
    bool any = false;
    for (const auto& c : v) any = any || c != 0;
    out[x] = any;
  }
  return out;
}

// image dims of the colimit maps, levels 0..steps
std::vector<cpp_int> image_dims(const SyzygyOperator& op, std::size_t a, std::size_t b, std::size_t steps) {
  const auto live = alive(op);
  BigVec u = unit(op.size(), a), w = unit(op.size(), b);
  std::vector<cpp_int> out;
  for (std::size_t i = 0; i <= steps; ++i) {
    cpp_int e = 0;
    for (std::size_t x = 0; x < op.size(); ++x) {
      if (live[x]) e += u[x] * w[x] * op.weights[x];
    }
    out.push_back(e);
    u = big_apply(op, u);
    w = big_apply(op, w);
  }
  return out;
}

void check_against_walks(const SyzygyOperator& op) {
  constexpr std::size_t kSteps = 80;
  for (std::size_t a = 0; a < op.size(); ++a) {
    for (std::size_t b = 0; b < op.size(); ++b) {
      const auto h = stabilized_hom(op, a, b);
      const auto e = image_dims(op, a, b, kSteps);
      if (h.infinite()) {
        CHECK(e[kSteps] > e[kSteps / 2]);
        CHECK(h.witness.has_value());
      } else {
        REQUIRE(h.level < 40);
        for (std::size_t i = 0; i <= kSteps; ++i) {
          if (i >= h.level) {
            CHECK(e[i] == *h.dim);
          } else {
            CHECK(e[i] < *h.dim);
          }
        }
        CHECK(h.history.size() == h.level + 1);
      }
    }
  }
}

}  // namespace

TEST_CASE("glued two-cycle: identity table") {
  const auto o = make_order({2}, {{1, 2}});
  const auto n1 = o.node_from_external(1), n2 = o.node_from_external(2);
  CHECK(stable_hom_level0(o, n1, n1) == 1);
  CHECK(stable_hom_level0(o, n1, n2) == 0);
  CHECK(dsg_hom_dim(o, n1, n1).dim == 1u);
  CHECK(dsg_hom_dim(o, n1, n2).dim == 0u);
  CHECK(dsg_hom_dim(o, n1, n1).level == 0);
}

TEST_CASE("level-0 Hom rejects projectives") {
  const auto o = pairs_with_fixed(1);
  CHECK_THROWS_AS(stable_hom_level0(o, o.node_from_external(3), o.node_from_external(1)), InvalidInput);
  CHECK_THROWS_AS(dsg_hom_dim(o, o.node_from_external(3), o.node_from_external(3)), InvalidInput);
}

TEST_CASE("branching syzygies give infinite Hom") {
  const auto o = local_product(3);
  const auto h = dsg_hom_dim(o, o.node_from_external(1), o.node_from_external(1));
  CHECK(h.infinite());
  REQUIRE(h.witness);
  CHECK(h.history.front() == 1);
  // Omega = J - I on three vertices: u_i . u_i = ((2^i + 2(-1)^i)^2 + 2(2^i - (-1)^i)^2) / 9
  const std::vector<std::uint64_t> expected{1, 2, 6, 22, 86};
  for (std::size_t i = 0; i < expected.size() && i < h.history.size(); ++i) CHECK(h.history[i] == expected[i]);
}

TEST_CASE("only vertices that reach a cycle contribute") {
  // loop at 1, 3 -> 1, 3 -> 2 with 2 a sink
  const auto q = quiver_of(3, {{1, 1}, {3, 1}, {3, 2}});
  const auto op = quiver_syzygy_operator(q);
  const auto h33 = stabilized_hom(op, op.index_of(3), op.index_of(3));
  CHECK(h33.dim == 1u);
  CHECK(h33.level == 0);
  const auto h13 = stabilized_hom(op, op.index_of(1), op.index_of(3));
  CHECK(h13.dim == 1u);
  CHECK(h13.level == 1);
  CHECK(h13.history == std::vector<std::uint64_t>{0, 1});
  CHECK(stabilized_hom(op, op.index_of(2), op.index_of(2)).dim == 0u);
}

TEST_CASE("weights and valuations enter the dimension") {
  ValuedQuiver q;
  q.add_vertex(1, 2);
  q.add_vertex(2, 2);
  q.add_arrow(0, 1);
  q.add_arrow(1, 0);
  const auto op = quiver_syzygy_operator(q);
  CHECK(stabilized_hom(op, 0, 0).dim == 2u);
  CHECK(stabilized_hom(op, 0, 1).dim == 0u);
}

TEST_CASE("stabilized Hom agrees with brute-force walk counting") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 150; ++i) check_against_walks(quiver_syzygy_operator(random_quiver(rng, 4, i % 3 == 0)));
  for (int i = 0; i < 40; ++i) check_against_walks(order_syzygy_operator(random_order(rng, {3, 3})));
}

TEST_CASE("Wedderburn data") {
  {
    const auto v = v_lambda(make_order({2}, {{1, 2}}));
    REQUIRE(std::holds_alternative<WedderburnData>(v));
    const auto& w = std::get<WedderburnData>(v);
    REQUIRE(w.blocks.size() == 2);
    CHECK(w.blocks[0].multiplicity == 1);
    CHECK(w.suspension == std::vector<std::size_t>{0, 1});
  }
  {
    const auto v = v_lambda(odd_star(2));
    REQUIRE(std::holds_alternative<WedderburnData>(v));
    const auto& w = std::get<WedderburnData>(v);
    REQUIRE(w.blocks.size() == 1);
    CHECK(w.blocks[0].vertex == 1);
    CHECK(w.blocks[0].multiplicity == 2);  // Q_1 and Q_3 both land on Q_1
  }
  {
    const auto v = v_lambda(alternating_pairs(2));
    REQUIRE(std::holds_alternative<WedderburnData>(v));
    const auto& w = std::get<WedderburnData>(v);
    REQUIRE(w.blocks.size() == 4);
    std::vector<bool> hit(4);
    for (auto t : w.suspension) hit.at(t) = true;
    CHECK(hit == std::vector<bool>{true, true, true, true});
    for (std::size_t i = 0; i < 4; ++i) {
      if (w.blocks[i].vertex == 1) CHECK(w.blocks[w.suspension[i]].vertex == 3);
      if (w.blocks[i].vertex == 2) CHECK(w.blocks[w.suspension[i]].vertex == 2);
    }
  }
  {
    const auto v = v_lambda(local_product(3));
    REQUIRE(std::holds_alternative<NotSemisimple>(v));
    CHECK(std::get<NotSemisimple>(v).witness.kind == Witness::Kind::kStrippedCore);
  }
  {
    const auto v = v_lambda(make_order({3}, {{1}, {2}, {3}}));
    REQUIRE(std::holds_alternative<WedderburnData>(v));
    CHECK(std::get<WedderburnData>(v).blocks.empty());
  }
}

TEST_CASE("suspension orbits") {
  const auto o = alternating_pairs(2);
  const auto orbit1 = suspension_orbit(o, o.node_from_external(1));
  REQUIRE(orbit1.period.size() == 2);
  CHECK(orbit1.period[0] + orbit1.period[1] ==
        StableObject::single(o.node_from_external(1)) + StableObject::single(o.node_from_external(3)));
  CHECK(suspension_orbit(o, o.node_from_external(2)).period.size() == 1);

  const auto star = odd_star(2);
  const auto orbit3 = suspension_orbit(star, star.node_from_external(3));
  REQUIRE(orbit3.period.size() == 1);
  CHECK(orbit3.period[0] == StableObject::single(star.node_from_external(1)));
  CHECK(suspension_orbit(star, star.node_from_external(5)).period.front().empty());

  CHECK_THROWS_AS(suspension_orbit(local_product(3), Node{0, 0}), NotApplicable);
  const auto fixed = pairs_with_fixed(1);
  CHECK_THROWS_AS(suspension_orbit(fixed, fixed.node_from_external(3)), NotApplicable);
}
