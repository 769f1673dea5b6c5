#pragma once

#include <cstddef>
#include <filesystem>
#include <set>
#include <utility>
#include <vector>

#include "backstrom/order.hpp"
#include "backstrom/valued_quiver.hpp"

namespace testing_support {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(BACKSTROM_FIXTURE_DIR) / name;
}

inline backstrom::BackstromOrder make_order(std::vector<std::size_t> cycles,
                                            std::vector<std::vector<std::size_t>> parts,
                                            backstrom::GroundField field = backstrom::RationalField{}) {
  backstrom::OrderDescription d;
  d.field = field;
  d.hereditary.cycles = std::move(cycles);
  d.gluing.parts = std::move(parts);
  return backstrom::BackstromOrder(std::move(d));
}

// n blocks of length 1 glued into one part
inline backstrom::BackstromOrder local_product(std::size_t n) {
  std::vector<std::size_t> all;
  for (std::size_t i = 1; i <= n; ++i) all.push_back(i);
  return make_order(std::vector<std::size_t>(n, 1), {all}, backstrom::PrimeField(2));
}

// the four one-parameter families of glued cycles, s >= 1
inline backstrom::BackstromOrder alternating_pairs(std::size_t s) {
  std::vector<std::vector<std::size_t>> parts;
  for (std::size_t i = 1; i <= s; ++i) parts.push_back({2 * i - 1, 2 * i});
  return make_order({2 * s}, parts);
}

inline backstrom::BackstromOrder pairs_with_fixed(std::size_t s) {
  std::vector<std::vector<std::size_t>> parts;
  for (std::size_t i = 1; i <= s; ++i) parts.push_back({2 * i - 1, 2 * i});
  parts.push_back({2 * s + 1});
  return make_order({2 * s + 1}, parts);
}

inline backstrom::BackstromOrder odd_star(std::size_t s) {
  std::vector<std::vector<std::size_t>> parts(1);
  for (std::size_t i = 1; i <= 2 * s + 1; i += 2) parts[0].push_back(i);
  for (std::size_t i = 2; i <= 2 * s; i += 2) parts.push_back({i});
  return make_order({2 * s + 1}, parts);
}

inline backstrom::BackstromOrder odd_glued(std::size_t s) {
  std::vector<std::vector<std::size_t>> parts(1);
  for (std::size_t i = 1; i <= 2 * s + 1; i += 2) parts[0].push_back(i);
  for (std::size_t i = 2; i <= 2 * s + 2; i += 2) parts.push_back({i});
  return make_order({2 * s + 2}, parts);
}

// quiver on ids 1..n with trivial valuations, arrows by id
inline backstrom::ValuedQuiver quiver_of(std::size_t n, const std::vector<std::pair<int, int>>& arrows) {
  backstrom::ValuedQuiver q;
  for (std::size_t i = 1; i <= n; ++i) q.add_vertex(static_cast<int>(i));
  for (auto [s, t] : arrows) q.add_arrow(q.index_of(s), q.index_of(t));
  return q;
}

using ArrowSet = std::multiset<std::pair<int, int>>;

inline ArrowSet arrow_ids(const backstrom::ValuedQuiver& q) {
  ArrowSet out;
  for (const auto& a : q.arrows) out.insert({q.vertices[a.src].id, q.vertices[a.dst].id});
  return out;
}

inline std::set<int> vertex_ids(const backstrom::ValuedQuiver& q) {
  std::set<int> out;
  for (const auto& v : q.vertices) out.insert(v.id);
  return out;
}

}  // namespace testing_support
