#include "backstrom/syzygy.hpp"

#include <algorithm>

namespace backstrom {

StableObject StableObject::single(const Node& j, std::uint64_t count) {
  StableObject x;
  x.add(j, count);
  return x;
}

void StableObject::add(const Node& j, std::uint64_t count) {
  if (count == 0) return;
  auto& slot = mult_[j];
  if (__builtin_add_overflow(slot, count, &slot)) {
    throw CapacityExceeded("stable object multiplicity exceeds 64 bits");
  }
}

std::uint64_t StableObject::operator[](const Node& j) const {
  const auto it = mult_.find(j);
  return it == mult_.end() ? 0 : it->second;
}

std::uint64_t StableObject::total() const {
  std::uint64_t t = 0;
  for (const auto& [node, count] : mult_) {
    if (__builtin_add_overflow(t, count, &t)) {
      throw CapacityExceeded("stable object size exceeds 64 bits");
    }
  }
  return t;
}

StableObject& StableObject::operator+=(const StableObject& other) {
  for (const auto& [node, count] : other.mult_) add(node, count);
  return *this;
}

std::string describe(const BackstromOrder& order, const StableObject& x) {
  std::string out = "{";
  for (const auto& [node, count] : x.multiplicities()) {
    if (out.size() > 1) out += ",";
    out += std::to_string(order.external_id(node)) + ":" + std::to_string(count);
  }
  return out + "}";
}

std::vector<Node> j_prime(const BackstromOrder& order) {
  std::vector<Node> out;
  for (const auto& node : order.nodes()) {
    if (!is_lambda_projective(order, node)) out.push_back(node);
  }
  return out;
}

StableObject syzygy(const BackstromOrder& order, const Node& j) {
  if (is_lambda_projective(order, j)) {
    throw InvalidInput("node " + std::to_string(order.external_id(j)) +
                       " is Lambda-projective and has no stable syzygy");
  }
  StableObject out;
  for (const auto& other : order.part_nodes(order.part_index(j))) {
    if (other == j) continue;
    const Node shifted = rad_shift(order, other);
    if (!is_lambda_projective(order, shifted)) out.add(shifted, 1);
  }
  return out;
}

StableObject syzygy(const BackstromOrder& order, const StableObject& x) {
  StableObject out;
  for (const auto& [node, count] : x.multiplicities()) {
    const auto image = syzygy(order, node);
    for (const auto& [target, m] : image.multiplicities()) {
      std::uint64_t scaled = 0;
      if (__builtin_mul_overflow(count, m, &scaled)) {
        throw CapacityExceeded("syzygy multiplicity exceeds 64 bits");
      }
      out.add(target, scaled);
    }
  }
  return out;
}

StableObject syzygy_power(const BackstromOrder& order, StableObject x, std::size_t k) {
  for (std::size_t i = 0; i < k && !x.empty(); ++i) x = syzygy(order, x);
  return x;
}

StableObject syzygy_of_gamma(const BackstromOrder& order) {
  StableObject out;
  for (const auto& j : j_prime(order)) out += syzygy(order, j);
  return out;
}

TrivialExtensionData build_a_lambda(const BackstromOrder& order) {
  TrivialExtensionData data;
  data.vertex_nodes = j_prime(order);
  std::vector<std::size_t> vertex_of(order.node_count(), order.node_count());
  for (const auto& node : data.vertex_nodes) {
    vertex_of[order.index_of(node)] =
        data.quiver.add_vertex(static_cast<int>(order.external_id(node)), 1);
  }
  for (const auto& i : data.vertex_nodes) {
    for (const auto& other : order.part_nodes(order.part_index(i))) {
      if (other == i) continue;
      const Node target = rad_shift(order, other);
      const std::size_t t = vertex_of[order.index_of(target)];
      if (t != order.node_count()) data.quiver.add_arrow(vertex_of[order.index_of(i)], t);
    }
  }
  return data;
}

CoverKernel full_cover_kernel(const BackstromOrder& order, const Node& j) {
  CoverKernel out;
  out.part = order.part_index(j);
  out.lambda_projective = is_lambda_projective(order, j);
  if (out.lambda_projective) return out;
  for (const auto& other : order.part_nodes(out.part)) {
    if (other != j) out.kernel.push_back(rad_shift(order, other));
  }
  std::sort(out.kernel.begin(), out.kernel.end());
  return out;
}

}  // namespace backstrom
