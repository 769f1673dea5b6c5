#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "backstrom/exact_linalg.hpp"
#include "backstrom/order.hpp"

namespace backstrom {

/// A finite-dimensional H-module: a space W_p per part, a space V_j per node
/// and one linear map W_{part(j)} -> V_j per node (the arrow part(j) -> j).
/// maps[j] has shape node_dims[j] x part_dims[part(j)]; nodes are indexed
/// globally.
template <class Field>
struct HRepresentation {
  Field field;
  std::vector<std::size_t> part_dims;
  std::vector<std::size_t> node_dims;
  std::vector<ExactMatrix<Field>> maps;
};

template <class Field>
void check_shapes(const BackstromOrder& order, const HRepresentation<Field>& rep) {
  if (rep.part_dims.size() != order.part_count() || rep.node_dims.size() != order.node_count() ||
      rep.maps.size() != order.node_count()) {
    throw InvalidInput("H-representation does not match the order's H-quiver");
  }
  for (std::size_t j = 0; j < order.node_count(); ++j) {
    const auto& m = rep.maps[j];
    const std::size_t p = order.part_index(order.node_at(j));
    if (m.rows() != rep.node_dims[j] || m.cols() != rep.part_dims[p]) {
      throw InvalidInput("H-representation map at node " + std::to_string(j + 1) +
                         " has shape " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected " +
                         std::to_string(rep.node_dims[j]) + "x" +
                         std::to_string(rep.part_dims[p]));
    }
  }
}

}  // namespace backstrom
