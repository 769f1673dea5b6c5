#include "backstrom/order.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace backstrom {

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::kNoCycles: return "no_cycles";
    case Violation::Kind::kZeroLengthCycle: return "zero_length_cycle";
    case Violation::Kind::kEmptyPart: return "empty_part";
    case Violation::Kind::kNodeOutOfRange: return "node_out_of_range";
    case Violation::Kind::kNodeRepeated: return "node_repeated";
    case Violation::Kind::kNodeUncovered: return "node_uncovered";
  }
  return "unknown";
}

std::vector<Violation> validate(const OrderDescription& description) {
  using Kind = Violation::Kind;
  std::vector<Violation> out;
  const auto& cycles = description.hereditary.cycles;
  if (cycles.empty()) {
    out.push_back({Kind::kNoCycles, std::nullopt, std::nullopt, "cycle list is empty"});
  }
  for (std::size_t b = 0; b < cycles.size(); ++b) {
    if (cycles[b] == 0) {
      out.push_back({Kind::kZeroLengthCycle, std::nullopt, std::nullopt,
                     "cycle " + std::to_string(b + 1) + " has length 0"});
    }
  }
  const std::size_t total = std::accumulate(cycles.begin(), cycles.end(), std::size_t{0});

  std::vector<std::size_t> seen(total + 1, 0);
  const auto& parts = description.gluing.parts;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].empty()) {
      out.push_back({Kind::kEmptyPart, std::nullopt, p,
                     "part " + std::to_string(p) + " is empty"});
    }
    for (std::size_t id : parts[p]) {
      if (id == 0 || id > total) {
        out.push_back({Kind::kNodeOutOfRange, id, p,
                       "node " + std::to_string(id) + " in part " + std::to_string(p) +
                           " is outside 1.." + std::to_string(total)});
        continue;
      }
      if (++seen[id] == 2) {
        out.push_back({Kind::kNodeRepeated, id, p,
                       "node " + std::to_string(id) + " is repeated"});
      }
    }
  }
  for (std::size_t id = 1; id <= total; ++id) {
    if (seen[id] == 0) {
      out.push_back({Kind::kNodeUncovered, id, std::nullopt,
                     "node " + std::to_string(id) + " is uncovered"});
    }
  }
  return out;
}

BackstromOrder::BackstromOrder(OrderDescription description)
    : field_(std::move(description.field)),
      hereditary_(std::move(description.hereditary)),
      gluing_(std::move(description.gluing)) {
  const auto violations =
      validate(OrderDescription{field_, hereditary_, gluing_});
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << "invalid order:";
    for (const auto& v : violations) msg << "\n  " << v.message;
    throw InvalidInput(msg.str());
  }
  for (std::size_t b = 0; b < hereditary_.cycles.size(); ++b) {
    block_offset_.push_back(node_of_index_.size());
    for (std::size_t i = 0; i < hereditary_.cycles[b]; ++i) node_of_index_.push_back({b, i});
  }
  part_of_index_.assign(node_of_index_.size(), 0);
  for (std::size_t p = 0; p < gluing_.parts.size(); ++p) {
    std::sort(gluing_.parts[p].begin(), gluing_.parts[p].end());
    for (std::size_t id : gluing_.parts[p]) part_of_index_[id - 1] = p;
  }
}

bool BackstromOrder::contains(const Node& node) const {
  return node.block < block_count() && node.pos < hereditary_.cycles[node.block];
}

void BackstromOrder::require(const Node& node) const {
  if (!contains(node)) {
    throw InvalidInput("invalid node (block " + std::to_string(node.block) + ", pos " +
                       std::to_string(node.pos) + ")");
  }
}

std::size_t BackstromOrder::index_of(const Node& node) const {
  require(node);
  return block_offset_[node.block] + node.pos;
}

Node BackstromOrder::node_at(std::size_t index) const {
  if (index >= node_of_index_.size()) {
    throw InvalidInput("node index " + std::to_string(index) + " out of range");
  }
  return node_of_index_[index];
}

Node BackstromOrder::node_from_external(std::size_t id) const {
  if (id == 0 || id > node_count()) {
    throw InvalidInput("node id " + std::to_string(id) + " is outside 1.." +
                       std::to_string(node_count()));
  }
  return node_of_index_[id - 1];
}

std::vector<Node> BackstromOrder::part_nodes(std::size_t part) const {
  std::vector<Node> out;
  for (std::size_t id : gluing_.parts.at(part)) out.push_back(node_of_index_[id - 1]);
  return out;
}

Node rad_shift(const BackstromOrder& order, const Node& j) {
  order.index_of(j);
  return {j.block, (j.pos + 1) % order.cycle_length(j.block)};
}

Node corad_shift(const BackstromOrder& order, const Node& j) {
  order.index_of(j);
  const std::size_t n = order.cycle_length(j.block);
  return {j.block, (j.pos + n - 1) % n};
}

std::size_t part_of(const BackstromOrder& order, const Node& j) { return order.part_index(j); }

bool is_lambda_projective(const BackstromOrder& order, const Node& j) {
  return order.part_size(order.part_index(j)) == 1;
}

bool lambda_is_hereditary(const BackstromOrder& order) {
  for (std::size_t p = 0; p < order.part_count(); ++p) {
    if (order.part_size(p) != 1) return false;
  }
  return true;
}

std::string describe(const BackstromOrder& order) {
  std::string out = "cycles [";
  for (std::size_t b = 0; b < order.block_count(); ++b) {
    out += (b ? "," : "") + std::to_string(order.cycle_length(b));
  }
  out += "] partition [";
  for (std::size_t p = 0; p < order.part_count(); ++p) {
    out += p ? ",[" : "[";
    const auto& part = order.gluing().parts[p];
    for (std::size_t i = 0; i < part.size(); ++i) out += (i ? "," : "") + std::to_string(part[i]);
    out += "]";
  }
  return out + "]";
}

}  // namespace backstrom
