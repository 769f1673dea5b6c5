#pragma once

// Split basic Backstrom orders (Lambda, Gamma) over R = k[[pi]].
//
// Gamma is a product of standard cycle orders H(n_1) x ... x H(n_m). Its
// indecomposable projectives Q_j are indexed by nodes (block, pos), and
// rad Q_j = Q_{j+1}, corad Q_j = Q_{j-1} cyclically inside a block.
// Lambda is obtained by gluing the tops of the Q_j along a partition of the
// nodes; the parts index the indecomposable projective Lambda-modules.
//
// Externally nodes are numbered 1..N with blocks concatenated in order.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "backstrom/exact_linalg.hpp"

namespace backstrom {

struct Node {
  std::size_t block = 0;
  std::size_t pos = 0;

  auto operator<=>(const Node&) const = default;
};

struct HereditarySpec {
  std::vector<std::size_t> cycles;
};

/// Parts are lists of external (1-based) node ids.
struct GluingPartition {
  std::vector<std::vector<std::size_t>> parts;
};

/// Unvalidated description, as read from an input document.
struct OrderDescription {
  GroundField field = RationalField{};
  HereditarySpec hereditary;
  GluingPartition gluing;
};

struct Violation {
  enum class Kind {
    kNoCycles,
    kZeroLengthCycle,
    kEmptyPart,
    kNodeOutOfRange,
    kNodeRepeated,
    kNodeUncovered,
  };
  Kind kind;
  std::optional<std::size_t> node;  // external id
  std::optional<std::size_t> part;  // 0-based part index
  std::string message;
};

std::string to_string(Violation::Kind kind);

/// Every broken invariant of the description; empty means valid.
std::vector<Violation> validate(const OrderDescription& description);

class BackstromOrder {
 public:
  /// Throws InvalidInput listing every violation.
  explicit BackstromOrder(OrderDescription description);

  const GroundField& field() const { return field_; }
  const HereditarySpec& hereditary() const { return hereditary_; }
  const GluingPartition& gluing() const { return gluing_; }

  std::size_t block_count() const { return hereditary_.cycles.size(); }
  std::size_t cycle_length(std::size_t block) const { return hereditary_.cycles.at(block); }
  std::size_t node_count() const { return node_of_index_.size(); }
  std::size_t part_count() const { return gluing_.parts.size(); }

  bool contains(const Node& node) const;

  /// 0-based position of the node in the global numbering.
  std::size_t index_of(const Node& node) const;
  Node node_at(std::size_t index) const;
  std::size_t external_id(const Node& node) const { return index_of(node) + 1; }
  Node node_from_external(std::size_t id) const;

  std::vector<Node> nodes() const { return node_of_index_; }
  /// Nodes of a part, ascending.
  std::vector<Node> part_nodes(std::size_t part) const;
  std::size_t part_size(std::size_t part) const { return gluing_.parts.at(part).size(); }
  std::size_t part_index(const Node& node) const { return part_of_index_.at(index_of(node)); }

 private:
  void require(const Node& node) const;

  GroundField field_;
  HereditarySpec hereditary_;
  GluingPartition gluing_;
  std::vector<std::size_t> block_offset_;
  std::vector<Node> node_of_index_;
  std::vector<std::size_t> part_of_index_;
};

/// "cycles [3,1] partition [[1,4],[2],[3]]", parts as stored (sorted).
std::string describe(const BackstromOrder& order);

Node rad_shift(const BackstromOrder& order, const Node& j);
Node corad_shift(const BackstromOrder& order, const Node& j);
std::size_t part_of(const BackstromOrder& order, const Node& j);

/// Q_j is a projective Lambda-module iff its part is a singleton.
bool is_lambda_projective(const BackstromOrder& order, const Node& j);
bool lambda_is_hereditary(const BackstromOrder& order);

}  // namespace backstrom
