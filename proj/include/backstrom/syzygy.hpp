#pragma once

// The stable category of add Gamma modulo Lambda-projectives, modelled by
// multisets of non-Lambda-projective Q_j, and the syzygy operator on it.
//
// The projective cover of Q_j (j in part v) is
//   0 -> (+)_{j' in v, j' != j} Q_{rad(j')} -> P_v -> Q_j -> 0,
// so stably Omega(Q_j) is that kernel with its Lambda-projective summands
// dropped. The same rule gives the valued quiver of A(Lambda) = D (+) M:
// one vertex per j in J' and an arrow i -> rad(j') for every j' in part(i)
// other than i whose shift lies in J'.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "backstrom/h_representation.hpp"
#include "backstrom/order.hpp"
#include "backstrom/valued_quiver.hpp"

namespace backstrom {

class StableObject {
 public:
  StableObject() = default;
  static StableObject single(const Node& j, std::uint64_t count = 1);

  /// Throws CapacityExceeded on 64-bit overflow.
  void add(const Node& j, std::uint64_t count);
  std::uint64_t operator[](const Node& j) const;

  /// Nonzero entries only.
  const std::map<Node, std::uint64_t>& multiplicities() const { return mult_; }
  bool empty() const { return mult_.empty(); }
  std::uint64_t total() const;

  StableObject& operator+=(const StableObject& other);
  friend StableObject operator+(StableObject a, const StableObject& b) { return a += b; }
  bool operator==(const StableObject&) const = default;

 private:
  std::map<Node, std::uint64_t> mult_;
};

/// "{3:1,5:2}" by external node id.
std::string describe(const BackstromOrder& order, const StableObject& x);

/// Nodes whose Q_j is not Lambda-projective (part size >= 2), ascending.
std::vector<Node> j_prime(const BackstromOrder& order);

/// Stable syzygy, extended additively. Throws InvalidInput if the support
/// leaves J'.
StableObject syzygy(const BackstromOrder& order, const StableObject& x);
StableObject syzygy(const BackstromOrder& order, const Node& j);
StableObject syzygy_power(const BackstromOrder& order, StableObject x, std::size_t k);

/// Omega(Gamma) = sum over j in J' of Omega(Q_j).
StableObject syzygy_of_gamma(const BackstromOrder& order);

struct TrivialExtensionData {
  ValuedQuiver quiver;             // vertex ids are external node ids
  std::vector<Node> vertex_nodes;  // node of each quiver vertex
};

TrivialExtensionData build_a_lambda(const BackstromOrder& order);

struct CoverKernel {
  std::size_t part = 0;
  std::vector<Node> kernel;  // multiset, ascending
  bool lambda_projective = false;
};

/// Unstable kernel of the projective cover of Q_j, keeping projective
/// summands. A Lambda-projective Q_j is its own cover with zero kernel.
CoverKernel full_cover_kernel(const BackstromOrder& order, const Node& j);

/// Stable first syzygy of the CM module corresponding to an H-module: the
/// cover kernel in mod H has dimension Z_j = dim W_part(j) - rank(alpha_j)
/// at node j and lifts to (+) Q_{rad(j)}^{Z_j}.
template <class Field>
StableObject first_syzygy_from_h_module(const BackstromOrder& order,
                                        const HRepresentation<Field>& rep) {
  check_shapes(order, rep);
  StableObject out;
  for (std::size_t j = 0; j < order.node_count(); ++j) {
    const Node node = order.node_at(j);
    const std::size_t w = rep.part_dims[order.part_index(node)];
    const std::size_t z = w - rank(rep.maps[j]);
    const Node shifted = rad_shift(order, node);
    if (z > 0 && !is_lambda_projective(order, shifted)) out.add(shifted, z);
  }
  return out;
}

}  // namespace backstrom
