#pragma once

// Hom spaces in the singularity category through the stabilization colimit
//   Hom_sg(q X, q Y) = colim_i stable-Hom(Omega^i X, Omega^i Y).
//
// Stable Hom between the semisimple-like objects sum u[x] Q_x and
// sum w[x] Q_x is sum_x u[x] w[x] d_x, and Omega acts on a morphism blockwise
// (f_x tensored with an identity for each summand of Omega(Q_x)). So the
// blocks at x survive to the colimit exactly when x has arbitrarily long
// Omega-walks, i.e. x reaches a cycle. The image of level i therefore has
// dimension e_i = sum over such x of u_i[x] w_i[x] d_x, the colimit is sup e_i,
// and e_i counts weighted walks of length i from (a, b) to the diagonal in the
// square of the Omega-graph. Boundedness of such walk counts is decided on
// the strongly connected components of the relevant part of that graph.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "backstrom/classify.hpp"
#include "backstrom/order.hpp"
#include "backstrom/syzygy.hpp"
#include "backstrom/valued_quiver.hpp"

namespace backstrom {

/// Omega on the simple objects: Omega(x) = sum of m * y over images[x].
struct SyzygyOperator {
  std::vector<int> ids;
  std::vector<int> weights;
  std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> images;

  std::size_t size() const { return ids.size(); }
  std::size_t index_of(int id) const;
  std::vector<std::uint64_t> apply(const std::vector<std::uint64_t>& v) const;
};

/// Vertices are J' with external node ids, weights 1.
SyzygyOperator order_syzygy_operator(const BackstromOrder& order);

/// Omega(S_i) = sum over arrows i -> l of S_l^a for valuation (a, b).
SyzygyOperator quiver_syzygy_operator(const ValuedQuiver& q);

struct StabilizedHom {
  std::optional<std::uint64_t> dim;  // nullopt: infinite
  std::size_t level = 0;             // first level whose image has full dimension
  std::vector<std::uint64_t> history;  // level dims sum_x u_i w_i d_x, levels 0..level
  std::optional<int> witness;        // infinite case: core vertex of Omega-out-multiplicity >= 2

  bool infinite() const { return !dim.has_value(); }
  bool operator==(const StabilizedHom&) const = default;
};

/// Throws InternalError if the structural analysis contradicts itself.
StabilizedHom stabilized_hom(const SyzygyOperator& op, std::size_t a, std::size_t b);

/// 1 if a == b else 0, for a, b in J'. Throws InvalidInput otherwise.
std::uint64_t stable_hom_level0(const BackstromOrder& order, const Node& a, const Node& b);

StabilizedHom dsg_hom_dim(const BackstromOrder& order, const Node& a, const Node& b);

struct WedderburnBlock {
  int vertex = 0;  // core vertex id
  std::uint64_t multiplicity = 0;
  int weight = 1;
};

struct WedderburnData {
  std::vector<WedderburnBlock> blocks;
  std::vector<std::size_t> suspension;  // block i -> block of the core predecessor
  std::size_t level = 0;                // N used for the multiplicities
};

struct NotSemisimple {
  Witness witness;
};

using VStructure = std::variant<WedderburnData, NotSemisimple>;

/// Wedderburn data of V = End_sg(q Gamma) when the quiver is sg-Hom-finite.
/// Asserts sum m_c^2 d_c against the pairwise stabilized Hom table.
VStructure v_structure(const ValuedQuiver& q, const SyzygyOperator& op);
VStructure v_lambda(const BackstromOrder& order);
VStructure v_lambda(const ValuedQuiver& q);

struct SuspensionOrbit {
  std::size_t start_level = 0;
  std::vector<StableObject> period;  // Omega^start(Q_a) ... restricted to the core
};

/// Throws NotApplicable if a is Lambda-projective or the order is not
/// sg-Hom-finite.
SuspensionOrbit suspension_orbit(const BackstromOrder& order, const Node& a);

}  // namespace backstrom
