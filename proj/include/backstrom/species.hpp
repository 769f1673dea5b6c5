#pragma once

// The hereditary radical-square-zero algebra H(Lambda, Gamma) as a bipartite
// quiver (one arrow part -> node for each node of the part), Dynkin recognition
// of valued graphs, and positive-root enumeration. Indecomposable CM
// Lambda-modules correspond to the non-simple indecomposable H-modules, so for
// Dynkin H their number is sum over components of (#positive roots - rank).

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "backstrom/order.hpp"
#include "backstrom/valued_quiver.hpp"

namespace backstrom {

struct BipartiteHQuiver {
  struct GammaVertex {
    Node node;
    std::size_t id = 0;  // external node id
  };
  struct Arrow {
    std::size_t part = 0;  // index into lambda_vertices
    std::size_t node = 0;  // index into gamma_vertices
  };

  std::vector<GammaVertex> gamma_vertices;
  std::vector<std::size_t> lambda_vertices;  // part indices
  std::vector<Arrow> arrows;
};

BipartiteHQuiver build_h(const BackstromOrder& order);

/// Undirected graph with Cartan data on edges: an edge {u, v} carries
/// d_uv = -c_uv and d_vu = -c_vu. A loop has u == v.
struct ValuedGraph {
  struct Vertex {
    std::string label;
    int weight = 1;
  };
  struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;
    int d_uv = 1;
    int d_vu = 1;
  };

  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

/// Part vertices come first (labelled P1, P2, ...), then node vertices
/// (labelled by external node id).
ValuedGraph underlying_valued_graph(const BipartiteHQuiver& h);

/// An arrow i -> j with valuation (a, b) becomes c_ij = -b, c_ji = -a.
ValuedGraph underlying_valued_graph(const ValuedQuiver& q);

enum class DynkinFamily { A, B, C, D, E6, E7, E8, F4, G2 };

std::string to_string(DynkinFamily family);

struct DynkinType {
  DynkinFamily family = DynkinFamily::A;
  std::size_t rank = 0;

  bool operator==(const DynkinType&) const = default;
};

std::string to_string(const DynkinType& type);

struct NotDynkin {
  enum class Reason { kLoop, kCycle, kHighDegree, kBadValuation, kBadBranch };
  Reason reason;
  std::vector<std::size_t> vertices;  // witness subgraph (graph indices)
  std::string detail;
};

std::string to_string(NotDynkin::Reason reason);

struct ComponentClass {
  std::vector<std::size_t> vertices;
  std::variant<DynkinType, NotDynkin> kind;

  bool is_dynkin() const { return std::holds_alternative<DynkinType>(kind); }
};

std::vector<ComponentClass> dynkin_components(const ValuedGraph& g);

struct CartanData {
  std::vector<std::vector<int>> matrix;
  std::vector<long> symmetrizer;  // D with D*C symmetric, positive integers

  std::size_t rank() const { return matrix.size(); }
};

/// Cartan data of the subgraph induced on `vertices`. Throws InvalidInput on
/// loops or when the data is not symmetrizable.
CartanData cartan_data(const ValuedGraph& g, const std::vector<std::size_t>& vertices);
CartanData cartan_data(const ValuedGraph& g);

/// Cartan data of the standard Dynkin diagram of the given type.
CartanData cartan_of(const DynkinType& type);

class NotFiniteType : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

using Root = std::vector<long>;

/// Positive roots by closure of the simple roots under simple reflections,
/// sorted by height then lexicographically. Throws NotFiniteType once the
/// closure exceeds the largest finite-type root count for this rank.
std::vector<Root> positive_roots(const CartanData& c);

struct FiniteTypeReport {
  bool finite = true;
  ValuedGraph graph;
  std::vector<ComponentClass> components;
};

FiniteTypeReport is_finite_cm_type(const BackstromOrder& order);

/// Number of indecomposable CM Lambda-modules, nullopt when infinite.
std::optional<std::size_t> count_indec_cm(const BackstromOrder& order);

}  // namespace backstrom
