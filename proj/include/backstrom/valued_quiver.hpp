#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace backstrom {

/// Valuation (a, b) on an arrow i -> j: a = dim of M_ij as a right D_j-module,
/// b = dim of M_ij as a left D_i-module.
struct Valuation {
  int a = 1;
  int b = 1;

  bool trivial() const { return a == 1 && b == 1; }
  bool operator==(const Valuation&) const = default;
};

struct QuiverVertex {
  int id = 0;
  int weight = 1;  // dim_k of the division algebra D_i

  bool operator==(const QuiverVertex&) const = default;
};

struct QuiverArrow {
  std::size_t src = 0;  // vertex index
  std::size_t dst = 0;
  Valuation val;

  bool operator==(const QuiverArrow&) const = default;
};

/// Vertices are addressed by index; ids are the external labels.
struct ValuedQuiver {
  std::vector<QuiverVertex> vertices;
  std::vector<QuiverArrow> arrows;

  std::size_t size() const { return vertices.size(); }
  std::size_t add_vertex(int id, int weight = 1);
  void add_arrow(std::size_t src, std::size_t dst, Valuation val = {});
  /// Throws InvalidInput for an unknown id.
  std::size_t index_of(int id) const;
  bool has_arrow(std::size_t src, std::size_t dst) const;

  bool operator==(const ValuedQuiver&) const = default;
};

/// Broken invariants: duplicate ids, non-positive weights or valuations,
/// dangling endpoints, parallel arrows, a*d_dst != b*d_src.
std::vector<std::string> validate(const ValuedQuiver& q);

/// Reverse every arrow; valuations swap to (b, a).
ValuedQuiver reversed(const ValuedQuiver& q);

/// Induced subquiver on the given vertex indices (kept in the given order).
ValuedQuiver induced(const ValuedQuiver& q, const std::vector<std::size_t>& keep);

/// Weakly connected components as ascending index lists, ordered by first vertex.
std::vector<std::vector<std::size_t>> weak_components(const ValuedQuiver& q);

/// Out-neighbour lists by vertex index (one entry per arrow).
std::vector<std::vector<std::size_t>> out_adjacency(const ValuedQuiver& q);

/// Arrows in canonical order (by src id, then dst id) for deterministic output.
std::vector<QuiverArrow> sorted_arrows(const ValuedQuiver& q);

}  // namespace backstrom
