#pragma once

// Homological verdicts for Lambda read off the valued quiver Q of the
// radical-square-zero algebra A(Lambda):
//   finite gl.dim       Q acyclic (loops are cycles)
//   Iwanaga-Gorenstein  each component acyclic or a trivially valued cycle
//   Gorenstein          each component a trivially valued cycle
//   sg-Hom-finite       stripping sources and sinks leaves a disjoint union of
//                       trivially valued cycles

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "backstrom/order.hpp"
#include "backstrom/valued_quiver.hpp"

namespace backstrom {

struct Witness {
  enum class Kind {
    kCycle,           // a directed cycle, in order
    kBadComponent,    // component that is neither acyclic nor a trivial cycle
    kSimpleComponent, // isolated vertex without a loop
    kValuedCycle,     // cycle component carrying a nontrivial valuation
    kStrippedCore,    // core vertex of in- or out-degree >= 2, or a valued core arrow
    kNotDynkin,       // component of the H-quiver that is not Dynkin
  };
  Kind kind;
  std::vector<int> vertices;  // vertex ids
  std::string detail;
};

std::string to_string(Witness::Kind kind);

struct Verdict {
  bool value = true;
  std::optional<Witness> witness;  // present iff value is false
};

struct StripResult {
  bool value = true;
  std::vector<std::size_t> core;  // vertex indices, ascending
  std::optional<Witness> witness;
};

Verdict finite_gldim(const ValuedQuiver& q);
Verdict iwanaga_gorenstein(const ValuedQuiver& q);
Verdict gorenstein(const ValuedQuiver& q);

/// Every component is a single loop-free vertex or a trivially valued cycle.
/// Unlike gorenstein, simple components are allowed.
Verdict self_injective_pattern(const ValuedQuiver& q);

StripResult sg_hom_finite(const ValuedQuiver& q);

/// Vertices whose component is a trivially valued directed cycle (indices).
std::vector<std::size_t> gproj_nonprojective_vertices(const ValuedQuiver& q);

struct ClassificationReport {
  std::optional<bool> hereditary;  // unknown for bare quivers
  Verdict finite_gldim;
  Verdict iwanaga_gorenstein;
  Verdict gorenstein;
  Verdict self_injective;
  StripResult sg_hom_finite;
  std::optional<Verdict> finite_cm_type;  // unknown for bare quivers
  std::optional<std::size_t> indec_cm_count;
  std::vector<int> j_prime;  // quiver vertex ids
  std::vector<int> core;
  std::vector<int> gproj_vertices;
  ValuedQuiver a_quiver;
};

/// Throws InternalError when the implication chain
/// hereditary => finite gl.dim => IG => sg-Hom-finite, Gorenstein => IG
/// (and Gorenstein => self-injective pattern) is broken.
void check_hierarchy(const ClassificationReport& report);

ClassificationReport classify(const BackstromOrder& order);

/// Order-independent fields only. Throws InvalidInput for an invalid quiver.
ClassificationReport classify_quiver(const ValuedQuiver& q);

}  // namespace backstrom
