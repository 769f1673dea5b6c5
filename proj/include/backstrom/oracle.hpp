#pragma once

// Independent checks of the combinatorial shortcuts:
//  - syzygies recomputed from explicit projective covers in mod H, over the
//    order's ground field, with random changes of basis;
//  - the algebra-side syzygy of A(Lambda) read straight off the valued quiver;
//  - a brute-force membership test for "disjoint cycles plus adjoined
//    sources and sinks" on tiny quivers.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "backstrom/dsg.hpp"
#include "backstrom/exact_linalg.hpp"
#include "backstrom/h_representation.hpp"
#include "backstrom/order.hpp"
#include "backstrom/syzygy.hpp"
#include "backstrom/valued_quiver.hpp"

namespace backstrom {

/// v'_l = sum over arrows i -> l of v_i * a, for valuation (a, b).
std::vector<std::uint64_t> algebra_side_syzygy(const ValuedQuiver& q, const std::vector<std::uint64_t>& v);

template <class Field>
HRepresentation<Field> zero_h_module(const BackstromOrder& order, const Field& field) {
  HRepresentation<Field> rep{field, {}, {}, {}};
  rep.part_dims.assign(order.part_count(), 0);
  rep.node_dims.assign(order.node_count(), 0);
  for (std::size_t j = 0; j < order.node_count(); ++j) rep.maps.emplace_back(field, 0, 0);
  return rep;
}

namespace detail {

template <class Field>
void reshape_maps(const BackstromOrder& order, const Field& field, HRepresentation<Field>& rep) {
  for (std::size_t j = 0; j < order.node_count(); ++j) {
    const auto p = order.part_index(order.node_at(j));
    if (rep.maps[j].rows() != rep.node_dims[j] || rep.maps[j].cols() != rep.part_dims[p]) {
      rep.maps[j] = ExactMatrix<Field>(field, rep.node_dims[j], rep.part_dims[p]);
    }
  }
}

template <class Field>
ExactMatrix<Field> multiply(const ExactMatrix<Field>& x, const ExactMatrix<Field>& y) {
  const Field& f = x.field();
  if (x.cols() != y.rows()) throw InternalError("matrix product shape mismatch");
  ExactMatrix<Field> out(f, x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t k = 0; k < x.cols(); ++k) {
      if (f.is_zero(x(i, k))) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(x(i, k), y(k, j)));
    }
  }
  return out;
}

template <class Field>
ExactMatrix<Field> random_invertible(const Field& field, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-3, 3);
  for (;;) {
    ExactMatrix<Field> m(field, n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m(r, c) = field.from_int(entry(rng));
    }
    if (rank(m) == n) return m;
  }
}

}  // namespace detail

/// F(Q_j) = I(j): k at part(j) and at j, identity on the arrow, zero elsewhere.
template <class Field>
HRepresentation<Field> h_module_of_gamma_projective(const BackstromOrder& order, const Field& field,
                                                    const Node& j) {
  auto rep = zero_h_module(order, field);
  rep.part_dims[order.part_index(j)] = 1;
  rep.node_dims[order.index_of(j)] = 1;
  detail::reshape_maps(order, field, rep);
  rep.maps[order.index_of(j)] = ExactMatrix<Field>::identity(field, 1);
  return rep;
}

/// P(p): k at p and at every node of p, identities on the arrows.
template <class Field>
HRepresentation<Field> h_projective(const BackstromOrder& order, const Field& field, std::size_t part) {
  auto rep = zero_h_module(order, field);
  rep.part_dims[part] = 1;
  for (const auto& j : order.part_nodes(part)) rep.node_dims[order.index_of(j)] = 1;
  detail::reshape_maps(order, field, rep);
  for (const auto& j : order.part_nodes(part)) rep.maps[order.index_of(j)] = ExactMatrix<Field>::identity(field, 1);
  return rep;
}

/// S(j) at a node vertex (projective, since node vertices are sinks).
template <class Field>
HRepresentation<Field> h_node_simple(const BackstromOrder& order, const Field& field, const Node& j) {
  auto rep = zero_h_module(order, field);
  rep.node_dims[order.index_of(j)] = 1;
  detail::reshape_maps(order, field, rep);
  return rep;
}

template <class Field>
HRepresentation<Field> direct_sum(const BackstromOrder& order, const Field& field,
                                  std::span<const HRepresentation<Field>> summands) {
  auto rep = zero_h_module(order, field);
  for (const auto& s : summands) {
    check_shapes(order, s);
    for (std::size_t p = 0; p < order.part_count(); ++p) rep.part_dims[p] += s.part_dims[p];
    for (std::size_t j = 0; j < order.node_count(); ++j) rep.node_dims[j] += s.node_dims[j];
  }
  for (std::size_t j = 0; j < order.node_count(); ++j) {
    // block diagonal, rows by node and columns by the part of j
    const auto p = order.part_index(order.node_at(j));
    ExactMatrix<Field> m(field, rep.node_dims[j], rep.part_dims[p]);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& s : summands) {
      const auto& b = s.maps[j];
      for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) m(r0 + r, c0 + c) = b(r, c);
      }
      r0 += s.node_dims[j];
      c0 += s.part_dims[p];
    }
    rep.maps[j] = std::move(m);
  }
  return rep;
}

/// An isomorphic representation: alpha_j replaced by B_j alpha_j A_p for
/// random invertible A_p, B_j.
template <class Field>
HRepresentation<Field> change_basis(const BackstromOrder& order, const HRepresentation<Field>& rep,
                                    const Field& field, std::mt19937_64& rng) {
  check_shapes(order, rep);
  std::vector<ExactMatrix<Field>> part_change;
  for (std::size_t p = 0; p < order.part_count(); ++p) {
    part_change.push_back(detail::random_invertible(field, rep.part_dims[p], rng));
  }
  HRepresentation<Field> out = rep;
  for (std::size_t j = 0; j < order.node_count(); ++j) {
    const auto p = order.part_index(order.node_at(j));
    const auto b = detail::random_invertible(field, rep.node_dims[j], rng);
    out.maps[j] = detail::multiply(detail::multiply(b, rep.maps[j]), part_change[p]);
  }
  return out;
}

struct HCover {
  std::vector<std::size_t> part_multiplicity;  // copies of P(p)
  std::vector<std::size_t> node_multiplicity;  // copies of S(j)
  std::vector<std::size_t> kernel_part_dims;
  std::vector<std::size_t> kernel_node_dims;
};

/// Explicit projective cover P(p)^{dim W_p} (+) S(j)^{c_j} -> rep: identity at
/// the part vertices and [alpha_j | E_j] at node j, where E_j is a set of unit
/// columns completing the image of alpha_j. Kernels are computed as null
/// spaces of these matrices.
template <class Field>
HCover h_projective_cover(const BackstromOrder& order, const HRepresentation<Field>& rep) {
  check_shapes(order, rep);
  HCover cover;
  for (std::size_t p = 0; p < order.part_count(); ++p) {
    cover.part_multiplicity.push_back(rep.part_dims[p]);
    cover.kernel_part_dims.push_back(
        kernel_basis(ExactMatrix<Field>::identity(rep.field, rep.part_dims[p])).size());
  }
  for (std::size_t j = 0; j < order.node_count(); ++j) {
    const auto& alpha = rep.maps[j];
    const Field& f = alpha.field();
    std::vector<std::size_t> extra;
    std::size_t current = rank(alpha);
    for (std::size_t e = 0; e < alpha.rows() && current < alpha.rows(); ++e) {
      ExactMatrix<Field> trial(f, alpha.rows(), alpha.cols() + extra.size() + 1);
      for (std::size_t r = 0; r < alpha.rows(); ++r) {
        for (std::size_t c = 0; c < alpha.cols(); ++c) trial(r, c) = alpha(r, c);
      }
      for (std::size_t k = 0; k < extra.size(); ++k) trial(extra[k], alpha.cols() + k) = f.one();
      trial(e, alpha.cols() + extra.size()) = f.one();
      const auto r = rank(trial);
      if (r > current) {
        extra.push_back(e);
        current = r;
      }
    }
    ExactMatrix<Field> phi(f, alpha.rows(), alpha.cols() + extra.size());
    for (std::size_t r = 0; r < alpha.rows(); ++r) {
      for (std::size_t c = 0; c < alpha.cols(); ++c) phi(r, c) = alpha(r, c);
    }
    for (std::size_t k = 0; k < extra.size(); ++k) phi(extra[k], alpha.cols() + k) = f.one();
    if (rank(phi) != alpha.rows()) throw InternalError("projective cover is not surjective");
    cover.node_multiplicity.push_back(extra.size());
    cover.kernel_node_dims.push_back(kernel_basis(phi).size());
  }
  return cover;
}

/// The kernel (Z, 0) lifts to (+) Q_{rad(j)}^{Z_j}; Lambda-projectives dropped.
StableObject lift_cover_kernel(const BackstromOrder& order, const HCover& cover);

/// Mismatches between syzygy-core and the mod-H cover pipeline: I(j) for every
/// j in J', P(p) and S(j) (zero kernels), and `random_sums` random direct sums
/// of I(j)'s under random changes of basis.
std::vector<std::string> cross_check_syzygy(const BackstromOrder& order, std::uint64_t seed = 0,
                                            std::size_t random_sums = 2);

/// Mismatches between the order-side and algebra-side Omega: iterated
/// vectors for |J'|+1 steps and the full stabilized Hom table.
std::vector<std::string> cross_check_dsg(const BackstromOrder& order);

struct StripAgreement {
  bool brute = false;
  bool strip = false;
  bool agrees() const { return brute == strip; }
};

/// Membership by search: some vertex set C spans a disjoint union of directed
/// cycles and the rest can be ordered so each vertex is a loop-free source or
/// sink of the subquiver on C plus the earlier ones. Throws InvalidInput for
/// more than 4 vertices or a nontrivial valuation.
StripAgreement brute_force_strip_check(const ValuedQuiver& q);

struct RandomOrderParams {
  std::size_t max_blocks = 4;
  std::size_t max_length = 5;
};

BackstromOrder random_order(std::mt19937_64& rng, const RandomOrderParams& params = {});

/// Up to max_vertices vertices. With `valued`, weights in 1..3 and consistent
/// valuations; otherwise weights 1 and trivial valuations.
ValuedQuiver random_quiver(std::mt19937_64& rng, std::size_t max_vertices, bool valued);

struct OracleSummary {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t syzygy_mismatches = 0;
  std::size_t dsg_mismatches = 0;
  std::vector<std::string> details;  // first few mismatch descriptions

  bool ok() const { return syzygy_mismatches == 0 && dsg_mismatches == 0; }
};

OracleSummary run_oracle(std::uint64_t seed, std::size_t trials, const RandomOrderParams& params = {});
OracleSummary run_oracle(const BackstromOrder& order, std::uint64_t seed);

}  // namespace backstrom
