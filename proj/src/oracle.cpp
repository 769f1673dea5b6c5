#include "backstrom/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "backstrom/classify.hpp"
#include "backstrom/errors.hpp"

namespace backstrom {

std::vector<std::uint64_t> algebra_side_syzygy(const ValuedQuiver& q, const std::vector<std::uint64_t>& v) {
  if (v.size() != q.size()) throw InvalidInput("dimension vector does not match the quiver");
  std::vector<std::uint64_t> out(q.size(), 0);
  for (const auto& arrow : q.arrows) {
    std::uint64_t add = 0;
    if (__builtin_mul_overflow(v[arrow.src], static_cast<std::uint64_t>(arrow.val.a), &add) ||
        __builtin_add_overflow(out[arrow.dst], add, &out[arrow.dst])) {
      throw CapacityExceeded("algebra-side syzygy exceeds 64 bits");
    }
  }
  return out;
}

StableObject lift_cover_kernel(const BackstromOrder& order, const HCover& cover) {
  StableObject out;
  for (std::size_t j = 0; j < order.node_count(); ++j) {
    const Node shifted = rad_shift(order, order.node_at(j));
    if (!is_lambda_projective(order, shifted)) out.add(shifted, cover.kernel_node_dims[j]);
  }
  return out;
}

namespace {

template <class Field>
void check_cover(const BackstromOrder& order, const HRepresentation<Field>& rep, const StableObject& expect,
                 const std::string& what, std::vector<std::string>& out) {
  const auto cover = h_projective_cover(order, rep);
  for (std::size_t p = 0; p < order.part_count(); ++p) {
    if (cover.kernel_part_dims[p] != 0) {
      out.push_back(what + ": cover kernel is nonzero at part " + std::to_string(p + 1));
    }
  }
  const auto lifted = lift_cover_kernel(order, cover);
  if (!(lifted == expect)) {
    out.push_back(what + ": cover kernel lifts to " + describe(order, lifted) + ", syzygy rule gives " +
                  describe(order, expect));
  }
  const auto by_rank = first_syzygy_from_h_module(order, rep);
  if (!(by_rank == lifted)) {
    out.push_back(what + ": rank formula gives " + describe(order, by_rank) + ", cover kernel gives " +
                  describe(order, lifted));
  }
}

}  // namespace

std::vector<std::string> cross_check_syzygy(const BackstromOrder& order, std::uint64_t seed,
                                            std::size_t random_sums) {
  std::vector<std::string> out;
  visit_field(order.field(), [&](const auto& field) {
    using Field = std::decay_t<decltype(field)>;
    const auto jp = j_prime(order);
    for (const auto& j : jp) {
      const auto id = std::to_string(order.external_id(j));
      check_cover(order, h_module_of_gamma_projective(order, field, j), syzygy(order, j), "I(" + id + ")", out);

      // Unstable kernel: the cover kernel before dropping projectives.
      const auto cover = h_projective_cover(order, h_module_of_gamma_projective(order, field, j));
      std::vector<Node> unstable;
      for (std::size_t k = 0; k < order.node_count(); ++k) {
        for (std::size_t c = 0; c < cover.kernel_node_dims[k]; ++c) unstable.push_back(rad_shift(order, order.node_at(k)));
      }
      std::sort(unstable.begin(), unstable.end());
      if (unstable != full_cover_kernel(order, j).kernel) {
        out.push_back("I(" + id + "): unstable cover kernel differs from full_cover_kernel");
      }
    }
    for (std::size_t p = 0; p < order.part_count(); ++p) {
      check_cover(order, h_projective(order, field, p), StableObject{}, "P(" + std::to_string(p + 1) + ")", out);
    }
    for (const auto& j : order.nodes()) {
      check_cover(order, h_node_simple(order, field, j), StableObject{},
                  "S(" + std::to_string(order.external_id(j)) + ")", out);
    }

    std::mt19937_64 rng(seed);
    const auto all = order.nodes();
    for (std::size_t t = 0; t < random_sums; ++t) {
      std::uniform_int_distribution<std::size_t> count(1, 4), pick(0, all.size() - 1);
      std::vector<HRepresentation<Field>> summands;
      StableObject expect;
      std::string what = "random sum of I(";
      const std::size_t k = count(rng);
      for (std::size_t s = 0; s < k; ++s) {
        const Node j = all[pick(rng)];
        summands.push_back(h_module_of_gamma_projective(order, field, j));
        if (!is_lambda_projective(order, j)) expect += syzygy(order, j);
        what += (s ? "," : "") + std::to_string(order.external_id(j));
      }
      what += ")";
      const auto sum = direct_sum<Field>(order, field, summands);
      check_cover(order, change_basis(order, sum, field, rng), expect, what, out);
    }
  });
  return out;
}

namespace {

// Image dimension of level i in the colimit, from separately iterated
// algebra-side vectors: blocks at x count when x still has a walk of length n.
std::vector<std::uint64_t> naive_image_dims(const ValuedQuiver& q, std::size_t a, std::size_t b,
                                            std::size_t steps) {
  const std::size_t n = q.size();
  std::vector<bool> alive(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::uint64_t> v(n, 0);
    v[x] = 1;
    for (std::size_t i = 0; i < n; ++i) {
      for (auto& c : v) c = std::min<std::uint64_t>(c, 1);  // only the support matters
      v = algebra_side_syzygy(q, v);
    }
    alive[x] = std::any_of(v.begin(), v.end(), [](std::uint64_t c) { return c > 0; });
  }
  std::vector<std::uint64_t> u(n, 0), w(n, 0), dims;
  u[a] = 1;
  w[b] = 1;
  for (std::size_t i = 0; i <= steps; ++i) {
    std::uint64_t d = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (!alive[x]) continue;
      std::uint64_t t = 0;
      if (__builtin_mul_overflow(u[x], w[x], &t) ||
          __builtin_mul_overflow(t, static_cast<std::uint64_t>(q.vertices[x].weight), &t) ||
          __builtin_add_overflow(d, t, &d)) {
        throw CapacityExceeded("naive colimit exceeds 64 bits");
      }
    }
    dims.push_back(d);
    u = algebra_side_syzygy(q, u);
    w = algebra_side_syzygy(q, w);
  }
  return dims;
}

std::string history_string(const StabilizedHom& h) {
  std::string s = h.dim ? std::to_string(*h.dim) : "inf";
  s += " at level " + std::to_string(h.level) + " [";
  for (std::size_t i = 0; i < h.history.size(); ++i) s += (i ? " " : "") + std::to_string(h.history[i]);
  return s + "]";
}

}  // namespace

std::vector<std::string> cross_check_dsg(const BackstromOrder& order) {
  std::vector<std::string> out;
  const auto data = build_a_lambda(order);
  const auto& q = data.quiver;
  const auto op_order = order_syzygy_operator(order);
  const auto op_alg = quiver_syzygy_operator(q);
  if (op_order.ids != op_alg.ids) {
    out.push_back("order side and algebra side disagree on the vertex set");
    return out;
  }
  const std::size_t n = q.size();

  // Iterated Omega, both sides, |J'|+1 steps.
  for (std::size_t s = 0; s < n; ++s) {
    StableObject x = StableObject::single(data.vertex_nodes[s]);
    std::vector<std::uint64_t> v(n, 0);
    v[s] = 1;
    try {
      bool same = true;
      for (std::size_t step = 1; step <= n + 1 && same; ++step) {
        x = syzygy(order, x);
        v = algebra_side_syzygy(q, v);
        for (std::size_t i = 0; i < n && same; ++i) same = x[data.vertex_nodes[i]] == v[i];
        if (!same) {
          out.push_back("Omega^" + std::to_string(step) + "(Q_" + std::to_string(op_alg.ids[s]) +
                        ") differs between order side " + describe(order, x) + " and algebra side");
        }
      }
    } catch (const CapacityExceeded&) {
      // exponential growth; the compared prefix is what we have
    }
  }

  const bool sg_finite = sg_hom_finite(q).value;
  bool some_infinite_diagonal = false;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto tag = "Hom(" + std::to_string(op_alg.ids[a]) + "," + std::to_string(op_alg.ids[b]) + ")";
      const auto h_order = stabilized_hom(op_order, a, b);
      const auto h_alg = stabilized_hom(op_alg, a, b);
      if (!(h_order.dim == h_alg.dim && h_order.level == h_alg.level && h_order.history == h_alg.history)) {
        out.push_back(tag + ": order side " + history_string(h_order) + ", algebra side " + history_string(h_alg));
        continue;
      }
      if (h_order.history.empty() || h_order.history[0] != (a == b ? 1u : 0u)) {
        out.push_back(tag + ": level-0 dimension is not the stable Hom of Q_a, Q_b");
      }
      if (h_order.infinite()) {
        if (a == b) some_infinite_diagonal = true;
        if (sg_finite) out.push_back(tag + ": infinite on an sg-Hom-finite quiver");
        continue;
      }
      try {
        const std::size_t horizon = h_order.level + n * n + 2 * n + 2;
        const auto naive = naive_image_dims(q, a, b, horizon);
        for (std::size_t i = 0; i < naive.size(); ++i) {
          const bool settled = i >= h_order.level;
          if ((settled && naive[i] != *h_order.dim) || (!settled && naive[i] >= *h_order.dim) ||
              (i > 0 && naive[i] < naive[i - 1])) {
            out.push_back(tag + ": naive colimit dims disagree with " + history_string(h_order) +
                          " at level " + std::to_string(i));
            break;
          }
        }
      } catch (const CapacityExceeded&) {
      }
    }
  }
  if (!sg_finite && !some_infinite_diagonal) {
    out.push_back("quiver is not sg-Hom-finite but every End space is finite");
  }

  if (sg_finite) {
    const auto v_order = v_lambda(order);
    const auto v_alg = v_lambda(q);
    const auto& wo = std::get<WedderburnData>(v_order);
    const auto& wa = std::get<WedderburnData>(v_alg);
    bool same = wo.blocks.size() == wa.blocks.size() && wo.suspension == wa.suspension;
    for (std::size_t i = 0; same && i < wo.blocks.size(); ++i) {
      same = wo.blocks[i].vertex == wa.blocks[i].vertex && wo.blocks[i].multiplicity == wa.blocks[i].multiplicity &&
             wo.blocks[i].weight == wa.blocks[i].weight;
    }
    if (!same) out.push_back("Wedderburn data differs between the two sides");
  }
  return out;
}

StripAgreement brute_force_strip_check(const ValuedQuiver& q) {
  const std::size_t n = q.size();
  if (n > 4) throw InvalidInput("brute-force stripping check is limited to 4 vertices");
  for (const auto& a : q.arrows) {
    if (!a.val.trivial()) throw InvalidInput("brute-force stripping check needs trivial valuations");
  }
  std::vector<std::vector<bool>> arrow(n, std::vector<bool>(n, false));
  for (const auto& a : q.arrows) arrow[a.src][a.dst] = true;

  auto cycles_on = [&](unsigned mask) {
    for (std::size_t v = 0; v < n; ++v) {
      if (!(mask >> v & 1u)) continue;
      std::size_t in = 0, out = 0;
      for (std::size_t w = 0; w < n; ++w) {
        if (!(mask >> w & 1u)) continue;
        out += arrow[v][w];
        in += arrow[w][v];
      }
      if (in != 1 || out != 1) return false;
    }
    return true;
  };

  StripAgreement result;
  result.strip = sg_hom_finite(q).value;
  for (unsigned mask = 0; mask < (1u << n) && !result.brute; ++mask) {
    if (!cycles_on(mask)) continue;
    std::vector<std::size_t> rest;
    for (std::size_t v = 0; v < n; ++v) {
      if (!(mask >> v & 1u)) rest.push_back(v);
    }
    do {
      unsigned built = mask;
      bool ok = true;
      for (auto v : rest) {
        if (arrow[v][v]) {
          ok = false;
          break;
        }
        bool has_in = false, has_out = false;
        for (std::size_t w = 0; w < n; ++w) {
          if (!(built >> w & 1u)) continue;
          has_out = has_out || arrow[v][w];
          has_in = has_in || arrow[w][v];
        }
        if (has_in && has_out) {
          ok = false;
          break;
        }
        built |= 1u << v;
      }
      if (ok) result.brute = true;
    } while (!result.brute && std::next_permutation(rest.begin(), rest.end()));
  }
  return result;
}

BackstromOrder random_order(std::mt19937_64& rng, const RandomOrderParams& params) {
  std::uniform_int_distribution<std::size_t> blocks(1, params.max_blocks), length(1, params.max_length);
  OrderDescription d;
  const std::size_t m = blocks(rng);
  std::size_t total = 0;
  for (std::size_t b = 0; b < m; ++b) {
    d.hereditary.cycles.push_back(length(rng));
    total += d.hereditary.cycles.back();
  }
  const std::size_t labels = std::uniform_int_distribution<std::size_t>(1, total)(rng);
  std::uniform_int_distribution<std::size_t> label(0, labels - 1);
  std::vector<std::vector<std::size_t>> parts(labels);
  for (std::size_t id = 1; id <= total; ++id) parts[label(rng)].push_back(id);
  for (auto& p : parts) {
    if (!p.empty()) d.gluing.parts.push_back(std::move(p));
  }
  static constexpr std::uint32_t kPrimes[] = {2, 3, 5, 7};
  const std::size_t f = std::uniform_int_distribution<std::size_t>(0, 4)(rng);
  if (f < 4) {
    d.field = PrimeField(kPrimes[f]);
  } else {
    d.field = RationalField{};
  }
  return BackstromOrder(std::move(d));
}

ValuedQuiver random_quiver(std::mt19937_64& rng, std::size_t max_vertices, bool valued) {
  ValuedQuiver q;
  const std::size_t n = std::uniform_int_distribution<std::size_t>(0, max_vertices)(rng);
  std::uniform_int_distribution<int> weight(1, 3), scale(1, 2);
  for (std::size_t v = 0; v < n; ++v) q.add_vertex(static_cast<int>(v + 1), valued ? weight(rng) : 1);
  const double density = std::uniform_real_distribution<double>(0.1, 0.6)(rng);
  std::bernoulli_distribution coin(density);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!coin(rng)) continue;
      Valuation val;
      if (valued) {
        const int di = q.vertices[i].weight, dj = q.vertices[j].weight;
        const int g = std::gcd(di, dj), t = scale(rng);
        val = {di / g * t, dj / g * t};
      }
      q.add_arrow(i, j, val);
    }
  }
  return q;
}

namespace {

void record(OracleSummary& summary, const std::string& prefix, const std::vector<std::string>& found,
            std::size_t& counter) {
  counter += found.size();
  for (const auto& f : found) {
    if (summary.details.size() < 20) summary.details.push_back(prefix + f);
  }
}

}  // namespace

OracleSummary run_oracle(std::uint64_t seed, std::size_t trials, const RandomOrderParams& params) {
  OracleSummary summary;
  summary.seed = seed;
  summary.trials = trials;
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto order = random_order(rng, params);
    const auto sub = rng();
    const auto prefix = "trial " + std::to_string(t) + " (" + describe(order) + "): ";
    record(summary, prefix, cross_check_syzygy(order, sub), summary.syzygy_mismatches);
    record(summary, prefix, cross_check_dsg(order), summary.dsg_mismatches);
  }
  return summary;
}

OracleSummary run_oracle(const BackstromOrder& order, std::uint64_t seed) {
  OracleSummary summary;
  summary.seed = seed;
  summary.trials = 1;
  record(summary, "", cross_check_syzygy(order, seed, 8), summary.syzygy_mismatches);
  record(summary, "", cross_check_dsg(order), summary.dsg_mismatches);
  return summary;
}

}  // namespace backstrom
