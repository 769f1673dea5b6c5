#include "backstrom/dsg.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "backstrom/errors.hpp"

namespace backstrom {

namespace {

constexpr std::uint64_t kMaxPeriod = 1'000'000;

std::uint64_t add_checked(std::uint64_t x, std::uint64_t y) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(x, y, &r)) throw CapacityExceeded("Hom dimension exceeds 64 bits");
  return r;
}

std::uint64_t mul_checked(std::uint64_t x, std::uint64_t y) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(x, y, &r)) throw CapacityExceeded("Hom dimension exceeds 64 bits");
  return r;
}

std::uint64_t lcm_checked(std::uint64_t x, std::uint64_t y) {
  const std::uint64_t l = std::lcm(x, y);
  if (l > kMaxPeriod) throw CapacityExceeded("cycle lengths have an lcm above " + std::to_string(kMaxPeriod));
  return l;
}

using WeightedAdj = std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>>;

std::vector<bool> reach(const WeightedAdj& adj, const std::vector<std::size_t>& from) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<std::size_t> stack;
  for (auto s : from) {
    if (!seen[s]) {
      seen[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (const auto& [w, m] : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

WeightedAdj reverse_of(const WeightedAdj& adj) {
  WeightedAdj rev(adj.size());
  for (std::size_t v = 0; v < adj.size(); ++v) {
    for (const auto& [w, m] : adj[v]) rev[w].emplace_back(v, m);
  }
  return rev;
}

// Tarjan on the subgraph induced by `allowed`. Components come out in reverse
// topological order (sinks first).
struct Sccs {
  std::vector<std::size_t> comp;  // adj.size() when not allowed
  std::vector<std::vector<std::size_t>> members;
};

Sccs strongly_connected(const WeightedAdj& adj, const std::vector<bool>& allowed) {
  const std::size_t n = adj.size();
  const std::size_t none = n;
  Sccs out;
  out.comp.assign(n, none);
  std::vector<std::size_t> index(n, none), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (!allowed[root] || index[root] != none) continue;
    std::vector<std::pair<std::size_t, std::size_t>> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next < adj[v].size()) {
        const std::size_t w = adj[v][next++].first;
        if (!allowed[w]) continue;
        if (index[w] == none) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<std::size_t> members;
        std::size_t w = none;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          out.comp[w] = out.members.size();
          members.push_back(w);
        } while (w != v);
        std::sort(members.begin(), members.end());
        out.members.push_back(std::move(members));
      }
      const std::size_t done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }
  return out;
}

struct SccShape {
  bool cyclic = false;
  bool simple = false;  // every member has one internal out-edge, of weight 1
};

SccShape shape_of(const WeightedAdj& adj, const Sccs& s, std::size_t c) {
  SccShape shape;
  const auto& members = s.members[c];
  shape.simple = true;
  for (auto v : members) {
    std::size_t internal = 0;
    for (const auto& [w, m] : adj[v]) {
      if (s.comp[w] != c) continue;
      ++internal;
      if (w == v || members.size() > 1) shape.cyclic = true;
      if (m != 1) shape.simple = false;
    }
    if (internal != 1) shape.simple = false;
  }
  if (!shape.cyclic) shape.simple = false;
  return shape;
}

WeightedAdj base_adjacency(const SyzygyOperator& op) {
  WeightedAdj adj(op.size());
  for (std::size_t x = 0; x < op.size(); ++x) {
    for (const auto& [y, m] : op.images[x]) {
      if (m > 0) adj[x].emplace_back(y, m);
    }
  }
  return adj;
}

// Vertices with arbitrarily long Omega-walks: those reaching a cyclic SCC.
std::vector<bool> eventually_alive(const WeightedAdj& adj) {
  const auto s = strongly_connected(adj, std::vector<bool>(adj.size(), true));
  std::vector<std::size_t> cyclic;
  for (std::size_t c = 0; c < s.members.size(); ++c) {
    if (shape_of(adj, s, c).cyclic) {
      cyclic.insert(cyclic.end(), s.members[c].begin(), s.members[c].end());
    }
  }
  return reach(reverse_of(adj), cyclic);
}

// Source/sink stripping on the Omega-graph.
std::vector<bool> stripped_core(const WeightedAdj& adj) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> in(n, 0), out(n, 0);
  const auto rev = reverse_of(adj);
  for (std::size_t v = 0; v < n; ++v) {
    out[v] = adj[v].size();
    in[v] = rev[v].size();
  }
  std::vector<bool> alive(n, true);
  std::deque<std::size_t> queue;
  for (std::size_t v = 0; v < n; ++v) {
    if (in[v] == 0 || out[v] == 0) queue.push_back(v);
  }
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    if (!alive[v]) continue;
    alive[v] = false;
    for (const auto& [w, m] : adj[v]) {
      if (alive[w] && --in[w] == 0) queue.push_back(w);
    }
    for (const auto& [u, m] : rev[v]) {
      if (alive[u] && --out[u] == 0) queue.push_back(u);
    }
  }
  return alive;
}

class ProductWalks {
 public:
  ProductWalks(const SyzygyOperator& op) : n_(op.size()), adj_(n_ * n_) {
    const auto base = base_adjacency(op);
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        for (const auto& [x2, m1] : base[x]) {
          for (const auto& [y2, m2] : base[y]) adj_[x * n_ + y].emplace_back(x2 * n_ + y2, mul_checked(m1, m2));
        }
      }
    }
  }

  std::size_t pair(std::size_t x, std::size_t y) const { return x * n_ + y; }
  const WeightedAdj& adj() const { return adj_; }

  // Walk counts of lengths 0..steps from `start` inside `region`; calls
  // visit(i, counts) at every level.
  template <class Visit>
  void walk(std::size_t start, const std::vector<bool>& region, std::size_t steps, Visit&& visit) const {
    std::vector<std::uint64_t> cur(adj_.size(), 0), next(adj_.size(), 0);
    if (region[start]) cur[start] = 1;
    for (std::size_t i = 0;; ++i) {
      visit(i, cur);
      if (i == steps) return;
      std::fill(next.begin(), next.end(), 0);
      for (std::size_t v = 0; v < adj_.size(); ++v) {
        if (cur[v] == 0) continue;
        for (const auto& [w, m] : adj_[v]) {
          if (region[w]) next[w] = add_checked(next[w], mul_checked(cur[v], m));
        }
      }
      cur.swap(next);
    }
  }

 private:
  std::size_t n_;
  WeightedAdj adj_;
};

std::vector<bool> both(const std::vector<bool>& x, const std::vector<bool>& y) {
  std::vector<bool> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] && y[i];
  return out;
}

}  // namespace

std::size_t SyzygyOperator::index_of(int id) const {
  const auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end()) throw InvalidInput("vertex " + std::to_string(id) + " is not a syzygy vertex");
  return static_cast<std::size_t>(it - ids.begin());
}

std::vector<std::uint64_t> SyzygyOperator::apply(const std::vector<std::uint64_t>& v) const {
  std::vector<std::uint64_t> out(size(), 0);
  for (std::size_t x = 0; x < size(); ++x) {
    if (v[x] == 0) continue;
    for (const auto& [y, m] : images[x]) out[y] = add_checked(out[y], mul_checked(v[x], m));
  }
  return out;
}

SyzygyOperator order_syzygy_operator(const BackstromOrder& order) {
  SyzygyOperator op;
  const auto jp = j_prime(order);
  for (const auto& j : jp) {
    op.ids.push_back(static_cast<int>(order.external_id(j)));
    op.weights.push_back(1);
  }
  for (const auto& j : jp) {
    auto& img = op.images.emplace_back();
    const auto image = syzygy(order, j);
    for (const auto& [y, m] : image.multiplicities()) {
      img.emplace_back(op.index_of(static_cast<int>(order.external_id(y))), m);
    }
  }
  return op;
}

SyzygyOperator quiver_syzygy_operator(const ValuedQuiver& q) {
  SyzygyOperator op;
  for (const auto& v : q.vertices) {
    op.ids.push_back(v.id);
    op.weights.push_back(v.weight);
  }
  op.images.resize(q.size());
  for (const auto& a : q.arrows) {
    op.images[a.src].emplace_back(a.dst, static_cast<std::uint64_t>(a.val.a));
  }
  for (auto& img : op.images) std::sort(img.begin(), img.end());
  return op;
}

StabilizedHom stabilized_hom(const SyzygyOperator& op, std::size_t a, std::size_t b) {
  const std::size_t n = op.size();
  if (a >= n || b >= n) throw InvalidInput("stabilized Hom endpoint out of range");
  const ProductWalks walks(op);
  const std::size_t start = walks.pair(a, b);
  const auto& adj = walks.adj();
  const auto rev = reverse_of(adj);
  const auto base = base_adjacency(op);
  const auto alive = eventually_alive(base);

  std::vector<std::size_t> targets, diagonal;
  for (std::size_t x = 0; x < n; ++x) {
    diagonal.push_back(walks.pair(x, x));
    if (alive[x]) targets.push_back(walks.pair(x, x));
  }
  const auto from_start = reach(adj, {start});
  const auto region = both(from_start, reach(rev, targets));
  const auto raw_region = both(from_start, reach(rev, diagonal));

  // Level dims sum_x c[(x,x)] d_x. With `partial`, an overflow ends the
  // sequence early instead of throwing.
  auto level_dims = [&](std::size_t steps, const std::vector<bool>& reg, bool only_alive,
                        bool partial = false) {
    std::vector<std::uint64_t> dims;
    try {
      walks.walk(start, reg, steps, [&](std::size_t, const std::vector<std::uint64_t>& c) {
        std::uint64_t d = 0;
        for (std::size_t x = 0; x < n; ++x) {
          if (only_alive && !alive[x]) continue;
          d = add_checked(d, mul_checked(c[walks.pair(x, x)], static_cast<std::uint64_t>(op.weights[x])));
        }
        dims.push_back(d);
      });
    } catch (const CapacityExceeded&) {
      if (!partial) throw;
    }
    return dims;
  };

  // Decide boundedness on the SCCs of the region.
  const auto sccs = strongly_connected(adj, region);
  std::vector<SccShape> shapes;
  bool unbounded = false;
  std::uint64_t period = 1;
  for (std::size_t c = 0; c < sccs.members.size(); ++c) {
    shapes.push_back(shape_of(adj, sccs, c));
    if (shapes.back().cyclic && !shapes.back().simple) unbounded = true;
    if (shapes.back().simple) period = lcm_checked(period, sccs.members[c].size());
  }
  if (!unbounded) {
    // Components arrive sinks first, so successors are already scored.
    std::vector<std::size_t> chain(sccs.members.size(), 0);
    for (std::size_t c = 0; c < sccs.members.size() && !unbounded; ++c) {
      std::size_t best = 0;
      for (auto v : sccs.members[c]) {
        for (const auto& [w, m] : adj[v]) {
          if (region[w] && sccs.comp[w] != c) best = std::max(best, chain[sccs.comp[w]]);
        }
      }
      chain[c] = best + (shapes[c].cyclic ? 1 : 0);
      if (chain[c] >= 2) unbounded = true;
    }
  }

  StabilizedHom result;
  if (unbounded) {
    result.history = level_dims(n + 1, raw_region, false, true);
    result.level = result.history.empty() ? 0 : result.history.size() - 1;
    const auto core = stripped_core(base);
    const auto seen = reach(base, {a, b});
    for (std::size_t x = 0; x < n && !result.witness; ++x) {
      if (!core[x] || !seen[x]) continue;
      std::uint64_t out = 0;
      for (const auto& [y, m] : base[x]) {
        if (core[y]) out += m;
      }
      if (out >= 2) result.witness = op.ids[x];
    }
    if (!result.witness) {
      throw InternalError("unbounded stabilized Hom without a branching core vertex");
    }
    return result;
  }

  const std::size_t region_size = static_cast<std::size_t>(std::count(region.begin(), region.end(), true));
  const std::size_t steps = region_size + static_cast<std::size_t>(period);
  const auto e = level_dims(steps, region, true);
  for (std::size_t i = 1; i < e.size(); ++i) {
    if (e[i] < e[i - 1]) throw InternalError("colimit image dimensions decreased");
  }
  for (std::size_t i = e.size() - 1 - period; i < e.size(); ++i) {
    if (e[i] != e.back()) throw InternalError("colimit image dimensions did not settle");
  }
  result.dim = e.back();
  result.level = static_cast<std::size_t>(std::find(e.begin(), e.end(), e.back()) - e.begin());
  result.history = level_dims(result.level, raw_region, false);
  return result;
}

std::uint64_t stable_hom_level0(const BackstromOrder& order, const Node& a, const Node& b) {
  for (const auto& j : {a, b}) {
    if (is_lambda_projective(order, j)) {
      throw InvalidInput("node " + std::to_string(order.external_id(j)) + " is Lambda-projective");
    }
  }
  return a == b ? 1 : 0;
}

StabilizedHom dsg_hom_dim(const BackstromOrder& order, const Node& a, const Node& b) {
  stable_hom_level0(order, a, b);
  const auto op = order_syzygy_operator(order);
  return stabilized_hom(op, op.index_of(static_cast<int>(order.external_id(a))),
                        op.index_of(static_cast<int>(order.external_id(b))));
}

namespace {

struct CoreCycles {
  std::vector<std::size_t> core;  // operator indices, ascending
  std::vector<std::size_t> succ;  // per operator index (only meaningful on the core)
  std::vector<std::size_t> pred;
  std::uint64_t period = 1;
};

CoreCycles core_cycles(const ValuedQuiver& q, const SyzygyOperator& op, const StripResult& strip) {
  CoreCycles cc;
  std::vector<bool> in_core(op.size(), false);
  for (auto v : strip.core) {
    const auto i = op.index_of(q.vertices[v].id);
    in_core[i] = true;
    cc.core.push_back(i);
  }
  std::sort(cc.core.begin(), cc.core.end());
  cc.succ.assign(op.size(), op.size());
  cc.pred.assign(op.size(), op.size());
  for (auto x : cc.core) {
    for (const auto& [y, m] : op.images[x]) {
      if (!in_core[y]) continue;
      if (m != 1 || cc.succ[x] != op.size()) throw InternalError("stripped core is not a union of cycles");
      cc.succ[x] = y;
      cc.pred[y] = x;
    }
  }
  std::vector<bool> seen(op.size(), false);
  for (auto x : cc.core) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    for (auto y = x; !seen[y]; y = cc.succ[y]) {
      if (y == op.size()) throw InternalError("stripped core is not a union of cycles");
      seen[y] = true;
      ++len;
    }
    cc.period = lcm_checked(cc.period, len);
  }
  return cc;
}

std::size_t settle_level(std::size_t n, std::uint64_t period) {
  const std::uint64_t need = n + period;
  return static_cast<std::size_t>((need + period - 1) / period * period);
}

}  // namespace

VStructure v_structure(const ValuedQuiver& q, const SyzygyOperator& op) {
  const auto strip = sg_hom_finite(q);
  if (!strip.value) return NotSemisimple{*strip.witness};
  const auto cc = core_cycles(q, op, strip);

  WedderburnData data;
  data.level = settle_level(op.size(), cc.period);
  std::vector<std::uint64_t> mass(op.size(), 1);
  for (std::size_t i = 0; i < data.level; ++i) mass = op.apply(mass);

  std::vector<std::size_t> block_of(op.size(), op.size());
  for (auto c : cc.core) {
    block_of[c] = data.blocks.size();
    data.blocks.push_back({op.ids[c], mass[c], op.weights[c]});
  }
  for (auto c : cc.core) data.suspension.push_back(block_of[cc.pred[c]]);

  std::uint64_t wedderburn = 0, table = 0;
  for (const auto& blk : data.blocks) {
    wedderburn = add_checked(wedderburn, mul_checked(mul_checked(blk.multiplicity, blk.multiplicity),
                                                     static_cast<std::uint64_t>(blk.weight)));
  }
  for (std::size_t a = 0; a < op.size(); ++a) {
    for (std::size_t b = 0; b < op.size(); ++b) {
      const auto h = stabilized_hom(op, a, b);
      if (h.infinite()) throw InternalError("infinite Hom space on an sg-Hom-finite quiver");
      table = add_checked(table, *h.dim);
    }
  }
  if (wedderburn != table) {
    throw InternalError("Wedderburn dimension " + std::to_string(wedderburn) +
                        " differs from the Hom table total " + std::to_string(table));
  }
  return data;
}

VStructure v_lambda(const BackstromOrder& order) {
  return v_structure(build_a_lambda(order).quiver, order_syzygy_operator(order));
}

VStructure v_lambda(const ValuedQuiver& q) {
  return v_structure(q, quiver_syzygy_operator(q));
}

SuspensionOrbit suspension_orbit(const BackstromOrder& order, const Node& a) {
  if (is_lambda_projective(order, a)) {
    throw NotApplicable("node " + std::to_string(order.external_id(a)) + " is Lambda-projective");
  }
  const auto q = build_a_lambda(order).quiver;
  const auto strip = sg_hom_finite(q);
  if (!strip.value) throw NotApplicable("order is not sg-Hom-finite: " + strip.witness->detail);
  const auto op = order_syzygy_operator(order);
  const auto cc = core_cycles(q, op, strip);

  auto core_part = [&](const std::vector<std::uint64_t>& v) {
    StableObject x;
    for (auto c : cc.core) x.add(order.node_from_external(static_cast<std::size_t>(op.ids[c])), v[c]);
    return x;
  };

  SuspensionOrbit orbit;
  orbit.start_level = settle_level(op.size(), cc.period);
  std::vector<std::uint64_t> v(op.size(), 0);
  v[op.index_of(static_cast<int>(order.external_id(a)))] = 1;
  for (std::size_t i = 0; i < orbit.start_level; ++i) v = op.apply(v);
  orbit.period.push_back(core_part(v));
  for (std::uint64_t k = 1; k <= cc.period; ++k) {
    v = op.apply(v);
    auto next = core_part(v);
    if (next == orbit.period.front()) return orbit;
    orbit.period.push_back(std::move(next));
  }
  throw InternalError("suspension orbit did not close within the core period");
}

}  // namespace backstrom
