#include "backstrom/species.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

namespace backstrom {

namespace {

using boost::multiprecision::cpp_rational;

struct Incidence {
  std::size_t edge;
  std::size_t other;
};

std::vector<std::vector<Incidence>> incidences(const ValuedGraph& g) {
  std::vector<std::vector<Incidence>> inc(g.vertices.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& edge = g.edges[e];
    inc[edge.u].push_back({e, edge.v});
    if (edge.u != edge.v) inc[edge.v].push_back({e, edge.u});
  }
  return inc;
}

std::vector<std::vector<std::size_t>> graph_components(const ValuedGraph& g) {
  const auto inc = incidences(g);
  std::vector<bool> seen(g.vertices.size(), false);
  std::vector<std::vector<std::size_t>> comps;
  for (std::size_t s = 0; s < g.vertices.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    std::deque<std::size_t> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (const auto& i : inc[v]) {
        if (!seen[i.other]) {
          seen[i.other] = true;
          queue.push_back(i.other);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

// A cycle through the component, found by DFS over edges.
std::vector<std::size_t> find_cycle(const std::vector<std::vector<Incidence>>& inc,
                                    std::size_t start) {
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> parent;  // v -> (parent, edge)
  std::vector<std::size_t> stack{start};
  parent[start] = {start, static_cast<std::size_t>(-1)};
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (const auto& i : inc[v]) {
      if (i.edge == parent[v].second) continue;
      if (parent.count(i.other)) {
        // Close the cycle: walk both endpoints up to their common ancestor.
        std::vector<std::size_t> left{v};
        std::vector<std::size_t> right{i.other};
        std::set<std::size_t> on_left{v};
        for (auto x = v; parent[x].first != x;) {
          x = parent[x].first;
          left.push_back(x);
          on_left.insert(x);
        }
        auto y = i.other;
        while (!on_left.count(y)) {
          y = parent[y].first;
          right.push_back(y);
        }
        std::vector<std::size_t> cycle(left.begin(), std::find(left.begin(), left.end(), y) + 1);
        right.pop_back();
        cycle.insert(cycle.end(), right.rbegin(), right.rend());
        return cycle;
      }
      parent[i.other] = {v, i.edge};
      stack.push_back(i.other);
    }
  }
  return {};
}

ComponentClass classify_component(const ValuedGraph& g,
                                  const std::vector<std::vector<Incidence>>& inc,
                                  std::vector<std::size_t> comp) {
  using Reason = NotDynkin::Reason;
  auto fail = [&](Reason r, std::vector<std::size_t> w, std::string detail) {
    std::sort(w.begin(), w.end());
    return ComponentClass{comp, NotDynkin{r, std::move(w), std::move(detail)}};
  };

  std::size_t edge_count = 0;
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t v : comp) {
    for (const auto& i : inc[v]) {
      const auto& e = g.edges[i.edge];
      if (e.u == e.v) return fail(Reason::kLoop, {v}, "loop at " + g.vertices[v].label);
      if (v < i.other) {
        ++edge_count;
        if (!pairs.insert({v, i.other}).second) {
          return fail(Reason::kCycle, {v, i.other},
                      "multiple edges between " + g.vertices[v].label + " and " +
                          g.vertices[i.other].label);
        }
      }
    }
  }
  if (edge_count >= comp.size()) {
    return fail(Reason::kCycle, find_cycle(inc, comp.front()), "cycle in underlying graph");
  }

  // The component is a tree from here on.
  std::vector<std::size_t> doubles;
  for (std::size_t v : comp) {
    for (const auto& i : inc[v]) {
      if (v > i.other) continue;
      const auto& e = g.edges[i.edge];
      const long product = static_cast<long>(e.d_uv) * e.d_vu;
      if (e.d_uv < 1 || e.d_vu < 1 || product >= 4) {
        return fail(Reason::kBadValuation, {v, i.other},
                    "edge valuation (" + std::to_string(e.d_uv) + "," +
                        std::to_string(e.d_vu) + ") is not of finite type");
      }
      if (product == 3) {
        if (comp.size() != 2) {
          return fail(Reason::kBadValuation, {v, i.other},
                      "triple edge in a component with more than two vertices");
        }
        return ComponentClass{comp, DynkinType{DynkinFamily::G2, 2}};
      }
      if (product == 2) doubles.push_back(i.edge);
    }
  }

  std::vector<std::size_t> branch;
  for (std::size_t v : comp) {
    if (inc[v].size() >= 4) {
      return fail(Reason::kHighDegree, {v},
                  "vertex " + g.vertices[v].label + " has degree " +
                      std::to_string(inc[v].size()));
    }
    if (inc[v].size() == 3) branch.push_back(v);
  }

  if (doubles.size() > 1) {
    std::vector<std::size_t> w;
    for (auto e : doubles) {
      w.push_back(g.edges[e].u);
      w.push_back(g.edges[e].v);
    }
    return fail(Reason::kBadValuation, w, "more than one double edge");
  }

  const std::size_t n = comp.size();
  if (!doubles.empty()) {
    if (!branch.empty()) {
      return fail(Reason::kBadBranch, branch, "branch vertex together with a double edge");
    }
    // Walk the path from one end.
    std::size_t start = comp.front();
    for (std::size_t v : comp) {
      if (inc[v].size() <= 1) {
        start = v;
        break;
      }
    }
    std::vector<std::size_t> path{start};
    std::vector<std::size_t> edges_on_path;
    for (std::size_t prev = g.vertices.size(), cur = start;;) {
      const auto next = std::find_if(inc[cur].begin(), inc[cur].end(),
                                     [&](const Incidence& i) { return i.other != prev; });
      if (next == inc[cur].end()) break;
      edges_on_path.push_back(next->edge);
      path.push_back(next->other);
      prev = cur;
      cur = next->other;
    }
    const auto pos = static_cast<std::size_t>(
        std::find(edges_on_path.begin(), edges_on_path.end(), doubles.front()) -
        edges_on_path.begin());
    if (n == 2) return ComponentClass{comp, DynkinType{DynkinFamily::B, 2}};
    if (pos == 0 || pos + 1 == edges_on_path.size()) {
      // Leaf side of the double edge: short root => B, long root => C.
      const std::size_t leaf = pos == 0 ? path.front() : path.back();
      const auto& e = g.edges[doubles.front()];
      const int d_leaf_to_other = e.u == leaf ? e.d_uv : e.d_vu;  // -c_{leaf, other}
      const auto family = d_leaf_to_other == 2 ? DynkinFamily::B : DynkinFamily::C;
      return ComponentClass{comp, DynkinType{family, n}};
    }
    if (n == 4 && pos == 1) return ComponentClass{comp, DynkinType{DynkinFamily::F4, 4}};
    return fail(Reason::kBadValuation, {g.edges[doubles.front()].u, g.edges[doubles.front()].v},
                "double edge in the interior of a path of length " + std::to_string(n));
  }

  if (branch.empty()) return ComponentClass{comp, DynkinType{DynkinFamily::A, n}};
  if (branch.size() > 1) return fail(Reason::kBadBranch, branch, "more than one branch vertex");

  const std::size_t center = branch.front();
  std::vector<std::size_t> arms;
  for (const auto& first : inc[center]) {
    std::size_t len = 1;
    for (std::size_t prev = center, cur = first.other; inc[cur].size() == 2; ++len) {
      const auto next = inc[cur][0].other == prev ? inc[cur][1].other : inc[cur][0].other;
      prev = cur;
      cur = next;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  const auto p = arms[0], q = arms[1], r = arms[2];
  if (p == 1 && q == 1) return ComponentClass{comp, DynkinType{DynkinFamily::D, n}};
  if (p == 1 && q == 2 && r == 2) return ComponentClass{comp, DynkinType{DynkinFamily::E6, 6}};
  if (p == 1 && q == 2 && r == 3) return ComponentClass{comp, DynkinType{DynkinFamily::E7, 7}};
  if (p == 1 && q == 2 && r == 4) return ComponentClass{comp, DynkinType{DynkinFamily::E8, 8}};
  return fail(Reason::kBadBranch, {center},
              "branch arms (" + std::to_string(p) + "," + std::to_string(q) + "," +
                  std::to_string(r) + ") are not of finite type");
}

std::size_t max_positive_roots(std::size_t rank) {
  // B_n / C_n have n^2 positive roots; the exceptional types top out at E8.
  return std::max<std::size_t>(rank * rank, 120);
}

}  // namespace

BipartiteHQuiver build_h(const BackstromOrder& order) {
  BipartiteHQuiver h;
  for (std::size_t i = 0; i < order.node_count(); ++i) {
    h.gamma_vertices.push_back({order.node_at(i), i + 1});
  }
  for (std::size_t p = 0; p < order.part_count(); ++p) {
    h.lambda_vertices.push_back(p);
    for (const auto& node : order.part_nodes(p)) h.arrows.push_back({p, order.index_of(node)});
  }
  return h;
}

ValuedGraph underlying_valued_graph(const BipartiteHQuiver& h) {
  ValuedGraph g;
  for (std::size_t p : h.lambda_vertices) g.vertices.push_back({"P" + std::to_string(p + 1), 1});
  for (const auto& v : h.gamma_vertices) g.vertices.push_back({std::to_string(v.id), 1});
  const std::size_t offset = h.lambda_vertices.size();
  for (const auto& a : h.arrows) g.edges.push_back({a.part, offset + a.node, 1, 1});
  return g;
}

ValuedGraph underlying_valued_graph(const ValuedQuiver& q) {
  ValuedGraph g;
  for (const auto& v : q.vertices) g.vertices.push_back({std::to_string(v.id), v.weight});
  for (const auto& a : q.arrows) g.edges.push_back({a.src, a.dst, a.val.b, a.val.a});
  return g;
}

std::string to_string(DynkinFamily family) {
  switch (family) {
    case DynkinFamily::A: return "A";
    case DynkinFamily::B: return "B";
    case DynkinFamily::C: return "C";
    case DynkinFamily::D: return "D";
    case DynkinFamily::E6: return "E6";
    case DynkinFamily::E7: return "E7";
    case DynkinFamily::E8: return "E8";
    case DynkinFamily::F4: return "F4";
    case DynkinFamily::G2: return "G2";
  }
  return "?";
}

std::string to_string(const DynkinType& type) {
  switch (type.family) {
    case DynkinFamily::A:
    case DynkinFamily::B:
    case DynkinFamily::C:
    case DynkinFamily::D:
      return to_string(type.family) + std::to_string(type.rank);
    default:
      return to_string(type.family);
  }
}

std::string to_string(NotDynkin::Reason reason) {
  switch (reason) {
    case NotDynkin::Reason::kLoop: return "loop";
    case NotDynkin::Reason::kCycle: return "cycle";
    case NotDynkin::Reason::kHighDegree: return "high_degree";
    case NotDynkin::Reason::kBadValuation: return "bad_valuation";
    case NotDynkin::Reason::kBadBranch: return "bad_branch";
  }
  return "unknown";
}

std::vector<ComponentClass> dynkin_components(const ValuedGraph& g) {
  const auto inc = incidences(g);
  std::vector<ComponentClass> out;
  for (auto& comp : graph_components(g)) out.push_back(classify_component(g, inc, std::move(comp)));
  return out;
}

CartanData cartan_data(const ValuedGraph& g, const std::vector<std::size_t>& vertices) {
  const std::size_t n = vertices.size();
  std::map<std::size_t, std::size_t> local;
  for (std::size_t i = 0; i < n; ++i) local[vertices[i]] = i;

  CartanData c;
  c.matrix.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) c.matrix[i][i] = 2;
  for (const auto& e : g.edges) {
    if (!local.count(e.u) || !local.count(e.v)) continue;
    if (e.u == e.v) throw InvalidInput("a loop has no generalized Cartan matrix");
    c.matrix[local[e.u]][local[e.v]] -= e.d_uv;
    c.matrix[local[e.v]][local[e.u]] -= e.d_vu;
  }

  // d_i c_ij = d_j c_ji, solved over Q component by component, then cleared
  // of denominators.
  std::vector<cpp_rational> d(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (d[s] != 0) continue;
    d[s] = 1;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const auto i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || c.matrix[i][j] == 0) continue;
        if (c.matrix[j][i] == 0) throw InvalidInput("Cartan matrix is not symmetrizable");
        const cpp_rational dj = d[i] * c.matrix[i][j] / c.matrix[j][i];
        if (d[j] == 0) {
          d[j] = dj;
          queue.push_back(j);
        } else if (d[j] != dj) {
          throw InvalidInput("Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  boost::multiprecision::cpp_int denom_lcm = 1;
  for (const auto& x : d) {
    denom_lcm = boost::multiprecision::lcm(denom_lcm, boost::multiprecision::denominator(x));
  }
  boost::multiprecision::cpp_int num_gcd = 0;
  for (const auto& x : d) {
    const boost::multiprecision::cpp_int scaled =
        boost::multiprecision::numerator(x) * (denom_lcm / boost::multiprecision::denominator(x));
    num_gcd = boost::multiprecision::gcd(num_gcd, scaled);
  }
  for (const auto& x : d) {
    const boost::multiprecision::cpp_int scaled =
        boost::multiprecision::numerator(x) * (denom_lcm / boost::multiprecision::denominator(x));
    c.symmetrizer.push_back(static_cast<long>(scaled / (num_gcd == 0 ? 1 : num_gcd)));
  }
  return c;
}

CartanData cartan_data(const ValuedGraph& g) {
  std::vector<std::size_t> all(g.vertices.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return cartan_data(g, all);
}

CartanData cartan_of(const DynkinType& type) {
  ValuedGraph g;
  const std::size_t n = type.rank;
  for (std::size_t i = 0; i < n; ++i) g.vertices.push_back({std::to_string(i + 1), 1});
  auto chain = [&](std::size_t len) {
    for (std::size_t i = 0; i + 1 < len; ++i) g.edges.push_back({i, i + 1, 1, 1});
  };
  switch (type.family) {
    case DynkinFamily::A:
      chain(n);
      break;
    case DynkinFamily::B:  // last vertex short
      chain(n - 1);
      g.edges.push_back({n - 2, n - 1, 1, 2});
      break;
    case DynkinFamily::C:  // last vertex long
      chain(n - 1);
      g.edges.push_back({n - 2, n - 1, 2, 1});
      break;
    case DynkinFamily::D:
      chain(n - 1);
      g.edges.push_back({n - 3, n - 1, 1, 1});
      break;
    case DynkinFamily::E6:
    case DynkinFamily::E7:
    case DynkinFamily::E8:
      // chain 0..n-2 with vertex n-1 attached to vertex 2
      chain(n - 1);
      g.edges.push_back({2, n - 1, 1, 1});
      break;
    case DynkinFamily::F4:
      g.edges.push_back({0, 1, 1, 1});
      g.edges.push_back({1, 2, 1, 2});
      g.edges.push_back({2, 3, 1, 1});
      break;
    case DynkinFamily::G2:
      g.edges.push_back({0, 1, 1, 3});
      break;
  }
  return cartan_data(g);
}

std::vector<Root> positive_roots(const CartanData& c) {
  const std::size_t n = c.rank();
  const std::size_t bound = max_positive_roots(n);
  std::set<Root> seen;
  std::deque<Root> queue;
  for (std::size_t i = 0; i < n; ++i) {
    Root simple(n, 0);
    simple[i] = 1;
    seen.insert(simple);
    queue.push_back(simple);
  }
  while (!queue.empty()) {
    const Root beta = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      long pairing = 0;
      for (std::size_t j = 0; j < n; ++j) pairing += c.matrix[i][j] * beta[j];
      if (pairing >= 0) continue;  // s_i(beta) is lower or equal in height
      Root image = beta;
      image[i] -= pairing;
      if (seen.insert(image).second) {
        if (seen.size() > bound) {
          throw NotFiniteType("reflection closure exceeds " + std::to_string(bound) +
                              " roots; Cartan matrix is not of finite type");
        }
        queue.push_back(std::move(image));
      }
    }
  }
  std::vector<Root> roots(seen.begin(), seen.end());
  std::sort(roots.begin(), roots.end(), [](const Root& x, const Root& y) {
    const long hx = std::accumulate(x.begin(), x.end(), 0L);
    const long hy = std::accumulate(y.begin(), y.end(), 0L);
    return hx != hy ? hx < hy : x < y;
  });
  return roots;
}

FiniteTypeReport is_finite_cm_type(const BackstromOrder& order) {
  FiniteTypeReport report;
  report.graph = underlying_valued_graph(build_h(order));
  report.components = dynkin_components(report.graph);
  report.finite = std::all_of(report.components.begin(), report.components.end(),
                              [](const ComponentClass& c) { return c.is_dynkin(); });
  return report;
}

std::optional<std::size_t> count_indec_cm(const BackstromOrder& order) {
  const auto report = is_finite_cm_type(order);
  if (!report.finite) return std::nullopt;
  std::size_t total = 0;
  for (const auto& comp : report.components) {
    const auto roots = positive_roots(cartan_data(report.graph, comp.vertices));
    total += roots.size() - comp.vertices.size();
  }
  return total;
}

}  // namespace backstrom
