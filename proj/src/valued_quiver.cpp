#include "backstrom/valued_quiver.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "backstrom/errors.hpp"

namespace backstrom {

std::size_t ValuedQuiver::add_vertex(int id, int weight) {
  vertices.push_back({id, weight});
  return vertices.size() - 1;
}

void ValuedQuiver::add_arrow(std::size_t src, std::size_t dst, Valuation val) {
  arrows.push_back({src, dst, val});
}

std::size_t ValuedQuiver::index_of(int id) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].id == id) return i;
  }
  throw InvalidInput("unknown quiver vertex " + std::to_string(id));
}

bool ValuedQuiver::has_arrow(std::size_t src, std::size_t dst) const {
  return std::any_of(arrows.begin(), arrows.end(),
                     [&](const QuiverArrow& a) { return a.src == src && a.dst == dst; });
}

std::vector<std::string> validate(const ValuedQuiver& q) {
  std::vector<std::string> out;
  std::set<int> ids;
  for (const auto& v : q.vertices) {
    if (!ids.insert(v.id).second) out.push_back("duplicate vertex id " + std::to_string(v.id));
    if (v.weight < 1) out.push_back("vertex " + std::to_string(v.id) + " has weight < 1");
  }
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& a : q.arrows) {
    if (a.src >= q.size() || a.dst >= q.size()) {
      out.push_back("arrow endpoint out of range");
      continue;
    }
    const std::string name =
        std::to_string(q.vertices[a.src].id) + "->" + std::to_string(q.vertices[a.dst].id);
    if (!pairs.insert({a.src, a.dst}).second) out.push_back("parallel arrows " + name);
    if (a.val.a < 1 || a.val.b < 1) {
      out.push_back("arrow " + name + " has a non-positive valuation");
      continue;
    }
    const long lhs = static_cast<long>(a.val.a) * q.vertices[a.dst].weight;
    const long rhs = static_cast<long>(a.val.b) * q.vertices[a.src].weight;
    if (lhs != rhs) {
      out.push_back("arrow " + name + " violates a*d_dst = b*d_src");
    }
  }
  return out;
}

ValuedQuiver reversed(const ValuedQuiver& q) {
  ValuedQuiver r;
  r.vertices = q.vertices;
  for (const auto& a : q.arrows) r.arrows.push_back({a.dst, a.src, {a.val.b, a.val.a}});
  return r;
}

ValuedQuiver induced(const ValuedQuiver& q, const std::vector<std::size_t>& keep) {
  std::vector<std::size_t> new_index(q.size(), q.size());
  ValuedQuiver out;
  for (std::size_t v : keep) new_index[v] = out.add_vertex(q.vertices[v].id, q.vertices[v].weight);
  for (const auto& a : q.arrows) {
    if (new_index[a.src] < q.size() && new_index[a.dst] < q.size()) {
      out.add_arrow(new_index[a.src], new_index[a.dst], a.val);
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> weak_components(const ValuedQuiver& q) {
  std::vector<std::size_t> parent(q.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : q.arrows) {
    const auto ra = find(a.src);
    const auto rb = find(a.dst);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<std::vector<std::size_t>> comps;
  std::vector<std::size_t> slot(q.size(), q.size());
  for (std::size_t v = 0; v < q.size(); ++v) {
    const auto root = find(v);
    if (slot[root] == q.size()) {
      slot[root] = comps.size();
      comps.emplace_back();
    }
    comps[slot[root]].push_back(v);
  }
  return comps;
}

std::vector<std::vector<std::size_t>> out_adjacency(const ValuedQuiver& q) {
  std::vector<std::vector<std::size_t>> adj(q.size());
  for (const auto& a : q.arrows) adj[a.src].push_back(a.dst);
  return adj;
}

std::vector<QuiverArrow> sorted_arrows(const ValuedQuiver& q) {
  auto arrows = q.arrows;
  std::sort(arrows.begin(), arrows.end(), [&](const QuiverArrow& x, const QuiverArrow& y) {
    const auto kx = std::pair{q.vertices[x.src].id, q.vertices[x.dst].id};
    const auto ky = std::pair{q.vertices[y.src].id, q.vertices[y.dst].id};
    return kx < ky;
  });
  return arrows;
}

}  // namespace backstrom
