#include "backstrom/classify.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "backstrom/errors.hpp"
#include "backstrom/species.hpp"
#include "backstrom/syzygy.hpp"

namespace backstrom {

namespace {

std::vector<int> ids_of(const ValuedQuiver& q, const std::vector<std::size_t>& idx) {
  std::vector<int> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(q.vertices[i].id);
  return out;
}

std::string id_list(const std::vector<int>& ids) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ids.size(); ++i) os << (i ? "," : "") << ids[i];
  return os.str();
}

// Some directed cycle inside `allowed`, as vertex indices in cycle order.
std::vector<std::size_t> find_cycle(const ValuedQuiver& q, const std::vector<bool>& allowed) {
  const auto adj = out_adjacency(q);
  enum Color : char { kWhite, kGrey, kBlack };
  std::vector<Color> color(q.size(), kWhite);
  std::vector<std::size_t> parent(q.size(), q.size());
  for (std::size_t root = 0; root < q.size(); ++root) {
    if (!allowed[root] || color[root] != kWhite) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    color[root] = kGrey;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next == adj[v].size()) {
        color[v] = kBlack;
        stack.pop_back();
        continue;
      }
      const std::size_t w = adj[v][next++];
      if (!allowed[w]) continue;
      if (color[w] == kGrey) {
        std::vector<std::size_t> cycle{w};
        for (std::size_t x = v; x != w; x = parent[x]) cycle.push_back(x);
        std::reverse(cycle.begin() + 1, cycle.end());
        return cycle;
      }
      if (color[w] == kWhite) {
        color[w] = kGrey;
        parent[w] = v;
        stack.emplace_back(w, 0);
      }
    }
  }
  return {};
}

enum class Shape { kAcyclic, kTrivialCycle, kValuedCycle, kOther };

struct ComponentInfo {
  std::vector<std::size_t> vertices;
  Shape shape = Shape::kAcyclic;
  bool simple = false;  // single vertex, no loop
  std::string detail;
};

std::vector<ComponentInfo> component_shapes(const ValuedQuiver& q) {
  std::vector<std::size_t> in(q.size(), 0), out(q.size(), 0);
  for (const auto& a : q.arrows) {
    ++out[a.src];
    ++in[a.dst];
  }
  std::vector<ComponentInfo> result;
  for (auto& comp : weak_components(q)) {
    ComponentInfo info;
    info.vertices = comp;
    std::vector<bool> allowed(q.size(), false);
    for (auto v : comp) allowed[v] = true;
    const auto cycle = find_cycle(q, allowed);
    if (cycle.empty()) {
      info.shape = Shape::kAcyclic;
      info.simple = comp.size() == 1;
    } else {
      const bool one_in_one_out = std::all_of(comp.begin(), comp.end(), [&](std::size_t v) {
        return in[v] == 1 && out[v] == 1;
      });
      if (!one_in_one_out) {
        info.shape = Shape::kOther;
        const auto bad = *std::find_if(comp.begin(), comp.end(), [&](std::size_t v) {
          return in[v] != 1 || out[v] != 1;
        });
        info.detail = "contains the cycle " + id_list(ids_of(q, cycle)) + " and vertex " +
                      std::to_string(q.vertices[bad].id) + " has in-degree " +
                      std::to_string(in[bad]) + ", out-degree " + std::to_string(out[bad]);
      } else {
        info.shape = Shape::kTrivialCycle;
        for (const auto& a : q.arrows) {
          if (allowed[a.src] && !a.val.trivial()) {
            info.shape = Shape::kValuedCycle;
            info.detail = "arrow " + std::to_string(q.vertices[a.src].id) + "->" +
                          std::to_string(q.vertices[a.dst].id) + " has valuation (" +
                          std::to_string(a.val.a) + "," + std::to_string(a.val.b) + ")";
            break;
          }
        }
      }
    }
    result.push_back(std::move(info));
  }
  return result;
}

Witness component_witness(const ValuedQuiver& q, const ComponentInfo& c) {
  if (c.shape == Shape::kValuedCycle) {
    return {Witness::Kind::kValuedCycle, ids_of(q, c.vertices), c.detail};
  }
  return {Witness::Kind::kBadComponent, ids_of(q, c.vertices), c.detail};
}

}  // namespace

std::string to_string(Witness::Kind kind) {
  switch (kind) {
    case Witness::Kind::kCycle: return "cycle";
    case Witness::Kind::kBadComponent: return "bad_component";
    case Witness::Kind::kSimpleComponent: return "simple_component";
    case Witness::Kind::kValuedCycle: return "valued_cycle";
    case Witness::Kind::kStrippedCore: return "stripped_core";
    case Witness::Kind::kNotDynkin: return "not_dynkin";
  }
  return "unknown";
}

Verdict finite_gldim(const ValuedQuiver& q) {
  const auto cycle = find_cycle(q, std::vector<bool>(q.size(), true));
  if (cycle.empty()) return {};
  const auto ids = ids_of(q, cycle);
  return {false, Witness{Witness::Kind::kCycle, ids, "directed cycle " + id_list(ids)}};
}

Verdict iwanaga_gorenstein(const ValuedQuiver& q) {
  for (const auto& c : component_shapes(q)) {
    if (c.shape == Shape::kOther || c.shape == Shape::kValuedCycle) {
      return {false, component_witness(q, c)};
    }
  }
  return {};
}

Verdict gorenstein(const ValuedQuiver& q) {
  for (const auto& c : component_shapes(q)) {
    if (c.shape == Shape::kTrivialCycle) continue;
    if (c.simple) {
      return {false, Witness{Witness::Kind::kSimpleComponent, ids_of(q, c.vertices),
                             "isolated vertex without a loop"}};
    }
    if (c.shape == Shape::kAcyclic) {
      return {false, Witness{Witness::Kind::kBadComponent, ids_of(q, c.vertices),
                             "acyclic component"}};
    }
    return {false, component_witness(q, c)};
  }
  return {};
}

Verdict self_injective_pattern(const ValuedQuiver& q) {
  for (const auto& c : component_shapes(q)) {
    if (c.shape == Shape::kTrivialCycle || c.simple) continue;
    if (c.shape == Shape::kAcyclic) {
      return {false, Witness{Witness::Kind::kBadComponent, ids_of(q, c.vertices),
                             "acyclic component with an arrow"}};
    }
    return {false, component_witness(q, c)};
  }
  return {};
}

StripResult sg_hom_finite(const ValuedQuiver& q) {
  const std::size_t n = q.size();
  std::vector<std::size_t> in(n, 0), out(n, 0);
  std::vector<std::vector<std::size_t>> succ(n), pred(n);
  for (const auto& a : q.arrows) {
    ++out[a.src];
    ++in[a.dst];
    succ[a.src].push_back(a.dst);
    pred[a.dst].push_back(a.src);
  }
  std::vector<bool> alive(n, true);
  std::deque<std::size_t> queue;
  for (std::size_t v = 0; v < n; ++v) {
    if (in[v] == 0 || out[v] == 0) queue.push_back(v);
  }
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    if (!alive[v]) continue;
    alive[v] = false;
    for (auto w : succ[v]) {
      if (alive[w] && --in[w] == 0) queue.push_back(w);
    }
    for (auto u : pred[v]) {
      if (alive[u] && --out[u] == 0) queue.push_back(u);
    }
  }

  StripResult result;
  for (std::size_t v = 0; v < n; ++v) {
    if (alive[v]) result.core.push_back(v);
  }
  for (auto v : result.core) {
    if (out[v] != 1 || in[v] != 1) {
      result.value = false;
      result.witness = Witness{Witness::Kind::kStrippedCore, {q.vertices[v].id},
                               "core vertex " + std::to_string(q.vertices[v].id) +
                                   " has in-degree " + std::to_string(in[v]) +
                                   ", out-degree " + std::to_string(out[v]) + " in the core"};
      return result;
    }
  }
  for (const auto& a : q.arrows) {
    if (alive[a.src] && alive[a.dst] && !a.val.trivial()) {
      result.value = false;
      result.witness = Witness{
          Witness::Kind::kStrippedCore,
          {q.vertices[a.src].id, q.vertices[a.dst].id},
          "core arrow " + std::to_string(q.vertices[a.src].id) + "->" +
              std::to_string(q.vertices[a.dst].id) + " has valuation (" +
              std::to_string(a.val.a) + "," + std::to_string(a.val.b) + ")"};
      return result;
    }
  }
  return result;
}

std::vector<std::size_t> gproj_nonprojective_vertices(const ValuedQuiver& q) {
  std::vector<std::size_t> out;
  for (const auto& c : component_shapes(q)) {
    if (c.shape == Shape::kTrivialCycle) out.insert(out.end(), c.vertices.begin(), c.vertices.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

void check_hierarchy(const ClassificationReport& r) {
  std::vector<std::string> broken;
  if (r.hereditary.value_or(false) && !r.finite_gldim.value) broken.push_back("hereditary => finite gl.dim");
  if (r.finite_gldim.value && !r.iwanaga_gorenstein.value) broken.push_back("finite gl.dim => IG");
  if (r.gorenstein.value && !r.iwanaga_gorenstein.value) broken.push_back("Gorenstein => IG");
  if (r.gorenstein.value && !r.self_injective.value) broken.push_back("Gorenstein => self-injective");
  if (r.iwanaga_gorenstein.value && !r.sg_hom_finite.value) broken.push_back("IG => sg-Hom-finite");
  if (!broken.empty()) {
    std::string msg = "classification hierarchy violated:";
    for (const auto& b : broken) msg += " [" + b + "]";
    throw InternalError(msg);
  }
}

ClassificationReport classify_quiver(const ValuedQuiver& q) {
  const auto problems = validate(q);
  if (!problems.empty()) {
    std::string msg = "invalid valued quiver:";
    for (const auto& p : problems) msg += " " + p + ";";
    throw InvalidInput(msg);
  }
  ClassificationReport r;
  r.a_quiver = q;
  r.finite_gldim = finite_gldim(q);
  r.iwanaga_gorenstein = iwanaga_gorenstein(q);
  r.gorenstein = gorenstein(q);
  r.self_injective = self_injective_pattern(q);
  r.sg_hom_finite = sg_hom_finite(q);
  for (const auto& v : q.vertices) r.j_prime.push_back(v.id);
  r.core = ids_of(q, r.sg_hom_finite.core);
  r.gproj_vertices = ids_of(q, gproj_nonprojective_vertices(q));
  check_hierarchy(r);
  return r;
}

ClassificationReport classify(const BackstromOrder& order) {
  ClassificationReport r = classify_quiver(build_a_lambda(order).quiver);
  r.hereditary = lambda_is_hereditary(order);

  const auto finite = is_finite_cm_type(order);
  Verdict cm;
  for (const auto& c : finite.components) {
    if (c.is_dynkin()) continue;
    const auto& bad = std::get<NotDynkin>(c.kind);
    std::string names;
    for (auto v : bad.vertices) {
      names += (names.empty() ? "" : ",") + finite.graph.vertices[v].label;
    }
    cm = {false, Witness{Witness::Kind::kNotDynkin, {},
                         to_string(bad.reason) + " at H-vertices " + names + ": " + bad.detail}};
    break;
  }
  r.finite_cm_type = cm;
  r.indec_cm_count = count_indec_cm(order);
  check_hierarchy(r);
  return r;
}

}  // namespace backstrom
