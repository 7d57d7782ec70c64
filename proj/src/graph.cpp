#include "enr/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace enr {

int CurveGraph::add_vertex(const std::string& name) {
  if (index_.count(name)) throw std::invalid_argument("add_vertex: duplicate " + name);
  int id = static_cast<int>(names_.size());
  names_.push_back(name);
  index_[name] = id;
  return id;
}

void CurveGraph::add_edge(const std::string& a, const std::string& b, int multiplicity) {
  int u = index_of(a), v = index_of(b);
  if (u == v) throw std::invalid_argument("add_edge: self-loop at " + a);
  if (multiplicity < 1) throw std::invalid_argument("add_edge: bad multiplicity");
  edges_[{std::min(u, v), std::max(u, v)}] = multiplicity;
}

void CurveGraph::assign_class(const std::string& name, const DivisorClass& cls) {
  classes_.insert_or_assign(index_of(name), cls);
}

int CurveGraph::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::invalid_argument("unknown vertex " + name);
  return it->second;
}

int CurveGraph::edge_multiplicity(int a, int b) const {
  auto it = edges_.find({std::min(a, b), std::max(a, b)});
  return it == edges_.end() ? 0 : it->second;
}

std::vector<int> CurveGraph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < vertex_count(); ++u)
    if (u != v && edge_multiplicity(u, v) > 0) out.push_back(u);
  return out;
}

bool CurveGraph::has_class(int v) const { return classes_.count(v) > 0; }

const DivisorClass& CurveGraph::class_of(int v) const {
  auto it = classes_.find(v);
  if (it == classes_.end())
    throw std::invalid_argument("class_of: no class for " + names_[v]);
  return it->second;
}

void CurveGraph::validate_classes() const {
  for (const auto& [v, cls] : classes_) {
    if (self_intersection(cls) != -2)
      throw std::invalid_argument("validate_classes: " + names_[v] + " has square != -2");
    for (const auto& [u, cls2] : classes_) {
      if (u <= v) continue;
      Integer expected(edge_multiplicity(u, v));
      if (intersect(cls, cls2) != expected)
        throw std::invalid_argument("validate_classes: pairing mismatch " + names_[v] +
                                    "." + names_[u]);
    }
  }
}

std::vector<int> tree_reduce(const CurveGraph& g, const std::vector<int>& support,
                             int target) {
  std::set<int> supp(support.begin(), support.end());
  if (supp.empty()) throw std::invalid_argument("tree_reduce: empty support");

  // The support must induce a tree.
  int edge_count = 0;
  for (int v : supp)
    for (int u : supp)
      if (u < v && g.edge_multiplicity(u, v) > 0) {
        if (g.edge_multiplicity(u, v) != 1)
          throw std::invalid_argument("tree_reduce: non-simple edge in support");
        ++edge_count;
      }
  if (edge_count != static_cast<int>(supp.size()) - 1)
    throw std::invalid_argument("tree_reduce: support is not a tree");
  {
    // Connectivity check.
    std::set<int> seen{*supp.begin()};
    std::vector<int> stack{*supp.begin()};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : supp)
        if (!seen.count(u) && g.edge_multiplicity(u, v) > 0) {
          seen.insert(u);
          stack.push_back(u);
        }
    }
    if (seen.size() != supp.size())
      throw std::invalid_argument("tree_reduce: support is not connected");
  }

  std::vector<int> word;
  // Reflecting in a terminal curve of the support removes it; the survivor
  // is transported afterwards. Lowest-index terminal goes first.
  while (supp.size() > 1) {
    int terminal = -1;
    for (int v : supp) {
      int deg = 0;
      for (int u : supp)
        if (u != v && g.edge_multiplicity(u, v) > 0) ++deg;
      if (deg == 1) { terminal = v; break; }
    }
    if (terminal < 0) throw std::logic_error("tree_reduce: no terminal vertex");
    word.push_back(terminal);
    supp.erase(terminal);
  }

  // Transport the remaining component to the target along the shortest path.
  int cur = *supp.begin();
  if (cur == target) return word;
  // BFS in the whole graph.
  std::vector<int> prev(g.vertex_count(), -1);
  std::vector<int> queue{cur};
  prev[cur] = cur;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (int u : g.neighbors(v))
      if (prev[u] < 0) {
        prev[u] = v;
        queue.push_back(u);
      }
  }
  if (prev[target] < 0) throw std::invalid_argument("tree_reduce: target unreachable");
  std::vector<int> path;
  for (int v = target; v != cur; v = prev[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  for (int next : path) {
    // Moving the class of `cur` to `next`: s_cur o s_next.
    word.push_back(next);
    word.push_back(cur);
    cur = next;
  }
  return word;
}

ReflectionWord lift_word(const CurveGraph& g, const std::vector<int>& word) {
  ReflectionWord w;
  for (int v : word) w.steps.push_back(g.class_of(v));
  return w;
}

GraphShape GraphShape::a_chain(int n) {
  GraphShape s;
  s.name = "A" + std::to_string(n);
  s.size = n;
  for (int i = 0; i + 1 < n; ++i) s.edges.push_back({i, i + 1});
  return s;
}

GraphShape GraphShape::kodaira_IV_star() {
  GraphShape s;
  s.name = "IV*";
  s.size = 7;
  // Vertex 0 central; arms (1,2), (3,4), (5,6) with 1,3,5 adjacent to 0.
  s.edges = {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}};
  return s;
}

std::optional<std::vector<std::vector<int>>> find_ade_config(
    const CurveGraph& g, const std::vector<GraphShape>& shapes) {
  for (const auto& s : shapes)
    if (s.size < 1) throw std::invalid_argument("find_ade_config: empty shape");
  std::vector<std::vector<int>> assignment(shapes.size());
  std::vector<int> used(g.vertex_count(), 0);

  // Multiplicity demanded between slot `a` of shape `sa` and slot `b` of
  // shape `sb`: 1 for shape edges, 0 otherwise (shapes are orthogonal).
  auto required = [&](size_t sa, int a, size_t sb, int b) -> int {
    if (sa != sb) return 0;
    for (const auto& [x, y] : shapes[sa].edges)
      if ((x == a && y == b) || (x == b && y == a)) return 1;
    return 0;
  };

  std::function<bool(size_t, int)> place = [&](size_t shape_idx, int slot) -> bool {
    if (shape_idx == shapes.size()) return true;
    if (slot == shapes[shape_idx].size) return place(shape_idx + 1, 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (size_t s = 0; s <= shape_idx && ok; ++s) {
        int upto = (s == shape_idx) ? slot : shapes[s].size;
        for (int t = 0; t < upto && ok; ++t)
          if (g.edge_multiplicity(v, assignment[s][t]) != required(shape_idx, slot, s, t))
            ok = false;
      }
      if (!ok) continue;
      used[v] = 1;
      assignment[shape_idx].push_back(v);
      if (place(shape_idx, slot + 1)) return true;
      assignment[shape_idx].pop_back();
      used[v] = 0;
    }
    return false;
  };

  if (place(0, 0)) return assignment;
  return std::nullopt;
}

}  // namespace enr
